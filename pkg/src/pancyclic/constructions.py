"""Explicit pancyclic graph families with few chords.

The five-chord family places 5 fixed chords on a 22-vertex base cycle and
stretches one designated segment (between base vertices 22 and 1) to x
edges, giving n = 21 + x vertices and n + 5 edges. Every instance has
cycles of all lengths in [3, 19] and [n - 17, n], so the family is
pancyclic exactly while those windows overlap, i.e. for n <= 37. Together
with the exhaustive nonexistence result for 4 chords at n >= 25, the family
is edge-minimal for 25 <= n <= 37.

Splicing one vertex into the Hamiltonian cycle of a pancyclic graph (the old
closing edge becomes a chord) adds 2 edges and preserves pancyclicity, which
pins the growth of m(n) to at most 2 per step.
"""

from __future__ import annotations

from .analysis import is_pancyclic
from .graph_core import ChordedCycle, make_graph

FIVE_CHORD_BASE = 22
FIVE_CHORD_CHORDS = ((1, 3), (2, 8), (4, 7), (5, 13), (9, 22))


def five_chord_construction(x: int) -> ChordedCycle:
    """The (21 + x)-vertex member of the five-chord family, x >= 1.

    Vertices 1..22 carry the chords; the x - 1 subdivision vertices
    23..(21 + x) sit on the Hamiltonian cycle between 22 and 1. Pancyclicity
    is a per-instance fact (verified for 23 <= n <= 37), not a promise of
    this constructor.
    """
    if x < 1:
        raise ValueError(f"segment must have at least 1 edge, got x={x}")
    return make_graph(FIVE_CHORD_BASE + (x - 1), FIVE_CHORD_CHORDS)


def five_chord_for_n(n: int) -> ChordedCycle:
    """Family member with n vertices (n >= 22)."""
    if n < FIVE_CHORD_BASE:
        raise ValueError(f"family starts at n={FIVE_CHORD_BASE}, got n={n}")
    return five_chord_construction(n - 21)


def extend_by_one(g: ChordedCycle) -> ChordedCycle:
    """Splice one vertex into the Hamiltonian cycle of a pancyclic graph.

    The new vertex n+1 joins v_n and v_1; the old cycle edge (1, n) is kept
    and becomes a chord. The result has n + 1 vertices, 2 more edges, and is
    pancyclic whenever g is (it inherits all cycles of g and gains the new
    Hamiltonian cycle). Rejects non-pancyclic input, for which the guarantee
    would not hold.
    """
    if not is_pancyclic(g):
        raise ValueError("one-vertex extension requires a pancyclic graph")
    return make_graph(g.n + 1, list(g.chords) + [(1, g.n)])


def minimal_pancyclic_14() -> ChordedCycle:
    """The 14-vertex, 17-edge pancyclic graph with an arc of length 6.

    Edge-minimal (m(14) = 17) and the standard witness that contracting an
    arc of length n/2 - 1 can destroy pancyclicity.
    """
    return make_graph(14, [(1, 13), (3, 14), (9, 14)])
