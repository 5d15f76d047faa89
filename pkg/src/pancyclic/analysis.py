"""Pancyclicity predicates and structural reductions of pancyclic graphs.

Three ways of shrinking a pancyclic graph while keeping it pancyclic are
implemented, each verified computationally on its output:

* deleting one chord of an isolated parallel crossing pair (valid when the
  graph has more than one 4-cycle);
* contracting an edge of a long arc: length >= (n-1)/2 when no chord joins
  the arc's ends, length >= (n+2)/3 when one does, both for n > 6;
* the half-arc dichotomy for even n and an arc of length n/2 - 1 whose ends
  no chord joins: either the contraction is pancyclic, or deleting the arc's
  interior leaves a Hamiltonian graph on n/2 + 2 vertices whose spectrum
  misses exactly the length n/2 + 1, and which a single added chord can
  complete. The no-end-chord condition is essential, not cosmetic: with a
  chord joining the ends, a cycle through the arc of length |A| + 1 exists
  and the dichotomy genuinely fails (C_8 with chords (1,3), (1,6) and the
  arc from 6 to 1 leaves a subgraph missing length 4 instead of 5).

The inequality checks use exact integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycle_enum import CycleSpectrum, length_tally, spectrum
from .graph_core import (
    Arc,
    Chord,
    ChordedCycle,
    all_valid_chords,
    arcs_of,
    contract_arc,
    delete_chord,
    is_crossing,
    normalize_chord,
)


def is_pancyclic(g: ChordedCycle) -> bool:
    """True iff g has a cycle of every length from 3 to n."""
    return spectrum(g).is_pancyclic()


def missing_lengths(g: ChordedCycle) -> set[int]:
    """Cycle lengths in 3..n that g lacks; empty iff pancyclic."""
    s = spectrum(g)
    return {l for l in range(3, g.n + 1) if not s.has_length(l)}


@dataclass(frozen=True)
class ReductionReport:
    """A verified size reduction: what was removed and what remained.

    kind is one of "delete_parallel_chord", "contract_unchorded_arc",
    "contract_chorded_arc". The witness is the chord pair or arc used.
    """

    kind: str
    witness: object
    result_graph: ChordedCycle
    result_pancyclic: bool


def parallel_chord_reduction(g: ChordedCycle) -> ReductionReport | None:
    """Drop one chord of an isolated parallel pair, if the hypotheses hold.

    Looks for chords p = (i, j) and q = (i+1, j+1) such that q is the only
    chord crossing p and vice versa, in a pancyclic graph with more than one
    cycle of length 4. Deleting p then keeps the graph pancyclic: every
    cycle through p can be rerouted through q at equal length. The returned
    report carries the verification of the smaller graph.
    """
    if not is_pancyclic(g):
        raise ValueError("parallel-chord reduction requires a pancyclic graph")
    n = g.n
    crossings = {p: {q for q in g.chords if is_crossing(p, q, n)} for p in g.chords}
    has_two_4cycles: bool | None = None
    for p in g.chords:
        q = normalize_chord(p[0] % n + 1, p[1] % n + 1)
        if q == p or q not in g.chords:
            continue
        if crossings[p] != {q} or crossings[q] != {p}:
            continue
        if has_two_4cycles is None:
            has_two_4cycles = length_tally(g)[4] >= 2
        if not has_two_4cycles:
            return None
        reduced = delete_chord(g, p)
        return ReductionReport(
            kind="delete_parallel_chord",
            witness=(p, q),
            result_graph=reduced,
            result_pancyclic=is_pancyclic(reduced),
        )
    return None


def contractible_arcs(g: ChordedCycle) -> list[tuple[Arc, str]]:
    """Arcs whose contraction provably preserves pancyclicity (n > 6).

    Returns (arc, case) pairs: case "unchorded" for arcs with no chord
    joining their two ends and 2|A| >= n - 1, case "chorded" for arcs whose
    ends a chord joins and 3|A| >= n + 2. For every returned arc,
    contract_arc(g, arc) is pancyclic.
    """
    if g.n <= 6:
        raise ValueError(f"arc-contraction criterion needs n > 6, got n={g.n}")
    if not is_pancyclic(g):
        raise ValueError("arc-contraction criterion requires a pancyclic graph")
    n = g.n
    found = []
    for arc in arcs_of(g):
        end_chord = normalize_chord(arc.start, arc.end) in g.chords
        if not end_chord and 2 * arc.length >= n - 1:
            found.append((arc, "unchorded"))
        elif end_chord and 3 * arc.length >= n + 2:
            found.append((arc, "chorded"))
    return found


@dataclass(frozen=True)
class HalfArcDichotomy:
    """Outcome of analyzing an arc of length n/2 - 1 in a pancyclic graph.

    case "contracted": ``graph`` is the (verified pancyclic) contraction.
    case "subgraph": ``graph`` is the graph left after deleting the arc's
    interior vertices and edges, re-presented on its own Hamiltonian cycle;
    its spectrum is exactly {3, ..., n/2 + 2} minus {n/2 + 1}, the missing
    length recorded in ``missing_length``. ``subgraph_vertices`` lists the
    surviving vertices under the original labels.
    """

    case: str
    graph: ChordedCycle
    graph_spectrum: CycleSpectrum
    removed_arc: Arc
    subgraph_vertices: tuple[int, ...] | None = None
    missing_length: int | None = None


def _find_hamiltonian_presentation(vertices: list[int], edges: set[Chord]) -> ChordedCycle:
    """Re-present an abstract graph as a chorded cycle along a Hamiltonian cycle.

    Deterministic: depth-first search from the smallest vertex with sorted
    adjacency, keeping the first Hamiltonian cycle whose second vertex is
    smaller than its last. Raises if the graph is not Hamiltonian.
    """
    order = sorted(vertices)
    adjacency: dict[int, list[int]] = {v: [] for v in order}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    for v in adjacency:
        adjacency[v].sort()
    m = len(order)
    root = order[0]

    def extend(path: list[int], visited: set[int]) -> list[int] | None:
        u = path[-1]
        if len(path) == m:
            if root in adjacency[u] and path[1] < path[-1]:
                return path
            return None
        for w in adjacency[u]:
            if w not in visited:
                visited.add(w)
                path.append(w)
                result = extend(path, visited)
                if result is not None:
                    return result
                path.pop()
                visited.remove(w)
        return None

    cycle = extend([root], {root})
    if cycle is None:
        raise ValueError("graph is not Hamiltonian; cannot re-present as a chorded cycle")
    relabel = {v: i + 1 for i, v in enumerate(cycle)}
    cycle_pairs = {normalize_chord(cycle[i], cycle[(i + 1) % m]) for i in range(m)}
    chords = sorted(normalize_chord(relabel[u], relabel[v])
                    for u, v in edges if normalize_chord(u, v) not in cycle_pairs)
    return ChordedCycle(m, tuple(chords))


def half_arc_dichotomy(g: ChordedCycle, arc: Arc) -> HalfArcDichotomy:
    """Analyze a pancyclic graph with even n along an arc of length n/2 - 1.

    The arc's ends must not be joined by a chord; a cycle of length |A| + 1
    through the arc would otherwise break the dichotomy (see module notes).
    """
    if g.n % 2 != 0:
        raise ValueError(f"dichotomy needs even n, got n={g.n}")
    if arc.length != g.n // 2 - 1:
        raise ValueError(
            f"arc length must be n/2 - 1 = {g.n // 2 - 1}, got {arc.length}")
    if arc not in arcs_of(g):
        raise ValueError(f"{arc} is not an arc of {g}")
    if normalize_chord(arc.start, arc.end) in g.chords:
        raise ValueError(
            f"chord {normalize_chord(arc.start, arc.end)} joins the arc ends; "
            "the dichotomy needs unchorded arc ends")
    if not is_pancyclic(g):
        raise ValueError("dichotomy requires a pancyclic graph")

    contracted = contract_arc(g, arc)
    if is_pancyclic(contracted):
        return HalfArcDichotomy(
            case="contracted",
            graph=contracted,
            graph_spectrum=spectrum(contracted),
            removed_arc=arc,
        )

    # drop the arc's interior vertices and all its edges, keep the ends
    n = g.n
    interior = set()
    v = arc.start % n + 1
    while v != arc.end:
        interior.add(v)
        v = v % n + 1
    survivors = [v for v in range(1, n + 1) if v not in interior]
    kept_edges = {normalize_chord(u, v) for u, v in g.all_edges()
                  if u not in interior and v not in interior}
    if arc.length == 1:
        # no interior: the arc's single cycle edge survives the filter above
        kept_edges.discard(normalize_chord(arc.start, arc.end))
    sub = _find_hamiltonian_presentation(survivors, kept_edges)
    sub_spectrum = spectrum(sub)
    expected = set(range(3, n // 2 + 3)) - {n // 2 + 1}
    if set(sub_spectrum.lengths) != expected:
        raise AssertionError(
            f"half-arc subgraph spectrum {sorted(sub_spectrum.lengths)} differs from "
            f"expected {sorted(expected)}")
    return HalfArcDichotomy(
        case="subgraph",
        graph=sub,
        graph_spectrum=sub_spectrum,
        removed_arc=arc,
        subgraph_vertices=tuple(survivors),
        missing_length=n // 2 + 1,
    )


def complete_with_single_chord(g: ChordedCycle) -> tuple[ChordedCycle, Chord | None] | None:
    """Make a near-pancyclic graph pancyclic by adding one chord, if possible.

    Intended for the "subgraph" branch of the half-arc dichotomy, where the
    input misses a single cycle length. Scans all admissible chords in
    lexicographic order and returns (completed graph, added chord) for the
    first that works, (g, None) if g is already pancyclic, or None when no
    single chord suffices.
    """
    if is_pancyclic(g):
        return g, None
    existing = set(g.chords)
    for ch in all_valid_chords(g.n):
        if ch in existing:
            continue
        candidate = g.with_chord(*ch)
        if is_pancyclic(candidate):
            return candidate, ch
    return None
