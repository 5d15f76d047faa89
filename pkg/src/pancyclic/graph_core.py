"""Chorded Hamiltonian cycles and elementary surgery on them.

Every graph in this package is presented as a Hamiltonian cycle on vertices
1..n (edges i - i+1 and n - 1) plus a set of chords. Vertices are 1-indexed
and all index arithmetic is modulo n on the residues 1..n. An *arc* is a
maximal segment of the Hamiltonian cycle whose interior vertices have degree
exactly 2; its length is its edge count, so the arc lengths of a graph always
sum to n.

All types here are immutable values and all operations are pure functions,
so they can be shared freely between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

Chord = tuple[int, int]
CanonicalForm = tuple[int, tuple[Chord, ...]]


class InvalidGraphError(ValueError):
    """Raised when a chord set does not describe a valid chorded cycle."""


def normalize_chord(u: int, v: int) -> Chord:
    return (u, v) if u < v else (v, u)


def is_cycle_edge(u: int, v: int, n: int) -> bool:
    """True if {u, v} is an edge of the Hamiltonian cycle on 1..n."""
    u, v = normalize_chord(u, v)
    return v - u == 1 or (u == 1 and v == n)


@dataclass(frozen=True)
class ChordedCycle:
    """A Hamiltonian cycle on n vertices plus k chords (n + k edges total).

    ``chords`` is a lexicographically sorted tuple of normalized pairs
    (u, v) with u < v. Each chord must have cyclic distance >= 2, i.e. no
    chord duplicates a Hamiltonian-cycle edge, and chords are distinct.
    """

    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self):
        if self.n < 3:
            raise InvalidGraphError(f"need at least 3 vertices, got n={self.n}")
        seen = set()
        for ch in self.chords:
            u, v = ch
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraphError(f"chord {ch} out of range 1..{self.n}")
            if u == v:
                raise InvalidGraphError(f"chord {ch} is a loop")
            if u > v:
                raise InvalidGraphError(f"chord {ch} not normalized (u < v required)")
            if is_cycle_edge(u, v, self.n):
                raise InvalidGraphError(f"chord {ch} coincides with a cycle edge")
            if ch in seen:
                raise InvalidGraphError(f"duplicate chord {ch}")
            seen.add(ch)
        if list(self.chords) != sorted(self.chords):
            raise InvalidGraphError("chords not sorted")

    @property
    def k(self) -> int:
        return len(self.chords)

    @property
    def edge_count(self) -> int:
        return self.n + len(self.chords)

    def cycle_edges(self) -> list[Chord]:
        n = self.n
        return [(i, i + 1) for i in range(1, n)] + [(1, n)]

    def all_edges(self) -> list[Chord]:
        return self.cycle_edges() + list(self.chords)

    def degree(self, v: int) -> int:
        return 2 + sum(1 for ch in self.chords if v in ch)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(1, self.n + 1)), default=2)

    def chord_endpoints(self) -> list[int]:
        """Distinct chord endpoints in increasing order."""
        return sorted({x for ch in self.chords for x in ch})

    def with_chord(self, u: int, v: int) -> "ChordedCycle":
        return make_graph(self.n, list(self.chords) + [(u, v)])

    def to_json_dict(self) -> dict:
        return {"n": self.n, "chords": [list(ch) for ch in self.chords]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ChordedCycle":
        try:
            n = doc["n"]
            raw = doc["chords"]
        except (KeyError, TypeError) as exc:
            raise InvalidGraphError(f"graph document missing field: {exc}") from exc
        if not isinstance(n, int):
            raise InvalidGraphError(f"vertex count must be an integer, got {n!r}")
        return make_graph(n, raw)

    def __str__(self) -> str:
        return f"C{self.n}+{list(self.chords)}"


def make_graph(n: int, chords) -> ChordedCycle:
    """Validate and normalize a chord list into a ChordedCycle.

    Accepts chord pairs in either orientation; rejects loops, duplicates,
    out-of-range vertices and chords coinciding with cycle edges.
    """
    normalized = []
    for pair in chords:
        try:
            u, v = pair
        except (TypeError, ValueError) as exc:
            raise InvalidGraphError(f"chord {pair!r} is not a vertex pair") from exc
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InvalidGraphError(f"chord {pair!r} has non-integer endpoints")
        normalized.append(normalize_chord(u, v))
    if len(set(normalized)) != len(normalized):
        dup = next(ch for ch in normalized if normalized.count(ch) > 1)
        raise InvalidGraphError(f"duplicate chord {dup}")
    return ChordedCycle(n, tuple(sorted(normalized)))


@dataclass(frozen=True)
class Arc:
    """A maximal degree-2 segment of the Hamiltonian cycle.

    ``start`` and ``end`` are the boundary vertices (chord endpoints) and
    ``length`` counts the cycle edges from start to end clockwise. The
    chordless graph is represented by the single degenerate full-circle
    arc with start == end and length n.
    """

    start: int
    end: int
    length: int


def arcs_of(g: ChordedCycle) -> list[Arc]:
    """Arcs of g, clockwise from the lowest-indexed chord endpoint.

    With all 2k chord endpoints distinct this returns exactly 2k arcs; when
    endpoints are shared, only the nondegenerate segments between consecutive
    distinct endpoints are returned. Arc lengths always sum to n.
    """
    eps = g.chord_endpoints()
    if not eps:
        return [Arc(1, 1, g.n)]
    arcs = []
    for i, s in enumerate(eps):
        e = eps[i + 1] if i + 1 < len(eps) else eps[0]
        length = e - s if e > s else g.n - s + e
        arcs.append(Arc(s, e, length))
    return arcs


def is_crossing(p: Chord, q: Chord, n: int) -> bool:
    """True iff the four endpoints are distinct and interleave on the cycle."""
    a, b = normalize_chord(*p)
    c, d = normalize_chord(*q)
    if len({a, b, c, d}) < 4:
        return False
    c_inside = a < c < b
    d_inside = a < d < b
    return c_inside != d_inside


def dihedral_image(g: ChordedCycle, shift: int, reflected: bool = False) -> ChordedCycle:
    """Relabel g by a rotation (and optional reflection) of the cycle.

    The vertex map is v -> ((v - 1 + shift) mod n) + 1, composed with the
    reflection v -> ((shift - (v - 1)) mod n) + 1 when requested. The 2n
    choices of (shift, reflected) enumerate the full dihedral group.
    """
    n = g.n
    if reflected:
        mapped = [normalize_chord((shift - (u - 1)) % n + 1, (shift - (v - 1)) % n + 1)
                  for u, v in g.chords]
    else:
        mapped = [normalize_chord((u - 1 + shift) % n + 1, (v - 1 + shift) % n + 1)
                  for u, v in g.chords]
    return ChordedCycle(n, tuple(sorted(mapped)))


def canonical_form(g: ChordedCycle) -> CanonicalForm:
    """Minimal chord tuple over all 2n rotations/reflections, tagged with n.

    Two chorded cycles have equal canonical forms iff one is a rotation or
    reflection of the other. Brute force over all 2n maps; k is small
    everywhere this is used, so no shortcuts are needed.
    """
    best = g.chords
    for shift in range(g.n):
        for reflected in (False, True):
            cand = dihedral_image(g, shift, reflected).chords
            if cand < best:
                best = cand
    return (g.n, best)


def is_canonical(g: ChordedCycle) -> bool:
    return canonical_form(g)[1] == g.chords


def delete_chord(g: ChordedCycle, p: Chord) -> ChordedCycle:
    """Remove one chord; the vertex set and cycle are unchanged."""
    p = normalize_chord(*p)
    if p not in g.chords:
        raise ValueError(f"chord {p} not in graph")
    return ChordedCycle(g.n, tuple(ch for ch in g.chords if ch != p))


def contract_arc(g: ChordedCycle, arc: Arc) -> ChordedCycle:
    """Contract a single edge of the given arc, yielding a graph on n-1 vertices.

    The contracted edge is the first edge of the arc (start to its cyclic
    successor). For arcs of length >= 2 this just removes a degree-2 interior
    vertex. For length-1 arcs the two boundary vertices are merged, which is
    rejected if it would create a duplicate chord or a chord parallel to a
    cycle edge (the contraction then has no simple-graph representation).
    """
    if arc.length < 1:
        raise ValueError("cannot contract a degenerate (length-0) arc")
    if arc not in arcs_of(g):
        raise ValueError(f"{arc} is not an arc of {g}")
    if g.n == 3:
        raise ValueError("cannot contract below 3 vertices")
    n = g.n
    gone = arc.start % n + 1  # cyclic successor of start; merged into start
    merged_chords = []
    for u, v in g.chords:
        u2 = arc.start if u == gone else u
        v2 = arc.start if v == gone else v
        merged_chords.append(normalize_chord(u2, v2))

    def relabel(v: int) -> int:
        return v - 1 if v > gone else v

    new_chords = sorted(normalize_chord(relabel(u), relabel(v)) for u, v in merged_chords)
    try:
        return ChordedCycle(n - 1, tuple(new_chords))
    except InvalidGraphError as exc:
        raise ValueError(
            f"contracting {arc} degenerates: {exc}") from exc


def all_valid_chords(n: int) -> list[Chord]:
    """All chords of C_n (pairs at cyclic distance >= 2), in lexicographic order."""
    return [(u, v) for u, v in combinations(range(1, n + 1), 2)
            if not is_cycle_edge(u, v, n)]
