"""Exact cycle spectra of chorded Hamiltonian cycles.

A cycle in a chorded cycle graph either uses an arc entirely or not at all:
interior arc vertices have degree 2, so a cycle entering an arc must traverse
it. Contracting every arc to a single weighted edge therefore gives a small
multigraph (at most 2k nodes and 3k edges) whose simple cycles correspond
bijectively to the cycles of the original graph, with original cycle length
equal to the sum of edge weights. Enumerating simple cycles of that
multigraph by rooted backtracking is exact and fast: with k chords there are
at most 2^(k+1) - 1 cycles in total, so the output is tiny even when the
search below visits millions of candidate graphs.

Two independent cross-checks are provided: a brute-force depth-first cycle
enumeration on the raw vertex graph (the testing oracle), and the classical
alternating-arc candidate construction which, for any chord subset K with
distinct endpoints, produces the at-most-2 cycles using exactly the chords
in K.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph_core import Chord, ChordedCycle, normalize_chord

BRUTE_FORCE_MAX_N = 20


def max_cycle_bound(k: int) -> int:
    """Upper bound 2^(k+1) - 1 on the cycle count of a Hamiltonian graph with k chords."""
    if k < 0:
        raise ValueError(f"chord count must be nonnegative, got {k}")
    return 2 ** (k + 1) - 1


@dataclass(frozen=True)
class CycleSpectrum:
    """Achievable cycle lengths plus the total number of distinct cycles.

    Lengths are stored as a bitmask over 0..n so pancyclicity is a single
    mask comparison; ``lengths`` exposes them as a frozenset.
    """

    n: int
    length_mask: int
    cycle_count: int

    @property
    def lengths(self) -> frozenset[int]:
        return frozenset(l for l in range(3, self.n + 1) if self.length_mask >> l & 1)

    def has_length(self, l: int) -> bool:
        return bool(self.length_mask >> l & 1) if 0 <= l <= self.n else False

    def is_pancyclic(self) -> bool:
        return self.length_mask & _full_mask(self.n) == _full_mask(self.n)


def _full_mask(n: int) -> int:
    """Bits 3..n set."""
    return ((1 << (n + 1)) - 1) & ~7


@dataclass(frozen=True)
class ReducedMultigraph:
    """Chord endpoints as nodes; arcs and chords as weighted parallel edges.

    ``edges`` entries are (u, v, weight, kind) on original vertex labels,
    kind "arc" or "chord". Arc edges traverse the nodes in cycle order and
    their weights sum to n; chord edges have weight 1. Parallel edges are
    expected (an arc and a chord may join the same node pair); self-loops
    never occur.
    """

    n: int
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int, str], ...]

    def cycle_weights(self) -> list[int]:
        """Total weights of all simple cycles, one entry per cycle."""
        index = {v: i for i, v in enumerate(self.nodes)}
        edge_list = [(index[u], index[v], w) for u, v, w, _kind in self.edges]
        return _simple_cycle_weights(len(self.nodes), edge_list)


def reduce_graph(g: ChordedCycle) -> ReducedMultigraph:
    """Contract every arc of g to a single weighted edge between chord endpoints."""
    if g.k == 0:
        raise ValueError("chordless cycle has no reduced multigraph; its spectrum is {n}")
    eps = g.chord_endpoints()
    edges = []
    for i, s in enumerate(eps):
        e = eps[i + 1] if i + 1 < len(eps) else eps[0]
        length = e - s if e > s else g.n - s + e
        edges.append((s, e, length, "arc"))
    for u, v in g.chords:
        edges.append((u, v, 1, "chord"))
    return ReducedMultigraph(g.n, tuple(eps), tuple(edges))


def _multigraph_adjacency(n: int, chords) -> tuple[int, list[list[tuple[int, int, int]]]]:
    """Adjacency of the reduced multigraph; entries are (edge_id, neighbor, weight)."""
    eps = sorted({x for ch in chords for x in ch})
    m = len(eps)
    index = {v: i for i, v in enumerate(eps)}
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    eid = 0
    for i in range(m - 1):
        w = eps[i + 1] - eps[i]
        adj[i].append((eid, i + 1, w))
        adj[i + 1].append((eid, i, w))
        eid += 1
    w = n - eps[-1] + eps[0]
    adj[m - 1].append((eid, 0, w))
    adj[0].append((eid, m - 1, w))
    eid += 1
    for u, v in chords:
        a, b = index[u], index[v]
        adj[a].append((eid, b, 1))
        adj[b].append((eid, a, 1))
        eid += 1
    return m, adj


def _simple_cycle_weights(num_nodes: int, edge_list) -> list[int]:
    """Weights of all simple cycles of an undirected multigraph.

    Each cycle is reported once: it is anchored at its smallest node and the
    two traversal directions are deduplicated by requiring the first edge id
    to be smaller than the closing edge id. Parallel edges form valid
    2-cycles; a single edge is never a cycle.
    """
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(num_nodes)]
    for eid, (a, b, w) in enumerate(edge_list):
        adj[a].append((eid, b, w))
        adj[b].append((eid, a, w))
    out: list[int] = []

    def dfs(r: int, u: int, vis: int, wsum: int, e0: int) -> None:
        for eid, v, w in adj[u]:
            if v == r:
                if eid > e0:
                    out.append(wsum + w)
            elif v > r and not vis & (1 << v):
                dfs(r, v, vis | (1 << v), wsum + w, e0)

    for r in range(num_nodes - 1):
        for e0, v0, w0 in adj[r]:
            if v0 > r:
                dfs(r, v0, (1 << r) | (1 << v0), w0, e0)
    return out


def spectrum_mask_count(n: int, chords) -> tuple[int, int]:
    """(length bitmask, exact cycle count) for the cycle C_n plus the given chords."""
    if not chords:
        return 1 << n, 1
    m, adj = _multigraph_adjacency(n, chords)
    mask = 0
    count = 0

    def dfs(r: int, u: int, vis: int, wsum: int, e0: int) -> None:
        nonlocal mask, count
        for eid, v, w in adj[u]:
            if v == r:
                if eid > e0:
                    mask |= 1 << (wsum + w)
                    count += 1
            elif v > r and not vis & (1 << v):
                dfs(r, v, vis | (1 << v), wsum + w, e0)

    for r in range(m - 1):
        for e0, v0, w0 in adj[r]:
            if v0 > r:
                dfs(r, v0, (1 << r) | (1 << v0), w0, e0)
    return mask, count


def is_pancyclic_chords(n: int, chords) -> bool:
    """Early-accepting pancyclicity test; the search hot path.

    Enumerates the same cycles as spectrum_mask_count but returns as soon as
    every length 3..n has been seen. Rejection still requires the full
    enumeration, so the result is exact.
    """
    if not chords:
        return n == 3
    target = _full_mask(n)
    m, adj = _multigraph_adjacency(n, chords)
    mask = 0

    def dfs(r: int, u: int, vis: int, wsum: int, e0: int) -> None:
        nonlocal mask
        for eid, v, w in adj[u]:
            if v == r:
                if eid > e0:
                    mask |= 1 << (wsum + w)
            elif v > r and not vis & (1 << v):
                dfs(r, v, vis | (1 << v), wsum + w, e0)

    for r in range(m - 1):
        for e0, v0, w0 in adj[r]:
            if v0 > r:
                dfs(r, v0, (1 << r) | (1 << v0), w0, e0)
        if mask & target == target:
            return True
    return mask & target == target


def length_tally(g: ChordedCycle) -> Counter:
    """Number of cycles of each length, keyed by length."""
    if g.k == 0:
        return Counter({g.n: 1})
    m, adj = _multigraph_adjacency(g.n, g.chords)
    tally: Counter = Counter()

    def dfs(r: int, u: int, vis: int, wsum: int, e0: int) -> None:
        for eid, v, w in adj[u]:
            if v == r:
                if eid > e0:
                    tally[wsum + w] += 1
            elif v > r and not vis & (1 << v):
                dfs(r, v, vis | (1 << v), wsum + w, e0)

    for r in range(m - 1):
        for e0, v0, w0 in adj[r]:
            if v0 > r:
                dfs(r, v0, (1 << r) | (1 << v0), w0, e0)
    return tally


def count_cycles_of_length(g: ChordedCycle, length: int) -> int:
    return length_tally(g)[length]


def spectrum(g: ChordedCycle) -> CycleSpectrum:
    """Exact cycle spectrum of g via the reduced multigraph."""
    mask, count = spectrum_mask_count(g.n, g.chords)
    return CycleSpectrum(g.n, mask, count)


def brute_force_spectrum(g: ChordedCycle) -> CycleSpectrum:
    """Testing oracle: enumerate all simple cycles on the raw vertex graph.

    Rooted depth-first search anchored at each cycle's smallest vertex,
    independent of the reduced-multigraph method. Guarded to n <= 20.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={g.n}")
    adjacency: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for u, v in g.all_edges():
        adjacency[u].append(v)
        adjacency[v].append(u)
    for v in adjacency:
        adjacency[v].sort()
    mask = 0
    count = 0

    def dfs(root: int, u: int, visited: int, length: int, second: int) -> None:
        nonlocal mask, count
        for w in adjacency[u]:
            if w == root:
                if length >= 3 and second < u:
                    mask |= 1 << length
                    count += 1
            elif w > root and not visited & (1 << w):
                dfs(root, w, visited | (1 << w), length + 1, second)

    for root in range(1, g.n + 1):
        for w in adjacency[root]:
            if w > root:
                dfs(root, w, (1 << root) | (1 << w), 2, w)
    return CycleSpectrum(g.n, mask, count)


def _segment_edges(s: int, e: int, n: int) -> list[Chord]:
    """Cycle edges of the clockwise segment from s to e."""
    edges = []
    v = s
    while v != e:
        nxt = v % n + 1
        edges.append(normalize_chord(v, nxt))
        v = nxt
    return edges


def _is_single_cycle(edges: frozenset[Chord]) -> bool:
    degree: Counter = Counter()
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    if any(d != 2 for d in degree.values()):
        return False
    # connected and 2-regular on the support means a single cycle
    start = next(iter(degree))
    seen = {start}
    frontier = [start]
    incident: dict[int, list[Chord]] = {}
    for u, v in edges:
        incident.setdefault(u, []).append((u, v))
        incident.setdefault(v, []).append((u, v))
    while frontier:
        x = frontier.pop()
        for u, v in incident[x]:
            y = v if x == u else u
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(degree)


def shi_candidates(g: ChordedCycle, chord_subset) -> list[frozenset[Chord]]:
    """The at-most-2 cycles of g using exactly the given chords.

    For a chord subset K with all endpoints distinct, the only cycles through
    all of K and no other chord are K plus the even-indexed arcs of C_n + K,
    and K plus the odd-indexed arcs (each candidate kept only if its edge set
    really is one cycle). Requires all 2k chord endpoints of g to be
    distinct; shared endpoints are handled by the multigraph enumeration
    instead.
    """
    k_set = {normalize_chord(*ch) for ch in chord_subset}
    if not k_set <= set(g.chords):
        raise ValueError("chord subset contains chords not in the graph")
    if len(g.chord_endpoints()) != 2 * g.k:
        raise ValueError("shared chord endpoints: alternating-arc candidates undefined")
    if not k_set:
        return [frozenset(g.cycle_edges())]
    eps = sorted({x for ch in k_set for x in ch})
    segments = []
    for i, s in enumerate(eps):
        e = eps[i + 1] if i + 1 < len(eps) else eps[0]
        segments.append(_segment_edges(s, e, g.n))
    candidates = []
    for parity in (0, 1):
        edges = set(k_set)
        for i in range(parity, len(segments), 2):
            edges.update(segments[i])
        candidate = frozenset(edges)
        if _is_single_cycle(candidate):
            candidates.append(candidate)
    return candidates
