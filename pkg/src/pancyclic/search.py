"""Exhaustive symmetry-pruned search for minimum pancyclic chord counts.

For each n the search finds the smallest k such that some set of k chords on
C_n gives a pancyclic graph, certifying minimality by exhausting every
smaller k (levels below the counting lower bound are excluded by that
bound). Chord sets are enumerated one representative per orbit of the
dihedral group of the cycle (2n maps): representatives are the
lexicographically smallest labelings of their orbits, generated bottom-up by
orderly extension, which is sound because removing the largest chord of a
canonical set leaves a canonical set.

Two structural facts make the canonicality test cheap. All dihedral maps
preserve chord gaps, so a canonical set's first chord is (1, 1 + g) where g
is the minimum gap over its chords; extensions by smaller-gap chords can be
discarded wholesale. And only the handful of maps sending some minimum-gap
chord onto (1, 1 + g) can produce a lexicographically smaller image, so only
those need comparing.

The stream partitions into independent shards keyed by the first chord's
gap class. Shards are processed in ascending order and each stops at its own
first witness, so results (minimal k, lexicographically smallest witness,
number of candidates examined) are identical for any worker count. Per-shard
results are appended to a plain-text journal so interrupted long runs
resume where they left off.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Iterator

from .bounds import bondy_lower, max_degree_feasible
from .cycle_enum import is_pancyclic_chords
from .graph_core import Chord, ChordedCycle, all_valid_chords


class SearchBudgetExceeded(RuntimeError):
    """The time budget ran out before the level was exhausted."""


class ChordCeilingReached(RuntimeError):
    """No witness found up to the configured maximum chord count."""


class PruneSoundnessError(AssertionError):
    """Validation mode found a pancyclic candidate that a prune had skipped."""


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exhaustive search.

    degree_prune skips candidates whose maximum degree is infeasible by the
    cycle-counting criterion (off by default; it rarely binds for k <= 5).
    validate re-tests every pruned candidate and fails loudly on any
    violation. start_at_lower_bound begins each search at the counting lower
    bound's chord count instead of 0. outdir (or the PANCYC_OUTDIR
    environment variable) enables journaling.
    """

    max_k: int = 6
    jobs: int = 1
    degree_prune: bool = False
    validate: bool = False
    start_at_lower_bound: bool = True
    outdir: str | None = None
    budget_seconds: float | None = None


@dataclass(frozen=True)
class SearchResult:
    """Outcome of find_min_chords: m(n) = n + k_min with a canonical witness.

    ``witness`` is the lexicographically smallest canonical pancyclic chord
    set at k_min; ``explored`` counts the canonical sets examined up to and
    including the witness (all of them, for the exhausted levels below).
    Both are independent of the worker count.
    """

    n: int
    k_min: int
    m: int
    witness: ChordedCycle
    explored: int
    wall_time: float

    def to_json_dict(self) -> dict:
        # wall_time intentionally omitted: the JSON result is byte-stable
        # across runs and worker counts
        return {
            "n": self.n,
            "k": self.k_min,
            "m": self.m,
            "witness": self.witness.to_json_dict(),
            "explored": self.explored,
        }


@dataclass(frozen=True)
class SearchFailure:
    n: int
    reason: str

    def to_json_dict(self) -> dict:
        return {"n": self.n, "error": self.reason}


@dataclass(frozen=True)
class ExhaustionCertificate:
    """Result of enumerating every canonical k-chord set on n vertices.

    ``complete`` means the claim was resolved: either every set was examined
    (counterexample None) or a pancyclic counterexample ended the run early.
    An interrupted budget leaves complete False with the partial count.
    """

    n: int
    k: int
    examined: int
    pruned: int
    complete: bool
    counterexample: ChordedCycle | None

    @property
    def holds(self) -> bool:
        """True iff the nonexistence claim is certified."""
        return self.complete and self.counterexample is None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "examined": self.examined,
            "pruned": self.pruned,
            "complete": self.complete,
            "pancyclic_found": self.counterexample is not None,
            "counterexample": (self.counterexample.to_json_dict()
                               if self.counterexample else None),
        }


# ---------------------------------------------------------------------------
# canonical chord-set enumeration


@dataclass(frozen=True)
class ChordSystem:
    """Precomputed dihedral action on the chords of C_n.

    ``tables[m][cid]`` is the id of chord cid under map m; ``anchors[cid]``
    lists the maps sending cid onto (1, 1 + mingap(cid)), the only maps that
    can beat a candidate whose first chord has that gap.
    """

    n: int
    pairs: tuple[Chord, ...]
    mingap: tuple[int, ...]
    tables: tuple[tuple[int, ...], ...]
    anchors: tuple[tuple[int, ...], ...]
    shards: tuple[int, ...]  # chord ids (1, x), one per gap class


@lru_cache(maxsize=64)
def chord_system(n: int) -> ChordSystem:
    pairs = tuple(all_valid_chords(n))
    id_of = {p: i for i, p in enumerate(pairs)}
    mingap = tuple(min(v - u, n - (v - u)) for u, v in pairs)
    tables = []
    for shift in range(n):
        for refl in (False, True):
            row = []
            for u, v in pairs:
                if refl:
                    a = (shift - (u - 1)) % n + 1
                    b = (shift - (v - 1)) % n + 1
                else:
                    a = (u - 1 + shift) % n + 1
                    b = (v - 1 + shift) % n + 1
                row.append(id_of[(a, b) if a < b else (b, a)])
            tables.append(tuple(row))
    anchors = []
    for cid in range(len(pairs)):
        target = id_of[(1, 1 + mingap[cid])]
        anchors.append(tuple(m for m in range(len(tables)) if tables[m][cid] == target))
    shards = tuple(id_of[(1, x)] for x in range(3, n // 2 + 2))
    return ChordSystem(n, pairs, mingap, tuple(tables), tuple(anchors), shards)


def _iter_shard(sys_: ChordSystem, k: int, first_id: int) -> Iterator[tuple[int, ...]]:
    """Canonical k-sets of chord ids with smallest chord first_id, in lex order."""
    mingap = sys_.mingap
    tables = sys_.tables
    anchors = sys_.anchors
    g1 = mingap[first_id]
    allowed = [c for c in range(first_id + 1, len(sys_.pairs)) if mingap[c] >= g1]

    def canonical(s: list[int]) -> bool:
        for c in s:
            if mingap[c] == g1:
                for m in anchors[c]:
                    t = tables[m]
                    if sorted([t[d] for d in s]) < s:
                        return False
        return True

    def rec(s: list[int], start: int) -> Iterator[tuple[int, ...]]:
        if len(s) == k:
            yield tuple(s)
            return
        for i in range(start, len(allowed)):
            s.append(allowed[i])
            if canonical(s):
                yield from rec(s, i + 1)
            s.pop()

    yield from rec([first_id], 0)


def enumerate_canonical_chord_sets(n: int, k: int) -> Iterator[ChordedCycle]:
    """One representative per dihedral orbit of k-chord sets, in lex order."""
    if n < 3 or k < 0:
        raise ValueError(f"need n >= 3 and k >= 0, got n={n}, k={k}")
    if k == 0:
        yield ChordedCycle(n, ())
        return
    sys_ = chord_system(n)
    for fid in sys_.shards:
        for s in _iter_shard(sys_, k, fid):
            yield ChordedCycle(n, tuple(sys_.pairs[c] for c in s))


# ---------------------------------------------------------------------------
# shard execution


@dataclass(frozen=True)
class ShardOutcome:
    first_id: int
    examined: int
    pruned: int
    witness: tuple[Chord, ...] | None
    violations: tuple[tuple[Chord, ...], ...]


def _run_shard(n: int, k: int, first_id: int,
               degree_prune: bool, validate: bool) -> ShardOutcome:
    """Process one shard; stops at the shard's first pancyclic candidate."""
    sys_ = chord_system(n)
    pairs = sys_.pairs
    examined = 0
    pruned = 0
    violations = []
    witness = None
    for s in _iter_shard(sys_, k, first_id):
        chords = tuple(pairs[c] for c in s)
        if degree_prune:
            mult = Counter(x for ch in chords for x in ch)
            delta = 2 + max(mult.values())
            if delta > 4 and k >= delta and not max_degree_feasible(n, k, delta):
                pruned += 1
                if validate and is_pancyclic_chords(n, chords):
                    violations.append(chords)
                continue
        examined += 1
        if is_pancyclic_chords(n, chords):
            witness = chords
            break
    return ShardOutcome(first_id, examined, pruned, witness, tuple(violations))


def _shard_task(args) -> ShardOutcome:
    return _run_shard(*args)


# ---------------------------------------------------------------------------
# journaling


def _journal_path(outdir: str, n: int, k: int) -> str:
    return os.path.join(outdir, f"search-{n}-{k}.journal")


def _witness_str(witness: tuple[Chord, ...] | None) -> str:
    if witness is None:
        return "-"
    return ",".join(f"{u}-{v}" for u, v in witness)


def _parse_witness(text: str) -> tuple[Chord, ...] | None:
    if text == "-":
        return None
    return tuple(tuple(int(x) for x in part.split("-")) for part in text.split(","))


def _read_journal(path: str, sys_: ChordSystem) -> dict[int, ShardOutcome]:
    """Load completed shard records; silently ignores malformed lines."""
    done: dict[int, ShardOutcome] = {}
    if not os.path.exists(path):
        return done
    id_by_gap = {sys_.mingap[fid]: fid for fid in sys_.shards}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            parts = line.split()
            if len(parts) != 4 or not parts[0].startswith("g"):
                continue
            try:
                gap = int(parts[0][1:])
                examined = int(parts[1])
                pruned = int(parts[2])
                witness = _parse_witness(parts[3])
            except ValueError:
                continue
            fid = id_by_gap.get(gap)
            if fid is not None:
                done[fid] = ShardOutcome(fid, examined, pruned, witness, ())
    return done


def _journal_line(sys_: ChordSystem, out: ShardOutcome) -> str:
    gap = sys_.mingap[out.first_id]
    return f"g{gap} {out.examined} {out.pruned} {_witness_str(out.witness)}\n"


# ---------------------------------------------------------------------------
# level runner: all shards of one (n, k)


@dataclass(frozen=True)
class LevelOutcome:
    examined: int
    pruned: int
    witness: tuple[Chord, ...] | None
    complete: bool


def _merge(shard_ids, outcomes) -> LevelOutcome:
    """Deterministic fold: count shards in order up to the first witness."""
    examined = 0
    pruned = 0
    witness = None
    complete = True
    for fid in shard_ids:
        out = outcomes.get(fid)
        if out is None:
            complete = False
            break
        examined += out.examined
        pruned += out.pruned
        if out.witness is not None:
            witness = out.witness
            break
    return LevelOutcome(examined, pruned, witness, complete)


def _run_level(n: int, k: int, config: SearchConfig) -> LevelOutcome:
    if k == 0:
        witness: tuple[Chord, ...] | None = () if n == 3 else None
        return LevelOutcome(1, 0, witness, True)
    sys_ = chord_system(n)
    shard_ids = sys_.shards
    outdir = config.outdir or os.environ.get("PANCYC_OUTDIR")
    outcomes: dict[int, ShardOutcome] = {}
    journal = None
    if outdir:
        os.makedirs(outdir, exist_ok=True)
        path = _journal_path(outdir, n, k)
        outcomes = _read_journal(path, sys_)
        journal = open(path, "a", encoding="ascii")
    deadline = (time.monotonic() + config.budget_seconds
                if config.budget_seconds is not None else None)

    def record(out: ShardOutcome) -> None:
        if out.violations:
            raise PruneSoundnessError(
                f"degree prune skipped pancyclic candidates: {out.violations}")
        outcomes[out.first_id] = out
        if journal:
            journal.write(_journal_line(sys_, out))
            journal.flush()

    try:
        if config.jobs <= 1:
            for fid in shard_ids:
                out = outcomes.get(fid)
                if out is None:
                    if deadline is not None and time.monotonic() > deadline:
                        break
                    out = _run_shard(n, k, fid, config.degree_prune, config.validate)
                    record(out)
                if out.witness is not None:
                    break
        else:
            pending = [fid for fid in shard_ids if fid not in outcomes]
            if pending and _merge(shard_ids, outcomes).witness is None:
                tasks = [(n, k, fid, config.degree_prune, config.validate)
                         for fid in pending]
                with Pool(config.jobs) as pool:
                    for out in pool.imap(_shard_task, tasks):
                        record(out)
                        if _merge(shard_ids, outcomes).witness is not None:
                            pool.terminate()
                            break
                        if deadline is not None and time.monotonic() > deadline:
                            pool.terminate()
                            break
    finally:
        if journal:
            journal.close()
    return _merge(shard_ids, outcomes)


# ---------------------------------------------------------------------------
# public operations


def find_min_chords(n: int, config: SearchConfig | None = None) -> SearchResult:
    """Exact minimum chord count for a pancyclic graph on n vertices.

    Levels run in increasing k from the counting lower bound (proven, so
    sound to skip below); the first level with a witness gives k_min and
    m(n) = n + k_min. Deterministic for any worker count.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    config = config or SearchConfig()
    t0 = time.perf_counter()
    k_start = bondy_lower(n) - n if config.start_at_lower_bound else 0
    explored = 0
    for k in range(k_start, config.max_k + 1):
        level = _run_level(n, k, config)
        explored += level.examined
        if not level.complete:
            raise SearchBudgetExceeded(
                f"n={n} k={k}: budget exhausted after {level.examined} candidates; "
                f"rerun with a journal directory to resume")
        if level.witness is not None:
            g = ChordedCycle(n, level.witness)
            return SearchResult(n, k, n + k, g, explored, time.perf_counter() - t0)
    raise ChordCeilingReached(
        f"n={n}: no pancyclic graph with k <= {config.max_k} chords")


def prove_no_pancyclic(n: int, k: int,
                       config: SearchConfig | None = None) -> ExhaustionCertificate:
    """Enumerate every canonical k-chord set on n vertices.

    Certifies that none is pancyclic, or returns the lexicographically
    smallest counterexample. Journals per-shard progress when an output
    directory is configured, so interrupted runs resume.
    """
    if n < 3 or k < 0:
        raise ValueError(f"need n >= 3 and k >= 0, got n={n}, k={k}")
    config = config or SearchConfig()
    level = _run_level(n, k, config)
    cex = ChordedCycle(n, level.witness) if level.witness is not None else None
    return ExhaustionCertificate(n, k, level.examined, level.pruned,
                                 level.complete, cex)


def build_table(from_n: int, to_n: int,
                config: SearchConfig | None = None) -> list[SearchResult | SearchFailure]:
    """One search result per n in [from_n, to_n]; failures carried, not raised."""
    if not 3 <= from_n <= to_n:
        raise ValueError(f"need 3 <= from <= to, got [{from_n}, {to_n}]")
    config = config or SearchConfig()
    rows: list[SearchResult | SearchFailure] = []
    for n in range(from_n, to_n + 1):
        try:
            rows.append(find_min_chords(n, config))
        except (SearchBudgetExceeded, ChordCeilingReached) as exc:
            rows.append(SearchFailure(n, str(exc)))
    return rows
