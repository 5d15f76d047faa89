from math import comb

import pytest

from pancyclic.cycle_enum import brute_force_spectrum, is_pancyclic_chords, spectrum
from pancyclic.graph_core import (
    all_valid_chords,
    canonical_form,
    dihedral_image,
    make_graph,
)
from pancyclic.search import (
    SearchConfig,
    SearchFailure,
    SearchResult,
    build_table,
    enumerate_canonical_chord_sets,
    find_min_chords,
    prove_no_pancyclic,
)
from golden import MIN_CHORDS, MIN_EDGES


class TestCanonicalEnumeration:
    def test_single_chord_classes(self):
        assert len(list(enumerate_canonical_chord_sets(6, 1))) == 2
        assert len(list(enumerate_canonical_chord_sets(5, 1))) == 1

    def test_zero_chords(self):
        sets = list(enumerate_canonical_chord_sets(9, 0))
        assert sets == [make_graph(9, [])]

    @pytest.mark.parametrize("n", range(4, 10))
    @pytest.mark.parametrize("k", (1, 2))
    def test_exactly_one_representative_per_orbit(self, n, k):
        reps = list(enumerate_canonical_chord_sets(n, k))
        total_orbit_size = 0
        forms = set()
        for g in reps:
            assert canonical_form(g)[1] == g.chords  # rep is canonical
            form = canonical_form(g)
            assert form not in forms  # no orbit listed twice
            forms.add(form)
            orbit = {dihedral_image(g, s, r).chords
                     for s in range(n) for r in (False, True)}
            total_orbit_size += len(orbit)
        # orbits partition the raw chord sets
        assert total_orbit_size == comb(len(all_valid_chords(n)), k)

    def test_lexicographic_order(self):
        sets = [g.chords for g in enumerate_canonical_chord_sets(10, 2)]
        assert sets == sorted(sets)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            list(enumerate_canonical_chord_sets(2, 1))
        with pytest.raises(ValueError):
            list(enumerate_canonical_chord_sets(6, -1))


class TestFindMinChords:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_matches_known_values(self, n):
        result = find_min_chords(n)
        assert result.k_min == MIN_CHORDS[n]
        assert result.m == MIN_EDGES[n] == n + result.k_min

    def test_triangle_witness(self):
        result = find_min_chords(3)
        assert result.k_min == 0 and result.witness == make_graph(3, [])

    def test_witness_verified_by_both_enumerators(self):
        for n in (6, 9, 12):
            w = find_min_chords(n).witness
            assert spectrum(w).is_pancyclic()
            assert brute_force_spectrum(w).is_pancyclic()
            assert canonical_form(w)[1] == w.chords

    def test_deterministic_across_worker_counts(self):
        r1 = find_min_chords(12, SearchConfig(jobs=1))
        r2 = find_min_chords(12, SearchConfig(jobs=2))
        assert r1.to_json_dict() == r2.to_json_dict()

    def test_start_at_zero_agrees(self):
        a = find_min_chords(8, SearchConfig(start_at_lower_bound=False))
        b = find_min_chords(8)
        assert (a.k_min, a.witness) == (b.k_min, b.witness)
        assert a.explored >= b.explored  # extra exhausted levels below the bound

    def test_json_has_no_volatile_fields(self):
        doc = find_min_chords(6).to_json_dict()
        assert set(doc) == {"n", "k", "m", "witness", "explored"}

    def test_ceiling_reported(self):
        from pancyclic.search import ChordCeilingReached
        with pytest.raises(ChordCeilingReached):
            find_min_chords(9, SearchConfig(max_k=2))


class TestProveNoPancyclic:
    def test_six_vertices_one_chord(self):
        cert = prove_no_pancyclic(6, 1)
        assert cert.holds
        assert cert.examined == 2
        assert cert.counterexample is None

    def test_counterexample_found(self):
        cert = prove_no_pancyclic(14, 3)
        assert cert.complete and not cert.holds
        assert cert.counterexample == make_graph(14, [(1, 3), (1, 5), (2, 8)])

    def test_budget_marks_incomplete(self):
        cert = prove_no_pancyclic(18, 3, SearchConfig(budget_seconds=0.0))
        assert not cert.complete

    def test_journal_resume(self, tmp_path):
        cfg = SearchConfig(outdir=str(tmp_path))
        fresh = prove_no_pancyclic(11, 2, cfg)
        journal = tmp_path / "search-11-2.journal"
        assert journal.exists()
        lines = journal.read_text().splitlines()
        assert len(lines) >= 2
        # drop all but the first shard record and resume
        journal.write_text(lines[0] + "\n")
        resumed = prove_no_pancyclic(11, 2, cfg)
        assert resumed.to_json_dict() == fresh.to_json_dict()

    def test_degree_prune_is_noop_when_feasible(self):
        plain = prove_no_pancyclic(10, 3)
        pruned = prove_no_pancyclic(10, 3, SearchConfig(degree_prune=True, validate=True))
        assert pruned.pruned == 0
        assert plain.examined == pruned.examined

    def test_prune_agrees_with_enumeration_on_spot_check(self):
        # max degree 5 with 5 chords on 26 vertices is infeasible by counting;
        # the enumerator agrees on a concrete instance
        from pancyclic.bounds import max_degree_feasible
        chords = ((1, 5), (1, 9), (1, 14), (3, 20), (7, 24))
        assert not max_degree_feasible(26, 5, 5)
        assert not is_pancyclic_chords(26, chords)


class TestBuildTable:
    def test_small_range(self):
        rows = build_table(3, 10)
        assert [r.m for r in rows] == [MIN_EDGES[n] for n in range(3, 11)]

    def test_single_row(self):
        rows = build_table(3, 3)
        assert len(rows) == 1 and rows[0].m == 3

    def test_failures_carried_per_row(self):
        rows = build_table(5, 7, SearchConfig(max_k=1))
        assert isinstance(rows[0], SearchResult)  # n=5 needs one chord
        assert isinstance(rows[1], SearchFailure)  # n=6 needs two
        assert rows[1].n == 6

    def test_bad_range(self):
        with pytest.raises(ValueError):
            build_table(10, 3)
