from itertools import combinations

import pytest
from hypothesis import given, settings

from pancyclic.cycle_enum import (
    brute_force_spectrum,
    count_cycles_of_length,
    length_tally,
    max_cycle_bound,
    reduce_graph,
    shi_candidates,
    spectrum,
)
from pancyclic.graph_core import dihedral_image, make_graph
from strategies import chorded_cycles, distinct_endpoint_cycles

FIG14 = [(1, 13), (3, 14), (9, 14)]


class TestReduce:
    def test_single_chord(self):
        rm = reduce_graph(make_graph(6, [(1, 3)]))
        assert rm.nodes == (1, 3)
        assert rm.edges == ((1, 3, 2, "arc"), (3, 1, 4, "arc"), (1, 3, 1, "chord"))

    def test_known_minimal_14(self):
        rm = reduce_graph(make_graph(14, FIG14))
        assert len(rm.nodes) == 5
        arc_weights = [w for _, _, w, kind in rm.edges if kind == "arc"]
        assert arc_weights == [2, 6, 4, 1, 1]
        assert sum(1 for e in rm.edges if e[3] == "chord") == 3

    def test_parallel_arcs(self):
        rm = reduce_graph(make_graph(8, [(1, 5)]))
        assert rm.nodes == (1, 5)
        weights = sorted(w for _, _, w, kind in rm.edges if kind == "arc")
        assert weights == [4, 4]

    def test_chordless_rejected(self):
        with pytest.raises(ValueError):
            reduce_graph(make_graph(6, []))

    @given(chorded_cycles(min_k=1, max_n=12))
    @settings(max_examples=150)
    def test_cycles_correspond_bijectively(self, g):
        weights = sorted(reduce_graph(g).cycle_weights())
        oracle = brute_force_spectrum(g)
        tally = length_tally(g)
        assert sorted(tally.elements()) == weights
        assert len(weights) == oracle.cycle_count
        assert set(weights) == set(oracle.lengths)


class TestSpectrum:
    def test_plain_cycle(self):
        s = spectrum(make_graph(5, []))
        assert s.lengths == frozenset({5}) and s.cycle_count == 1

    def test_single_chord(self):
        s = spectrum(make_graph(6, [(1, 3)]))
        assert s.lengths == frozenset({3, 5, 6}) and s.cycle_count == 3

    def test_known_minimal_14(self):
        s = spectrum(make_graph(14, FIG14))
        assert s.lengths == frozenset(range(3, 15))
        assert s.cycle_count == 13  # within [12, 15]: >= n-2 and <= 2^(k+1)-1

    @given(chorded_cycles(max_n=12))
    @settings(max_examples=200)
    def test_matches_brute_force(self, g):
        s, oracle = spectrum(g), brute_force_spectrum(g)
        assert s.lengths == oracle.lengths
        assert s.cycle_count == oracle.cycle_count

    @given(chorded_cycles())
    def test_within_cycle_bound(self, g):
        assert spectrum(g).cycle_count <= max_cycle_bound(g.k)

    @given(chorded_cycles())
    def test_hamiltonian_length_always_present(self, g):
        assert g.n in spectrum(g).lengths

    @given(chorded_cycles(max_n=10))
    @settings(max_examples=100)
    def test_dihedral_invariance(self, g):
        for shift, refl in ((1, False), (3, True), (0, True)):
            h = dihedral_image(g, shift, refl)
            assert spectrum(h) == spectrum(g)


class TestLengthTally:
    def test_total_matches_count(self):
        g = make_graph(14, FIG14)
        tally = length_tally(g)
        assert sum(tally.values()) == spectrum(g).cycle_count

    def test_single_length(self):
        g = make_graph(8, [(1, 5)])
        assert count_cycles_of_length(g, 5) == 2
        assert count_cycles_of_length(g, 8) == 1
        assert count_cycles_of_length(g, 4) == 0


class TestShiCandidates:
    def test_single_chord_both_cycles(self):
        g = make_graph(6, [(1, 3)])
        lengths = sorted(len(c) for c in shi_candidates(g, [(1, 3)]))
        assert lengths == [3, 5]

    def test_empty_subset_is_hamiltonian_cycle(self):
        g = make_graph(6, [(1, 3)])
        cands = shi_candidates(g, [])
        assert len(cands) == 1 and len(cands[0]) == 6

    def test_crossing_pair(self):
        g = make_graph(8, [(1, 4), (2, 6)])
        cands = shi_candidates(g, [(1, 4), (2, 6)])
        assert len(cands) <= 2
        assert sorted(len(c) for c in cands) == [5, 7]

    def test_parallel_pair_drops_disconnected_candidate(self):
        g = make_graph(8, [(1, 4), (5, 8)])
        cands = shi_candidates(g, [(1, 4), (5, 8)])
        assert [len(c) for c in cands] == [4]

    def test_shared_endpoints_rejected(self):
        g = make_graph(14, FIG14)
        with pytest.raises(ValueError):
            shi_candidates(g, [(1, 13)])

    def test_foreign_chord_rejected(self):
        g = make_graph(8, [(1, 4)])
        with pytest.raises(ValueError):
            shi_candidates(g, [(2, 6)])

    @given(distinct_endpoint_cycles())
    @settings(max_examples=150, deadline=None)
    def test_union_over_subsets_reproduces_spectrum(self, g):
        lengths = set()
        total = 0
        for r in range(g.k + 1):
            for subset in combinations(g.chords, r):
                for cand in shi_candidates(g, subset):
                    assert {e for e in cand if e in set(g.chords)} == set(subset)
                    lengths.add(len(cand))
                    total += 1
        s = spectrum(g)
        assert lengths == set(s.lengths)
        assert total == s.cycle_count


class TestBruteForce:
    def test_two_triangles_square(self):
        s = brute_force_spectrum(make_graph(4, [(1, 3)]))
        assert s.lengths == frozenset({3, 4}) and s.cycle_count == 3

    def test_size_guard(self):
        with pytest.raises(ValueError):
            brute_force_spectrum(make_graph(21, []))


class TestMaxCycleBound:
    @pytest.mark.parametrize("k,expected", [(0, 1), (1, 3), (4, 31), (5, 63)])
    def test_values(self, k, expected):
        assert max_cycle_bound(k) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            max_cycle_bound(-1)
