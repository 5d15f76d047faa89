import pytest
from hypothesis import given, settings

from pancyclic.analysis import is_pancyclic, missing_lengths
from pancyclic.constructions import (
    extend_by_one,
    five_chord_construction,
    five_chord_for_n,
    minimal_pancyclic_14,
)
from pancyclic.cycle_enum import spectrum
from pancyclic.graph_core import Arc, contract_arc, make_graph
from strategies import chorded_cycles
from golden import MIN_EDGES


class TestFiveChordFamily:
    def test_vertex_and_edge_counts(self):
        g = five_chord_construction(9)
        assert g.n == 30 and g.edge_count == 35

    def test_pancyclic_through_37(self):
        for n in range(23, 38):
            assert is_pancyclic(five_chord_for_n(n)), n

    def test_n22_also_works(self):
        # the smallest instance (one edge on the stretched segment) is
        # pancyclic too, just not edge-minimal (m(22) = 26 < 27)
        assert is_pancyclic(five_chord_construction(1))

    def test_breaks_at_38(self):
        g = five_chord_for_n(38)
        assert not is_pancyclic(g)
        assert missing_lengths(g) == {20}

    def test_length_windows(self):
        # every instance has all lengths in [3, 19] and [n - 17, n]
        for x in range(1, 18):
            g = five_chord_construction(x)
            s = spectrum(g)
            for l in range(3, 20):
                assert s.has_length(l), (g.n, l)
            for l in range(g.n - 17, g.n + 1):
                assert s.has_length(l), (g.n, l)

    def test_matches_known_minimum_above_25(self):
        for n in range(25, 38):
            assert five_chord_for_n(n).edge_count == MIN_EDGES[n]

    def test_degenerate_segment_rejected(self):
        with pytest.raises(ValueError):
            five_chord_construction(0)
        with pytest.raises(ValueError):
            five_chord_for_n(21)


class TestExtendByOne:
    def test_triangle(self):
        g = extend_by_one(make_graph(3, []))
        assert g.n == 4 and g.edge_count == 5 == MIN_EDGES[4]
        assert is_pancyclic(g)

    def test_known_minimal_14(self):
        g = extend_by_one(minimal_pancyclic_14())
        assert g.n == 15 and g.edge_count == 19 == MIN_EDGES[15]
        assert is_pancyclic(g)

    def test_twice_adds_two_vertices_four_edges(self):
        g = minimal_pancyclic_14()
        h = extend_by_one(extend_by_one(g))
        assert h.n == g.n + 2 and h.edge_count == g.edge_count + 4
        assert is_pancyclic(h)

    def test_old_closing_edge_becomes_chord(self):
        g = extend_by_one(make_graph(3, []))
        assert g.chords == ((1, 3),)

    def test_non_pancyclic_rejected(self):
        with pytest.raises(ValueError):
            extend_by_one(make_graph(6, []))

    @given(chorded_cycles(min_n=4, max_n=12, min_k=1))
    @settings(max_examples=150, deadline=None)
    def test_preserves_pancyclicity(self, g):
        if not is_pancyclic(g):
            return
        h = extend_by_one(g)
        assert h.n == g.n + 1
        assert h.edge_count == g.edge_count + 2
        assert is_pancyclic(h)


class TestMinimalPancyclic14:
    def test_shape(self):
        g = minimal_pancyclic_14()
        assert g.n == 14
        assert g.edge_count == 17 == MIN_EDGES[14]
        assert is_pancyclic(g)

    def test_half_arc_contraction_destroys_pancyclicity(self):
        g = minimal_pancyclic_14()
        assert not is_pancyclic(contract_arc(g, Arc(3, 9, 6)))
