"""Hypothesis strategies shared across the test modules."""

import hypothesis.strategies as st

from pancyclic.graph_core import ChordedCycle, all_valid_chords


@st.composite
def chorded_cycles(draw, min_n=4, max_n=14, min_k=0, max_k=4):
    """Random valid chorded cycle with n in [min_n, max_n] and k <= max_k."""
    n = draw(st.integers(min_n, max_n))
    pool = all_valid_chords(n)
    upper = min(max_k, len(pool))
    chords = draw(st.sets(st.sampled_from(pool), min_size=min(min_k, upper), max_size=upper))
    return ChordedCycle(n, tuple(sorted(chords)))


@st.composite
def chord_pairs(draw, min_n=5, max_n=14):
    """(p, q, n) with p and q distinct chords of C_n."""
    n = draw(st.integers(min_n, max_n))
    pool = all_valid_chords(n)
    p = draw(st.sampled_from(pool))
    q = draw(st.sampled_from(pool))
    return p, q, n


def distinct_endpoint_cycles(min_n=6, max_n=12, max_k=3):
    """Chorded cycles whose 2k chord endpoints are all distinct."""
    return chorded_cycles(min_n=min_n, max_n=max_n, max_k=max_k).filter(
        lambda g: len(g.chord_endpoints()) == 2 * g.k)
