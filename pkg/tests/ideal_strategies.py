"""Hypothesis strategies for small monomial ideals."""

from hypothesis import strategies as st

from pathideals.monomial import Monomial, minimalize


@st.composite
def monomials(draw, n, max_exp=2):
    return Monomial(tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))))


@st.composite
def proper_ideals(draw, n=None, max_n=3, max_exp=2, max_gens=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return minimalize([tuple(g) for g in gens], n=n)


@st.composite
def ideal_pairs(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    return draw(proper_ideals(n=n)), draw(proper_ideals(n=n))
