from itertools import product
from math import gcd

from hypothesis import given, settings, strategies as st

from ideal_strategies import ideal_pairs, monomials, proper_ideals
from pathideals.depth import SimplicialComplexBits, depth_quotient, reduced_homology_ranks
from pathideals.families import (
    cycle_arithmetic,
    cycle_ideal,
    factorize_vw,
    residue_sums,
    u_ideal,
    w_monomial,
)
from pathideals.monomial import (
    Monomial,
    colon_by_monomial,
    contains,
    ideal_power,
    intersect,
    minimalize,
)
from pathideals.sdepth import sdepth_quotient, validate_partition

cycle_params = st.integers(3, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1)))


@settings(max_examples=300, deadline=None)
@given(proper_ideals(max_n=4), st.data())
def test_colon_laws(I, data):
    u = data.draw(monomials(I.n))
    v = data.draw(monomials(I.n))
    L = colon_by_monomial(I, u)
    assert colon_by_monomial(L, v) == colon_by_monomial(I, u * v)
    assert all(contains(I, u * g) for g in L.generators())
    assert all(g in L for g in I.generators())
    assert L.unit == contains(I, u)


@settings(max_examples=300, deadline=None)
@given(ideal_pairs(max_n=4), st.data())
def test_intersection_and_sum_membership(pair, data):
    I, J = pair
    w = data.draw(monomials(I.n, max_exp=3))
    assert contains(intersect(I, J), w) == (contains(I, w) and contains(J, w))
    assert contains(I + J, w) == (contains(I, w) or contains(J, w))


@settings(max_examples=200, deadline=None)
@given(proper_ideals(max_n=3), st.integers(0, 3), st.integers(0, 3))
def test_power_additivity(I, a, b):
    assert ideal_power(I, a) * ideal_power(I, b) == ideal_power(I, a + b)


@settings(max_examples=200, deadline=None)
@given(proper_ideals(max_n=4))
def test_minimalize_idempotent(I):
    assert minimalize(I.gens, n=I.n) == I
    assert all(not (a != b and all(x <= y for x, y in zip(a, b))) for a in I.gens for b in I.gens)


@settings(max_examples=120, deadline=None)
@given(proper_ideals(max_n=3, max_gens=3))
def test_fresh_variable_adds_one(I):
    J = I.extend(1)
    assert depth_quotient(J).depth == depth_quotient(I).depth + 1
    a, b = sdepth_quotient(I), sdepth_quotient(J)
    assert a.exact and b.exact
    assert b.sdepth == a.sdepth + 1


@settings(max_examples=120, deadline=None)
@given(proper_ideals(max_n=3, max_gens=3))
def test_certificates_revalidate(I):
    r = sdepth_quotient(I)
    assert validate_partition(I, r.certificate) == r.sdepth


@settings(max_examples=100, deadline=None)
@given(proper_ideals(max_n=3, max_gens=3), st.data())
def test_colon_does_not_lower_depth(I, data):
    u = data.draw(monomials(I.n))
    L = colon_by_monomial(I, u)
    if not L.unit:
        assert depth_quotient(L).depth >= depth_quotient(I).depth


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5), st.data())
def test_euler_characteristic(n, data):
    facets = data.draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    C = SimplicialComplexBits(n, frozenset(faces))
    ranks = reduced_homology_ranks(C)
    assert sum((-1) ** (i - 1) * h for i, h in enumerate(ranks)) == C.euler_characteristic()


@settings(max_examples=60, deadline=None)
@given(cycle_params, st.integers(1, 3), st.integers(1, 8))
def test_cycle_power_rotation_invariant(nm, t, shift):
    n, m = nm
    J = ideal_power(cycle_ideal(n, m), t)
    perm = [(i + shift) % n for i in range(n)]
    assert J.permute(perm) == J


@settings(max_examples=60, deadline=None)
@given(cycle_params)
def test_cycle_arithmetic_laws(nm):
    n, m = nm
    ca = cycle_arithmetic(n, m)
    assert ca.d == gcd(n, m) and ca.t0 * m == ca.alpha * n + ca.d
    assert ca.r * (ca.d - 1) <= ca.t0 <= n - 1
    w = w_monomial(n, m, ca.t0)
    assert w.degree == m * ca.t0 - ca.d
    if ca.d > 1:
        for v in u_ideal(n, ca.d).generators():
            assert sum(residue_sums(v, ca.d)) == v.degree
            us = factorize_vw(v, n, m)
            total = Monomial.one(n)
            for u in us:
                assert u.exponents in cycle_ideal(n, m).gens
                total = total * u
            assert total == v * w


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3))
def test_u_ideal_membership(d, blocks):
    n = d * blocks
    U = u_ideal(n, d)
    for e in product(range(2), repeat=n):
        u = Monomial(e)
        expected = all(any(e[i - 1] for i in range(j, n + 1, d)) for j in range(1, d + 1))
        assert contains(U, u) == expected
