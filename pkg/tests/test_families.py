import pytest

from pathideals.families import (
    cycle_arithmetic,
    cycle_ideal,
    factorize_vw,
    path_ideal,
    path_start,
    phi,
    prefix_colon,
    prefix_colon_case,
    residue_sums,
    u_ideal,
    w_monomial,
)
from pathideals.monomial import Monomial, MonomialIdeal, colon_by_monomial, ideal_power, variable_ideal


def test_path_and_cycle_generators():
    assert sorted(path_ideal(4, 2).to_strings()) == ["x1*x2", "x2*x3", "x3*x4"]
    assert len(cycle_ideal(5, 3)) == 5
    assert Monomial.parse("x5*x1*x2", 5).exponents in cycle_ideal(5, 3).gens
    with pytest.raises(ValueError):
        cycle_ideal(3, 3)


@pytest.mark.parametrize(
    "n,m,expected",
    [(12, 8, (4, 3, 2, 11, 7)), (5, 3, (1, 5, 3, 2, 1)), (4, 2, (2, 2, 1, 3, 1)), (6, 4, (2, 3, 2, 5, 3))],
)
def test_cycle_arithmetic(n, m, expected):
    ca = cycle_arithmetic(n, m)
    assert (ca.d, ca.r, ca.s, ca.t0, ca.alpha) == expected
    assert ca.t0 * m == ca.alpha * n + ca.d


def test_phi_values():
    assert phi(5, 2, 1) == 2
    assert phi(4, 3, 1) == 2
    assert phi(3, 2, 5) == 1


def test_u_ideal_generators():
    U = u_ideal(4, 2)
    assert sorted(U.to_strings()) == sorted(["x1*x2", "x1*x4", "x2*x3", "x3*x4"])
    assert len(u_ideal(12, 4)) == 81


def test_w_for_five_three():
    # t0 = 2 and alpha = 1, so w_2 is the product of all five variables
    w = w_monomial(5, 3, 2)
    assert w == Monomial.squarefree(5, range(1, 6))
    assert w not in ideal_power(cycle_ideal(5, 3), 2)


def test_worked_factorization():
    v = Monomial.parse("x5*x2*x11*x4", 12)
    us = factorize_vw(v, 12, 8)
    assert [path_start(u, 8) for u in us] == [4, 11, 7, 2, 10, 5, 1, 9, 5, 1, 9]
    total = Monomial.one(12)
    for u in us:
        total = total * u
    assert total == v * w_monomial(12, 8, 11)


def test_residue_sums():
    assert residue_sums(Monomial.parse("x1*x2*x5", 6), 2) == [2, 1]


@pytest.mark.parametrize(
    "n,m,t,case,expected",
    [
        (5, 3, 2, 1, MonomialIdeal.maximal(5)),
        (6, 3, 2, 2, variable_ideal(6, [3, 6])),
        (8, 3, 2, 3, variable_ideal(8, [3, 6, 8])),
    ],
)
def test_prefix_colon_first_cases(n, m, t, case, expected):
    assert prefix_colon_case(n, m, t) == case
    assert prefix_colon(n, m, t) == expected
    prefix = Monomial.squarefree(n, range(1, m * t))
    assert colon_by_monomial(ideal_power(cycle_ideal(n, m), t), prefix) == expected
