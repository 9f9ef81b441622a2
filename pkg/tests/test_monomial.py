import pytest

from pathideals.monomial import (
    AmbientMismatch,
    DegreeBoundExceeded,
    Monomial,
    MonomialIdeal,
    colon_by_ideal,
    colon_by_monomial,
    ideal_power,
    intersect,
    minimalize,
    variable_ideal,
)


def ideal(n, *words):
    return minimalize([Monomial.parse(w, n) for w in words], n=n)


def test_parse_and_print_round_trip():
    u = Monomial.parse("x1^2*x3", 3)
    assert u.exponents == (2, 0, 1)
    assert str(u) == "x1^2*x3"
    assert Monomial.parse(str(u), 3) == u
    assert str(Monomial.one(2)) == "1"


def test_monomial_arithmetic():
    a, b = Monomial((2, 0, 1)), Monomial((1, 3, 0))
    assert (a * b).exponents == (3, 3, 1)
    assert a.lcm(b).exponents == (2, 3, 1)
    assert a.gcd(b).exponents == (1, 0, 0)
    assert (a * b) / b == a
    assert a.degree == 3 and a.support == (0, 2)
    with pytest.raises(ValueError):
        a / b


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Monomial((1, 0)) * Monomial((1, 0, 0))
    with pytest.raises(AmbientMismatch):
        variable_ideal(2, [1]) + variable_ideal(3, [1])


def test_minimalize_drops_multiples_and_sorts():
    I = minimalize([(1, 1, 0), (1, 0, 0), (0, 1, 1), (0, 2, 1)], n=3)
    assert I.gens == ((0, 1, 1), (1, 0, 0))


def test_membership_and_unit():
    I = ideal(3, "x1*x2", "x3^2")
    assert Monomial.parse("x1^2*x2", 3) in I
    assert Monomial.parse("x1*x3", 3) not in I
    assert Monomial.one(3) in MonomialIdeal.whole_ring(3)
    assert Monomial.one(3) not in MonomialIdeal.zero(3)


def test_colon_examples():
    I = ideal(3, "x1*x2", "x2*x3")
    assert colon_by_monomial(I, Monomial.parse("x2", 3)) == variable_ideal(3, [1, 3])
    assert colon_by_monomial(I, Monomial.parse("x1*x2", 3)).unit
    J = ideal(2, "x1^2", "x1*x2")
    assert colon_by_ideal(J, variable_ideal(2, [1, 2])) == variable_ideal(2, [1])


def test_intersection_uses_lcms():
    I = intersect(variable_ideal(4, [1, 3]), variable_ideal(4, [2, 4]))
    assert I == ideal(4, "x1*x2", "x1*x4", "x2*x3", "x3*x4")


def test_power_and_degree_bound():
    I = ideal(2, "x1", "x2")
    assert ideal_power(I, 0).unit
    assert ideal_power(I, 2) == ideal(2, "x1^2", "x1*x2", "x2^2")
    with pytest.raises(DegreeBoundExceeded):
        ideal_power(I, 5, max_degree=4)


def test_json_round_trip():
    I = ideal(3, "x1*x2", "x3^2")
    assert MonomialIdeal.from_json(I.to_json()) == I
    assert MonomialIdeal.from_dict({"n": 3, "gens": ["x3^2", "x1*x2"]}) == I


def test_extend_and_permute():
    I = ideal(2, "x1*x2^2")
    assert I.extend(1).gens == ((1, 2, 0),)
    assert I.permute([1, 0]).gens == ((2, 1),)
