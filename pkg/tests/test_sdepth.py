import pytest

from pathideals.depth import depth_quotient
from pathideals.families import cycle_ideal
from pathideals.monomial import MonomialIdeal, ideal_power, minimalize, variable_ideal
from pathideals.sdepth import (
    CharPoset,
    IntervalPartition,
    sdepth_at_least,
    sdepth_quotient,
    validate_partition,
)


def test_poset_of_maximal_ideal_is_a_point():
    P = CharPoset(MonomialIdeal.maximal(3))
    assert len(P) == 1 and P.reach() == [0]


@pytest.mark.parametrize(
    "I,expected",
    [
        (MonomialIdeal.maximal(2), 0),
        (variable_ideal(3, [1]), 2),
        (minimalize([(1, 1)], n=2), 1),
        (cycle_ideal(4, 3), 2),
        (ideal_power(cycle_ideal(5, 4), 2), 2),
        (ideal_power(cycle_ideal(4, 2), 4), 1),
        (cycle_ideal(5, 3), 2),
    ],
)
def test_sdepth_values_with_certificate(I, expected):
    r = sdepth_quotient(I)
    assert r.exact and r.sdepth == expected
    assert validate_partition(I, r.certificate) == expected


def test_search_reports_infeasible_level():
    P = CharPoset(cycle_ideal(4, 3))
    assert sdepth_at_least(P, 3) is None
    assert sdepth_at_least(P, 2) is not None


def test_budget_gives_bracket():
    I = ideal_power(cycle_ideal(6, 3), 3)
    r = sdepth_quotient(I, budget=50)
    assert r.status in ("bracket", "exact")
    assert r.lo is not None and r.lo <= r.hi


def test_validator_rejects_bad_certificates():
    I = minimalize([(1, 1)], n=2)
    g = I.lcm_of_generators()
    with pytest.raises(ValueError):
        validate_partition(I, IntervalPartition(g, [((0, 0), (1, 0))]))
    with pytest.raises(ValueError):
        validate_partition(I, IntervalPartition(g, [((0, 0), (1, 0)), ((0, 0), (0, 1))]))
    with pytest.raises(ValueError):
        validate_partition(I, IntervalPartition(g, [((0, 0), (1, 1))]))


def test_sdepth_at_least_depth_on_small_cycles():
    for n, m, t in [(4, 2, 1), (4, 2, 2), (5, 2, 1), (5, 3, 1)]:
        I = ideal_power(cycle_ideal(n, m), t)
        assert sdepth_quotient(I).sdepth >= depth_quotient(I).depth
