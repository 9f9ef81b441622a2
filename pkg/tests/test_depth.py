import pytest

from pathideals.depth import (
    SimplicialComplexBits,
    depth_quotient,
    depth_zero_witness,
    reduced_homology_ranks,
    upper_koszul,
)
from pathideals.families import cycle_ideal, mtv_depth, path_ideal, phi, u_ideal
from pathideals.linalg import rank_mod_p
from pathideals.monomial import Monomial, MonomialIdeal, ideal_power, variable_ideal


def closure(n, facets):
    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return SimplicialComplexBits(n, frozenset(faces))


def test_rank_mod_p_dense_and_sparse_agree():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank_mod_p(rows, 7) == 2
    assert rank_mod_p([{0: 1, 1: 2, 2: 3}, {0: 2, 1: 4, 2: 6}, {1: 1, 2: 1}], 7) == 2
    assert rank_mod_p([[2, 0], [0, 2]], 2) == 0
    with pytest.raises(ValueError):
        rank_mod_p(rows, 6)


def test_homology_of_circle_and_points():
    circle = closure(3, [0b011, 0b110, 0b101])
    assert reduced_homology_ranks(circle) == [0, 0, 1]
    two_points = closure(2, [0b01, 0b10])
    assert reduced_homology_ranks(two_points) == [0, 1]
    assert reduced_homology_ranks(closure(2, [0])) == [1]
    assert circle.euler_characteristic() == -1


def test_non_closed_complex_rejected():
    with pytest.raises(ValueError):
        SimplicialComplexBits(2, frozenset({0b11}))


def test_upper_koszul_of_maximal_ideal_is_boundary():
    K = upper_koszul(MonomialIdeal.maximal(3), (1, 1, 1))
    assert K.faces == frozenset(range(7))
    assert reduced_homology_ranks(K)[-1] == 1


@pytest.mark.parametrize(
    "I,expected",
    [
        (MonomialIdeal.maximal(3), 0),
        (variable_ideal(4, [1, 2]), 2),
        (ideal_power(cycle_ideal(4, 3), 1), 2),
        (ideal_power(cycle_ideal(5, 4), 2), 2),
        (ideal_power(cycle_ideal(4, 3), 3), 0),
        (ideal_power(cycle_ideal(6, 2), 2), 2),
    ],
)
def test_depth_values(I, expected):
    r = depth_quotient(I)
    assert r.depth == expected and r.status == "exact"


def test_depth_matches_path_formula():
    for n in range(2, 6):
        for m in range(1, n + 1):
            for t in (1, 2):
                I = ideal_power(path_ideal(n, m), t)
                assert depth_quotient(I).depth == phi(n, m, t)


def test_cycle_edge_formula():
    assert depth_quotient(ideal_power(cycle_ideal(6, 2), 2)).depth == mtv_depth(6, 2)


def test_depth_budget_gives_unknown():
    r = depth_quotient(ideal_power(cycle_ideal(5, 2), 3), lattice_budget=5)
    assert r.depth is None and r.status == "unknown"


def test_u_ideal_depth():
    assert depth_quotient(u_ideal(6, 3)).depth == 2


def test_witness():
    J = ideal_power(cycle_ideal(5, 3), 2)
    w = Monomial.squarefree(5, range(1, 6))
    assert depth_zero_witness(J, candidates=[w]) == w
    assert depth_zero_witness(J) is not None
    assert depth_zero_witness(cycle_ideal(5, 4)) is None
