"""Depth of ``S/I`` from multigraded Betti numbers.

For a monomial ideal ``I`` and a multidegree ``a`` the upper Koszul complex is
``K^a(I) = {F subset of supp(a) : x^a / x_F in I}`` and
``beta_{i,a}(I) = dim reduced H_{i-1}(K^a(I); GF(p))``. Betti numbers can only
be nonzero on the lcm lattice of the generators, so the projective dimension
is read off from the lattice alone and ``depth = n - pd(S/I)``.

All complexes on the lattice are built at once with numpy: membership in
``I`` is tabulated on the box ``0 <= a <= lcm(G(I))`` and cones (which are
acyclic) are discarded before any homology is computed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import is_prime, rank_mod_p
from .monomial import Monomial, MonomialIdeal, contains

DEFAULT_PRIME = 32003
LATTICE_BUDGET = int(os.environ.get("PATHIDEALS_LATTICE_BUDGET", "200000"))
FACE_BUDGET = int(os.environ.get("PATHIDEALS_FACE_BUDGET", str(1 << 16)))
BOX_BUDGET = 20_000_000
_CHUNK_CELLS = 1 << 22


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SimplicialComplexBits:
    """A simplicial complex on vertices ``0..n_vertices-1``; faces are bitmasks.

    ``faces == frozenset()`` is the void complex, ``frozenset({0})`` the
    complex whose only face is the empty set.
    """

    n_vertices: int
    faces: frozenset[int]

    def __post_init__(self) -> None:
        for f in self.faces:
            sub = f
            while sub:
                sub = (sub - 1) & f
                if sub not in self.faces:
                    raise ValueError(f"face {f:b} is missing its subface {sub:b}")
                if not sub:
                    break

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        """Dimension; -1 for ``{empty set}`` and -2 for the void complex."""
        return max((f.bit_count() for f in self.faces), default=-1) - 1

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def facets(self) -> list[int]:
        return sorted(
            f
            for f in self.faces
            if not any(not f >> v & 1 and f | 1 << v in self.faces for v in range(self.n_vertices))
        )

    def f_vector(self) -> list[int]:
        """Number of faces of each dimension, starting from -1."""
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[f.bit_count()] += 1
        return counts

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic ``sum_k (-1)^k f_k`` (``k >= -1``)."""
        return sum((-1) ** (k - 1) * c for k, c in enumerate(self.f_vector()))


def boundary_rows(source: list[int], target_index: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for f in source:
        row = {}
        sign = 1
        for v in range(f.bit_length()):
            if f >> v & 1:
                row[target_index[f & ~(1 << v)]] = sign
                sign = -sign
        rows.append(row)
    return rows


def reduced_homology_ranks(C: SimplicialComplexBits, p: int = DEFAULT_PRIME) -> list[int]:
    """Dimensions of reduced homology over GF(p) in degrees ``-1 .. dim C``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if C.is_void:
        return []
    by_size: list[list[int]] = [[] for _ in range(C.dimension + 2)]
    for f in sorted(C.faces):
        by_size[f.bit_count()].append(f)
    ranks = [0] * (len(by_size) + 1)
    for k in range(1, len(by_size)):
        if by_size[k]:
            index = {f: i for i, f in enumerate(by_size[k - 1])}
            ranks[k] = rank_mod_p(boundary_rows(by_size[k], index), p)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size))]


def upper_koszul(I: MonomialIdeal, a) -> SimplicialComplexBits:
    """The upper Koszul complex of ``I`` at a multidegree of its lcm lattice."""
    a = tuple(a.exponents if isinstance(a, Monomial) else a)
    if len(a) != I.n:
        raise ValueError(f"multidegree {a} does not have {I.n} entries")
    below = [g for g in I.gens if all(x <= y for x, y in zip(g, a))]
    join = tuple(max(col) for col in zip(*below)) if below else None
    if join != a:
        raise ValueError(f"{a} is not in the lcm lattice of the generators")
    supp = [i for i, e in enumerate(a) if e]
    faces = set()
    for k in range(len(supp) + 1):
        for S in combinations(supp, k):
            b = list(a)
            for i in S:
                b[i] -= 1
            if contains(I, Monomial(tuple(b))):
                faces.add(sum(1 << i for i in S))
    return SimplicialComplexBits(I.n, frozenset(faces))


def lcm_lattice(I: MonomialIdeal) -> np.ndarray:
    """All lcms of nonempty sets of generators, as rows of an int array (lex order)."""
    _, cnt = _box_counts(I, I.lcm_of_generators())
    return np.argwhere(_lattice_mask(cnt))


def _box_counts(I: MonomialIdeal, bound) -> tuple[tuple[int, ...], np.ndarray]:
    # cnt[a] = number of minimal generators dividing x^a, for 0 <= a <= bound.
    shape = tuple(b + 1 for b in bound)
    if int(np.prod(shape, dtype=np.float64)) > BOX_BUDGET:
        raise BudgetExceeded(f"exponent box {shape} is larger than {BOX_BUDGET} cells")
    cnt = np.zeros(shape, dtype=np.int32)
    for g in I.gens:
        if all(x <= b for x, b in zip(g, bound)):
            cnt[g] += 1
    for axis in range(len(shape)):
        np.cumsum(cnt, axis=axis, out=cnt)
    return shape, cnt


def _shift_down(arr: np.ndarray, axis: int, fill) -> np.ndarray:
    """``out[a] = arr[a - e_axis]``, with ``fill`` where ``a_axis = 0``."""
    out = np.empty_like(arr)
    idx = [slice(None)] * arr.ndim
    idx[axis] = slice(1, None)
    src = [slice(None)] * arr.ndim
    src[axis] = slice(None, -1)
    out[tuple(idx)] = arr[tuple(src)]
    idx[axis] = 0
    out[tuple(idx)] = fill
    return out


def _shift_up(arr: np.ndarray, axis: int, fill) -> np.ndarray:
    """``out[a] = arr[a + e_axis]``, with ``fill`` on the top face of the box."""
    out = np.empty_like(arr)
    idx = [slice(None)] * arr.ndim
    idx[axis] = slice(None, -1)
    src = [slice(None)] * arr.ndim
    src[axis] = slice(1, None)
    out[tuple(idx)] = arr[tuple(src)]
    idx[axis] = -1
    out[tuple(idx)] = fill
    return out


def _lattice_mask(cnt: np.ndarray) -> np.ndarray:
    # a is a join of generators iff every positive coordinate a_i is attained
    # by a generator dividing x^a, i.e. cnt drops when a_i is lowered.
    mask = cnt > 0
    for axis in range(cnt.ndim):
        mask &= cnt > _shift_down(cnt, axis, -1)
    return mask


@dataclass
class DepthReport:
    ideal_id: str
    n: int
    depth: int | None
    pd: int | None
    characteristic: int
    method: str
    status: str = "exact"
    betti_support: list[tuple[int, tuple[int, ...], int]] = field(default_factory=list)
    lattice_size: int | None = None
    witness: tuple[int, ...] | None = None
    message: str = ""

    @property
    def known(self) -> bool:
        return self.depth is not None

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal_id,
            "n": self.n,
            "depth": self.depth,
            "pd": self.pd,
            "char": self.characteristic,
            "method": self.method,
            "status": self.status,
            "betti_support": [[i, list(a), b] for i, a, b in self.betti_support],
            "lattice_size": self.lattice_size,
            "witness": list(self.witness) if self.witness is not None else None,
            "message": self.message,
        }


def _subset_offsets(n: int) -> np.ndarray:
    masks = np.arange(1 << n)
    return ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)


def _complex_tables(points: np.ndarray, in_ideal: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    # faces[k, S] is True iff x^(a_k - e_S) is in I.
    n = points.shape[1]
    cand = points[:, None, :] - offsets[None, :, :]
    valid = (cand >= 0).all(axis=2)
    clipped = np.maximum(cand, 0)
    flat = np.ravel_multi_index(tuple(clipped[..., i] for i in range(n)), in_ideal.shape)
    return valid & in_ideal.ravel()[flat]


def _non_cones(faces: np.ndarray, n: int) -> np.ndarray:
    """Rows of ``faces`` whose complex is not a cone (void complexes count as cones)."""
    masks = np.arange(faces.shape[1])
    cone_any = np.zeros(faces.shape[0], dtype=bool)
    for v in range(n):
        lower = masks[(masks >> v & 1) == 0]
        ok = ~faces[:, lower] | faces[:, lower | (1 << v)]
        cone_any |= ok.all(axis=1)
    return ~cone_any


def betti_numbers(
    I: MonomialIdeal, p: int = DEFAULT_PRIME, lattice_budget: int | None = None
) -> tuple[list[tuple[int, tuple[int, ...], int]], int]:
    """Nonzero multigraded Betti numbers ``(i, a, beta_{i,a}(I))`` and the lattice size."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if I.unit or I.is_zero:
        raise ValueError("Betti numbers need a proper nonzero ideal")
    budget = LATTICE_BUDGET if lattice_budget is None else lattice_budget
    n = I.n
    if (1 << n) > FACE_BUDGET:
        raise BudgetExceeded(f"2^{n} candidate faces exceed the face budget {FACE_BUDGET}")
    _, cnt = _box_counts(I, I.lcm_of_generators())
    in_ideal = cnt > 0
    points = np.argwhere(_lattice_mask(cnt))
    if len(points) > budget:
        raise BudgetExceeded(f"lcm lattice has {len(points)} elements (budget {budget})")
    offsets = _subset_offsets(n)
    chunk = max(1, _CHUNK_CELLS // (offsets.shape[0] * n))
    out = []
    for start in range(0, len(points), chunk):
        block = points[start : start + chunk]
        faces = _complex_tables(block, in_ideal, offsets)
        for k in np.nonzero(_non_cones(faces, n))[0]:
            C = SimplicialComplexBits(n, frozenset(np.nonzero(faces[k])[0].tolist()))
            for i, h in enumerate(reduced_homology_ranks(C, p)):
                if h:
                    out.append((i, tuple(int(x) for x in block[k]), h))
    out.sort()
    return out, len(points)


def depth_quotient(
    I: MonomialIdeal,
    p: int = DEFAULT_PRIME,
    lattice_budget: int | None = None,
    ideal_id: str = "",
) -> DepthReport:
    """``depth(S/I)`` by Auslander-Buchsbaum from the Betti numbers of ``I``.

    Over budget the report has ``depth=None`` and status ``"unknown"``.
    """
    if I.unit or I.is_zero:
        raise ValueError("depth_quotient needs a proper nonzero ideal")
    try:
        betti, size = betti_numbers(I, p, lattice_budget)
    except BudgetExceeded as exc:
        return DepthReport(ideal_id, I.n, None, None, p, "betti", "unknown", message=str(exc))
    pd_ideal = max(i for i, _, _ in betti)
    pd = pd_ideal + 1
    support = [(i + 1, a, b) for i, a, b in betti]
    return DepthReport(ideal_id, I.n, I.n - pd, pd, p, "betti", "exact", support, size)


def depth_zero_witness(
    I: MonomialIdeal, bound=None, candidates=()
) -> Monomial | None:
    """A monomial ``u`` not in ``I`` with ``x_i u`` in ``I`` for every ``i``.

    Explicit ``candidates`` are tried first, then all monomials with exponents
    at most ``bound`` (default: the lcm of the generators) in order of degree.
    ``None`` only says that no witness lies below the bound.
    """
    n = I.n
    if I.unit:
        return None
    for c in candidates:
        if _is_socle(I, c):
            return c
    if I.is_zero:
        return None
    g = I.lcm_of_generators()
    bound = g if bound is None else tuple(bound.exponents if isinstance(bound, Monomial) else bound)
    if any(b < x for b, x in zip(bound, g)):
        raise ValueError(f"bound {bound} is below the generator exponents {g}")
    _, cnt = _box_counts(I, bound)
    in_ideal = cnt > 0
    socle = ~in_ideal
    for axis in range(n):
        socle &= _shift_up(in_ideal, axis, False)
    found = np.argwhere(socle)
    if not len(found):
        return None
    degrees = found.sum(axis=1)
    best = found[degrees == degrees.min()]
    return Monomial(tuple(int(x) for x in best[0]))


def _is_socle(I: MonomialIdeal, u: Monomial) -> bool:
    if contains(I, u):
        return False
    return all(contains(I, u * Monomial.var(I.n, i)) for i in range(1, I.n + 1))
