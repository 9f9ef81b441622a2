"""Path ideals of lines and cycles, and the closed forms attached to them.

Variables are numbered ``1..n`` at this module's boundary; an index ``j > n``
stands for the variable whose index is congruent to ``j`` modulo ``n``
(see :func:`wrap`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .monomial import (
    Monomial,
    MonomialIdeal,
    ideal_power,
    ideal_sum,
    intersect,
    minimalize,
    variable_ideal,
)


def wrap(j: int, n: int) -> int:
    """The representative of ``j`` in ``{1, ..., n}`` modulo ``n``."""
    return (j - 1) % n + 1


def cyclic_path(n: int, start: int, m: int) -> Monomial:
    """``x_start * x_{start+1} * ... * x_{start+m-1}`` with cyclic indices."""
    return Monomial.squarefree(n, (wrap(start + k, n) for k in range(m)))


def path_ideal(n: int, m: int) -> MonomialIdeal:
    """Products of ``m`` consecutive variables along a path on ``n`` vertices."""
    if not n >= m >= 1:
        raise ValueError(f"path ideal needs n >= m >= 1, got n={n}, m={m}")
    return minimalize(
        [Monomial.squarefree(n, range(i, i + m)) for i in range(1, n - m + 2)], n=n
    )


def cycle_ideal(n: int, m: int) -> MonomialIdeal:
    """Products of ``m`` cyclically consecutive variables on an ``n``-cycle."""
    if not n > m >= 2:
        raise ValueError(f"cycle path ideal needs n > m >= 2, got n={n}, m={m}")
    return minimalize([cyclic_path(n, i, m) for i in range(1, n + 1)], n=n)


def path_ideal_on(n: int, first: int, last: int, m: int) -> MonomialIdeal:
    """Path ideal of length ``m`` on the variables ``x_first..x_last`` inside ``n`` variables.

    Empty (zero ideal) when fewer than ``m`` variables are available.
    """
    starts = range(first, last - m + 2)
    return minimalize([Monomial.squarefree(n, range(i, i + m)) for i in starts], n=n)


def phi(n: int, m: int, t: int) -> int:
    """Closed-form depth of ``S/I_{n,m}^t``."""
    if not (n >= m >= 1 and t >= 1):
        raise ValueError(f"phi needs n >= m >= 1 and t >= 1, got {(n, m, t)}")
    if t > n + 1 - m:
        return m - 1
    a = n - t + 2
    q, r = divmod(a, m + 1)
    return a - q - (q + (r > 0))


def mtv_depth(n: int, t: int) -> int:
    """Depth of ``S/J_{n,2}^t`` for ``2 <= t < ceil((n+1)/2)`` (known closed form)."""
    if not 2 <= t < -(-(n + 1) // 2):
        raise ValueError(f"t={t} outside 2 <= t < ceil((n+1)/2) for n={n}")
    return -(-(n - t + 1) // 3)


@dataclass(frozen=True)
class CycleArithmetic:
    n: int
    m: int
    d: int
    r: int
    s: int
    t0: int
    alpha: int


class InternalError(RuntimeError):
    pass


def cycle_arithmetic(n: int, m: int) -> CycleArithmetic:
    """``d = gcd(n, m)``, ``r = n/d``, ``s = m/d`` and the largest ``t0 <= n-1``
    with ``m*t0 = alpha*n + d`` for a positive integer ``alpha``."""
    if not n > m >= 2:
        raise ValueError(f"need n > m >= 2, got n={n}, m={m}")
    d = gcd(n, m)
    for t0 in range(n - 1, 0, -1):
        alpha, rem = divmod(m * t0 - d, n)
        if rem == 0 and alpha >= 1:
            return CycleArithmetic(n, m, d, n // d, m // d, t0, alpha)
    raise InternalError(f"no t0 for n={n}, m={m}")


def u_ideal(n: int, d: int) -> MonomialIdeal:
    """Intersection of the primes ``(x_j, x_{j+d}, x_{j+2d}, ...)``, ``j = 1..d``."""
    if d < 2 or n % d:
        raise ValueError(f"need d >= 2 dividing n, got n={n}, d={d}")
    primes = [variable_ideal(n, range(j, n + 1, d)) for j in range(1, d + 1)]
    return reduce(intersect, primes)


def w_monomial(n: int, m: int, t: int) -> Monomial:
    """``(x_1...x_n)^alpha * (x_1...x_m)^(t - t0)``; degree ``m*t - d``."""
    ca = cycle_arithmetic(n, m)
    if t < ca.t0:
        raise ValueError(f"t={t} is below t0={ca.t0} for n={n}, m={m}")
    e = [ca.alpha] * n
    for i in range(m):
        e[i] += t - ca.t0
    return Monomial(tuple(e))


def residue_sums(u: Monomial, d: int) -> list[int]:
    """Exponent sums over the variable classes ``x_j, x_{j+d}, ...`` for ``j = 1..d``."""
    return [sum(u.exponents[j::d]) for j in range(d)]


def _class_representatives(v: Monomial, n: int, d: int) -> list[int]:
    """``[l_1, ..., l_d]`` with ``l_j = j (mod d)`` for ``v = x_{l_1}...x_{l_d}``."""
    if v.n != n:
        raise ValueError(f"monomial has {v.n} variables, expected {n}")
    if v.degree != d or any(e > 1 for e in v.exponents):
        raise ValueError(f"{v} is not a squarefree monomial of degree {d}")
    reps = [0] * d
    for i in v.support:
        idx = i + 1
        j = wrap(idx, d)
        if reps[j - 1]:
            raise ValueError(f"{v} has two variables in the class of x_{j} mod {d}")
        reps[j - 1] = idx
    return reps


def factorize_vw(v: Monomial, n: int, m: int) -> list[Monomial]:
    """Write ``v * w`` as ``u_1 * ... * u_t0`` with every ``u_k`` in ``G(J_{n,m})``.

    ``v`` must be a minimal generator of ``U_{n,d}``, ``d = gcd(n, m) >= 2``
    and ``w = (x_1...x_n)^alpha``. The walk starts with the path beginning at
    ``l_d``; after each path it jumps to ``l_j`` (``j < d``) if the path ended
    there, and otherwise continues right after the end of the path.
    """
    ca = cycle_arithmetic(n, m)
    if ca.d < 2:
        raise ValueError(f"gcd({n}, {m}) = 1; nothing to factor")
    reps = _class_representatives(v, n, ca.d)
    jump = set(reps[:-1])
    start = reps[-1]
    paths = []
    for _ in range(ca.t0):
        paths.append(cyclic_path(n, start, m))
        end = wrap(start + m - 1, n)
        start = end if end in jump else wrap(end + 1, n)
    return paths


def path_start(u: Monomial, m: int) -> int:
    """1-based index of the first variable of a cyclic ``m``-path generator."""
    n = u.n
    for i in range(1, n + 1):
        if cyclic_path(n, i, m) == u:
            return i
    raise ValueError(f"{u} is not a cyclic {m}-path in {n} variables")


def prefix_monomial(n: int, k: int) -> Monomial:
    """``x_1 * x_2 * ... * x_k``."""
    return Monomial.squarefree(n, range(1, k + 1))


def prefix_colon_case(n: int, m: int, t: int) -> int:
    if m < 2 or t < 2 or n < m * t - 1:
        raise ValueError(f"need m, t >= 2 and n >= m*t - 1, got {(n, m, t)}")
    if n == m * t - 1:
        return 1
    if n == m * t:
        return 2
    if n <= m * (t + 1):
        return 3
    return 4


def prefix_colon(n: int, m: int, t: int) -> MonomialIdeal:
    """Closed form for ``(J_{n,m}^t : x_1 x_2 ... x_{mt-1})``.

    The four regimes are ``n = mt-1`` (maximal ideal), ``n = mt``
    (``(x_m, x_2m, ..., x_mt)``), ``mt < n <= m(t+1)`` (the same plus
    ``x_n``) and ``n > m(t+1)``, where the ``t``-th power of the path ideal on
    ``x_{mt+1}, ..., x_{n-1}`` is added as well.
    """
    case = prefix_colon_case(n, m, t)
    if case == 1:
        return MonomialIdeal.maximal(n)
    idx = list(range(m, m * t + 1, m))
    if case == 2:
        return variable_ideal(n, idx)
    linear = variable_ideal(n, idx + [n])
    if case == 3:
        return linear
    tail = path_ideal_on(n, m * t + 1, n - 1, m)
    return ideal_sum(linear, ideal_power(tail, t))
