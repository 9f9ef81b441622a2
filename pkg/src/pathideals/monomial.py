"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed number of variables. A
:class:`MonomialIdeal` always stores its minimal generating set, sorted
lexicographically, so two ideals are equal iff their dataclasses are equal.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Exponents = tuple[int, ...]

#: Largest generator degree ``ideal_power`` is allowed to produce.
MAX_DEGREE = int(os.environ.get("PATHIDEALS_MAX_DEGREE", "64"))


class AmbientMismatch(ValueError):
    """Two objects live in polynomial rings with different variable counts."""


class DegreeBoundExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exponents

    def __post_init__(self) -> None:
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) < 1:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> Monomial:
        """The variable ``x_i`` (1-based) in ``n`` variables."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @classmethod
    def squarefree(cls, n: int, indices: Iterable[int]) -> Monomial:
        """Product of the variables with the given 1-based indices (repeats multiply)."""
        e = [0] * n
        for i in indices:
            e[i - 1] += 1
        return cls(tuple(e))

    @classmethod
    def parse(cls, text: str, n: int) -> Monomial:
        """Parse ``"x1^2*x3"`` (or ``"1"``) into a monomial in ``n`` variables."""
        text = text.strip().replace(" ", "")
        e = [0] * n
        if text in ("", "1"):
            return cls(tuple(e))
        for factor in text.split("*"):
            m = re.fullmatch(r"x_?(\d+)(?:\^(\d+))?", factor)
            if m is None:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} outside 1..{n}")
            e[i - 1] += int(m.group(2) or 1)
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """0-based indices of the variables that occur."""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def _check(self, other: Monomial) -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"{self.n} vs {other.n} variables")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(a * k for a in self.exponents))

    def divides(self, other: Monomial) -> bool:
        return divides(self, other)

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    if a.n != b.n:
        raise AmbientMismatch(f"{a.n} vs {b.n} variables")
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal(vectors: Iterable[Exponents]) -> list[Exponents]:
    # Only a vector of strictly smaller degree can properly divide another one.
    by_degree: dict[int, set[Exponents]] = {}
    for v in vectors:
        by_degree.setdefault(sum(v), set()).add(v)
    kept: list[Exponents] = []
    for deg in sorted(by_degree):
        layer = [v for v in by_degree[deg] if not any(_divides(g, v) for g in kept)]
        kept.extend(layer)
    kept.sort()
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The whole ring is flagged with ``unit=True`` and has no generators;
    the zero ideal has no generators and ``unit=False``.
    """

    n: int
    gens: tuple[Exponents, ...] = ()
    unit: bool = False

    @classmethod
    def from_gens(cls, n: int, gens: Iterable[Monomial | Sequence[int]]) -> MonomialIdeal:
        return minimalize(gens, n=n)

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls(n, tuple(Monomial.var(n, i).exponents for i in range(n, 0, -1)))

    @classmethod
    def whole_ring(cls, n: int) -> MonomialIdeal:
        return cls(n, (), True)

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.gens

    def generators(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def lcm_of_generators(self) -> Exponents:
        """Componentwise maximum of the generator exponents."""
        if not self.gens:
            return (0,) * self.n
        return tuple(map(max, *self.gens)) if len(self.gens) > 1 else self.gens[0]

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def extend(self, extra: int = 1) -> MonomialIdeal:
        """The same ideal in a ring with ``extra`` more (unused) variables."""
        return MonomialIdeal(
            self.n + extra, tuple(g + (0,) * extra for g in self.gens), self.unit
        )

    def permute(self, perm: Sequence[int]) -> MonomialIdeal:
        """Rename variable ``i`` to ``perm[i]`` (0-based)."""
        out = []
        for g in self.gens:
            e = [0] * self.n
            for i, a in enumerate(g):
                e[perm[i]] = a
            out.append(tuple(e))
        return MonomialIdeal(self.n, tuple(sorted(out)), self.unit)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        d: dict = {"n": self.n, "gens": [list(g) for g in self.gens]}
        if self.unit:
            d["unit"] = True
        return d

    @classmethod
    def from_dict(cls, d: dict) -> MonomialIdeal:
        n = int(d["n"])
        if d.get("unit"):
            return cls.whole_ring(n)
        gens = d["gens"]
        if gens and isinstance(gens[0], str):
            return minimalize([Monomial.parse(s, n) for s in gens], n=n)
        return minimalize([tuple(int(x) for x in g) for g in gens], n=n)

    @classmethod
    def from_json(cls, text: str) -> MonomialIdeal:
        return cls.from_dict(json.loads(text))

    def to_strings(self) -> list[str]:
        if self.unit:
            return ["1"]
        return [str(Monomial(g)) for g in self.gens]

    def __str__(self) -> str:
        if self.unit:
            return "(1)"
        return "(" + ", ".join(self.to_strings()) + ")"


def minimalize(gens: Iterable[Monomial | Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    vecs: list[Exponents] = []
    for g in gens:
        e = g.exponents if isinstance(g, Monomial) else tuple(int(x) for x in g)
        if n is None:
            n = len(e)
        elif len(e) != n:
            raise AmbientMismatch(f"generator {e} does not have {n} variables")
        if any(x < 0 for x in e):
            raise ValueError(f"negative exponent in {e}")
        vecs.append(e)
    if n is None:
        raise ValueError("ambient variable count is needed for an empty generator list")
    if any(sum(v) == 0 for v in vecs):
        return MonomialIdeal.whole_ring(n)
    return MonomialIdeal(n, tuple(_minimal(vecs)))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise AmbientMismatch(f"{I.n} vs {J.n} variables")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    """Membership: some generator of ``I`` divides ``u``."""
    if u.n != I.n:
        raise AmbientMismatch(f"{u.n} vs {I.n} variables")
    if I.unit:
        return True
    e = u.exponents
    return any(_divides(g, e) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.unit or J.unit:
        return MonomialIdeal.whole_ring(I.n)
    return MonomialIdeal(I.n, tuple(_minimal(I.gens + J.gens)))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.unit:
        return J
    if J.unit:
        return I
    prods = {tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens}
    return MonomialIdeal(I.n, tuple(_minimal(prods)))


def ideal_power(I: MonomialIdeal, t: int, max_degree: int | None = None) -> MonomialIdeal:
    """Minimal generators of ``I**t``; ``I**0`` is the whole ring.

    Powers are built one factor at a time with minimalization in between.
    Raises :class:`DegreeBoundExceeded` if a generator of the result would
    have degree above ``max_degree`` (default :data:`MAX_DEGREE`).
    """
    if t < 0:
        raise ValueError("negative power")
    if t == 0 or I.unit:
        return MonomialIdeal.whole_ring(I.n)
    bound = MAX_DEGREE if max_degree is None else max_degree
    if I.max_degree() * t > bound:
        raise DegreeBoundExceeded(
            f"generators of degree up to {I.max_degree() * t} exceed the bound {bound}"
        )
    result = I
    for _ in range(t - 1):
        result = ideal_product(result, I)
    return result


def colon_by_monomial(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal ``(I : u)``."""
    if u.n != I.n:
        raise AmbientMismatch(f"{u.n} vs {I.n} variables")
    if I.unit:
        return I
    e = u.exponents
    quotients = [tuple(max(a - b, 0) for a, b in zip(g, e)) for g in I.gens]
    return minimalize(quotients, n=I.n)


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J)`` as the intersection of the colons by the generators of ``J``."""
    _same_ring(I, J)
    if J.unit:
        return I
    result = MonomialIdeal.whole_ring(I.n)
    for g in J.gens:
        result = intersect(result, colon_by_monomial(I, Monomial(g)))
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of generators."""
    _same_ring(I, J)
    if I.unit:
        return J
    if J.unit:
        return I
    lcms = {tuple(map(max, g, h)) for g in I.gens for h in J.gens}
    return MonomialIdeal(I.n, tuple(_minimal(lcms)))


def variable_ideal(n: int, indices: Iterable[int]) -> MonomialIdeal:
    """The monomial prime generated by the variables with 1-based ``indices``."""
    return minimalize([Monomial.var(n, i) for i in indices], n=n)


def squarefree_monomials(n: int) -> Iterable[Monomial]:
    for k in range(n + 1):
        for S in combinations(range(1, n + 1), k):
            yield Monomial.squarefree(n, S)
