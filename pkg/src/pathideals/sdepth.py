"""Stanley depth of ``S/I`` through the characteristic poset.

Let ``g`` be the lcm of the minimal generators of ``I`` and ``P`` the set of
exponent vectors ``a <= g`` with ``x^a`` not in ``I``. A partition of ``P`` into
intervals ``[a, b]`` gives a Stanley decomposition whose summand for
``[a, b]`` has the free variables ``{x_i : b_i = g_i}``, and every Stanley
decomposition can be obtained this way. Hence ``sdepth(S/I) >= k`` iff ``P``
splits into intervals whose tops ``b`` all have ``rho(b) >= k``, where
``rho(b) = #{i : b_i = g_i}``.

The decision problem is solved as an exact cover. Elements with
``rho >= k`` may stay singletons, so only the elements with ``rho < k`` must
be covered. If ``c`` is minimal among the uncovered ones, any interval
covering it starts at ``c`` itself, so branching is only over tops.
Sets of poset elements are Python ints used as bitsets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .depth import BudgetExceeded, _box_counts, _shift_down
from .monomial import Monomial, MonomialIdeal, contains

SEARCH_BUDGET = int(os.environ.get("PATHIDEALS_SEARCH_BUDGET", str(10**7)))
#: Largest poset on which the bitset search is attempted.
POSET_BUDGET = int(os.environ.get("PATHIDEALS_POSET_BUDGET", "60000"))
_MEMO_LIMIT = 2_000_000
_MRV_CANDIDATES = 48

Interval = tuple[tuple[int, ...], tuple[int, ...]]


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search stopped after {nodes} nodes")
        self.nodes = nodes


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class CharPoset:
    """Standard monomials below the lcm ``g`` of the generators, ordered componentwise.

    Elements are numbered by degree, then lexicographically, which is a
    linear extension of the order.
    """

    def __init__(self, I: MonomialIdeal, budget: int | None = None):
        if I.unit:
            raise ValueError("the characteristic poset of the whole ring is empty")
        self.ideal = I
        self.n = I.n
        self.g: tuple[int, ...] = I.lcm_of_generators()
        shape, cnt = _box_counts(I, self.g)
        standard = cnt == 0
        # Down-set property: lowering an exponent keeps a monomial outside I.
        for axis in range(self.n):
            assert not (standard & ~_shift_down(standard, axis, True)).any(), "P is not a down-set"
        pts = np.argwhere(standard)
        self.budget = POSET_BUDGET if budget is None else budget
        pts = pts[np.argsort(pts.sum(axis=1), kind="stable")]
        self.points = pts
        self.elements: list[tuple[int, ...]] = [tuple(int(x) for x in p) for p in pts]
        self.index = {e: k for k, e in enumerate(self.elements)}
        garr = np.array(self.g, dtype=np.int64)
        self.rho = (pts == garr).sum(axis=1).astype(int).tolist() if len(pts) else []
        self._standard = standard
        self._down: list[int] | None = None
        self._up: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def rank(self, b) -> int:
        return sum(1 for x, y in zip(b, self.g) if x == y)

    def reach(self) -> list[int]:
        """For each element, the largest ``rho`` of an element above it."""
        if not self.elements:
            return []
        rho_box = np.zeros(self._standard.shape, dtype=np.int64)
        for axis, gi in enumerate(self.g):
            shape = [1] * self.n
            shape[axis] = gi + 1
            rho_box += (np.arange(gi + 1) == gi).reshape(shape)
        val = np.where(self._standard, rho_box, -1)
        for axis in range(self.n):
            flipped = np.flip(val, axis=axis)
            val = np.flip(np.maximum.accumulate(flipped, axis=axis), axis=axis)
        return val[tuple(self.points.T)].tolist()

    def _build_masks(self) -> None:
        N = len(self.elements)
        if N > self.budget:
            raise BudgetExceeded(f"poset has {N} elements (search budget {self.budget})")
        idx = self.index
        down = [0] * N
        for k, a in enumerate(self.elements):
            m = 1 << k
            for i, ai in enumerate(a):
                if ai:
                    m |= down[idx[a[:i] + (ai - 1,) + a[i + 1 :]]]
            down[k] = m
        up = [0] * N
        for k in range(N - 1, -1, -1):
            a = self.elements[k]
            m = 1 << k
            for i, ai in enumerate(a):
                j = idx.get(a[:i] + (ai + 1,) + a[i + 1 :])
                if j is not None:
                    m |= up[j]
            up[k] = m
        self._down, self._up = down, up

    @property
    def down(self) -> list[int]:
        if self._down is None:
            self._build_masks()
        return self._down

    @property
    def up(self) -> list[int]:
        if self._up is None:
            self._build_masks()
        return self._up


def char_poset(I: MonomialIdeal, budget: int | None = None) -> CharPoset:
    return CharPoset(I, budget)


@dataclass
class IntervalPartition:
    g: tuple[int, ...]
    intervals: list[Interval]

    def sdepth(self) -> int:
        """Smallest number of free variables over the summands."""
        return min(sum(1 for x, y in zip(b, self.g) if x == y) for _, b in self.intervals)

    def to_json_list(self) -> list:
        return [[list(a), list(b)] for a, b in self.intervals]


def validate_partition(I: MonomialIdeal, partition: IntervalPartition) -> int:
    """Check a certificate from scratch and return the sdepth it proves.

    The poset is re-enumerated with plain membership tests; every interval
    must lie inside it, intervals must be disjoint and must cover it.
    """
    g = I.lcm_of_generators()
    if tuple(partition.g) != tuple(g):
        raise ValueError(f"certificate cap {partition.g} differs from lcm {g}")
    poset = {
        a for a in product(*(range(x + 1) for x in g)) if not contains(I, Monomial(a))
    }
    seen: set[tuple[int, ...]] = set()
    for a, b in partition.intervals:
        if any(x > y for x, y in zip(a, b)):
            raise ValueError(f"[{a}, {b}] is not an interval")
        if b not in poset:
            raise ValueError(f"top {b} of an interval is not in the poset")
        for c in product(*(range(x, y + 1) for x, y in zip(a, b))):
            if c in seen:
                raise ValueError(f"{c} is covered twice")
            seen.add(c)
    if seen != poset:
        raise ValueError(f"{len(poset - seen)} poset elements are not covered")
    return partition.sdepth()


@dataclass
class SearchStats:
    nodes: int = 0
    dead_hits: int = 0


def sdepth_at_least(
    P: CharPoset,
    k: int,
    budget: int | None = None,
    stats: SearchStats | None = None,
    within: int | None = None,
) -> IntervalPartition | None:
    """A partition of ``P`` with every top of rank ``>= k``, or ``None`` if none exists.

    ``within`` restricts the question to an up-set of ``P`` given as a
    bitset. Raises :class:`SearchBudgetExceeded` when the node budget runs out.
    """
    if k < 0 or k > P.n:
        raise ValueError(f"k={k} outside 0..{P.n}")
    stats = stats if stats is not None else SearchStats()
    N = len(P)
    if k == 0:
        members = range(N) if within is None else _bits(within)
        return IntervalPartition(P.g, [(P.elements[e], P.elements[e]) for e in members])
    reach = P.reach()
    if within is None and any(r < k for r in reach):
        return None
    budget = SEARCH_BUDGET if budget is None else budget
    rho = P.rho
    # An interval [c, b] with rho(b) > k and rho(c) < k splits along a
    # coordinate i with c_i < b_i = g_i into two intervals with tops of rank
    # >= k, so tops of rank exactly k suffice.
    low_mask = 0
    top_mask = 0
    for i, r in enumerate(rho):
        if r < k:
            low_mask |= 1 << i
        elif r == k:
            top_mask |= 1 << i
    down, up = P.down, P.up
    full = (1 << N) - 1
    elements = P.elements

    tops_cache: dict[int, list[int]] = {}

    def tops(c: int) -> list[int]:
        t = tops_cache.get(c)
        if t is None:
            uc = up[c]
            # Smaller intervals first; all tops here have the same rank.
            t = sorted(_bits(uc & top_mask), key=lambda b: ((uc & down[b]).bit_count(), elements[b]))
            tops_cache[c] = t
        return t

    def options(c: int, covered: int) -> list[int]:
        uc = up[c]
        return [b for b in tops(c) if not (uc & down[b] & covered)]

    def choose(uncovered: int) -> tuple[int, list[int]]:
        covered = full ^ uncovered
        lows = uncovered & low_mask
        best_c, best_opts = -1, None
        seen = 0
        for c in _bits(lows):
            if down[c] & lows != 1 << c:
                continue
            opts = options(c, covered)
            if best_opts is None or len(opts) < len(best_opts):
                best_c, best_opts = c, opts
                if len(opts) <= 1:
                    break
            seen += 1
            if seen >= _MRV_CANDIDATES:
                break
        return best_c, best_opts

    def viable(uncovered: int, newly: int) -> bool:
        # Forward check: every uncovered low element below something just
        # covered must still have an interval [e, b] free of covered elements.
        covered = full ^ uncovered
        affected = 0
        for x in _bits(newly):
            affected |= down[x]
        affected &= uncovered & low_mask
        for e in _bits(affected):
            ue = up[e]
            if all(ue & down[b] & covered for b in tops(e)):
                return False
        return True

    start = full if within is None else within
    if any(reach[e] < k for e in _bits(start & low_mask)):
        return None
    if not start & low_mask:
        return IntervalPartition(P.g, sorted((elements[h], elements[h]) for h in _bits(start)))
    dead: set[int] = set()
    c0, opts0 = choose(start)
    if not opts0:
        return None
    # frame: [uncovered set, element being covered, its tops, next top to try]
    stack = [[start, c0, opts0, 0]]
    while stack:
        frame = stack[-1]
        uncovered, c, opts, pos = frame
        if pos == len(opts):
            stack.pop()
            if len(dead) < _MEMO_LIMIT:
                dead.add(uncovered)
            continue
        frame[3] = pos + 1
        b = opts[pos]
        stats.nodes += 1
        if stats.nodes > budget:
            raise SearchBudgetExceeded(stats.nodes)
        block = up[c] & down[b]
        nxt = uncovered & ~block
        if not nxt & low_mask:
            intervals = [(elements[f[1]], elements[f[2][f[3] - 1]]) for f in stack]
            intervals.extend((elements[h], elements[h]) for h in _bits(nxt))
            intervals.sort()
            return IntervalPartition(P.g, intervals)
        if nxt in dead:
            stats.dead_hits += 1
            continue
        if not viable(nxt, block):
            if len(dead) < _MEMO_LIMIT:
                dead.add(nxt)
            continue
        c2, opts2 = choose(nxt)
        if not opts2:
            if len(dead) < _MEMO_LIMIT:
                dead.add(nxt)
            continue
        stack.append([nxt, c2, opts2, 0])
    return None


@dataclass
class SdepthReport:
    ideal_id: str
    n: int
    lo: int | None
    hi: int | None
    certificate: IntervalPartition | None = None
    optimality: dict = field(default_factory=dict)
    nodes: int = 0
    message: str = ""

    @property
    def exact(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def sdepth(self) -> int | None:
        return self.lo if self.exact else None

    @property
    def status(self) -> str:
        if self.exact:
            return "exact"
        return "bracket" if self.lo is not None else "unknown"

    def to_dict(self, certificate: bool = False) -> dict:
        d = {
            "ideal": self.ideal_id,
            "n": self.n,
            "sdepth": self.sdepth,
            "lo": self.lo,
            "hi": self.hi,
            "status": self.status,
            "optimality": self.optimality,
            "nodes": self.nodes,
            "message": self.message,
        }
        if certificate and self.certificate is not None:
            d["g"] = list(self.certificate.g)
            d["certificate"] = self.certificate.to_json_list()
        return d


def sdepth_quotient(
    I: MonomialIdeal,
    budget: int | None = None,
    ideal_id: str = "",
    poset_budget: int | None = None,
) -> SdepthReport:
    """Stanley depth of ``S/I``.

    Candidate values are tried from the largest one allowed by the poset
    downwards; the first feasible value is the answer. If a search runs out of
    budget the report carries a bracket ``[lo, hi]`` instead.
    """
    if I.unit or I.is_zero:
        raise ValueError("sdepth_quotient needs a proper nonzero ideal")
    try:
        P = CharPoset(I, poset_budget)
    except BudgetExceeded as exc:
        return SdepthReport(ideal_id, I.n, None, I.n - 1, message=str(exc))
    hi = min(P.reach())
    total = 0
    optimality = {"k": hi + 1, "reason": "no poset element reaches that many free variables"}
    unresolved: int | None = None
    for k in range(hi, -1, -1):
        stats = SearchStats()
        try:
            cert = sdepth_at_least(P, k, budget, stats)
        except (SearchBudgetExceeded, BudgetExceeded) as exc:
            total += stats.nodes
            if unresolved is None:
                unresolved = k
                optimality = {"k": k, "reason": f"unresolved: {exc}"}
            continue
        total += stats.nodes
        if cert is not None:
            top = k if unresolved is None else unresolved
            return SdepthReport(ideal_id, I.n, k, top, cert, optimality, total)
        optimality = {"k": k, "reason": "exhaustive search", "nodes": stats.nodes}
    raise AssertionError("k = 0 is always feasible")


def sdepth_is_zero(
    I: MonomialIdeal, budget: int | None = None, poset_budget: int | None = None
) -> bool | None:
    """Decide ``sdepth(S/I) = 0`` with a single search at level 1.

    ``None`` when the poset or the search is over budget.
    """
    if I.unit or I.is_zero:
        raise ValueError("sdepth_is_zero needs a proper nonzero ideal")
    try:
        P = CharPoset(I, poset_budget)
        if min(P.reach()) == 0:
            return True
        return sdepth_at_least(P, 1, budget) is None
    except (SearchBudgetExceeded, BudgetExceeded):
        return None
