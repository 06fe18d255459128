"""The two square-root operators between pre-measures and rules.

``MeasureSqrt(m)`` is the rule of complexities whose every part ``s``
satisfies ``m(ring s) <= 2**-norm(s)``. ``RuleSqrt(R)`` is the pre-measure
giving the cheapest cover of a set by rule elements, each element ``r``
costing ``2**-norm(r)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from .complexity import Rule, kfunction, norm, ring, shift, uniform, union_shift
from .dyadic import ZERO, Dyadic
from .errors import CapExceededError, PartitionLimitError
from .premeasure import PreMeasure
from .report import Report
from .strings import canonical, subsets

DEFAULT_CAP = 32
MAX_PARTITION = 8


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """Set partitions in restricted-growth-string order.

    The first partition is the single block; the last is all singletons.
    """
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def emit():
        blocks: list[list] = [[] for _ in range(max(rgs) + 1)]
        for item, b in zip(items, rgs):
            blocks[b].append(item)
        return blocks

    def walk(i: int, top: int):
        if i == n:
            yield emit()
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from walk(i + 1, max(top, b))

    rgs[0] = 0
    yield from walk(1, 0)


# -- m^√ ----------------------------------------------------------------------


def sqrt_rule_member(m: PreMeasure, r: Iterable[tuple[str, int]]) -> bool:
    """Level-set test: ``m({σ : |σ|-K(σ) >= v}) <= 2**-v`` at every realised level ``v``.

    Equivalent to testing every ``s ⊆ r`` because ``m`` is monotone and the
    level set at ``v`` is the largest part of ``r`` with norm ``v``.
    """
    level = {s: len(s) - d for s, d in kfunction(r).items()}
    for v in set(level.values()):
        if m(frozenset(s for s, lv in level.items() if lv >= v)) > Dyadic.pow2(-v):
            return False
    return True


@dataclass(frozen=True)
class MeasureSqrt(Rule):
    m: PreMeasure = None

    def _member_k(self, k):
        return sqrt_rule_member(self.m, k.items())

    def __str__(self):
        return f"msqrt({self.m})"


# -- R^√ ----------------------------------------------------------------------


def e_max(R: Rule, G: Iterable[str], cap: int = DEFAULT_CAP) -> int | float:
    """Largest ``e`` in ``[-cap, cap]`` with ``uniform(G, e) ∈ R``.

    Returns ``inf`` when membership still holds at ``cap`` and ``-inf`` when
    it fails at ``-cap``. Binary search relies on ``≺``-closure: raising
    ``e`` lowers every value, so membership is downward-monotone in ``e``.
    """
    G = frozenset(G)
    key = ("e_max", G, cap)
    cached = R._cache.get(key)
    if cached is not None:
        return cached
    if R.member(uniform(G, cap)):
        result = math.inf
    elif not R.member(uniform(G, -cap)):
        result = -math.inf
    else:
        lo, hi = -cap, cap  # member at lo, not at hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if R.member(uniform(G, mid)):
                lo = mid
            else:
                hi = mid
        result = lo
    R._cache[key] = result
    return result


class SqrtCover(NamedTuple):
    value: Dyadic
    blocks: tuple  # of (frozenset, e)
    capped: bool


def _block_cost(e: int | float) -> Dyadic | None:
    if e == -math.inf:
        return None
    return Dyadic.pow2(-e)


def sqrt_cover(R: Rule, F: Iterable[str], cap: int = DEFAULT_CAP) -> SqrtCover:
    """Cheapest cover of ``F`` by uniform rule elements, with the witness.

    Replacing a cover element ``r`` by ``uniform(ring(r) ∩ F, norm(r)) ≺ r``
    keeps it in ``R`` at the same cost, and shrinking a block never lowers
    its ``e_max``, so the minimum over set partitions of ``F`` is the
    infimum. Blocks whose ``e_max`` reached the cap count as cost 0 and set
    ``capped``.
    """
    items = canonical(F)
    if not items:
        return SqrtCover(ZERO, (), False)
    if len(items) > MAX_PARTITION:
        raise PartitionLimitError(f"|F| = {len(items)} exceeds {MAX_PARTITION}")
    best = None
    for blocks in set_partitions(items):
        total = ZERO
        chosen = []
        for block in blocks:
            G = frozenset(block)
            e = e_max(R, G, cap)
            cost = _block_cost(e)
            if cost is None:
                break
            total = total + cost
            chosen.append((G, e))
        else:
            if best is None or total < best[0]:
                best = (total, tuple(chosen))
    if best is None:
        raise CapExceededError(f"no cover of {items} with exponents in [-{cap}, {cap}]")
    return SqrtCover(best[0], best[1], any(e == math.inf for _, e in best[1]))


def sqrt_premeasure_eval(R: Rule, F: Iterable[str], cap: int = DEFAULT_CAP) -> Dyadic:
    return sqrt_cover(R, F, cap).value


@dataclass(frozen=True)
class RuleSqrt(PreMeasure):
    R: Rule = None
    cap: int = DEFAULT_CAP

    def _eval(self, F):
        return sqrt_premeasure_eval(self.R, F, self.cap)

    def __str__(self):
        return f"rsqrt({self.R})"


def sqrt_rule(m: PreMeasure) -> MeasureSqrt:
    return MeasureSqrt(m)


def sqrt_premeasure(R: Rule, cap: int = DEFAULT_CAP) -> RuleSqrt:
    return RuleSqrt(R, cap)


# -- propositions ---------------------------------------------------------------


def check_prop7(m: PreMeasure, R: Rule, U: Iterable[str], samples: Sequence[frozenset],
                k_max: int = 3, cap: int = DEFAULT_CAP) -> Report:
    """``R^√`` is a pre-measure and ``m^√`` is a rule, checked exhaustively."""
    from .complexity import check_rule_axioms
    from .premeasure import check_premeasure_axioms

    rep = Report(f"prop7[{m};{R}]")
    rep.add(check_premeasure_axioms(RuleSqrt(R, cap), U, k_max))
    rep.add(check_rule_axioms(MeasureSqrt(m), samples))
    return rep


def check_prop8(m: PreMeasure, k: PreMeasure, j: int, samples: Sequence[frozenset],
                U: Iterable[str] | None = None, k_max: int = 3) -> Report:
    """If ``m <= 2**j k`` on the tested sets then ``r ∈ k^√`` gives ``r^{+j} ∈ m^√``.

    Tested sets default to every ring of a sample. A failed hypothesis is
    reported as a ``hypothesis`` witness; a failed conclusion as a
    ``conclusion`` witness.
    """
    rep = Report(f"prop8[{m};{k};j={j}]")
    family = subsets(U, k_max) if U is not None else sorted({ring(r) for r in samples}, key=len)
    for F in family:
        if m(F) > k(F).scale2(j):
            rep.fail("hypothesis", F)
    mk, mm = MeasureSqrt(k), MeasureSqrt(m)
    tested = 0
    for r in samples:
        if mk.member(r):
            tested += 1
            if not mm.member(shift(r, j)):
                rep.fail("conclusion", r)
    rep.stats.update(sets=len(family), members=tested)
    return rep


def check_msqrtsqrt(m: PreMeasure, U: Iterable[str], k_max: int,
                    cap: int = DEFAULT_CAP) -> Report:
    """``m <= m^√√ <= 2m`` on every ``F ⊆ U`` with ``|F| <= k_max``."""
    rep = Report(f"msqrtsqrt[{m}]")
    mm = RuleSqrt(MeasureSqrt(m), cap)
    capped = 0
    family = subsets(U, k_max)
    for F in family:
        lo, mid = m(F), mm(F)
        if sqrt_cover(mm.R, F, cap).capped:
            capped += 1
        if not (lo <= mid <= lo.scale2(1)):
            rep.fail("sandwich", (F, lo, mid))
    rep.stats.update(sets=len(family), capped=capped)
    return rep


def prop9_witness(R: Rule, r: frozenset, cap: int = DEFAULT_CAP) -> frozenset | None:
    """The ``t ∈ R`` built in the proof of ``R^√√ ⊆ {s : ∃t∈R, s ≺ t^{-2}}``.

    Start from the cheapest uniform cover of ``ring(r)``, merge elements of
    equal norm as ``(t_i ∪ t_j)^{+1}`` until norms are distinct, then take
    ``t_1^{+1} ∪ ... ∪ t_l^{+l}`` in increasing norm.
    """
    cover = sqrt_cover(R, ring(r), cap)
    if cover.capped:
        return None
    ts = [uniform(G, e) for G, e in cover.blocks]
    merged = True
    while merged:
        merged = False
        ts.sort(key=norm)
        for i in range(len(ts) - 1):
            if norm(ts[i]) == norm(ts[i + 1]):
                ts[i:i + 2] = [shift(ts[i] | ts[i + 1], 1)]
                merged = True
                break
    return union_shift(sorted(ts, key=norm))


def least_shift(R: Rule, r: frozenset, c_search: int) -> int | None:
    """Least ``c <= c_search`` with ``r^{+c} ∈ R``.

    By ``≺``-closure this equals the least ``c`` such that ``r ≺ t^{-c}`` for
    some ``t ∈ R``.
    """
    for c in range(c_search + 1):
        if R.member(shift(r, c)):
            return c
    return None


def check_rsqrtsqrt(R: Rule, samples: Sequence[frozenset], c_search: int = 8,
                    cap: int = DEFAULT_CAP) -> Report:
    """``R ⊆ R^√√`` exactly, and the shift constant for ``R^√√`` members.

    Part (b) reports ``max_c``, the empirical constant, and ``max_c_proof``,
    the constant achieved by the proof's own construction.
    """
    rep = Report(f"rsqrtsqrt[{R}]")
    rr = MeasureSqrt(RuleSqrt(R, cap))
    inside = 0
    for r in samples:
        if R.member(r):
            inside += 1
            if not rr.member(r):
                rep.fail("inclusion", r)
    max_c = 0
    max_c_proof = 0
    outer = 0
    for r in samples:
        if not rr.member(r):
            continue
        outer += 1
        c = least_shift(R, r, c_search)
        if c is None:
            rep.fail("no-shift", r)
            continue
        max_c = max(max_c, c)
        t = prop9_witness(R, r, cap)
        if t is not None and r:
            if not R.member(t):
                rep.fail("proof-witness", (r, t))
            kt, kr = kfunction(t), kfunction(r)
            max_c_proof = max(max_c_proof, *(kt[s] - kr[s] for s in kr))
    rep.stats.update(members=inside, outer=outer, max_c=max_c, max_c_proof=max_c_proof)
    return rep


class DualRatio(NamedTuple):
    """Largest ``m/R^√`` and ``R^√/m`` seen, and the least integer constants bounding them."""

    measure_over_sqrt: Fraction
    sqrt_over_measure: Fraction
    c_lower: int
    c_upper: int
    mismatches: list

    @property
    def c(self) -> int:
        return max(self.c_lower, self.c_upper)


def dual_ratio(m: PreMeasure, R: Rule, U: Iterable[str], k_max: int = 3,
               cap: int = DEFAULT_CAP) -> DualRatio:
    """Exact extremal ratios between ``m`` and ``R^√`` over ``F ⊆ U``, ``|F| <= k_max``.

    Sets where exactly one side vanishes cannot be bounded by any constant
    and are returned in ``mismatches``.
    """
    rs = RuleSqrt(R, cap)
    fwd = bwd = Fraction(0)
    mismatches = []
    for F in subsets(U, k_max):
        if not F:
            continue
        a, b = m(F), rs(F)
        if a.is_zero() and b.is_zero():
            continue
        if a.is_zero() or b.is_zero():
            mismatches.append((F, a, b))
            continue
        q = a.to_fraction() / b.to_fraction()
        fwd = max(fwd, q)
        bwd = max(bwd, 1 / q)
    return DualRatio(fwd, bwd, math.ceil(fwd), math.ceil(bwd), mismatches)


def is_dual_candidate(ratio: DualRatio, bound: int) -> bool:
    return not ratio.mismatches and ratio.c <= bound


__all__ = [
    "set_partitions", "sqrt_rule_member", "MeasureSqrt", "e_max", "SqrtCover",
    "sqrt_cover", "sqrt_premeasure_eval", "RuleSqrt", "sqrt_rule",
    "sqrt_premeasure", "check_prop7", "check_prop8", "check_msqrtsqrt",
    "prop9_witness", "least_shift", "check_rsqrtsqrt", "DualRatio",
    "dual_ratio", "is_dual_candidate", "DEFAULT_CAP",
]
