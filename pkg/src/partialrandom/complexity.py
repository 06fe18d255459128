"""Finite complexity functions and rules on them.

A finite complexity is a ``frozenset`` of ``(sigma, d)`` pairs with ``d`` any
integer, read as ``K(σ) = min{d : (σ, d) ∈ r}``. A rule is a family of
finite complexities containing ``∅``, closed downward under ``≺`` and
closed under ``(r ∪ s)^{+1}``. Rules here are predicates with exact,
memoised membership.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .premeasure import LEN, HSpec
from .report import MAX_WITNESSES, Report
from .strings import canonical, check_string, leaves, max_weight_antichain

FiniteComplexity = frozenset  # frozenset[tuple[str, int]]

INF = math.inf


def complexity(pairs: Iterable[tuple[str, int]]) -> frozenset:
    return frozenset((check_string(s), int(d)) for s, d in pairs)


def kfunction(r: Iterable[tuple[str, int]]) -> dict[str, int]:
    """``σ -> K^r(σ)`` on the ring of ``r``."""
    k: dict[str, int] = {}
    for s, d in r:
        if s not in k or d < k[s]:
            k[s] = d
    return k


def k_of(r: Iterable[tuple[str, int]], s: str) -> int | float:
    return min((d for t, d in r if t == s), default=INF)


def ring(r: Iterable[tuple[str, int]]) -> frozenset:
    return frozenset(s for s, _ in r)


def shift(r: Iterable[tuple[str, int]], i: int) -> frozenset:
    return frozenset((s, d + i) for s, d in r)


def norm(r: Iterable[tuple[str, int]]) -> int | float:
    return min((len(s) - d for s, d in r), default=INF)


def stronger(s: Iterable[tuple[str, int]], r: Iterable[tuple[str, int]]) -> bool:
    """``s ≺ r``: every pair of ``s`` is matched in ``r`` by an equal or smaller value."""
    k = kfunction(r)
    return all(sigma in k and k[sigma] <= d for sigma, d in s)


def uniform(F: Iterable[str], e: int) -> frozenset:
    """``{(σ, |σ| - e) : σ ∈ F}``, the canonical complexity of norm ``e``."""
    return frozenset((s, len(s) - e) for s in F)


def union_shift(rs: Sequence[Iterable[tuple[str, int]]]) -> frozenset:
    """``r_1^{+1} ∪ ... ∪ r_n^{+n}``."""
    out: set = set()
    for i, r in enumerate(rs, start=1):
        out |= shift(r, i)
    return frozenset(out)


def optimal_merge(As: Sequence[Iterable[tuple[str, int]]]) -> frozenset:
    """Finite analogue of the optimal complexity: ``⋃_i A_i^{+i}``, ``i`` from 1."""
    return union_shift(As)


def reduce(r: Iterable[tuple[str, int]]) -> frozenset:
    """The pairs ``(σ, K^r(σ))``; equivalent to ``r`` in both directions of ``≺``."""
    return frozenset(kfunction(r).items())


# -- rules ------------------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    """Base class; subclasses decide membership from the K-function.

    ``functional`` rules depend on ``r`` only through ``K^r``; the axiom
    checker exploits this to deduplicate samples.
    """

    functional = True
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def member(self, r: Iterable[tuple[str, int]]) -> bool:
        if self.functional:
            k = kfunction(r)
            key = frozenset(k.items())
        else:
            key = r if isinstance(r, frozenset) else frozenset(r)
            k = None
        try:
            return self._cache[key]
        except KeyError:
            pass
        result = self._member_k(k) if self.functional else self._member_pairs(key)
        self._cache[key] = result
        return result

    def __contains__(self, r) -> bool:
        return self.member(r)

    def _member_k(self, k: dict[str, int]) -> bool:
        raise NotImplementedError

    def _member_pairs(self, r: frozenset) -> bool:
        raise NotImplementedError


def _excess(h: HSpec, k: dict[str, int]) -> dict[str, int]:
    # a(σ) = K(σ) - |σ| + h(σ); the weight of σ is 2**-a(σ)
    return {s: d - len(s) + h(s) for s, d in k.items()}


def _scaled_weights(a: dict[str, int]) -> tuple[dict[str, int], int]:
    # integer weights 2**(top - a) against the threshold 2**top
    top = max(max(a.values(), default=0), 0)
    return {s: 1 << (top - v) for s, v in a.items()}, 1 << top


def _count_ok(a: dict[str, int], antichain: bool) -> bool:
    if not a:
        return True
    top = max(max(a.values()) + 1, 0)
    for n in range(top + 1):
        low = [s for s, v in a.items() if v < n]
        count = len(leaves(low)) if antichain else len(low)
        if count >= 1 << n:
            return False
    return True


@dataclass(frozen=True)
class KP(Rule):
    """``Σ 2**-(d - |σ| + h(σ)) < 1``."""

    h: HSpec = LEN

    def _member_k(self, k):
        weights, one = _scaled_weights(_excess(self.h, k))
        return sum(weights.values()) < one

    def __str__(self):
        return f"kp({self.h})"


@dataclass(frozen=True)
class KA(Rule):
    """The ``kp`` bound on every prefix-free part of the ring."""

    h: HSpec = LEN

    def _member_k(self, k):
        weights, one = _scaled_weights(_excess(self.h, k))
        return max_weight_antichain(weights, 0) < one

    def __str__(self):
        return f"ka({self.h})"


@dataclass(frozen=True)
class KS(Rule):
    """``|{σ : d - |σ| + h(σ) < n}| < 2**n`` for every ``n``."""

    h: HSpec = LEN

    def _member_k(self, k):
        return _count_ok(_excess(self.h, k), antichain=False)

    def __str__(self):
        return f"ks({self.h})"


@dataclass(frozen=True)
class KD(Rule):
    """The ``ks`` counting bound on every prefix-free part of the ring."""

    h: HSpec = LEN

    def _member_k(self, k):
        return _count_ok(_excess(self.h, k), antichain=True)

    def __str__(self):
        return f"kd({self.h})"


@dataclass(frozen=True)
class Intersect(Rule):
    left: Rule = None
    right: Rule = None

    def _member_k(self, k):
        r = frozenset(k.items())
        return self.left.member(r) and self.right.member(r)

    def __str__(self):
        return f"and({self.left},{self.right})"


@dataclass(frozen=True)
class Join(Rule):
    """``R1 ∪ R2 ∪ {(r ∪ s)^{+1} : r ∈ R1, s ∈ R2}``."""

    left: Rule = None
    right: Rule = None

    def _member_k(self, k):
        r = frozenset(k.items())
        if self.left.member(r) or self.right.member(r):
            return True
        down = [(s, d - 1) for s, d in k.items()]
        for mask in range(1 << len(down)):
            a = frozenset(p for j, p in enumerate(down) if mask >> j & 1)
            b = frozenset(p for j, p in enumerate(down) if not mask >> j & 1)
            if self.left.member(a) and self.right.member(b):
                return True
        return False

    def __str__(self):
        return f"or({self.left},{self.right})"


def member(R: Rule, r: Iterable[tuple[str, int]]) -> bool:
    return R.member(r)


# -- sample spaces and the axiom checker ------------------------------------


def sample_space(U: Iterable[str], d_lo: int, d_hi: int, max_size: int) -> list[frozenset]:
    """Every complexity with ring in ``U``, values in ``[d_lo, d_hi]``, at most ``max_size`` pairs."""
    pool = [(s, d) for s in canonical(U) for d in range(d_lo, d_hi + 1)]
    out = []
    for k in range(max_size + 1):
        out.extend(frozenset(c) for c in combinations(pool, k))
    return out


def weakenings(r: frozenset, d_hi: int, size_hi: int) -> Iterator[frozenset]:
    """One-step moves down the ``≺`` order that stay inside the sample box.

    Drop a pair, raise one value by 1, or add a pair at an existing string
    with a value no smaller than its minimum. Any ``s ≺ r`` inside the box
    is reachable from ``r`` by a chain of these moves within the box.
    """
    for p in r:
        yield r - {p}
    for s, d in r:
        if d + 1 <= d_hi:
            yield (r - {(s, d)}) | {(s, d + 1)}
    if len(r) < size_hi:
        for s, kmin in kfunction(r).items():
            for d in range(kmin, d_hi + 1):
                if (s, d) not in r:
                    yield r | {(s, d)}


class _Signatures:
    """Distinct members as rows of K-values over a fixed string list.

    Rows are packed into single integers (mixed radix over the value range,
    with one extra digit for "absent") so that deduplication is a 1-d sort.
    """

    def __init__(self, members: Sequence[frozenset], headroom: int):
        self.strings = canonical({s for r in members for s, _ in r})
        self.index = {s: i for i, s in enumerate(self.strings)}
        values = [d for r in members for _, d in r] or [0]
        self.lo = min(values)
        self.hi = max(values) + headroom
        self.absent = self.hi + 1
        self.base = self.absent - self.lo + 1
        width = len(self.strings)
        if self.base ** max(width, 1) >= 1 << 62:
            raise OverflowError("sample box too large for packed signatures")
        self.weights = self.base ** np.arange(width, dtype=np.int64)
        rows = np.full((len(members), width), self.absent, dtype=np.int64)
        for i, r in enumerate(members):
            for s, d in kfunction(r).items():
                rows[i, self.index[s]] = d
        self.rows = self.unpack(np.unique(self.pack(rows)))

    def pack(self, block: np.ndarray) -> np.ndarray:
        block = np.minimum(block, self.absent)
        return (block - self.lo) @ self.weights

    def unpack(self, keys: np.ndarray) -> np.ndarray:
        digits = (keys[:, None] // self.weights) % self.base
        return digits + self.lo

    def complexity(self, row: np.ndarray) -> frozenset:
        return frozenset(
            (self.strings[j], int(v)) for j, v in enumerate(row) if v < self.absent
        )


def _check_rows(R: Rule, sig: _Signatures, blocks: Iterator[np.ndarray],
                rep: Report, kind: str) -> int:
    keys = np.unique(np.concatenate([np.unique(sig.pack(b)) for b in blocks]))
    for row in sig.unpack(keys):
        r = sig.complexity(row)
        if not R.member(r):
            rep.fail(kind, r)
    return len(keys)


def check_rule_axioms(R: Rule, samples: Sequence[frozenset], *, chain_samples: int = 20000,
                      max_pairs: int = 200000, seed: int = 0,
                      check_id: str | None = None) -> Report:
    """Check the rule axioms and the shifted-union lemma on a sample family.

    * ``∅ ∈ R``;
    * ``≺``-closure: for every sampled member, each one-step weakening
      inside the box spanned by the samples is a member (equivalent to the
      pairwise check when the samples form a full box);
    * ``(r ∪ s)^{+1} ∈ R`` for all pairs of sampled members;
    * ``r_1^{+1} ∪ ... ∪ r_n^{+n} ∈ R`` for all member lists of length 1
      and 2 and a seeded sample of lists of length 3 (stats ``chain1`` to
      ``chain3``).

    For functional rules the pair and list checks run on distinct
    K-functions only. Otherwise pairs are enumerated up to ``max_pairs``
    and then sampled.
    """
    rep = Report(check_id or f"rule-axioms[{R}]")
    rng = random.Random(seed)
    members = [r for r in samples if R.member(r)]
    rep.stats.update(samples=len(samples), members=len(members))
    if not R.member(frozenset()):
        rep.fail("empty", frozenset())
    if not members:
        return rep

    d_hi = max((d for r in samples for _, d in r), default=0)
    size_hi = max(len(r) for r in samples)
    moves = 0
    for r in members:
        for s in weakenings(r, d_hi, size_hi):
            moves += 1
            if not R.member(s):
                rep.fail("downward", (s, r))
    rep.stats["weakenings"] = moves

    if R.functional:
        sig = _Signatures(members, headroom=2)
        rows = sig.rows
        n = len(rows)
        absent = sig.absent

        def up(block, i):
            # shift present values only; absent entries stay absent
            return np.where(block < absent, block + i, absent)

        def unions():
            for i in range(n):
                yield up(np.minimum(rows[i], rows[i:]), 1)

        def chains2():
            for i in range(n):
                yield np.minimum(up(rows[i], 1), up(rows, 2))

        rep.stats["distinct"] = n
        rep.stats["unions"] = _check_rows(R, sig, unions(), rep, "union")
        rep.stats["chain1"] = _check_rows(R, sig, iter([up(rows, 1)]), rep, "chain")
        rep.stats["chain2"] = _check_rows(R, sig, chains2(), rep, "chain")
        pool = [sig.complexity(row) for row in rows]
    else:
        pool = members
        n = len(pool)
        total = n * (n + 1) // 2
        if total <= max_pairs:
            pairs = ((pool[i], pool[j]) for i in range(n) for j in range(i, n))
        else:
            pairs = ((rng.choice(pool), rng.choice(pool)) for _ in range(max_pairs))
        checked = 0
        for a, b in pairs:
            checked += 1
            if not R.member(shift(a | b, 1)):
                rep.fail("union", (a, b))
                if len(rep.witnesses) >= MAX_WITNESSES:
                    break
        rep.stats["unions"] = checked
    for _ in range(chain_samples):
        lst = [rng.choice(pool) for _ in range(3)]
        if not R.member(union_shift(lst)):
            rep.fail("chain", tuple(lst))
            if len(rep.witnesses) >= MAX_WITNESSES:
                break
    rep.stats["chain3"] = chain_samples
    return rep


__all__ = [
    "FiniteComplexity", "complexity", "kfunction", "k_of", "ring", "shift",
    "norm", "stronger", "uniform", "union_shift", "optimal_merge", "reduce",
    "Rule", "KP", "KA", "KS", "KD", "Intersect", "Join", "member",
    "sample_space", "weakenings", "check_rule_axioms", "INF",
]
