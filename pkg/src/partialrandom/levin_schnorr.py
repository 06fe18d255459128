"""Finite content of the generalized Levin-Schnorr theorem.

Two conversions connect the sides of a dual pair: a complexity witness
yields a test (level ``i`` collects the strings compressed by at least
``i``), and a test yields a witness (strings at level ``2i`` get value
``|σ| - i``). Both are exact at finite scale and verified by exact checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complexity import kfunction, norm, ring
from .duality import sqrt_rule_member
from .dyadic import Dyadic
from .premeasure import PreMeasure
from .report import Report


@dataclass(frozen=True)
class TestFamily:
    """Levels ``0..i_max`` of a candidate test; levels past the end are empty."""

    __test__ = False  # not a pytest class

    levels: tuple  # of frozenset

    @classmethod
    def of(cls, levels: Iterable[Iterable[str]]) -> TestFamily:
        return cls(tuple(frozenset(lv) for lv in levels))

    @property
    def i_max(self) -> int:
        return len(self.levels) - 1

    def level(self, i: int) -> frozenset:
        return self.levels[i] if 0 <= i < len(self.levels) else frozenset()


def tests_from_witness(r: Iterable[tuple[str, int]], i_max: int) -> TestFamily:
    """Level ``i`` is ``{σ : K^r(σ) <= |σ| - i}``."""
    k = kfunction(r)
    return TestFamily(tuple(
        frozenset(s for s, d in k.items() if d <= len(s) - i) for i in range(i_max + 1)
    ))


tests_from_witness.__test__ = False  # keep pytest from collecting imports of it


def witness_from_tests(T: TestFamily, first_index: int = 0) -> frozenset:
    """``{(σ, |σ| - i) : σ ∈ level(2i), i >= first_index}``; odd levels are not used.

    With ``first_index = 0`` a subset of norm 0 may draw on every even
    level, whose values only sum to ``4/3``, so the result can leave
    ``m^√``. From ``first_index = 1`` on, norm ``n`` gives at most
    ``(4/3)·4**-n <= 2**-n`` and the result is always a member.
    """
    return frozenset(
        (s, len(s) - i)
        for i in range(first_index, T.i_max // 2 + 1) for s in T.level(2 * i)
    )


def verify_test(m: PreMeasure, T: TestFamily) -> Report:
    """``m(level(i)) <= 2**-i`` at every defined level."""
    rep = Report(f"verify-test[{m}]")
    for i, lv in enumerate(T.levels):
        value = m(lv)
        if value > Dyadic.pow2(-i):
            rep.fail(f"level{i}", (lv, value))
    rep.stats["levels"] = len(T.levels)
    return rep


def verify_witness(m: PreMeasure, A: Iterable[tuple[str, int]], subset_bound: int = 6) -> Report:
    """Whether ``A ∈ m^√``.

    Uses the level-set criterion; when ``|A| <= subset_bound`` every subset
    is also tested against the defining inequality directly.
    """
    A = frozenset(A)
    rep = Report(f"verify-witness[{m}]")
    if not sqrt_rule_member(m, A):
        rep.fail("level-set", A)
    if len(A) <= subset_bound:
        pairs = sorted(A)
        for n in range(1, len(pairs) + 1):
            for s in combinations(pairs, n):
                if m(ring(s)) > Dyadic.pow2(-norm(s)):
                    rep.fail("subset", frozenset(s))
        rep.stats["subsets"] = 2 ** len(pairs)
    rep.stats["pairs"] = len(A)
    return rep


def merge_universal(tests: Sequence[TestFamily], i_max: int) -> TestFamily:
    """``level(i) = ⋃_j tests[j].level(i + j + 1)``.

    Test ``j`` is shifted by ``j + 1`` levels, so the merged value at level
    ``i`` is at most ``Σ_j 2**-(i+j+1) < 2**-i`` by subadditivity.
    """
    return TestFamily(tuple(
        frozenset().union(*(T.level(i + j + 1) for j, T in enumerate(tests)))
        for i in range(i_max + 1)
    ))


@dataclass(frozen=True)
class DeficiencyProfile:
    """``n - K^r(X↾n)`` for ``n = 1..|X|`` (``-inf`` where ``K`` is undefined)."""

    entries: tuple

    @property
    def max_finite(self) -> int | float:
        """The best compression constant witnessed, ``-inf`` if none."""
        return max((e for e in self.entries if e != -math.inf), default=-math.inf)

    def _tail(self) -> tuple:
        n = len(self.entries)
        return self.entries[n - max(1, n // 4):] if n else ()

    @property
    def tail_min(self) -> int | float:
        return min(self._tail(), default=-math.inf)

    @property
    def tail_max(self) -> int | float:
        return max(self._tail(), default=-math.inf)

    def summary(self) -> dict:
        return {
            "length": len(self.entries),
            "max_deficiency": self.max_finite,
            "tail_min": self.tail_min,
            "tail_max": self.tail_max,
        }


def deficiency_profile(X: str, r: Iterable[tuple[str, int]]) -> DeficiencyProfile:
    k = kfunction(r)
    return DeficiencyProfile(tuple(
        n - k[X[:n]] if X[:n] in k else -math.inf for n in range(1, len(X) + 1)
    ))


def valid_tests(m: PreMeasure, candidates: Sequence[Iterable[str]], i_max: int) -> list[TestFamily]:
    """Every family with levels drawn from ``candidates`` that is an ``m``-test."""
    from itertools import product

    per_level = [
        [frozenset(c) for c in candidates if m(frozenset(c)) <= Dyadic.pow2(-i)]
        for i in range(i_max + 1)
    ]
    return [TestFamily(levels) for levels in product(*per_level)]


__all__ = [
    "TestFamily", "tests_from_witness", "witness_from_tests", "verify_test",
    "verify_witness", "merge_universal", "DeficiencyProfile",
    "deficiency_profile", "valid_tests",
]
