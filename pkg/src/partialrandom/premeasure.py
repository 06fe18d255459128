"""Pre-measures on finite string sets.

A pre-measure maps a finite set of strings to a non-negative dyadic and is
zero on the empty set, monotone and finitely subadditive. Every class below
is a hashable, immutable expression node; evaluation is exact and memoised
per node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .dyadic import ZERO, Dyadic, dsum
from .errors import MissingHError
from .report import Report
from .strings import (
    is_prefix_closed,  # noqa: F401  (re-exported)
    leaves,
    max_weight_antichain,
    minimal_elements,
    subsets,
)

# -- weight functions -------------------------------------------------------


class HSpec:
    """A recursive weight function ``h: strings -> naturals``."""

    def __call__(self, sigma: str) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Length(HSpec):
    def __call__(self, sigma: str) -> int:
        return len(sigma)

    def __str__(self) -> str:
        return "len"


@dataclass(frozen=True)
class Scaled(HSpec):
    """``h(σ) = ceil(p·|σ| / q)``."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q <= 0:
            raise ValueError("scaled h needs p >= 0 and q > 0")

    def __call__(self, sigma: str) -> int:
        return -((-self.p * len(sigma)) // self.q)

    def __str__(self) -> str:
        return f"scaled:{self.p}/{self.q}"


@dataclass(frozen=True)
class Table(HSpec):
    entries: frozenset  # of (sigma, value)
    source: str = field(default="", compare=False)
    _lookup: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for s, v in self.entries:
            if v < 0:
                raise ValueError("h must take natural values")
            self._lookup[s] = v

    @classmethod
    def from_mapping(cls, mapping: dict[str, int], source: str = "") -> Table:
        return cls(frozenset(mapping.items()), source)

    def __call__(self, sigma: str) -> int:
        try:
            return self._lookup[sigma]
        except KeyError:
            raise MissingHError(sigma) from None

    def __str__(self) -> str:
        return f"table:{self.source}" if self.source else "table"


LEN = Length()
HALF = Scaled(1, 2)


# -- pre-measure expression nodes -------------------------------------------


@dataclass(frozen=True)
class PreMeasure:
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __call__(self, F: Iterable[str]) -> Dyadic:
        F = F if isinstance(F, frozenset) else frozenset(F)
        try:
            return self._cache[F]
        except KeyError:
            pass
        value = self._eval(F) if F else ZERO
        self._cache[F] = value
        return value

    def _eval(self, F: frozenset) -> Dyadic:
        raise NotImplementedError


def _weight(h: HSpec, sigma: str) -> Dyadic:
    return Dyadic.pow2(-h(sigma))


@dataclass(frozen=True)
class Dwt(PreMeasure):
    """Sum of ``2**-h(σ)`` over the set."""

    h: HSpec = LEN

    def _eval(self, F):
        return dsum(_weight(self.h, s) for s in F)

    def __str__(self):
        return f"dwt({self.h})"


@dataclass(frozen=True)
class Pwt(PreMeasure):
    """Largest ``dwt`` of a prefix-free subset."""

    h: HSpec = LEN

    def _eval(self, F):
        return max_weight_antichain({s: _weight(self.h, s) for s in F}, ZERO)

    def __str__(self):
        return f"pwt({self.h})"


def _count_sup(hvals: dict[str, int], antichain: bool) -> Dyadic:
    # n beyond 1 + max h counts all of F and only halves the ratio
    best = ZERO
    top = max(hvals.values()) + 1
    for n in range(top + 1):
        low = [s for s, v in hvals.items() if v < n]
        count = len(leaves(low)) if antichain else len(low)
        best = max(best, Dyadic(count, -n))
    return best


@dataclass(frozen=True)
class Dct(PreMeasure):
    """``sup_n |{σ : h(σ) < n}| / 2**n``."""

    h: HSpec = LEN

    def _eval(self, F):
        return _count_sup({s: self.h(s) for s in F}, antichain=False)

    def __str__(self):
        return f"dct({self.h})"


@dataclass(frozen=True)
class Pct(PreMeasure):
    """Largest ``dct`` of a prefix-free subset.

    For each ``n`` the largest prefix-free subset of ``{σ : h(σ) < n}`` is
    its set of leaves, so the two suprema commute.
    """

    h: HSpec = LEN

    def _eval(self, F):
        return _count_sup({s: self.h(s) for s in F}, antichain=True)

    def __str__(self):
        return f"pct({self.h})"


@dataclass(frozen=True)
class Sum(PreMeasure):
    left: PreMeasure = None
    right: PreMeasure = None

    def _eval(self, F):
        return self.left(F) + self.right(F)

    def __str__(self):
        return f"sum({self.left},{self.right})"


@dataclass(frozen=True)
class Min(PreMeasure):
    """Pointwise minimum.

    Not subadditive in general: ``min(pwt(len), dct(scaled:1/2))`` fails on
    ``{"0"}`` and ``{"1","10","11"}``. Truncating a pre-measure at a
    constant (the other side constant on non-empty sets) is always safe.
    Check other instances with ``check_premeasure_axioms``.
    """

    left: PreMeasure = None
    right: PreMeasure = None

    def _eval(self, F):
        return min(self.left(F), self.right(F))

    def __str__(self):
        return f"min({self.left},{self.right})"


@dataclass(frozen=True)
class TreeMixture(PreMeasure):
    """``Σ_i 2**-i · [F meets T_i]`` over a finite family of trees."""

    trees: tuple = ()

    def __post_init__(self):
        for i, t in enumerate(self.trees):
            if not is_prefix_closed(t):
                raise ValueError(f"tree {i} is not prefix-closed")

    def _eval(self, F):
        return dsum(Dyadic.pow2(-i) for i, t in enumerate(self.trees) if F & t)

    def __str__(self):
        return f"mix({len(self.trees)} trees)"


def prefix_covers(A: frozenset) -> list[frozenset]:
    """All prefix-free ``C`` with ``A ≺ C`` built only from prefixes of ``A``.

    ``A`` must itself be prefix-free. Any cover of ``A`` contains one of
    these, so by monotonicity they are the only candidates for ``m*``.
    """
    stems = {s[:k] for s in A for k in range(len(s) + 1)}

    def below(node: str) -> list[frozenset]:
        options = [frozenset((node,))]
        if node not in A:
            kids = [below(node + b) for b in "01" if node + b in stems]
            for combo in product(*kids):
                options.append(frozenset().union(*combo))
        return options

    return below("") if A else [frozenset()]


@dataclass(frozen=True)
class Star(PreMeasure):
    """``m*(F) = min{ m(C) : F ≺ C }``."""

    inner: PreMeasure = None

    def _eval(self, F):
        A = minimal_elements(F)
        if A != F:
            return self(A)
        return min(self.inner(C) for C in prefix_covers(A))

    def __str__(self):
        return f"star({self.inner})"


def evaluate(m: PreMeasure, F: Iterable[str]) -> Dyadic:
    return m(F)


def star(m: PreMeasure) -> Star:
    return Star(m)


# -- axiom checker ----------------------------------------------------------


def check_premeasure_axioms(m: PreMeasure, U: Iterable[str], k_max: int,
                            check_id: str | None = None) -> Report:
    """Exhaustively test ``m(∅)=0``, monotonicity and subadditivity.

    All ``F1, F2 ⊆ U`` with at most ``k_max`` members are covered.
    Monotonicity is checked along single-element removals, which reaches
    every inclusion ``F1 ⊆ F2`` inside the tested family by transitivity.
    """
    rep = Report(check_id or f"premeasure-axioms[{m}]")
    family = subsets(U, k_max)
    if m(frozenset()) != ZERO:
        rep.fail("empty", m(frozenset()))
    for F in family:
        v = m(F)
        for s in F:
            smaller = F - {s}
            if m(smaller) > v:
                rep.fail("monotone", (smaller, F))
    pairs = 0
    for i, F1 in enumerate(family):
        v1 = m(F1)
        for F2 in family[i:]:
            pairs += 1
            if m(F1 | F2) > v1 + m(F2):
                rep.fail("subadditive", (F1, F2))
    rep.stats.update(sets=len(family), pairs=pairs)
    return rep


def table_h(mapping: dict[str, int], source: str = "") -> Table:
    return Table.from_mapping(mapping, source)


__all__ = [
    "HSpec", "Length", "Scaled", "Table", "LEN", "HALF", "PreMeasure", "Dwt",
    "Pwt", "Dct", "Pct", "Sum", "Min", "TreeMixture", "Star", "evaluate",
    "star", "prefix_covers", "check_premeasure_axioms", "is_prefix_closed",
    "table_h",
]
