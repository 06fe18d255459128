"""Description modes: finite tables of ``(description, output)`` pairs.

A mode ``M`` induces the complexity ``K^M(σ) = min{|τ| : (τ, σ) ∈ M}``. A
mode rule says which finite tables are admissible; ``hat`` turns a table
into a finite complexity and ``HatRule`` turns a mode rule into a rule on
complexities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complexity import Rule, kfunction
from .errors import SearchBoundError
from .strings import canonical, check_string, is_prefix_free, universe

Mode = frozenset  # frozenset[tuple[str, str]], (description, output)

KINDS = ("prefix_free", "plain")


def mode(pairs: Iterable[tuple[str, str]]) -> frozenset:
    return frozenset((check_string(t), check_string(s)) for t, s in pairs)


def mode_k(M: Iterable[tuple[str, str]], s: str) -> int | float:
    return min((len(t) for t, out in M if out == s), default=math.inf)


def outputs(M: Iterable[tuple[str, str]]) -> frozenset:
    return frozenset(s for _, s in M)


def is_functional(M: Iterable[tuple[str, str]]) -> bool:
    seen: dict[str, str] = {}
    for t, s in M:
        if seen.setdefault(t, s) != s:
            return False
    return True


@dataclass(frozen=True)
class ModeRule:
    """``plain``: each description has one output. ``prefix_free``: also a prefix-free description set."""

    kind: str = "prefix_free"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown mode rule {self.kind!r}")

    def member(self, r: Iterable[tuple[str, str]]) -> bool:
        r = list(r)
        if not is_functional(r):
            return False
        return self.kind == "plain" or is_prefix_free({t for t, _ in r})

    def __str__(self):
        return self.kind


PREFIX_FREE = ModeRule("prefix_free")
PLAIN = ModeRule("plain")


def mode_member(R: ModeRule, r: Iterable[tuple[str, str]]) -> bool:
    return R.member(r)


def mode_combine(r: Iterable[tuple[str, str]], s: Iterable[tuple[str, str]]) -> frozenset:
    return frozenset(("0" + t, x) for t, x in r) | frozenset(("1" + t, x) for t, x in s)


def hat(r: Iterable[tuple[str, str]]) -> frozenset:
    """``{(σ, |τ|) : (τ, σ) ∈ r}``."""
    return frozenset((s, len(t)) for t, s in r)


def hat_witness(R: ModeRule, s: Iterable[tuple[str, int]], max_desc_len: int) -> frozenset | None:
    """A mode ``r ∈ R`` with descriptions of length ``<= max_desc_len`` and ``s ≺ hat(r)``.

    One description per output suffices: it must be no longer than the
    smallest value paired with that output. Outputs are served in order of
    that bound, trying the longest allowed descriptions first, with full
    backtracking. Returns ``None`` when no such mode exists.
    """
    k = kfunction(s)
    if any(d < 0 for d in k.values()):
        return None
    order = sorted(k, key=lambda x: (k[x], len(x), x))
    bound = {x: min(k[x], max_desc_len) for x in order}
    pool = {
        b: sorted(universe(b), key=lambda t: (-len(t), t))
        for b in set(bound.values())
    }
    prefix_free = R.kind == "prefix_free"
    chosen: dict[str, str] = {}
    used: set[str] = set()

    def budget_ok(i: int) -> bool:
        # Kraft: the remaining codewords must fit in the unused measure
        spent = sum(Fraction(1, 1 << len(t)) for t in used)
        need = sum(Fraction(1, 1 << bound[x]) for x in order[i:])
        return spent + need <= 1

    def compatible(t: str) -> bool:
        if t in used:
            return False
        if not prefix_free:
            return True
        return not any(u.startswith(t) or t.startswith(u) for u in used)

    def place(i: int) -> bool:
        if i == len(order):
            return True
        if prefix_free and not budget_ok(i):
            return False
        x = order[i]
        for t in pool[bound[x]]:
            if compatible(t):
                chosen[x] = t
                used.add(t)
                if place(i + 1):
                    return True
                used.discard(t)
                del chosen[x]
        return False

    if not place(0):
        return None
    witness = frozenset((t, x) for x, t in chosen.items())
    assert R.member(witness)
    return witness


def hat_rule_member(R: ModeRule, s: Iterable[tuple[str, int]], max_desc_len: int) -> bool:
    """Whether ``s ≺ hat(r)`` for some ``r ∈ R`` with descriptions up to ``max_desc_len``.

    Raises ``SearchBoundError`` when no witness exists within the bound but
    some value of ``s`` exceeds it, so a longer bound might succeed.
    """
    s = frozenset(s)
    if hat_witness(R, s, max_desc_len) is not None:
        return True
    if any(d > max_desc_len for _, d in s):
        raise SearchBoundError(
            f"no {R.kind} mode with descriptions of length <= {max_desc_len}"
        )
    return False


@dataclass(frozen=True)
class HatRule(Rule):
    """``{s : ∃ r ∈ R, s ≺ hat(r)}`` as a rule on finite complexities."""

    mode_rule: ModeRule = PREFIX_FREE
    max_desc_len: int = 8

    def _member_k(self, k):
        return hat_rule_member(self.mode_rule, k.items(), self.max_desc_len)

    def __str__(self):
        return f"hat({self.mode_rule})"


def kraft_sum(M: Iterable[tuple[str, str]]):
    """``Σ 2**-K^M(σ)`` over the outputs of ``M``, exactly."""
    from .dyadic import Dyadic, dsum

    M = list(M)
    return dsum(Dyadic.pow2(-mode_k(M, s)) for s in canonical(outputs(M)))


def mode_graph(M: Iterable[tuple[str, str]]) -> frozenset:
    """``{(σ, K^M(σ)) : σ an output of M}``."""
    M = list(M)
    return frozenset((s, mode_k(M, s)) for s in outputs(M))


__all__ = [
    "Mode", "mode", "mode_k", "outputs", "is_functional", "ModeRule",
    "PREFIX_FREE", "PLAIN", "mode_member", "mode_combine", "hat",
    "hat_witness", "hat_rule_member", "HatRule", "kraft_sum", "mode_graph",
]
