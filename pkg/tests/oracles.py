"""Brute-force reference implementations, written straight from the definitions.

Nothing here imports the package: values are plain ``Fraction`` and every
supremum or infimum is taken over an explicit, exhaustive enumeration.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import chain, combinations, product

INF = math.inf


def all_strings(n: int) -> list[str]:
    return ["".join(p) for k in range(n + 1) for p in product("01", repeat=k)]


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def prefix_free(F) -> bool:
    F = list(F)
    return not any(a != b and b.startswith(a) for a in F for b in F)


def p2(e) -> Fraction:
    return Fraction(2) ** (-e)


# -- pre-measures ---------------------------------------------------------------


def dwt(h, F) -> Fraction:
    return sum((p2(h(s)) for s in F), Fraction(0))


def pwt(h, F) -> Fraction:
    return max(dwt(h, P) for P in powerset(F) if prefix_free(P))


def dct(h, F, n_max: int = 40) -> Fraction:
    return max(Fraction(sum(1 for s in F if h(s) < n), 2 ** n) for n in range(n_max))


def pct(h, F) -> Fraction:
    return max(dct(h, P) for P in powerset(F) if prefix_free(P))


def star_by_choices(m, F) -> Fraction:
    """Minimum of ``m`` over the images of all prefix-choice functions on ``F``."""
    F = list(F)
    if not F:
        return Fraction(0)
    options = [[s[:k] for k in range(len(s) + 1)] for s in F]
    return min(m(frozenset(c)) for c in product(*options))


def star_by_covers(m, F, universe) -> Fraction:
    """Minimum of ``m(C)`` over every ``C`` inside ``universe`` that covers ``F``."""
    best = None
    for C in powerset(universe):
        if all(any(s.startswith(t) for t in C) for s in F):
            v = m(frozenset(C))
            best = v if best is None else min(best, v)
    return best


# -- complexities and rules ------------------------------------------------------


def K(r, s):
    return min((d for t, d in r if t == s), default=INF)


def ring(r):
    return {s for s, _ in r}


def norm(r):
    return min((len(s) - d for s, d in r), default=INF)


def excess(h, r):
    """``a(σ) = K^r(σ) - |σ| + h(σ)`` over the ring."""
    return {s: K(r, s) - len(s) + h(s) for s in ring(r)}


def kp(h, r) -> bool:
    return sum((p2(a) for a in excess(h, r).values()), Fraction(0)) < 1


def ka(h, r) -> bool:
    a = excess(h, r)
    return all(sum((p2(a[s]) for s in P), Fraction(0)) < 1
               for P in powerset(a) if prefix_free(P))


def ks(h, r) -> bool:
    a = excess(h, r)
    return all(sum(1 for v in a.values() if v < n) < 2 ** n for n in range(-8, 24))


def kd(h, r) -> bool:
    a = excess(h, r)
    return all(sum(1 for s in P if a[s] < n) < 2 ** n
               for P in powerset(a) if prefix_free(P) for n in range(-8, 24))


def sqrt_rule_member(m, r) -> bool:
    """``∀ s ⊆ r: m(ring s) <= 2**-||s||``, over every subset."""
    return all(m(frozenset(ring(s))) <= p2(norm(s)) for s in powerset(r) if s)


def uniform(G, e):
    return frozenset((s, len(s) - e) for s in G)


def block_cost(rule, G, e_range) -> Fraction | None:
    """Cheapest ``2**-e`` with ``uniform(G, e)`` in the rule, by a linear scan."""
    best = None
    for e in e_range:
        if rule(uniform(G, e)):
            best = e
    return None if best is None else p2(best)


def rsqrt_naive(rule, F, e_range=range(-12, 13)) -> Fraction:
    """Infimum over covers of ``F`` by at most ``|F|`` blocks (overlaps allowed)."""
    F = list(F)
    if not F:
        return Fraction(0)
    blocks = [frozenset(c) for c in powerset(F) if c]
    cost = {G: block_cost(rule, G, e_range) for G in blocks}
    usable = [G for G in blocks if cost[G] is not None]
    best = None
    for k in range(1, len(F) + 1):
        for combo in combinations(usable, k):
            if frozenset().union(*combo) == frozenset(F):
                v = sum(cost[G] for G in combo)
                best = v if best is None else min(best, v)
    return best


def length(s: str) -> int:
    return len(s)


def half(s: str) -> int:
    return -(-len(s) // 2)


# -- modes ------------------------------------------------------------------------


def hat_member(prefix_free_only: bool, s, bound: int) -> bool:
    """Try every assignment of one description (length <= bound) per output of ``s``."""
    outs = sorted(ring(s))
    descs = all_strings(bound)
    for choice in product(descs, repeat=len(outs)):
        if len(set(choice)) < len(choice):
            continue
        if prefix_free_only and not prefix_free(choice):
            continue
        if all(len(t) <= K(s, x) for t, x in zip(choice, outs)):
            return True
    return False
