"""Finite binary strings and finite sets of them.

Strings are plain ``str`` over ``"01"``; a string set is a ``frozenset``.
Iteration helpers return members in canonical order (length, then
lexicographic) so reports are reproducible.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, TypeVar

from .errors import BoundedUniverseError

StringSet = frozenset  # frozenset[str]

UNIVERSE_CAP = 12

T = TypeVar("T")


def check_string(s: str) -> str:
    if not isinstance(s, str) or s.strip("01"):
        raise ValueError(f"not a binary string: {s!r}")
    return s


def string_set(members: Iterable[str]) -> frozenset:
    return frozenset(check_string(s) for s in members)


def canonical_key(s: str) -> tuple[int, str]:
    return (len(s), s)


def canonical(F: Iterable[str]) -> list[str]:
    return sorted(F, key=canonical_key)


def is_prefix(t: str, s: str) -> bool:
    return s.startswith(t)


def prefixes(s: str) -> Iterator[str]:
    """All prefixes of ``s``, from the empty string up to ``s`` itself."""
    for k in range(len(s) + 1):
        yield s[:k]


def is_prefix_free(F: Iterable[str]) -> bool:
    F = set(F)
    for s in F:
        for k in range(len(s)):
            if s[:k] in F:
                return False
    return True


def covers(A: Iterable[str], B: Iterable[str]) -> bool:
    """``A ≺ B``: every member of ``A`` extends some member of ``B``."""
    B = set(B)
    return all(any(p in B for p in prefixes(s)) for s in A)


def in_open(X: str, A: Iterable[str]) -> bool:
    """Whether the finite sequence ``X`` has a prefix in ``A``."""
    A = set(A)
    return any(p in A for p in prefixes(X))


def is_prefix_closed(T: Iterable[str]) -> bool:
    T = set(T)
    return all(s[:-1] in T for s in T if s)


def universe(max_len: int, cap: int = UNIVERSE_CAP) -> frozenset:
    """All strings of length ``<= max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if max_len > cap:
        raise BoundedUniverseError(f"universe({max_len}) exceeds the cap {cap}")
    return frozenset(
        "".join(bits) for n in range(max_len + 1) for bits in product("01", repeat=n)
    )


def subsets(U: Iterable[str], k_max: int) -> list[frozenset]:
    """All subsets of ``U`` with at most ``k_max`` members, smallest first."""
    members = canonical(U)
    out = []
    for k in range(min(k_max, len(members)) + 1):
        out.extend(frozenset(c) for c in combinations(members, k))
    return out


def minimal_elements(F: Iterable[str]) -> frozenset:
    """Members of ``F`` with no proper prefix in ``F``."""
    F = set(F)
    return frozenset(s for s in F if not any(s[:k] in F for k in range(len(s))))


def leaves(F: Iterable[str]) -> frozenset:
    """Members of ``F`` that are not a proper prefix of another member."""
    F = set(F)
    inner = {s[:k] for s in F for k in range(len(s))}
    return frozenset(F - inner)


def max_weight_antichain(weights: dict[str, T], zero: T) -> T:
    """Maximum total weight of a prefix-free subset (non-negative weights).

    The prefix order on a finite string set is a forest; the best antichain
    below a node is either the node alone or the union of the best
    antichains of its children.
    """
    nodes = canonical(weights)
    parent: dict[str, str | None] = {}
    for s in nodes:
        parent[s] = next((s[:k] for k in range(len(s) - 1, -1, -1) if s[:k] in weights), None)
    below: dict[str, T] = {}
    best: dict[str, T] = {}
    for s in reversed(nodes):
        w = weights[s]
        b = below.get(s)
        best[s] = w if b is None or w >= b else b
        p = parent[s]
        if p is not None:
            below[p] = best[s] if p not in below else below[p] + best[s]
    total = zero
    for s in nodes:
        if parent[s] is None:
            total = total + best[s]
    return total


def format_string(s: str) -> str:
    return s if s else "@"


def parse_string(token: str) -> str:
    return "" if token == "@" else check_string(token)


def format_set(F: Iterable[str]) -> str:
    return "{" + ",".join(format_string(s) for s in canonical(F)) + "}"
