"""Concrete complexity witnesses for bit sequences.

Each generator emits at most one pair per power-of-two prefix length
``n = 2**k`` with value at least ``2k + 3``, so ``Σ 2**-d <= Σ_k 2**-(2k+3)
< 1`` and the result is always a ``kp(len)`` member.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

ENTROPY_PRECISION = 64  # entropy is rounded up to a multiple of 1/64


@dataclass(frozen=True)
class Generator:
    strategy: str = "runlength"
    block: int = 8

    def __post_init__(self):
        if self.strategy not in ("runlength", "blockcode"):
            raise ValueError(f"unknown witness strategy {self.strategy!r}")
        if self.block < 1:
            raise ValueError("block length must be positive")

    @classmethod
    def parse(cls, text: str) -> Generator:
        """``runlength`` or ``blockcode:<b>``."""
        name, _, arg = text.partition(":")
        if name == "blockcode":
            return cls("blockcode", int(arg) if arg else 8)
        if arg:
            raise ValueError(f"strategy {name!r} takes no argument")
        return cls(name)

    def __str__(self):
        return f"blockcode:{self.block}" if self.strategy == "blockcode" else self.strategy


RUNLENGTH = Generator()


def _overhead(n: int) -> int:
    return 2 * (n - 1).bit_length() + 3  # 2*ceil(log2 n) + 3


def block_entropy(x: str, b: int) -> Fraction:
    """Empirical entropy per bit of the ``b``-blocks of ``x``, rounded up to 1/64.

    Only complete blocks count; fewer than one block gives 0.
    """
    blocks = Counter(x[i:i + b] for i in range(0, len(x) - b + 1, b))
    total = sum(blocks.values())
    if total == 0:
        return Fraction(0)
    h = -sum(c / total * math.log2(c / total) for c in blocks.values()) / b
    return Fraction(math.ceil(h * ENTROPY_PRECISION - 1e-9), ENTROPY_PRECISION)


def generate_witness(X: str, g: Generator = RUNLENGTH) -> frozenset:
    if not X:
        raise ValueError("the sequence must be non-empty")
    out = set()
    n = 1
    while n <= len(X):
        prefix = X[:n]
        if g.strategy == "runlength":
            if len(set(prefix)) == 1:
                out.add((prefix, _overhead(n)))
        else:
            body = math.ceil(n * block_entropy(prefix, g.block))
            out.add((prefix, body + _overhead(n)))
        n *= 2
    return frozenset(out)


__all__ = ["Generator", "RUNLENGTH", "block_entropy", "generate_witness", "ENTROPY_PRECISION"]
