"""Flat-file formats.

All formats are line-oriented. ``@`` denotes the empty string, ``#`` starts
a comment (whole line or trailing) and blank lines are ignored. Block files
group string lines under ``[tree <i>]`` or ``[level <i>]`` headers.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from .errors import FormatError
from .strings import canonical, format_string, parse_string

_HEADER = re.compile(r"^\[(\w+)\s+(\d+)\]$")


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _string(token: str, source: str, no: int) -> str:
    try:
        return parse_string(token)
    except ValueError:
        raise FormatError(f"{source}:{no}: not a binary string: {token!r}") from None


def _int(token: str, source: str, no: int, natural: bool = False) -> int:
    try:
        v = int(token)
    except ValueError:
        raise FormatError(f"{source}:{no}: not an integer: {token!r}") from None
    if natural and v < 0:
        raise FormatError(f"{source}:{no}: expected a natural number, got {v}")
    return v


def _read(path: str | Path) -> tuple[str, str]:
    path = Path(path)
    return path.read_text(), str(path)


def _arity(fields: list[str], n: int, source: str, no: int) -> None:
    if len(fields) != n:
        raise FormatError(f"{source}:{no}: expected {n} field(s), got {len(fields)}")


# -- parsing from text ------------------------------------------------------


def parse_string_set(text: str, source: str = "<text>") -> frozenset:
    out = set()
    for no, fields in _lines(text):
        _arity(fields, 1, source, no)
        out.add(_string(fields[0], source, no))
    return frozenset(out)


def parse_pairs(text: str, source: str = "<text>", natural: bool = False) -> dict[str, int]:
    """``<string> <int>`` lines as a mapping; a repeated string is an error."""
    out: dict[str, int] = {}
    for no, fields in _lines(text):
        _arity(fields, 2, source, no)
        s = _string(fields[0], source, no)
        if s in out:
            raise FormatError(f"{source}:{no}: duplicate entry for {format_string(s)}")
        out[s] = _int(fields[1], source, no, natural)
    return out


def parse_complexity(text: str, source: str = "<text>") -> frozenset:
    """``<string> <signed-int>`` lines; repeated strings are allowed."""
    out = set()
    for no, fields in _lines(text):
        _arity(fields, 2, source, no)
        out.add((_string(fields[0], source, no), _int(fields[1], source, no)))
    return frozenset(out)


def parse_mode(text: str, source: str = "<text>") -> frozenset:
    out = set()
    for no, fields in _lines(text):
        _arity(fields, 2, source, no)
        out.add((_string(fields[0], source, no), _string(fields[1], source, no)))
    return frozenset(out)


def parse_blocks(text: str, tag: str, source: str = "<text>") -> dict[int, frozenset]:
    blocks: dict[int, set] = {}
    current = None
    for no, fields in _lines(text):
        head = _HEADER.match(" ".join(fields))
        if head:
            if head.group(1) != tag:
                raise FormatError(f"{source}:{no}: expected a [{tag} <i>] header")
            current = int(head.group(2))
            if current in blocks:
                raise FormatError(f"{source}:{no}: duplicate block [{tag} {current}]")
            blocks[current] = set()
            continue
        if current is None:
            raise FormatError(f"{source}:{no}: string before the first [{tag} <i>] header")
        _arity(fields, 1, source, no)
        blocks[current].add(_string(fields[0], source, no))
    return {i: frozenset(v) for i, v in blocks.items()}


def _dense(blocks: dict[int, frozenset]) -> tuple:
    """Blocks ``0..max`` in order, missing ones empty."""
    top = max(blocks, default=-1)
    return tuple(blocks.get(i, frozenset()) for i in range(top + 1))


def parse_bits(text: str, limit: int | None = None, source: str = "<text>") -> str:
    bits = "".join(text.split())
    bad = set(bits) - {"0", "1"}
    if bad:
        raise FormatError(f"{source}: bitstream contains {''.join(sorted(bad))!r}")
    return bits if limit is None else bits[:limit]


# -- reading files ----------------------------------------------------------


def read_string_set(path) -> frozenset:
    return parse_string_set(*_read(path))


def read_h_table(path) -> dict[str, int]:
    return parse_pairs(*_read(path), natural=True)


def read_complexity(path) -> frozenset:
    return parse_complexity(*_read(path))


def read_mode(path) -> frozenset:
    return parse_mode(*_read(path))


def read_trees(path) -> tuple:
    text, source = _read(path)
    return _dense(parse_blocks(text, "tree", source))


def read_test_family(path):
    from .levin_schnorr import TestFamily

    text, source = _read(path)
    return TestFamily(_dense(parse_blocks(text, "level", source)))


def read_bits(path, limit: int | None = None) -> str:
    text, source = _read(path)
    return parse_bits(text, limit, source)


# -- writing ----------------------------------------------------------------


def format_string_set(F) -> str:
    return "".join(f"{format_string(s)}\n" for s in canonical(F))


def format_complexity(r) -> str:
    rows = sorted(r, key=lambda p: (len(p[0]), p[0], p[1]))
    return "".join(f"{format_string(s)} {d}\n" for s, d in rows)


def format_blocks(levels, tag: str) -> str:
    out = []
    for i, F in enumerate(levels):
        out.append(f"[{tag} {i}]\n")
        out.append(format_string_set(F))
    return "".join(out)


def format_test_family(T) -> str:
    return format_blocks(T.levels, "level")


__all__ = [
    "parse_string_set", "parse_pairs", "parse_complexity", "parse_mode",
    "parse_blocks", "parse_bits", "read_string_set", "read_h_table",
    "read_complexity", "read_mode", "read_trees", "read_test_family",
    "read_bits", "format_string_set", "format_complexity", "format_blocks",
    "format_test_family",
]
