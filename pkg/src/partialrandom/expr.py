"""Text syntax for pre-measure and rule expressions.

Grammar::

    measure := dwt(h) | pwt(h) | dct(h) | pct(h) | sum(m, m) | min(m, m)
             | star(m) | rsqrt(rule) | mix(path)
    rule    := kp(h) | ka(h) | ks(h) | kd(h) | and(R, R) | or(R, R)
             | msqrt(measure)
    h       := len | scaled:p/q | table:path

A weight function may be left out (``dwt`` or ``dwt()``); the default
passed to the parser is used instead. Errors carry the character offset.
"""

from __future__ import annotations

import re
from pathlib import Path

from .complexity import KA, KD, KP, KS, Intersect, Join, Rule
from .duality import DEFAULT_CAP, MeasureSqrt, RuleSqrt
from .errors import ExpressionSyntaxError, FormatError
from .premeasure import (
    LEN, Dct, Dwt, HSpec, Min, Pct, PreMeasure, Pwt, Scaled, Star, Sum, Table,
    TreeMixture,
)

_H_MEASURES = {"dwt": Dwt, "pwt": Pwt, "dct": Dct, "pct": Pct}
_H_RULES = {"kp": KP, "ka": KA, "ks": KS, "kd": KD}
_BINARY = {"sum": Sum, "min": Min, "and": Intersect, "or": Join}
_NAME = re.compile(r"[a-z]+")
_SCALED = re.compile(r"scaled:(\d+)/(\d+)")


class _Parser:
    def __init__(self, text: str, default_h: HSpec, cap: int, base: Path):
        self.text = text
        self.pos = 0
        self.default_h = default_h
        self.cap = cap
        self.base = base

    def error(self, message: str, at: int | None = None):
        raise ExpressionSyntaxError(message, self.pos if at is None else at)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def raw_until_delim(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)":
            self.pos += 1
        return self.text[start:self.pos].strip()

    def name(self) -> tuple[str, int]:
        self.skip()
        found = _NAME.match(self.text, self.pos)
        if not found:
            self.error("expected an identifier")
        self.pos = found.end()
        return found.group(), found.start()

    # h := len | scaled:p/q | table:path
    def h(self) -> HSpec:
        start = self.pos
        if self.peek() == ")":
            return self.default_h
        word, at = self.name()
        if word == "len":
            return LEN
        if word == "scaled":
            self.pos = at
            found = _SCALED.match(self.text, at)
            if not found:
                self.error("expected scaled:<p>/<q>")
            self.pos = found.end()
            p, q = int(found.group(1)), int(found.group(2))
            if q == 0:
                self.error("scaled denominator must be positive", found.start(2))
            return Scaled(p, q)
        if word == "table":
            self.expect(":")
            path = self.raw_until_delim()
            if not path:
                self.error("expected a table path")
            return Table.from_mapping(self.load(path, start, "h table"), path)
        self.error(f"unknown weight function {word!r}", at)

    def load(self, path: str, at: int, what: str):
        from .fileio import read_h_table, read_trees

        full = self.base / path
        try:
            return read_h_table(full) if what == "h table" else read_trees(full)
        except OSError as exc:
            self.error(f"cannot read {what} {path!r}: {exc.strerror}", at)
        except FormatError as exc:
            self.error(f"bad {what}: {exc}", at)

    def optional_h(self) -> HSpec:
        if self.peek() != "(":
            return self.default_h
        self.pos += 1
        h = self.h()
        self.expect(")")
        return h

    def node(self):
        word, at = self.name()
        if word in _H_MEASURES:
            return _H_MEASURES[word](self.optional_h())
        if word in _H_RULES:
            return _H_RULES[word](self.optional_h())
        if word in _BINARY:
            want = PreMeasure if word in ("sum", "min") else Rule
            self.expect("(")
            left = self.typed(want)
            self.expect(",")
            right = self.typed(want)
            self.expect(")")
            return _BINARY[word](left, right)
        if word in ("star", "rsqrt", "msqrt"):
            want = Rule if word == "rsqrt" else PreMeasure
            self.expect("(")
            inner = self.typed(want)
            self.expect(")")
            if word == "star":
                return Star(inner)
            return RuleSqrt(inner, self.cap) if word == "rsqrt" else MeasureSqrt(inner)
        if word == "mix":
            self.expect("(")
            start = self.pos
            path = self.raw_until_delim()
            if not path:
                self.error("expected a tree-family path")
            trees = self.load(path, start, "tree family")
            self.expect(")")
            try:
                return TreeMixture(trees)
            except ValueError as exc:
                self.error(str(exc), start)
        self.error(f"unknown identifier {word!r}", at)

    def typed(self, want: type):
        self.skip()
        at = self.pos
        value = self.node()
        if not isinstance(value, want):
            kind = "pre-measure" if want is PreMeasure else "rule"
            self.error(f"expected a {kind}", at)
        return value

    def parse(self):
        value = self.node()
        self.skip()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return value


def parse_expression(text: str, default_h: HSpec = LEN, cap: int = DEFAULT_CAP,
                     base: str | Path = ".") -> PreMeasure | Rule:
    """Parse a pre-measure or rule expression; relative paths resolve against ``base``."""
    return _Parser(text, default_h, cap, Path(base)).parse()


def parse_measure(text: str, **kwargs) -> PreMeasure:
    value = parse_expression(text, **kwargs)
    if not isinstance(value, PreMeasure):
        raise ExpressionSyntaxError("expected a pre-measure", 0)
    return value


def parse_rule(text: str, **kwargs) -> Rule:
    value = parse_expression(text, **kwargs)
    if not isinstance(value, Rule):
        raise ExpressionSyntaxError("expected a rule", 0)
    return value


def parse_h(text: str, base: str | Path = ".") -> HSpec:
    """A bare weight function, as given to ``--h``."""
    p = _Parser(text, LEN, DEFAULT_CAP, Path(base))
    h = p.h()
    p.skip()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return h


__all__ = ["parse_expression", "parse_measure", "parse_rule", "parse_h"]
