"""Line-oriented check reports: ``PASS|FAIL <check-id> key=value ...``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

MAX_WITNESSES = 10


@dataclass
class Report:
    check_id: str
    passed: bool = True
    witnesses: list[tuple[str, Any]] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)
    parts: list["Report"] = field(default_factory=list)

    def fail(self, kind: str, witness: Any) -> None:
        self.passed = False
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append((kind, witness))

    def add(self, part: "Report") -> "Report":
        self.parts.append(part)
        if not part.passed:
            self.passed = False
        return part

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        items = " ".join(f"{k}={_fmt(v)}" for k, v in self.stats.items())
        head = f"{'PASS' if self.passed else 'FAIL'} {self.check_id}"
        return f"{head} {items}".rstrip()

    def lines(self) -> list[str]:
        out = []
        for part in self.parts:
            out.extend(part.lines())
        out.append(self.line())
        for kind, w in self.witnesses:
            out.append(f"  witness {self.check_id} {kind}: {_fmt(w)}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _fmt(v: Any) -> str:
    from .strings import format_set, format_string

    if isinstance(v, frozenset):
        if all(isinstance(x, str) for x in v):
            return format_set(v)
        return "{" + ",".join(
            f"({format_string(s)},{d})" for s, d in sorted(v, key=lambda p: (len(p[0]), p[0], p[1]))
        ) + "}"
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)
