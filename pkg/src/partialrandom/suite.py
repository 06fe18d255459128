"""The aggregated property suite behind ``prop-suite``.

``tiny`` works on strings of length <= 2 with sets of size <= 3; ``small``
moves the pre-measure checks to length <= 3 with sets of size <= 4. Rule
checks sample complexities with ring in the length-2 universe at both
scales, since the sample space grows as ``(7·values)^size``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .complexity import KA, KD, KP, KS, Rule, check_rule_axioms, sample_space
from .duality import (
    DEFAULT_CAP, RuleSqrt, check_msqrtsqrt, check_prop7, check_prop8,
    check_rsqrtsqrt, dual_ratio,
)
from .dyadic import Dyadic
from .levin_schnorr import (
    TestFamily, merge_universal, tests_from_witness, valid_tests, verify_test, verify_witness,
    witness_from_tests,
)
from .modes import PREFIX_FREE, hat_rule_member, kraft_sum, mode_graph
from .premeasure import (
    HALF, LEN, Dct, Dwt, Min, Pct, PreMeasure, Pwt, Star, Sum, TreeMixture,
    check_premeasure_axioms,
)
from .report import Report
from .strings import canonical, covers, subsets, universe
from .witness import generate_witness


@dataclass(frozen=True)
class Scale:
    name: str
    measure_len: int
    k_max: int
    rule_d: tuple[int, int]
    rule_size: int
    mode_pairs: int
    test_imax: int


SCALES = {
    "tiny": Scale("tiny", 2, 3, (-1, 3), 2, 2, 2),
    "small": Scale("small", 3, 4, (-2, 4), 3, 3, 4),
}


# -- deliberately broken fixtures -------------------------------------------


@dataclass(frozen=True)
class SquareCount(PreMeasure):
    """``|F|**2 / 8``: zero on ∅ and monotone, but not subadditive."""

    def _eval(self, F):
        return Dyadic(len(F) ** 2, -3)

    def __str__(self):
        return "fixture-square-count"


@dataclass(frozen=True)
class SizeCap(Rule):
    """``{r : |r| <= 2}`` counted in pairs: not closed under shifted unions."""

    functional = False

    def _member_pairs(self, r):
        return len(r) <= 2

    def __str__(self):
        return "fixture-size-cap"


FIXTURES = {"non-premeasure": SquareCount(), "non-rule": SizeCap()}


# -- individual sections ------------------------------------------------------


def _measures(U) -> list[PreMeasure]:
    base = [cls(h) for cls in (Dwt, Pwt, Dct, Pct) for h in (LEN, HALF)]
    trees = (frozenset(universe(2)), frozenset({"", "0", "00", "01"}), frozenset({"", "1"}))
    return base + [
        Sum(Dwt(LEN), Pct(HALF)),
        # truncation at 1: the constant side is a one-tree mixture over the whole universe
        Min(Dwt(LEN), TreeMixture((frozenset(U),))),
        TreeMixture(trees),
        Star(Dwt(HALF)),
    ]


def _star_monotone(m: PreMeasure, U, k_max: int) -> Report:
    """``A ≺ B`` implies ``m*(A) <= m*(B)``."""
    rep = Report(f"star-monotone[{m}]")
    st = Star(m)
    family = subsets(U, k_max)
    pairs = 0
    for A in family:
        for B in family:
            if covers(A, B):
                pairs += 1
                if st(A) > st(B):
                    rep.fail("order", (A, B))
    rep.stats["pairs"] = pairs
    return rep


def _conversions(sc: Scale, samples, cap: int) -> Report:
    rep = Report("levin-schnorr")
    R = KP(LEN)
    m = RuleSqrt(R, cap)
    fwd = Report(f"witness-to-test[{R}]")
    n = 0
    for r in samples:
        if R.member(r):
            n += 1
            part = verify_test(m, tests_from_witness(r, 3))
            if not part:
                fwd.fail("test", r)
    fwd.stats["members"] = n
    rep.add(fwd)

    d = Dwt(LEN)
    tests = valid_tests(d, subsets(universe(2), 7), sc.test_imax)
    back = Report(f"test-to-witness[{d}]")
    seen = set()
    literal_out = 0
    for T in tests:
        even = T.levels[::2]  # the conversion reads even levels only
        if even in seen:
            continue
        seen.add(even)
        # level 0 can push the literal conversion out of m^√; count it, check the repair
        literal_out += not verify_witness(d, witness_from_tests(T))
        if not verify_witness(d, witness_from_tests(T, first_index=1)):
            back.fail("witness", T.levels)
    back.stats.update(tests=len(tests), distinct=len(seen), literal_out=literal_out)
    rep.add(back)

    # the first test of a merge is read from level 1 on, the second from level 2
    merge = Report(f"merge-universal[{d}]")
    firsts = {T.levels[1:] for T in tests}
    seconds = {T.levels[2:] for T in tests}
    for a in firsts:
        for b in seconds:
            T1 = TestFamily((frozenset(),) + a)
            T2 = TestFamily((frozenset(),) * 2 + b)
            if not verify_test(d, merge_universal([T1, T2], sc.test_imax)):
                merge.fail("merge", (a, b))
    merge.stats["pairs"] = len(firsts) * len(seconds)
    rep.add(merge)
    return rep


def _modes(sc: Scale) -> Report:
    rep = Report("mode-hat-coherence[prefix_free]")
    U = canonical(universe(2))
    pool = [(t, s) for t in U for s in U]
    modes = 0
    for k in range(sc.mode_pairs + 1):
        for M in combinations(pool, k):
            if not PREFIX_FREE.member(M):
                continue
            modes += 1
            if kraft_sum(M) > 1:
                rep.fail("kraft", frozenset(M))
            graph = sorted(mode_graph(M))
            bound = max((len(t) for t, _ in M), default=0)
            for j in range(len(graph) + 1):
                for s in combinations(graph, j):
                    if not hat_rule_member(PREFIX_FREE, s, bound):
                        rep.fail("hat", (frozenset(M), frozenset(s)))
    rep.stats["modes"] = modes
    return rep


def _generator() -> Report:
    rep = Report("gen-witness[runlength]")
    for X in ("0" * 64, "1" * 33, "0110" * 8, "1"):
        r = generate_witness(X)
        if not KP(LEN).member(r):
            rep.fail("kp", r)
    return rep


def sections(sc: Scale, cap: int = DEFAULT_CAP, seed: int = 0,
             inject: str | None = None) -> Iterator[Callable[[], Report]]:
    U = universe(sc.measure_len)
    U2 = universe(2)
    samples = sample_space(U2, *sc.rule_d, sc.rule_size)
    for m in _measures(U):
        yield lambda m=m: check_premeasure_axioms(m, U, sc.k_max)
    # prop7 covers rsqrt(kp(len)) as a pre-measure and msqrt(dwt(len)) as a rule
    for R in [cls(h) for cls in (KP, KA, KS, KD) for h in (LEN, HALF)]:
        yield lambda R=R: check_rule_axioms(R, samples, seed=seed)
    if inject == "non-premeasure":
        yield lambda: check_premeasure_axioms(FIXTURES[inject], U, sc.k_max, "fixture-premeasure")
    elif inject == "non-rule":
        yield lambda: check_rule_axioms(FIXTURES[inject], samples, seed=seed, check_id="fixture-rule")
    elif inject is not None:
        raise ValueError(f"unknown fixture {inject!r}")
    yield lambda: check_prop7(Dwt(LEN), KP(LEN), U2, samples, cap=cap)
    yield lambda: check_prop8(Dwt(LEN), Dwt(HALF), 0, samples, U2, 3)
    for m in (Dwt(LEN), Dwt(HALF), Pwt(LEN), Dct(LEN), Star(Dwt(HALF))):
        yield lambda m=m: check_msqrtsqrt(m, U2, 3, cap)
    for R in (KP(LEN), KS(LEN)):
        yield lambda R=R: _rsqrtsqrt(R, samples, cap)
    for mcls, rcls in ((Dwt, KP), (Pwt, KA), (Dct, KS), (Pct, KD)):
        for h in (LEN, HALF):
            yield lambda m=mcls(h), R=rcls(h): _dual(m, R, U2, cap)
    yield lambda: _conversions(sc, samples, cap)
    yield lambda: _star_monotone(Dwt(HALF), U, 3)
    yield lambda: _modes(sc)
    yield _generator


DUAL_BOUND = 4


def _rsqrtsqrt(R: Rule, samples, cap: int) -> Report:
    rep = check_rsqrtsqrt(R, samples, cap=cap)
    if rep.stats["max_c"] > DUAL_BOUND:
        rep.fail("constant", rep.stats["max_c"])
    return rep


def _dual(m: PreMeasure, R: Rule, U, cap: int) -> Report:
    ratio = dual_ratio(m, R, U, 3, cap)
    rep = Report(f"dual[{m};{R}]")
    for F, a, b in ratio.mismatches:
        rep.fail("zero", (F, a, b))
    if ratio.c > DUAL_BOUND:
        rep.fail("constant", ratio.c)
    rep.stats.update(
        m_over_sqrt=ratio.measure_over_sqrt, sqrt_over_m=ratio.sqrt_over_measure,
        c_lower=ratio.c_lower, c_upper=ratio.c_upper,
    )
    return rep


def run_suite(scale: str, cap: int = DEFAULT_CAP, seed: int = 0, inject: str | None = None,
              emit: Callable[[str], None] | None = None) -> Report:
    """Run every section; ``emit`` receives report lines as sections finish."""
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}; choose from {', '.join(SCALES)}")
    total = Report(f"prop-suite[{scale}]")
    start = time.perf_counter()
    for section in sections(SCALES[scale], cap, seed, inject):
        part = total.add(section())
        if emit:
            for line in part.lines():
                emit(line)
    total.stats.update(checks=len(total.parts), seconds=round(time.perf_counter() - start, 1))
    return total


__all__ = ["Scale", "SCALES", "FIXTURES", "SquareCount", "SizeCap", "sections", "run_suite"]
