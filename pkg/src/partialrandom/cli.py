"""Command-line workbench.

Exit codes: 0 success or all checks pass, 1 a check failed (or a membership
query answered false), 2 usage, parse or input error, 3 a resource cap was
exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .complexity import Rule
from .duality import DEFAULT_CAP, MeasureSqrt, dual_ratio, sqrt_cover
from .errors import PartialRandomError, ResourceLimitError
from .expr import parse_h, parse_measure, parse_rule
from .fileio import (
    format_complexity, format_test_family, read_bits, read_complexity, read_string_set,
    read_test_family,
)
from .levin_schnorr import (
    deficiency_profile, merge_universal, tests_from_witness, verify_test, verify_witness,
    witness_from_tests,
)
from .premeasure import LEN, PreMeasure
from .report import Report
from .strings import format_set, universe
from .suite import FIXTURES, SCALES, run_suite
from .witness import Generator, generate_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _measure(args) -> PreMeasure:
    if not args.measure:
        raise UsageError("--measure is required")
    return parse_measure(args.measure, default_h=args.h, cap=args.cap)


def _rule(args) -> Rule:
    if not args.rule:
        raise UsageError("--rule is required")
    return parse_rule(args.rule, default_h=args.h, cap=args.cap)


def _report(rep: Report) -> int:
    print("\n".join(rep.lines()))
    return EXIT_OK if rep else EXIT_FAIL


def _answer(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_OK if value else EXIT_FAIL


# -- subcommands --------------------------------------------------------------


def cmd_eval_measure(args) -> int:
    m = _measure(args)
    for path in args.inputs:
        F = read_string_set(path)
        print(f"{m} {format_set(F)} = {m(F)}")
    return EXIT_OK


def cmd_rule_member(args) -> int:
    return _answer(_rule(args).member(read_complexity(args.input)))


def cmd_sqrt_of_measure(args) -> int:
    return _answer(MeasureSqrt(_measure(args)).member(read_complexity(args.input)))


def cmd_sqrt_of_rule(args) -> int:
    R = _rule(args)
    for path in args.inputs:
        F = read_string_set(path)
        cover = sqrt_cover(R, F, args.cap)
        print(f"rsqrt({R}) {format_set(F)} = {cover.value}")
        for G, e in cover.blocks:
            print(f"  block {format_set(G)} e={e}")
        if cover.capped:
            print(f"  note: some block stays a member at the exponent cap {args.cap}")
    return EXIT_OK


def cmd_dual_check(args) -> int:
    m, R = _measure(args), _rule(args)
    U = universe(args.universe)
    ratio = dual_ratio(m, R, U, args.kmax, args.cap)
    rep = Report(f"dual[{m};{R}]")
    for F, a, b in ratio.mismatches:
        rep.fail("zero", (F, a, b))
    if ratio.c > args.bound:
        rep.fail("constant", ratio.c)
    rep.stats.update(
        universe=args.universe, kmax=args.kmax,
        m_over_sqrt=ratio.measure_over_sqrt, sqrt_over_m=ratio.sqrt_over_measure,
        c_lower=ratio.c_lower, c_upper=ratio.c_upper,
    )
    return _report(rep)


def cmd_prop_suite(args) -> int:
    if args.scale not in SCALES:
        raise UsageError(f"unknown scale {args.scale!r}; choose from {', '.join(SCALES)}")
    rep = run_suite(args.scale, cap=args.cap, seed=args.seed, inject=args.inject, emit=print)
    print(rep.line())
    return EXIT_OK if rep else EXIT_FAIL


def cmd_to_tests(args) -> int:
    sys.stdout.write(format_test_family(tests_from_witness(read_complexity(args.input), args.imax)))
    return EXIT_OK


def cmd_to_witness(args) -> int:
    T = read_test_family(args.input)
    sys.stdout.write(format_complexity(witness_from_tests(T, args.first_index)))
    return EXIT_OK


def cmd_merge_tests(args) -> int:
    tests = [read_test_family(p) for p in args.inputs]
    sys.stdout.write(format_test_family(merge_universal(tests, args.imax)))
    return EXIT_OK


def cmd_verify_test(args) -> int:
    return _report(verify_test(_measure(args), read_test_family(args.input)))


def cmd_verify_witness(args) -> int:
    return _report(verify_witness(_measure(args), read_complexity(args.input)))


def cmd_profile(args) -> int:
    X = read_bits(args.bits, args.limit)
    prof = deficiency_profile(X, read_complexity(args.witness))
    for key, value in prof.summary().items():
        print(f"{key}={value}")
    if args.entries:
        for n, e in enumerate(prof.entries, 1):
            if e != float("-inf"):
                print(f"n={n} deficiency={e}")
    return EXIT_OK


def cmd_gen_witness(args) -> int:
    X = read_bits(args.bits, args.limit)
    if not X:
        raise UsageError("the bitstream is empty")
    sys.stdout.write(format_complexity(generate_witness(X, args.strategy)))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _strategy(text: str) -> Generator:
    try:
        return Generator.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _h(text: str):
    try:
        return parse_h(text)
    except PartialRandomError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--h", type=_h, default=LEN,
                        help="weight function for expressions that omit one (default: len)")
    common.add_argument("--measure", help="pre-measure expression, e.g. 'dwt(len)'")
    common.add_argument("--rule", help="rule expression, e.g. 'kp(scaled:1/2)'")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="exponent cap for rule-to-measure covers (default: %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = argparse.ArgumentParser(prog="partialrandom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("eval-measure", cmd_eval_measure, "evaluate a pre-measure on string-set files")
    sp.add_argument("inputs", nargs="+", metavar="SET_FILE")

    sp = add("rule-member", cmd_rule_member, "test a complexity table for rule membership")
    sp.add_argument("input", metavar="COMPLEXITY_FILE")

    sp = add("sqrt-of-measure", cmd_sqrt_of_measure, "test membership in the rule m^√")
    sp.add_argument("input", metavar="COMPLEXITY_FILE")

    sp = add("sqrt-of-rule", cmd_sqrt_of_rule, "evaluate the pre-measure R^√ and show the cover")
    sp.add_argument("inputs", nargs="+", metavar="SET_FILE")

    sp = add("dual-check", cmd_dual_check, "compare a pre-measure with the √ of a rule")
    sp.add_argument("--universe", type=int, default=2, help="maximum string length")
    sp.add_argument("--kmax", type=int, default=3, help="maximum set size")
    sp.add_argument("--bound", type=int, default=4, help="largest acceptable constant")

    sp = add("prop-suite", cmd_prop_suite, "run the aggregated property suite")
    sp.add_argument("scale", help="tiny or small")
    sp.add_argument("--inject", choices=sorted(FIXTURES),
                    help="add a deliberately broken fixture that must be caught")

    sp = add("to-tests", cmd_to_tests, "turn a complexity table into a test family")
    sp.add_argument("input", metavar="COMPLEXITY_FILE")
    sp.add_argument("--imax", type=int, default=3, help="highest level (default: %(default)s)")

    sp = add("to-witness", cmd_to_witness, "turn a test family into a complexity table")
    sp.add_argument("input", metavar="TEST_FILE")
    sp.add_argument("--first-index", type=int, default=0,
                    help="skip even levels below twice this index (1 repairs level 0)")

    sp = add("merge-tests", cmd_merge_tests, "merge test families into one")
    sp.add_argument("inputs", nargs="*", metavar="TEST_FILE")
    sp.add_argument("--imax", type=int, default=3, help="highest level (default: %(default)s)")

    sp = add("verify-test", cmd_verify_test, "check the level bounds of a test family")
    sp.add_argument("input", metavar="TEST_FILE")

    sp = add("verify-witness", cmd_verify_witness, "check that a complexity table lies in m^√")
    sp.add_argument("input", metavar="COMPLEXITY_FILE")

    sp = add("profile", cmd_profile, "deficiency profile of a bit sequence")
    sp.add_argument("bits", metavar="BIT_FILE")
    sp.add_argument("witness", metavar="COMPLEXITY_FILE")
    sp.add_argument("--limit", type=int, help="read at most this many bits")
    sp.add_argument("--entries", action="store_true", help="also list every finite entry")

    sp = add("gen-witness", cmd_gen_witness, "emit a kp(len) witness for a bit sequence")
    sp.add_argument("bits", metavar="BIT_FILE")
    sp.add_argument("--strategy", type=_strategy, default=Generator(),
                    help="runlength or blockcode:<b> (default: runlength)")
    sp.add_argument("--limit", type=int, help="read at most this many bits")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, PartialRandomError, OSError, ValueError) as exc:
        print(f"error: {str(exc) or type(exc).__name__}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
