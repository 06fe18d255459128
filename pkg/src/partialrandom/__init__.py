"""Exact finite-scale toolkit for pre-measures, complexity rules and their duality.

Pre-measures assign dyadic weights to finite string sets; rules are families
of finite complexity tables. The two square-root operators turn one into
the other, and every check in the package runs exhaustively on small
universes of binary strings with exact arithmetic.
"""

from .complexity import (
    KA, KD, KP, KS, Intersect, Join, Rule, check_rule_axioms, complexity, k_of, kfunction,
    member, norm, optimal_merge, ring, sample_space, shift, stronger, uniform, union_shift,
)
from .duality import (
    DEFAULT_CAP, MeasureSqrt, RuleSqrt, check_msqrtsqrt, check_prop7, check_prop8,
    check_rsqrtsqrt, dual_ratio, e_max, sqrt_cover, sqrt_premeasure, sqrt_premeasure_eval,
    sqrt_rule, sqrt_rule_member,
)
from .dyadic import ONE, ZERO, Dyadic
from .errors import (
    BoundedUniverseError, CapExceededError, ExpressionSyntaxError, FormatError,
    MissingHError, PartialRandomError, PartitionLimitError, ResourceLimitError,
    SearchBoundError,
)
from .expr import parse_expression, parse_h, parse_measure, parse_rule
from .levin_schnorr import (
    DeficiencyProfile, TestFamily, deficiency_profile, merge_universal, tests_from_witness,
    verify_test, verify_witness, witness_from_tests,
)
from .modes import (
    PLAIN, PREFIX_FREE, HatRule, ModeRule, hat, hat_rule_member, mode, mode_combine, mode_k,
    mode_member,
)
from .premeasure import (
    HALF, LEN, Dct, Dwt, Length, Min, Pct, PreMeasure, Pwt, Scaled, Star, Sum, Table,
    TreeMixture, check_premeasure_axioms, evaluate, star,
)
from .report import Report
from .strings import universe
from .suite import run_suite
from .witness import Generator, generate_witness

__version__ = "0.1.0"
