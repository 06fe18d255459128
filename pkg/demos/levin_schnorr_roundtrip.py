"""Complexity witnesses and tests, converted back and forth.

Level i of the test collects strings compressed by at least i. The reverse
direction gives each string at level 2i the value |s| - i. Reading from level
0 can overshoot the budget, so starting at level 2 is the safe choice.
"""

from partialrandom import (
    KP, LEN, Dwt, RuleSqrt, TestFamily, tests_from_witness, verify_test, verify_witness,
    witness_from_tests,
)

r = {("00", 1), ("11", 2), ("0101", 3)}
T = tests_from_witness(r, 3)
print("witness", sorted(r), "kp member:", KP(LEN).member(r))
for i, level in enumerate(T.levels):
    print(f"  level {i}: {sorted(level)}")
print(verify_test(RuleSqrt(KP(LEN)), T).line())

d = Dwt(LEN)
T = TestFamily.of([{""}, set(), {"00"}])
print("\ntest with levels", [sorted(lv) for lv in T.levels], verify_test(d, T).line())
for first in (0, 1):
    A = witness_from_tests(T, first)
    print(f"  from level {2 * first}: {sorted(A)} -> {verify_witness(d, A).line()}")
