"""A pre-measure and a rule, each rebuilt from the other.

dwt(len) weighs a set by sum 2**-|s|; kp(len) is the prefix-free Kraft rule.
m^√ turns the measure into a rule and R^√ turns the rule back into a measure.
The two round trips agree with the originals up to a factor of 2.
"""

from partialrandom import KP, LEN, Dwt, MeasureSqrt, RuleSqrt, dual_ratio, sqrt_cover
from partialrandom.strings import format_set, universe

m, R = Dwt(LEN), KP(LEN)
rs = RuleSqrt(R)

print("R^√ prices a set by its cheapest cover with uniform rule members:")
for F in ({"0"}, {"00", "01"}, {"0", "10", "11"}):
    cover = sqrt_cover(R, F)
    blocks = ", ".join(f"{format_set(G)}@e={e}" for G, e in cover.blocks)
    print(f"  {format_set(F):12} dwt={m(F)!s:8} R^√={rs(F)!s:8} cover: {blocks}")

ms = MeasureSqrt(m)
print("\nm^√ admits a complexity when every part fits its budget:")
for r in ({("0", 0)}, {("0", -1)}, {("0", 1), ("1", 1)}):
    print(f"  {sorted(r)} -> {ms.member(r)}")

print("\nRatio bounds between dwt and kp^√ as the universe grows:")
for n in (2, 3):
    ratio = dual_ratio(m, R, universe(n))
    print(f"  strings of length <= {n}: max m/R^√ = {ratio.measure_over_sqrt}, "
          f"max R^√/m = {ratio.sqrt_over_measure}, constants {ratio.c_lower}, {ratio.c_upper}")
