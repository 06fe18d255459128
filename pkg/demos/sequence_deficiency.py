"""Witness complexities for bit sequences and their deficiency profiles.

A witness is a finite kp(len) member pairing prefixes with upper bounds on
their complexity. The deficiency n - K(X↾n) measures how far a prefix is
compressed. Constant sequences compress almost fully, while coin flips
barely compress at all.
"""

import random

from partialrandom import KP, LEN, Generator, deficiency_profile, generate_witness

rng = random.Random(7)
sequences = {
    "zeros": "0" * 1024,
    "period 4": "0110" * 256,
    "coin flips": "".join(rng.choice("01") for _ in range(1024)),
}

for strategy in ("runlength", "blockcode:4"):
    g = Generator.parse(strategy)
    print(f"strategy {strategy}")
    for name, X in sequences.items():
        r = generate_witness(X, g)
        prof = deficiency_profile(X, r).summary()
        print(f"  {name:10} pairs={len(r):2} kp member={KP(LEN).member(r)} "
              f"max deficiency={prof['max_deficiency']}")
