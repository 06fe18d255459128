import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import kp, length

from partialrandom.complexity import KP
from partialrandom.premeasure import LEN
from partialrandom.witness import RUNLENGTH, Generator, block_entropy, generate_witness

BLOCK4 = Generator("blockcode", 4)


def test_runlength_examples():
    r = generate_witness("0" * 16)
    assert ("0" * 16, 11) in r
    assert KP(LEN).member(r)
    assert generate_witness("01") == {("0", 3)}
    assert ("0" * 1024, 23) in generate_witness("0" * 1024)


def test_runlength_values_are_the_overhead():
    r = dict(generate_witness("1" * 40))
    assert r == {"1" * n: 2 * math.ceil(math.log2(n)) + 3 for n in (1, 2, 4, 8, 16, 32)}


def test_empty_input_is_rejected():
    with pytest.raises(ValueError):
        generate_witness("")


def test_generator_parse():
    assert Generator.parse("runlength") == RUNLENGTH
    assert Generator.parse("blockcode:4") == BLOCK4
    assert Generator.parse("blockcode") == Generator("blockcode", 8)
    assert str(BLOCK4) == "blockcode:4"
    for bad in ("lz", "runlength:3", "blockcode:0"):
        with pytest.raises(ValueError):
            Generator.parse(bad)


def test_block_entropy_examples():
    assert block_entropy("0" * 16, 4) == 0
    assert block_entropy("0001" * 4, 4) == 0
    assert block_entropy("00000001", 4) == Fraction(1, 4)  # one bit over a 4-bit block
    assert block_entropy("01", 4) == 0
    assert block_entropy("0001000100100100", 4) == Fraction(3, 8)  # 1.5 bits over 4
    assert block_entropy("000100100100", 4) == Fraction(26, 64)  # log2(3)/4 rounded up


def test_blockcode_pays_for_structure():
    X = "0110" * 64
    r = dict(generate_witness(X, BLOCK4))
    assert r[X] == 19  # zero entropy: only the 2*8 + 3 overhead
    rng = random.Random(1)
    noisy = "".join(rng.choice("01") for _ in range(256))
    assert dict(generate_witness(noisy, BLOCK4))[noisy] > 200


@given(st.text("01", min_size=1, max_size=300), st.sampled_from([RUNLENGTH, BLOCK4, Generator("blockcode", 8)]))
def test_witnesses_are_always_kp_members(X, g):
    r = generate_witness(X, g)
    assert KP(LEN).member(r)
    assert kp(length, r)
    assert all(X.startswith(s) and (len(s) & (len(s) - 1)) == 0 for s, _ in r)
