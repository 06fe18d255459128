import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import half, ka, kd, kp, ks, length

from partialrandom.complexity import (
    KA, KD, KP, KS, Intersect, Join, check_rule_axioms, k_of, kfunction, norm, optimal_merge,
    ring, sample_space, shift, stronger, uniform, union_shift, weakenings,
)
from partialrandom.errors import MissingHError
from partialrandom.premeasure import HALF, LEN, Table
from partialrandom.strings import universe
from partialrandom.suite import SizeCap

SPACE = sample_space(universe(2), -2, 4, 2)
pairs = st.tuples(st.text("01", max_size=3), st.integers(-3, 5))
complexities = st.frozensets(pairs, max_size=4)


# -- worked examples --------------------------------------------------------------


def test_k_of_ring_shift_norm_examples():
    assert k_of({("0", 2), ("0", 5)}, "0") == 2
    assert k_of(set(), "1") == math.inf
    assert k_of({("1", -1)}, "1") == -1
    assert ring({("0", 1), ("0", 3), ("11", 0)}) == {"0", "11"}
    assert ring(set()) == set()
    assert ring({("", 0)}) == {""}
    assert shift({("0", 1)}, 2) == {("0", 3)}
    assert shift({("0", 1)}, -2) == {("0", -1)}
    assert norm({("00", 1), ("010", 3)}) == 0
    assert norm(set()) == math.inf
    assert norm({("0", -1)}) == 2


def test_stronger_and_uniform_examples():
    assert stronger({("0", 3)}, {("0", 2)})
    assert not stronger({("0", 1)}, {("0", 2)})
    assert stronger(set(), {("1", 0)})
    assert uniform({"00", "01"}, 0) == {("00", 2), ("01", 2)}
    assert uniform(set(), 3) == set()
    assert uniform({"0"}, 1) == {("0", 0)}


def test_union_shift_and_merge_examples():
    assert union_shift([{("0", 1)}, {("0", 1)}]) == {("0", 2), ("0", 3)}
    assert union_shift([]) == set()
    assert union_shift([{("0", 1)}, {("1", 0)}]) == {("0", 2), ("1", 2)}
    assert optimal_merge([{("0", 1)}, {("00", 1)}]) == {("0", 2), ("00", 3)}
    r = frozenset({("0", 1), ("11", -1)})
    assert optimal_merge([r]) == shift(r, 1)
    assert optimal_merge([]) == set()


def test_membership_examples():
    assert KP(LEN).member({("0", 1)})
    assert not KP(LEN).member({("0", 0)})
    assert not KP(LEN).member({("0", 1), ("1", 1)})
    assert KA(LEN).member({("0", 1), ("00", 1)})
    assert not KP(LEN).member({("0", 1), ("00", 1)})
    assert not KS(LEN).member({("0", 0), ("1", 0)})
    assert KS(LEN).member({("0", 0)})


def test_missing_h_propagates():
    with pytest.raises(MissingHError):
        KP(Table.from_mapping({"0": 1})).member({("1", 3)})


# -- brute-force oracles -------------------------------------------------------------


@pytest.mark.parametrize("cls,oracle", [(KP, kp), (KA, ka), (KS, ks), (KD, kd)],
                         ids=["kp", "ka", "ks", "kd"])
@pytest.mark.parametrize("h,oh", [(LEN, length), (HALF, half)], ids=["len", "half"])
def test_rules_match_oracle(cls, oracle, h, oh):
    R = cls(h)
    for r in SPACE:
        assert R.member(r) == oracle(oh, r), r


@given(complexities)
def test_kp_matches_oracle_on_random_tables(r):
    assert KP(LEN).member(r) == kp(length, r)
    assert KD(HALF).member(r) == kd(half, r)


# -- order properties ------------------------------------------------------------------


@given(complexities, complexities, complexities)
def test_stronger_is_a_preorder(a, b, c):
    assert stronger(a, a)
    if stronger(a, b) and stronger(b, c):
        assert stronger(a, c)


@given(complexities, complexities)
def test_more_pairs_only_help(r, extra):
    assert stronger(r, r | extra)


@given(complexities, st.integers(0, 4))
def test_shift_moves_down_and_norm_tracks_it(r, i):
    assert stronger(shift(r, i), r)
    assert stronger(r, shift(r, -i))
    if r:
        assert norm(shift(r, i)) == norm(r) - i


def test_uniformization_lies_below_members():
    R = KP(LEN)
    for r in SPACE:
        if r and R.member(r):
            for e in range(-3, norm(r) + 1):
                for mask in range(1, 1 << len(ring(r))):
                    F = {s for j, s in enumerate(sorted(ring(r))) if mask >> j & 1}
                    assert stronger(uniform(F, e), r)


def test_downward_closure_pairwise_on_the_small_box():
    # the full pairwise check that the weakening chains stand in for
    space = sample_space(universe(1), -1, 2, 2)
    for R in (KP(LEN), KA(HALF), KS(LEN), KD(LEN)):
        members = [r for r in space if R.member(r)]
        for r in members:
            for s in space:
                if stronger(s, r):
                    assert R.member(s), (R, s, r)


def test_weakenings_stay_in_the_box_and_move_down():
    r = frozenset({("0", 1), ("1", 3)})
    moves = set(weakenings(r, 3, 3))
    assert frozenset({("0", 1)}) in moves
    assert frozenset({("0", 2), ("1", 3)}) in moves
    assert frozenset({("0", 1), ("0", 2), ("1", 3)}) in moves
    assert all(stronger(s, r) and len(s) <= 3 for s in moves)
    assert all(d <= 3 for s in moves for _, d in s)


def test_optimal_merge_keeps_every_subset_inside():
    rng = random.Random(3)
    R = KP(LEN)
    members = [r for r in SPACE if R.member(r)]
    for _ in range(300):
        As = rng.sample(members, rng.randint(1, 3))
        merged = sorted(optimal_merge(As))
        for mask in range(1 << len(merged)):
            assert R.member({p for j, p in enumerate(merged) if mask >> j & 1})


# -- combinators --------------------------------------------------------------------------


def test_intersect_is_a_conjunction():
    R = Intersect(KP(LEN), KS(HALF))
    for r in SPACE[:2000]:
        assert R.member(r) == (KP(LEN).member(r) and KS(HALF).member(r))


def test_join_contains_shifted_unions():
    A, B = KP(LEN), KA(HALF)
    J = Join(A, B)
    a, b = frozenset({("0", 1)}), frozenset({("1", 1)})
    assert A.member(a) and B.member(b)
    assert J.member(shift(a | b, 1))
    assert J.member(a) and J.member(b)
    assert not J.member({("", -5)})


def test_join_passes_the_rule_axioms():
    space = sample_space(universe(1), -1, 3, 2)
    assert check_rule_axioms(Join(KP(LEN), KS(HALF)), space)


# -- the axiom checker ------------------------------------------------------------------------


def test_non_rule_fixture_is_caught_on_unions():
    rep = check_rule_axioms(SizeCap(), SPACE)
    assert not rep
    assert "union" in {k for k, _ in rep.witnesses}


def test_rule_axioms_on_a_small_space():
    space = sample_space(universe(2), -1, 3, 2)
    for R in (KP(LEN), KA(LEN), KS(HALF), KD(HALF)):
        rep = check_rule_axioms(R, space)
        assert rep, rep.lines()
        assert rep.stats["chain3"] > 0


def test_literal_pair_reading_breaks_downward_closure():
    # the pair-sum reading of kp: r has weight 3/4 but s ≺ r has weight 1
    def literal(r):
        return sum(Fraction(1, 2 ** d) for _, d in r) < 1

    r = frozenset({("0", 1), ("1", 2)})
    s = frozenset({("0", 1), ("0", 2), ("1", 2)})
    assert stronger(s, r)
    assert literal(r) and not literal(s)
    assert KP(LEN).member(r) and KP(LEN).member(s)
    assert kfunction(s) == kfunction(r)
