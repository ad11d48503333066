import random
from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from oracles import numeric_char, numeric_alphabet, numeric_elementary, subset_elementary
from typec_power.errors import UsageError
from typec_power.polycore import LaurentPoly
from typec_power.symfun import (
    SYMFUN_IDENTITIES,
    LambdaRing,
    branching_rhs,
    char_fund,
    char_fund_power,
    elem_sym,
    verify_symfun_identity,
)


def lam(ring, powers):
    return LaurentPoly.from_exponent_map(ring.table, powers)


def test_elem_sym_examples():
    r1, r2 = LambdaRing(1), LambdaRing(2)
    assert elem_sym(0, r2) == 1
    assert elem_sym(1, r1) == lam(r1, {"L1": 1}) + lam(r1, {"L1": -1})
    expected = (
        lam(r2, {"L1": 1, "L2": 1}) + lam(r2, {"L1": 1, "L2": -1})
        + lam(r2, {"L1": -1, "L2": 1}) + lam(r2, {"L1": -1, "L2": -1}) + 2
    )
    assert elem_sym(2, r2) == expected
    assert elem_sym(-1, r2) == 0 and elem_sym(5, r2) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_elem_sym_matches_subset_enumeration(n):
    ring = LambdaRing(n)
    for k in range(0, 2 * n + 1):
        assert elem_sym(k, ring) == subset_elementary(k, ring.letters(), ring.table)


@pytest.mark.parametrize("n", range(1, 5))
def test_term_count_and_positivity(n):
    ring = LambdaRing(n)
    for k in range(0, 2 * n + 1):
        e = elem_sym(k, ring)
        assert sum(e.term_map.values()) == comb(2 * n, k)
        if k <= n:
            assert all(c > 0 for c in e.term_map.values())


def test_char_fund_examples():
    r1, r2 = LambdaRing(1), LambdaRing(2)
    assert char_fund(1, r1) == lam(r1, {"L1": 1}) + lam(r1, {"L1": -1})
    expected = (
        lam(r2, {"L1": 1, "L2": 1}) + lam(r2, {"L1": 1, "L2": -1})
        + lam(r2, {"L1": -1, "L2": 1}) + lam(r2, {"L1": -1, "L2": -1}) + 1
    )
    assert char_fund(2, r2) == expected
    assert char_fund(2, r1) == 0
    assert char_fund(0, r2) == 1 and char_fund(-1, r2) == 0


def test_char_fund_power_examples():
    r1, r2 = LambdaRing(1), LambdaRing(2)
    assert char_fund_power(1, 2, r1) == lam(r1, {"L1": 2}) + lam(r1, {"L1": -2})
    for k in range(0, 3):
        assert char_fund_power(k, 1, r2) == char_fund(k, r2)
    expected = (
        lam(r2, {"L1": 2, "L2": 2}) + lam(r2, {"L1": 2, "L2": -2})
        + lam(r2, {"L1": -2, "L2": 2}) + lam(r2, {"L1": -2, "L2": -2}) + 1
    )
    assert char_fund_power(2, 2, r2) == expected


@pytest.mark.parametrize("n", range(1, 4))
def test_char_fund_power_is_character_of_powered_alphabet(n):
    ring = LambdaRing(n)
    for N in (2, 3):
        powered = [x.frobenius(N) for x in ring.letters()]
        for k in range(1, n + 1):
            direct = subset_elementary(k, powered, ring.table) - subset_elementary(k - 2, powered, ring.table)
            assert char_fund_power(k, N, ring) == direct


@pytest.mark.parametrize("n", range(1, 4))
def test_symmetry_under_weyl_group(n):
    ring = LambdaRing(n)
    names = ring.table.names
    polys = [elem_sym(k, ring) for k in range(2 * n + 1)] + [char_fund(k, ring) for k in range(n + 1)]
    for perm in permutations(names):
        images = {a: LaurentPoly.var(ring.table, b) for a, b in zip(names, perm)}
        assert all(p.substitute(images, ring.table) == p for p in polys)
    for flip in names:
        images = {flip: LaurentPoly.var(ring.table, flip, -1)}
        assert all(p.substitute(images, ring.table) == p for p in polys)


@pytest.mark.parametrize("name", sorted(SYMFUN_IDENTITIES))
@pytest.mark.parametrize("n", range(1, 6))
def test_identities(name, n):
    assert verify_symfun_identity(name, n)


def test_identity_examples():
    assert verify_symfun_identity("middle-vanish", 3)
    assert verify_symfun_identity("branching", 4)
    assert verify_symfun_identity("e-from-f", 3)
    with pytest.raises(UsageError):
        verify_symfun_identity("nope", 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_middle_vanishing_one_rank_up(n):
    assert char_fund(n + 1, LambdaRing(n)) == 0


def test_randomized_numeric_cross_check():
    rng = random.Random(20261016)
    choices = [-3, -2, -1, 1, 2, 3]
    for _ in range(200):
        n = rng.randint(2, 4)
        lams = [rng.choice(choices) for _ in range(n)]
        point = {f"L{i + 1}": v for i, v in enumerate(lams)}
        ring = LambdaRing(n)
        alpha = numeric_alphabet(lams)
        for k in range(0, 2 * n + 1):
            assert elem_sym(k, ring).evaluate(point) == numeric_elementary(k, alpha)
            # palindrome and e-from-f, numerically
            assert numeric_elementary(k, alpha) == numeric_elementary(2 * n - k, alpha)
            assert sum(numeric_char(j, lams) for j in range(k, -1, -2)) == numeric_elementary(k, alpha)
        for k in range(1, n + 1):
            pair = lams[-1] + 1 / Fraction(lams[-1])
            rhs = pair * numeric_char(k - 1, lams[:-1]) + numeric_char(k - 2, lams[:-1]) + numeric_char(k, lams[:-1])
            assert branching_rhs(k, n).evaluate(point) == rhs == numeric_char(k, lams)
        # middle vanishing at rank n-1
        low = numeric_alphabet(lams[:-1])
        assert numeric_elementary(n, low) == numeric_elementary(n - 2, low)
