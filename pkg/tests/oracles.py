"""Brute-force reference computations, independent of the library's algorithms."""

from fractions import Fraction
from itertools import combinations
from math import prod

from typec_power.polycore import LaurentPoly


def subset_elementary(k, letters, table):
    """Sum over all k-subsets of a list of monomial polynomials."""
    total = LaurentPoly.zero(table)
    if k < 0:
        return total
    one = LaurentPoly.constant(table, 1)
    for combo in combinations(letters, k):
        term = one
        for x in combo:
            term = term * x
        total = total + term
    return total


def numeric_elementary(k, values):
    if k < 0 or k > len(values):
        return Fraction(0)
    return sum((prod(c, start=Fraction(1)) for c in combinations(values, k)), Fraction(0))


def numeric_alphabet(lams, N=1):
    return [Fraction(x) ** N for x in lams] + [Fraction(1, x) ** N for x in lams]


def numeric_char(k, lams, N=1):
    alpha = numeric_alphabet(lams, N)
    return numeric_elementary(k, alpha) - numeric_elementary(k - 2, alpha)
