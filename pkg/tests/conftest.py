from fractions import Fraction

import pytest
from hypothesis import strategies as st

from typec_power.polycore import LaurentPoly, VarTable

XYZ = VarTable(["x1", "x2", "x3"])


def sparse_terms(arity, max_terms=50, lo=-10, hi=10):
    keys = st.tuples(*[st.integers(lo, hi)] * arity)
    return st.dictionaries(keys, st.integers(-10**6, 10**6), max_size=max_terms)


def laurent_polys(table=XYZ, max_terms=50):
    return sparse_terms(table.arity, max_terms).map(lambda t: LaurentPoly(table, t))


nonzero_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool)


@pytest.fixture
def xyz():
    return XYZ


def half(p):
    return p * Fraction(1, 2)
