from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import XYZ, laurent_polys, nonzero_rationals, sparse_terms
from typec_power.errors import EvaluationError, InvariantError, SubstitutionError, UsageError
from typec_power.polycore import LaurentPoly, VarTable

Q = VarTable(["q"])
L1 = VarTable(["L1"])


def var(table, name, e=1):
    return LaurentPoly.var(table, name, e)


def test_additive_inverse_is_empty():
    x1 = var(XYZ, "x1")
    z = x1 + (-x1)
    assert z.is_zero()
    assert z.term_map == {}


def test_difference_of_squares():
    q = var(Q, "q")
    qi = var(Q, "q", -1)
    assert (q + qi) * (q - qi) == q ** 2 - q ** -2


def test_square_expansion():
    l = var(L1, "L1")
    li = var(L1, "L1", -1)
    assert (l + li) * (l + li) == LaurentPoly(L1, {(2,): 1, (0,): 2, (-2,): 1})


def test_table_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        var(Q, "q") + var(L1, "L1")


def test_zero_coefficients_are_dropped_on_construction():
    p = LaurentPoly(Q, {(1,): 0, (2,): 3})
    assert p.term_map == {(2,): 3}


def test_exponent_length_checked():
    with pytest.raises(UsageError):
        LaurentPoly(XYZ, {(1, 2): 1})


def test_terms_graded_lex_descending():
    p = LaurentPoly(XYZ, {(0, 0, 1): 1, (1, 0, 0): 1, (0, 0, 0): 1, (1, 1, 0): 1, (-1, 0, 0): 1})
    assert [e for e, _ in p.terms()] == [(1, 1, 0), (1, 0, 0), (0, 0, 1), (0, 0, 0), (-1, 0, 0)]


# substitution


def test_substitute_chebyshev_square():
    f = VarTable(["f1"])
    l, li = var(L1, "L1"), var(L1, "L1", -1)
    p = var(f, "f1") ** 2 - 2
    assert p.substitute({"f1": l + li}, L1) == l ** 2 + li ** 2


def test_substitute_identity():
    p = LaurentPoly(XYZ, {(2, -1, 0): 3, (0, 0, -4): -1, (0, 0, 0): 7})
    assert p.substitute({}) == p
    ident = {v: var(XYZ, v) for v in XYZ}
    assert p.substitute(ident, XYZ) == p


def test_substitute_monomial_power():
    l = var(L1, "L1")
    p = l + var(L1, "L1", -1)
    assert p.substitute({"L1": l ** 3}, L1) == l ** 3 + l ** -3


def test_substitute_negative_exponent_needs_unit():
    l = var(L1, "L1")
    p = var(Q, "q", -1)
    with pytest.raises(SubstitutionError):
        p.substitute({"q": l + 1}, L1)
    # monomial units with sign -1 are fine
    assert p.substitute({"q": -l}, L1) == -(l ** -1)


def test_substitute_explicit_inverse():
    # q -> 2 is not a unit over Z, but the caller may supply its inverse
    p = var(Q, "q", -2) + var(Q, "q")
    half = LaurentPoly.constant(L1, Fraction(1, 2))
    out = p.substitute({"q": LaurentPoly.constant(L1, 2)}, L1, inverses={"q": half})
    assert out == Fraction(1, 4) + 2


@settings(max_examples=60, deadline=None)
@given(laurent_polys(max_terms=15), laurent_polys(max_terms=15))
def test_substitute_is_homomorphism(a, b):
    t = VarTable(["u", "v"])
    u, v = var(t, "u"), var(t, "v")
    images = {"x1": u * v, "x2": -(v ** -1), "x3": u ** 2}
    assert (a * b).substitute(images, t) == a.substitute(images, t) * b.substitute(images, t)
    assert (a + b).substitute(images, t) == a.substitute(images, t) + b.substitute(images, t)


# evaluation


def test_eval_examples():
    q = var(Q, "q")
    assert (q + q ** -1).evaluate({"q": 2}) == Fraction(5, 2)
    assert LaurentPoly.zero(XYZ).evaluate({}) == 0
    t = VarTable(["L1", "L2"])
    p = LaurentPoly(t, {(1, 1): 1, (-1, -1): 1})
    assert p.evaluate({"L1": 2, "L2": 3}) == Fraction(37, 6)


def test_eval_zero_at_negative_exponent():
    with pytest.raises(EvaluationError):
        var(Q, "q", -1).evaluate({"q": 0})
    assert (var(Q, "q") + 1).evaluate({"q": 0}) == 1


point = st.fixed_dictionaries({v: nonzero_rationals for v in XYZ})


@settings(max_examples=100, deadline=None)
@given(laurent_polys(max_terms=12), laurent_polys(max_terms=12), point)
def test_eval_is_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt)


@settings(max_examples=40, deadline=None)
@given(laurent_polys(max_terms=12), point)
def test_eval_agrees_with_substitution(p, pt):
    empty = VarTable([])
    images = {v: LaurentPoly.constant(empty, Fraction(pt[v])) for v in XYZ}
    inverses = {v: LaurentPoly.constant(empty, 1 / Fraction(pt[v])) for v in XYZ}
    assert p.substitute(images, empty, inverses).constant_term() == p.evaluate(pt)


# frobenius


def test_frobenius_examples():
    x1, x2 = var(XYZ, "x1"), var(XYZ, "x2")
    assert (x1 + x2).frobenius(2) == x1 ** 2 + x2 ** 2
    p = x1 * 3 - x2 ** -1
    assert p.frobenius(1) == p
    l = var(L1, "L1")
    assert (l + l ** -1).frobenius(3) == l ** 3 + l ** -3
    with pytest.raises(UsageError):
        p.frobenius(0)


@settings(max_examples=60, deadline=None)
@given(laurent_polys(max_terms=20), laurent_polys(max_terms=20), st.integers(1, 6))
def test_frobenius_is_ring_homomorphism(a, b, N):
    assert (a * b).frobenius(N) == a.frobenius(N) * b.frobenius(N)
    assert (a + b).frobenius(N) == a.frobenius(N) + b.frobenius(N)


# ring laws and canonical form


@settings(max_examples=80, deadline=None)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=80, deadline=None)
@given(sparse_terms(3), sparse_terms(3))
def test_canonical_form(t1, t2):
    a, b = LaurentPoly(XYZ, t1), LaurentPoly(XYZ, t2)
    for r in (a + b, a - b, a * b, -a):
        assert all(c != 0 for c in r.term_map.values())
    # equality of polynomials is equality of their maps
    assert (a == b) == (a.term_map == b.term_map)
    assert (a == b) <= (hash(a) == hash(b))


def test_to_integral():
    p = LaurentPoly(Q, {(1,): Fraction(4, 2)})
    assert p.to_integral().term_map == {(1,): 2}
    with pytest.raises(InvariantError):
        LaurentPoly(Q, {(1,): Fraction(1, 2)}).to_integral()


def test_embed_and_unit_inverse():
    p = LaurentPoly(VarTable(["a"]), {(2,): 5})
    big = VarTable(["b", "a"])
    assert p.embed(big).term_map == {(0, 2): 5}
    with pytest.raises(UsageError):
        p.embed(VarTable(["b"]))
    with pytest.raises(SubstitutionError):
        (var(Q, "q") + 1).unit_inverse()
