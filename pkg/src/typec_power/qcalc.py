"""Quantum integers and exact identity checking for rational functions in q.

Quantum integers with symbolic arguments ``[a*n + b*k + c]`` are encoded by
adjoining invertible variables ``Q = q**n`` and ``K = q**k``, which turns an
identity in ``n`` and ``k`` into a polynomial identity over ``Z[q, Q, K]``
(all Laurent). Rational functions are kept unreduced; equality is tested by
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UsageError
from .polycore import LaurentPoly, VarTable

Q_TABLE = VarTable(["q"])
QQK_TABLE = VarTable(["q", "Q", "K"])


@lru_cache(maxsize=None)
def qint(m: int, table: VarTable = Q_TABLE) -> LaurentPoly:
    """``[m] = q^(m-1) + q^(m-3) + ... + q^(1-m)``, with ``[0] = 0``, ``[-m] = -[m]``."""
    if m < 0:
        return -qint(-m, table)
    i = table.index("q")
    terms = {}
    for j in range(m):
        e = [0] * table.arity
        e[i] = m - 1 - 2 * j
        terms[tuple(e)] = 1
    return LaurentPoly(table, terms)


def qfactorial(m: int, table: VarTable = Q_TABLE) -> LaurentPoly:
    if m < 0:
        raise UsageError(f"quantum factorial of negative integer {m}")
    out = LaurentPoly.constant(table, 1)
    for j in range(1, m + 1):
        out = out * qint(j, table)
    return out


@dataclass(frozen=True)
class QIntSpec:
    """The quantum integer ``[a*n + b*k + c]``."""

    a: int = 0
    b: int = 0
    c: int = 0

    def at(self, n, k):
        return self.a * n + self.b * k + self.c


class RationalFunction:
    """``num / den`` over a shared table; never reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.constant(num.table, 1)
        if isinstance(num, int):
            num = LaurentPoly.constant(den.table, num)
        if num.table != den.table:
            raise UsageError("numerator and denominator live over different tables")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @property
    def table(self):
        return self.num.table

    @classmethod
    def const(cls, table, c):
        return cls(LaurentPoly.constant(table, c))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise UsageError("rational functions over different tables")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction.const(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ratfun_equal(self, other)

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    def substitute(self, assignment, target):
        return RationalFunction(
            self.num.substitute(assignment, target), self.den.substitute(assignment, target)
        )

    def specialize(self, n, k):
        """Set ``Q = q**n`` and ``K = q**k``; the result lives over ``{q}``."""
        q = LaurentPoly.var(Q_TABLE, "q")
        return self.substitute({"q": q, "Q": q ** n, "K": q ** k}, Q_TABLE)

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def ratfun_equal(a: RationalFunction, b: RationalFunction) -> bool:
    return a.num * b.den == b.num * a.den


_QMQ = LaurentPoly(QQK_TABLE, {(1, 0, 0): 1, (-1, 0, 0): -1})


def qint_symbolic(spec: QIntSpec) -> RationalFunction:
    """``[a n + b k + c]`` as ``(q^c Q^a K^b - q^-c Q^-a K^-b) / (q - q^-1)``."""
    a, b, c = spec.a, spec.b, spec.c
    num = LaurentPoly(QQK_TABLE, {(c, a, b): 1}) - LaurentPoly(QQK_TABLE, {(-c, -a, -b): 1})
    return RationalFunction(num, _QMQ)


# Identity harness. Each identity is written once against a "bracket" provider
# so that the same transcription serves the symbolic check and the integer sweep.


class _Symbolic:
    table = QQK_TABLE

    def br(self, a=0, b=0, c=0):
        return qint_symbolic(QIntSpec(a, b, c))

    def qpow(self, a=0, b=0, c=0):
        """``q^(a n + b k + c)`` as a rational function."""
        return RationalFunction(LaurentPoly(QQK_TABLE, {(c, a, b): 1}))


class _Specialized:
    table = Q_TABLE

    def __init__(self, n, k):
        self.n, self.k = n, k

    def br(self, a=0, b=0, c=0):
        return RationalFunction(qint(a * self.n + b * self.k + c))

    def qpow(self, a=0, b=0, c=0):
        return RationalFunction(LaurentPoly(Q_TABLE, {(a * self.n + b * self.k + c,): 1}))


def _mainrel_1(R):
    lhs = [R.br(1, -1, 0) / R.br(1, -1, 1), R.qpow(1, -1, 1) / R.br(1, -1, 1)]
    rhs = [R.qpow(0, 0, 1)]
    return lhs, rhs


def _mainrel_2(R):
    inner = R.qpow(1, -1, 1) / R.br(1, -1, 1) + R.qpow(0, 0, -1)
    lhs = [inner * R.br(1, -1, 1) / R.br(1, -1, 2)]
    rhs = [RationalFunction.const(R.table, 1)]
    return lhs, rhs


def _appendix_1(R):
    n1, nk1, nk, nkm1 = R.br(1, 0, 1), R.br(1, -1, 1), R.br(1, -1, 0), R.br(1, -1, -1)
    n, k, k1 = R.br(1, 0, 0), R.br(0, 1, 0), R.br(0, 1, 1)
    lhs = [
        R.qpow(1, 0, 0) * n1 / (n * nk1),
        -(R.qpow(2, -1, 1) * k / (n * nk1)),
        R.qpow(1, -1, 1) / nk1 * n1 / n * k,
        -(k1 * nkm1 / nk),
        nkm1 / n,
        nk / nk1 * n1 / n * k,
    ]
    rhs = [-k1 * (-(R.qpow(1, -1, 0) / nk))]
    return lhs, rhs


def _appendix_2(R):
    n1, nk1, nk, nkm1 = R.br(1, 0, 1), R.br(1, -1, 1), R.br(1, -1, 0), R.br(1, -1, -1)
    k, k1, two = R.br(0, 1, 0), R.br(0, 1, 1), R.br(0, 0, 2)
    qi = R.qpow(0, 0, -1)
    lhs = [
        qi * k1,
        -(R.qpow(0, 0, -2) * k),
        qi * two * k,
        k1 * nkm1 / nk,
        -(nkm1 / nk * n1 / nk1),
        -(nk / nk1 * two * k),
    ]
    rhs = [-k1 * (-qi)]
    return lhs, rhs


BRAIDING_IDENTITIES = {
    "mainrel-1": _mainrel_1,
    "mainrel-2": _mainrel_2,
    "appendix-1": _appendix_1,
    "appendix-2": _appendix_2,
}


def identity_sides(name, n=None, k=None, flip=None):
    """Both sides of a named identity as lists of summands.

    With ``n`` and ``k`` both None the sides are symbolic in ``{q, Q, K}``;
    otherwise they are specialized to integers over ``{q}``. ``flip`` negates
    the left-hand summand with that index (used for mutation checks).
    """
    try:
        build = BRAIDING_IDENTITIES[name]
    except KeyError:
        raise UsageError(f"unknown identity {name!r}; choose from {sorted(BRAIDING_IDENTITIES)}") from None
    R = _Symbolic() if n is None and k is None else _Specialized(n, k)
    lhs, rhs = build(R)
    if flip is not None:
        lhs = list(lhs)
        lhs[flip] = -lhs[flip]
    return lhs, rhs


def _total(parts, table):
    out = RationalFunction.const(table, 0)
    for p in parts:
        out = out + p
    return out


def verify_braiding_identities(name, n=None, k=None, flip=None) -> bool:
    lhs, rhs = identity_sides(name, n, k, flip)
    table = (lhs + rhs)[0].table
    return ratfun_equal(_total(lhs, table), _total(rhs, table))


def admissible(n, k):
    """Integer pairs at which every bracket in a denominator is nonzero."""
    return 1 <= k <= n - 1


def numeric_sweep(name, max_n=25):
    """Check ``name`` at every admissible ``1 <= k < n <= max_n``; returns failures."""
    return [
        (n, k)
        for n in range(2, max_n + 1)
        for k in range(1, n)
        if admissible(n, k) and not verify_braiding_identities(name, n, k)
    ]


def loop_value():
    """The closed-loop constant ``-[n][2n+2]/[n+1]`` as a symbolic rational function."""
    return -(qint_symbolic(QIntSpec(1)) * qint_symbolic(QIntSpec(2, 0, 2)) / qint_symbolic(QIntSpec(1, 0, 1)))
