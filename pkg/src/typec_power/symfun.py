"""Elementary symmetric polynomials on the alphabet {L1^±1, ..., Ln^±1}.

``Li`` stands for the eigenvalue variable lambda_i. ``char_fund(k)`` is the
Sp(2n) fundamental character ``E_k - E_{k-2}``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import UsageError
from .polycore import LaurentPoly, VarTable


class LambdaRing:
    """Laurent ring Z[L1^±1, ..., Ln^±1] of rank ``n`` (``n = 0`` allowed)."""

    __slots__ = ("n", "table")

    def __init__(self, n: int):
        if n < 0:
            raise UsageError(f"rank must be nonnegative, got {n}")
        self.n = n
        self.table = VarTable.indexed("L", n)

    def letter(self, i, sign=1):
        return LaurentPoly.var(self.table, f"L{i}", sign)

    def letters(self):
        """The 2n letters L1, ..., Ln, L1^-1, ..., Ln^-1."""
        return [self.letter(i) for i in range(1, self.n + 1)] + [
            self.letter(i, -1) for i in range(1, self.n + 1)
        ]

    def __eq__(self, other):
        return isinstance(other, LambdaRing) and other.n == self.n

    def __hash__(self):
        return hash(("LambdaRing", self.n))

    def __repr__(self):
        return f"LambdaRing({self.n})"


def _as_ring(ring):
    return ring if isinstance(ring, LambdaRing) else LambdaRing(ring)


def elementary_sequence(letters, table):
    """All elementary symmetric polynomials e_0..e_m of ``letters``.

    Adds one letter at a time: e_j <- e_j + x * e_{j-1}.
    """
    es = [LaurentPoly.constant(table, 1)]
    for x in letters:
        es.append(LaurentPoly.zero(table))
        for j in range(len(es) - 1, 0, -1):
            es[j] = es[j] + x * es[j - 1]
    return es


@lru_cache(maxsize=None)
def _lambda_elementary(n):
    ring = LambdaRing(n)
    return tuple(elementary_sequence(ring.letters(), ring.table))


def elem_sym(k: int, ring) -> LaurentPoly:
    """E_{k,n}: sum of all k-fold products of the 2n letters (0 outside [0, 2n])."""
    ring = _as_ring(ring)
    if k < 0 or k > 2 * ring.n:
        return LaurentPoly.zero(ring.table)
    return _lambda_elementary(ring.n)[k]


def char_fund(k: int, ring) -> LaurentPoly:
    """F_{k,n} = E_{k,n} - E_{k-2,n}."""
    ring = _as_ring(ring)
    return elem_sym(k, ring) - elem_sym(k - 2, ring)


def char_fund_power(k: int, N: int, ring) -> LaurentPoly:
    """F_{k,n} on the N-th powered alphabet."""
    return char_fund(k, ring).frobenius(N)


def elem_sym_vars(k, table):
    """e_k in the ordinary variables of ``table`` (used for the Type A oracle)."""
    if k < 0 or k > table.arity:
        return LaurentPoly.zero(table)
    letters = [LaurentPoly.var(table, v) for v in table.names]
    return elementary_sequence(letters, table)[k]


# Symmetric-function identities, each checked as exact polynomial equality.


def _middle_vanish(n):
    # E_{n,n-1} = E_{n-2,n-1} on the rank n-1 alphabet
    lower = LambdaRing(n - 1)
    return elem_sym(n, lower) == elem_sym(n - 2, lower)


def branching_rhs(k, n):
    """(Ln + Ln^-1) F_{k-1,n-1} + F_{k-2,n-1} + F_{k,n-1}, embedded in rank n."""
    ring, lower = LambdaRing(n), LambdaRing(n - 1)
    pair = ring.letter(n) + ring.letter(n, -1)

    def low(j):
        return char_fund(j, lower).embed(ring.table)

    return pair * low(k - 1) + low(k - 2) + low(k)


def _branching(n):
    ring = LambdaRing(n)
    for k in range(1, n + 1):
        if char_fund(k, ring) != branching_rhs(k, n):
            return False
    # the displayed end cases: F_{1,n} = Ln + Ln^-1 + F_{1,n-1}; F_{n,n} drops F_{n,n-1}
    lower = LambdaRing(n - 1)
    pair = ring.letter(n) + ring.letter(n, -1)
    if char_fund(1, ring) != pair + char_fund(1, lower).embed(ring.table):
        return False
    end = pair * char_fund(n - 1, lower).embed(ring.table) + char_fund(n - 2, lower).embed(ring.table)
    return char_fund(n, ring) == end


def _palindrome(n):
    ring = LambdaRing(n)
    return all(elem_sym(i, ring) == elem_sym(2 * n - i, ring) for i in range(0, 2 * n + 1))


def _e_from_f(n):
    ring = LambdaRing(n)
    for i in range(0, 2 * n + 1):
        total = LaurentPoly.zero(ring.table)
        for j in range(i, -1, -2):
            total = total + char_fund(j, ring)
        if total != elem_sym(i, ring):
            return False
    return True


SYMFUN_IDENTITIES = {
    "middle-vanish": _middle_vanish,
    "branching": _branching,
    "palindrome": _palindrome,
    "e-from-f": _e_from_f,
}


def verify_symfun_identity(name: str, n: int) -> bool:
    if n < 1:
        raise UsageError(f"rank must be >= 1, got {n}")
    try:
        check = SYMFUN_IDENTITIES[name]
    except KeyError:
        raise UsageError(f"unknown identity {name!r}; choose from {sorted(SYMFUN_IDENTITIES)}") from None
    return check(n)
