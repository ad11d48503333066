"""Commutative model of the annulus algebra: Z[q^±1][T^±1, X_1, ..., X_{n-1}].

Only the subalgebra generated by T and the X_k is modelled, with free
commuting generators. The maps ``phi_map('upper')`` / ``phi_map('lower')``
send the rank-reduction variables (``Ln`` for lambda_n and ``f_i`` for
F_{i,n-1}) into it; the transparency defect is the difference of the two
images of a powered character.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import UsageError
from .polycore import LaurentPoly, VarTable
from .powerpoly import power_fundamental, power_fundamental_ext
from .symfun import LambdaRing, char_fund

DIRECTIONS = ("upper", "lower")


@lru_cache(maxsize=None)
def annulus_table(n: int) -> VarTable:
    return VarTable(["q", "T"] + [f"X{i}" for i in range(1, n)])


@lru_cache(maxsize=None)
def branch_table(n: int) -> VarTable:
    """Source ring of phi: Z[Ln^±1, f_1, ..., f_{n-1}]."""
    return VarTable([f"L{n}"] + [f"f{i}" for i in range(1, n)])


def _check_rank(n):
    if n < 1:
        raise UsageError(f"rank must be >= 1, got {n}")


def _gen(n, name, exp=1):
    return LaurentPoly.var(annulus_table(n), name, exp)


def _qT(n, qexp, texp):
    return LaurentPoly.from_exponent_map(annulus_table(n), {"q": qexp, "T": texp})


def X(n, i):
    """X_i with X_0 = 1 and X_i = 0 outside 0..n-1."""
    if i == 0:
        return LaurentPoly.constant(annulus_table(n), 1)
    if i < 0 or i >= n:
        return LaurentPoly.zero(annulus_table(n))
    return _gen(n, f"X{i}")


def phi_map(direction: str, p: LaurentPoly, n: int) -> LaurentPoly:
    """Image of ``p`` under Ln -> q^(±1) T, f_i -> X_i.

    ``upper`` sends Ln to qT, ``lower`` sends it to q^-1 T; the X_i are the
    same in both directions.
    """
    _check_rank(n)
    if direction not in DIRECTIONS:
        raise UsageError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    source = branch_table(n)
    for name in p.variables():
        if name not in source:
            raise UsageError(f"variable {name!r} is not in the rank-{n} branching ring {source.names}")
    p = p.embed(source)
    s = 1 if direction == "upper" else -1
    images = {f"L{n}": _qT(n, s, 1)}
    images.update({f"f{i}": _gen(n, f"X{i}") for i in range(1, n)})
    return p.substitute(images, annulus_table(n))


def loop_class(k: int, n: int) -> LaurentPoly:
    """l_k* = qT X_{k-1} + q^-1 T^-1 X_{k-1} + X_k + X_{k-2} (X_0 = 1, X_n = 0)."""
    _check_rank(n)
    if not 1 <= k <= n:
        raise UsageError(f"loop class index must satisfy 1 <= k <= n, got k={k}, n={n}")
    around = _qT(n, 1, 1) + _qT(n, -1, -1)
    return around * X(n, k - 1) + X(n, k) + X(n, k - 2)


def _f(n, j):
    """f_j in the branching ring, with f_0 = 1 and f_j = 0 for j < 0 or j >= n."""
    table = branch_table(n)
    if j == 0:
        return LaurentPoly.constant(table, 1)
    if j < 0 or j >= n:
        return LaurentPoly.zero(table)
    return LaurentPoly.var(table, f"f{j}")


def branching_expansion(k: int, n: int) -> LaurentPoly:
    """F_{k,n} = (Ln + Ln^-1) f_{k-1} + f_{k-2} + f_k over the branching ring."""
    table = branch_table(n)
    pair = LaurentPoly.var(table, f"L{n}") + LaurentPoly.var(table, f"L{n}", -1)
    return pair * _f(n, k - 1) + _f(n, k - 2) + _f(n, k)


def branching_to_lambda(p: LaurentPoly, n: int) -> LaurentPoly:
    """Evaluate f_i at the rank n-1 characters, landing in the rank n Laurent ring."""
    ring, lower = LambdaRing(n), LambdaRing(n - 1)
    images = {f"L{n}": ring.letter(n)}
    images.update({f"f{i}": char_fund(i, lower).embed(ring.table) for i in range(1, n)})
    return p.substitute(images, ring.table)


def verify_loop_image(n: int) -> bool:
    """phi_upper(F_{k,n}) == l_k* for all k, with the expansion checked against F itself."""
    _check_rank(n)
    ring = LambdaRing(n)
    for k in range(1, n + 1):
        expansion = branching_expansion(k, n)
        if branching_to_lambda(expansion, n) != char_fund(k, ring):
            return False
        if phi_map("upper", expansion, n) != loop_class(k, n):
            return False
    return True


def powered_branching_expansion(n: int, N: int, k: int) -> LaurentPoly:
    """F_{k,n}^{(N)} = (Ln^N + Ln^-N) Q^{(N,k-1)} + Q^{(N,k-2)} + Q^{(N,k)}, Q over rank n-1."""
    table = branch_table(n)

    def q(j):
        return power_fundamental_ext(n - 1, N, j).embed(table)

    pair = LaurentPoly.var(table, f"L{n}", N) + LaurentPoly.var(table, f"L{n}", -N)
    return pair * q(k - 1) + q(k - 2) + q(k)


def _check_defect_args(n, N, k):
    _check_rank(n)
    if N < 1:
        raise UsageError(f"N must be >= 1, got {N}")
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got k={k}, n={n}")


def transparency_defect(n: int, N: int, k: int) -> LaurentPoly:
    """phi_upper(F_{k,n}^{(N)}) - phi_lower(F_{k,n}^{(N)})."""
    _check_defect_args(n, N, k)
    p = powered_branching_expansion(n, N, k)
    return phi_map("upper", p, n) - phi_map("lower", p, n)


def defect_factor(n: int, N: int, k: int) -> LaurentPoly:
    """[(q^N - q^-N) T^N + (q^-N - q^N) T^-N] * Q_{2(n-1)}^{(N,k-1)}(X_1..X_{n-1})."""
    _check_defect_args(n, N, k)
    table = annulus_table(n)
    front = (_qT(n, N, N) - _qT(n, -N, N)) + (_qT(n, -N, -N) - _qT(n, N, -N))
    qpoly = power_fundamental_ext(n - 1, N, k - 1)
    images = {f"f{i}": X(n, i) for i in range(1, n)}
    return front * qpoly.substitute(images, table)


def verify_defect_factorization(n: int, N: int, k: int) -> bool:
    return transparency_defect(n, N, k) == defect_factor(n, N, k)


def verify_composition(n: int, N: int, k: int) -> bool:
    """Two routes to phi_upper(F_{k,n}^{(N)}) agree.

    Route one feeds the branching expansions of F_{1,n}..F_{n,n} into
    Q_{2n}^{(N,k)}; route two is the powered branching expansion.
    """
    _check_defect_args(n, N, k)
    table = branch_table(n)
    images = {f"f{i}": branching_expansion(i, n) for i in range(1, n + 1)}
    via_q = power_fundamental(n, N, k).substitute(images, table)
    return phi_map("upper", via_q, n) == phi_map("upper", powered_branching_expansion(n, N, k), n)


def reduce_at_root(e: LaurentPoly, N: int) -> LaurentPoly:
    """Image in Z[q]/(q^(2N) - 1): q-exponents reduced into [0, 2N-1]."""
    if N < 1:
        raise UsageError(f"root-of-unity order parameter must be >= 1, got {N}")
    return e.reduce_exponent("q", 2 * N)
