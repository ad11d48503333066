"""Power elementary (Type A) and power fundamental (Type C) polynomials.

Main route: Newton's identities. Power sums ``p_m`` are written in the
elementary basis ``e_1..e_{2n}``; the elementary polynomials of the N-th
powered alphabet are then recovered from their own power sums, which are
``p_{N j}`` of the original alphabet. Intermediate coefficients are rational;
results are asserted integral.

:func:`symmetric_reduce_oracle` is an independent check that shares none of
this code: classical leading-term elimination on explicit variables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvariantError, UsageError
from .polycore import LaurentPoly, VarTable
from .symfun import LambdaRing, char_fund, char_fund_power, elem_sym_vars


def e_table(count):
    return VarTable.indexed("e", count)


def f_table(n):
    return VarTable.indexed("f", n)


@lru_cache(maxsize=None)
def power_sums_from_elementary(m: int, num_e: int) -> LaurentPoly:
    """p_m in Z[e_1..e_num_e] via p_m = sum_i (-1)^(i-1) e_i p_(m-i) + (-1)^(m-1) m e_m."""
    if m < 1:
        raise UsageError(f"power sum index must be >= 1, got {m}")
    table = e_table(num_e)
    out = LaurentPoly.zero(table)
    for i in range(1, min(m - 1, num_e) + 1):
        term = LaurentPoly.var(table, f"e{i}") * power_sums_from_elementary(m - i, num_e)
        out = out + term if i % 2 else out - term
    if m <= num_e:
        out = out + LaurentPoly.var(table, f"e{m}") * ((-1) ** (m - 1) * m)
    return out


@lru_cache(maxsize=None)
def power_elementary(n: int, N: int, k: int) -> LaurentPoly:
    """P_{2n}^{(N,k)} in Z[e_1..e_{2n}]: e_k of the N-th powers, in the e-basis."""
    if n < 1 or N < 1:
        raise UsageError(f"need n >= 1 and N >= 1, got n={n}, N={N}")
    table = e_table(2 * n)
    if k < 0 or k > 2 * n:
        return LaurentPoly.zero(table)
    if k == 0:
        return LaurentPoly.constant(table, 1)
    # k e'_k = sum_{j=1..k} (-1)^(j-1) e'_{k-j} p'_j, with p'_j = p_{N j}
    acc = LaurentPoly.zero(table)
    for j in range(1, k + 1):
        term = power_elementary(n, N, k - j) * power_sums_from_elementary(N * j, 2 * n)
        acc = acc + term if j % 2 else acc - term
    result = (acc * Fraction(1, k)).to_integral()
    if not result.is_polynomial():
        raise InvariantError("negative exponent in a power elementary polynomial")
    return result


@lru_cache(maxsize=None)
def power_elementary_sl(n: int, N: int, k: int) -> LaurentPoly:
    """P-hat: ``power_elementary`` with e_{2n} = 1, over Z[e_1..e_{2n-1}]."""
    target = e_table(2 * n - 1)
    if k < 0:
        return LaurentPoly.zero(target)
    if k == 0:
        return LaurentPoly.constant(target, 1)
    if k > 2 * n - 1:
        raise UsageError(f"P-hat needs k <= 2n-1 = {2 * n - 1}, got {k}")
    full = power_elementary(n, N, k)
    images = {f"e{i}": LaurentPoly.var(target, f"e{i}") for i in range(1, 2 * n)}
    images[f"e{2 * n}"] = LaurentPoly.constant(target, 1)
    return full.substitute(images, target)


def f_tilde(i: int, n: int) -> LaurentPoly:
    """f_i + f_{i-2} + ... down to f_1 or f_0 = 1."""
    table = f_table(n)
    out = LaurentPoly.zero(table)
    for j in range(i, -1, -2):
        out = out + (LaurentPoly.constant(table, 1) if j == 0 else LaurentPoly.var(table, f"f{j}"))
    return out


def palindromic_arguments(n: int):
    """Images of e_1..e_{2n-1}: (f~_1, ..., f~_{n-1}, f~_n, f~_{n-1}, ..., f~_1)."""
    return {f"e{j}": f_tilde(min(j, 2 * n - j), n) for j in range(1, 2 * n)}


@lru_cache(maxsize=None)
def power_fundamental(n: int, N: int, k: int) -> LaurentPoly:
    """Q_{2n}^{(N,k)} in Z[f_1..f_n], for 1 <= k <= n."""
    if n < 1 or N < 1:
        raise UsageError(f"need n >= 1 and N >= 1, got n={n}, N={N}")
    if not 1 <= k <= n:
        raise UsageError(f"power fundamental polynomial needs 1 <= k <= n, got k={k}, n={n}")
    target = f_table(n)
    args = palindromic_arguments(n)
    q = power_elementary_sl(n, N, k).substitute(args, target) - power_elementary_sl(
        n, N, k - 2
    ).substitute(args, target)
    q = q.to_integral()
    if not q.is_polynomial():
        raise InvariantError("negative exponent in a power fundamental polynomial")
    return q


def power_fundamental_ext(m: int, N: int, j: int) -> LaurentPoly:
    """Q_{2m}^{(N,j)} with the boundary conventions used by rank reduction.

    ``j < 0`` gives 0, ``j = 0`` gives 1 and ``j = m + 1`` gives 0 (the
    character F_{m+1,m} vanishes). ``m = 0`` is the empty-rank case.
    """
    table = f_table(m)
    if j < 0 or j == m + 1:
        return LaurentPoly.zero(table)
    if j == 0:
        return LaurentPoly.constant(table, 1)
    if j > m + 1:
        raise UsageError(f"no convention for Q_(2m)^(N,j) with j={j} > m+1={m + 1}")
    return power_fundamental(m, N, j)


def symmetric_reduce_oracle(target: LaurentPoly, num_vars: int | None = None) -> LaurentPoly:
    """Express a symmetric polynomial in x_1..x_m in the basis e_1..e_m.

    Repeatedly removes the lex-leading term c x^a (x_1 > x_2 > ...) by
    subtracting c e_1^(a_1-a_2) ... e_m^(a_m). Raises UsageError on
    non-symmetric input, negative exponents or non-integer coefficients.
    """
    table = target.table
    m = table.arity if num_vars is None else num_vars
    if m != table.arity:
        raise UsageError(f"num_vars={m} does not match the target's {table.arity} variables")
    etab = e_table(m)
    es = [elem_sym_vars(i, table) for i in range(m + 1)]
    powers = {}

    def e_pow(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = es[i] ** k
        return powers[key]

    rest = target
    result = {}
    while not rest.is_zero():
        a, c = max(rest.term_map.items(), key=lambda t: t[0])
        if any(x < 0 for x in a):
            raise UsageError(f"negative exponent in {a}: oracle needs an ordinary polynomial")
        if not (isinstance(c, int) or c.denominator == 1):
            raise UsageError(f"non-integer coefficient {c} rejected by the oracle")
        if any(a[i] < a[i + 1] for i in range(m - 1)):
            raise UsageError(f"input is not symmetric: leading exponent {a} is not a partition")
        gaps = [a[i] - (a[i + 1] if i + 1 < m else 0) for i in range(m)]
        prod = LaurentPoly.constant(table, int(c))
        for i, g in enumerate(gaps, start=1):
            if g:
                prod = prod * e_pow(i, g)
        rest = rest - prod
        result[tuple(gaps)] = result.get(tuple(gaps), 0) + int(c)
    return LaurentPoly(etab, result)


def verify_power_fundamental(n: int, N: int) -> bool:
    """Q_{2n}^{(N,k)}(F_1, ..., F_n) == F_k^{(N)} exactly, for every 1 <= k <= n."""
    ring = LambdaRing(n)
    chars = {f"f{i}": char_fund(i, ring) for i in range(1, n + 1)}
    return all(
        power_fundamental(n, N, k).substitute(chars, ring.table) == char_fund_power(k, N, ring)
        for k in range(1, n + 1)
    )


def powered_positive_elementary(n: int, N: int, k: int) -> LaurentPoly:
    """e_k(x_1^N, ..., x_{2n}^N) over explicit variables x1..x{2n}."""
    return elem_sym_vars(k, VarTable.indexed("x", 2 * n)).frobenius(N)
