"""Exact sparse multivariate Laurent polynomials.

A :class:`LaurentPoly` lives over a :class:`VarTable` that fixes the variable
order. Coefficients are Python ints (arbitrary precision) or
:class:`fractions.Fraction`; the rational form is only an intermediate carrier
and :meth:`LaurentPoly.to_integral` converts back, failing loudly if a
denominator survives.

Values are immutable. Term ordering is graded-lexicographic, descending, with
the table's variable order; it is applied whenever terms are listed or
rendered, so output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from . import kernels
from .errors import EvaluationError, InvariantError, SubstitutionError, UsageError


class VarTable:
    """Ordered, duplicate-free tuple of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {v: i for i, v in enumerate(names)}

    @classmethod
    def indexed(cls, prefix: str, count: int, start: int = 1) -> "VarTable":
        return cls(f"{prefix}{i}" for i in range(start, start + count))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}; table has {self.names}") from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)})"


def grlex_key(exps):
    """Sort key; pair with ``reverse=True`` for descending graded-lex order."""
    return (sum(exps), exps)


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class LaurentPoly:
    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[tuple, int | Fraction] | None = None):
        self.table = table
        arity = table.arity
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != arity:
                raise UsageError(f"exponent vector {e} does not match arity {arity}")
            if c:
                clean[e] = clean.get(e, 0) + c
        self._terms = _clean(clean)
        self._hash = None

    @classmethod
    def _raw(cls, table, terms):
        # trusted constructor: keys are well-formed tuples, no zero coefficients
        p = object.__new__(cls)
        p.table = table
        p._terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def zero(cls, table):
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table, c=1):
        return cls._raw(table, {(0,) * table.arity: c} if c else {})

    @classmethod
    def monomial(cls, table, exps, c=1):
        return cls(table, {tuple(exps): c})

    @classmethod
    def var(cls, table, name, exp=1):
        e = [0] * table.arity
        e[table.index(name)] = exp
        return cls._raw(table, {tuple(e): 1})

    @classmethod
    def from_exponent_map(cls, table, powers: Mapping[str, int], c=1):
        e = [0] * table.arity
        for name, k in powers.items():
            e[table.index(name)] += k
        return cls(table, {tuple(e): c})

    # inspection

    @property
    def term_map(self):
        """A copy of the exponent → coefficient map."""
        return dict(self._terms)

    def terms(self):
        """``(exponents, coefficient)`` pairs in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def constant_term(self):
        return self._terms.get((0,) * self.table.arity, 0)

    def is_constant(self):
        zero = (0,) * self.table.arity
        return all(e == zero for e in self._terms)

    def is_polynomial(self):
        """True when no exponent is negative."""
        return all(x >= 0 for e in self._terms for x in e)

    def is_integral(self):
        return all(
            isinstance(c, int) or c.denominator == 1 for c in self._terms.values()
        )

    def to_integral(self):
        """Return a copy with int coefficients; raise InvariantError otherwise."""
        if not self.is_integral():
            bad = next(c for c in self._terms.values() if not isinstance(c, int) and c.denominator != 1)
            raise InvariantError(f"non-integral coefficient {bad} where an integer was required")
        return LaurentPoly._raw(self.table, {e: int(c) for e, c in self._terms.items()})

    def variables(self):
        """Names of variables that actually occur."""
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return [self.table.names[i] for i in sorted(used)]

    def degree_range(self, name):
        i = self.table.index(name)
        xs = [e[i] for e in self._terms] or [0]
        return min(xs), max(xs)

    def is_monomial_unit(self):
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.table != self.table:
                raise UsageError(f"table mismatch: {self.table} vs {other.table}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.table, kernels.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.table, kernels.add_terms(self._terms, other._terms, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly._raw(self.table, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw(self.table, kernels.scale_terms(self._terms, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.table, kernels.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = LaurentPoly.constant(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def unit_inverse(self):
        """Inverse of a monomial with coefficient +-1."""
        if not self.is_monomial_unit():
            raise SubstitutionError(f"{self} is not a monomial unit and has no Laurent inverse")
        (e, c), = self._terms.items()
        return LaurentPoly._raw(self.table, {tuple(-x for x in e): c})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.table.arity: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    # structural maps

    def frobenius(self, N):
        """Scale every exponent by ``N`` (the substitution x -> x**N for all x)."""
        if N < 1:
            raise UsageError(f"frobenius power needs N >= 1, got {N}")
        if N == 1:
            return self
        return LaurentPoly._raw(self.table, kernels.scale_exponents(self._terms, N))

    def reduce_exponent(self, name, modulus):
        """Reduce the exponent of ``name`` into ``[0, modulus)`` and recollect."""
        return LaurentPoly._raw(
            self.table, kernels.reduce_exponent_mod(self._terms, self.table.index(name), modulus)
        )

    def embed(self, table: VarTable):
        """Re-express over ``table``, which must contain every occurring variable."""
        if table == self.table:
            return self
        pos = []
        for i, name in enumerate(self.table.names):
            if name in table:
                pos.append((i, table.index(name)))
            elif any(e[i] for e in self._terms):
                raise UsageError(f"variable {name!r} does not exist in {table}")
        out = {}
        for e, c in self._terms.items():
            t = [0] * table.arity
            for i, j in pos:
                t[j] = e[i]
            out[tuple(t)] = c
        return LaurentPoly._raw(table, out)

    def substitute(self, assignment: Mapping[str, "LaurentPoly"], target: VarTable | None = None,
                   inverses: Mapping[str, "LaurentPoly"] | None = None):
        """Homomorphic image under ``var -> assignment[var]``.

        Variables not in ``assignment`` map to the variable of the same name in
        ``target`` (which defaults to this polynomial's table). A variable with
        a negative exponent needs an invertible image: a monomial unit, or an
        explicit entry in ``inverses``.
        """
        if target is None:
            if assignment:
                target = next(iter(assignment.values())).table
            else:
                target = self.table
        images = []
        for name in self.table.names:
            if name in assignment:
                img = assignment[name]
                if isinstance(img, (int, Fraction)):
                    img = LaurentPoly.constant(target, img)
                elif img.table != target:
                    raise UsageError(f"image of {name!r} is over {img.table}, expected {target}")
            elif name in target:
                img = LaurentPoly.var(target, name)
            else:
                img = None
            images.append(img)
        inverses = inverses or {}
        inv_images = [inverses.get(name) for name in self.table.names]
        return _horner(self._terms, 0, images, inv_images, self.table, target, {})

    def evaluate(self, point: Mapping[str, int | Fraction]):
        """Exact value at a point assigning a number to every occurring variable."""
        values = []
        for i, name in enumerate(self.table.names):
            lo, hi = (min(e[i] for e in self._terms), max(e[i] for e in self._terms)) if self._terms else (0, 0)
            if lo == hi == 0:
                values.append(None)
                continue
            if name not in point:
                raise UsageError(f"no value supplied for {name!r}")
            v = Fraction(point[name])
            if lo < 0 and v == 0:
                raise EvaluationError(f"{name!r} = 0 but occurs with negative exponent {lo}")
            values.append(v)
        total = Fraction(0)
        cache = {}
        for e, c in self._terms.items():
            term = Fraction(c)
            for i, x in enumerate(e):
                if x:
                    key = (i, x)
                    p = cache.get(key)
                    if p is None:
                        p = cache[key] = values[i] ** x
                    term *= p
            total += term
        return total

    def __repr__(self):
        from .serialize import render_text  # serialize imports this module
        return render_text(self)


def _horner(terms, i, images, inv_images, source, target, cache):
    """Nested Horner evaluation of ``terms`` over variables ``i..`` of ``source``."""
    if not terms:
        return LaurentPoly.zero(target)
    if i == source.arity:
        (c,) = terms.values()
        return LaurentPoly.constant(target, c)
    groups = {}
    for e, c in terms.items():
        groups.setdefault(e[i], {})[e[i + 1:] if i + 1 < len(e) else ()] = c
    if len(groups) == 1 and 0 in groups:
        return _horner(_rekey(groups[0], i + 1, source.arity), i + 1, images, inv_images, source, target, cache)
    name = source.names[i]
    img = images[i]
    if img is None:
        raise UsageError(f"variable {name!r} has no image and is not in {target}")

    def power(k):
        key = (i, k)
        p = cache.get(key)
        if p is None:
            if k >= 0:
                p = img ** k
            else:
                inv = inv_images[i]
                if inv is None:
                    if not img.is_monomial_unit():
                        raise SubstitutionError(
                            f"{name!r} occurs with exponent {k} but its image {img} is not invertible"
                        )
                    inv = img.unit_inverse()
                elif inv.table != target:
                    raise UsageError(f"inverse image of {name!r} is over {inv.table}, expected {target}")
                p = inv ** (-k)
            cache[key] = p
        return p

    exps = sorted(groups, reverse=True)
    acc = None
    prev = None
    for k in exps:
        sub = _horner(_rekey(groups[k], i + 1, source.arity), i + 1, images, inv_images, source, target, cache)
        acc = sub if acc is None else acc * power(prev - k) + sub
        prev = k
    if prev:
        acc = acc * power(prev)
    return acc


def _rekey(group, start, arity):
    # groups store suffix tuples; pad back to full length so recursion indexes uniformly
    pad = (0,) * start
    return {pad + e: c for e, c in group.items()}


def poly_sum(polys, table):
    return reduce(lambda a, b: a + b, polys, LaurentPoly.zero(table))


def poly_prod(polys, table):
    return reduce(lambda a, b: a * b, polys, LaurentPoly.constant(table, 1))
