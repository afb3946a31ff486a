"""Exact sparse multivariate polynomials over the rationals.

A Scalar is an immutable polynomial with `fractions.Fraction` coefficients
in named commuting indeterminates.  It is the coefficient ring for every
expansion in this package: beta, t_i, x_j, y_j all live here as ring
elements, and all arithmetic is exact.

Representation.  A monomial is a tuple of (name, exponent) pairs, sorted
by name, with every exponent positive; the empty tuple is the constant
monomial.  A Scalar stores a mapping from monomials to nonzero Fractions.
Zero is the empty mapping, and equality is structural on this canonical
form.

Term order.  Names are ordered by plain string comparison; that order is
fixed across the package.  Serialized terms are listed in graded
lexicographic order: ascending total degree, ties broken by comparing the
monomial pair tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple[tuple[str, int], ...]
ScalarLike = Union["Scalar", int, Fraction]


class DimensionError(ValueError):
    """A matrix does not have the shape an operation requires."""


class UnboundIndeterminateError(ValueError):
    """An evaluation assignment is missing an indeterminate."""


def _monomial_sort_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(e for _, e in mono), mono)


class Scalar:
    """Immutable exact polynomial; supports +, -, *, ** and evaluation."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] = ()):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in dict(terms).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return _ZERO

    @classmethod
    def one(cls) -> "Scalar":
        return _ONE

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> "Scalar":
        return cls({(): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Scalar":
        if not name:
            raise ValueError("indeterminate name must be nonempty")
        return cls({((name, 1),): Fraction(1)})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = coerce_scalar(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = terms.get(mono, _F0) + coeff
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return Scalar(terms)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-coerce_scalar(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return coerce_scalar(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = coerce_scalar(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _merge_monomials(m1, m2)
                acc = terms.get(mono, _F0) + c1 * c2
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        return Scalar(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        # division only by nonzero rationals; the ring has no inverses
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("scalar division by zero")
        return self * (Fraction(1) / other)

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            raise ValueError("negative powers are not ring operations")
        result = _ONE
        for _ in range(exponent):
            result = result * self
        return result

    # -- structure and comparison -------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = coerce_scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        """Total order on Scalars, used for canonical alphabet multisets."""
        return tuple(sorted(self._terms.items()))

    def degree(self) -> int:
        """Total degree; 0 for constants including zero."""
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def indeterminates(self) -> frozenset[str]:
        return frozenset(name for mono in self._terms for name, _ in mono)

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return self._terms.get((), _F0)

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: _monomial_sort_key(t[0])))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            factors = [f"{n}^{e}" if e > 1 else n for n, e in mono]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


_F0 = Fraction(0)
_ZERO = Scalar()
_ONE = Scalar({(): Fraction(1)})


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def coerce_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.from_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a Scalar")


def variables(names: Union[str, Iterable[str]]) -> tuple[Scalar, ...]:
    """Scalar indeterminates from a space separated string or an iterable."""
    if isinstance(names, str):
        names = names.split()
    return tuple(Scalar.variable(n) for n in names)


def scalar_mul(a: ScalarLike, b: ScalarLike) -> Scalar:
    return coerce_scalar(a) * coerce_scalar(b)


def scalar_eval(p: Scalar, assignment: Mapping[str, Union[int, Fraction]]) -> Fraction:
    """Evaluate at a full rational assignment.

    Every indeterminate occurring in p must be bound, otherwise
    UnboundIndeterminateError is raised.
    """
    total = _F0
    for mono, coeff in p._terms.items():
        value = coeff
        for name, e in mono:
            if name not in assignment:
                raise UnboundIndeterminateError(f"no value assigned to {name!r}")
            value *= Fraction(assignment[name]) ** e
        total += value
    return total


def det_over_ring(rows: Sequence[Sequence], *, zero=None, one=None):
    """Determinant over a commutative ring, division-free.

    Cofactor expansion along successive rows, memoized on the surviving
    column subset, so the cost is O(2^n * n) ring operations.  Entries
    only need +, -, * and truthiness; `zero`/`one` default to Scalar
    constants and must be supplied for other rings.  The 0x0 determinant
    is `one`.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise DimensionError(f"matrix is not square: {n} rows, a row of width {len(row)}")
    if zero is None:
        zero = _ZERO
    if one is None:
        one = _ONE
    if n == 0:
        return one
    cache: dict[int, object] = {}

    def expand(mask: int):
        if mask in cache:
            return cache[mask]
        i = n - bin(mask).count("1")
        cols = [j for j in range(n) if mask >> j & 1]
        if len(cols) == 1:
            return rows[i][cols[0]]
        acc = None
        for pos, j in enumerate(cols):
            entry = rows[i][j]
            if not entry:
                continue
            term = entry * expand(mask & ~(1 << j))
            if acc is None:
                acc = term if pos % 2 == 0 else -term
            elif pos % 2 == 0:
                acc = acc + term
            else:
                acc = acc - term
        if acc is None:
            acc = zero
        cache[mask] = acc
        return acc

    return expand((1 << n) - 1)


# -- serialization ----------------------------------------------------


def scalar_to_json(p: Scalar) -> list[dict]:
    """List of {"coefficient": "p/q", "monomial": {name: exp}} in graded lex order."""
    return [
        {"coefficient": str(coeff), "monomial": {name: e for name, e in mono}}
        for mono, coeff in p.terms()
    ]


def scalar_from_json(data: Iterable[Mapping]) -> Scalar:
    terms: dict[Monomial, Fraction] = {}
    for item in data:
        coeff = Fraction(str(item["coefficient"]))
        mono_map = item.get("monomial", {})
        for name, e in mono_map.items():
            if not isinstance(name, str) or not name:
                raise ValueError("monomial names must be nonempty strings")
            if int(e) <= 0:
                raise ValueError("serialized exponents must be positive")
        mono = tuple(sorted((name, int(e)) for name, e in mono_map.items()))
        terms[mono] = terms.get(mono, _F0) + coeff
    return Scalar(terms)
