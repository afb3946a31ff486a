"""Schur-basis symmetric functions and the determinant expansions.

SymFunc holds an element of the symmetric function ring in its Schur
basis: a finite map Partition -> Scalar, plus an optional degree bound
`truncation` marking that coefficients of weight <= D are exact and all
higher ones have been discarded (a truncated element of the completed
ring).

The expansion operations all reduce to Jacobi-Trudi style determinants
whose entries are supersymmetric h or e polynomials in row- and
column-dependent alphabets; the skew expansion also carries the
h_n(X) generators through the determinant and folds them into the Schur
basis by Pieri multiplication.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .exactalg import Scalar, ScalarLike, coerce_scalar, det_over_ring
from .shapes import (
    Alphabet,
    AlphabetSequence,
    Partition,
    as_alphabet,
    empty_sequence,
    negate_alphabet,
    partitions_up_to_weight,
    refined_alphabet,
    refined_sequence,
    subpartitions,
    superpartitions,
)
from .supersym import e_elem, h_complete, h_super

_ZERO = Scalar.zero()
_ONE = Scalar.one()


class StabilityError(ValueError):
    """An alphabet sequence does not have the stable growth an operation needs."""


class TruncationError(ValueError):
    """A truncated operand does not determine the requested result."""


class TractabilityError(ValueError):
    """Requested size is beyond the supported brute-force bounds."""


def _mu_key(mu: Partition) -> tuple:
    return (sum(mu), tuple(-p for p in mu))


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class SymFunc:
    """Schur-basis element; optionally truncated above degree `truncation`."""

    __slots__ = ("_coeffs", "truncation")

    def __init__(self, coeffs: Mapping = (), truncation: int | None = None):
        clean: dict[Partition, Scalar] = {}
        for mu, c in dict(coeffs).items():
            mu = Partition(mu)
            c = coerce_scalar(c)
            if not c:
                continue
            if truncation is not None and mu.weight > truncation:
                continue
            clean[mu] = c
        self._coeffs = clean
        self.truncation = truncation

    def coefficient(self, mu: Sequence[int]) -> Scalar:
        return self._coeffs.get(Partition(mu), _ZERO)

    def support(self) -> tuple[Partition, ...]:
        return tuple(sorted(self._coeffs, key=_mu_key))

    def terms(self) -> tuple[tuple[Partition, Scalar], ...]:
        return tuple(sorted(self._coeffs.items(), key=lambda t: _mu_key(t[0])))

    def max_degree(self) -> int:
        return max((mu.weight for mu in self._coeffs), default=0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        coeffs = dict(self._coeffs)
        for mu, c in other._coeffs.items():
            acc = coeffs.get(mu)
            coeffs[mu] = c if acc is None else acc + c
        return SymFunc(coeffs, _min_trunc(self.truncation, other.truncation))

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, factor: ScalarLike) -> "SymFunc":
        factor = coerce_scalar(factor)
        return SymFunc({mu: c * factor for mu, c in self._coeffs.items()}, self.truncation)

    def truncate(self, D: int) -> "SymFunc":
        return SymFunc(self._coeffs, _min_trunc(self.truncation, D))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.truncation == other.truncation and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        if not self._coeffs:
            body = "0"
        else:
            body = " + ".join(f"({c!r})·s{tuple(mu)}" for mu, c in self.terms())
        if self.truncation is None:
            return body
        return f"{body} [deg ≤ {self.truncation}]"


def sym_zero(truncation: int | None = None) -> SymFunc:
    return SymFunc((), truncation)


def sym_schur(mu: Sequence[int]) -> SymFunc:
    return SymFunc({Partition(mu): _ONE})


# -- closed-form determinants -----------------------------------------


def multi_schur(lam: Sequence[int], bx: AlphabetSequence, by: AlphabetSequence) -> Scalar:
    """det( h_{lam_i - i + j}(x^(i)/y^(i)) ), size len(lam)."""
    lam = Partition(lam)
    r = len(lam)
    rows = []
    for i in range(1, r + 1):
        x, y = bx.alphabet(i), by.alphabet(i)
        rows.append([h_super(lam[i - 1] - i + j, x, y) for j in range(1, r + 1)])
    return det_over_ring(rows)


def flagged_schur(lam: Sequence[int], flag: Sequence[int], vars: Sequence) -> Scalar:
    """multi_schur with row alphabets (x_1, ..., x_{flag_i})."""
    lam = Partition(lam)
    flag = tuple(int(f) for f in flag)
    if any(f <= 0 for f in flag):
        raise ValueError(f"flag entries must be positive: {flag}")
    if any(flag[i] > flag[i + 1] for i in range(len(flag) - 1)):
        raise ValueError(f"flag must be weakly increasing: {flag}")
    if len(flag) < len(lam):
        raise ValueError(f"flag has {len(flag)} rows, shape needs {len(lam)}")
    xs = as_alphabet(vars)
    if flag and flag[-1] > len(xs):
        raise ValueError(f"flag {flag} exceeds the {len(xs)} given variables")
    r = len(lam)
    rows = [
        [h_complete(lam[i - 1] - i + j, xs[: flag[i - 1]]) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    return det_over_ring(rows)


def schur_expand_multischur(lam: Sequence[int], bx: AlphabetSequence, by: AlphabetSequence) -> SymFunc:
    """Expansion over mu inside lam with coefficient
    det( h_{lam_i - mu_j - i + j}(x^(i)/y^(i)) )."""
    lam = Partition(lam)
    r = len(lam)
    alphabets = [(bx.alphabet(i), by.alphabet(i)) for i in range(1, r + 1)]
    coeffs: dict[Partition, Scalar] = {}
    for mu in subpartitions(lam):
        rows = []
        for i in range(1, r + 1):
            x, y = alphabets[i - 1]
            rows.append([h_super(lam[i - 1] - mu.part(j) - i + j, x, y) for j in range(1, r + 1)])
        c = det_over_ring(rows)
        if c:
            coeffs[mu] = c
    return SymFunc(coeffs)


def refined_dual_grothendieck(lam: Sequence[int], t: Sequence) -> SymFunc:
    """Schur expansion with row alphabets (t_1, ..., t_{i-1})."""
    lam = Partition(lam)
    refined_alphabet(t, len(lam) if lam else 1)  # validates t is long enough
    return schur_expand_multischur(lam, refined_sequence(t), empty_sequence())


def expand_in_refined_basis(
    lam: Sequence[int], bx: AlphabetSequence, by: AlphabetSequence, t: Sequence
) -> dict[Partition, Scalar]:
    """Coefficients on the refined dual basis indexed by mu inside lam:
    det( h_{lam_i - mu_j - i + j}(x^(i) / (y^(i) u (t_1..t_{j-1}))) )."""
    lam = Partition(lam)
    r = len(lam)
    xs = [bx.alphabet(i) for i in range(1, r + 1)]
    ys = [by.alphabet(i) for i in range(1, r + 1)]
    ts = [refined_alphabet(t, j) for j in range(1, r + 1)]
    out: dict[Partition, Scalar] = {}
    for mu in subpartitions(lam):
        rows = [
            [
                h_super(lam[i - 1] - mu.part(j) - i + j, xs[i - 1], ys[i - 1] + ts[j - 1])
                for j in range(1, r + 1)
            ]
            for i in range(1, r + 1)
        ]
        c = det_over_ring(rows)
        if c:
            out[mu] = c
    return out


def truncated_dual_expansion(lam: Sequence[int], bx: AlphabetSequence, r: int, D: int) -> SymFunc:
    """Expansion over mu containing lam with at most r rows:
    det( e_{-lam_i + mu_j + i - j}(-x^(i)) ), size r, truncated at D."""
    lam = Partition(lam)
    if r < len(lam):
        raise ValueError(f"need r >= {len(lam)} for {lam}, got {r}")
    if D < lam.weight:
        raise ValueError(f"degree bound {D} is below |lam| = {lam.weight}")
    neg = [negate_alphabet(bx.alphabet(i)) for i in range(1, r + 1)]
    coeffs: dict[Partition, Scalar] = {}
    for mu in superpartitions(lam, D, max_length=r):
        rows = [
            [e_elem(-lam.part(i) + mu.part(j) + i - j, neg[i - 1]) for j in range(1, r + 1)]
            for i in range(1, r + 1)
        ]
        c = det_over_ring(rows)
        if c:
            coeffs[mu] = c
    return SymFunc(coeffs, truncation=D)


def stable_dual_in_G(
    lam: Sequence[int], bx: AlphabetSequence, t: Sequence, D: int
) -> dict[Partition, Scalar]:
    """Coefficients on the stable basis indexed by mu containing lam:
    det( h_{-lam_i + mu_j + i - j}((t_1..t_{j-1}) / x^(i)) ), size
    max(R, len(mu)) where R comes from the stable growth of bx."""
    lam = Partition(lam)
    st = bx.stable_tail()
    if st is None:
        raise StabilityError("bx does not grow one letter per row from any point on")
    R, _ = st
    if D < lam.weight:
        raise ValueError(f"degree bound {D} is below |lam| = {lam.weight}")
    out: dict[Partition, Scalar] = {}
    for mu in superpartitions(lam, D):
        S = max(R, len(mu))
        rows = [
            [
                h_super(-lam.part(i) + mu.part(j) + i - j, refined_alphabet(t, j), bx.alphabet(i))
                for j in range(1, S + 1)
            ]
            for i in range(1, S + 1)
        ]
        c = det_over_ring(rows)
        if c:
            out[mu] = c
    return out


def stable_grothendieck_schur(lam: Sequence[int], t: Sequence, D: int) -> SymFunc:
    """Schur expansion of the stable series up to degree D: coefficient of
    s_mu is det( e_{-lam_i + mu_j + i - j}(-(t_1..t_{i-1})) ), size
    max(len(mu), len(lam))."""
    lam = Partition(lam)
    if D < lam.weight:
        raise ValueError(f"degree bound {D} is below |lam| = {lam.weight}")
    coeffs: dict[Partition, Scalar] = {}
    for mu in superpartitions(lam, D):
        r = max(len(mu), len(lam))
        rows = [
            [
                e_elem(-lam.part(i) + mu.part(j) + i - j, negate_alphabet(refined_alphabet(t, i)))
                for j in range(1, r + 1)
            ]
            for i in range(1, r + 1)
        ]
        c = det_over_ring(rows)
        if c:
            coeffs[mu] = c
    return SymFunc(coeffs, truncation=D)


def skew_multi_schur(
    lam: Sequence[int], mu: Sequence[int], bx: AlphabetSequence, by: AlphabetSequence
) -> Scalar:
    """det( h_{lam_i - mu_j - i + j}(x^(i)/y^(i)) ), size max of lengths;
    vanishes unless mu fits inside lam."""
    lam, mu = Partition(lam), Partition(mu)
    r = max(len(lam), len(mu))
    rows = []
    for i in range(1, r + 1):
        x, y = bx.alphabet(i), by.alphabet(i)
        rows.append([h_super(lam.part(i) - mu.part(j) - i + j, x, y) for j in range(1, r + 1)])
    return det_over_ring(rows)


# -- h-generator polynomials (internal to skew_function) --------------


class _HPoly:
    """Polynomial in the generators h_1(X), h_2(X), ... with Scalar
    coefficients; keys are sorted tuples of generator indices."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] = ()):
        self.terms = {k: v for k, v in dict(terms).items() if v}

    @classmethod
    def zero(cls) -> "_HPoly":
        return cls()

    @classmethod
    def one(cls) -> "_HPoly":
        return cls({(): _ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "_HPoly") -> "_HPoly":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            acc = terms.get(k)
            terms[k] = v if acc is None else acc + v
        return _HPoly(terms)

    def __neg__(self) -> "_HPoly":
        return _HPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "_HPoly") -> "_HPoly":
        return self + (-other)

    def __mul__(self, other: "_HPoly") -> "_HPoly":
        terms: dict[tuple[int, ...], Scalar] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(sorted(k1 + k2))
                v = v1 * v2
                acc = terms.get(k)
                terms[k] = v if acc is None else acc + v
        return _HPoly(terms)


@lru_cache(maxsize=None)
def _h_word_schur(word: tuple[int, ...]) -> SymFunc:
    """h_{n_1} h_{n_2} ... as a Schur-basis element."""
    f = sym_schur(())
    for n in word:
        f = pieri_mult_h(f, n)
    return f


def skew_function(
    lam: Sequence[int],
    mu: Sequence[int],
    bx: AlphabetSequence,
    by: AlphabetSequence,
    bp: AlphabetSequence,
) -> SymFunc:
    """Skew expansion det( sum_{m+n = lam_i - mu_j - i + j}
    h_m(x^(i) / (y^(i) u p^(j))) h_n(X) ), folded to the Schur basis."""
    lam, mu = Partition(lam), Partition(mu)
    if bp.stable_tail() is None:
        raise StabilityError("bp does not grow one letter per row from any point on")
    r = max(len(lam), len(mu))
    rows = []
    for i in range(1, r + 1):
        x, y = bx.alphabet(i), by.alphabet(i)
        row = []
        for j in range(1, r + 1):
            k = lam.part(i) - mu.part(j) - i + j
            yp = y + bp.alphabet(j)
            entry = _HPoly(
                {(n,) if n else (): h_super(k - n, x, yp) for n in range(0, max(k, 0) + 1)}
            )
            row.append(entry)
        rows.append(row)
    det = det_over_ring(rows, zero=_HPoly.zero(), one=_HPoly.one())
    out = sym_zero()
    for word, c in det.terms.items():
        out = out + _h_word_schur(word).scale(c)
    return out


# -- Schur-basis arithmetic -------------------------------------------


def _horizontal_strips(mu: Partition, n: int) -> Iterator[Partition]:
    """All nu >= mu where nu/mu is a horizontal strip of n cells."""
    k = len(mu)
    parts: list[int] = []

    def rec(i: int, remaining: int):
        if i == k + 1:
            if remaining == 0:
                trimmed = parts[:]
                while trimmed and trimmed[-1] == 0:
                    trimmed.pop()
                yield Partition(trimmed)
            return
        base = mu[i] if i < k else 0
        cap = remaining if i == 0 else min(remaining, mu[i - 1] - base)
        for a in range(cap, -1, -1):
            parts.append(base + a)
            yield from rec(i + 1, remaining - a)
            parts.pop()

    yield from rec(0, n)


def pieri_mult_h(f: SymFunc, n: int) -> SymFunc:
    """Multiply by h_n(X): each s_mu spreads over horizontal n-strips."""
    if n < 0:
        raise ValueError(f"h index must be >= 0: {n}")
    if n == 0:
        return f
    coeffs: dict[Partition, Scalar] = {}
    for mu, c in f.terms():
        for nu in _horizontal_strips(mu, n):
            acc = coeffs.get(nu)
            coeffs[nu] = c if acc is None else acc + c
    return SymFunc(coeffs, f.truncation)


def hall_inner(f: SymFunc, g: SymFunc) -> Scalar:
    """Pair Schur coefficients diagonally; errors when a truncation hides
    needed coefficients of the other operand."""
    if f.truncation is not None and g.max_degree() > f.truncation:
        raise TruncationError(
            f"left operand is only known up to degree {f.truncation}, "
            f"right has support in degree {g.max_degree()}"
        )
    if g.truncation is not None and f.max_degree() > g.truncation:
        raise TruncationError(
            f"right operand is only known up to degree {g.truncation}, "
            f"left has support in degree {f.max_degree()}"
        )
    total = _ZERO
    for mu, c in f.terms():
        other = g.coefficient(mu)
        if other:
            total = total + c * other
    return total


@lru_cache(maxsize=None)
def _jacobi_trudi(mu: Partition, vals: Alphabet) -> Scalar:
    n = len(mu)
    rows = [
        [h_complete(mu[i - 1] - i + j, vals) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return det_over_ring(rows)


def eval_symfunc(f: SymFunc, vals: Sequence) -> Scalar:
    """Specialize to finitely many variables; s_mu vanishes when mu has
    more rows than there are variables."""
    xs = as_alphabet(vals)
    key = tuple(sorted(xs, key=Scalar.sort_key))
    total = _ZERO
    for mu, c in f.terms():
        if len(mu) > len(xs):
            continue
        total = total + c * _jacobi_trudi(mu, key)
    return total


# -- brute-force oracles ----------------------------------------------


def _ssyt_monomials(shape: Partition, vals: Alphabet, row_caps: Sequence[int]) -> Scalar:
    """Sum of content monomials over semistandard fillings with entries
    1..len(vals), row i capped at row_caps[i-1]."""
    total = _ZERO
    rows_done: list[tuple[int, ...]] = []

    def fill_row(i: int) -> Iterator[None]:
        if i == len(shape):
            yield None
            return
        width = shape[i]
        above = rows_done[i - 1] if i else None
        cap = row_caps[i]
        row: list[int] = []

        def cell(c: int) -> Iterator[None]:
            if c == width:
                rows_done.append(tuple(row))
                yield from fill_row(i + 1)
                rows_done.pop()
                return
            lo = row[c - 1] if c else 1
            if above is not None and c < len(above):
                lo = max(lo, above[c] + 1)
            for v in range(lo, cap + 1):
                row.append(v)
                yield from cell(c + 1)
                row.pop()

        yield from cell(0)

    for _ in fill_row(0):
        mono = _ONE
        for row in rows_done:
            for v in row:
                mono = mono * vals[v - 1]
        total = total + mono
    return total


def schur_tableau_oracle(mu: Sequence[int], vals: Sequence) -> Scalar:
    mu = Partition(mu)
    xs = as_alphabet(vals)
    if len(xs) > 6 or mu.weight > 8:
        raise TractabilityError(f"oracle bounds are 6 variables, weight 8: got {len(xs)}, {mu.weight}")
    return _ssyt_monomials(mu, xs, [len(xs)] * len(mu))


def flagged_tableau_oracle(lam: Sequence[int], flag: Sequence[int], vals: Sequence) -> Scalar:
    """Row-capped semistandard generating sum: entries in row i at most flag_i."""
    lam = Partition(lam)
    xs = as_alphabet(vals)
    if len(xs) > 6 or lam.weight > 8:
        raise TractabilityError(f"oracle bounds are 6 variables, weight 8: got {len(xs)}, {lam.weight}")
    caps = [min(flag[i], len(xs)) for i in range(len(lam))]
    return _ssyt_monomials(lam, xs, caps)


# -- theorem verifiers ------------------------------------------------


def _fresh_vars(stem: str, count: int) -> Alphabet:
    return tuple(Scalar.variable(f"{stem}{i}") for i in range(1, count + 1))


def verify_branching(
    lam: Sequence[int],
    t: Sequence,
    n: int,
    m: int,
    bx: AlphabetSequence | None = None,
    by: AlphabetSequence | None = None,
) -> bool:
    """Split the variable set: the expansion in n + m variables must equal
    the sum over inner shapes of (skew part in the first n) times (refined
    dual part in the last m)."""
    lam = Partition(lam)
    if n > 4 or m > 4:
        raise TractabilityError(f"variable counts are capped at 4: got {n}, {m}")
    if lam.weight > 6:
        raise TractabilityError(f"weight is capped at 6: got {lam.weight}")
    if bx is None:
        bx = refined_sequence(t)
    if by is None:
        by = empty_sequence()
    xs = _fresh_vars("X", n)
    ys = _fresh_vars("Y", m)
    lhs = eval_symfunc(schur_expand_multischur(lam, bx, by), xs + ys)
    bp = refined_sequence(t)
    rhs = _ZERO
    for mu in subpartitions(lam):
        left = eval_symfunc(skew_function(lam, mu, bx, by, bp), xs)
        if not left:
            continue
        rhs = rhs + left * eval_symfunc(refined_dual_grothendieck(mu, t), ys)
    return lhs == rhs


def _degree_in(mono, names: frozenset[str]) -> int:
    return sum(e for name, e in mono if name in names)


def _truncate_in(p: Scalar, names: frozenset[str], D: int) -> Scalar:
    kept = {mono: c for mono, c in p.terms() if _degree_in(mono, names) <= D}
    return Scalar(kept)


def verify_cauchy(t: Sequence, D: int, n: int, m: int) -> bool:
    """Sum over |lam| <= D of (dual element in X) times (stable element
    in Y) against the product of geometric series, compared in all
    monomials of Y-degree <= D."""
    if D > 6:
        raise TractabilityError(f"degree bound is capped at 6: got {D}")
    if n > 3 or m > 3:
        raise TractabilityError(f"variable counts are capped at 3: got {n}, {m}")
    xs = _fresh_vars("X", n)
    ys = _fresh_vars("Y", m)
    ynames = frozenset(f"Y{j}" for j in range(1, m + 1))
    lhs = _ZERO
    for lam in partitions_up_to_weight(D):
        a = eval_symfunc(refined_dual_grothendieck(lam, t), xs)
        if not a:
            continue
        b = eval_symfunc(stable_grothendieck_schur(lam, t, D), ys)
        lhs = lhs + a * b
    rhs = _ONE
    for x in xs:
        for y in ys:
            geom = _ZERO
            for k in range(D + 1):
                geom = geom + (x * y) ** k
            rhs = _truncate_in(rhs * geom, ynames, D)
    return _truncate_in(lhs, ynames, D) == rhs


# -- serialization ----------------------------------------------------


def symfunc_to_json(f: SymFunc) -> dict:
    from .exactalg import scalar_to_json

    return {
        "basis": "schur",
        "truncation": f.truncation,
        "terms": [
            {"partition": list(mu), "coeff": scalar_to_json(c)} for mu, c in f.terms()
        ],
    }


def symfunc_from_json(data: Mapping) -> SymFunc:
    from .exactalg import scalar_from_json

    if data.get("basis", "schur") != "schur":
        raise ValueError(f"unsupported basis: {data.get('basis')!r}")
    coeffs: dict[Partition, Scalar] = {}
    for item in data.get("terms", ()):
        mu = Partition(item["partition"])
        coeffs[mu] = coeffs.get(mu, _ZERO) + scalar_from_json(item["coeff"])
    return SymFunc(coeffs, data.get("truncation"))
