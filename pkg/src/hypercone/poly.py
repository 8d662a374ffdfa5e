"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``nvars`` variables maps exponent tuples to nonzero
``Fraction`` coefficients; the zero polynomial has no terms.  Values are
immutable once built.

    x0**2 * x1 + 3   ->   {(2, 1): Fraction(1), (0, 0): Fraction(3)}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, InputError, NotHomogeneousError, PreconditionError
from .realroots import UnivariatePolynomial

Exponent = tuple[int, ...]
Point = tuple[Fraction, ...]


def as_point(coords: Iterable) -> Point:
    """Coerce a sequence of ints/strings/Fractions to an exact point."""
    return tuple(Fraction(c) for c in coords)


def ones(n: int) -> Point:
    return (Fraction(1),) * n


def unit_vector(n: int, i: int) -> Point:
    return tuple(Fraction(int(j == i)) for j in range(n))


def indicator(n: int, subset: Iterable[int]) -> Point:
    """Characteristic vector of a set of 0-based indices."""
    s = set(subset)
    return tuple(Fraction(int(j in s)) for j in range(n))


class Polynomial:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        if nvars < 0:
            raise InputError("nvars must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars or any(a < 0 for a in exp):
                raise DimensionError(f"bad exponent {exp} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        # trusted constructor: caller guarantees canonical terms
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = {e: c for e, c in terms.items() if c}
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls._raw(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in lexicographic exponent order (the canonical serialization order)."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Total degree, ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_str()!r})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exp, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(exp) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial._raw(self.nvars, {e: c * a for e, a in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._raw(self.nvars, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InputError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Sequence) -> Fraction:
        return evaluate(self, x)

    def derivative(self, j: int) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            if e[j]:
                f = list(e)
                f[j] -= 1
                out[tuple(f)] = c * e[j]
        return Polynomial._raw(self.nvars, out)

    def directional_derivative(self, e: Sequence) -> "Polynomial":
        """<grad p, e>."""
        if len(e) != self.nvars:
            raise DimensionError(f"direction has length {len(e)}, expected {self.nvars}")
        out: dict[Exponent, Fraction] = {}
        for j, ej in enumerate(e):
            if not ej:
                continue
            for exp, c in self._terms.items():
                if exp[j]:
                    f = list(exp)
                    f[j] -= 1
                    f = tuple(f)
                    out[f] = out.get(f, 0) + c * exp[j] * ej
        return Polynomial._raw(self.nvars, out)


@dataclass(frozen=True)
class LinearForm:
    """l(x) = sum_i coeffs[i] * x_i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_point(self.coeffs))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: Sequence) -> Fraction:
        if len(x) != len(self.coeffs):
            raise DimensionError(f"point has length {len(x)}, expected {len(self.coeffs)}")
        return sum((a * Fraction(b) for a, b in zip(self.coeffs, x)), Fraction(0))

    def scaled(self, c) -> "LinearForm":
        c = Fraction(c)
        return LinearForm(tuple(c * a for a in self.coeffs))

    def to_polynomial(self) -> Polynomial:
        n = len(self.coeffs)
        terms = {}
        for i, a in enumerate(self.coeffs):
            if a:
                terms[tuple(int(j == i) for j in range(n))] = a
        return Polynomial._raw(n, terms)


def ring_ops(a: Polynomial, b, op: str) -> Polynomial:
    """Dispatch ``op`` in {"add", "mul", "scale"}; for "scale" ``b`` is a rational."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise InputError(f"unknown ring operation {op!r}")


def evaluate(p: Polynomial, x: Sequence) -> Fraction:
    if len(x) != p.nvars:
        raise DimensionError(f"point has length {len(x)}, expected {p.nvars}")
    x = as_point(x)
    total = Fraction(0)
    for exp, c in p.terms.items():
        v = c
        for xi, a in zip(x, exp):
            if a:
                v *= xi**a
        total += v
    return total


def homogeneous_degree(p: Polynomial) -> int | None:
    """Common total degree of all terms, or ``None`` if mixed or zero."""
    degs = {sum(e) for e in p.terms}
    return degs.pop() if len(degs) == 1 else None


def _require_homogeneous(p: Polynomial) -> int:
    d = homogeneous_degree(p)
    if d is None:
        raise NotHomogeneousError("polynomial is zero or not homogeneous")
    return d


def polar(p: Polynomial, e: Sequence, i: int) -> Polynomial:
    """The i-th polar of ``p`` with respect to ``e``.

    Computed as the i-fold directional derivative ``D_e^i p``, i.e. i! times
    the degree-i coefficient of ``t -> p(x + t e)``.  Homogeneous of degree
    ``d - i``; the d-th polar is the constant ``d! p(e)``.  Polars of the
    zero polynomial are zero.
    """
    if p.is_zero() and i >= 0:
        # the zero form is homogeneous of every degree
        return p
    d = _require_homogeneous(p)
    if i < 0 or i > d:
        raise PreconditionError(f"polar order {i} outside 0..{d}")
    e = as_point(e)
    if len(e) != p.nvars:
        raise DimensionError(f"direction has length {len(e)}, expected {p.nvars}")
    for _ in range(i):
        p = p.directional_derivative(e)
    return p


def restrict_to_line(p: Polynomial, q: Sequence, e: Sequence) -> UnivariatePolynomial:
    """Coefficients of lambda -> p(q + lambda e), by direct substitution."""
    if len(q) != p.nvars or len(e) != p.nvars:
        raise DimensionError("line data does not match the number of variables")
    q, e = as_point(q), as_point(e)
    lines = [UnivariatePolynomial([qi, ei]) for qi, ei in zip(q, e)]
    powers: dict[tuple[int, int], UnivariatePolynomial] = {}

    def power(j: int, a: int) -> UnivariatePolynomial:
        key = (j, a)
        if key not in powers:
            powers[key] = lines[j] ** a
        return powers[key]

    total = UnivariatePolynomial()
    for exp, c in p.terms.items():
        u = UnivariatePolynomial([c])
        for j, a in enumerate(exp):
            if a:
                u = u * power(j, a)
        total = total + u
    return total


def elementary_symmetric(n: int, k: int) -> Polynomial:
    if n < 1:
        raise InputError("n must be positive")
    if not 0 <= k <= n:
        raise InputError(f"k={k} outside 0..{n}")
    terms = {}
    for idx in combinations(range(n), k):
        s = set(idx)
        terms[tuple(int(j in s) for j in range(n))] = Fraction(1)
    return Polynomial._raw(n, terms)


def product_of_forms(forms: Sequence[LinearForm]) -> Polynomial:
    if not forms:
        raise InputError("empty list of linear forms")
    n = forms[0].nvars
    if any(f.nvars != n for f in forms):
        raise DimensionError("linear forms have different numbers of variables")
    out = Polynomial.constant(n, 1)
    for f in forms:
        out = out * f.to_polynomial()
    return out


def compose(p: Polynomial, subs: Sequence[Polynomial]) -> Polynomial:
    """p(subs[0], ..., subs[k-1]); all substitutes share one ring."""
    if len(subs) != p.nvars:
        raise DimensionError(f"need {p.nvars} substitutes, got {len(subs)}")
    if not subs:
        raise InputError("cannot compose a polynomial in zero variables")
    m = subs[0].nvars
    total = Polynomial.zero(m)
    for exp, c in p.terms.items():
        term = Polynomial.constant(m, c)
        for s, a in zip(subs, exp):
            if a:
                term = term * s**a
        total = total + term
    return total

