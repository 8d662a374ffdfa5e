"""Univariate rational polynomials and exact real-root certification.

Everything here is decided with Sturm sequences over ``Fraction``; no root is
ever approximated.  Interval counts use the half-open convention ``(a, b]``
so that counts over adjacent intervals add up.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, NotRealRootedError

NEG_INF = float("-inf")
POS_INF = float("inf")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UnivariatePolynomial:
    """Polynomial in one variable with ``coeffs[i]`` the coefficient of lambda**i.

    Leading zeros are never stored, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UnivariatePolynomial":
        u = cls([lead])
        for r in roots:
            u = u * cls([-Fraction(r), 1])
        return u

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(-c for c in self.coeffs)

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(out)

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "UnivariatePolynomial":
        if not isinstance(other, UnivariatePolynomial):
            c = Fraction(other)
            return UnivariatePolynomial(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UnivariatePolynomial":
        out = UnivariatePolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "UnivariatePolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return UnivariatePolynomial(), self
        quot = [Fraction(0)] * dq
        lead = other.leading
        m = other.degree
        for k in range(dq - 1, -1, -1):
            c = rem[k + m] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UnivariatePolynomial(quot), UnivariatePolynomial(rem[:m])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UnivariatePolynomial":
        return self * (1 / self.leading) if self.coeffs else self

    def primitive(self) -> "UnivariatePolynomial":
        """Positive rational multiple with coprime integer coefficients."""
        if not self.coeffs:
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return UnivariatePolynomial(Fraction(c, g) for c in ints)

    def shift_down(self, k: int) -> "UnivariatePolynomial":
        """Divide by lambda**k, assuming the low k coefficients vanish."""
        return UnivariatePolynomial(self.coeffs[k:])


def _require_nonzero(u: UnivariatePolynomial) -> None:
    if u.is_zero():
        raise InputError("operation undefined for the zero polynomial")


def gcd(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def squarefree_part(u: UnivariatePolynomial) -> UnivariatePolynomial:
    _require_nonzero(u)
    if u.degree == 0:
        return UnivariatePolynomial([1])
    return (u // gcd(u, u.derivative())).primitive()


def sturm_chain(u: UnivariatePolynomial) -> list[UnivariatePolynomial]:
    """Sturm sequence u, u', -rem(u, u'), ...

    Each remainder is rescaled by a positive rational, which keeps the integer
    sizes in check and leaves every sign unchanged.
    """
    _require_nonzero(u)
    chain = [u.primitive()]
    nxt = u.derivative().primitive()
    while not nxt.is_zero():
        chain.append(nxt)
        nxt = (-(chain[-2] % chain[-1])).primitive()
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(u: UnivariatePolynomial, x) -> int:
    if x == POS_INF:
        return _sign(u.leading)
    if x == NEG_INF:
        return _sign(u.leading) * (-1 if u.degree % 2 else 1)
    return _sign(u(Fraction(x)))


def sign_variations(chain: Sequence[UnivariatePolynomial], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(u: UnivariatePolynomial, a=NEG_INF, b=POS_INF) -> int:
    """Number of distinct real roots of ``u`` in ``(a, b]``.

    ``a`` and ``b`` are rationals or the float infinities ``NEG_INF`` and
    ``POS_INF``.
    """
    _require_nonzero(u)
    if not a < b:
        raise InputError(f"empty interval ({a}, {b}]")
    # the chain of the squarefree part is a genuine Sturm sequence, so
    # endpoint roots are handled by dropping zeros
    chain = sturm_chain(squarefree_part(u))
    return sign_variations(chain, a) - sign_variations(chain, b)


def is_real_rooted(u: UnivariatePolynomial) -> bool:
    """True iff every complex root of ``u`` is real."""
    s = squarefree_part(u)
    if s.degree == 0:
        return True
    return sturm_count(s) == s.degree


def mult_at_zero(u: UnivariatePolynomial) -> int:
    """Order of vanishing of ``u`` at the origin."""
    _require_nonzero(u)
    return next(i for i, c in enumerate(u.coeffs) if c)


def all_roots_nonneg(u: UnivariatePolynomial) -> bool:
    """True iff every root of the real-rooted polynomial ``u`` is >= 0.

    Raises ``NotRealRootedError`` when ``u`` has non-real roots.
    """
    _require_nonzero(u)
    if not is_real_rooted(u):
        raise NotRealRootedError(f"{u!r} has non-real roots")
    rest = u.shift_down(mult_at_zero(u))
    if rest.degree == 0:
        return True
    # 0 is not a root of rest, so (-inf, 0] counts exactly the negative roots
    return sturm_count(rest, NEG_INF, Fraction(0)) == 0


def all_roots_positive(u: UnivariatePolynomial) -> bool:
    """True iff every root of the real-rooted polynomial ``u`` is > 0."""
    return mult_at_zero(u) == 0 and all_roots_nonneg(u)
