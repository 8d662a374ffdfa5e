"""Symmetric linear pencils x -> A(x) = x_1 A_1 + ... + x_n A_n.

Includes exact symbolic determinants, exact PSD tests through the
characteristic polynomial, and three explicit constructions:

* ``renegar_pencil``: the (d-1)x(d-1) pencil whose determinant is the first
  polar of a product of d linear forms,
* ``realization_pencil``: L diag(x) L^T and its Cauchy-Binet expansion,
* ``e2_arrowhead``: an arrowhead pencil with determinant 2 E_1^(n-1) E_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import DimensionError, InputError, PreconditionError
from .poly import (
    LinearForm,
    Polynomial,
    as_point,
    elementary_symmetric,
    polar,
    product_of_forms,
)
from .realroots import UnivariatePolynomial, all_roots_nonneg, all_roots_positive

Matrix = tuple[tuple[Fraction, ...], ...]

MAX_SYMBOLIC_SIZE = 12


def _as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(a) for a in row) for row in rows)


@dataclass(frozen=True)
class SymmetricMatrix:
    entries: Matrix

    def __post_init__(self):
        m = _as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        for i, row in enumerate(m):
            if len(row) != len(m):
                raise DimensionError(f"row {i} has length {len(row)}, expected {len(m)}")
        for i in range(len(m)):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise InputError(
                        f"matrix not symmetric: entry ({i},{j})={m[i][j]} but ({j},{i})={m[j][i]}"
                    )

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, m: int) -> "SymmetricMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))


@dataclass(frozen=True)
class SymmetricPencil:
    """The tuple (A_1, ..., A_n) of symmetric size x size matrices."""

    nvars: int
    size: int
    mats: tuple[SymmetricMatrix, ...]

    def __post_init__(self):
        mats = tuple(
            a if isinstance(a, SymmetricMatrix) else SymmetricMatrix(a) for a in self.mats
        )
        object.__setattr__(self, "mats", mats)
        if self.nvars < 1:
            raise InputError("a pencil needs at least one variable")
        if len(mats) != self.nvars:
            raise DimensionError(f"expected {self.nvars} matrices, got {len(mats)}")
        for k, a in enumerate(mats):
            if a.size != self.size:
                raise DimensionError(f"matrix {k} has size {a.size}, expected {self.size}")

    def entry(self, i: int, j: int) -> Polynomial:
        """The (i, j) entry of A(x) as a linear polynomial."""
        n = self.nvars
        terms = {}
        for k, a in enumerate(self.mats):
            if a.entries[i][j]:
                terms[tuple(int(t == k) for t in range(n))] = a.entries[i][j]
        return Polynomial(n, terms)


@dataclass(frozen=True)
class RealizationMatrix:
    """A k x n rational matrix whose columns realize a matroid."""

    entries: Matrix

    def __post_init__(self):
        m = _as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        if m and any(len(r) != len(m[0]) for r in m):
            raise DimensionError("ragged realization matrix")

    @classmethod
    def empty(cls, cols: int) -> "RealizationMatrix":
        # a 0 x n matrix cannot carry its width in the rows
        obj = cls(())
        object.__setattr__(obj, "_cols", cols)
        return obj

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        if self.entries:
            return len(self.entries[0])
        return getattr(self, "_cols", 0)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def submatrix(self, cols: Sequence[int]) -> Matrix:
        return tuple(tuple(r[j] for j in cols) for r in self.entries)


def rational_det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square rational matrix by fraction-free Bareiss elimination."""
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("determinant of a non-square matrix")
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else Fraction(1)


def rational_rank(rows: Sequence[Sequence]) -> int:
    a = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, len(a)):
            f = a[i][c] / a[rank][c]
            if f:
                for j in range(c, ncols):
                    a[i][j] -= f * a[rank][j]
        rank += 1
    return rank


def charpoly(m: SymmetricMatrix) -> UnivariatePolynomial:
    """det(lambda I - M) via the Faddeev-LeVerrier recursion."""
    a = m.entries
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk = [
            [sum((a[i][t] * mk[t][j] for t in range(n)), Fraction(0)) + (c_prev if i == j else 0)
             for j in range(n)]
            for i in range(n)
        ]
        trace = sum((a[i][t] * mk[t][i] for i in range(n) for t in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return UnivariatePolynomial(coeffs)


def is_psd(m: SymmetricMatrix, strict: bool = False) -> bool:
    """Exact test of M >= 0 (or M > 0 with ``strict``).

    The characteristic polynomial of a symmetric matrix is real-rooted, so
    the sign pattern of its roots decides definiteness.
    """
    if m.size == 0:
        return True
    u = charpoly(m)
    return all_roots_positive(u) if strict else all_roots_nonneg(u)


def pencil_eval(pencil: SymmetricPencil, x: Sequence) -> SymmetricMatrix:
    if len(x) != pencil.nvars:
        raise DimensionError(f"point has length {len(x)}, expected {pencil.nvars}")
    x = as_point(x)
    m = pencil.size
    out = [[Fraction(0)] * m for _ in range(m)]
    for xk, a in zip(x, pencil.mats):
        if xk:
            for i in range(m):
                for j in range(m):
                    out[i][j] += xk * a.entries[i][j]
    return SymmetricMatrix(_as_matrix(out))


def polynomial_det(entries: Sequence[Sequence[Polynomial]], nvars: int) -> Polynomial:
    """Determinant of a square matrix of polynomials.

    Laplace expansion row by row, memoized on the set of columns already
    used, so the cost is about 2^m * m polynomial products.
    """
    m = len(entries)
    if m > MAX_SYMBOLIC_SIZE:
        raise PreconditionError(f"symbolic determinant limited to size {MAX_SYMBOLIC_SIZE}, got {m}")
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def minor(used: int) -> Polynomial:
        if used == full:
            return Polynomial.constant(nvars, 1)
        row = bin(used).count("1")
        total = Polynomial.zero(nvars)
        sign = 1
        for j in range(m):
            if used >> j & 1:
                continue
            a = entries[row][j]
            if not a.is_zero():
                sub = minor(used | 1 << j)
                if not sub.is_zero():
                    term = a * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0)


def pencil_det(pencil: SymmetricPencil) -> Polynomial:
    """det A(x) as a polynomial; the empty pencil has determinant 1."""
    m = pencil.size
    entries = [[pencil.entry(i, j) for j in range(m)] for i in range(m)]
    return polynomial_det(entries, pencil.nvars)


def pencil_from_entries(nvars: int, entries: Sequence[Sequence[Sequence]]) -> SymmetricPencil:
    """Build a pencil from a matrix whose entries are coefficient vectors.

    ``entries[i][j][k]`` is the coefficient of x_k in A(x)[i][j].
    """
    m = len(entries)
    mats = tuple(
        SymmetricMatrix(tuple(tuple(entries[i][j][k] for j in range(m)) for i in range(m)))
        for k in range(nvars)
    )
    return SymmetricPencil(nvars, m, mats)


def block_diag(a: SymmetricPencil, b: SymmetricPencil) -> SymmetricPencil:
    if a.nvars != b.nvars:
        raise DimensionError("pencils have different numbers of variables")
    m = a.size + b.size
    mats = []
    for ak, bk in zip(a.mats, b.mats):
        rows = [[Fraction(0)] * m for _ in range(m)]
        for i in range(a.size):
            rows[i][: a.size] = ak.entries[i]
        for i in range(b.size):
            rows[a.size + i][a.size:] = bk.entries[i]
        mats.append(SymmetricMatrix(_as_matrix(rows)))
    return SymmetricPencil(a.nvars, m, tuple(mats))


def normalize_forms(forms: Sequence[LinearForm], e: Sequence) -> list[LinearForm]:
    """Rescale every form so that l_i(e) = 1; requires l_i(e) > 0."""
    if not forms:
        raise InputError("empty list of linear forms")
    e = as_point(e)
    out = []
    for i, f in enumerate(forms):
        v = f(e)
        if v <= 0:
            raise PreconditionError(f"form {i} has value {v} <= 0 at the direction; e is not interior")
        out.append(f.scaled(1 / v))
    return out


def renegar_pencil(forms: Sequence[LinearForm], e: Sequence) -> SymmetricPencil:
    """diag(l_1, ..., l_{d-1}) + l_d * J for the forms normalized at ``e``.

    The last form plays the distinguished role; reordering the forms changes
    the pencil but not its determinant or the cone it cuts out.
    """
    forms = normalize_forms(forms, e)
    n = forms[0].nvars
    if any(f.nvars != n for f in forms):
        raise DimensionError("linear forms have different numbers of variables")
    last = forms[-1].coeffs
    m = len(forms) - 1
    entries = [
        [
            tuple(a + b for a, b in zip(forms[i].coeffs, last)) if i == j else last
            for j in range(m)
        ]
        for i in range(m)
    ]
    return pencil_from_entries(n, entries)


@dataclass(frozen=True)
class Theorem1Report:
    equal: bool
    lhs: Polynomial  # det of the pencil
    rhs: Polynomial  # first polar of the product
    pencil: SymmetricPencil = field(repr=False)
    forms: tuple[LinearForm, ...] = field(repr=False)


def verify_theorem1(forms: Sequence[LinearForm], e: Sequence) -> Theorem1Report:
    """Compare det of the Renegar pencil against the first polar of prod l_i."""
    normalized = normalize_forms(forms, e)
    pencil = renegar_pencil(normalized, e)
    lhs = pencil_det(pencil)
    rhs = polar(product_of_forms(normalized), e, 1)
    return Theorem1Report(lhs == rhs, lhs, rhs, pencil, tuple(normalized))


def realization_pencil(l: RealizationMatrix) -> tuple[SymmetricPencil, Polynomial]:
    """A_i = L_i L_i^T for the columns L_i, and sum_{|I|=k} det(L_I)^2 x^I."""
    k, n = l.rows, l.cols
    if k == 0:
        raise InputError("realization matrix has no rows")
    mats = []
    for i in range(n):
        col = l.column(i)
        mats.append(SymmetricMatrix(tuple(tuple(a * b for b in col) for a in col)))
    pencil = SymmetricPencil(n, k, tuple(mats))
    terms = {}
    for cols in combinations(range(n), k):
        minor = rational_det(l.submatrix(cols))
        if minor:
            s = set(cols)
            terms[tuple(int(j in s) for j in range(n))] = minor * minor
    return pencil, Polynomial(n, terms)


def e2_arrowhead(n: int, literal_paper_matrix: bool = False) -> SymmetricPencil:
    """Arrowhead pencil with E_1(x) on the diagonal and x_i in the arrow.

    By default the arrow carries all n variables, giving an (n+1)x(n+1) pencil
    with det = 2 E_1^(n-1) E_2.  With ``literal_paper_matrix`` the arrow stops
    at x_{n-1} (size n), whose det is E_1^(n-2) (2 E_2 + x_n^2).
    """
    if n < 2:
        raise InputError("e2_arrowhead needs n >= 2")
    arms = n - 1 if literal_paper_matrix else n
    m = arms + 1
    zero = (0,) * n
    e1 = (1,) * n
    entries = [[zero] * m for _ in range(m)]
    for i in range(m):
        entries[i][i] = e1
    for i in range(1, m):
        arm = tuple(int(k == i - 1) for k in range(n))
        entries[0][i] = entries[i][0] = arm
    return pencil_from_entries(n, entries)


def e2_target(n: int) -> Polynomial:
    """2 E_1^(n-1) E_2, the determinant the arrowhead pencil should have."""
    return (elementary_symmetric(n, 1) ** (n - 1) * elementary_symmetric(n, 2)).scale(2)
