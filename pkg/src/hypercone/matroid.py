"""Polymatroids of hyperbolic polynomials and unimodular realizations.

Subsets of the ground set {0, ..., n-1} are bitmasks throughout: subset I
is ``sum(1 << i for i in I)``, and tables are indexed by mask.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DimensionError, InputError, OrthantError, PreconditionError, SearchLimitError
from .hyperbolicity import HyperbolicContext, in_cone
from .poly import indicator, ones, restrict_to_line, unit_vector
from .realroots import mult_at_zero
from .spectra import (
    RealizationMatrix,
    pencil_det,
    rational_det,
    rational_rank,
    realization_pencil,
)

MAX_GROUND_SET = 16
MAX_SEARCH_ENTRIES = 20
_CHUNK = 1 << 15


def members(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class RankFunction:
    n: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if len(self.ranks) != 1 << self.n:
            raise DimensionError(f"rank table needs {1 << self.n} entries, got {len(self.ranks)}")

    def __call__(self, subset) -> int:
        if isinstance(subset, int):
            return self.ranks[subset]
        return self.ranks[sum(1 << i for i in set(subset))]


@dataclass(frozen=True)
class UniformSpec:
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise InputError(f"uniform matroid needs 0 <= k <= n, got k={self.k}, n={self.n}")

    def rank_function(self) -> RankFunction:
        return RankFunction(self.n, tuple(min(self.k, popcount(m)) for m in range(1 << self.n)))


def _orthant_check(ctx: HyperbolicContext, strict: bool) -> None:
    n = ctx.nvars
    if strict:
        vectors = [(m, indicator(n, members(m))) for m in range(1, 1 << n)]
    else:
        vectors = [(1 << i, unit_vector(n, i)) for i in range(n)]
    for mask, v in vectors:
        if not in_cone(ctx, v, "closed"):
            raise OrthantError(
                f"nonnegative orthant not in the cone: indicator of {list(members(mask))} fails",
                mask,
            )


def gurvits_rank(
    ctx: HyperbolicContext,
    limit: int = MAX_GROUND_SET,
    strict_orthant: bool = False,
    method: str = "plus",
) -> RankFunction:
    """I -> d - mult_0(p(chi_I + lambda e)).

    The orthant containment hypothesis is checked on the basis vectors
    (enough by convexity), or on every indicator vector with
    ``strict_orthant``.  ``method="minus"`` counts zero eigenvalues of
    chi_I instead, i.e. uses p(chi_I - lambda e); both give the same table.
    """
    n = ctx.nvars
    if n > limit:
        raise SearchLimitError(f"ground set of size {n} exceeds limit {limit}")
    if method not in ("plus", "minus"):
        raise ValueError(f"method must be 'plus' or 'minus', not {method!r}")
    _orthant_check(ctx, strict_orthant)
    d = ctx.d
    direction = ctx.e if method == "plus" else tuple(-c for c in ctx.e)
    ranks = [
        d - mult_at_zero(restrict_to_line(ctx.p, indicator(n, members(m)), direction))
        for m in range(1 << n)
    ]
    return RankFunction(n, tuple(ranks))


@dataclass(frozen=True)
class PolymatroidReport:
    polymatroid: bool
    matroid: bool
    violation: tuple[int, int] | None = None  # masks (I, J) of the first failing pair
    cardinality_violation: int | None = None  # first mask with rk(I) > |I|


def is_polymatroid(rk: RankFunction) -> PolymatroidReport:
    """Exhaustive check of nonnegativity, monotonicity and submodularity.

    Pairs are scanned with I outer and J inner, both in mask order, and the
    first violating pair is reported.
    """
    r = rk.ranks
    size = 1 << rk.n
    violation = None
    for i in range(size):
        ri = r[i]
        for j in range(size):
            u = r[i | j]
            if not (0 <= ri <= u and u <= ri + r[j] - r[i & j]):
                violation = (i, j)
                break
        if violation:
            break
    card = next((m for m in range(size) if r[m] > popcount(m)), None)
    poly_ok = violation is None
    return PolymatroidReport(poly_ok, poly_ok and card is None, violation, card)


def equals_uniform(rk: RankFunction, spec: UniformSpec) -> bool:
    if rk.n != spec.n:
        raise DimensionError(f"rank function on {rk.n} elements, uniform spec on {spec.n}")
    return rk.ranks == spec.rank_function().ranks


def column_rank_function(l: RealizationMatrix) -> RankFunction:
    """I -> rank of the column submatrix L_I."""
    n = l.cols
    ranks = [rational_rank(l.submatrix(members(m))) if m else 0 for m in range(1 << n)]
    return RankFunction(n, tuple(ranks))


def is_unimodular_realization(l: RealizationMatrix, spec: UniformSpec) -> bool:
    """True iff every maximal (k x k) minor of L is +1 or -1."""
    if (l.rows, l.cols) != (spec.k, spec.n):
        raise DimensionError(f"matrix is {l.rows}x{l.cols}, spec wants {spec.k}x{spec.n}")
    return all(abs(rational_det(l.submatrix(c))) == 1 for c in combinations(range(spec.n), spec.k))


@dataclass(frozen=True)
class SearchResult:
    spec: UniformSpec
    witness: RealizationMatrix | None
    searched: int  # number of sign matrices examined; 0 for closed-form cases

    @property
    def found(self) -> bool:
        return self.witness is not None


def _closed_form(spec: UniformSpec) -> RealizationMatrix | None:
    k, n = spec.k, spec.n
    if k == 0:
        return RealizationMatrix.empty(n)
    if k == 1:
        return RealizationMatrix([[1] * n])
    if k == n:
        return RealizationMatrix([[int(i == j) for j in range(n)] for i in range(n)])
    if k == n - 1:
        return RealizationMatrix([[int(i == j) for j in range(k)] + [-1] for i in range(k)])
    return None


def _int_det(m: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack of small integer matrices (cofactor expansion)."""
    s = m.shape[-1]
    if s == 1:
        return m[:, 0, 0]
    out = np.zeros(m.shape[0], dtype=np.int64)
    for j in range(s):
        rest = np.delete(np.delete(m, 0, axis=1), j, axis=2)
        term = m[:, 0, j] * _int_det(rest)
        out = out + term if j % 2 == 0 else out - term
    return out


def _sign_matrices(start: int, stop: int, k: int, c: int) -> np.ndarray:
    # index bit (N-1-j) set means entry j (row-major) is -1, so index order is
    # the lexicographic order of itertools.product((1, -1), repeat=N)
    n_entries = k * c
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n_entries - 1, -1, -1, dtype=np.int64)
    bits = (idx[:, None] >> shifts[None, :]) & 1
    return (1 - 2 * bits).reshape(-1, k, c)


def _first_all_minors_unit(args) -> int | None:
    """Smallest index in [start, stop) whose sign matrix has every minor +-1."""
    start, stop, k, c = args
    mats = _sign_matrices(start, stop, k, c)
    alive = np.arange(start, stop)
    # 1x1 minors are +-1 by construction
    for s in range(2, min(k, c) + 1):
        for rows in combinations(range(k), s):
            for cols in combinations(range(c), s):
                if not len(alive):
                    return None
                sub = mats[:, rows, :][:, :, cols]
                keep = np.abs(_int_det(sub)) == 1
                mats, alive = mats[keep], alive[keep]
    return int(alive[0]) if len(alive) else None


def unimodular_search(
    spec: UniformSpec, limit: int = MAX_SEARCH_ENTRIES, jobs: int = 1
) -> SearchResult:
    """Exhaustive search for a unimodular realization of U_{k,n} of the form (Id | L').

    Every 1x1 minor of L' is a maximal minor of (Id | L'), so L' ranges over
    sign matrices; a candidate is accepted iff all its square minors are +-1.
    Trivial ranks k in {0, 1, n-1, n} are answered in closed form.
    """
    closed = _closed_form(spec)
    if closed is not None:
        return SearchResult(spec, closed, 0)
    k, c = spec.k, spec.n - spec.k
    if k * c > limit:
        raise SearchLimitError(f"k(n-k) = {k * c} exceeds the search limit {limit}")
    total = 1 << (k * c)
    chunks = [(a, min(a + _CHUNK, total), k, c) for a in range(0, total, _CHUNK)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = list(pool.map(_first_all_minors_unit, chunks))
    else:
        hits = []
        for ch in chunks:
            hits.append(_first_all_minors_unit(ch))
            if hits[-1] is not None:
                break
    hit = next((h for h in hits if h is not None), None)
    if hit is None:
        return SearchResult(spec, None, total)
    lp = _sign_matrices(hit, hit + 1, k, c)[0]
    rows = [[int(i == j) for j in range(k)] + [int(v) for v in lp[i]] for i in range(k)]
    return SearchResult(spec, RealizationMatrix(rows), hit + 1)


def search_unimodular(spec: UniformSpec, limit: int = MAX_SEARCH_ENTRIES, jobs: int = 1):
    """The first unimodular realization of U_{k,n} found, or None."""
    return unimodular_search(spec, limit, jobs).witness


def realization_context(l: RealizationMatrix, e: Sequence | None = None) -> HyperbolicContext:
    """(det L diag(x) L^T, e) with e = all-ones by default."""
    pencil, _ = realization_pencil(l)
    p = pencil_det(pencil)
    if p.is_zero():
        raise PreconditionError("realization matrix is rank deficient; determinant vanishes")
    return HyperbolicContext(p, ones(l.cols) if e is None else e)
