"""Hyperbolicity tests, hyperbolic eigenvalues and cone membership.

Cones are never stored geometrically; a point belongs to the closed
hyperbolicity cone of (p, e) iff every root of lambda -> p(x - lambda e) is
nonnegative, and that is decided exactly with Sturm sequences.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, NotRealRootedError, PreconditionError
from .poly import Point, Polynomial, as_point, evaluate, homogeneous_degree, polar, restrict_to_line
from .realroots import UnivariatePolynomial, all_roots_nonneg, is_real_rooted, mult_at_zero

GRID_DENOMINATOR = 64


@dataclass(frozen=True)
class HyperbolicContext:
    """A homogeneous polynomial with a direction at which it is positive."""

    p: Polynomial
    e: Point

    def __post_init__(self):
        object.__setattr__(self, "e", as_point(self.e))
        if len(self.e) != self.p.nvars:
            raise DimensionError(f"direction has length {len(self.e)}, expected {self.p.nvars}")
        if homogeneous_degree(self.p) is None:
            raise PreconditionError("polynomial is zero or not homogeneous")
        if evaluate(self.p, self.e) <= 0:
            raise PreconditionError("p(e) must be positive")

    @property
    def d(self) -> int:
        return homogeneous_degree(self.p)

    @property
    def nvars(self) -> int:
        return self.p.nvars


@dataclass(frozen=True)
class HyperbolicityVerdict:
    hyperbolic: bool
    samples: int
    seed: int
    witness: Point | None = None
    witness_index: int | None = None


def sample_points(n: int, samples: int, seed: int) -> list[Point]:
    """Deterministic points on the grid (1/64) Z^n within [-1, 1]^n."""
    rng = random.Random(seed)
    g = GRID_DENOMINATOR
    return [
        tuple(Fraction(rng.randint(-g, g), g) for _ in range(n)) for _ in range(samples)
    ]


def _line_is_real_rooted(args) -> bool:
    p, q, e = args
    return is_real_rooted(restrict_to_line(p, q, e))


def check_hyperbolic(
    p: Polynomial, e: Sequence, samples: int = 64, seed: int = 0, jobs: int = 1
) -> HyperbolicityVerdict:
    """Sample lines q + lambda e and certify real-rootedness on each.

    A negative verdict is a proof (the witness line has non-real roots); a
    positive verdict is only evidence.  With ``jobs > 1`` the lines are
    checked in worker processes; the reported witness is always the failing
    sample with the smallest index.
    """
    ctx = HyperbolicContext(p, e)
    if samples < 1:
        raise PreconditionError("samples must be positive")
    points = sample_points(p.nvars, samples, seed)
    args = [(ctx.p, q, ctx.e) for q in points]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_line_is_real_rooted, args, chunksize=8))
    else:
        results = (_line_is_real_rooted(a) for a in args)
    for idx, ok in enumerate(results):
        if not ok:
            return HyperbolicityVerdict(False, samples, seed, points[idx], idx)
    return HyperbolicityVerdict(True, samples, seed)


def eigenvalue_poly(ctx: HyperbolicContext, x: Sequence) -> UnivariatePolynomial:
    """lambda -> p(x - lambda e); its roots are the hyperbolic eigenvalues of x."""
    return restrict_to_line(ctx.p, x, tuple(-c for c in ctx.e))


def _certified(u: UnivariatePolynomial, x) -> UnivariatePolynomial:
    if not is_real_rooted(u):
        raise NotRealRootedError(
            f"p(x - lambda e) has non-real roots at x={[str(c) for c in x]}; "
            "the context is not hyperbolic"
        )
    return u


def in_cone(ctx: HyperbolicContext, x: Sequence, mode: str = "closed") -> bool:
    """Membership of ``x`` in the closed (or, with mode="open", open) cone."""
    if mode not in ("closed", "open"):
        raise ValueError(f"mode must be 'closed' or 'open', not {mode!r}")
    u = _certified(eigenvalue_poly(ctx, x), x)
    if mode == "open" and mult_at_zero(u) > 0:
        return False
    return all_roots_nonneg(u)


def derivative_context(ctx: HyperbolicContext, i: int) -> HyperbolicContext:
    if not 0 <= i < ctx.d:
        raise PreconditionError(f"derivative order {i} outside 0..{ctx.d - 1}")
    return HyperbolicContext(polar(ctx.p, ctx.e, i), ctx.e)


def in_derivative_cone(ctx: HyperbolicContext, x: Sequence, i: int) -> bool:
    """Membership of ``x`` in the i-th derivative cone (closed)."""
    return in_cone(derivative_context(ctx, i), x, "closed")
