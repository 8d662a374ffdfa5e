import random
from fractions import Fraction

import pytest
import sympy as sp

from hypercone.errors import NotRealRootedError, PreconditionError
from hypercone.hyperbolicity import (
    HyperbolicContext,
    check_hyperbolic,
    derivative_context,
    eigenvalue_poly,
    in_cone,
    in_derivative_cone,
    sample_points,
)
from hypercone.poly import Polynomial, elementary_symmetric, evaluate, ones, product_of_forms
from hypercone.realroots import UnivariatePolynomial as U
from hypercone.spectra import normalize_forms

from .conftest import HALFCUBE_DIR, HALFCUBE_FORMS
from .oracles import random_interior_system, random_rational, symbols, to_sympy

E3 = HyperbolicContext(elementary_symmetric(3, 3), ones(3))


def test_e3_is_hyperbolic():
    for seed in (0, 1, 99):
        v = check_hyperbolic(elementary_symmetric(3, 3), ones(3), 64, seed)
        assert v.hyperbolic and v.witness is None and v.seed == seed


def test_sum_of_squares_is_not_hyperbolic():
    x = [Polynomial.variable(2, i) for i in range(2)]
    p = x[0] * x[0] + x[1] * x[1]
    v = check_hyperbolic(p, (1, 0), 64, 4)
    assert not v.hyperbolic
    # independent check: (q1 + lam)^2 + q2^2 has discriminant -4 q2^2
    q1, q2 = v.witness
    lam = sp.Symbol("lam")
    restriction = sp.expand((sp.Rational(str(q1)) + lam) ** 2 + sp.Rational(str(q2)) ** 2)
    assert sp.discriminant(restriction, lam) < 0
    assert v.witness == sample_points(2, 64, 4)[v.witness_index]


def test_verdict_is_deterministic_and_parallel_safe():
    x = [Polynomial.variable(3, i) for i in range(3)]
    p = x[0] ** 3 - x[0] * x[1] * x[1] + x[2] ** 3
    a = check_hyperbolic(p, (1, 0, 0), 40, 8)
    b = check_hyperbolic(p, (1, 0, 0), 40, 8, jobs=2)
    assert a == b


def test_context_preconditions():
    x = [Polynomial.variable(2, i) for i in range(2)]
    with pytest.raises(PreconditionError):
        check_hyperbolic(x[0] * x[1], (1, 0), 8, 0)
    with pytest.raises(PreconditionError):
        HyperbolicContext(x[0] + x[1] * x[1], (1, 1))
    with pytest.raises(PreconditionError):
        HyperbolicContext(Polynomial.zero(2), (1, 1))


def test_eigenvalue_poly_examples():
    assert eigenvalue_poly(E3, (1, 2, 3)) == U.from_roots([1, 2, 3], lead=-1)
    ctx = HyperbolicContext(elementary_symmetric(3, 2).scale(5), ones(3))
    e = ctx.e
    assert eigenvalue_poly(ctx, e) == U([1, -1]) ** 2 * evaluate(ctx.p, e)


def test_eigenvalues_of_products_are_the_forms():
    rng = random.Random(21)
    for _ in range(5):
        forms, e = random_interior_system(rng, rng.randint(1, 5), rng.randint(1, 4))
        forms = normalize_forms(forms, e)
        ctx = HyperbolicContext(product_of_forms(forms), e)
        for _ in range(10):
            x = [random_rational(rng) for _ in range(ctx.nvars)]
            expected = U([1])
            for f in forms:
                expected = expected * U([f(x), -1])
            assert eigenvalue_poly(ctx, x) == expected


def test_in_cone_examples():
    assert in_cone(E3, (1, 2, 3))
    assert not in_cone(E3, (-1, 2, 3))
    assert in_cone(E3, (0, 1, 1), "closed")
    assert not in_cone(E3, (0, 1, 1), "open")


def test_origin_is_apex():
    assert in_cone(E3, (0, 0, 0), "closed")
    assert not in_cone(E3, (0, 0, 0), "open")


def test_in_cone_on_non_hyperbolic_context_is_an_error():
    x = [Polynomial.variable(2, i) for i in range(2)]
    ctx = HyperbolicContext(x[0] * x[0] + x[1] * x[1], (1, 0))
    with pytest.raises(NotRealRootedError):
        in_cone(ctx, (0, 1))


def test_derivative_cone_is_a_strict_relaxation():
    x = (-1, 2, 2)
    assert in_derivative_cone(E3, x, 1)
    assert not in_cone(E3, x)
    # oracle: roots of E_2(x - lam*1) by sympy
    lam = sp.Symbol("lam")
    syms = symbols(3)
    e2 = to_sympy(elementary_symmetric(3, 2), syms)
    u = sp.expand(e2.subs({s: xi - lam for s, xi in zip(syms, x)}, simultaneous=True))
    assert set(sp.roots(u, lam)) == {0, 2}


def test_derivative_order_zero_and_bounds():
    assert in_derivative_cone(E3, (1, 2, 3), 0) == in_cone(E3, (1, 2, 3))
    with pytest.raises(PreconditionError):
        in_derivative_cone(E3, (1, 2, 3), 3)


def test_halfcube_vertex_in_first_derivative_cone():
    ctx = HyperbolicContext(product_of_forms(HALFCUBE_FORMS), HALFCUBE_DIR)
    v = (1, 1, 1, -1)
    assert in_cone(ctx, v)
    assert in_derivative_cone(ctx, v, 1)
    # oracle: real roots of the cubic polar along x - lam*e are nonnegative
    syms = sp.symbols("t x y z")
    lam = sp.Symbol("lam")
    prod = sp.Mul(*[sum(c * s for c, s in zip(f.coeffs, syms)) for f in HALFCUBE_FORMS])
    shift = sp.Symbol("s")
    polar1 = sp.diff(prod.subs(syms[0], syms[0] + shift), shift).subs(shift, 0)
    u = sp.expand(polar1.subs({syms[0]: 1 - lam, syms[1]: 1, syms[2]: 1, syms[3]: -1}, simultaneous=True))
    assert all(r >= 0 for r in sp.real_roots(u, lam))


def test_rolle_containment_chain():
    rng = random.Random(31)
    checked = 0
    for _ in range(8):
        d, n = rng.randint(2, 6), rng.randint(2, 5)
        forms, e = random_interior_system(rng, d, n)
        ctx = HyperbolicContext(product_of_forms(forms), e)
        derived = [derivative_context(ctx, i) for i in range(d)]
        for _ in range(25):
            x = [random_rational(rng) for _ in range(n)]
            flags = [in_cone(c, x) for c in derived]
            # once inside, stays inside every higher derivative cone
            assert flags == sorted(flags)
            checked += 1
    assert checked == 200


def test_scaling_invariance_and_direction_interior():
    rng = random.Random(41)
    for _ in range(5):
        forms, e = random_interior_system(rng, rng.randint(1, 5), 3)
        ctx = HyperbolicContext(product_of_forms(forms), e)
        assert in_cone(ctx, e, "open")
        for _ in range(10):
            x = [random_rational(rng) for _ in range(3)]
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert in_cone(ctx, x) == in_cone(ctx, [c * a for a in x])
