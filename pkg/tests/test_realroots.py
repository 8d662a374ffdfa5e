import random
from fractions import Fraction

import pytest

from hypercone.errors import InputError, NotRealRootedError
from hypercone.realroots import (
    NEG_INF,
    POS_INF,
    UnivariatePolynomial as U,
    all_roots_nonneg,
    all_roots_positive,
    gcd,
    is_real_rooted,
    mult_at_zero,
    squarefree_part,
    sturm_chain,
    sturm_count,
)

from .oracles import random_rational


def test_sturm_count_examples():
    assert sturm_count(U([-1, 0, 1]), -2, 2) == 2
    assert sturm_count(U([1, 0, 1])) == 0
    assert sturm_count(U([1, -2, 1]), 0, 2) == 1


def test_half_open_interval():
    u = U.from_roots([0, 1, 2])
    assert sturm_count(u, 0, 2) == 2  # 0 excluded, 2 included
    assert sturm_count(u, -1, 0) == 1
    assert sturm_count(u, NEG_INF, 1) + sturm_count(u, 1, POS_INF) == 3


def test_sturm_count_errors():
    with pytest.raises(InputError):
        sturm_count(U(), -1, 1)
    with pytest.raises(InputError):
        sturm_count(U([1, 1]), 1, 1)


def test_chain_degrees_strictly_decrease():
    u = U.from_roots([1, 2, 3, 5]) * U([1, 0, 1])
    degs = [p.degree for p in sturm_chain(u)]
    assert degs == sorted(set(degs), reverse=True)


def test_is_real_rooted_examples():
    assert is_real_rooted(U([-1, 0, 1]))
    assert not is_real_rooted(U([1, 0, 1]))
    assert is_real_rooted(U([0, -1, 0, 1]))
    assert is_real_rooted(U([5]))


def test_mult_at_zero():
    assert mult_at_zero(U([0, 0, 2, 1])) == 2
    assert mult_at_zero(U([5])) == 0
    assert mult_at_zero(U([0, 0, 0, 0, 1])) == 4
    with pytest.raises(InputError):
        mult_at_zero(U())


def test_all_roots_nonneg_examples():
    assert all_roots_nonneg(U([2, -3, 1]))
    assert not all_roots_nonneg(U([-1, 0, 1]))
    assert all_roots_nonneg(U([0, 0, 1]))
    assert not all_roots_positive(U([0, 0, 1]))
    with pytest.raises(NotRealRootedError):
        all_roots_nonneg(U([1, 0, 1]))


def test_gcd_and_squarefree():
    a = U.from_roots([1, 1, 2, Fraction(1, 3)])
    b = U.from_roots([1, 2, 2, 5])
    assert gcd(a, b) == U.from_roots([1, 2])
    assert squarefree_part(a).monic() == U.from_roots([1, 2, Fraction(1, 3)])


def random_rooted(rng, deg):
    roots = [Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))) for _ in range(deg)]
    lead = random_rational(rng)
    while lead == 0:
        lead = random_rational(rng)
    return roots, U.from_roots(roots, lead)


def test_fuzz_real_rooted_products():
    rng = random.Random(1)
    for _ in range(150):
        roots, u = random_rooted(rng, rng.randint(1, 8))
        assert sturm_count(u) == len(set(roots))
        assert is_real_rooted(u)
        assert all_roots_nonneg(u) == all(r >= 0 for r in roots)
        a, b = sorted(random_rational(rng) for _ in range(2))
        if a < b:
            assert sturm_count(u, a, b) == len({r for r in roots if a < r <= b})


def test_fuzz_negative_discriminant_factor():
    rng = random.Random(2)
    for _ in range(100):
        roots, u = random_rooted(rng, rng.randint(0, 6))
        b = random_rational(rng)
        c = b * b / 4 + Fraction(rng.randint(1, 9), rng.choice((1, 4, 7)))
        assert not is_real_rooted(u * U([c, b, 1]))


def test_mult_at_zero_shift():
    rng = random.Random(3)
    for _ in range(50):
        _, u = random_rooted(rng, rng.randint(0, 5))
        k = rng.randint(0, 5)
        assert mult_at_zero(u * U([0] * k + [1])) == mult_at_zero(u) + k
