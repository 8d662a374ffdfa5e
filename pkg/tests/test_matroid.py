import random
from itertools import combinations, product

import pytest

from hypercone.errors import DimensionError, InputError, OrthantError, SearchLimitError
from hypercone.hyperbolicity import HyperbolicContext
from hypercone.matroid import (
    RankFunction,
    UniformSpec,
    column_rank_function,
    equals_uniform,
    gurvits_rank,
    is_polymatroid,
    is_unimodular_realization,
    realization_context,
    search_unimodular,
    unimodular_search,
)
from hypercone.poly import LinearForm, Polynomial, elementary_symmetric, ones, product_of_forms
from hypercone.spectra import RealizationMatrix, is_psd, pencil_eval, rational_det, realization_pencil


def e_ctx(n, k):
    return HyperbolicContext(elementary_symmetric(n, k), ones(n))


def test_gurvits_rank_of_e2_is_u23():
    rk = gurvits_rank(e_ctx(3, 2))
    assert rk.ranks == tuple(min(2, bin(m).count("1")) for m in range(8))
    assert equals_uniform(rk, UniformSpec(2, 3))


def test_gurvits_rank_of_en_is_free():
    for n in range(1, 6):
        rk = gurvits_rank(e_ctx(n, n))
        assert equals_uniform(rk, UniformSpec(n, n))
        assert not equals_uniform(rk, UniformSpec(n - 1, n))


def test_square_of_a_variable_gives_a_proper_polymatroid():
    x1 = Polynomial.variable(2, 0)
    ctx = HyperbolicContext(x1 * x1, ones(2))
    rk = gurvits_rank(ctx)
    assert rk.ranks == (0, 2, 0, 2)
    report = is_polymatroid(rk)
    assert report.polymatroid and not report.matroid
    assert report.cardinality_violation == 0b01


def test_both_multiplicity_routes_agree():
    rng = random.Random(5)
    for _ in range(10):
        n, d = rng.randint(1, 4), rng.randint(1, 4)
        forms = [LinearForm([rng.randint(0, 3) for _ in range(n)]) for _ in range(d)]
        if any(not any(f.coeffs) for f in forms):
            continue
        ctx = HyperbolicContext(product_of_forms(forms), ones(n))
        assert gurvits_rank(ctx, method="plus") == gurvits_rank(ctx, method="minus")


def test_orthant_precondition():
    x = [Polynomial.variable(2, i) for i in range(2)]
    ctx = HyperbolicContext(x[0] * (x[0] - x[1]) + x[0] * x[0], (1, 0))  # forms x1 and 2x1 - x2
    with pytest.raises(OrthantError) as info:
        gurvits_rank(ctx)
    assert info.value.index == 0b10
    with pytest.raises(OrthantError):
        gurvits_rank(ctx, strict_orthant=True)


def test_ground_set_limit():
    with pytest.raises(SearchLimitError):
        gurvits_rank(e_ctx(4, 2), limit=3)


def test_is_polymatroid_examples():
    report = is_polymatroid(UniformSpec(2, 4).rank_function())
    assert report.polymatroid and report.matroid and report.violation is None
    report = is_polymatroid(RankFunction(2, (0, 0, 0, 1)))
    assert not report.polymatroid and report.violation == (0b01, 0b10)


def test_is_polymatroid_catches_nonmonotone_and_negative():
    assert not is_polymatroid(RankFunction(1, (0, -1))).polymatroid
    report = is_polymatroid(RankFunction(2, (0, 1, 1, 0)))
    assert not report.polymatroid and report.violation == (0b01, 0b10)


def test_equals_uniform_mismatch():
    with pytest.raises(DimensionError):
        equals_uniform(RankFunction(2, (0, 1, 1, 2)), UniformSpec(2, 3))
    with pytest.raises(InputError):
        UniformSpec(4, 3)


def test_unimodular_examples():
    for n in range(2, 7):
        l = RealizationMatrix([[int(i == j) for j in range(n - 1)] + [-1] for i in range(n - 1)])
        assert is_unimodular_realization(l, UniformSpec(n - 1, n))
    assert not is_unimodular_realization(RealizationMatrix([[1, 0, 1], [0, 1, 2]]), UniformSpec(2, 3))
    assert not is_unimodular_realization(RealizationMatrix([[1, 0, 1], [0, 1, 0]]), UniformSpec(2, 3))
    with pytest.raises(DimensionError):
        is_unimodular_realization(RealizationMatrix([[1, 0, 1]]), UniformSpec(2, 3))


def test_search_closed_forms():
    assert search_unimodular(UniformSpec(1, 5)).entries == ((1,) * 5,)
    for n in range(2, 9):
        w = search_unimodular(UniformSpec(n - 1, n))
        assert is_unimodular_realization(w, UniformSpec(n - 1, n))
    assert search_unimodular(UniformSpec(0, 3)).rows == 0


def brute_force_has_unimodular_sign_matrix(k, c):
    """Independent oracle: scan sign matrices with Fraction determinants."""
    for signs in product((1, -1), repeat=k * c):
        m = [signs[i * c:(i + 1) * c] for i in range(k)]
        ok = all(
            abs(rational_det([[m[r][s] for s in cols] for r in rows])) == 1
            for size in range(1, min(k, c) + 1)
            for rows in combinations(range(k), size)
            for cols in combinations(range(c), size)
        )
        if ok:
            return True
    return False


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6)])
def test_search_agrees_with_brute_force(k, n):
    res = unimodular_search(UniformSpec(k, n))
    assert res.found is brute_force_has_unimodular_sign_matrix(k, n - k) is False
    assert res.searched == 2 ** (k * (n - k))


def test_search_finds_single_row_or_column_sign_matrices():
    # with the closed forms bypassed, the enumeration itself finds L' = all +1
    from hypercone.matroid import _first_all_minors_unit

    assert _first_all_minors_unit((0, 8, 1, 3)) == 0
    assert _first_all_minors_unit((0, 8, 3, 1)) == 0
    assert _first_all_minors_unit((0, 16, 2, 2)) is None


def test_search_limit():
    with pytest.raises(SearchLimitError):
        unimodular_search(UniformSpec(3, 10))
    assert unimodular_search(UniformSpec(2, 13), limit=22).searched == 2**22


def test_search_parallel_matches_serial():
    a = unimodular_search(UniformSpec(2, 8))
    b = unimodular_search(UniformSpec(2, 8), jobs=2)
    assert a == b


def test_realization_rank_consistency():
    rng = random.Random(53)
    tested = 0
    while tested < 15:
        k, n = rng.randint(1, 4), rng.randint(1, 6)
        l = RealizationMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)])
        if not is_psd(pencil_eval(realization_pencil(l)[0], ones(n)), strict=True):
            continue
        cols = column_rank_function(l)
        assert is_polymatroid(cols).matroid
        assert gurvits_rank(realization_context(l)) == cols
        tested += 1
