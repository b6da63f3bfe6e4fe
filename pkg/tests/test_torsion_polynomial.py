import mpmath
import pytest
from hypothesis import given, settings

from knot_torsion import (
    IntPoly,
    InvalidPair,
    Method,
    PrecisionExhausted,
    UnsupportedKnot,
    cheb_T,
    check_degree,
    check_normalization,
    inverse_torsion_multiset,
    johnson_sigma_bar,
    root_multiset_check,
    sigma,
    sigma_oracle,
    validate_params,
    x_poly,
    y_factor,
)
from knot_torsion.realpoly import RealPoly, real_context
from knot_torsion.torsion_polynomial import (
    PUBLISHED_LISTINGS,
    certify,
    compare_with_listing,
    numeric_roots,
    oracle_factor,
    predicted_degree,
    trefoil_bridge,
)

from strategies import surgery_params

# Expected values below were produced by exact algebra in sympy: the Chebyshev
# quotient with C(a,b) kept as a radical, expanded and simplified to Q.
SYMPY_SIGMA = {
    (1, 3, -2): [1, -30, 140, -224, 144, -32],
    (1, 3, -1): [-1, 6, -4],
    (1, 3, 1): [-1, 12, -20, 8],
    (1, 3, 2): [1, -42, 280, -672, 720, -352, 64],
    (1, 5, -1): [1, -60, 820, -4608, 12192, -15840, 9856, -2688, 256],
    (1, 5, 1): [1, -90, 1880, -16632, 73408, -175776, 236416, -177408, 70912, -13824, 1024],
}


def test_x_poly_examples():
    assert x_poly(validate_params(1, 3, 1)) == IntPoly([-1, 0, 24, 0, -80, 0, 64])
    assert x_poly(validate_params(1, 3, 0)) == IntPoly([1])
    assert x_poly(validate_params(1, 3, -1)) == IntPoly([-1, 0, 12, 0, -16])


@settings(max_examples=40, deadline=None)
@given(surgery_params(max_p=5, max_q=11, max_abs_n=4))
def test_x_poly_properties(params):
    xp = x_poly(params)
    N = params.N
    assert xp.degree == N - 1
    assert all(c == 0 for c in xp.coeffs[1::2])
    assert xp(1) == (N if params.n > 0 else -N)
    quot, rem = (cheb_T(N + 1) - cheb_T(N - 1)).divmod(IntPoly([-2, 0, 2]))
    assert rem == []


def _ints(rp: RealPoly, bits=60):
    ints, resid, _ = rp.round_to_int()
    assert resid < mpmath.ldexp(1, -bits)
    return ints


def test_y_factor_trefoil():
    assert _ints(y_factor(validate_params(1, 3, 1), 1, 1, 128)) == IntPoly([-1, 12, -20, 8])
    assert _ints(y_factor(validate_params(1, 3, -1), 1, 1, 128)) == IntPoly([-1, 6, -4])
    assert _ints(y_factor(validate_params(1, 3, 0), 1, 1, 128)) == IntPoly([1])
    with pytest.raises(InvalidPair):
        y_factor(validate_params(1, 3, 1), 1, 3)


def test_y_factor_2_5_minus_one_against_root_expansion():
    params = validate_params(1, 5, -1)
    y = y_factor(params, 1, 1, 256)
    assert y.degree == 4
    with mpmath.workprec(400):
        pi = mpmath.pi
        four_c = 4 * (1 - mpmath.cos(pi / 2)) * (1 - mpmath.cos(pi / 5))
        roots = [four_c * mpmath.cos(k * pi / 9) ** 2 for k in range(1, 5)]
        monic = [mpmath.mpf(1)]
        for r in roots:
            monic = [(monic[i - 1] if i > 0 else 0) - r * (monic[i] if i < len(monic) else 0)
                     for i in range(len(monic) + 1)]
        lead = y.coeffs[-1]
        for c, m in zip(y.coeffs, monic):
            assert abs(c - lead * m) < mpmath.ldexp(1, -230)


@settings(max_examples=25, deadline=None)
@given(surgery_params(max_p=3, max_q=7))
def test_oracle_factor_equals_y_factor(params):
    for a, b in [(1, 1), (2 * params.p - 1, params.q - 2)]:
        y = y_factor(params, a, b, 256)
        o = oracle_factor(params, a, b, 256)
        scale = max(abs(c) for c in y.coeffs)
        assert y.max_abs_difference(o) < scale * mpmath.ldexp(1, -200)


@pytest.mark.parametrize("key", sorted(SYMPY_SIGMA))
def test_sigma_matches_exact_algebra(key):
    params = validate_params(*key)
    expected = IntPoly(SYMPY_SIGMA[key])
    for fn in (sigma, sigma_oracle):
        res = fn(params, 128)
        assert res.sigma == expected
        assert res.rounding_residual < mpmath.ldexp(1, -32)
        assert check_degree(res) and check_normalization(res)


def test_sigma_trivial_surgery():
    res = sigma(validate_params(1, 3, 0))
    assert res.sigma == IntPoly([1]) and res.degree == 0 and res.constant_term == 1
    assert check_normalization(res) and check_degree(res)


def test_sigma_methods_tagged():
    params = validate_params(1, 3, 1)
    assert sigma(params).method is Method.CONSTRUCTION
    assert sigma_oracle(params).method is Method.ORACLE


def test_certification_uses_two_levels():
    res = sigma(validate_params(3, 5, 1), 128)
    assert res.precision_bits_used >= 256


def test_precision_exhausted_reports_coefficient():
    def half_integer(params, bits):
        ctx = real_context(bits)
        return RealPoly.from_values(ctx, [1, ctx.mpf(5) / 2, 3])

    with pytest.raises(PrecisionExhausted) as info:
        certify(validate_params(1, 3, 1), half_integer, Method.CONSTRUCTION, 64, max_precision=256)
    assert info.value.index == 1
    assert info.value.value == 2.5


def test_normalization_and_degree_examples():
    assert check_normalization(sigma(validate_params(1, 3, -1)))
    assert sigma(validate_params(1, 3, -1)).constant_term == -1
    res = sigma(validate_params(1, 5, -1))
    assert res.constant_term == 1 and check_normalization(res)
    assert predicted_degree(validate_params(1, 3, 1)) == 3
    assert predicted_degree(validate_params(1, 3, -1)) == 2
    assert predicted_degree(validate_params(1, 5, -1)) == 8
    assert check_degree(res) and res.degree == 8


def test_published_listings_disagree():
    for params, listing in PUBLISHED_LISTINGS.items():
        res = sigma(params)
        cmp = compare_with_listing(res)
        assert not cmp.matches
        assert cmp.published_degree == listing.degree == cmp.computed_degree + 2
        assert cmp.computed_degree == cmp.predicted_degree
        # the low-order coefficients agree
        assert res.sigma.coeffs[:4] == listing.coeffs[:4]
    assert compare_with_listing(sigma(validate_params(1, 3, 1))) is None


@settings(max_examples=20, deadline=None)
@given(surgery_params(max_p=3, max_q=5, max_abs_n=2))
def test_construction_oracle_agree(params):
    res = sigma(params, 128)
    assert res.sigma == sigma_oracle(params, 128).sigma
    assert check_degree(res) and check_normalization(res)


# |n| <= 2 and pq <= 15
@settings(max_examples=20, deadline=None)
@given(surgery_params(max_p=3, max_q=5, max_abs_n=2))
def test_roots_are_inverse_torsions(params):
    P = 160
    res = sigma(params, P)
    check = root_multiset_check(res, P)
    assert check.passed and check.bracketed == res.degree
    assert check.radius <= mpmath.ldexp(1, -(P // 2))


def test_root_check_against_full_isolation():
    params = validate_params(1, 5, 1)
    res = sigma(params, 192)
    roots = numeric_roots(res.sigma, 192)
    values = inverse_torsion_multiset(params, 192)
    assert len(roots) == len(values) == 10
    assert max(abs(r - v) for r, v in zip(roots, values)) < mpmath.ldexp(1, -96)


def test_root_check_detects_wrong_polynomial():
    params = validate_params(1, 3, 1)
    res = sigma(params)
    bad = type(res)(params, IntPoly([-1, 12, -21, 8]), 0, res.method, 128)
    assert not root_multiset_check(bad).passed


def test_johnson_examples():
    assert johnson_sigma_bar(-1) == IntPoly([-1, 3, -1])
    assert johnson_sigma_bar(1) == IntPoly([-1, 6, -5, 1])
    assert johnson_sigma_bar(0) == IntPoly([1])
    with pytest.raises(UnsupportedKnot):
        johnson_sigma_bar(1, p=1, q=5)


def test_johnson_normalization():
    for n in range(-6, 7):
        assert johnson_sigma_bar(n)[0] == (-1) ** n


@pytest.mark.parametrize("n", range(-5, 6))
def test_trefoil_bridge(n):
    assert trefoil_bridge(n)
