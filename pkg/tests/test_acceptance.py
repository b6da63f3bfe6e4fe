"""Exit criteria: golden values, three-route agreement, property grid, determinism.

Each test records one line, printed in the "acceptance criteria" section of
the pytest summary.  Run alone with ``pytest tests/test_acceptance.py``.
"""

import subprocess
import sys
from functools import lru_cache
from math import gcd

import mpmath
import pytest

from knot_torsion import (
    IntPoly,
    RepClass,
    cheb_T,
    check_degree,
    check_normalization,
    johnson_sigma_bar,
    lemma44_check,
    root_multiset_check,
    sigma,
    sigma_by_recurrence,
    sigma_oracle,
    torsion_value,
    validate_params,
    x_poly,
    x_relation_holds,
)
from knot_torsion.render import to_text
from knot_torsion.torsion_polynomial import compare_with_listing, predicted_degree, trefoil_bridge

GRID_PRECISION = 192
GRID_PQ = [(p, q) for p in (1, 3) for q in (3, 5, 7) if gcd(p, q) == 1]
GRID_N = [n for n in range(-3, 4) if n != 0]
GRID = [(p, q, n) for p, q in GRID_PQ for n in GRID_N]

LEMMA44_TOL_BITS = 170
ROOTS_TOL_BITS = 80
TORSION_TOL_BITS = 100


@lru_cache(maxsize=None)
def grid_sigma(p, q, n):
    return sigma(validate_params(p, q, n), GRID_PRECISION)


def test_golden_sigma(acceptance):
    expected = {
        -1: IntPoly([-1, 6, -4]),
        0: IntPoly([1]),
        1: IntPoly([-1, 12, -20, 8]),
    }
    got = {n: sigma(validate_params(1, 3, n)).sigma for n in expected}
    ok = got == expected
    acceptance("1a golden sigma for the trefoil, n = -1, 0, 1", ok,
               ", ".join(f"n={n}: {to_text(got[n])}" for n in sorted(got)))
    assert ok


def test_golden_sigma_bar(acceptance):
    got = (johnson_sigma_bar(-1), johnson_sigma_bar(1))
    ok = got == (IntPoly([-1, 3, -1]), IntPoly([-1, 6, -5, 1]))
    acceptance("1b golden trefoil sigma-bar, n = -1, 1", ok, f"{to_text(got[0])} ; {to_text(got[1])}")
    assert ok


def test_golden_torsion_values(acceptance):
    params = validate_params(1, 3, -1)
    with mpmath.workprec(256):
        sqrt5 = mpmath.sqrt(5)
        errs = [
            abs(torsion_value(params, RepClass(1, 1, 1), 128) - (3 + sqrt5)),
            abs(torsion_value(params, RepClass(1, 1, 3), 128) - (3 - sqrt5)),
        ]
    tol = mpmath.ldexp(1, -TORSION_TOL_BITS)
    ok = all(e < tol for e in errs)
    acceptance("2 Sigma(2,3,5) torsion values 3 +- sqrt5 to 2^-100 at 128 bits", ok,
               f"max error {mpmath.nstr(max(errs), 5)}")
    assert ok


@pytest.mark.parametrize("n", [-1, 1])
def test_three_routes_on_2_5(acceptance, n):
    params = validate_params(1, 5, n)
    routes = {
        "construction": sigma(params),
        "oracle": sigma_oracle(params),
        "recurrence": sigma_by_recurrence(params),
    }
    polys = {r.sigma for r in routes.values()}
    ok = len(polys) == 1
    cmp = compare_with_listing(routes["construction"])
    acceptance(f"3 (2,5,{n}) construction = oracle = recurrence", ok,
               f"degree {routes['construction'].degree} (predicted {predicted_degree(params)}); "
               + cmp.summary())
    assert ok
    assert not cmp.matches and cmp.published_degree == cmp.computed_degree + 2


def test_grid_exact_division(acceptance):
    bad = []
    for p, q, n in GRID:
        N = validate_params(p, q, n).N
        _, rem = (cheb_T(N + 1) - cheb_T(N - 1)).divmod(IntPoly([-2, 0, 2]))
        if rem:
            bad.append((p, q, n))
    acceptance("4a (T_{N+1} - T_{N-1}) / 2(x^2-1) exact over the grid", not bad, f"failures {bad}")
    assert not bad


def test_chebyshev_product_identity(acceptance):
    bad = [(m, n) for m in range(41) for n in range(41)
           if 2 * cheb_T(m) * cheb_T(n) != cheb_T(m + n) + cheb_T(abs(m - n))]
    acceptance("4b 2 T_m T_n = T_{m+n} + T_{|m-n|} for m, n <= 40", not bad, f"failures {bad[:5]}")
    assert not bad


def test_grid_x_relation(acceptance):
    bad = [(p, q, n) for p, q in GRID_PQ for n in range(-3, 4) if not x_relation_holds(p, q, n)]
    acceptance("4c 2 T_{2pq} X_n = X_{n+1} + X_{n-1} exact for |n| <= 3", not bad, f"failures {bad}")
    assert not bad


def test_grid_cosine_sets(acceptance):
    tol = mpmath.ldexp(1, -LEMMA44_TOL_BITS)
    worst = mpmath.mpf(0)
    for p, q, n in GRID:
        _, _, d = lemma44_check(validate_params(p, q, n), GRID_PRECISION)
        worst = max(worst, d)
    ok = worst < tol
    acceptance("4d cosine set identity, max discrepancy < 2^-170", ok,
               f"worst {mpmath.nstr(worst, 5)}")
    assert ok


def test_grid_roots(acceptance):
    tol = mpmath.ldexp(1, -ROOTS_TOL_BITS)
    bad, worst = [], mpmath.mpf(0)
    for p, q, n in GRID:
        chk = root_multiset_check(grid_sigma(p, q, n), GRID_PRECISION)
        worst = max(worst, chk.radius)
        if not (chk.passed and chk.radius < tol):
            bad.append((p, q, n))
    acceptance("4e roots of sigma = multiset of 1/tau, within 2^-80", not bad,
               f"certified radius {mpmath.nstr(worst, 5)}; failures {bad}")
    assert not bad


def test_grid_normalization(acceptance):
    bad = [(p, q, n) for p, q, n in GRID if not check_normalization(grid_sigma(p, q, n))]
    acceptance("4f sigma(0) = (-1)^(np(q-1)/2) over the grid", not bad, f"failures {bad}")
    assert not bad


def test_grid_degree(acceptance):
    bad = [(p, q, n) for p, q, n in GRID if not check_degree(grid_sigma(p, q, n))]
    degrees = [grid_sigma(p, q, n).degree for p, q, n in GRID]
    acceptance("4g deg sigma = (N-1)p(q-1)/4 over the grid", not bad,
               f"degrees up to {max(degrees)}; failures {bad}")
    assert not bad


def test_trefoil_bridge_grid(acceptance):
    bad = [n for n in range(-5, 6) if not trefoil_bridge(n, GRID_PRECISION)]
    acceptance("4h sigma-bar(t) = sigma(t/2) exact for |n| <= 5", not bad, f"failures {bad}")
    assert not bad


def test_grid_x_poly_is_exact_integer():
    # the grid X_n are exact even polynomials of degree N - 1
    for p, q, n in GRID:
        params = validate_params(p, q, n)
        xp = x_poly(params)
        assert xp.degree == params.N - 1 and not any(xp.coeffs[1::2])


def test_verify_deterministic(acceptance):
    cmd = [sys.executable, "-m", "knot_torsion", "verify", "--p", "1", "--q", "5", "--n-range", "-2..2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = first == second and b"overall: PASS" in first
    acceptance("5 verify --p 1 --q 5 --n-range -2..2 byte-identical across runs", ok,
               f"{len(first)} bytes")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
