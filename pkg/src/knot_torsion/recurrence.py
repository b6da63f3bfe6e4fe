"""Three-term relation Y_(n+1) = D Y_n - Y_(n-1) between torsion factors.

D(t) = 2 T_{2pq}(sqrt(t) / (2 sqrt(C))) is a genuine polynomial in t because
T_{2pq} is even.  At the level of the integer polynomials X_n the relation
reads 2 T_{2pq} X_n = X_{n+1} + X_{n-1} and holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chebyshev import cheb_T, even_part_as_poly
from .realpoly import DEFAULT_PRECISION, RealPoly, product_balanced, real_context
from .surgery import SurgeryParams, ab_pairs, check_pair, validate_params
from .torsion_polynomial import CERT_THRESHOLD_BITS, JOHNSON_D, Method, SigmaResult, _y_from_x, certify, x_poly
from .torsion_values import _c_value


@dataclass(frozen=True)
class RecurrenceReport:
    params_base: tuple[int, int]
    pair: tuple[int, int]
    n_range: tuple[int, int]
    max_residual: object
    passed: bool


def _d_poly(ctx, params: SurgeryParams, a: int, b: int) -> RealPoly:
    u = even_part_as_poly(cheb_T(2 * params.p * params.q))
    inv = 1 / (4 * _c_value(ctx, params, a, b))
    coeffs, power = [], 2 * ctx.one
    for c in u.coeffs:
        coeffs.append(c * power)
        power *= inv
    return RealPoly(tuple(coeffs), ctx)


def d_poly(params: SurgeryParams, a: int, b: int,
           precision_bits: int = DEFAULT_PRECISION) -> RealPoly:
    """D(t) for the pair (a, b); degree pq."""
    check_pair(params, a, b)
    return _d_poly(real_context(precision_bits), params, a, b)


def x_relation_holds(p: int, q: int, n: int) -> bool:
    """Exact check of 2 T_{2pq} X_n == X_{n+1} + X_{n-1}."""
    base = validate_params(p, q, n)
    lhs = 2 * cheb_T(2 * p * q) * x_poly(base)
    return lhs == x_poly(base.with_n(n + 1)) + x_poly(base.with_n(n - 1))


def verify_three_term(p: int, q: int, a: int, b: int, n_range: tuple[int, int],
                      precision_bits: int = DEFAULT_PRECISION) -> RecurrenceReport:
    """Compare Y_(n+1) with D Y_n - Y_(n-1) for each interior n of the range.

    ``n_range`` is inclusive.  The residual is the largest coefficientwise
    absolute difference; the check passes when it is below 2^-32.
    """
    lo, hi = n_range
    if hi - lo < 2:
        raise ValueError(f"n_range {n_range} needs at least three values")
    base = validate_params(p, q, lo)
    check_pair(base, a, b)
    ctx = real_context(precision_bits)
    D = _d_poly(ctx, base, a, b)
    ys = {n: _y_from_x(ctx, base.with_n(n), a, b, x_poly(base.with_n(n))) for n in range(lo, hi + 1)}
    worst = ctx.zero
    for n in range(lo + 1, hi):
        worst = max(worst, ys[n + 1].max_abs_difference(D * ys[n] - ys[n - 1]))
    return RecurrenceReport(
        params_base=(p, q),
        pair=(a, b),
        n_range=(lo, hi),
        max_residual=worst,
        passed=bool(worst < ctx.ldexp(1, -CERT_THRESHOLD_BITS)),
    )


def y_by_recurrence(ctx, params: SurgeryParams, a: int, b: int) -> RealPoly:
    """Y_(n,a,b) iterated from Y_0 = 1 and the directly built Y_(+-1)."""
    n = params.n
    one = RealPoly.one(ctx)
    if n == 0:
        return one
    step = 1 if n > 0 else -1
    first = params.with_n(step)
    D = _d_poly(ctx, params, a, b)
    prev, cur = one, _y_from_x(ctx, first, a, b, x_poly(first))
    for _ in range(abs(n) - 1):
        prev, cur = cur, D * cur - prev
    return cur


def _recurrence(params: SurgeryParams, bits: int) -> RealPoly:
    ctx = real_context(bits)
    return product_balanced([y_by_recurrence(ctx, params, a, b) for a, b in ab_pairs(params)], ctx)


def sigma_by_recurrence(params: SurgeryParams,
                        precision_bits: int = DEFAULT_PRECISION) -> SigmaResult:
    return certify(params, _recurrence, Method.RECURRENCE, precision_bits)


def johnson_d_matches(precision_bits: int = DEFAULT_PRECISION) -> bool:
    """The trefoil D evaluated at t/2 equals t^3 - 6t^2 + 9t - 2."""
    ints, resid, _ = d_poly(SurgeryParams(1, 3, 1), 1, 1, precision_bits).round_to_int()
    return resid < 2.0**-CERT_THRESHOLD_BITS and ints.substitute_scaled(1, 2) == JOHNSON_D

