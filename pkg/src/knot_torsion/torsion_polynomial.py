"""The torsion polynomial sigma_(2p,q,n)(t) and its trefoil variant.

Construction route:  X_n(x) = +-(T_{N+1}(x) - T_{N-1}(x)) / (2(x^2 - 1)) is an
exact even integer polynomial; substituting x^2 = t / (4 C(a,b)) gives the
factor Y_(n,a,b)(t), and sigma is the product of the factors over all odd
pairs (a, b).  The factors have algebraic coefficients, so they are
evaluated in floating point and the product is rounded to integers under a
certification rule (see :func:`certify`).

Oracle route:  each factor is rebuilt from its roots 4 C cos^2(pk pi/N),
without touching the Chebyshev machinery.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable

import flint

from .chebyshev import IntPoly, cheb_T, even_part_as_poly, exact_divide
from .errors import PrecisionExhausted, UnsupportedKnot
from .realpoly import (
    DEFAULT_PRECISION,
    RealPoly,
    cos_rational_pi,
    product_balanced,
    real_context,
)
from .surgery import SurgeryParams, ab_pairs, check_pair, count_ab_pairs
from .torsion_values import _c_value, inverse_torsion_multiset

CERT_THRESHOLD_BITS = 32
MAX_PRECISION = 4096


class Method(str, enum.Enum):
    CONSTRUCTION = "construction"
    ORACLE = "oracle"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class SigmaResult:
    params: SurgeryParams
    sigma: IntPoly
    rounding_residual: object
    method: Method
    precision_bits_used: int

    @property
    def degree(self) -> int:
        return self.sigma.degree

    @property
    def constant_term(self) -> int:
        return self.sigma[0]


def x_poly(params: SurgeryParams) -> IntPoly:
    """X_n as an exact even integer polynomial of degree N - 1."""
    if params.n == 0:
        return IntPoly.constant(1)
    N = params.N
    quot = exact_divide(cheb_T(N + 1) - cheb_T(N - 1), IntPoly((-2, 0, 2)))
    return quot if params.n > 0 else -quot


def _y_from_x(ctx, params: SurgeryParams, a: int, b: int, xp: IntPoly) -> RealPoly:
    u = even_part_as_poly(xp)
    inv = 1 / (4 * _c_value(ctx, params, a, b))
    coeffs, power = [], ctx.one
    for c in u.coeffs:
        coeffs.append(c * power)
        power *= inv
    return RealPoly(tuple(coeffs), ctx)


def y_factor(params: SurgeryParams, a: int, b: int,
             precision_bits: int = DEFAULT_PRECISION) -> RealPoly:
    """Y_(n,a,b)(t) = X_n(sqrt(t) / (2 sqrt(C))), degree (N - 1)/2.

    For n = 0 this is the constant 1.
    """
    check_pair(params, a, b)
    ctx = real_context(precision_bits)
    return _y_from_x(ctx, params, a, b, x_poly(params))


def _construction(params: SurgeryParams, bits: int) -> RealPoly:
    ctx = real_context(bits)
    xp = x_poly(params)
    return product_balanced([_y_from_x(ctx, params, a, b, xp) for a, b in ab_pairs(params)], ctx)


def oracle_factor(params: SurgeryParams, a: int, b: int,
                  precision_bits: int = DEFAULT_PRECISION) -> RealPoly:
    """Y_(n,a,b) rebuilt as lc * prod_k (t - 4 C cos^2(pk pi/N))."""
    check_pair(params, a, b)
    ctx = real_context(precision_bits)
    return _oracle_factor(ctx, params, a, b)


def _oracle_factor(ctx, params: SurgeryParams, a: int, b: int) -> RealPoly:
    N, p = params.N, params.p
    half = (N - 1) // 2
    four_c = 4 * _c_value(ctx, params, a, b)
    linear = [
        RealPoly((-four_c * cos_rational_pi(ctx, p * k, N) ** 2, ctx.one), ctx)
        for k in range(1, half + 1)
    ]
    # leading coefficient of X_n is +-2^(N-1); x^(N-1) -> (t / 4C)^half
    sign = 1 if params.n > 0 else -1
    lead = sign * ctx.ldexp(1, N - 1) / four_c**half
    return product_balanced(linear, ctx).scale(lead)


def _oracle(params: SurgeryParams, bits: int) -> RealPoly:
    ctx = real_context(bits)
    return product_balanced([_oracle_factor(ctx, params, a, b) for a, b in ab_pairs(params)], ctx)


def certify(params: SurgeryParams, builder: Callable[[SurgeryParams, int], RealPoly],
            method: Method, precision_bits: int = DEFAULT_PRECISION,
            max_precision: int = MAX_PRECISION) -> SigmaResult:
    """Round ``builder``'s real product to an integer polynomial.

    The rounding is accepted once two consecutive precision levels (each a
    doubling of the previous) both have every coefficient within
    2^-32 of an integer and round to the same polynomial.
    """
    if params.n == 0:
        return SigmaResult(params, IntPoly.constant(1), 0, method, precision_bits)
    cap = max(max_precision, 2 * precision_bits)
    bits, prev, last = precision_bits, None, None
    while bits <= cap:
        poly = builder(params, bits)
        ints, resid, where = poly.round_to_int()
        ok = resid < poly.ctx.ldexp(1, -CERT_THRESHOLD_BITS)
        if ok and prev == ints:
            return SigmaResult(params, ints, resid, method, bits)
        prev = ints if ok else None
        last = (resid, where, poly[where], bits)
        bits *= 2
    resid, where, value, bits = last
    raise PrecisionExhausted(
        f"{method.value}: coefficient of t^{where} for {params} is {value} "
        f"(distance {resid} from an integer) at {bits} bits",
        index=where, value=value, precision_bits=bits,
    )


def sigma(params: SurgeryParams, precision_bits: int = DEFAULT_PRECISION) -> SigmaResult:
    """Torsion polynomial by the Chebyshev construction."""
    return certify(params, _construction, Method.CONSTRUCTION, precision_bits)


def sigma_oracle(params: SurgeryParams, precision_bits: int = DEFAULT_PRECISION) -> SigmaResult:
    """Torsion polynomial from root products only."""
    return certify(params, _oracle, Method.ORACLE, precision_bits)


def normalization_sign(params: SurgeryParams) -> int:
    return -1 if (params.n * count_ab_pairs(params)) % 2 else 1


def check_normalization(result: SigmaResult) -> bool:
    return result.constant_term == normalization_sign(result.params)


def predicted_degree(params: SurgeryParams) -> int:
    p, q = params.p, params.q
    return (params.N - 1) * p * (q - 1) // 4


def check_degree(result: SigmaResult) -> bool:
    return result.degree == predicted_degree(result.params)


_FLINT_LOCK = threading.Lock()


def numeric_roots(poly: IntPoly, precision_bits: int = DEFAULT_PRECISION) -> list:
    """Real roots of an integer polynomial, listed with multiplicity.

    Roots are isolated by arb (python-flint); a root whose imaginary ball
    excludes zero raises ValueError since torsion values are real.
    """
    ctx = real_context(precision_bits)
    with _FLINT_LOCK:
        saved = flint.ctx.prec
        flint.ctx.prec = precision_bits
        try:
            found = flint.fmpz_poly(list(poly.coeffs)).complex_roots()
        finally:
            flint.ctx.prec = saved
    out = []
    for root, mult in found:
        if not root.imag.contains(0):
            raise ValueError(f"non-real root {root}")
        man, exp = root.real.mid().man_exp()
        out.extend([ctx.ldexp(ctx.mpf(int(man)), int(exp))] * mult)
    return sorted(out)


@dataclass(frozen=True)
class RootCheck:
    """Outcome of locating the roots of sigma next to the values 1/tau.

    ``radius`` bounds |root - value| for every matched pair when ``passed``;
    ``eval_precision_bits`` is the ball-arithmetic precision that settled
    every sign.
    """

    passed: bool
    radius: object
    bracketed: int
    degree: int
    eval_precision_bits: int
    detail: str = ""


def _dyadic_numerator(x, scale_bits: int) -> int:
    man, exp = x.man_exp
    shift = scale_bits + int(exp)
    return int(man) << shift if shift >= 0 else int(man) >> -shift


def root_multiset_check(result: SigmaResult, precision_bits: int = DEFAULT_PRECISION,
                        max_eval_precision: int = 1 << 15) -> RootCheck:
    """Show that the zeros of sigma are the torsion inverses, with multiplicity.

    Around each sorted value v of 1/tau an interval of radius 2^-(P/2) is
    placed and sigma is evaluated at both ends in ball arithmetic.  When the
    intervals are pairwise disjoint and sigma changes sign across each of
    them, sigma has deg(sigma) distinct real roots, one inside each interval,
    which accounts for all of its roots.  Clustered values (intervals that
    overlap) fall back to full root isolation with :func:`numeric_roots`.
    """
    values = inverse_torsion_multiset(result.params, precision_bits)
    ctx = real_context(precision_bits)
    radius = ctx.ldexp(1, -(precision_bits // 2))
    degree = result.degree
    if len(values) != degree:
        return RootCheck(False, radius, 0, degree, 0,
                         f"{len(values)} torsion values for degree {degree}")
    if degree <= 0:
        return RootCheck(True, ctx.zero, 0, degree, 0)
    if any(b - a <= 2 * radius for a, b in zip(values, values[1:])):
        roots = numeric_roots(result.sigma, precision_bits)
        worst = max(abs(r - v) for r, v in zip(roots, values))
        return RootCheck(bool(worst < radius), worst, degree, degree, precision_bits,
                         "clustered values; full isolation")
    scale = precision_bits + 8
    half = _dyadic_numerator(radius, scale)
    centers = [_dyadic_numerator(v, scale) for v in values]
    coeffs = list(result.sigma.coeffs)
    eval_bits = 2 * precision_bits
    with _FLINT_LOCK:
        saved = flint.ctx.prec
        try:
            while True:
                flint.ctx.prec = eval_bits
                den = flint.fmpz(1) << scale
                pts = []
                for m in centers:
                    pts.append(flint.arb(flint.fmpq(m - half, 1) / den))
                    pts.append(flint.arb(flint.fmpq(m + half, 1) / den))
                ys = flint.arb_poly(coeffs).evaluate(pts, algorithm="iter")
                if not any(y.contains(0) for y in ys) or eval_bits >= max_eval_precision:
                    break
                eval_bits *= 2
        finally:
            flint.ctx.prec = saved
    bracketed = sum(
        1 for lo, hi in zip(ys[::2], ys[1::2])
        if not lo.contains(0) and not hi.contains(0) and (lo > 0) != (hi > 0)
    )
    return RootCheck(bracketed == degree, radius, bracketed, degree, eval_bits)


# Trefoil variant: zeros at 1 / (tau/2), normalized to (-1)^n at t = 0.
JOHNSON_D = IntPoly((-2, 9, -6, 1))
_JOHNSON_SEED_MINUS_ONE = IntPoly((-1, 3, -1))


def johnson_sigma_bar(n: int, p: int = 1, q: int = 3) -> IntPoly:
    """Trefoil polynomial sigma-bar_(2,3,n) from its three-term recurrence."""
    if (p, q) != (1, 3):
        raise UnsupportedKnot(f"sigma-bar is defined for the trefoil only, got (2p,q)=({2 * p},{q})")
    if n >= 0:
        prev, cur = _JOHNSON_SEED_MINUS_ONE, IntPoly.constant(1)
        for _ in range(n):
            prev, cur = cur, JOHNSON_D * cur - prev
        return cur
    nxt, cur = IntPoly.constant(1), _JOHNSON_SEED_MINUS_ONE
    for _ in range(-n - 1):
        nxt, cur = cur, JOHNSON_D * cur - nxt
    return cur


def trefoil_bridge(n: int, precision_bits: int = DEFAULT_PRECISION) -> bool:
    """sigma-bar_(2,3,n)(t) == sigma_(2,3,n)(t/2), exactly."""
    s = sigma(SurgeryParams(1, 3, n), precision_bits).sigma
    return johnson_sigma_bar(n) == s.substitute_scaled(1, 2)


# Listings for (2p,q) = (2,5), n = -1 and n = 1 as published (ascending order).
# Their degrees 10 and 12 do not match (N-1)p(q-1)/4; kept for comparison only.
PUBLISHED_LISTINGS = {
    SurgeryParams(1, 5, -1): IntPoly(
        (1, -60, 820, -4608, 12192, -14856, 2336, 5952, -2880, 384, 64)
    ),
    SurgeryParams(1, 5, 1): IntPoly(
        (1, -90, 1880, -16632, 273408, -172824, 197424, -57888, -72000, 61056, -16064, 384, 256)
    ),
}


@dataclass(frozen=True)
class ListingComparison:
    params: SurgeryParams
    published_degree: int
    computed_degree: int
    predicted_degree: int
    matches: bool
    matching_coefficients: int

    def summary(self) -> str:
        verdict = "matches" if self.matches else "differs from"
        return (
            f"{self.params}: computed sigma (degree {self.computed_degree}, "
            f"predicted {self.predicted_degree}) {verdict} the published listing "
            f"(degree {self.published_degree}); "
            f"{self.matching_coefficients} coefficients agree"
        )


def compare_with_listing(result: SigmaResult) -> ListingComparison | None:
    listing = PUBLISHED_LISTINGS.get(result.params)
    if listing is None:
        return None
    n = max(len(listing), len(result.sigma))
    agree = sum(1 for i in range(n) if listing[i] == result.sigma[i])
    return ListingComparison(
        params=result.params,
        published_degree=listing.degree,
        computed_degree=result.degree,
        predicted_degree=predicted_degree(result.params),
        matches=listing == result.sigma,
        matching_coefficients=agree,
    )
