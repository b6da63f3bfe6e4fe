"""Closed-form Reidemeister torsion of the acyclic representations.

For an acyclic class (a, b, k),

    1/tau = 2 (1 - cos(a pi/2p)) (1 - cos(b pi/q)) (1 + cos(2pqk pi/N)),

and ``C(a, b) = (1 - cos(a pi/2p)) (1 - cos(b pi/q))`` is the constant that
rescales each factor of the torsion polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateDenominator, NonAcyclicRep, SizeMismatch
from .realpoly import DEFAULT_PRECISION, cos_rational_pi, real_context
from .surgery import RepClass, SurgeryParams, ab_pairs, admissible_k, check_pair, enumerate_acyclic


@dataclass(frozen=True)
class CConstant:
    a: int
    b: int
    value: object
    precision_bits: int


@dataclass(frozen=True)
class TorsionRow:
    rep: RepClass
    tau: object
    inv_tau: object


@dataclass(frozen=True)
class TorsionTable:
    params: SurgeryParams
    rows: tuple[TorsionRow, ...]
    precision_bits: int


def _c_value(ctx, params: SurgeryParams, a: int, b: int):
    return (1 - cos_rational_pi(ctx, a, 2 * params.p)) * (1 - cos_rational_pi(ctx, b, params.q))


def c_constant(params: SurgeryParams, a: int, b: int,
               precision_bits: int = DEFAULT_PRECISION) -> CConstant:
    check_pair(params, a, b)
    ctx = real_context(precision_bits)
    return CConstant(a, b, _c_value(ctx, params, a, b), precision_bits)


def _check_acyclic(params: SurgeryParams, rep: RepClass) -> None:
    ok = (
        rep.is_acyclic
        and 0 < rep.a < 2 * params.p
        and 0 < rep.b < params.q
        and 0 < rep.k < params.N
        and (rep.k - params.n) % 2 == 0
    )
    if params.n == 0 or not ok:
        raise NonAcyclicRep(f"{rep} is not an acyclic class for {params}")


def _inverse_torsion(ctx, params: SurgeryParams, rep: RepClass):
    last = 1 + cos_rational_pi(ctx, 2 * params.p * params.q * rep.k, params.N)
    if abs(last) < ctx.ldexp(1, 10 - ctx.prec):
        raise DegenerateDenominator(f"1 + cos(2pqk pi/N) vanishes for {rep}, {params}")
    return 2 * _c_value(ctx, params, rep.a, rep.b) * last


def torsion_value(params: SurgeryParams, rep: RepClass,
                  precision_bits: int = DEFAULT_PRECISION):
    _check_acyclic(params, rep)
    ctx = real_context(precision_bits)
    return 1 / _inverse_torsion(ctx, params, rep)


def torsion_table(params: SurgeryParams, precision_bits: int = DEFAULT_PRECISION,
                  include_nonacyclic: bool = False) -> TorsionTable:
    """One row per representation class; non-acyclic classes get tau = 0.

    For those rows ``inv_tau`` is None since the torsion is zero by
    convention.
    """
    ctx = real_context(precision_bits)
    rows = []
    for rep in enumerate_acyclic(params, include_nonacyclic=include_nonacyclic):
        if rep.is_acyclic:
            inv = _inverse_torsion(ctx, params, rep)
            rows.append(TorsionRow(rep, 1 / inv, inv))
        else:
            rows.append(TorsionRow(rep, ctx.zero, None))
    return TorsionTable(params, tuple(rows), precision_bits)


def inverse_torsion_multiset(params: SurgeryParams,
                             precision_bits: int = DEFAULT_PRECISION) -> list:
    """All values 1/tau over the acyclic classes, sorted ascending."""
    ctx = real_context(precision_bits)
    return sorted(_inverse_torsion(ctx, params, rep) for rep in enumerate_acyclic(params))


def half_angle_multiset(params: SurgeryParams,
                        precision_bits: int = DEFAULT_PRECISION) -> list:
    """The values 4 C(a,b) cos^2(pk pi/N), 1 <= k <= (N-1)/2, sorted.

    Same multiset as :func:`inverse_torsion_multiset`, reached through the
    reduction cos(2pqk pi/N) -> cos(2pk pi/N) and the half-angle formula.
    """
    if params.n == 0:
        return []
    ctx = real_context(precision_bits)
    out = []
    for a, b in ab_pairs(params):
        four_c = 4 * _c_value(ctx, params, a, b)
        for k in range(1, (params.N - 1) // 2 + 1):
            out.append(four_c * cos_rational_pi(ctx, params.p * k, params.N) ** 2)
    return sorted(out)


def lemma44_check(params: SurgeryParams, precision_bits: int = DEFAULT_PRECISION):
    """Compare {cos(2pqk pi/N) : k = n mod 2} with {cos(2pk pi/N) : 0 < k < N/2}.

    Returns ``(set_a, set_b, max_discrepancy)`` with both lists sorted.
    """
    ctx = real_context(precision_bits)
    p, q, N = params.p, params.q, params.N
    set_a = sorted(cos_rational_pi(ctx, 2 * p * q * k, N) for k in admissible_k(params))
    set_b = sorted(cos_rational_pi(ctx, 2 * p * k, N) for k in range(1, (N + 1) // 2))
    if params.n == 0:
        set_b = []
    if len(set_a) != len(set_b):
        raise SizeMismatch(f"set sizes differ: {len(set_a)} vs {len(set_b)}")
    diff = max((abs(x - y) for x, y in zip(set_a, set_b)), default=ctx.zero)
    return set_a, set_b, diff
