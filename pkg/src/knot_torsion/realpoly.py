"""Arbitrary-precision real arithmetic helpers and dense real polynomials.

Every computation gets its own :class:`mpmath.MPContext`, so the working
precision is a property of the values rather than of global state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import mpmath

from .chebyshev import IntPoly

DEFAULT_PRECISION = 128


def real_context(precision_bits: int) -> mpmath.ctx_mp.MPContext:
    if precision_bits < 16:
        raise ValueError(f"precision_bits must be >= 16, got {precision_bits}")
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    return ctx


def cos_rational_pi(ctx, num: int, den: int):
    """cos(num*pi/den), with the angle reduced exactly modulo 2*pi first."""
    num %= 2 * den
    # fold into [0, pi] so the mpf argument stays small
    if num > den:
        num = 2 * den - num
    return ctx.cospi(ctx.mpf(num) / den)


@dataclass(frozen=True)
class RealPoly:
    """Dense polynomial (ascending order) with mpf coefficients of one context."""

    coeffs: tuple
    ctx: object = field(repr=False, compare=False)

    @property
    def precision_bits(self) -> int:
        return self.ctx.prec

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_values(cls, ctx, values: Sequence) -> RealPoly:
        return cls(tuple(ctx.mpf(v) for v in values), ctx)

    @classmethod
    def from_intpoly(cls, ctx, poly: IntPoly) -> RealPoly:
        return cls.from_values(ctx, poly.coeffs)

    @classmethod
    def one(cls, ctx) -> RealPoly:
        return cls((ctx.one,), ctx)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def __add__(self, other: RealPoly) -> RealPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly(tuple(self[i] + other[i] for i in range(n)), self.ctx)

    def __sub__(self, other: RealPoly) -> RealPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly(tuple(self[i] - other[i] for i in range(n)), self.ctx)

    def __neg__(self) -> RealPoly:
        return RealPoly(tuple(-c for c in self.coeffs), self.ctx)

    def scale(self, factor) -> RealPoly:
        return RealPoly(tuple(factor * c for c in self.coeffs), self.ctx)

    def __mul__(self, other: RealPoly) -> RealPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RealPoly((), self.ctx)
        fdot = self.ctx.fdot
        out = []
        for k in range(len(a) + len(b) - 1):
            lo = max(0, k - len(b) + 1)
            hi = min(k, len(a) - 1)
            out.append(fdot(a[lo : hi + 1], b[k - hi : k - lo + 1][::-1]))
        return RealPoly(tuple(out), self.ctx)

    def __call__(self, t):
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def round_to_int(self) -> tuple[IntPoly, object, int]:
        """Round each coefficient to the nearest integer.

        Returns the integer polynomial, the largest distance from a
        coefficient to its rounded value, and the index where it occurs.
        """
        ints, worst, where = [], self.ctx.zero, -1
        for i, c in enumerate(self.coeffs):
            r = self.ctx.nint(c)
            d = abs(c - r)
            if d > worst or where < 0:
                worst, where = d, i
            ints.append(int(r))
        return IntPoly(ints), worst, where

    def max_abs_difference(self, other: RealPoly):
        n = max(len(self.coeffs), len(other.coeffs))
        return max((abs(self[i] - other[i]) for i in range(n)), default=self.ctx.zero)


def product_balanced(polys: Sequence[RealPoly], ctx) -> RealPoly:
    """Multiply a list of polynomials as a balanced binary tree."""
    items = list(polys)
    if not items:
        return RealPoly.one(ctx)
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]

