"""Exact integer polynomials and Chebyshev polynomials of the first kind.

Polynomials are dense and stored in ascending order: ``coeffs[i]`` is the
coefficient of ``x**i``.  All arithmetic is exact over Python integers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InexactDivision, OddTermPresent


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial with arbitrary-size integer coefficients.

    The zero polynomial has an empty coefficient tuple and degree ``-1``
    (standing in for minus infinity).
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self), len(other))
        return IntPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, list[Fraction]]:
        """Long division over the rationals; returns (quotient, remainder).

        The quotient must come out integral, otherwise the division is
        reported as inexact.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = len(self) - len(divisor)
        if dq < 0:
            return IntPoly(), rem
        quot = [Fraction(0)] * (dq + 1)
        lead = divisor.leading
        for k in range(dq, -1, -1):
            c = rem[k + divisor.degree] / lead
            quot[k] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= c * d
        if any(q.denominator != 1 for q in quot):
            raise InexactDivision(f"quotient of {self} by {divisor} is not integral")
        return IntPoly([int(q) for q in quot]), _strip_fracs(rem[: divisor.degree])

    def substitute_scaled(self, num: int, den: int = 1) -> IntPoly:
        """Return ``f((num/den) * x)``; raises if the result is not integral."""
        out = []
        for i, c in enumerate(self.coeffs):
            v = Fraction(c * num**i, den**i)
            if v.denominator != 1:
                raise InexactDivision(f"coefficient of x^{i} becomes {v}")
            out.append(int(v))
        return IntPoly(out)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _strip_fracs(rem: list[Fraction]) -> list[Fraction]:
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


X = IntPoly((0, 1))


def exact_divide(numerator: IntPoly, divisor: IntPoly) -> IntPoly:
    """Quotient of an exact division; any remainder is an error."""
    quot, rem = numerator.divmod(divisor)
    if rem:
        raise InexactDivision(
            f"{numerator} is not divisible by {divisor}: remainder {rem}"
        )
    return quot


def even_part_as_poly(p: IntPoly) -> IntPoly:
    """Reindex an even polynomial p(x) as r(u) with u = x^2."""
    odd = [i for i in range(1, len(p), 2) if p.coeffs[i]]
    if odd:
        raise OddTermPresent(f"{p} has odd-degree terms at {odd}")
    return IntPoly(p.coeffs[::2])


_T_TABLE = [IntPoly.constant(1), X]
_T_LOCK = threading.Lock()


def cheb_T(n: int) -> IntPoly:
    """Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t).

    Built by the three-term recurrence T_{n+1} = 2x T_n - T_{n-1}; negative
    indices use T_{-n} = T_n.
    """
    n = abs(n)
    with _T_LOCK:
        while len(_T_TABLE) <= n:
            _T_TABLE.append(2 * X * _T_TABLE[-1] - _T_TABLE[-2])
        return _T_TABLE[n]
