"""Text, LaTeX and JSON renderings of integer polynomials in t."""

from __future__ import annotations

import re

from .chebyshev import IntPoly


def _terms(poly: IntPoly):
    for d in range(poly.degree, -1, -1):
        c = poly[d]
        if c:
            yield d, c


def to_text(poly: IntPoly, var: str = "t") -> str:
    """Descending-degree text form, e.g. ``-4*t^2 + 6*t - 1``.

    Unit coefficients are dropped in front of a power of t (``t^3``, ``-t``).
    """
    if poly.is_zero():
        return "0"
    out = []
    for d, c in _terms(poly):
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def to_latex(poly: IntPoly, var: str = "t") -> str:
    if poly.is_zero():
        return "0"
    out = []
    for d, c in _terms(poly):
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{{{d}}}"
            body = mono if mag == 1 else f"{mag} {mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(?:([a-z])(?:\^(\d+))?)?")


def parse_text(text: str) -> IntPoly:
    """Inverse of :func:`to_text`; also accepts explicit ``1*t^d`` terms."""
    s = text.replace(" ", "")
    if s == "0":
        return IntPoly()
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        d = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
    top = max(coeffs)
    return IntPoly([coeffs.get(i, 0) for i in range(top + 1)])


def coefficient_strings(poly: IntPoly) -> list[str]:
    """Ascending coefficients as decimal strings; the zero polynomial is ["0"]."""
    return [str(c) for c in poly.coeffs] or ["0"]


def from_coefficient_strings(coeffs: list[str]) -> IntPoly:
    return IntPoly([int(c) for c in coeffs])
