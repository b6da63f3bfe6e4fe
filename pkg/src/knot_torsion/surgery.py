"""Surgery parameters and irreducible SL(2,C) representation classes.

A (2p, q)-torus knot with p, q coprime odd integers, surgered with slope
1/n, gives the Brieskorn homology sphere Sigma(2p, q, N), N = |2pqn + 1|.
Its irreducible representations are labelled up to conjugacy by integer
triples (a, b, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidPair, NonCoprime, NonOdd, NonPositive
from .realpoly import DEFAULT_PRECISION, cos_rational_pi, real_context


@dataclass(frozen=True, order=True)
class SurgeryParams:
    p: int
    q: int
    n: int

    @property
    def N(self) -> int:
        return abs(2 * self.p * self.q * self.n + 1)

    def with_n(self, n: int) -> SurgeryParams:
        return SurgeryParams(self.p, self.q, n)

    def __str__(self) -> str:
        return f"(2p,q,n)=({2 * self.p},{self.q},{self.n})"


@dataclass(frozen=True, order=True)
class RepClass:
    a: int
    b: int
    k: int

    @property
    def is_acyclic(self) -> bool:
        return self.a % 2 == 1 and self.b % 2 == 1

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.k})"


@dataclass(frozen=True)
class TraceTriple:
    trace_x: object
    trace_y: object
    trace_m: object
    precision_bits: int


def validate_params(p: int, q: int, n: int) -> SurgeryParams:
    """Check the torus-knot hypotheses and return the parameter record."""
    if p < 1 or q < 3:
        raise NonPositive(f"need p >= 1 and q >= 3, got p={p}, q={q}")
    if p % 2 == 0 or q % 2 == 0:
        raise NonOdd(f"p and q must be odd, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NonCoprime(f"p and q must be coprime, gcd({p}, {q}) = {gcd(p, q)}")
    return SurgeryParams(p, q, n)


def ab_pairs(params: SurgeryParams) -> list[tuple[int, int]]:
    """Odd pairs 0 < a < 2p, 0 < b < q in lexicographic order."""
    return [(a, b) for a in range(1, 2 * params.p, 2) for b in range(1, params.q, 2)]


def count_ab_pairs(params: SurgeryParams) -> int:
    return params.p * (params.q - 1) // 2


def check_pair(params: SurgeryParams, a: int, b: int) -> None:
    if not (0 < a < 2 * params.p and 0 < b < params.q and a % 2 == 1 and b % 2 == 1):
        raise InvalidPair(f"(a,b)=({a},{b}) is not an odd pair for {params}")


def admissible_k(params: SurgeryParams) -> list[int]:
    """0 < k < N with k = n (mod 2)."""
    if params.n == 0:
        return []
    return list(range(2 - params.n % 2, params.N, 2))


def enumerate_acyclic(params: SurgeryParams, include_nonacyclic: bool = False) -> list[RepClass]:
    """Irreducible representation classes, sorted by (a, b, k).

    By default only the acyclic classes (a, b odd, k = n mod 2) are listed.
    With ``include_nonacyclic`` the whole family a = b (mod 2),
    k = n*a (mod 2) is returned.  n = 0 surgers to S^3 and gives nothing.
    """
    if params.n == 0:
        return []
    p, q, n, N = params.p, params.q, params.n, params.N
    out = []
    for a in range(1, 2 * p):
        for b in range(1, q):
            if (a - b) % 2:
                continue
            if not include_nonacyclic and a % 2 == 0:
                continue
            for k in range(1, N):
                if (k - n * a) % 2 == 0:
                    out.append(RepClass(a, b, k))
    return out


def trace_triple(params: SurgeryParams, rep: RepClass,
                 precision_bits: int = DEFAULT_PRECISION) -> TraceTriple:
    """Traces of the images of x, y and the meridian m."""
    ctx = real_context(precision_bits)
    return TraceTriple(
        trace_x=2 * cos_rational_pi(ctx, rep.a, 2 * params.p),
        trace_y=2 * cos_rational_pi(ctx, rep.b, params.q),
        trace_m=2 * cos_rational_pi(ctx, rep.k, params.N),
        precision_bits=precision_bits,
    )
