"""Exact sphere-packing bounds for entanglement-assisted codes.

The nondegenerate Hamming-type bound for a binary ``[[n,k,d;c]]`` code
compares ``sum_{i<=t} 3^i C(n,i)`` against ``2^(n+c-k)`` with
``t = floor((d-1)/2)``; the asymmetric variant multiplies plain binomial
sums over the two correction radii.  All verdicts are computed in exact
integer arithmetic — floating point only enters the informational
``margin_log2`` field and the asymptotic rate expression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .params import AsymCodeParams, CodeAlgebraError, CodeParams


def binom(n: int, i: int) -> int:
    """Exact binomial coefficient, 0 outside ``0 <= i <= n``."""
    if i < 0 or i > n:
        return 0
    return math.comb(n, i)


def binary_entropy(x: float) -> float:
    """H2(x) with the endpoint convention H2(0) = H2(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise CodeAlgebraError(f"entropy argument must lie in [0,1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of an exact packing-bound check.

    ``satisfied`` is the exact integer comparison ``lhs <= rhs``;
    ``margin_log2 = log2(rhs) - log2(lhs)`` is informational only.
    """

    lhs: int
    rhs: int

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def violated(self) -> bool:
        return self.lhs > self.rhs

    @property
    def margin_log2(self) -> float:
        return math.log2(self.rhs) - math.log2(self.lhs)


def ea_hamming_check(p: CodeParams) -> BoundVerdict:
    """Exact Hamming-bound verdict for a binary ``[[n,k,d;c]]`` record.

    A nondegenerate code must satisfy the bound; a violation certifies that
    any code with these parameters is degenerate.
    """
    if p.q != 2:
        raise CodeAlgebraError(f"Hamming bound check is defined for binary codes, got q={p.q}")
    radius = (p.d - 1) // 2
    lhs = sum(3 ** i * binom(p.n, i) for i in range(radius + 1))
    rhs = 2 ** (p.n + p.c - p.k)
    return BoundVerdict(lhs=lhs, rhs=rhs)


def asym_hamming_check(p: AsymCodeParams) -> BoundVerdict:
    """Exact Hamming-bound verdict for a binary asymmetric ``[[n,k,dz/dx;c]]`` record."""
    if p.q != 2:
        raise CodeAlgebraError(f"Hamming bound check is defined for binary codes, got q={p.q}")
    tx = (p.d_x - 1) // 2
    tz = (p.d_z - 1) // 2
    sum_x = sum(binom(p.n, i) for i in range(tx + 1))
    sum_z = sum(binom(p.n, j) for j in range(tz + 1))
    rhs = 2 ** (p.n + p.c - p.k)
    return BoundVerdict(lhs=sum_x * sum_z, rhs=rhs)


def asymptotic_rate_bound(delta: float, c_over_n: float) -> float:
    """Asymptotic rate ceiling ``1 + c/n - (delta/2) log2(3) - H2(delta/2)``.

    ``delta`` is the relative distance d/n; a negative value certifies that
    codes with this (delta, c/n) pair violate the bound for large n.
    """
    if not 0.0 <= delta <= 1.0:
        raise CodeAlgebraError(f"relative distance must lie in [0,1], got {delta}")
    if c_over_n < 0.0:
        raise CodeAlgebraError(f"ebit rate must be non-negative, got {c_over_n}")
    return 1.0 + c_over_n - (delta / 2.0) * math.log2(3.0) - binary_entropy(delta / 2.0)


def binom_entropy_bounds(n: int, i: int) -> tuple[float, float]:
    """Entropy-based bracket ``lower <= C(n,i) <= upper`` for ``1 < i < n``.

    ``lower = 2^(n H2(a)) / sqrt(8 n a (1-a))`` and
    ``upper = 2^(n H2(a)) / sqrt(2 pi n a (1-a))`` with ``a = i/n``.
    """
    if n < 2 or not 1 < i < n:
        raise CodeAlgebraError(f"need 1 < i < n with n >= 2, got n={n}, i={i}")
    alpha = i / n
    scale = 2.0 ** (n * binary_entropy(alpha))
    spread = n * alpha * (1.0 - alpha)
    lower = scale / math.sqrt(8.0 * spread)
    upper = scale / math.sqrt(2.0 * math.pi * spread)
    return lower, upper
