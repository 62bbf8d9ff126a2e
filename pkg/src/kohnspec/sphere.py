"""Eigenspace dimensions and eigenvalue counting for the sphere S^(2n-1).

The eigenspaces of the Kohn Laplacian on the sphere are the bigraded
harmonic spaces indexed by (p, q); the eigenvalue attached to (p, q) is
2q(p + n - 1), and the kernel (q = 0) is excluded from all counting.
"""
from __future__ import annotations

from math import comb

from .core import DimensionTooSmall


def dim_hpq(n: int, p: int, q: int) -> int:
    """Dimension of the bidegree-(p, q) harmonic eigenspace on S^(2n-1).

    Evaluates ((p+q)/(n-1) + 1) * C(p+n-2, n-2) * C(q+n-2, n-2) exactly,
    as (p+q+n-1) * C(...) * C(...) / (n-1) with the division asserted to
    be exact.  Arbitrary precision.
    """
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    if p < 0 or q < 0:
        raise ValueError("bidegree components must be nonnegative")
    numerator = (p + q + n - 1) * comb(p + n - 2, n - 2) * comb(q + n - 2, n - 2)
    quotient, remainder = divmod(numerator, n - 1)
    assert remainder == 0, f"dimension formula not integral at n={n}, p={p}, q={q}"
    return quotient


def eigenvalue(n: int, p: int, q: int) -> int:
    """Kohn Laplacian eigenvalue 2q(p + n - 1) of the (p, q) eigenspace."""
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    if p < 0 or q < 0:
        raise ValueError("bidegree components must be nonnegative")
    return 2 * q * (p + n - 1)


def sphere_counting(n: int, lam: int) -> int:
    """Number of positive eigenvalues <= lam on S^(2n-1), with multiplicity.

    Enumerates p, then the admissible q-range 1 <= q <= lam/(2(p+n-1)),
    mirroring the double sum the asymptotic analysis manipulates.
    """
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    if lam < 0:
        raise ValueError("eigenvalue cutoff must be nonnegative")
    half = lam // 2
    total = 0
    p = 0
    while p + n - 1 <= half:
        q_max = half // (p + n - 1)
        for q in range(1, q_max + 1):
            total += dim_hpq(n, p, q)
        p += 1
    return total
