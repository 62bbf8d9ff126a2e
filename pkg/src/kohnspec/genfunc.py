"""Two-variable generating function of the invariant dimensions.

The closed form averages rational terms over the group: (1/k) times the
sum over m of (1 - zw) / prod_i (1 - zeta^(m l_i) z)(1 - zeta^(-m l_i) w).
Evaluations here are double precision; the exact dimensions themselves
come from the residue convolution, so the series side is an independent
cross-check of the closed form.
"""
from __future__ import annotations

import cmath
import math
import random

import numpy as np

from .core import DomainViolation, InsufficientSamples, InvalidOrder, LensSpace
from .invariant import dim_invariant_dp

MODULUS_BOUND = 0.9


def _check_point(z: complex, w: complex) -> None:
    if abs(z) > MODULUS_BOUND or abs(w) > MODULUS_BOUND:
        raise DomainViolation(
            f"|z|={abs(z):.3f}, |w|={abs(w):.3f} exceed the {MODULUS_BOUND} bound"
        )


def genfunc_closed(space: LensSpace, z: complex, w: complex) -> complex:
    """Evaluate the closed-form generating function at (z, w).

    Roots of unity are taken as cos/sin of the reduced phase per term,
    and the m and k-m terms are added in conjugate pairs so that real
    inputs leave only rounding-level imaginary residue.
    """
    _check_point(z, w)
    k = space.k

    def term(m: int) -> complex:
        denom = 1 + 0j
        for l in space.weights:
            zeta = cmath.exp(2j * math.pi * ((m * l) % k) / k)
            denom *= (1 - zeta * z) * (1 - zeta.conjugate() * w)
        return (1 - z * w) / denom

    total = term(0)
    for m in range(1, k // 2 + 1):
        if m == k - m:
            total += term(m)
        else:
            total += term(m) + term(k - m)
    return total / k


def genfunc_series(
    space: LensSpace, z: complex, w: complex, p_max: int, q_max: int
) -> complex:
    """Truncated power series sum of dim H^G_(p,q) z^p w^q.

    Inside |z|, |w| <= 0.9 the dropped tail is geometric: the dimensions
    grow polynomially while |z|^p |w|^q decays, so cutoffs around 60 put
    the truncation error far below double-precision comparisons at
    moduli <= 0.5.
    """
    _check_point(z, w)
    total = 0j
    zp = 1 + 0j
    for p in range(p_max + 1):
        row = 0j
        wq = 1 + 0j
        for q in range(q_max + 1):
            row += dim_invariant_dp(space, p, q) * wq
            wq *= w
        total += zp * row
        zp *= z
    return total


def unit_disk_points(
    count: int, radius: float = 0.5, seed: int = 12345
) -> list[tuple[complex, complex]]:
    """Deterministic pseudorandom (z, w) pairs inside the given disk."""
    rng = random.Random(seed)

    def one() -> complex:
        r = radius * math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        return r * cmath.exp(1j * theta)

    return [(one(), one()) for _ in range(count)]


def independence_probe(k: int, sample_points) -> int:
    """Numerical rank of the pole-pair function family at the sample points.

    The functions are 1/((z - zeta^l)(w - zeta^-l)(z - zeta^m)(w - zeta^-m))
    for 0 <= l <= m <= k-1; full rank k(k+1)/2 reflects their linear
    independence.  Rank counts singular values above 1e-8 of the largest.
    """
    if k < 2:
        raise InvalidOrder(f"independence probe needs k >= 2, got {k}")
    points = list(sample_points)
    expected = k * (k + 1) // 2
    if len(points) < expected:
        raise InsufficientSamples(
            f"need at least {expected} sample points for k={k}, got {len(points)}"
        )
    zetas = [cmath.exp(2j * math.pi * j / k) for j in range(k)]
    pairs = [(l, m) for l in range(k) for m in range(l, k)]
    matrix = np.empty((len(points), len(pairs)), dtype=complex)
    for i, (z, w) in enumerate(points):
        for j, (l, m) in enumerate(pairs):
            matrix[i, j] = 1.0 / (
                (z - zetas[l])
                * (w - zetas[l].conjugate())
                * (z - zetas[m])
                * (w - zetas[m].conjugate())
            )
    singular = np.linalg.svd(matrix, compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular > 1e-8 * singular[0]))


def max_deviation(
    space: LensSpace,
    points,
    p_max: int = 60,
    q_max: int = 60,
) -> float:
    """Largest |closed - series| over the sample points."""
    return max(
        abs(genfunc_closed(space, z, w) - genfunc_series(space, z, w, p_max, q_max))
        for z, w in points
    )
