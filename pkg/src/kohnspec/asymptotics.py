"""Numerical checks of the Weyl-law results and the counting-bound lemmas.

The counting function of a lens space grows like 1/k times the sphere's;
this module samples that ratio exactly, evaluates the universal Weyl
constant by quadrature, validates the floor/ceiling bound inequalities in
exact rational arithmetic, and tabulates the remainder-term experiment.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple

from .core import (
    DimensionTooSmall,
    LensSpace,
    NonConvergence,
    ResourceLimit,
    UnsupportedDimension,
)
from .spectrum import counting_grid_size, lens_counting
from .sphere import sphere_counting


@dataclass(frozen=True)
class BoundParams:
    """Parameters (N, m, d, n) of the floor/ceiling counting bounds.

    Here m and d come from the congruence structure (m = gcd(k, l1 - l2),
    d = k/m), not from the base-table reduction, which uses the letter d
    for the gcd itself.  The two never mix.
    """

    N: int
    m: int
    d: int
    n: int

    def __post_init__(self):
        if self.N < 0 or self.m < 1 or self.d < 1:
            raise ValueError("need N >= 0, m >= 1, d >= 1")


class BoundCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class RatioSample:
    """One exact sample of the lens/sphere eigenvalue-count ratio."""

    lam: int
    n_lens: int
    n_sphere: int
    ratio: Fraction | None

    @property
    def ratio_float(self) -> float:
        return float(self.ratio) if self.ratio is not None else math.nan


@dataclass(frozen=True)
class QuadratureConfig:
    truncation: float = 50.0
    tolerance: float = 1e-10
    max_refinements: int = 48

    def __post_init__(self):
        if self.truncation <= 0 or self.tolerance <= 0:
            raise ValueError("truncation and tolerance must be positive")


def weyl_ratio_series(
    space: LensSpace,
    lambda_max: int,
    stride: int,
    budget: int | None = None,
) -> list[RatioSample]:
    """Exact N_L/N ratio samples at lam = stride, 2*stride, ..., lambda_max.

    The optional budget caps the total number of (p, q) grid cells summed
    across all samples; exceeding it raises ResourceLimit.
    """
    if stride < 2 or stride % 2 != 0:
        raise ValueError("stride must be a positive even integer")
    samples = []
    spent = 0
    for lam in range(stride, lambda_max + 1, stride):
        if budget is not None:
            spent += 2 * counting_grid_size(space.n, lam)
            if spent > budget:
                raise ResourceLimit(
                    f"ratio series budget {budget} exhausted at lambda={lam}"
                )
        n_lens = lens_counting(space, lam)
        n_sphere = sphere_counting(space.n, lam)
        ratio = Fraction(n_lens, n_sphere) if n_sphere > 0 else None
        samples.append(RatioSample(lam=lam, n_lens=n_lens, n_sphere=n_sphere, ratio=ratio))
    return samples


def _weyl_integrand(n: int) -> Callable[[float], float]:
    """(x/sinh x)^n * exp(-(n-2)x), with the removable singularity filled.

    Evaluated through logs so that the underflowing (x/sinh x)^n factor
    and the overflowing exponential never meet as floats.
    """

    def f(x: float) -> float:
        if x == 0.0:
            return 1.0
        ax = abs(x)
        if ax > 350.0:
            log_ratio = math.log(2.0 * ax) - ax  # sinh ~ e^|x| / 2
        else:
            log_ratio = math.log(ax / math.sinh(ax))
        exponent = n * log_ratio - (n - 2) * x
        if exponent < -745.0:
            return 0.0
        return math.exp(exponent)

    return f


def _adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float, max_depth: int
) -> float:
    """Recursive adaptive Simpson with the standard |S2 - S1| < 15 tol test."""

    def simpson(x0, f0, x1, f1):
        xm = 0.5 * (x0 + x1)
        fm = f(xm)
        return xm, fm, (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1)

    def recurse(x0, f0, x1, f1, xm, fm, whole, tol, depth):
        lm, flm, left = simpson(x0, f0, xm, fm)
        rm, frm, right = simpson(xm, fm, x1, f1)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            raise NonConvergence(
                f"refinement limit reached on [{x0}, {x1}] with error {abs(delta):.3e}"
            )
        return recurse(x0, f0, xm, fm, lm, flm, left, tol / 2.0, depth - 1) + recurse(
            xm, fm, x1, f1, rm, frm, right, tol / 2.0, depth - 1
        )

    fa, fb = f(a), f(b)
    m, fm, whole = simpson(a, fa, b, fb)
    return recurse(a, fa, b, fb, m, fm, whole, tol, max_depth)


def universal_constant(n: int, cfg: QuadratureConfig | None = None) -> float:
    """The dimension-dependent constant of the Weyl asymptotic.

    (n-1) / (n (2 pi)^n Gamma(n+1)) times the integral over the real line
    of (x/sinh x)^n e^{-(n-2)x}, computed by adaptive Simpson on the
    truncated interval [-T, T].  For n = 2 the closed form is 1/48.
    """
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    if cfg is None:
        cfg = QuadratureConfig()
    integral = _adaptive_simpson(
        _weyl_integrand(n),
        -cfg.truncation,
        cfg.truncation,
        cfg.tolerance,
        cfg.max_refinements,
    )
    prefactor = (n - 1) / (n * (2.0 * math.pi) ** n * math.factorial(n))
    return prefactor * integral


def sphere_volume(n: int) -> float:
    """Volume of the unit sphere S^(2n-1), i.e. 2 pi^n / Gamma(n)."""
    return 2.0 * math.pi**n / math.factorial(n - 1)


class WeylConstants(NamedTuple):
    empirical: float
    predicted: float


def weyl_constant_experiment(space: LensSpace, lambda_max: int) -> WeylConstants:
    """Compare N_L(lam)/lam^n at the cutoff with the predicted Weyl constant.

    The prediction is u_n vol(S^{2n-1})/k.  Reporting only; no verdict.
    """
    n = space.n
    empirical = lens_counting(space, lambda_max) / float(lambda_max) ** n
    predicted = universal_constant(n) * sphere_volume(n) / space.k
    return WeylConstants(empirical=empirical, predicted=predicted)


def check_lower_bound(params: BoundParams) -> BoundCheck:
    """Exact test of the floor-sum lower bound inequality.

    lhs = sum_r C(r+n-3, n-3) sum_{j=0}^{floor((N-r+1)/m)-1} floor((jm+1)/d)
    against the explicit rational comparison sum; empty inner sums (upper
    index -1) contribute zero.
    """
    N, m, d, n = params.N, params.m, params.d, params.n
    if n < 3:
        raise UnsupportedDimension(f"bound lemmas need n >= 3, got n={n}")
    lhs = 0
    for r in range(N + 1):
        inner = sum((j * m + 1) // d for j in range((N - r + 1) // m))
        lhs += comb(r + n - 3, n - 3) * inner
    rhs = Fraction(0)
    margin = d + Fraction(3, 2) * m
    for q in range(N + 1):
        term = Fraction(q + n - 1, n - 1) - margin - margin * Fraction(n - 2, q + n - 2)
        rhs += term * comb(q + n - 2, n - 2)
    rhs /= m * d
    lhs = Fraction(lhs)
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs >= rhs)


def check_upper_bound(params: BoundParams) -> BoundCheck:
    """Exact test of the ceiling-sum upper bound inequality."""
    N, m, d, n = params.N, params.m, params.d, params.n
    if n < 3:
        raise UnsupportedDimension(f"bound lemmas need n >= 3, got n={n}")
    lhs = 0
    for r in range(N + 1):
        j_top = -((N - r + 1) // -m)  # ceil((N-r+1)/m)
        inner = sum(-((j * m) // -d) for j in range(1, j_top + 1))
        lhs += comb(r + n - 3, n - 3) * inner
    rhs = Fraction(0)
    for q in range(N + 1):
        term = (
            Fraction(q + n - 1, n - 1)
            + d
            + Fraction(3, 2) * m
            + (m * m + m * d) * Fraction(n - 2, q + n - 2)
        )
        rhs += term * comb(q + n - 2, n - 2)
    rhs /= m * d
    lhs = Fraction(lhs)
    return BoundCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs)


def lemma_ratio_decay(n: int, lambda_list: list[int]) -> list[Fraction]:
    """Exact A/B ratios whose decay to zero drives the 1/k limit.

    A sums C(p+n-2, n-2) C(q+n-2, n-2) over the counting index set at each
    half-eigenvalue cutoff; B sums the full dimension terms.
    """
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    out = []
    for lam in lambda_list:
        a_total = 0
        b_total = 0
        for p in range(lam - n + 2):
            c_p = comb(p + n - 2, n - 2)
            for q in range(1, lam // (p + n - 1) + 1):
                a = c_p * comb(q + n - 2, n - 2)
                b = a * (p + q + n - 1)
                assert b % (n - 1) == 0
                a_total += a
                b_total += b // (n - 1)
        out.append(Fraction(a_total, b_total) if b_total else Fraction(0))
    return out


@dataclass(frozen=True)
class RemainderSample:
    lam: int
    residual: float
    scaled: float  # residual / lam^(n-1)
    scaled_log: float  # residual / (lam^(n-1) log lam)


def remainder_experiment(
    space: LensSpace, lambda_max: int, samples: int
) -> list[RemainderSample]:
    """Tabulate N_L(lam) - predicted*lam^n at evenly spaced cutoffs.

    Normalized columns let the conjectured lam^(n-1) log lam remainder
    growth be eyeballed; nothing is asserted.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if lambda_max < 2 * samples:
        raise ValueError("lambda_max must be at least 2*samples")
    n = space.n
    predicted = weyl_constant_experiment(space, lambda_max).predicted
    stride = 2 * (lambda_max // (2 * samples))
    rows = []
    for i in range(1, samples + 1):
        lam = i * stride
        residual = lens_counting(space, lam) - predicted * float(lam) ** n
        scale = float(lam) ** (n - 1)
        rows.append(
            RemainderSample(
                lam=lam,
                residual=residual,
                scaled=residual / scale,
                scaled_log=residual / (scale * math.log(lam)),
            )
        )
    return rows
