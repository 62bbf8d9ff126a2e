"""Dimensions of the group-invariant eigenspaces of a lens space.

dim H^G_(p,q) equals the number of pairs (alpha, beta) of exponent tuples
with |alpha| = p, |beta| = q, alpha_1 = 0 or beta_1 = 0, and
sum l_j (alpha_j - beta_j) = 0 mod k.  Three routes to that count live
here: a literal enumeration (the oracle), a residue-class convolution
(the production path), and the n = 2 shift recurrence that reduces any
bidegree to a k x k base table.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterator

from .core import LensSpace, ResourceLimit, UnsupportedDimension

# Cap on candidate (alpha, beta) pairs for the enumeration oracle.
DEFAULT_BUDGET = 10**7


def divides(k: int, a: int) -> int:
    """1 if k divides a, else 0.  a may be negative."""
    return 1 if a % k == 0 else 0


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def dim_invariant_bruteforce(
    space: LensSpace, p: int, q: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Count the invariant dimension by exhaustive pair enumeration.

    This is the oracle every faster path is checked against.  Scans all
    C(p+n-1, n-1) * C(q+n-1, n-1) candidate pairs; raises ResourceLimit
    if that product exceeds the budget.
    """
    n, k, weights = space.n, space.k, space.weights
    n_alpha = comb(p + n - 1, n - 1)
    n_beta = comb(q + n - 1, n - 1)
    if n_alpha * n_beta > budget:
        raise ResourceLimit(
            f"{n_alpha * n_beta} candidate pairs exceed budget {budget}"
        )

    def residue(t: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(weights, t)) % k

    beta_all = [residue(b) for b in compositions(q, n)]
    beta_first_zero = [residue(b) for b in compositions(q, n) if b[0] == 0]
    count = 0
    for alpha in compositions(p, n):
        r = residue(alpha)
        if alpha[0] == 0:
            count += beta_all.count(r)
        else:
            count += beta_first_zero.count(r)
    return count


@lru_cache(maxsize=None)
def _profile_rows(weights: tuple[int, ...], k: int, cap: int) -> tuple[tuple[int, ...], ...]:
    """Residue profiles up to degree `cap` for the given weight list.

    Row t, column r counts exponent tuples of total degree t whose
    weighted sum is r mod k.  Built coordinate by coordinate with the
    in-place ascending recurrence new[t][r] = old[t][r] + new[t-1][r-w],
    so the whole table costs O(len(weights) * cap * k).
    """
    rows = [[0] * k for _ in range(cap + 1)]
    rows[0][0] = 1
    for w in weights:
        for t in range(1, cap + 1):
            row = rows[t]
            prev = rows[t - 1]
            for r in range(k):
                row[r] += prev[(r - w) % k]
    return tuple(tuple(row) for row in rows)


def _profile(weights: tuple[int, ...], k: int, degree: int) -> tuple[int, ...]:
    """Residue histogram of exponent tuples of the given total degree."""
    cap = 16
    while cap < degree:
        cap *= 2
    return _profile_rows(weights, k, cap)[degree]


def exponent_profile(space: LensSpace, degree: int) -> tuple[int, ...]:
    """Counts, per residue class mod k, of exponent tuples of total degree.

    Entry r is #{alpha >= 0, |alpha| = degree, sum l_i alpha_i = r mod k};
    the entries sum to C(degree + n - 1, n - 1).
    """
    return _profile(space.weights, space.k, degree)


def _correlate_zero(a: tuple[int, ...], b: tuple[int, ...], k: int) -> int:
    """Number of cross pairs whose residues sum to 0 mod k."""
    return sum(a[r] * b[-r % k] for r in range(k))


def dim_invariant_dp(space: LensSpace, p: int, q: int) -> int:
    """Invariant dimension via residue-class convolution.

    Builds degree profiles for alpha (weights as given) and beta (weights
    negated), each with and without the first coordinate, and combines
    them by inclusion-exclusion over alpha_1 = 0 / beta_1 = 0.  Agrees
    with dim_invariant_bruteforce everywhere.
    """
    k, weights = space.k, space.weights
    negated = tuple(-w % k for w in weights)
    a_full = _profile(weights, k, p)
    a_zero = _profile(weights[1:], k, p)
    b_full = _profile(negated, k, q)
    b_zero = _profile(negated[1:], k, q)
    return (
        _correlate_zero(a_zero, b_full, k)
        + _correlate_zero(a_full, b_zero, k)
        - _correlate_zero(a_zero, b_zero, k)
    )


@dataclass(frozen=True)
class MNCounts:
    """Solution counts of the two one-variable congruences behind n = 2.

    m_pq counts beta_1 in [0, q] with l_1(-beta_1) + l_2(p-q+beta_1) = 0
    mod k (the alpha_1 = 0 branch); n_pq counts alpha_1 in [0, p] with
    l_1 alpha_1 + l_2(p-q-alpha_1) = 0 mod k (beta_1 = 0).  The invariant
    dimension is m_pq + n_pq - divides(k, p-q).
    """

    m_pq: int
    n_pq: int


def mn_counts(space: LensSpace, p: int, q: int) -> MNCounts:
    """Count the two congruence branches separately (n = 2 only)."""
    if space.n != 2:
        raise UnsupportedDimension(f"mn_counts needs n = 2, got n={space.n}")
    k = space.k
    l1, l2 = space.weights
    m_pq = sum(1 for b1 in range(q + 1) if (l2 * (p - q + b1) - l1 * b1) % k == 0)
    n_pq = sum(1 for a1 in range(p + 1) if (l1 * a1 + l2 * (p - q - a1)) % k == 0)
    return MNCounts(m_pq=m_pq, n_pq=n_pq)


@lru_cache(maxsize=None)
def base_dim_table(space: LensSpace) -> tuple[tuple[int, ...], ...]:
    """The k x k table of invariant dimensions for 0 <= p, q < k (n = 2).

    The shift recurrence reduces every bidegree to this table, so it is
    the complete spectral fingerprint of a 3-d lens space.  Filled by the
    convolution path; cached per space.
    """
    if space.n != 2:
        raise UnsupportedDimension(f"base table needs n = 2, got n={space.n}")
    k = space.k
    return tuple(
        tuple(dim_invariant_dp(space, p, q) for q in range(k)) for p in range(k)
    )


def dim_invariant_recurrence(space: LensSpace, p: int, q: int) -> int:
    """Invariant dimension via the n = 2 reduction to the base table.

    Returns 0 when d = gcd(k, l_1 - l_2) does not divide p - q; otherwise
    base[p%k][q%k] + d*(floor(p/k) + floor(q/k)).
    """
    if space.n != 2:
        raise UnsupportedDimension(f"recurrence needs n = 2, got n={space.n}")
    k = space.k
    d = gcd(k, space.weights[0] - space.weights[1])
    if (p - q) % d != 0:
        return 0
    base = base_dim_table(space)
    return base[p % k][q % k] + d * (p // k + q // k)


def dim_invariant(space: LensSpace, p: int, q: int) -> int:
    """Invariant dimension by the fastest exact route for the space.

    n = 2 uses the base-table recurrence (O(1) after a k x k fill);
    higher n uses the residue convolution.  k = 1 degenerates to the full
    sphere eigenspace dimension either way.
    """
    if space.n == 2:
        return dim_invariant_recurrence(space, p, q)
    return dim_invariant_dp(space, p, q)


def clear_caches() -> None:
    """Drop the memoized profile and base tables (mainly for tests)."""
    _profile_rows.cache_clear()
    base_dim_table.cache_clear()
