"""CR isometry/isospectrality decisions for lens spaces.

The arithmetic certificate of a CR isometry is a unit a mod k and a
coordinate permutation carrying one weight tuple to the other.  For
3-dimensional lens spaces with prime k this is equivalent to equality of
spectra, of all invariant dimensions, and of the congruence invariant d;
the machinery here also exposes the residue-count matrices C^lambda and
the row-shift operator whose span argument drives that equivalence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from math import isqrt

from .core import (
    InvalidEigenvalue,
    InvalidOrder,
    LensSpace,
    MismatchedSpaces,
    UnsupportedDimension,
    gcd_invariant,
)
from .invariant import base_dim_table, dim_invariant_dp
from .spectrum import multiplicity_table


@dataclass(frozen=True)
class IsometryWitness:
    """Unit a and permutation sigma with l'_i = a * l_sigma(i) mod k.

    sigma is stored 1-based: sigma[i-1] is the source position for target
    position i.
    """

    a: int
    sigma: tuple[int, ...]


def _units(k: int) -> list[int]:
    if k == 1:
        return [1]
    return [a for a in range(1, k) if math.gcd(a, k) == 1]


def verify_witness(space: LensSpace, other: LensSpace, witness: IsometryWitness) -> bool:
    """Recompute a * l_sigma(i) mod k and compare against the target weights."""
    k = space.k
    return all(
        other.weights[i] == (witness.a * space.weights[s - 1]) % k
        for i, s in enumerate(witness.sigma)
    )


def condition4_witness(space: LensSpace, other: LensSpace) -> IsometryWitness | None:
    """Search exhaustively for the isometry certificate (a, sigma).

    Scans units a ascending and permutations in lexicographic order, so a
    returned witness is the lexicographically smallest one.  Returns None
    when no certificate exists.
    """
    if space.k != other.k or space.n != other.n:
        raise MismatchedSpaces(
            f"cannot compare {space} with {other}: k and n must agree"
        )
    k, n = space.k, space.n
    for a in _units(k):
        for sigma in permutations(range(1, n + 1)):
            if all(
                other.weights[i] == (a * space.weights[s - 1]) % k
                for i, s in enumerate(sigma)
            ):
                return IsometryWitness(a=a, sigma=sigma)
    return None


def spectra_equal_up_to(space: LensSpace, other: LensSpace, lambda_max: int) -> bool:
    """Whether the multiplicity tables agree for every even eigenvalue <= cutoff.

    k may differ between the spaces; n may not.
    """
    if space.n != other.n:
        raise MismatchedSpaces("spectral comparison needs equal n")
    return multiplicity_table(space, lambda_max) == multiplicity_table(other, lambda_max)


def dims_equal(space: LensSpace, other: LensSpace, p_max: int, q_max: int) -> bool:
    """Whether all invariant dimensions agree.

    For n = 2 this is a complete decision: the shift reduction means two
    spaces agree everywhere iff they share the congruence invariant d and
    the k x k base table, so p_max/q_max are ignored.  For n >= 3 only the
    given finite grid is compared (a partial check).
    """
    if space.k != other.k or space.n != other.n:
        raise MismatchedSpaces(
            f"cannot compare {space} with {other}: k and n must agree"
        )
    if space.n == 2:
        return gcd_invariant(space) == gcd_invariant(other) and base_dim_table(
            space
        ) == base_dim_table(other)
    return all(
        dim_invariant_dp(space, p, q) == dim_invariant_dp(other, p, q)
        for p in range(p_max + 1)
        for q in range(q_max + 1)
    )


def d_invariant_check(space: LensSpace, other: LensSpace) -> bool:
    """Fast necessary condition: equal gcd invariants d = d'.

    Spectrally equal 3-d lens spaces share d (with the d=2/d'=4 pairing
    left open), so unequal d certifies distinct spectra in all other
    cases; equal d decides nothing.
    """
    if space.n != 2 or other.n != 2:
        raise UnsupportedDimension("d-invariant comparison needs n = 2")
    if space.k != other.k:
        raise MismatchedSpaces("d-invariant comparison needs equal k")
    return gcd_invariant(space) == gcd_invariant(other)


@dataclass(frozen=True)
class CMatrix:
    """k x k counts of bidegree classes hitting one eigenvalue (n = 2).

    Entry (a, b) counts pairs (p, q) with p = a, q = b mod k and
    2q(p+1) = lam.  The entries sum to the number of divisors of lam/2.
    """

    k: int
    lam: int
    entries: tuple[tuple[int, ...], ...]

    def as_vector(self) -> tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def c_matrix(k: int, lam: int) -> CMatrix:
    """Build C^lam by enumerating divisors q of lam/2 (with p + 1 = (lam/2)/q)."""
    if k < 2:
        raise InvalidOrder(f"residue-count matrix needs k >= 2, got {k}")
    if lam < 2 or lam % 2 != 0:
        raise InvalidEigenvalue(f"eigenvalues are positive even integers, got {lam}")
    entries = [[0] * k for _ in range(k)]
    half = lam // 2
    for i in range(1, isqrt(half) + 1):
        if half % i == 0:
            for q in {i, half // i}:
                p = half // q - 1
                entries[p % k][q % k] += 1
    return CMatrix(k=k, lam=lam, entries=tuple(tuple(row) for row in entries))


def t_apply(matrix) -> list[list[int]]:
    """Cyclic row shift: the top row moves to the bottom."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    return [list(matrix[(i + 1) % size]) for i in range(size)]


def t_inverse(matrix) -> list[list[int]]:
    """Inverse row shift: the bottom row moves to the top."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    return [list(matrix[(i - 1) % size]) for i in range(size)]


def _integer_rank(vectors) -> int:
    """Rank over Q of integer vectors, by fraction-free elimination.

    Keeps a gcd-normalized echelon basis keyed by pivot column; each new
    vector is cross-multiplied against existing pivots, so no rationals
    ever appear.
    """
    basis: dict[int, list[int]] = {}
    for vec in vectors:
        row = list(vec)
        while True:
            pivot = next((i for i, x in enumerate(row) if x), None)
            if pivot is None:
                break
            if pivot in basis:
                b = basis[pivot]
                lead_b, lead_r = b[pivot], row[pivot]
                row = [lead_b * x - lead_r * y for x, y in zip(row, b)]
                continue
            g = math.gcd(*row)
            if row[pivot] < 0:
                g = -g
            basis[pivot] = [x // g for x in row]
            break
    return len(basis)


def span_dimension(k: int, lambdas) -> int:
    """Rational rank of the set of C^lam matrices viewed as k^2-vectors.

    For prime k the span is the shifted symmetric matrices, so the rank
    tops out at k(k+1)/2 once enough eigenvalues are included.
    """
    return _integer_rank(c_matrix(k, lam).as_vector() for lam in lambdas)


def _canonical_pair(pair: tuple[int, int], k: int, units: list[int]) -> tuple[int, int]:
    """Lexicographically least orbit element with first weight normalized to 1."""
    best = None
    for a in units:
        for x, y in ((pair[0], pair[1]), (pair[1], pair[0])):
            candidate = ((a * x) % k, (a * y) % k)
            if candidate[0] == 1 and (best is None or candidate < best):
                best = candidate
    assert best is not None
    return best


def classify_all(k: int) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Partition all valid n = 2 weight pairs into isometry classes.

    Keys are canonical representatives (first weight 1, least second
    weight over the orbit); values list the class members in ascending
    order.  Classes are returned by ascending representative.
    """
    if k < 2:
        raise InvalidOrder(f"classification needs k >= 2, got {k}")
    units = _units(k)
    classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for l1 in units:
        for l2 in units:
            rep = _canonical_pair((l1, l2), k, units)
            classes.setdefault(rep, []).append((l1, l2))
    return {rep: sorted(classes[rep]) for rep in sorted(classes)}
