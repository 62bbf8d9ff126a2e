"""Shared domain types: lens-space parameters, validation, text format."""
from __future__ import annotations

import math
from dataclasses import dataclass


class KohnSpecError(Exception):
    """Base class for all errors raised by this package."""


class InvalidOrder(KohnSpecError):
    """Group order k is not a positive integer (or is too small for the op)."""


class InvalidWeight(KohnSpecError):
    """A rotation weight is not coprime to the group order."""


class DimensionTooSmall(KohnSpecError):
    """The dimension parameter n is below 2."""


class UnsupportedDimension(KohnSpecError):
    """Operation only defined for a specific dimension (usually n = 2)."""


class ResourceLimit(KohnSpecError):
    """An enumeration exceeded its configured budget."""


class InvalidEigenvalue(KohnSpecError):
    """Eigenvalues of the Kohn Laplacian are positive even integers."""


class MismatchedSpaces(KohnSpecError):
    """Two lens spaces disagree in k or n where the operation needs them equal."""


class DomainViolation(KohnSpecError):
    """A complex argument lies outside the allowed disk."""


class NonConvergence(KohnSpecError):
    """Adaptive quadrature hit its refinement limit before the tolerance."""


class InsufficientSamples(KohnSpecError):
    """Too few sample points for the requested rank probe."""


@dataclass(frozen=True)
class LensSpace:
    """Parameters (n, k, weights) of the lens space L(k; l_1, ..., l_n).

    The quotient of the unit sphere in C^n by the cyclic group of order k
    acting by coordinate rotations with the given weights.  Weights are
    stored as canonical residues in [0, k); every l_i is coprime to k.
    Instances are immutable and hashable, so they key memo tables safely.
    """

    n: int
    k: int
    weights: tuple[int, ...]

    def __str__(self) -> str:
        return format_lens_spec(self)


def make_lens_space(n: int, k: int, weights) -> LensSpace:
    """Validate and canonicalize a lens-space parameter tuple.

    Weights are reduced mod k into [0, k).  Raises InvalidOrder for k < 1,
    DimensionTooSmall for n < 2, InvalidWeight if any weight shares a
    factor with k, and ValueError if the weight list length is not n.
    """
    if k < 1:
        raise InvalidOrder(f"group order must be >= 1, got {k}")
    if n < 2:
        raise DimensionTooSmall(f"dimension parameter must be >= 2, got {n}")
    ws = tuple(int(w) for w in weights)
    if len(ws) != n:
        raise ValueError(f"expected {n} weights, got {len(ws)}")
    for w in ws:
        if math.gcd(w, k) != 1:
            raise InvalidWeight(f"weight {w} is not coprime to k={k}")
    return LensSpace(n=n, k=k, weights=tuple(w % k for w in ws))


def gcd_invariant(space: LensSpace) -> int:
    """gcd(k, l_1 - l_2), the basic congruence invariant of a 3-d lens space.

    Only defined for n = 2.  Uses the convention gcd(k, 0) = k, so equal
    weights give the full group order.
    """
    if space.n != 2:
        raise UnsupportedDimension(f"gcd invariant needs n = 2, got n={space.n}")
    return math.gcd(space.k, space.weights[0] - space.weights[1])


def parse_lens_spec(text: str) -> LensSpace:
    """Parse the `k:l1,l2,...,ln` text form, inferring n from the list."""
    try:
        head, _, tail = text.partition(":")
        k = int(head)
        weights = [int(part) for part in tail.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed lens spec {text!r}; expected k:l1,l2,...") from exc
    return make_lens_space(len(weights), k, weights)


def format_lens_spec(space: LensSpace) -> str:
    """Render a LensSpace in the `k:l1,l2,...,ln` text form."""
    return f"{space.k}:{','.join(str(w) for w in space.weights)}"
