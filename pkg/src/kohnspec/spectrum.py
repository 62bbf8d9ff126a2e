"""Exact eigenvalue -> multiplicity tables and the counting function.

Eigenvalues are even integers 2q(p + n - 1); the multiplicity of lam sums
the invariant dimensions over all (p, q) with that eigenvalue, found by
enumerating divisors of lam/2.  k = 1 encodes the sphere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

from .core import InvalidEigenvalue, LensSpace, ResourceLimit
from .invariant import dim_invariant

DEFAULT_GRID_BUDGET = 10**7


@dataclass(frozen=True)
class Contributor:
    """One bidegree (p, q) contributing a positive dimension to an eigenvalue."""

    p: int
    q: int
    dim: int


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: int
    multiplicity: int
    contributors: tuple[Contributor, ...]


@dataclass
class SpectrumTable:
    """Sorted map eigenvalue -> multiplicity with per-(p, q) provenance.

    Only eigenvalues with positive multiplicity appear; contributors with
    zero invariant dimension are dropped.
    """

    space: LensSpace
    lambda_max: int
    entries: dict[int, SpectrumEntry]

    def multiplicities(self) -> dict[int, int]:
        return {lam: e.multiplicity for lam, e in self.entries.items()}

    def total_count(self) -> int:
        return sum(e.multiplicity for e in self.entries.values())


def _bidegrees_for(lam: int, n: int) -> list[tuple[int, int]]:
    """All (p, q) with 2q(p + n - 1) = lam, by divisor enumeration of lam/2."""
    half = lam // 2
    pairs = []
    for i in range(1, isqrt(half) + 1):
        if half % i == 0:
            for q in {i, half // i}:
                p = half // q - (n - 1)
                if p >= 0:
                    pairs.append((p, q))
    pairs.sort()
    return pairs


def multiplicity(space: LensSpace, lam: int) -> int:
    """Exact multiplicity of the eigenvalue lam on the lens space."""
    if lam <= 0 or lam % 2 != 0:
        raise InvalidEigenvalue(f"eigenvalues are positive even integers, got {lam}")
    return sum(dim_invariant(space, p, q) for p, q in _bidegrees_for(lam, space.n))


def build_spectrum(
    space: LensSpace, lambda_max: int, budget: int = DEFAULT_GRID_BUDGET
) -> SpectrumTable:
    """Assemble the eigenvalue table for all even eigenvalues <= lambda_max."""
    if lambda_max < 0:
        raise ValueError("lambda_max must be nonnegative")
    entries: dict[int, SpectrumEntry] = {}
    examined = 0
    for lam in range(2, lambda_max + 1, 2):
        pairs = _bidegrees_for(lam, space.n)
        examined += len(pairs)
        if examined > budget:
            raise ResourceLimit(
                f"(p, q) grid exceeded budget {budget} at eigenvalue {lam}"
            )
        contribs = tuple(
            Contributor(p, q, d)
            for p, q in pairs
            if (d := dim_invariant(space, p, q)) > 0
        )
        if contribs:
            entries[lam] = SpectrumEntry(
                eigenvalue=lam,
                multiplicity=sum(c.dim for c in contribs),
                contributors=contribs,
            )
    return SpectrumTable(space=space, lambda_max=lambda_max, entries=entries)


def multiplicity_table(space: LensSpace, lambda_max: int) -> dict[int, int]:
    """Map of eigenvalue -> multiplicity (positive entries only)."""
    out: dict[int, int] = {}
    for lam in range(2, lambda_max + 1, 2):
        m = multiplicity(space, lam)
        if m:
            out[lam] = m
    return out


def lens_counting(space: LensSpace, lam: int) -> int:
    """Number of positive eigenvalues <= lam on the lens space, with multiplicity."""
    if lam < 0:
        raise ValueError("eigenvalue cutoff must be nonnegative")
    n = space.n
    half = lam // 2
    total = 0
    p = 0
    while p + n - 1 <= half:
        q_max = half // (p + n - 1)
        for q in range(1, q_max + 1):
            total += dim_invariant(space, p, q)
        p += 1
    return total


def counting_grid_size(n: int, lam: int) -> int:
    """Number of (p, q) pairs the counting function sums over at cutoff lam."""
    half = lam // 2
    total = 0
    p = 0
    while p + n - 1 <= half:
        total += half // (p + n - 1)
        p += 1
    return total


def spectrum_to_csv(table: SpectrumTable) -> str:
    """Two-column CSV `lambda,multiplicity`, one row per eigenvalue."""
    lines = ["lambda,multiplicity"]
    for lam, entry in table.entries.items():
        lines.append(f"{lam},{entry.multiplicity}")
    return "\n".join(lines) + "\n"


def spectrum_to_json_obj(table: SpectrumTable, contributors: bool = False):
    """JSON-serializable view of the table, optionally with provenance."""
    rows = []
    for lam, entry in table.entries.items():
        row = {"lambda": lam, "multiplicity": entry.multiplicity}
        if contributors:
            row["contributors"] = [
                {"p": c.p, "q": c.q, "dim": c.dim} for c in entry.contributors
            ]
        rows.append(row)
    return {
        "lens": str(table.space),
        "lambda_max": table.lambda_max,
        "entries": rows,
    }


def spectrum_to_json(table: SpectrumTable, contributors: bool = False) -> str:
    return json.dumps(spectrum_to_json_obj(table, contributors), indent=2)
