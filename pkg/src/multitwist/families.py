"""Genus-parametrized multicurve intersection matrices and PF certificates.

Two built-in families: the separating-curve family on the closed genus-g
surface (intersection numbers 4, N*N^t row sums 64) and its sphere/braid
quotient (intersection numbers 2, row sums 16).  Perron-Frobenius
eigenvalues come with exact Collatz-Wielandt brackets in rational
arithmetic; equal row sums short-circuit to an exact certificate.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

TORELLI = "torelli_separating"
BRAID = "braid_sphere"
CUSTOM = "custom"

TORELLI_MU = 64
BRAID_MU = 16


class ReducibleMatrixError(ValueError):
    """PF certificate requested for a reducible matrix."""


@dataclass(frozen=True)
class IntersectionFamily:
    family: str
    m: int
    N: tuple[tuple[int, ...], ...]
    genus: Optional[int] = None
    mu: Optional[int] = None

    def nnt(self) -> list[list[int]]:
        n = self.m
        return [[sum(self.N[i][k] * self.N[j][k] for k in range(n))
                 for j in range(n)] for i in range(n)]


def _cyclic_band(m: int, value: int) -> tuple[tuple[int, ...], ...]:
    if m == 1:
        return ((2 * value,),)
    rows = []
    for i in range(m):
        row = [0] * m
        row[i] = value
        row[(i - 1) % m] = value
        rows.append(tuple(row))
    return tuple(rows)


def torelli_family(g: int) -> IntersectionFamily:
    """Separating-curve pair on the closed genus-g surface; mu = 64."""
    if g < 2:
        raise ValueError("torelli family needs g >= 2")
    m = math.ceil(g / 2)
    return IntersectionFamily(TORELLI, m, _cyclic_band(m, 4), genus=g,
                              mu=TORELLI_MU)


def braid_family(g: int) -> IntersectionFamily:
    """Sphere multicurves before the double cover; models PB_{2g+1}, mu = 16."""
    if g < 1:
        raise ValueError("braid family needs g >= 1")
    m = math.ceil(g / 2)
    return IntersectionFamily(BRAID, m, _cyclic_band(m, 2), genus=g,
                              mu=BRAID_MU)


def nnt(f: IntersectionFamily) -> list[list[int]]:
    return f.nnt()


@dataclass(frozen=True)
class PFResult:
    value_lower: Fraction
    value_upper: Fraction
    eigenvector: tuple[Fraction, ...]
    exact_flag: bool
    iterations: int = 0

    @property
    def is_exact(self) -> bool:
        return self.value_lower == self.value_upper


def _check_matrix(M) -> list[list[Fraction]]:
    n = len(M)
    rows = []
    for row in M:
        if len(row) != n:
            raise ValueError("matrix must be square")
        if any(x < 0 for x in row):
            raise ValueError("matrix must be nonnegative")
        rows.append([Fraction(x) for x in row])
    return rows


def _is_irreducible(M) -> bool:
    """Strong connectivity of the digraph with an edge i->j iff M[i][j] > 0."""
    n = len(M)
    if n == 1:
        return True

    def reachable(transpose: bool) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                entry = M[j][i] if transpose else M[i][j]
                if entry > 0 and j not in seen:
                    seen.add(j)
                    frontier.append(j)
        return seen

    return len(reachable(False)) == n and len(reachable(True)) == n


def collatz_wielandt(M, v) -> tuple[Fraction, Fraction]:
    """min and max of (Mv)_i / v_i over a positive vector v."""
    ratios = [sum(row[j] * v[j] for j in range(len(v))) / v[i]
              for i, row in enumerate(M)]
    return min(ratios), max(ratios)


def pf_eigenvalue(M, tol=Fraction(1, 10 ** 9), max_iterations: int = 10_000) -> PFResult:
    """Perron-Frobenius eigenvalue with an exact rational certificate.

    Equal row sums give the exact answer with the all-ones eigenvector.
    Otherwise power iteration with M + I (primitive for irreducible M)
    tightens the Collatz-Wielandt bracket of M below tol.
    """
    rows = _check_matrix(M)
    n = len(rows)
    if not _is_irreducible(rows):
        raise ReducibleMatrixError("matrix is reducible")
    ones = tuple(Fraction(1) for _ in range(n))
    row_sums = [sum(r) for r in rows]
    if len(set(row_sums)) == 1:
        s = row_sums[0]
        return PFResult(s, s, ones, exact_flag=True)

    v = list(ones)
    lo, hi = collatz_wielandt(rows, v)
    for it in range(1, max_iterations + 1):
        if hi - lo <= tol:
            return PFResult(lo, hi, tuple(v), exact_flag=False, iterations=it - 1)
        # iterate with M + I to handle periodic irreducible matrices
        w = [sum(rows[i][j] * v[j] for j in range(n)) + v[i] for i in range(n)]
        top = max(w)
        v = [x / top for x in w]
        new_lo, new_hi = collatz_wielandt(rows, v)
        lo, hi = max(lo, new_lo), min(hi, new_hi)
    raise RuntimeError(f"PF bracket did not reach tol={tol} "
                       f"in {max_iterations} iterations")


def family_csv(f: IntersectionFamily, tol=Fraction(1, 10 ** 9)) -> str:
    """CSV emission of N, N*N^t, and the PF certificate."""
    out = io.StringIO()
    out.write("section,row,values\n")
    for i, row in enumerate(f.N):
        out.write(f"N,{i},{' '.join(str(x) for x in row)}\n")
    prod = f.nnt()
    for i, row in enumerate(prod):
        out.write(f"NNt,{i},{' '.join(str(x) for x in row)}\n")
    pf = pf_eigenvalue(prod, tol=tol)
    out.write(f"PF,lower,{pf.value_lower}\n")
    out.write(f"PF,upper,{pf.value_upper}\n")
    out.write(f"PF,exact,{str(pf.exact_flag).lower()}\n")
    out.write(f"PF,eigenvector,{' '.join(str(x) for x in pf.eigenvector)}\n")
    return out.getvalue()
