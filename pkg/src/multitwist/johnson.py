"""The Johnson homomorphism target: Lambda^3 H modulo omega wedge H.

H = Z^{2g} with symplectic basis x1, y1, ..., xg, yg and intersection
form omega = sum x_i ^ y_i.  Cosets are represented by integer vectors
indexed by lexicographic triples; equality is decided by exact integer
lattice reduction (Hermite-style echelon form, cached per genus).

The closed formula for a bounding-pair map T_a T_b^{-1} with capped-off
side R carrying a symplectic family (u_1, v_1), ..., (u_k, v_k) is
(sum u_i ^ v_i) ^ [a].
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache


class GenusMismatch(ValueError):
    pass


class NotSymplecticError(ValueError):
    """Input pairs fail the symplectic-family check."""


@dataclass(frozen=True)
class HomologyClass:
    genus: int
    coordinates: tuple[int, ...]

    def __post_init__(self):
        if len(self.coordinates) != 2 * self.genus:
            raise ValueError("coordinate length must be 2g")

    @classmethod
    def zero(cls, g: int) -> "HomologyClass":
        return cls(g, (0,) * (2 * g))

    @classmethod
    def basis_x(cls, i: int, g: int) -> "HomologyClass":
        v = [0] * (2 * g)
        v[2 * (i - 1)] = 1
        return cls(g, tuple(v))

    @classmethod
    def basis_y(cls, i: int, g: int) -> "HomologyClass":
        v = [0] * (2 * g)
        v[2 * (i - 1) + 1] = 1
        return cls(g, tuple(v))

    @classmethod
    def parse(cls, text: str, g: int) -> "HomologyClass":
        """Named-coordinate syntax: sums of [coeff]x<i> / [coeff]y<i>.

        Examples: "x1", "x2+y2", "2x1-3y2".
        """
        v = [0] * (2 * g)
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty homology class")
        import re
        pos = 0
        pattern = re.compile(r"([+-]?)(\d*)([xy])(\d+)")
        while pos < len(s):
            m = pattern.match(s, pos)
            if not m:
                raise ValueError(f"cannot parse homology class {text!r} at {s[pos:]!r}")
            sign, coeff, kind, idx = m.groups()
            c = int(coeff) if coeff else 1
            if sign == "-":
                c = -c
            i = int(idx)
            if not 1 <= i <= g:
                raise ValueError(f"index {i} out of range for genus {g}")
            v[2 * (i - 1) + (0 if kind == "x" else 1)] += c
            pos = m.end()
        return cls(g, tuple(v))

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if self.genus != other.genus:
            raise GenusMismatch("genus mismatch")
        return HomologyClass(self.genus, tuple(
            a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.genus, tuple(-a for a in self.coordinates))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)


def symplectic_pairing(u: HomologyClass, v: HomologyClass) -> int:
    """omega(u, v) with omega(x_i, y_i) = 1."""
    if u.genus != v.genus:
        raise GenusMismatch("genus mismatch")
    total = 0
    for i in range(u.genus):
        total += (u.coordinates[2 * i] * v.coordinates[2 * i + 1]
                  - u.coordinates[2 * i + 1] * v.coordinates[2 * i])
    return total


@lru_cache(maxsize=None)
def triple_basis(g: int) -> tuple[tuple[int, int, int], ...]:
    """Lexicographic triples i < j < k from the 2g basis indices."""
    return tuple(itertools.combinations(range(2 * g), 3))


@lru_cache(maxsize=None)
def _triple_index(g: int) -> dict:
    return {t: n for n, t in enumerate(triple_basis(g))}


def coordinate_name(index: int) -> str:
    return f"{'x' if index % 2 == 0 else 'y'}{index // 2 + 1}"


@dataclass(frozen=True)
class Wedge3Coset:
    genus: int
    representative: tuple[int, ...]
    reduced_flag: bool = False

    def __post_init__(self):
        expected = len(triple_basis(self.genus))
        if len(self.representative) != expected:
            raise ValueError(f"representative must have length {expected}")

    @classmethod
    def zero(cls, g: int) -> "Wedge3Coset":
        return cls(g, (0,) * len(triple_basis(g)))

    def __add__(self, other: "Wedge3Coset") -> "Wedge3Coset":
        if self.genus != other.genus:
            raise GenusMismatch("genus mismatch")
        return Wedge3Coset(self.genus, tuple(
            a + b for a, b in zip(self.representative, other.representative)))

    def __neg__(self) -> "Wedge3Coset":
        return Wedge3Coset(self.genus, tuple(-a for a in self.representative))

    def __sub__(self, other: "Wedge3Coset") -> "Wedge3Coset":
        return self + (-other)

    def reduce(self) -> "Wedge3Coset":
        """Canonical representative modulo omega wedge H."""
        if self.reduced_flag:
            return self
        lat = _quotient_lattice(self.genus)
        return Wedge3Coset(self.genus, lat.canonical(self.representative),
                           reduced_flag=True)

    def is_zero_coset(self) -> bool:
        lat = _quotient_lattice(self.genus)
        return all(c == 0 for c in lat.canonical(self.representative))

    def to_json_dict(self) -> dict:
        reduced = self.reduce()
        nonzero = {
            "^".join(coordinate_name(i) for i in triple)
            : reduced.representative[n]
            for n, triple in enumerate(triple_basis(self.genus))
            if reduced.representative[n] != 0
        }
        return {"genus": self.genus, "coset": nonzero,
                "is_zero": not nonzero}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def wedge3(h1: HomologyClass, h2: HomologyClass, h3: HomologyClass) -> Wedge3Coset:
    """Alternating trilinear expansion into the triple basis."""
    if not (h1.genus == h2.genus == h3.genus):
        raise GenusMismatch("genus mismatch")
    g = h1.genus
    coeffs = []
    c1, c2, c3 = h1.coordinates, h2.coordinates, h3.coordinates
    for (i, j, k) in triple_basis(g):
        det = (c1[i] * (c2[j] * c3[k] - c2[k] * c3[j])
               - c1[j] * (c2[i] * c3[k] - c2[k] * c3[i])
               + c1[k] * (c2[i] * c3[j] - c2[j] * c3[i]))
        coeffs.append(det)
    return Wedge3Coset(g, tuple(coeffs))


def omega_wedge_basis(g: int) -> list[tuple[int, ...]]:
    """The 2g generators omega ^ e of the sublattice, e over the H basis."""
    if g < 2:
        raise ValueError("quotient needs g >= 2")
    idx = _triple_index(g)
    size = len(triple_basis(g))
    vectors = []
    for e in range(2 * g):
        vec = [0] * size
        for i in range(g):
            xi, yi = 2 * i, 2 * i + 1
            if e in (xi, yi):
                continue
            # x_i ^ y_i ^ e, sorted with sign
            triple = tuple(sorted((xi, yi, e)))
            # permutation parity of (xi, yi, e) relative to sorted order
            sign = _sort_sign((xi, yi, e))
            vec[idx[triple]] += sign
        vectors.append(tuple(vec))
    return vectors


def _sort_sign(t: tuple[int, int, int]) -> int:
    a, b, c = t
    sign = 1
    # bubble sort parity on 3 elements
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return sign


class _EchelonLattice:
    """Integer lattice in row-Hermite echelon form supporting canonical
    coset reduction and membership tests."""

    def __init__(self, generators):
        dim = len(generators[0])
        rows = [list(v) for v in generators]
        self.dim = dim
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []  # pivot column of each stored row
        for v in rows:
            self._insert(v)
        self._back_reduce()

    def _insert(self, v: list[int]):
        v = list(v)
        while True:
            c = next((j for j, x in enumerate(v) if x != 0), None)
            if c is None:
                return
            if c in self.pivots:
                r = self.pivots.index(c)
                row = self.rows[r]
                g, s, t = _xgcd(row[c], v[c])
                qa, qb = row[c] // g, v[c] // g
                self.rows[r] = [s * a + t * b for a, b in zip(row, v)]
                v = [qa * b - qb * a for a, b in zip(row, v)]
                # v[c] is now 0; continue with the next leading column
            else:
                if v[c] < 0:
                    v = [-x for x in v]
                pos = next((i for i, p in enumerate(self.pivots) if p > c),
                           len(self.pivots))
                self.rows.insert(pos, v)
                self.pivots.insert(pos, c)
                return

    def _back_reduce(self):
        for r in range(len(self.rows)):
            for r2 in range(r + 1, len(self.rows)):
                c2 = self.pivots[r2]
                q = self.rows[r][c2] // self.rows[r2][c2]
                if q:
                    self.rows[r] = [a - q * b for a, b
                                    in zip(self.rows[r], self.rows[r2])]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def canonical(self, v) -> tuple[int, ...]:
        """Unique coset representative: pivot coordinates in [0, pivot)."""
        w = list(v)
        for r, c in zip(range(len(self.rows)), self.pivots):
            q = w[c] // self.rows[r][c]
            if q:
                w = [a - q * b for a, b in zip(w, self.rows[r])]
        return tuple(w)

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.canonical(v))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@lru_cache(maxsize=None)
def _quotient_lattice(g: int) -> _EchelonLattice:
    return _EchelonLattice(omega_wedge_basis(g))


def quotient_rank(g: int) -> int:
    """Rank of Lambda^3 H / (omega ^ H) as a free abelian group."""
    return len(triple_basis(g)) - _quotient_lattice(g).rank


def coset_equal(u: Wedge3Coset, v: Wedge3Coset) -> bool:
    """True iff u - v lies in the omega ^ H sublattice."""
    if u.genus != v.genus:
        raise GenusMismatch("genus mismatch")
    return (u - v).is_zero_coset()


def tau_bounding_pair(g: int, pairs, a: HomologyClass) -> Wedge3Coset:
    """(sum u_i ^ v_i) ^ [a] for a symplectic family on the capped side.

    The family must satisfy omega(u_i, v_j) = delta_ij and
    omega(u_i, u_j) = omega(v_i, v_j) = 0, with every class lying in the
    omega-complement of [a] (representatives of H_1 of the capped side).
    """
    if a.genus != g:
        raise GenusMismatch("genus mismatch")
    pairs = list(pairs)
    classes = [h for p in pairs for h in p]
    for h in classes:
        if h.genus != g:
            raise GenusMismatch("genus mismatch")
        if symplectic_pairing(h, a) != 0:
            raise NotSymplecticError(
                "family classes must pair trivially with [a]")
    for i, (ui, vi) in enumerate(pairs):
        for j, (uj, vj) in enumerate(pairs):
            if symplectic_pairing(ui, vj) != (1 if i == j else 0):
                raise NotSymplecticError(f"omega(u{i}, v{j}) wrong")
            if symplectic_pairing(ui, uj) != 0 or symplectic_pairing(vi, vj) != 0:
                raise NotSymplecticError(f"pair ({i}, {j}) not isotropic")
    total = Wedge3Coset.zero(g)
    for u, v in pairs:
        total = total + wedge3(u, v, a)
    return total


def lantern_check(g: int) -> bool:
    """tau(T_z T_d^{-1}) != tau(T_d T_w^{-1}) for the canonical fixture.

    Fixture: [d] = x1; the region between z and d carries (x2, y2), the
    region between d and w carries (x3, y3); two disjoint genus-1 regions
    besides the channel handle force g >= 3.  With each region placed to
    the left of its twisting curve, both formulas orient the common
    homology class the same way, so the inequality is the nonvanishing
    of (x2^y2 - x3^y3)^x1 in the quotient.
    """
    if g < 3:
        raise ValueError("lantern fixture needs g >= 3")
    d = HomologyClass.basis_x(1, g)
    tau_z_d = tau_bounding_pair(
        g, [(HomologyClass.basis_x(2, g), HomologyClass.basis_y(2, g))], d)
    tau_d_w = tau_bounding_pair(
        g, [(HomologyClass.basis_x(3, g), HomologyClass.basis_y(3, g))], d)
    return not coset_equal(tau_z_d, tau_d_w)
