"""The representation <T_A, T_B> -> PSL2(R) from two filling multitwists.

T_A maps to [[1, sqrt(mu)], [0, 1]] and T_B to [[1, 0], [-sqrt(mu), 1]],
where mu is the Perron-Frobenius eigenvalue of N*N^t for the intersection
matrix N of the two multicurves.  Hyperbolic images are pseudo-Anosov and
the dilatation is the absolute value of the leading eigenvalue.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import intervals
from .intervals import Interval
from .quadratic import QuadReal
from .words import Word

IDENTITY_CLASS = "identity"
ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class TwistMatrix:
    """2x2 matrix with QuadReal entries over a common radicand, det = 1."""

    a: QuadReal
    b: QuadReal
    c: QuadReal
    d: QuadReal

    @property
    def mu(self) -> int:
        return self.a.mu

    def __matmul__(self, other: "TwistMatrix") -> "TwistMatrix":
        return TwistMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> QuadReal:
        return self.a * self.d - self.b * self.c

    def trace(self) -> QuadReal:
        return self.a + self.d

    def is_plus_minus_identity(self) -> bool:
        zero = QuadReal.rational(0, self.mu)
        if self.b != zero or self.c != zero:
            return False
        one = QuadReal.rational(1, self.mu)
        return (self.a == one and self.d == one) or \
               (self.a == -one and self.d == -one)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def identity(cls, mu: int) -> "TwistMatrix":
        one = QuadReal.rational(1, mu)
        zero = QuadReal.rational(0, mu)
        return cls(one, zero, zero, one)


def generator_images(mu: int) -> tuple[TwistMatrix, TwistMatrix]:
    """Images of T_A and T_B; entries are +-sqrt(mu)."""
    if mu < 1:
        raise ValueError("mu must be >= 1")
    one = QuadReal.rational(1, mu)
    zero = QuadReal.rational(0, mu)
    root = QuadReal.root(mu)
    mat_a = TwistMatrix(one, root, zero, one)
    mat_b = TwistMatrix(one, zero, -root, one)
    return mat_a, mat_b


def evaluate(w: Word, mu: int) -> TwistMatrix:
    """Image of a word, multiplying letter images left to right."""
    mat_a, mat_b = generator_images(mu)
    one = QuadReal.rational(1, mu)
    zero = QuadReal.rational(0, mu)
    root = QuadReal.root(mu)
    images = {
        "a": mat_a,
        "b": mat_b,
        "A": TwistMatrix(one, -root, zero, one),
        "B": TwistMatrix(one, zero, root, one),
    }
    result = TwistMatrix.identity(mu)
    for c in w.letters:
        result = result @ images[c]
    return result


def classify(m: TwistMatrix) -> str:
    """Isometry type in PSL2, decided by exact comparisons."""
    if m.is_plus_minus_identity():
        return IDENTITY_CLASS
    t = abs(m.trace())
    cmp2 = t.compare(2)
    if cmp2 < 0:
        return ELLIPTIC
    if cmp2 == 0:
        return PARABOLIC
    return HYPERBOLIC


@dataclass(frozen=True)
class DilatationReport:
    word: Word
    mu: int
    trace: QuadReal
    isometry_class: str
    dilatation_interval: Optional[Interval]
    log_dilatation_interval: Optional[Interval]
    char_poly: Optional[tuple[Fraction, Fraction, Fraction]]

    def to_json_dict(self) -> dict:
        d = {
            "word": str(self.word),
            "mu": self.mu,
            "trace": self.trace.to_json_dict(),
            "class": self.isometry_class,
        }
        if self.dilatation_interval is not None:
            d["lambda"] = [str(self.dilatation_interval.lo),
                           str(self.dilatation_interval.hi)]
            d["log_lambda"] = [str(self.log_dilatation_interval.lo),
                               str(self.log_dilatation_interval.hi)]
        if self.char_poly is not None:
            d["char_poly"] = [str(c) for c in self.char_poly]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def hyperbolic_dilatation(trace: QuadReal, precision_bits: int) -> tuple[Interval, Interval]:
    """lambda = (|t| + sqrt(t^2 - 4))/2 and log(lambda), both certified."""
    t = abs(trace)
    disc = t * t - QuadReal.rational(4, trace.mu)
    bits = precision_bits + 8
    while True:
        t_iv = t.to_interval(bits)
        disc_iv = disc.to_interval(2 * bits)
        lam = (t_iv + intervals.sqrt(disc_iv, bits)) * Fraction(1, 2)
        log_lam = intervals.log(lam, bits)
        if (lam.relative_width() <= Fraction(1, 2 ** precision_bits)
                and log_lam.relative_width() <= Fraction(1, 2 ** precision_bits)):
            return lam, log_lam
        bits *= 2


def dilatation(w: Word, mu: int, precision_bits: int = 60) -> DilatationReport:
    """Full report for a word; non-hyperbolic images carry no dilatation."""
    m = evaluate(w, mu)
    cls = classify(m)
    t = m.trace()
    lam = log_lam = None
    if cls == HYPERBOLIC:
        lam, log_lam = hyperbolic_dilatation(t, precision_bits)
    # PSL2 sign normalization: the dilatation is the largest root of
    # x^2 - |trace| x + 1, so the |trace| representative is reported
    poly = (Fraction(1), -abs(t).a, Fraction(1)) if t.is_rational() else None
    return DilatationReport(w, mu, t, cls, lam, log_lam, poly)
