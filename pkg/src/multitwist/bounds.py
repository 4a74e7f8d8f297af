"""Closed-form dilatation and translation-length bounds.

Every evaluator returns a certified interval, never a bare float; the
underlying inequalities are strict, so enclosures are the honest output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import intervals
from .intervals import Interval

LOWER_LOG_DILATATION = "lower_bound_on_log_dilatation"
UPPER_LOG_DILATATION = "upper_bound_on_log_dilatation"
UPPER_TAU_C = "upper_bound_on_tau_C"
LOWER_INTERSECTION = "lower_bound_on_intersection"

# relative width 10^-12 required of every BoundResult; 2^-48 ~ 3.6e-15
_BITS = 64
_REL_WIDTH = Fraction(1, 10 ** 12)


class HypothesisViolation(ValueError):
    """A bound's mathematical hypothesis fails (distinct from bad parameters)."""


@dataclass(frozen=True)
class BoundResult:
    value: Interval
    direction: str
    validity_note: str
    binding_case: str = ""

    def __post_init__(self):
        scale = max(Fraction(1), abs(self.value.lo), abs(self.value.hi))
        if self.value.width > _REL_WIDTH * scale:
            raise ValueError("bound interval too wide")

    def to_json_dict(self) -> dict:
        d = {
            "bound": [str(self.value.lo), str(self.value.hi)],
            "bound_float": self.value.as_floats(),
            "direction": self.direction,
            "validity_note": self.validity_note,
        }
        if self.binding_case:
            d["binding_case"] = self.binding_case
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _log_rational(x, bits: int = _BITS) -> Interval:
    return intervals.log(Interval.point(Fraction(x)), bits)


def surgery_lower(n: int, j: int = 1) -> BoundResult:
    """log(n/2)/j: lower bound when i(c, f^j(c)) >= n >= 3 for every curve c."""
    if n < 3:
        raise ValueError("surgery bound requires n >= 3")
    if j not in (1, 2):
        raise ValueError("power j must be 1 or 2")
    value = _log_rational(Fraction(n, 2)) * Fraction(1, j)
    return BoundResult(value, LOWER_LOG_DILATATION,
                       f"valid when i(c, f^{j}(c)) >= {n} for every simple "
                       f"closed curve c on a closed surface")


def punctured_surgery_lower(n: int) -> BoundResult:
    """log(n/4): punctured-surface variant, requires n >= 5."""
    if n < 5:
        raise ValueError("punctured surgery bound requires n >= 5")
    return BoundResult(_log_rational(Fraction(n, 4)), LOWER_LOG_DILATATION,
                       f"valid when i(c, f(c)) >= {n} for every simple "
                       f"closed curve c on a punctured surface")


def torelli_cubic_root(precision_bits: int = _BITS) -> Interval:
    """Unique real root of x^3 + 2x^2 + x - 6, by Cardano and by bisection.

    The two enclosures must agree; their intersection is returned.
    """
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    bits = precision_bits + 8
    # Cardano: -2/3 + (cbrt(82 - 9*sqrt(83)) + cbrt(82 + 9*sqrt(83)))/3
    root83 = intervals.sqrt_fraction(Fraction(83), 4 * bits)
    third = Fraction(1, 3)
    cardano = (Interval.point(Fraction(-2, 3))
               + intervals.cbrt(82 - 9 * root83, bits) * third
               + intervals.cbrt(82 + 9 * root83, bits) * third)
    bisect = _bisect_cubic(precision_bits)
    if not cardano.overlaps(bisect):
        raise AssertionError("Cardano and bisection enclosures disagree")
    return cardano.intersect(bisect)


def _cubic(x: Fraction) -> Fraction:
    return x ** 3 + 2 * x ** 2 + x - 6


def _bisect_cubic(precision_bits: int) -> Interval:
    lo, hi = Fraction(1), Fraction(2)
    target = Fraction(1, 2 ** (precision_bits + 2))
    while hi - lo > target:
        mid = (lo + hi) / 2
        if _cubic(mid) < 0:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def torelli_lower() -> BoundResult:
    """min(log sqrt(2), log of the cubic root); the cubic case binds."""
    case1 = _log_rational(2) * Fraction(1, 2)
    case2 = intervals.log(torelli_cubic_root(), _BITS)
    if case2.hi < case1.lo:
        value, binding = case2, "case2_cubic"
    elif case1.hi < case2.lo:
        value, binding = case1, "case1_sqrt2"
    else:
        value, binding = Interval(min(case1.lo, case2.lo),
                                  min(case1.hi, case2.hi)), "tie"
    return BoundResult(value, LOWER_LOG_DILATATION,
                       "valid for every pseudo-Anosov acting trivially on "
                       "integral first homology, g >= 2",
                       binding_case=binding)


def congruence_lower(r: int) -> BoundResult:
    """Level-r congruence subgroup lower bound, r >= 3."""
    if r < 3:
        raise ValueError("congruence bound requires r >= 3")
    if r >= 4:
        base = torelli_lower()
        return BoundResult(base.value, base.direction,
                           f"valid for the level-{r} congruence subgroup, g >= 2",
                           binding_case=base.binding_case)
    # r = 3: case 1 weakens to intersection number 3 on f or f^2
    case1 = surgery_lower(3, 2).value
    case2 = intervals.log(torelli_cubic_root(), _BITS)
    if case2.hi < case1.lo:
        value, binding = case2, "case2_cubic"
    else:
        value, binding = case1, "case1_surgery_3_2"
    return BoundResult(value, LOWER_LOG_DILATATION,
                       "valid for the level-3 congruence subgroup, g >= 2",
                       binding_case=binding)


def brunnian_lower(p: int) -> BoundResult:
    """log(p/4) for the Brunnian subgroup of a p-punctured surface, p >= 5."""
    if p < 5:
        raise ValueError("Brunnian bound requires p >= 5")
    inner = punctured_surgery_lower(p)
    return BoundResult(inner.value, LOWER_LOG_DILATATION,
                       f"valid for every pseudo-Anosov in the Brunnian "
                       f"subgroup with {p} punctures")


def filling_intersection_lower(g: int) -> int:
    """Two curves filling a closed genus-g surface intersect >= 2g - 1 times."""
    if g < 2:
        raise ValueError("filling bound requires g >= 2")
    return 2 * g - 1


def tau_cc_upper(g: int, log_lambda: Interval) -> BoundResult:
    """4*log(lambda)/log(g - 1/2), valid when lambda <= g - 1/2.

    The hypothesis is enforced with a certified comparison; violations
    raise HypothesisViolation, bad parameters raise ValueError.
    """
    if g < 2:
        raise ValueError("curve-complex bound requires g >= 2")
    threshold = Fraction(2 * g - 1, 2)
    log_threshold = _log_rational(threshold)
    if log_lambda.hi > log_threshold.lo:
        raise HypothesisViolation(
            f"hypothesis lambda <= g - 1/2 = {threshold} not certified: "
            f"log(lambda) upper endpoint {float(log_lambda.hi):.6f} exceeds "
            f"certified log({threshold}) >= {float(log_threshold.lo):.6f}")
    value = 4 * log_lambda / log_threshold
    return BoundResult(value, UPPER_TAU_C,
                       f"valid for pseudo-Anosov f on genus {g} with "
                       f"dilatation at most g - 1/2")


def tau_cc_infs_upper(g: int) -> BoundResult:
    """4*log(2 + sqrt(3))/(g*log(g - 1/2)) for g >= 3."""
    if g < 3:
        raise ValueError("asymptotic curve-complex bound requires g >= 3; "
                         "genus 2 is out of scope")
    root3 = intervals.sqrt_fraction(Fraction(3), 2 * _BITS)
    numerator = 4 * intervals.log(2 + root3, _BITS)
    denominator = g * _log_rational(Fraction(2 * g - 1, 2))
    return BoundResult(numerator / denominator, UPPER_TAU_C,
                       f"upper bound on the minimal curve-complex translation "
                       f"length at genus {g}")


def hk_upper(g: int) -> BoundResult:
    """log(2 + sqrt(3))/g, the Hironaka-Kin minimal-dilatation upper bound."""
    if g < 2:
        raise ValueError("Hironaka-Kin bound requires g >= 2")
    root3 = intervals.sqrt_fraction(Fraction(3), 2 * _BITS)
    value = intervals.log(2 + root3, _BITS) * Fraction(1, g)
    return BoundResult(value, UPPER_LOG_DILATATION,
                       f"upper bound on the minimal log dilatation at genus {g}")


def m_of_k(B_value: int) -> BoundResult:
    """m(k) = log(B(k)/2) for a user-supplied intersection threshold B(k) >= 3."""
    if B_value < 3:
        raise ValueError("m(k) requires B(k) >= 3")
    return BoundResult(_log_rational(Fraction(B_value, 2)), LOWER_LOG_DILATATION,
                       f"valid for the Johnson filtration level whose minimal "
                       f"forced intersection number is {B_value}")
