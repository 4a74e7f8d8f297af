from fractions import Fraction

import pytest

from multitwist import bounds, intervals
from multitwist.bounds import HypothesisViolation
from multitwist.intervals import Interval


def _within(iv, lo, hi):
    return Fraction(lo) <= iv.lo and iv.hi <= Fraction(hi)


def test_surgery_lower_examples():
    assert _within(bounds.surgery_lower(4, 1).value, "0.693147", "0.693148")
    assert _within(bounds.surgery_lower(3, 2).value, "0.202732", "0.202733")
    with pytest.raises(ValueError):
        bounds.surgery_lower(2, 1)
    with pytest.raises(ValueError):
        bounds.surgery_lower(4, 3)


def test_punctured_surgery_examples():
    assert _within(bounds.punctured_surgery_lower(5).value,
                   "0.223143", "0.223144")
    eight = bounds.punctured_surgery_lower(8).value
    assert _within(eight, "0.693147", "0.693148")
    with pytest.raises(ValueError):
        bounds.punctured_surgery_lower(4)


def test_cubic_root_value():
    # bisection gives 1.2187765853, just under the 5-digit rounding 1.21878
    root = bounds.torelli_cubic_root(40)
    assert _within(root, "1.2187765", "1.2187766")
    with pytest.raises(ValueError):
        bounds.torelli_cubic_root(0)


def test_cubic_root_defining_property():
    root = bounds.torelli_cubic_root(60)
    p_lo = bounds._cubic(root.lo)
    p_hi = bounds._cubic(root.hi)
    assert p_lo <= 0 <= p_hi


def test_cardano_bisection_overlap():
    for bits in (10, 25, 40, 55, 70, 85, 100):
        root = bounds.torelli_cubic_root(bits)
        assert root.width <= Fraction(1, 2 ** (bits - 1))
        # the true root lies inside at every precision
        assert bounds._cubic(root.lo) <= 0 <= bounds._cubic(root.hi)


def test_torelli_lower():
    r = bounds.torelli_lower()
    assert r.binding_case == "case2_cubic"
    assert _within(r.value, "0.1978475", "0.1978476")
    assert r.value.lo > Fraction("0.197")
    assert r.direction == bounds.LOWER_LOG_DILATATION
    # case 1 alone is log sqrt(2)
    case1 = bounds._log_rational(2) * Fraction(1, 2)
    assert _within(case1, "0.346573", "0.346574")
    assert r.value.hi < case1.lo


def test_congruence_lower():
    c3 = bounds.congruence_lower(3)
    assert c3.value.lo > Fraction("0.197")
    assert c3.binding_case == "case2_cubic"
    c4 = bounds.congruence_lower(4)
    t = bounds.torelli_lower()
    assert c4.value.lo == t.value.lo and c4.value.hi == t.value.hi
    with pytest.raises(ValueError):
        bounds.congruence_lower(2)


def test_brunnian_matches_punctured_surgery():
    for p in range(5, 101):
        b = bounds.brunnian_lower(p)
        q = bounds.punctured_surgery_lower(p)
        assert b.value.lo == q.value.lo and b.value.hi == q.value.hi
    with pytest.raises(ValueError):
        bounds.brunnian_lower(4)


def test_filling_intersection():
    assert bounds.filling_intersection_lower(2) == 3
    assert bounds.filling_intersection_lower(10) == 19
    with pytest.raises(ValueError):
        bounds.filling_intersection_lower(1)


def test_tau_cc_upper_examples():
    log2 = bounds._log_rational(2)
    r = bounds.tau_cc_upper(100, log2)
    assert _within(r.value, "0.602716", "0.602717")
    assert r.direction == bounds.UPPER_TAU_C

    with pytest.raises(HypothesisViolation):
        bounds.tau_cc_upper(2, Interval.point(1))
    with pytest.raises(ValueError) as info:
        bounds.tau_cc_upper(1, log2)
    assert not isinstance(info.value, HypothesisViolation)


def test_tau_cc_upper_matches_infs_at_g3():
    root3 = intervals.sqrt_fraction(Fraction(3), 128)
    log_lambda = intervals.log(2 + root3, 64) * Fraction(1, 3)
    direct = bounds.tau_cc_upper(3, log_lambda)
    infs = bounds.tau_cc_infs_upper(3)
    assert direct.value.overlaps(infs.value)


def test_tau_cc_infs_examples():
    # 4*log(2+sqrt 3)/(3*log(5/2)) = 1.9163610...
    assert _within(bounds.tau_cc_infs_upper(3).value, "1.916360", "1.916362")
    assert _within(bounds.tau_cc_infs_upper(10).value, "0.233991", "0.233992")
    with pytest.raises(ValueError):
        bounds.tau_cc_infs_upper(2)


def test_tau_cc_infs_relation():
    # value * g * log(g - 1/2) = 4 * log(2 + sqrt 3)
    root3 = intervals.sqrt_fraction(Fraction(3), 128)
    rhs = 4 * intervals.log(2 + root3, 64)
    for g in range(3, 51):
        lhs = (bounds.tau_cc_infs_upper(g).value * g
               * bounds._log_rational(Fraction(2 * g - 1, 2)))
        assert lhs.overlaps(rhs), g


def test_tau_cc_infs_monotone_decreasing():
    prev = bounds.tau_cc_infs_upper(3).value
    for g in range(4, 1001):
        cur = bounds.tau_cc_infs_upper(g).value
        assert cur.hi < prev.lo, g
        prev = cur


def test_hk_upper():
    assert _within(bounds.hk_upper(2).value, "0.658478", "0.658479")
    two = bounds.hk_upper(2).value
    four = bounds.hk_upper(4).value
    assert (two * Fraction(1, 2)).overlaps(four)
    with pytest.raises(ValueError):
        bounds.hk_upper(1)


def test_m_of_k():
    assert _within(bounds.m_of_k(4).value, "0.693147", "0.693148")
    assert _within(bounds.m_of_k(6).value, "1.098612", "1.098613")
    with pytest.raises(ValueError):
        bounds.m_of_k(2)


def test_bound_ordering():
    assert (bounds.torelli_lower().value.hi
            < bounds.surgery_lower(4, 1).value.lo)


def test_bound_result_json():
    d = bounds.torelli_lower().to_json_dict()
    assert d["direction"] == bounds.LOWER_LOG_DILATATION
    assert d["binding_case"] == "case2_cubic"
    lo, hi = d["bound"]
    assert Fraction(lo) <= Fraction(hi)
    assert "trivially on integral first homology" in d["validity_note"]


def test_bound_result_rejects_wide_interval():
    with pytest.raises(ValueError):
        bounds.BoundResult(Interval(Fraction(0), Fraction(1)),
                           bounds.LOWER_LOG_DILATATION, "too wide")
