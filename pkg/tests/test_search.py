import itertools

import pytest

from multitwist import rep, search
from multitwist.quadratic import QuadReal
from multitwist.search import (NoHyperbolicClassError, enumerate_classes,
                               lcs_csv, lcs_table, min_dilatation_search,
                               orbit_representative)
from multitwist.words import Word


def test_enumerate_length_one():
    assert [w.letters for w in enumerate_classes(1)] == ["a"]


def test_enumerate_length_two():
    reps = [w.letters for w in enumerate_classes(2)]
    assert reps == ["a", "aa", "ab", "aB"]
    # aB is NOT in the ab orbit: check definitionally
    assert orbit_representative(Word("aB")) != orbit_representative(Word("ab"))


def _brute_force_orbit_count(max_length: int) -> int:
    count = 0
    for length in range(1, max_length + 1):
        pool = set(search._cyclically_reduced_strings(length))
        while pool:
            s = pool.pop()
            w = Word(s)
            orbit = set()
            for base in (w, w.inverse()):
                for variant in (base, base.swap_generators()):
                    for rot in variant.rotations():
                        orbit.add(rot.letters)
            pool -= orbit
            count += 1
    return count


def test_enumerate_count_matches_brute_force():
    produced = sum(1 for _ in enumerate_classes(6))
    assert produced == _brute_force_orbit_count(6)


def test_enumerate_reps_are_canonical():
    from multitwist import words as words_mod
    for w in enumerate_classes(5):
        assert words_mod.is_cyclically_reduced(w)
        assert orbit_representative(w) == w


def test_search_examples():
    r2 = min_dilatation_search(2, 64)
    assert str(r2.all_minima[0]) == "ab"
    assert abs(r2.minimum.trace) == QuadReal.rational(62, 64)

    r16 = min_dilatation_search(2, 16)
    assert str(r16.all_minima[0]) == "ab"
    assert abs(r16.minimum.trace) == QuadReal.rational(14, 16)
    iv = r16.minimum.log_dilatation_interval
    assert float(iv.lo) < 2.63392 < float(iv.hi) or \
        abs(float(iv.lo) - 2.63392) < 1e-5


def test_search_preconditions():
    with pytest.raises(ValueError):
        min_dilatation_search(1, 64)
    with pytest.raises(ValueError):
        min_dilatation_search(4, 0)


def test_small_mu_minimum():
    # at mu = 1 the ab class is elliptic (trace 1); aB wins with trace 3
    r = min_dilatation_search(2, 1)
    assert str(r.all_minima[0]) == "aB"
    assert abs(r.minimum.trace) == QuadReal.rational(3, 1)
    assert NoHyperbolicClassError.__mro__  # exported error type


def test_dedup_soundness_small():
    # minimum over deduplicated classes equals the no-dedup minimum
    for max_length, mu in ((6, 64), (6, 16)):
        best = None
        for length in range(1, max_length + 1):
            for s in search._cyclically_reduced_strings(length):
                m = rep.evaluate(Word(s), mu)
                if rep.classify(m) != rep.HYPERBOLIC:
                    continue
                t = abs(m.trace())
                if best is None or t < best:
                    best = t
        report = min_dilatation_search(max_length, mu)
        assert abs(report.minimum.trace) == best


def test_search_monotone_in_max_length():
    prev = None
    for max_length in (2, 3, 4, 5):
        r = min_dilatation_search(max_length, 64)
        cur = abs(r.minimum.trace)
        if prev is not None:
            assert cur <= prev
        prev = cur


def test_jobs_do_not_change_report():
    a = min_dilatation_search(5, 64, jobs=1)
    b = min_dilatation_search(5, 64, jobs=2)
    assert a.to_json_dict() == b.to_json_dict()


def test_minimum_reproduces_trace():
    r = min_dilatation_search(5, 64)
    w = r.all_minima[0]
    assert rep.evaluate(w, 64).trace() == r.minimum.trace


def test_lcs_table_rows():
    table = lcs_table(4, 64)
    assert [row.depth for row in table] == [1, 2, 3, 4]
    assert [row.word_length for row in table] == [2, 4, 8, 16]
    assert str(table[0].word) == "ab"
    assert table[1].trace == QuadReal.rational(4098, 64)
    for row in table:
        assert row.log_dilatation.lo > 0
    with pytest.raises(ValueError):
        lcs_table(0, 64)


def test_lcs_table_k1_matches_dilatation():
    row = lcs_table(1, 64)[0]
    direct = rep.dilatation(Word("ab"), 64)
    assert row.trace == direct.trace
    iv = row.log_dilatation
    assert iv.overlaps(direct.log_dilatation_interval)
    assert float(iv.lo) > 4.1268 and float(iv.hi) < 4.1269


def test_lcs_csv():
    text = lcs_csv(lcs_table(3, 64))
    lines = text.strip().split("\n")
    assert lines[0] == "k,word,length,trace,log_lambda_lo,log_lambda_hi"
    assert lines[1].startswith("1,ab,2,-62,")
    assert lines[2].startswith("2,abAB,4,4098,")
    assert len(lines) == 4


def test_word_key_order():
    # canonical letter order a < b < A < B
    assert sorted(["aB", "ba", "ab"], key=search._word_key) == \
        ["ab", "aB", "ba"]
