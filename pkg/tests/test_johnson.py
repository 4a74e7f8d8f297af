import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multitwist import johnson
from multitwist.johnson import (GenusMismatch, HomologyClass,
                                NotSymplecticError, Wedge3Coset, coset_equal,
                                lantern_check, omega_wedge_basis,
                                quotient_rank, tau_bounding_pair, wedge3)


def _x(i, g):
    return HomologyClass.basis_x(i, g)


def _y(i, g):
    return HomologyClass.basis_y(i, g)


def _unit(g, triple):
    idx = johnson.triple_basis(g).index(triple)
    v = [0] * len(johnson.triple_basis(g))
    v[idx] = 1
    return Wedge3Coset(g, tuple(v))


def test_wedge3_basis_triple():
    g = 2
    # x1, y1, x2 occupy indices 0, 1, 2
    assert wedge3(_x(1, g), _y(1, g), _x(2, g)) == _unit(g, (0, 1, 2))


def test_wedge3_alternation_zero():
    g = 2
    out = wedge3(_x(1, g), _x(1, g), _y(2, g))
    assert all(c == 0 for c in out.representative)


def test_wedge3_multilinearity():
    g = 2
    lhs = wedge3(_x(1, g) + _y(1, g), _y(1, g), _x(2, g))
    assert lhs == wedge3(_x(1, g), _y(1, g), _x(2, g))


def test_wedge3_genus_mismatch():
    with pytest.raises(GenusMismatch):
        wedge3(_x(1, 2), _x(1, 3), _y(1, 3))


def test_wedge3_full_alternation_random():
    rng = random.Random(11)
    g = 3
    for _ in range(20):
        h = [HomologyClass(g, tuple(rng.randint(-4, 4) for _ in range(6)))
             for _ in range(3)]
        base = wedge3(*h)
        for perm in itertools.permutations(range(3)):
            sign = johnson._sort_sign(tuple(perm))
            permuted = wedge3(h[perm[0]], h[perm[1]], h[perm[2]])
            expected = base if sign == 1 else -base
            assert permuted.representative == expected.representative


def test_omega_wedge_basis_g2():
    vecs = omega_wedge_basis(2)
    assert len(vecs) == 4
    # omega ^ x1 = x2 ^ y2 ^ x1 = + x1 ^ x2 ^ y2 (even permutation)
    expected = _unit(2, (0, 2, 3)).representative
    assert vecs[0] == expected
    with pytest.raises(ValueError):
        omega_wedge_basis(1)


def test_omega_wedge_basis_independent():
    for g in (2, 3, 4):
        lat = johnson._EchelonLattice(omega_wedge_basis(g))
        assert lat.rank == 2 * g


def test_quotient_rank():
    for g in (2, 3, 4):
        n = 2 * g
        assert quotient_rank(g) == math.comb(n, 3) - n


def test_coset_equal_examples():
    g = 3
    omega_x1 = Wedge3Coset(g, omega_wedge_basis(g)[0])
    zero = Wedge3Coset.zero(g)
    assert coset_equal(omega_x1, zero)
    basis_elt = _unit(g, (0, 1, 2))  # x1 ^ y1 ^ x2
    assert not coset_equal(basis_elt, zero)
    assert coset_equal(basis_elt, basis_elt)
    with pytest.raises(GenusMismatch):
        coset_equal(zero, Wedge3Coset.zero(2))


def test_tau_empty_family_is_zero():
    out = tau_bounding_pair(3, [], _x(1, 3))
    assert all(c == 0 for c in out.representative)


def test_tau_single_pair_nonzero():
    g = 3
    out = tau_bounding_pair(g, [(_x(2, g), _y(2, g))], _x(1, g))
    assert not out.is_zero_coset()


def test_tau_rejects_non_symplectic():
    g = 3
    with pytest.raises(NotSymplecticError):
        tau_bounding_pair(g, [(_x(2, g), _x(3, g))], _x(1, g))
    with pytest.raises(NotSymplecticError):
        # y1 pairs with a = x1
        tau_bounding_pair(g, [(_y(1, g), _x(2, g))], _x(1, g))
    with pytest.raises(NotSymplecticError):
        # two pairs that are not mutually isotropic
        tau_bounding_pair(g, [(_x(2, g), _y(2, g)),
                              (_x(2, g) + _x(3, g), _y(3, g) + _y(2, g))],
                          _x(1, g))


def test_lantern_inequality():
    assert lantern_check(3)
    assert lantern_check(4)
    assert lantern_check(5)
    with pytest.raises(ValueError):
        lantern_check(2)


def test_lantern_sum_form():
    # the two-sided sum with pairs (x2,y2) and (x3,y3) is nonzero
    g = 3
    a = _x(1, g)
    total = (tau_bounding_pair(g, [(_x(2, g), _y(2, g))], a)
             - tau_bounding_pair(g, [(_x(3, g), _y(3, g))], a))
    assert not total.is_zero_coset()


def test_basis_independence():
    g = 3
    a = _x(1, g)
    x2, y2, x3, y3 = _x(2, g), _y(2, g), _x(3, g), _y(3, g)
    original = tau_bounding_pair(g, [(x2, y2), (x3, y3)], a)
    transformed = tau_bounding_pair(g, [(x2 + x3, y2), (x3, y3 - y2)], a)
    assert coset_equal(original, transformed)


def test_canonical_invariant_under_lattice_shifts():
    g = 3
    rng = random.Random(5)
    basis = omega_wedge_basis(g)
    dim = len(johnson.triple_basis(g))
    for _ in range(30):
        v = tuple(rng.randint(-5, 5) for _ in range(dim))
        coset = Wedge3Coset(g, v)
        shift = [0] * dim
        for b in basis:
            c = rng.randint(-3, 3)
            shift = [s + c * x for s, x in zip(shift, b)]
        shifted = Wedge3Coset(g, tuple(a + s for a, s in zip(v, shift)))
        assert coset.reduce().representative == shifted.reduce().representative
        assert coset_equal(coset, shifted)


def test_parse_homology_class():
    g = 3
    assert HomologyClass.parse("x1", g) == _x(1, g)
    assert HomologyClass.parse("x2+y2", g) == _x(2, g) + _y(2, g)
    assert HomologyClass.parse("2x1-3y2", g).coordinates == (2, 0, 0, -3, 0, 0)
    with pytest.raises(ValueError):
        HomologyClass.parse("x4", g)
    with pytest.raises(ValueError):
        HomologyClass.parse("q1", g)
    with pytest.raises(ValueError):
        HomologyClass.parse("", g)


def test_symplectic_pairing():
    g = 2
    assert johnson.symplectic_pairing(_x(1, g), _y(1, g)) == 1
    assert johnson.symplectic_pairing(_y(1, g), _x(1, g)) == -1
    assert johnson.symplectic_pairing(_x(1, g), _y(2, g)) == 0


@given(st.integers(min_value=2, max_value=4), st.data())
def test_omega_wedge_vectors_are_zero_cosets(g, data):
    vecs = omega_wedge_basis(g)
    i = data.draw(st.integers(min_value=0, max_value=len(vecs) - 1))
    assert Wedge3Coset(g, vecs[i]).is_zero_coset()


def test_coset_json():
    g = 3
    out = tau_bounding_pair(g, [(_x(2, g), _y(2, g))], _x(1, g))
    d = out.to_json_dict()
    assert d["genus"] == 3
    assert not d["is_zero"]
    assert all("^" in k for k in d["coset"])
