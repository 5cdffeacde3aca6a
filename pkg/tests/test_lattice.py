from fractions import Fraction
from math import comb

import pytest

from quinticgit.lattice import (
    ExponentVector,
    InvalidArgument,
    MonomialConfiguration,
    OneParamSubgroup,
    centroid,
    dominates_by_rays,
    enumerate_monomials,
    ev,
    monomial_dominates,
    nonneg_set,
    positive_set,
    ps,
    weight_pairing,
    zero_set,
)


@pytest.mark.parametrize("d,n", [(1, 4), (2, 10), (5, 56)])
def test_enumerate_counts(d, n):
    assert len(enumerate_monomials(d)) == n


def test_enumerate_counts_up_to_20():
    for d in range(1, 21):
        assert len(enumerate_monomials(d)) == comb(d + 3, 3)


def test_enumerate_order_is_lex_descending():
    mons = [m.exponents for m in enumerate_monomials(4)]
    assert mons == sorted(mons, reverse=True)
    assert mons[0] == (4, 0, 0, 0)
    assert mons[-1] == (0, 0, 0, 4)


@pytest.mark.parametrize("d", [0, -3])
def test_enumerate_rejects_bad_degree(d):
    with pytest.raises(InvalidArgument):
        enumerate_monomials(d)


def test_exponent_vector_validation():
    with pytest.raises(InvalidArgument):
        ExponentVector((1, 2, 3))
    with pytest.raises(InvalidArgument):
        ExponentVector((1, -1, 3, 2))
    assert ev(2, 1, 0, 2).degree == 5
    assert ev(2, 1, 0, 2).to_text() == "x0^2*x1*x3^2"


def test_one_param_subgroup_validation_and_normal_form():
    with pytest.raises(InvalidArgument):
        OneParamSubgroup((1, 0, 0, 0))
    lam = ps(-2, 4, 0, -2).normalize()
    assert lam.weights == (2, 0, -1, -1)
    assert lam.normalized
    assert not ps(0, 1, 0, -1).normalized
    with pytest.raises(InvalidArgument):
        ps(0, 0, 0, 0).normalize()


@pytest.mark.parametrize(
    "lam,m,value",
    [
        ((1, 0, 0, -1), (5, 0, 0, 0), 5),
        ((1, 0, 0, -1), (2, 1, 0, 2), 0),
        ((2, 1, 1, -4), (0, 4, 0, 1), 0),
    ],
)
def test_weight_pairing(lam, m, value):
    assert weight_pairing(ps(*lam), ev(*m)) == value


def test_centroid():
    assert centroid(5) == (Fraction(5, 4),) * 4
    assert centroid(4) == (1, 1, 1, 1)
    assert weight_pairing(ps(7, 1, -4, -4), centroid(5)) == 0


def test_dominance_examples():
    top = ev(5, 0, 0, 0)
    assert all(monomial_dominates(top, m) for m in enumerate_monomials(5))
    assert monomial_dominates(ev(1, 0, 0, 4), ev(0, 1, 0, 4))
    assert not monomial_dominates(ev(0, 5, 0, 0), ev(1, 0, 4, 0))
    assert not monomial_dominates(ev(1, 0, 4, 0), ev(0, 5, 0, 0))
    with pytest.raises(InvalidArgument):
        monomial_dominates(ev(1, 0, 0, 4), ev(1, 0, 0, 3))


def test_dominance_matches_rays_exhaustively_d5():
    mons = enumerate_monomials(5)
    for a in mons:
        for b in mons:
            assert monomial_dominates(a, b) == dominates_by_rays(a, b)


def test_nonneg_set_lambda1():
    s = nonneg_set(ps(1, 0, 0, -1), 5)
    assert len(s) == 34
    assert ev(2, 1, 1, 1) in nonneg_set(ps(3, -1, -1, -1), 5)


def test_nonneg_set_lambda7_contains_quadruple_point_template():
    s = nonneg_set(ps(2, 1, 1, -4), 5)
    for m in enumerate_monomials(5):
        if m[3] <= 1:
            assert m in s


def test_zero_sets():
    assert zero_set(ps(2, 1, -1, -2), 5) == MonomialConfiguration(
        5, [(1, 2, 0, 2), (2, 0, 2, 1), (0, 3, 1, 1), (1, 1, 3, 0)]
    )
    z7 = zero_set(ps(2, 1, 1, -4), 5)
    assert z7 == MonomialConfiguration(5, [(0, a, 4 - a, 1) for a in range(5)])
    z1 = zero_set(ps(1, 0, 0, -1), 5)
    assert len(z1) == 12
    assert all(m[0] == m[3] for m in z1)


def test_level_sets_partition():
    lam = ps(5, 1, -2, -4)
    assert zero_set(lam, 5).union(positive_set(lam, 5)) == nonneg_set(lam, 5)
    assert zero_set(-lam, 5) == zero_set(lam, 5)


def test_configuration_rejects_mixed_degrees():
    with pytest.raises(InvalidArgument):
        MonomialConfiguration(5, [(5, 0, 0, 0), (4, 0, 0, 0)])
    a = MonomialConfiguration(5, [(5, 0, 0, 0)])
    b = MonomialConfiguration(4, [(4, 0, 0, 0)])
    with pytest.raises(InvalidArgument):
        a.issubset(b)


def test_configuration_permutation():
    cfg = MonomialConfiguration(5, [(2, 1, 0, 2)])
    # x0 -> x3, x3 -> x0
    assert cfg.permuted((3, 1, 2, 0)).as_tuples() == [(2, 1, 0, 2)]
    assert cfg.permuted((1, 0, 2, 3)).as_tuples() == [(1, 2, 0, 2)]
