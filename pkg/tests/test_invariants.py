from fractions import Fraction

import pytest

from quinticgit.invariants import (
    LctVerdict,
    WeightSystem,
    genus_binomial_sum,
    genus_closed_form,
    genus_count,
    hypersurface_pg,
    lct_verdict,
    lct_weight_bound,
)
from quinticgit.lattice import InvalidArgument


@pytest.mark.parametrize("d,g", [(4, 1), (5, 3), (6, 7)])
def test_genus_values(d, g):
    assert genus_count(d) == genus_closed_form(d) == g


def test_genus_agreement_up_to_20():
    for d in range(4, 21):
        assert genus_count(d) == genus_closed_form(d) == genus_binomial_sum(d)


def test_genus_rejects_small_degree():
    for f in (genus_count, genus_closed_form):
        with pytest.raises(InvalidArgument):
            f(3)


@pytest.mark.parametrize("d,pg", [(5, 4), (4, 1), (3, 0)])
def test_hypersurface_pg(d, pg):
    assert hypersurface_pg(d) == pg


def test_lct_bound_examples():
    assert lct_weight_bound(WeightSystem((2, 1, 1), 5)) == Fraction(4, 5)
    assert lct_weight_bound(WeightSystem((1, 1, 1), 4)) == Fraction(3, 4)
    assert lct_weight_bound(WeightSystem((1, 1, 1), 2)) == 1


def test_weight_system_validation():
    with pytest.raises(InvalidArgument):
        WeightSystem((6, 1, 1), 5)
    with pytest.raises(InvalidArgument):
        WeightSystem((0, 1, 1), 5)


def test_lct_verdicts():
    assert lct_verdict(Fraction(4, 5) + Fraction(1, 180)) is LctVerdict.STABLE
    assert lct_verdict(Fraction(4, 5)) is LctVerdict.SEMISTABLE
    assert lct_verdict(Fraction(3, 4)) is LctVerdict.NO_CONCLUSION
    for bad in (0, Fraction(-1, 2), Fraction(3, 2)):
        with pytest.raises(InvalidArgument):
            lct_verdict(bad)
