import pytest

from quinticgit.lattice import ps
from quinticgit.luna import WeightMultiset, normal_weights
from quinticgit.sl2rep import (
    CONIC_TORUS,
    TRIVIAL,
    SL2Rep,
    character,
    decompose_weights,
    slice_report,
    sym_power,
    tensor,
)
from quinticgit.lattice import InvalidArgument


def S(n, k=1):
    return SL2Rep.sym(n, k)


def test_tensor_examples():
    assert tensor(S(1), S(1)) == SL2Rep({2: 1, 0: 1})
    assert tensor(S(5), S(5)) == SL2Rep({10: 1, 8: 1, 6: 1, 4: 1, 2: 1, 0: 1})
    R = SL2Rep({3: 2, 1: 1})
    assert tensor(R, TRIVIAL) == R


def test_sym_power_examples():
    W = SL2Rep({2: 1, 0: 1})
    assert sym_power(5, W) == SL2Rep({10: 1, 8: 1, 6: 2, 4: 2, 2: 3, 0: 3})
    assert sym_power(5, W).dim == 56
    assert sym_power(2, S(1)) == S(2)
    assert sym_power(0, W) == TRIVIAL
    with pytest.raises(InvalidArgument):
        sym_power(-1, W)


def test_decompose_examples():
    assert decompose_weights(WeightMultiset([0])) == TRIVIAL
    assert decompose_weights(WeightMultiset([2, 0, -2, 0])) == SL2Rep({2: 1, 0: 1})
    with pytest.raises(InvalidArgument, match="symmetric"):
        decompose_weights(WeightMultiset([1]))
    with pytest.raises(InvalidArgument, match="missing weight 0"):
        decompose_weights(WeightMultiset([2, -2]))


def test_text_and_json():
    R = SL2Rep({10: 1, 8: 1, 6: 2})
    assert R.to_text() == "Sym^10 + Sym^8 + 2*Sym^6"
    assert R.to_json() == [{"n": 10, "mult": 1}, {"n": 8, "mult": 1}, {"n": 6, "mult": 2}]
    assert SL2Rep().to_text() == "0"


def test_slice_chain():
    rep = slice_report()
    assert rep.sym5 == SL2Rep({10: 1, 8: 1, 6: 2, 4: 2, 2: 3, 0: 3})
    assert rep.adjoint == SL2Rep({4: 1, 2: 3, 0: 1})
    assert rep.adjoint.dim == 15
    assert rep.normal.dim == 43
    assert rep.normal == tensor(S(5), S(5)) + S(6)
    assert rep.ok


def test_slice_matches_torus_weights():
    # stabilizer torus restricted to the slice: weights of sl2 are {2, 0, -2}
    nw = normal_weights(ps(*CONIC_TORUS), 5, stabilizer=WeightMultiset([2, 0, -2]))
    assert nw == character(slice_report().normal)
