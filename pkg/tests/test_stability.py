from fractions import Fraction
from itertools import permutations

import pytest

from quinticgit.critical import enumerate_critical
from quinticgit.lattice import (
    InvalidArgument,
    MonomialConfiguration,
    centroid,
    enumerate_monomials,
    ps,
    weight_pairing,
    zero_set,
)
from quinticgit.polyarith import parse
from quinticgit.stability import (
    TorusVerdict,
    Verdict,
    analyze,
    hull_membership,
    kempf_flag,
    mu,
    nearest_point,
    nonstable_certificate,
    torus_verdict,
    worst_1ps,
)

FERMAT = MonomialConfiguration(5, [(5, 0, 0, 0), (0, 5, 0, 0), (0, 0, 5, 0), (0, 0, 0, 5)])
Q2H = MonomialConfiguration(5, parse("x1*(x0*x3 - x2^2 - x1^2)^2").support())
QUADRUPLE = MonomialConfiguration(5, [m for m in enumerate_monomials(5) if m[3] <= 1])
CONE = MonomialConfiguration(5, [m for m in enumerate_monomials(5) if m[3] == 0])
QUADRUPLE_LINE = MonomialConfiguration(5, [(0, a, 4 - a, 1) for a in range(5)])


def test_mu_examples():
    assert mu(ps(1, 0, 0, -1), FERMAT) == -5
    assert mu(ps(1, 0, 0, -1), Q2H) == 0
    assert mu(ps(2, 1, 1, -4), QUADRUPLE) == 0
    with pytest.raises(InvalidArgument):
        mu(ps(1, 0, 0, -1), MonomialConfiguration(5, []))


def test_hull_examples():
    c = centroid(5)
    assert hull_membership(c, FERMAT).verdict is Verdict.INSIDE
    out = hull_membership(c, zero_set(ps(2, 1, 1, -4), 5))
    assert out.verdict is Verdict.OUTSIDE
    assert mu(out.lam, zero_set(ps(2, 1, 1, -4), 5)) > 0
    b = hull_membership(c, Q2H)
    assert b.verdict is Verdict.BOUNDARY
    assert len(Q2H) == 6


def test_hull_witnesses_reverify():
    c = centroid(5)
    for cfg in (FERMAT, Q2H, QUADRUPLE, CONE, QUADRUPLE_LINE):
        v = hull_membership(c, cfg)
        assert v.check(cfg)
        if v.barycentric is not None:
            assert sum(w for _, w in v.barycentric) == 1
            assert all(w >= 0 for _, w in v.barycentric)
            for k in range(4):
                assert sum(w * m[k] for m, w in v.barycentric) == c[k]
        if v.verdict is Verdict.OUTSIDE:
            assert mu(v.lam, cfg) > 0


def test_hull_point_off_hyperplane():
    with pytest.raises(InvalidArgument):
        hull_membership((1, 1, 1, 1), FERMAT)


def test_torus_verdicts():
    assert torus_verdict(FERMAT) is TorusVerdict.STABLE
    assert torus_verdict(Q2H) is TorusVerdict.STRICTLY_SEMISTABLE
    assert torus_verdict(CONE) is TorusVerdict.UNSTABLE


def test_q2h_semistable_under_every_permutation():
    for perm in permutations(range(4)):
        assert torus_verdict(Q2H.permuted(perm)) is TorusVerdict.STRICTLY_SEMISTABLE


def test_certificates():
    cert = nonstable_certificate(QUADRUPLE)
    assert cert.label == "lambda7"
    assert cert.perm == (0, 1, 2, 3)
    assert nonstable_certificate(FERMAT) is None


def test_triple_line_certificate_needs_permutation():
    # triple along V(x2, x3): every monomial has i2 + i3 >= 3
    cfg = MonomialConfiguration(5, [m for m in enumerate_monomials(5) if m[2] + m[3] >= 3])
    cert = nonstable_certificate(cfg)
    assert cert is not None
    assert cert.label == "lambda8"
    assert cert.perm != (0, 1, 2, 3)
    moved = cfg.permuted(cert.perm)
    assert all(weight_pairing(cert.lam, m) >= 0 for m in moved)
    # and in fixed coordinates the line V(x0, x1) is destabilized directly
    direct = MonomialConfiguration(5, [m for m in enumerate_monomials(5) if m[0] + m[1] >= 3])
    assert direct.issubset(enumerate_critical(5)[7].nonneg)


def test_certificate_soundness_on_all_zero_sets():
    recs = enumerate_critical(5)
    for rec in recs:
        cert = nonstable_certificate(rec.zero)
        assert cert is not None
        assert mu(cert.lam, rec.zero.permuted(cert.perm)) >= 0
        assert torus_verdict(rec.zero) is not TorusVerdict.STABLE


def test_original_lambda_pulls_back():
    cfg = QUADRUPLE.permuted((3, 2, 1, 0))
    cert = nonstable_certificate(cfg)
    assert all(weight_pairing(cert.original_lam, m) >= 0 for m in cfg)


def test_worst_cone():
    w = worst_1ps(CONE)
    assert w.lam.weights == (1, 1, 1, -3)
    assert w.squared_ratio == Fraction(25, 12)
    assert w.nearest_point == (Fraction(5, 12),) * 3 + (Fraction(-5, 4),)


def test_worst_quadruple_line():
    w = worst_1ps(QUADRUPLE_LINE)
    assert w.lam.weights == (-5, 3, 3, -1)
    assert w.lam.normalize().weights == (3, 3, -1, -5)
    assert mu(w.lam, QUADRUPLE_LINE) ** 2 == w.squared_ratio * w.lam.norm_squared()


def test_worst_none_for_semistable():
    assert worst_1ps(FERMAT) is None
    assert worst_1ps(Q2H) is None


def test_worst_beats_every_critical_direction():
    for cfg in (CONE, QUADRUPLE_LINE, QUADRUPLE):
        w = worst_1ps(cfg)
        for rec in enumerate_critical(5):
            for perm in permutations(range(4)):
                lam = [0] * 4
                for k in range(4):
                    lam[k] = rec.lam.weights[perm[k]]
                m = mu(lam, cfg)
                if m > 0:
                    assert Fraction(m * m, sum(x * x for x in lam)) <= w.squared_ratio


def test_nearest_point_simple():
    pts = [(1, 0, 0, -1), (0, 1, 0, -1)]
    assert nearest_point(pts) == (Fraction(1, 2), Fraction(1, 2), 0, -1)


def test_kempf_flags():
    full = kempf_flag(ps(2, 1, 0, -3))
    assert (full.point, full.line, full.plane, full.partial) == (3, (0, 1), 0, False)
    assert full.describe() == "p3 in V(x0,x1) in V(x0)"
    f1 = kempf_flag(ps(1, 0, 0, -1))
    assert (f1.point, f1.line, f1.plane, f1.partial) == (3, None, 0, True)
    f9 = kempf_flag(ps(7, 1, -4, -4))
    assert (f9.point, f9.line, f9.plane, f9.partial) == (None, (0, 1), 0, True)
    with pytest.raises(InvalidArgument):
        kempf_flag((0, 0, 0, 0))


def test_kempf_flag_unsorted_weights():
    # ranks x1 = x2 > x3 > x0
    f = kempf_flag((-5, 3, 3, -1))
    assert f.point == 0
    assert f.line == (1, 2)
    assert f.plane is None
    assert f.partial


def test_analyze_consistency():
    rep = analyze(FERMAT)
    assert rep.certificate is None and rep.worst is None and rep.flag is None
    rep = analyze(QUADRUPLE)
    assert rep.torus_verdict is TorusVerdict.UNSTABLE
    assert rep.certificate.label == "lambda7"
    assert rep.flag.point == 3


REDUCIBLE_BOUNDARY = [
    ((1, 0, 0, -1), "x1*(x3^2*x0^2 + x0*x3*(x1^2 + 3*x1*x2 - 2*x2^2) + x1^4 - x1^3*x2 + 5*x1^2*x2^2 + 7*x1*x2^3 + x2^4)"),
    ((2, 1, -1, -2), "x0*(x3^2*x1^2 + x3*x0*x2^2 + x1*x2^3)"),
    ((2, 1, 0, -3), "x3*(x0^3*x3 + x2*x1^3 + x0*x1*x2^2)"),
]


@pytest.mark.parametrize("lam,text", REDUCIBLE_BOUNDARY)
def test_reducible_boundary_surfaces_are_fixed(lam, text):
    p = parse(text)
    assert all(weight_pairing(lam, e) == 0 for e in p.support())
    assert torus_verdict(MonomialConfiguration(5, p.support())) is TorusVerdict.STRICTLY_SEMISTABLE
