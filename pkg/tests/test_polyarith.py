import random
from fractions import Fraction

import pytest

from quinticgit.lattice import InvalidArgument
from quinticgit.polyarith import (
    VARS3,
    ParseError,
    SparsePolynomial,
    branch_octic,
    cover_discriminant,
    format_poly,
    parse,
    random_form,
    triple_cover_form,
    weighted_support,
)


def P(text):
    return parse(text, VARS3)


def test_parse_examples():
    f = parse("x0^5 + x1^5 + x2^5 + x3^5")
    assert len(f) == 4
    g = parse("x1*(x0*x3 - x2^2 - x1^2)^2")
    assert len(g) == 6
    assert g.is_homogeneous(5)
    h = parse("2/3*x0^2*x1^3")
    assert h.terms == {(2, 3, 0, 0): Fraction(2, 3)}


@pytest.mark.parametrize(
    "text,pos",
    [("x0 + y", 5), ("x0^a", 3), ("1/0*x0", 2), ("x0 +", 4), ("(x0", 3), ("", 0), ("x0 ) ", 3)],
)
def test_parse_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_format_is_canonical():
    p = parse("3 - x1 + 1/2*x0^2 - x0*x3")
    assert format_poly(p) == "1/2*x0^2 - x0*x3 - x1 + 3"
    assert parse(format_poly(p)) == p
    assert format_poly(parse("-x0 + x0")) == "0"
    assert format_poly(parse("-x0")) == "-x0"


def test_arithmetic():
    a, b = P("x0 + x1"), P("x0 - x1")
    assert a * b == P("x0^2 - x1^2")
    assert a**3 == P("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3")
    assert a - a == SparsePolynomial.zero()
    assert (a + 1).degree == 1
    with pytest.raises(InvalidArgument):
        a + parse("x0")


def test_branch_octic_examples():
    assert branch_octic(P("x0^3"), P("0"), P("x1^5")) == P("x0^3*x1^5")
    assert branch_octic(P("x2^3"), P("x0^2*x1^2"), P("x1^5")) == P("x2^3*x1^5 - x0^4*x1^4")
    rng = random.Random(3)
    b = branch_octic(random_form(3, rng), random_form(4, rng), random_form(5, rng))
    assert b.is_homogeneous(8)
    with pytest.raises(InvalidArgument):
        branch_octic(P("x0^2"), P("x1^4"), P("x2^5"))


def test_triple_cover_examples():
    f4, f5 = P("x1^4 + x0*x2^3"), P("x2^5 - 2*x0*x1^4")
    h4, h6 = triple_cover_form(P("0"), f4, f5)
    assert h4 == f4 and h6 == P("x0") * f5
    h4, h6 = triple_cover_form(P("3*x0^2"), f4, f5)
    assert h4 == f4 - P("3*x0^4")
    assert h6 == P("x0") * f5 + P("2*x0^6") - P("x0^2") * f4
    with pytest.raises(InvalidArgument):
        triple_cover_form(P("x0"), f4, f5)


def test_discriminant_examples():
    h6 = P("x0^6 - x1^3*x2^3")
    assert cover_discriminant(P("0"), h6) == h6 * h6 * 27
    # perfect-cube case: h4 = -3 q^2, h6 = 2 q^3 gives zero
    q = P("x0^2 + x1*x2")
    assert cover_discriminant(q * q * (-3), q**3 * 2).is_zero()
    with pytest.raises(InvalidArgument):
        cover_discriminant(h6, h6)


def test_weighted_support_examples():
    s = weighted_support((5, 2, 1), 10, 4)
    assert (4, 0, 0) in s
    assert (0, 4, 0) not in s
    assert all(j[0] >= 1 for j in s)
    with pytest.raises(InvalidArgument):
        weighted_support((1, 1, 1), 0, -1)


def test_substitute_and_extend():
    p = P("x0^2 + x1")
    assert p.substitute({"x0": P("x1 + x2")}) == P("x1^2 + 2*x1*x2 + x2^2 + x1")
    assert p.extend(("x0", "x1", "x2", "t")).variables == ("x0", "x1", "x2", "t")
