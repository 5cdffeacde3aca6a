"""Sparse multivariate polynomials with exact rational coefficients.

Text format: integer or ``p/q`` coefficients, ``+ - * ^`` and parentheses,
over a declared list of variable names.  Formatting is canonical (terms in
lexicographically descending exponent order) so that text round-trips.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .lattice import InvalidArgument

VARS3 = ("x0", "x1", "x2")
VARS4 = ("x0", "x1", "x2", "x3")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class SparsePolynomial:
    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], object] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        t = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise InvalidArgument(f"exponent {e} does not match {n} variables")
            if any(x < 0 for x in e):
                raise InvalidArgument(f"negative exponent in {e}")
            c = Fraction(c)
            if c:
                t[e] = t.get(e, 0) + c
                if not t[e]:
                    del t[e]
        self._terms = dict(sorted(t.items(), reverse=True))

    # construction helpers
    @classmethod
    def zero(cls, variables=VARS3):
        return cls(variables)

    @classmethod
    def constant(cls, c, variables=VARS3):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables=VARS3):
        variables = tuple(variables)
        if name not in variables:
            raise InvalidArgument(f"unknown variable {name!r}")
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, variables=VARS3):
        return cls(variables, {tuple(exps): coeff})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def support(self) -> list[tuple[int, ...]]:
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def _check(self, other: "SparsePolynomial"):
        if self.variables != other.variables:
            raise InvalidArgument(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, 0) + c
        return SparsePolynomial(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return SparsePolynomial(self.variables, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidArgument(f"exponent must be a non-negative integer, got {k!r}")
        out = SparsePolynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "SparsePolynomial":
        c = Fraction(c)
        return SparsePolynomial(self.variables, {e: c * v for e, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(other, self.variables)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, tuple(self._terms.items())))

    def divides_monomial(self, e: Sequence[int]) -> bool:
        """True when the monomial ``x^e`` divides every term."""
        return all(all(a >= b for a, b in zip(t, e)) for t in self._terms)

    def substitute(self, mapping: Mapping[str, "SparsePolynomial"], variables: Sequence[str] | None = None) -> "SparsePolynomial":
        """Replace variables by polynomials over ``variables`` (default: same ring)."""
        variables = tuple(variables or self.variables)
        images = []
        for v in self.variables:
            if v in mapping:
                p = mapping[v]
                if p.variables != variables:
                    raise InvalidArgument(f"image of {v} lives over {p.variables}, expected {variables}")
                images.append(p)
            else:
                images.append(SparsePolynomial.var(v, variables))
        out = SparsePolynomial.zero(variables)
        for e, c in self._terms.items():
            term = SparsePolynomial.constant(c, variables)
            for img, k in zip(images, e):
                if k:
                    term = term * img**k
            out = out + term
        return out

    def extend(self, variables: Sequence[str]) -> "SparsePolynomial":
        """Same polynomial viewed over a larger list of variables."""
        variables = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in variables:
                raise InvalidArgument(f"variable {v!r} missing from {variables}")
            idx.append(variables.index(v))
        t = {}
        for e, c in self._terms.items():
            f = [0] * len(variables)
            for i, k in zip(idx, e):
                f[i] = k
            t[tuple(f)] = c
        return SparsePolynomial(variables, t)

    def to_text(self) -> str:
        return format_poly(self)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePolynomial({self.variables}, {format_poly(self)!r})"


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: SparsePolynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(p.terms.items()):
        mono = "*".join(
            (v if n == 1 else f"{v}^{n}") for v, n in zip(p.variables, e) if n
        )
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    """Recursive descent over  expr := term (('+'|'-') term)* ;
    term := unary ('*' unary)* ; unary := '-' unary | power ;
    power := atom ('^' int)? ; atom := number ('/' number)? | var | '(' expr ')'."""

    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex) if m.lastindex else m.end()
            if m.group(1) is not None:
                self.toks.append(("num", m.group(1), start))
            elif m.group(2) is not None:
                self.toks.append(("name", m.group(2), start))
            elif m.group(3) is not None:
                self.toks.append(("op", m.group(3), start))
            pos = m.end()
        self.toks.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> SparsePolynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.fail("malformed exponent: expected a non-negative integer")
            self.take()
            p = p ** int(tok[1])
        return p

    def atom(self):
        tok = self.peek()
        kind, val, _ = tok
        if kind == "num":
            self.take()
            c = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.peek()
                if den[0] != "num":
                    self.fail("expected integer denominator")
                self.take()
                if int(den[1]) == 0:
                    self.fail("division by zero in coefficient", den)
                c = c / int(den[1])
            return SparsePolynomial.constant(c, self.variables)
        if kind == "name":
            if val not in self.variables:
                self.fail(f"unknown variable {val!r}")
            self.take()
            return SparsePolynomial.var(val, self.variables)
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            if not (self.peek()[0] == "op" and self.peek()[1] == ")"):
                self.fail("expected ')'")
            self.take()
            return p
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")


def parse(text: str, variables: Sequence[str] = VARS4) -> SparsePolynomial:
    return _Parser(text, variables).parse()


# ---------------------------------------------------------------------------
# cover constructions


def _require_degree(name: str, p: SparsePolynomial, d: int):
    if not p.is_homogeneous(d):
        raise InvalidArgument(f"{name} must be homogeneous of degree {d}, got {format_poly(p)!r}")


def branch_octic(f3: SparsePolynomial, f4: SparsePolynomial, f5: SparsePolynomial) -> SparsePolynomial:
    """Branch curve ``f3*f5 - f4^2`` of the projection from a triple point."""
    _require_degree("f3", f3, 3)
    _require_degree("f4", f4, 4)
    _require_degree("f5", f5, 5)
    return f3 * f5 - f4 * f4


def triple_cover_form(g2: SparsePolynomial, f4: SparsePolynomial, f5: SparsePolynomial) -> tuple[SparsePolynomial, SparsePolynomial]:
    """Depressed cubic ``psi^3 + h4*psi + h6`` for ``phi^3 + g2 phi^2 + f4 phi + x0 f5``."""
    _require_degree("g2", g2, 2)
    _require_degree("f4", f4, 4)
    _require_degree("f5", f5, 5)
    x0 = SparsePolynomial.var(g2.variables[0], g2.variables)
    third = Fraction(1, 3)
    h4 = f4 - (g2 * g2).scale(third)
    h6 = x0 * f5 + (g2**3).scale(Fraction(2, 27)) - (g2 * f4).scale(third)
    return h4, h6


def cover_discriminant(h4: SparsePolynomial, h6: SparsePolynomial) -> SparsePolynomial:
    """``4 h4^3 + 27 h6^2``."""
    _require_degree("h4", h4, 4)
    _require_degree("h6", h6, 6)
    return (h4**3).scale(4) + (h6 * h6).scale(27)


def weighted_support(w: Sequence[int], c: int, deg: int) -> list[tuple[int, int, int]]:
    if deg < 0:
        raise InvalidArgument(f"degree must be non-negative, got {deg}")
    out = []
    for j0 in range(deg, -1, -1):
        for j1 in range(deg - j0, -1, -1):
            j = (j0, j1, deg - j0 - j1)
            if sum(a * b for a, b in zip(w, j)) >= c:
                out.append(j)
    return out


def homogeneous_monomials(n: int, d: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(d,)]
    return [(a,) + rest for a in range(d, -1, -1) for rest in homogeneous_monomials(n - 1, d - a)]


def random_coefficient(rng: random.Random) -> Fraction:
    c = 0
    while c == 0:
        c = rng.randint(-50, 50)
    return Fraction(c, rng.randint(1, 9))


def random_form(d: int, rng: random.Random, variables=VARS3, support: Iterable[Sequence[int]] | None = None, density: float = 1.0) -> SparsePolynomial:
    """Seeded random form of degree ``d`` on ``support`` (all monomials by default)."""
    if support is None:
        support = homogeneous_monomials(len(variables), d)
    terms = {}
    for e in support:
        if density >= 1.0 or rng.random() < density:
            terms[tuple(e)] = random_coefficient(rng)
    return SparsePolynomial(variables, terms)
