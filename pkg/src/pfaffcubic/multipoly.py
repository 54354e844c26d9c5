"""Sparse homogeneous polynomials, linear forms and projective points.

Polynomials default to the four variables x0..x3 of P^3; ternary forms
(plane sections) reuse the same class with three variables.  Monomials are
ordered degree-lexicographically with x0 > x1 > x2 > x3, which fixes the
coefficient vectors used by the linear systems and by file I/O.
"""
import itertools
import re
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import (
    DegenerateLine,
    FieldMismatch,
    NotHomogeneous,
    SingularMatrix,
    ZeroForm,
)
from .exactfield import QQ, AlgebraicNumber, to_fraction


@lru_cache(maxsize=None)
def monomials(degree, nvars=4):
    """Exponent tuples of the given degree in deglex order (x0 > x1 > ...)."""
    exps = [e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree]
    return tuple(sorted(exps, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(degree, nvars=4):
    return {e: i for i, e in enumerate(monomials(degree, nvars))}


def _same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first!r} and {f!r} differ")
    return first


class MultiPoly:
    """Homogeneous polynomial stored as {exponent tuple: nonzero coefficient}."""

    __slots__ = ("field", "terms", "degree", "nvars")

    def __init__(self, field, terms, degree=None, nvars=4):
        clean = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = field.element(c)
            if c:
                clean[exp] = c
        degrees = {sum(e) for e in clean}
        if len(degrees) > 1:
            raise NotHomogeneous(f"terms of degrees {sorted(degrees)} mixed")
        if degrees:
            d = degrees.pop()
            if degree is not None and d != degree:
                raise NotHomogeneous(f"expected degree {degree}, found {d}")
            degree = d
        elif degree is None:
            degree = 0
        self.field = field
        self.terms = clean
        self.degree = degree
        self.nvars = nvars

    @classmethod
    def _raw(cls, field, terms, degree, nvars):
        obj = cls.__new__(cls)
        obj.field = field
        obj.terms = terms
        obj.degree = degree
        obj.nvars = nvars
        return obj

    @classmethod
    def zero(cls, field, degree, nvars=4):
        return cls._raw(field, {}, degree, nvars)

    @classmethod
    def constant(cls, field, value, nvars=4):
        return cls(field, {(0,) * nvars: value}, 0, nvars)

    @classmethod
    def variable(cls, field, i, nvars=4):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(field, {tuple(exp): field.one}, 1, nvars)

    @classmethod
    def from_vector(cls, field, vector, degree, nvars=4):
        return cls(field, dict(zip(monomials(degree, nvars), vector)), degree, nvars)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def coefficient_vector(self):
        zero = self.field.zero
        return [self.terms.get(e, zero) for e in monomials(self.degree, self.nvars)]

    def is_zero(self):
        return not self.terms

    def _combine(self, other, sign):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        _same_field(self.field, other.field)
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        if self.is_zero():
            return other if sign > 0 else -other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise NotHomogeneous(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = (c if sign > 0 else -c) if v is None else (v + c if sign > 0 else v - c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.field, out, self.degree, self.nvars)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return MultiPoly._raw(self.field, {e: -c for e, c in self.terms.items()}, self.degree, self.nvars)

    def __mul__(self, other):
        if isinstance(other, LinearForm):
            other = other.to_poly()
        if isinstance(other, MultiPoly):
            _same_field(self.field, other.field)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = out.get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
            out = {e: c for e, c in out.items() if c}
            return MultiPoly._raw(self.field, out, self.degree + other.degree, self.nvars)
        c = self.field.element(other)
        if not c:
            return MultiPoly.zero(self.field, self.degree, self.nvars)
        return MultiPoly._raw(self.field, {e: v * c for e, v in self.terms.items()}, self.degree, self.nvars)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        result = MultiPoly.constant(self.field, 1, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, values):
        if isinstance(values, ProjPoint):
            _same_field(self.field, values.field)
            values = values.coords
        values = [self.field.element(v) for v in values]
        powers = []
        for v in values:
            row = [self.field.one]
            for _ in range(self.degree):
                row.append(row[-1] * v)
            powers.append(row)
        acc = self.field.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            acc = acc + term
        return acc

    def derivative(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly._raw(self.field, out, max(self.degree - 1, 0), self.nvars)

    def gradient(self):
        return [self.derivative(i) for i in range(self.nvars)]

    def substitute(self, forms):
        """Replace variable i by the linear form forms[i] (all in the same variables)."""
        _same_field(self.field, *[f.field for f in forms])
        m = forms[0].nvars
        polys = [f.to_poly() for f in forms]
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = MultiPoly.constant(self.field, 1, m) if k == 0 else power(i, k - 1) * polys[i]
            return cache[key]

        acc = MultiPoly.zero(self.field, self.degree, m)
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.field, c, m)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def map_coeffs(self, embedding):
        return MultiPoly._raw(embedding.target, {e: embedding(c) for e, c in self.terms.items()}, self.degree, self.nvars)

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    def content_normalized(self):
        """Scale so the leading (deglex) coefficient is 1."""
        if self.is_zero():
            return self
        lead = self.terms[max(self.terms)]
        return self * lead.inverse()

    def variables_used(self):
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def to_text(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


class LinearForm:
    """sum(coeffs[i] * x_i)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(field.element(c) for c in coeffs)

    @property
    def nvars(self):
        return len(self.coeffs)

    @classmethod
    def zero(cls, field, nvars=4):
        return cls(field, [0] * nvars)

    @classmethod
    def variable(cls, field, i, nvars=4):
        return cls(field, [1 if j == i else 0 for j in range(nvars)])

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        _same_field(self.field, other.field)
        return LinearForm(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        _same_field(self.field, other.field)
        return LinearForm(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LinearForm(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (LinearForm, MultiPoly)):
            return self.to_poly() * other
        c = self.field.element(other)
        return LinearForm(self.field, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, values):
        if isinstance(values, ProjPoint):
            values = values.coords
        acc = self.field.zero
        for a, v in zip(self.coeffs, values):
            if a:
                acc = acc + a * v
        return acc

    def to_poly(self):
        n = self.nvars
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return MultiPoly._raw(self.field, terms, 1, n)

    def substitute(self, forms):
        acc = LinearForm.zero(self.field, forms[0].nvars)
        for c, f in zip(self.coeffs, forms):
            if c:
                acc = acc + f * c
        return acc

    def map_coeffs(self, embedding):
        return LinearForm(embedding.target, [embedding(c) for c in self.coeffs])

    def normalized(self):
        """Same plane, scaled like ProjPoint.normalized (first nonzero coefficient positive)."""
        if self.is_zero():
            return self
        return LinearForm(self.field, ProjPoint(self.coeffs, self.field).normalized().coords)

    def proportional_to(self, other):
        a, b = self.coeffs, other.coeffs
        return all(not (a[i] * b[j] - a[j] * b[i]) for i in range(len(a)) for j in range(i + 1, len(a)))

    def __repr__(self):
        return f"LinearForm({format_poly(self.to_poly()) or '0'})"

    def __str__(self):
        return format_poly(self.to_poly()) or "0"


class ProjPoint:
    """A point of projective space with a chosen representative."""

    __slots__ = ("field", "coords")

    def __init__(self, coords, field=None):
        if field is None:
            field = next((c.field for c in coords if isinstance(c, AlgebraicNumber)), QQ)
        coords = tuple(field.element(c) for c in coords)
        if not any(coords):
            raise ValueError("the zero vector does not define a projective point")
        self.field = field
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.field != other.field or len(self.coords) != len(other.coords):
            return False
        a, b = self.coords, other.coords
        n = len(a)
        return all(not (a[i] * b[j] - a[j] * b[i]) for i in range(n) for j in range(i + 1, n))

    def __hash__(self):
        return hash(self.normalized().coords)

    def scaled(self, c):
        return ProjPoint([x * c for x in self.coords], self.field)

    def normalized(self):
        """Deterministic representative: integral, primitive, first nonzero positive."""
        first = next(c for c in self.coords if c)
        if self.field.degree > 1 and not first.is_rational():
            pt = [c / first for c in self.coords]
        else:
            pt = list(self.coords)
        dens = [q.denominator for c in pt for q in c.coeffs]
        lcm = 1
        for d in dens:
            lcm = lcm * d // _gcd(lcm, d)
        nums = [int(q * lcm) for c in pt for q in c.coeffs]
        g = 0
        for n in nums:
            g = _gcd(g, abs(n))
        scale = Fraction(lcm, g or 1)
        lead = next(c for c in pt if c)
        if lead.coeffs[0] < 0 or (lead.coeffs[0] == 0 and next(q for q in lead.coeffs if q) < 0):
            scale = -scale
        return ProjPoint([c * scale for c in pt], self.field)

    def reduced(self):
        """Integral, primitive representative found without field inversions.

        Equal to normalized() over Q; over an extension it only clears rational
        denominators and content, which keeps coordinate sizes in check.
        """
        if self.field.degree == 1:
            return self.normalized()
        lcm = 1
        for c in self.coords:
            for q in c.coeffs:
                lcm = lcm * q.denominator // _gcd(lcm, q.denominator)
        g = 0
        for c in self.coords:
            for q in c.coeffs:
                g = _gcd(g, abs(int(q * lcm)))
        return ProjPoint([c * Fraction(lcm, g or 1) for c in self.coords], self.field)

    def map_coeffs(self, embedding):
        return ProjPoint([embedding(c) for c in self.coords], embedding.target)

    def is_rational(self):
        return all(c.is_rational() for c in self.coords)

    def to_strings(self):
        return [str(c) for c in self.coords]

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class TernaryCubic:
    """A plane section of a surface, with the plane basis used to parametrize it."""

    def __init__(self, poly, basis):
        if poly.nvars != 3:
            raise ValueError("ternary form expected")
        self.poly = poly
        self.basis = tuple(basis)
        self.field = poly.field

    def point_at(self, uvw):
        coords = [self.field.zero] * len(self.basis[0].coords)
        for c, b in zip(uvw, self.basis):
            c = self.field.element(c)
            coords = [x + c * y for x, y in zip(coords, b.coords)]
        return ProjPoint(coords, self.field)

    def coordinates_of(self, point):
        """(u, v, w) with point = u*b1 + v*b2 + w*b3 (up to scalar)."""
        rows = [[b.coords[i] for b in self.basis] for i in range(len(point.coords))]
        sol = linalg.solve(rows, list(point.coords), self.field)
        if sol is None:
            raise ValueError(f"{point!r} does not lie on the plane")
        return sol

    def __repr__(self):
        return f"TernaryCubic({format_poly(self.poly, names=('u', 'v', 'w'))})"


# -- operations -------------------------------------------------------------

def evaluate(F, a):
    return F.evaluate(a)


def polar1(F, a):
    """First polar sum_i a_i dF/dx_i, a quadric."""
    _same_field(F.field, a.field)
    acc = MultiPoly.zero(F.field, F.degree - 1, F.nvars)
    for i, c in enumerate(a.coords):
        if c:
            acc = acc + F.derivative(i) * c
    return acc


def polar2(F, a):
    """Second polar sum_i x_i dF/dx_i(a), a linear form (tangent plane at smooth a)."""
    _same_field(F.field, a.field)
    return LinearForm(F.field, [F.derivative(i).evaluate(a) for i in range(F.nvars)])


def line_expansion(F, a, y):
    """Coefficients (F(a), P2_a(y), P1_a(y), F(y)) of F(a + t*y) in t."""
    _same_field(F.field, a.field, y.field)
    return (F.evaluate(a), polar2(F, a).evaluate(y), polar1(F, a).evaluate(y), F.evaluate(y))


def third_intersection(F, a, y):
    """The residual point F(y)*a - P1_a(y)*y of the line through a and y."""
    _same_field(F.field, a.field, y.field)
    p1 = polar1(F, a).evaluate(y)
    if not p1:
        raise DegenerateLine("the line meets the surface only at the base point or lies on it")
    fy = F.evaluate(y)
    coords = [fy * ai - p1 * yi for ai, yi in zip(a.coords, y.coords)]
    if not any(coords):
        raise DegenerateLine("residual intersection is undefined")
    return ProjPoint(coords, F.field)


def linear_substitution(F, A):
    """The polynomial x -> F(A x) for an invertible square matrix A."""
    field = F.field
    A = [[field.element(c) for c in row] for row in A]
    if not linalg.det(A, field):
        raise SingularMatrix("substitution matrix is singular")
    return F.substitute([LinearForm(field, row) for row in A])


def apply_matrix(A, point):
    field = point.field
    return ProjPoint(linalg.matvec(A, list(point.coords), field), field)


def general_position(pts):
    """True when all five 4x4 determinants of the 5x4 coordinate matrix are nonzero."""
    pts = list(pts)
    field = _same_field(*[p.field for p in pts])
    for skip in range(len(pts)):
        rows = [list(p.coords) for i, p in enumerate(pts) if i != skip]
        if not linalg.det(rows, field):
            return False
    return True


def plane_basis(plane):
    """Three points spanning V(plane), kernel basis in reduced row-echelon convention."""
    if plane.is_zero():
        raise ZeroForm("the zero form does not define a plane")
    vecs = linalg.kernel([list(plane.coeffs)], plane.field)
    return [ProjPoint(v, plane.field) for v in vecs]


def restrict_to_plane(F, plane, basis=None):
    _same_field(F.field, plane.field)
    basis = plane_basis(plane) if basis is None else basis
    field = F.field
    forms = [LinearForm(field, [b.coords[i] for b in basis]) for i in range(F.nvars)]
    return TernaryCubic(F.substitute(forms), basis)


def plane_through(*points):
    """Linear form vanishing on the given points (first kernel vector)."""
    field = _same_field(*[p.field for p in points])
    vecs = linalg.kernel([list(p.coords) for p in points], field)
    if not vecs:
        raise ValueError("points span the whole space")
    return LinearForm(field, vecs[0])


def hessian_determinant(F):
    n = F.nvars
    H = [[F.derivative(i).derivative(j) for j in range(n)] for i in range(n)]
    return poly_det(H, F.field, n)


def hessian_vanishes(F):
    """Whether the Hessian determinant is identically zero, without expanding it.

    The determinant has degree n*(d-2); a form of that degree vanishing on the grid
    {0..n*(d-2)}^n is zero, so numeric determinants on the grid decide it exactly.
    """
    n, field = F.nvars, F.field
    H = [[F.derivative(i).derivative(j) for j in range(n)] for i in range(n)]
    top = n * max(F.degree - 2, 0)
    for pt in itertools.product(range(top + 1), repeat=n):
        values = [[e.evaluate(pt) for e in row] for row in H]
        if linalg.det(values, field):
            return False
    return True


def poly_det(M, field, nvars):
    """Determinant of a small matrix with polynomial entries (cofactor expansion)."""
    size = len(M)
    if size == 1:
        return M[0][0]
    acc = None
    for j in range(size):
        entry = M[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = entry * poly_det(minor, field, nvars)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        deg = sum(max((r.degree for r in row), default=0) for row in M) // max(size, 1)
        return MultiPoly.zero(field, deg, nvars)
    return acc


# -- text format ------------------------------------------------------------

def _var_names(nvars):
    return tuple(f"x{i}" for i in range(nvars))


def _coef_text(c):
    if c.is_rational():
        return str(c.coeffs[0]), c.coeffs[0] < 0
    return f"({c})", False


def format_poly(F, names=None):
    if isinstance(F, LinearForm):
        F = F.to_poly()
    names = names or _var_names(F.nvars)
    parts = []
    for e in sorted(F.terms, reverse=True):
        c = F.terms[e]
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        text, negative = _coef_text(c)
        if negative:
            text = text[1:]
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        parts.append(("-" if negative else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(t)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text, nvars):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
            num, var, gen, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                idx = int(var[1:])
                if idx >= nvars:
                    raise ValueError(f"variable {var} out of range")
                self.tokens.append(("var", idx))
            elif gen is not None:
                self.tokens.append(("gen", None))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    # polynomials are dicts {(t_exp, e0, ..., e_{n-1}): Fraction}
    def _const(self, c):
        return {(0,) * (self.nvars + 1): Fraction(c)} if c else {}

    @staticmethod
    def _add(a, b, sign=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + sign * v
            if not out[k]:
                del out[k]
        return out

    @staticmethod
    def _mul(a, b):
        out = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return {k: v for k, v in out.items() if v}

    def parse(self):
        result = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input near token {self.i}")
        return result

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = {k: -v for k, v in acc.items()}
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                acc = self._add(acc, self.term(), -1 if val == "-" else 1)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = self._mul(acc, self.factor())
            elif kind == "op" and val == "/":
                self.take()
                den = self.factor()
                if len(den) != 1 or any(next(iter(den))):
                    raise ValueError("division is only allowed by rational constants")
                d = next(iter(den.values()))
                acc = {k: v / d for k, v in acc.items()}
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            out = self._const(1)
            for _ in range(n):
                out = self._mul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self._const(val)
        if kind == "var":
            e = [0] * (self.nvars + 1)
            e[val + 1] = 1
            return {tuple(e): Fraction(1)}
        if kind == "gen":
            e = [0] * (self.nvars + 1)
            e[0] = 1
            return {tuple(e): Fraction(1)}
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if kind == "op" and val == "-":
            return {k: -v for k, v in self.atom().items()}
        raise ValueError(f"unexpected token {val!r}")


def parse_element(text, field=QQ):
    """Parse a field element written as a rational expression in the generator t."""
    raw = _Parser(str(text), 0).parse()
    acc = field.zero
    for (texp,), c in raw.items():
        acc = acc + field.gen ** texp * c if texp else acc + c
    return acc


def parse_poly(text, field=QQ, nvars=4):
    """Parse text such as ``x0*x1^2 + 1/2*x2^3 - (t+1)*x3^3`` into a MultiPoly."""
    raw = _Parser(text, nvars).parse()
    terms = {}
    for key, c in raw.items():
        texp, exp = key[0], key[1:]
        val = field.gen ** texp * c if texp else field.element(c)
        terms[exp] = terms.get(exp, field.zero) + val
    return MultiPoly(field, terms, nvars=nvars)


def parse_minpoly(text):
    """Coefficients (constant term first) of a polynomial in t, given as text or a comma list."""
    text = str(text).strip()
    if "t" not in text:
        return [Fraction(p) for p in re.split(r"[,\s]+", text.strip("[]")) if p]
    raw = _Parser(text, 0).parse()
    top = max((k[0] for k in raw), default=0)
    coeffs = [Fraction(0)] * (top + 1)
    for (texp,), c in raw.items():
        coeffs[texp] = c
    return coeffs


def parse_point(text, field=QQ):
    parts = [p for p in re.split(r"[,\s:]+", text.strip().strip("[]()")) if p]
    return ProjPoint([parse_element(p, field) for p in parts], field)


def rational_vector(values):
    return [to_fraction(v) for v in values]
