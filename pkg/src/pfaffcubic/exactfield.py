"""Exact arithmetic over Q and simple algebraic extensions Q[t]/(m(t)).

Every number field is a single-step extension: towers are flattened at
construction time with a primitive element, so downstream code only ever
sees one field type.  Elements are immutable.
"""
from fractions import Fraction
from functools import cached_property

import sympy

from .errors import (
    DegreeCapExceeded,
    DivisionByZero,
    FieldMismatch,
    ReducibleModulus,
    ZeroPolynomial,
)

MAX_DEGREE = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, AlgebraicNumber):
        return value.to_fraction()
    raise TypeError(f"cannot interpret {value!r} as a rational number")


# -- dense polynomial helpers ------------------------------------------------
# Lists are low-to-high; the helpers work for any coefficient type that
# supports field arithmetic and truthiness (Fraction, AlgebraicNumber).

def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _trim(out)


def _psub(a, b):
    out = list(a)
    for i, x in enumerate(b):
        if i < len(out):
            out[i] = out[i] - x
        else:
            out.append(-x)
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    lead_inv = 1 / b[-1]
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    q = [b[0] * 0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        coef = a[i + db] * lead_inv
        q[i] = coef
        if coef:
            for j, y in enumerate(b):
                a[i + j] = a[i + j] - coef * y
    return _trim(q), _trim(a[:db])


def _pmonic(a):
    if not a:
        return []
    inv = 1 / a[-1]
    return [x * inv for x in a]


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    one = (a or b)[0] * 0 + 1
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    inv = 1 / r0[-1]
    return [x * inv for x in r0], [x * inv for x in s0], [x * inv for x in t0]


def _pderiv(a):
    return _trim([a[i] * i for i in range(1, len(a))])


def _peval(a, x):
    acc = x * 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _euclid_resultant(a, b):
    """Resultant of two rational polynomials by the Euclidean recurrence."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return _ZERO
    m, n = len(a) - 1, len(b) - 1
    if n == 0:
        return b[0] ** m
    if m == 0:
        return a[0] ** n
    _, r = _pdivmod(a, b)
    if not r:
        return _ZERO
    k = len(r) - 1
    sign = -1 if (m * n) % 2 else 1
    return sign * b[-1] ** (m - k) * _euclid_resultant(b, r)


def _interpolate(xs, ys):
    """Newton interpolation through (xs[i], ys[i]); xs rational, ys any field."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    zero = ys[0] * 0
    poly = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [zero] + poly
        for k in range(len(poly)):
            shifted[k] = shifted[k] - poly[k] * xs[i]
        shifted[0] = shifted[0] + coef[i]
        poly = shifted
    return _trim(poly)


def _sympy_factor_rational(coeffs):
    """Factor a rational polynomial; returns (lc, [(monic Fraction list, mult)])."""
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), t, domain="QQ")
    lc, factors = poly.factor_list()
    out = []
    lead = Fraction(int(sympy.fraction(lc)[0]), int(sympy.fraction(lc)[1]))
    for fac, mult in factors:
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(fac.all_coeffs())]
        lead *= cs[-1] ** mult
        out.append(([c / cs[-1] for c in cs], mult))
    out.sort(key=lambda item: (len(item[0]), item[0], item[1]))
    return lead, out


def _sympy_is_squarefree(coeffs):
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), t, domain="QQ")
    return poly.gcd(poly.diff(t)).degree() == 0


class NumberField:
    """The field Q[t]/(m(t)) for a monic irreducible rational polynomial m."""

    def __init__(self, minpoly, check=True):
        coeffs = _trim([to_fraction(c) for c in minpoly])
        degree = len(coeffs) - 1
        if degree < 1:
            raise ValueError("a defining polynomial must have degree >= 1")
        if degree > MAX_DEGREE:
            raise DegreeCapExceeded(f"field degree {degree} exceeds the cap {MAX_DEGREE}")
        lead = coeffs[-1]
        coeffs = [c / lead for c in coeffs]
        if check and degree > 1:
            _, factors = _sympy_factor_rational(coeffs)
            if len(factors) != 1 or factors[0][1] != 1:
                raise ReducibleModulus(f"{_format_poly(coeffs)} is reducible over Q")
        self.minpoly = tuple(coeffs)
        self.degree = degree
        # t^k for k = deg .. 2*deg-2, reduced to coefficient vectors of length deg
        table = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(degree - 1):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [_ZERO] + cur[:-1]
            for i in range(degree):
                cur[i] -= top * coeffs[i]
        self._reduction = table

    @cached_property
    def real_embedding_hint(self):
        if self.degree % 2 == 1:
            return True
        t = sympy.Symbol("t")
        poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in self.minpoly])), t)
        return poly.count_roots() > 0

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.degree == 1 and self.minpoly == (_ZERO, _ONE):
            return "QQ"
        return f"NumberField({_format_poly(self.minpoly)})"

    def __call__(self, value):
        return self.element(value)

    def element(self, value):
        if isinstance(value, AlgebraicNumber):
            if value.field is self or value.field == self:
                return value
            if value.field.degree == 1:
                return self._from_rational(value.coeffs[0])
            raise FieldMismatch(f"{value!r} does not belong to {self!r}")
        if isinstance(value, (list, tuple)):
            cs = [to_fraction(c) for c in value]
            if len(cs) > self.degree:
                _, cs = _pdivmod(cs, list(self.minpoly))
                cs = list(cs)
            cs = cs + [_ZERO] * (self.degree - len(cs))
            return AlgebraicNumber(self, tuple(cs))
        return self._from_rational(to_fraction(value))

    def _from_rational(self, q):
        if self.degree == 1:
            return AlgebraicNumber(self, (q,))
        return AlgebraicNumber(self, (q,) + (_ZERO,) * (self.degree - 1))

    @cached_property
    def zero(self):
        return self._from_rational(_ZERO)

    @cached_property
    def one(self):
        return self._from_rational(_ONE)

    @cached_property
    def gen(self):
        if self.degree == 1:
            return AlgebraicNumber(self, (-self.minpoly[0],))
        return AlgebraicNumber(self, (_ZERO, _ONE) + (_ZERO,) * (self.degree - 2))

    def _reduce(self, prod):
        d = self.degree
        out = list(prod[:d]) + [_ZERO] * (d - min(d, len(prod)))
        for k in range(d, len(prod)):
            c = prod[k]
            if c:
                row = self._reduction[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)


QQ = NumberField((0, 1))


class AlgebraicNumber:
    """An element sum(coeffs[i] * t^i) of a NumberField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(f"elements of {self.field!r} and {other.field!r} cannot be combined")
        if isinstance(other, (int, Fraction)):
            return self.field._from_rational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraicNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraicNumber(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.degree == 1:
            return AlgebraicNumber(self.field, (self.coeffs[0] * other.coeffs[0],))
        a, b = self.coeffs, other.coeffs
        prod = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return AlgebraicNumber(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("division by zero in " + repr(self.field))
        if self.field.degree == 1:
            return AlgebraicNumber(self.field, (1 / self.coeffs[0],))
        g, s, _ = _pxgcd(list(self.coeffs), list(self.field.minpoly))
        return self.field.element(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            return (other.field is self.field or other.field == self.field) and other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def norm(self):
        """Product of all conjugates, a rational number."""
        if self.field.degree == 1:
            return self.coeffs[0]
        return _euclid_resultant(list(self.field.minpoly), list(self.coeffs))

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def sort_key(self):
        return self.coeffs

    def __repr__(self):
        return f"AlgebraicNumber({self})"

    def __str__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return _format_poly(self.coeffs, "t") or "0"


def _format_poly(coeffs, var="t"):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return ""
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class UniPoly:
    """Dense univariate polynomial over a NumberField, low-to-high coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(_trim(field.element(c) for c in coeffs))

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(_trim(coeffs))
        return obj

    @classmethod
    def rational(cls, coeffs):
        return cls(QQ, coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(self.field, [other])
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return UniPoly._raw(self.field, _padd(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        return UniPoly._raw(self.field, _psub(list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return UniPoly._raw(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            other = self._check(other)
            return UniPoly._raw(self.field, _pmul(list(self.coeffs), list(other.coeffs)))
        c = self.field.element(other)
        return UniPoly._raw(self.field, [x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly(self.field, [1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._check(other)
        q, r = _pdivmod(list(self.coeffs), list(other.coeffs))
        return UniPoly._raw(self.field, q), UniPoly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        if isinstance(x, UniPoly):
            acc = UniPoly(self.field, [])
            for c in reversed(self.coeffs):
                acc = acc * x + UniPoly._raw(self.field, [c])
            return acc
        return _peval(list(self.coeffs), self.field.element(x)) if self.coeffs else self.field.zero

    def monic(self):
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, _pmonic(list(self.coeffs)))

    def derivative(self):
        return UniPoly._raw(self.field, _pderiv(list(self.coeffs)))

    def shift(self, c):
        """The polynomial p(t + c)."""
        return self(UniPoly(self.field, [c, 1]))

    def map_coeffs(self, embedding):
        return UniPoly._raw(embedding.target, [embedding(c) for c in self.coeffs])

    def is_rational(self):
        return all(c.is_rational() for c in self.coeffs)

    def rational_coeffs(self):
        return [c.to_fraction() for c in self.coeffs]

    def sort_key(self):
        return (self.degree, tuple(c.coeffs for c in self.coeffs))

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.field.degree == 1:
            return _format_poly([c.coeffs[0] for c in self.coeffs], "z")
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("*z" if i == 1 else f"*z^{i}")
                terms.append(f"({c}){mono}")
        return " + ".join(terms)


def gcd(p, q):
    if p.field != q.field:
        raise FieldMismatch("polynomials over different fields")
    return UniPoly._raw(p.field, _pgcd(list(p.coeffs), list(q.coeffs)))


def squarefree_decomposition(p):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    p = p.monic()
    out = []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p // a
    d = dp // a - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        d = d // a - b.derivative()
        i += 1
    return out


def squarefree_part(p):
    g = gcd(p, p.derivative())
    return (p // g).monic()


def resultant(p, q):
    """Determinant of the Sylvester matrix of p and q."""
    if p.field != q.field:
        raise FieldMismatch("polynomials over different fields")
    field = p.field
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("resultant of two zero polynomials")
    if p.is_zero() or q.is_zero():
        return field.zero
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return field.one
    rows = []
    hp = list(reversed(p.coeffs))
    hq = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([field.zero] * i + hp + [field.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([field.zero] * i + hq + [field.zero] * (size - n - 1 - i))
    from .linalg import det

    return det(rows, field)


def univ_factor_rational(p):
    """Factor a rational polynomial into monic irreducibles.

    Returns ``(lc, [(factor, multiplicity), ...])`` with factors sorted by
    degree and then by coefficients.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    coeffs = p.rational_coeffs()
    if len(coeffs) == 1:
        return coeffs[0], []
    lead, factors = _sympy_factor_rational(coeffs)
    return lead, [(UniPoly(QQ, f), m) for f, m in factors]


def _norm_poly(q, k):
    """Norm over Q of q(z - k*alpha) as a rational coefficient list."""
    field = q.field
    alpha = field.gen
    npts = field.degree * q.degree + 1
    xs = [Fraction(i) for i in range(npts)]
    ys = [q(field.element(x) - alpha * k).norm() for x in xs]
    return _interpolate(xs, ys)


def _factor_squarefree(p):
    field = p.field
    if field.degree == 1:
        rat = [c.coeffs[0] for c in p.coeffs]
        _, factors = _sympy_factor_rational(rat)
        return [UniPoly(field, f) for f, _ in factors]
    if p.degree == 1:
        return [p.monic()]
    k = 0
    while True:
        norm = _norm_poly(p, k)
        if _sympy_is_squarefree(norm):
            break
        k = -k if k > 0 else 1 - k
    _, factors = _sympy_factor_rational(norm)
    out = []
    shift = field.gen * k
    for f, _ in factors:
        g = UniPoly(field, f).shift(shift)
        h = gcd(p, g)
        if h.degree > 0:
            out.append(h)
    return out


def factor(p):
    """Factor p over its own field into monic irreducibles (Trager's method).

    Returns ``(lc, [(factor, multiplicity), ...])`` sorted by degree, then by
    coefficient vectors.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    lead = p.lc
    if p.degree == 0:
        return lead, []
    out = []
    for part, mult in squarefree_decomposition(p):
        for fac in _factor_squarefree(part):
            out.append((fac, mult))
    out.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return lead, out


def roots(p):
    """Roots of p lying in its coefficient field, sorted, without multiplicity."""
    _, factors = factor(p)
    return [-f.coeffs[0] for f, _ in factors if f.degree == 1]


def is_irreducible(p):
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    _, factors = factor(p)
    return len(factors) == 1 and factors[0][1] == 1


class FieldEmbedding:
    """Ring homomorphism K -> L determined by the image of K's generator."""

    def __init__(self, source, target, gen_image):
        self.source = source
        self.target = target
        self.gen_image = gen_image
        powers = [target.one]
        for _ in range(source.degree - 1):
            powers.append(powers[-1] * gen_image)
        self._powers = powers

    def __call__(self, a):
        if a.field is self.target:
            return a
        if a.field != self.source:
            raise FieldMismatch(f"{a!r} is not in the source field {self.source!r}")
        if self.source.degree == 1:
            return self.target._from_rational(a.coeffs[0])
        acc = self.target.zero
        for c, pw in zip(a.coeffs, self._powers):
            if c:
                acc = acc + pw * c
        return acc

    def then(self, other):
        """Composition: first self, then other."""
        return FieldEmbedding(self.source, other.target, other(self.gen_image))

    @classmethod
    def identity(cls, field):
        return cls(field, field, field.gen)


def extend_field(K, m, check=True):
    """Adjoin a root of the irreducible polynomial m in K[z].

    Returns ``(L, embedding, root)`` where L is a single-step field of degree
    deg(K)*deg(m), ``embedding`` maps K into L and ``root`` is an element of L
    with m(root) = 0 after embedding the coefficients.
    """
    if m.field != K:
        raise FieldMismatch("modulus is not defined over the given field")
    if m.degree < 1:
        raise ReducibleModulus("modulus must have positive degree")
    if K.degree * m.degree > MAX_DEGREE:
        raise DegreeCapExceeded(f"extension of degree {K.degree * m.degree} exceeds the cap {MAX_DEGREE}")
    if check and not is_irreducible(m):
        raise ReducibleModulus(f"{m} is reducible over {K!r}")
    m = m.monic()
    if m.degree == 1:
        return K, FieldEmbedding.identity(K), -m.coeffs[0]
    if K.degree == 1:
        L = NumberField([c.coeffs[0] for c in m.coeffs], check=False)
        emb = FieldEmbedding(K, L, L.element(K.gen.coeffs[0]))
        return L, emb, L.gen
    alpha = K.gen
    dm = m.degree
    npts = K.degree * dm + 1
    k = 1
    while True:
        xs = [Fraction(i) for i in range(npts)]
        ys = []
        for x in xs:
            # k^dm * m((x - alpha)/k), an element of K
            arg = (K.element(x) - alpha) / k
            ys.append((m(arg) * k ** dm).norm())
        norm = _interpolate(xs, ys)
        if _sympy_is_squarefree(norm):
            break
        k += 1
    L = NumberField(norm, check=False)
    gamma = L.gen
    # alpha in L is the common root of m_K(S) and m((gamma - S)/k) viewed in S.
    A = UniPoly(L, [L.element(c) for c in K.minpoly])
    arg = UniPoly(L, [gamma / k, L.element(Fraction(-1, k))])
    B = UniPoly(L, [])
    power = UniPoly(L, [1])
    for coef in m.coeffs:
        coef_in_S = UniPoly(L, [L.element(c) for c in coef.coeffs])
        B = B + coef_in_S * power
        power = power * arg
    g = gcd(A, B)
    if g.degree != 1:
        raise AssertionError("primitive element computation failed")
    alpha_L = -g.coeffs[0]
    emb = FieldEmbedding(K, L, alpha_L)
    beta = (gamma - alpha_L) / k
    if m.map_coeffs(emb)(beta):
        raise AssertionError("flattened root does not satisfy the modulus")
    return L, emb, beta
