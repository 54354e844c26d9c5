"""Linear factors of homogeneous forms, over the base field or a small extension.

After a projectivity A with H = G(A x) and H(e0) != 0, every linear factor of
H can be scaled to x0 - c1 x1 - ... - c_{n-1} x_{n-1}.  The value c1 is a root
of g(t) = H(t, 1, 0, ..., 0); given c1, each c_j is a common root of the
coefficients of H(c1 x1 + c x_j, x1, x_j) viewed as polynomials in c.  Every
combination is then tested by substitution.
"""
import itertools
import random
from math import comb

from . import linalg
from .exactfield import FieldEmbedding, UniPoly, extend_field, factor, gcd
from .errors import ZeroForm
from .multipoly import LinearForm, MultiPoly

MAX_PROJECTIVITIES = 12


def _projectivities(G):
    """Deterministic sequence of invertible integer matrices A with G(A e0) != 0."""
    n = G.nvars
    field = G.field
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    yield ident
    rng = random.Random(20240611 + n)
    produced = 0
    while produced < MAX_PROJECTIVITIES:
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        Af = [[field.element(c) for c in row] for row in A]
        if not linalg.det(Af, field):
            continue
        produced += 1
        yield A


def _transform(G, A):
    field = G.field
    forms = [LinearForm(field, row) for row in A]
    return G.substitute(forms)


def _g_poly(H, field):
    """g(t) = H(t, 1, 0, ..., 0) as a UniPoly in t."""
    d = H.degree
    coeffs = [field.zero] * (d + 1)
    for e, c in H.terms.items():
        if e[0] + e[1] == d:
            coeffs[e[0]] = coeffs[e[0]] + c
    return UniPoly(field, coeffs)


def _cj_poly(H, c1, j, field):
    """gcd over k of the coefficient of x1^(d-k) x_j^k in H(c1 x1 + c x_j, x1, x_j), as a poly in c."""
    d = H.degree
    polys = [[field.zero] * (d + 1) for _ in range(d + 1)]  # polys[k][m] = coeff of c^m in x_j^k part
    c1_pows = [field.one]
    for _ in range(d):
        c1_pows.append(c1_pows[-1] * c1)
    for e, coef in H.terms.items():
        if any(e[i] for i in range(2, H.nvars) if i != j):
            continue
        e0, ej = e[0], e[j]
        for m in range(e0 + 1):
            k = ej + m
            polys[k][m] = polys[k][m] + coef * comb(e0, m) * c1_pows[e0 - m]
    acc = None
    for k in range(1, d + 1):
        p = UniPoly(field, polys[k])
        if p.is_zero():
            continue
        acc = p if acc is None else gcd(acc, p)
    return acc


def _divides(H, c, field):
    """True when x0 - sum c_j x_j divides H (c[0] is unused, c[1..] are c1..)."""
    n = H.nvars
    forms = [LinearForm(field, [field.zero] + list(c[1:]))]
    forms += [LinearForm.variable(field, i, n) for i in range(1, n)]
    return H.substitute(forms).is_zero()


def _candidates_over(H, c1, field):
    """All tuples (0, c1, c2, ...) giving a factor, or None when some c_j needs a larger field."""
    n = H.nvars
    options = []
    for j in range(2, n):
        q = _cj_poly(H, c1, j, field)
        if q is None:
            return []
        _, facs = factor(q)
        if any(f.degree > 1 for f, _ in facs):
            return None
        options.append([-f.coeffs[0] for f, _ in facs])
    found = []
    for combo in itertools.product(*options):
        c = (field.zero, c1) + tuple(combo)
        if _divides(H, c, field):
            found.append(c)
    return found


def _pull_back(c, A, field):
    """The form l_H(A^-1 x) for l_H = x0 - sum c_j x_j."""
    w = [field.one] + [-x for x in c[1:]]
    Af = [[field.element(x) for x in row] for row in A]
    Ainv = linalg.inverse(Af, field)
    n = len(w)
    form = LinearForm(field, [sum((w[i] * Ainv[i][k] for i in range(n)), field.zero) for k in range(n)])
    return form.normalized()


def find_linear_factor(G, max_ext_degree=1):
    """One linear factor of G, possibly over an extension of degree <= max_ext_degree.

    Returns (field, embedding, form) or None.  Base-field factors are preferred,
    then odd-degree extensions, then even ones.
    """
    if G.is_zero():
        raise ZeroForm("the zero form has every linear factor")
    if G.degree == 0:
        return None
    K = G.field
    for A in _projectivities(G):
        first_col = [row[0] for row in A]
        if not G.evaluate(first_col):
            continue
        H = _transform(G, A)
        g = _g_poly(H, K)
        _, facs = factor(g)
        ambiguous = False
        for f, _ in facs:
            if f.degree != 1:
                continue
            got = _candidates_over(H, -f.coeffs[0], K)
            if got is None:
                ambiguous = True
                continue
            if got:
                return K, FieldEmbedding.identity(K), _pull_back(got[0], A, K)
        ext = sorted((f for f, _ in facs if 1 < f.degree <= max_ext_degree), key=lambda f: (f.degree % 2 == 0, f.degree))
        for f in ext:
            L, emb, root = extend_field(K, f)
            HL = H.map_coeffs(emb)
            got = _candidates_over(HL, root, L)
            if got is None:
                ambiguous = True
                continue
            if got:
                return L, emb, _pull_back(got[0], A, L)
        if not ambiguous:
            return None
    return None


def divide_by_linear(G, form):
    """Exact quotient G / form; raises ValueError if form does not divide G."""
    field = G.field
    k = next(i for i, c in enumerate(form.coeffs) if c)
    lead_inv = form.coeffs[k].inverse()
    rem = dict(G.terms)
    quot = {}
    while True:
        top = [e for e in rem if e[k] > 0]
        if not top:
            break
        e = max(top, key=lambda t: (t[k], t))
        c = rem[e] * lead_inv
        qe = list(e)
        qe[k] -= 1
        qe = tuple(qe)
        quot[qe] = quot.get(qe, field.zero) + c
        for i, a in enumerate(form.coeffs):
            if not a:
                continue
            te = list(qe)
            te[i] += 1
            te = tuple(te)
            v = rem.get(te, field.zero) - c * a
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    if rem:
        raise ValueError("linear form does not divide the polynomial")
    return MultiPoly(field, quot, G.degree - 1, G.nvars)


def peel_base_factors(G):
    """Strip every linear factor defined over G's own field; returns (forms, residual)."""
    forms = []
    residual = G
    while residual.degree > 0:
        hit = find_linear_factor(residual, 1)
        if hit is None:
            break
        form = hit[2]
        forms.append(form)
        residual = divide_by_linear(residual, form)
    return forms, residual


def split_completely(G, max_total_degree=12):
    """Try to write G as a product of linear forms over an extension.

    Returns (field, embedding, forms, constant) with G = constant * prod(forms)
    after embedding, or None when G has an irreducible factor of degree >= 2.
    """
    field = G.field
    emb = FieldEmbedding.identity(field)
    forms = []
    residual = G
    while residual.degree > 0:
        max_ext = max(1, max_total_degree // residual.field.degree)
        hit = find_linear_factor(residual, min(max_ext, residual.degree))
        if hit is None:
            return None
        L, e, form = hit
        if L != residual.field:
            forms = [f.map_coeffs(e) for f in forms]
            residual = residual.map_coeffs(e)
            emb = emb.then(e)
        forms.append(form)
        residual = divide_by_linear(residual, form)
    constant = residual.coefficient((0,) * G.nvars)
    return residual.field, emb, forms, constant


def quadric_matrix(Q):
    """Symmetric matrix of a quadratic form (entries in Q's field)."""
    n = Q.nvars
    field = Q.field
    half = field.element(1) / 2
    M = [[field.zero] * n for _ in range(n)]
    for e, c in Q.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            M[i][i] = c
        else:
            M[i][j] = c * half
            M[j][i] = c * half
    return M


def quadric_rank(Q):
    return linalg.rank(quadric_matrix(Q), Q.field)


__all__ = [
    "divide_by_linear",
    "find_linear_factor",
    "peel_base_factors",
    "quadric_matrix",
    "quadric_rank",
    "split_completely",
]
