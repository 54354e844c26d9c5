"""Finding points on cubic surfaces and plane cubics.

Contains the T-point test, the tangent-plane process that grows one surface
point into five points in general position, a point search for surfaces with
no known point, and chord-tangent growth on plane cubics.
"""
import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd as igcd

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from . import linalg
from .errors import (
    DegenerateLine,
    PointNotOnSurface,
    SearchExhausted,
    SingularPoint,
    TPointStart,
    ZeroForm,
)
from .exactfield import FieldEmbedding, UniPoly, _interpolate, extend_field, factor, gcd, squarefree_part
from .linfactor import peel_base_factors, quadric_matrix
from .multipoly import (
    LinearForm,
    MultiPoly,
    ProjPoint,
    TernaryCubic,
    general_position,
    hessian_vanishes,
    plane_basis,
    plane_through,
    polar1,
    polar2,
    restrict_to_plane,
    third_intersection,
)


@dataclass
class SearchCaps:
    """Budgets for the enumerations; all searches are deterministic."""

    per_step: int = 10_000
    planes_per_singular_start: int = 200
    candidates_per_plane: int = 25
    base_lines: int = 1_000
    extension_lines: int = 60
    plane_cubic_rounds: int = 60
    plane_cubic_seeds: int = 40
    lift_vectors: int = 5_000


# -- singularity and T-points ------------------------------------------------

def is_singular(F, a):
    if F.evaluate(a):
        raise PointNotOnSurface(f"{a!r} is not on the surface")
    return polar2(F, a).is_zero()


def _sylvester_det(p, q, field):
    """Resultant of two polynomials given as padded coefficient lists (formal degrees)."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    if size == 0:
        return field.one
    rows = []
    for i in range(n):
        row = [field.zero] * size
        for k, c in enumerate(reversed(p)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [field.zero] * size
        for k, c in enumerate(reversed(q)):
            row[i + k] = c
        rows.append(row)
    return linalg.det(rows, field)


def _in_v(P, u, w, field):
    """Coefficients (low to high) of P(u, v, w) as a polynomial in v, padded to P's degree in v."""
    out = [field.zero] * (max((e[1] for e in P.terms), default=0) + 1)
    for (a, b, c), coef in P.terms.items():
        out[b] = out[b] + coef * (u ** a if a else field.one) * (w ** c if c else field.one)
    return out


def _in_u(P, v, w, field):
    out = [field.zero] * (P.degree + 1)
    for (a, b, c), coef in P.terms.items():
        out[a] = out[a] + coef * (v ** b if b else field.one) * (w ** c if c else field.one)
    return out


def _resultant_in_u(P, Q, field):
    """Res_v(P(u, v, 1), Q(u, v, 1)) as a UniPoly in u, by interpolation."""
    bound = P.degree * Q.degree
    xs = [Fraction(x) for x in range(bound + 1)]
    ys = []
    for x in xs:
        u = field.element(x)
        ys.append(_sylvester_det(_in_v(P, u, field.one, field), _in_v(Q, u, field.one, field), field))
    return UniPoly(field, _interpolate(xs, ys))


def _common_root_count(polys):
    """Number of distinct common roots of univariate polynomials over the closure (None = infinite)."""
    acc = None
    for p in polys:
        if p.is_zero():
            continue
        acc = p if acc is None else gcd(acc, p)
    if acc is None:
        return None
    if acc.degree <= 0:
        return 0
    return squarefree_part(acc).degree


def count_singular_points(C, stop_at=None):
    """Number of distinct singular points of a ternary form over the closure.

    Returns None when the singular locus is a curve (non-reduced form).
    """
    field = C.field
    parts = C.gradient()
    count = 0
    # the chart w = 1
    R = [_resultant_in_u(parts[i], parts[j], field) for i, j in ((0, 1), (0, 2), (1, 2))]
    nonzero = [r for r in R if not r.is_zero()]
    if not nonzero:
        return None
    D = nonzero[0]
    for r in nonzero[1:]:
        D = gcd(D, r)
    if D.degree > 0:
        _, facs = factor(D)
        for f, _ in facs:
            if f.degree == 1:
                L, root = field, -f.coeffs[0]
                lifted = parts
            else:
                L, emb, root = extend_field(field, f)
                lifted = [p.map_coeffs(emb) for p in parts]
            vpolys = [UniPoly(L, _in_v(p, root, L.one, L)) for p in lifted]
            k = _common_root_count(vpolys)
            if k is None:
                return None
            count += f.degree * k
            if stop_at is not None and count >= stop_at:
                return count
    # the line w = 0: points [u : 1 : 0] and [1 : 0 : 0]
    upolys = [UniPoly(field, _in_u(p, field.one, field.zero, field)) for p in parts]
    k = _common_root_count(upolys)
    if k is None:
        return None
    count += k
    if all(not p.evaluate([1, 0, 0]) for p in parts):
        count += 1
    return count


def total_reducibility(C, known_singular=None):
    """True when V(C) is set-theoretically a union of lines over the closure.

    known_singular may name a base-field singular point of C.  A cubic with no
    base-field line that is a union of lines is either three concurrent lines
    (Hessian zero) or a Galois orbit of three lines whose vertices form an orbit
    of size three, so a rational singular point plus a nonzero Hessian rules
    it out without counting singular points.
    """
    poly = C.poly if isinstance(C, TernaryCubic) else C
    if poly.is_zero():
        raise ZeroForm("the zero form has no zero set to decompose")
    _, residual = peel_base_factors(poly)
    r = residual.degree
    if r <= 1:
        return True
    if r == 2:
        return not linalg.det(quadric_matrix(residual), residual.field)
    if hessian_vanishes(residual):
        return True
    if known_singular is not None and all(not d.evaluate(known_singular) for d in residual.gradient()):
        return False
    n = count_singular_points(residual, stop_at=2)
    return n is None or n >= 2


def is_T_point(F, a):
    if F.evaluate(a):
        raise PointNotOnSurface(f"{a!r} is not on the surface")
    plane = polar2(F, a)
    if plane.is_zero():
        raise SingularPoint(f"{a!r} is a singular point")
    # short basis over extensions keeps the section's coefficients small
    basis = _short_plane_basis(plane) if F.field.degree > 1 else None
    section = restrict_to_plane(F, plane, basis)
    image = ProjPoint(section.coordinates_of(a), F.field)
    return total_reducibility(section, known_singular=image)


# -- candidate enumeration ---------------------------------------------------

def integer_vectors(dim, start_height=1):
    """Primitive integer vectors, first nonzero entry positive, by height then lexicographically."""
    h = start_height
    while True:
        shell = []
        for v in itertools.product(range(-h, h + 1), repeat=dim):
            if max(abs(x) for x in v) != h:
                continue
            first = next(x for x in v if x)
            if first < 0:
                continue
            g = 0
            for x in v:
                g = igcd(g, abs(x))
            if g != 1:
                continue
            shell.append(v)
        shell.sort()
        yield from shell
        h += 1


def _lattice_kernel(M, ncols):
    """LLL-reduced basis of the integer vectors v with v*M = 0 (M integral, rows = unknowns)."""
    n = len(M)
    weight = 1 + sum(abs(x) for row in M for x in row) * 1000
    while True:
        rows = [[ZZ(int(i == j)) for j in range(n)] + [ZZ(x * weight) for x in M[i]] for i in range(n)]
        reduced = DomainMatrix(rows, (n, n + ncols), ZZ).lll().to_Matrix().tolist()
        vecs = [[int(x) for x in r[:n]] for r in reduced if not any(r[n:])]
        if len(vecs) == n - ncols:
            return vecs
        weight *= 1000


def _short_plane_basis(plane):
    """Three short points spanning the plane.

    Over Q this is an LLL basis of the plane's integer points.  Over Q(t) the
    plane is read as rational equations on the 4*d rational coordinates of a
    point, and the first K-independent vectors of the reduced lattice are used.
    """
    field = plane.field
    d = field.degree
    c = plane.normalized().coeffs
    rows = []
    for i in range(len(c)):
        for k in range(d):
            img = (c[i] * field.gen ** k).coeffs if d > 1 else c[i].coeffs
            rows.append(list(img))
    lcm = 1
    for row in rows:
        for q in row:
            lcm = lcm * q.denominator // igcd(lcm, q.denominator)
    M = [[int(q * lcm) for q in row] for row in rows]
    chosen = []
    for v in _lattice_kernel(M, d):
        coords = [field.element(list(v[i * d:(i + 1) * d])) if d > 1 else field.element(v[i]) for i in range(len(c))]
        trial = chosen + [coords]
        if linalg.rank(trial, field) == len(trial):
            chosen = trial
        if len(chosen) == len(c) - 1:
            break
    return [ProjPoint(v, field) for v in chosen]


class CandidateEnumerator:
    """Points of a plane as integer combinations of a short basis of it.

    With ``injected`` the given points are replayed instead, in order, and the
    same enumerator is shared by consecutive steps.
    """

    def __init__(self, plane=None, injected=None):
        self.plane = plane
        self.injected = list(injected) if injected is not None else None
        self.cursor = 0
        self.height = 1
        if injected is None:
            self._basis = _short_plane_basis(plane)
            self._vectors = integer_vectors(len(self._basis))

    @classmethod
    def replay(cls, points):
        return cls(injected=points)

    def for_plane(self, plane):
        """The enumerator to use on a given plane (replay enumerators are shared)."""
        return self if self.injected is not None else CandidateEnumerator(plane)

    def __iter__(self):
        return self

    def __next__(self):
        if self.injected is not None:
            if self.cursor >= len(self.injected):
                raise StopIteration
            p = self.injected[self.cursor]
            self.cursor += 1
            return p
        k = next(self._vectors)
        self.height = max(abs(x) for x in k)
        self.cursor += 1
        field = self._basis[0].field
        coords = [field.zero] * len(self._basis[0].coords)
        for c, b in zip(k, self._basis):
            if c:
                coords = [x + y * c for x, y in zip(coords, b.coords)]
        return ProjPoint(coords, field)


@dataclass
class StepConstraints:
    forbidden_planes: list = dc_field(default_factory=list)
    forbidden_tangency_point: object = None
    forbidden_collinear: list = dc_field(default_factory=list)
    require_smooth: bool = True
    require_not_T: bool = True


def _collinear(p, q, r):
    return linalg.rank([list(p.coords), list(q.coords), list(r.coords)], p.field) < 3


def _log(log, step, y, reason, point=None):
    if log is not None:
        entry = {"step": step, "candidate": y.to_strings(), "reason": reason}
        if point is not None:
            entry["point"] = point.to_strings()
        log.append(entry)


def _rejection(F, a, plane, y, constraints):
    """None if y is usable, else (reason, third point or None)."""
    if not isinstance(y, ProjPoint):
        y = ProjPoint(y, F.field)
    elif y.field != F.field:
        y = ProjPoint(y.coords, F.field)
    if plane is not None and plane.evaluate(y):
        return "candidate not on the plane", None, y
    if y == a:
        return "candidate equals the base point", None, y
    try:
        z = third_intersection(F, a, y)
    except DegenerateLine:
        if not F.evaluate(y):
            return "line lies on the surface", None, y
        return "line meets the surface only at the base point", None, y
    if z == a:
        return "third intersection equals the base point", z, y
    for form in constraints.forbidden_planes:
        if not form.evaluate(z):
            return f"lies on forbidden plane {form}", z, y
    for p, q in constraints.forbidden_collinear:
        if _collinear(p, q, z):
            return "collinear with earlier points", z, y
    grad = polar2(F, z)
    if grad.is_zero():
        if constraints.require_smooth:
            return "singular point", z, y
    else:
        t = constraints.forbidden_tangency_point
        if t is not None and not grad.evaluate(t):
            return "tangent plane contains an earlier point", z, y
        if constraints.require_not_T and is_T_point(F, z):
            return "T-point", z, y
    return None, z, y


def next_point(F, a, plane, constraints, enum, cap, log=None, step=None):
    """First candidate y on the plane whose residual point passes the constraints."""
    if F.evaluate(a):
        raise PointNotOnSurface(f"{a!r} is not on the surface")
    tried = 0
    for y in enum:
        if tried >= cap:
            break
        tried += 1
        if not isinstance(y, ProjPoint):
            y = ProjPoint(y, F.field)
        reason, z, y = _rejection(F, a, plane, y, constraints)
        if reason is None:
            z = z.reduced()
            _log(log, step, y, "accepted", z)
            return z, y
        _log(log, step, y, reason, z)
    raise SearchExhausted(f"no usable candidate at step {step} after {tried} tries", list(log or []))


def _planes_through(a):
    """Planes through a, enumerated by height in the 3-dimensional space of such planes."""
    basis = linalg.kernel([list(a.coords)], a.field)
    for k in integer_vectors(len(basis)):
        coeffs = [a.field.zero] * 4
        for c, b in zip(k, basis):
            if c:
                coeffs = [x + y * c for x, y in zip(coeffs, b)]
        yield LinearForm(a.field, coeffs)


def extend_to_frame(F, a1, caps=None, injected=None, allow_t_start=False, log=None):
    """Grow a1 into five points of V(F) in general position by the tangent-plane process."""
    caps = caps or SearchCaps()
    log = log if log is not None else []
    replay = CandidateEnumerator.replay(injected) if injected is not None else None
    if a1.field != F.field:
        raise ValueError("point and surface over different fields")
    if F.evaluate(a1):
        raise PointNotOnSurface(f"{a1!r} is not on the surface")
    plane1 = polar2(F, a1)
    first = StepConstraints()
    if not plane1.is_zero():
        if is_T_point(F, a1):
            if not allow_t_start:
                raise TPointStart(f"{a1!r} is a T-point; its tangent section is a union of lines")
            # forced start: run the bare process, which may land on singular or T-points
            first = StepConstraints(require_smooth=False, require_not_T=False)
        enum = replay or CandidateEnumerator(plane1)
        a2, _ = next_point(F, a1, plane1, first, enum, caps.per_step, log, 1)
    elif replay is not None:
        a2, _ = next_point(F, a1, None, first, replay, caps.per_step, log, 1)
    else:
        a2 = None
        budget = caps.per_step
        for count, plane in enumerate(_planes_through(a1)):
            if count >= caps.planes_per_singular_start or budget <= 0:
                break
            try:
                per = min(caps.candidates_per_plane, budget)
                a2, _ = next_point(F, a1, plane, first, CandidateEnumerator(plane), per, log, 1)
                break
            except SearchExhausted:
                budget -= per
        if a2 is None:
            raise SearchExhausted("no usable plane through the singular start point", list(log))

    def step(a, number, constraints):
        plane = polar2(F, a)
        if plane.is_zero():
            _log(log, number, a, "current point is singular; no tangent plane")
            raise SearchExhausted(f"step {number} starts at the singular point {a!r}", list(log))
        enum = replay or CandidateEnumerator(plane)
        point, _ = next_point(F, a, plane, constraints, enum, caps.per_step, log, number)
        return point

    a3 = step(a2, 2, StepConstraints(forbidden_collinear=[(a1, a2)]))
    p123 = plane_through(a1, a2, a3)
    a4 = step(a3, 3, StepConstraints(forbidden_planes=[p123], forbidden_tangency_point=a2))
    planes = [p123, plane_through(a1, a3, a4), plane_through(a2, a3, a4), plane_through(a1, a2, a4)]
    a5 = step(a4, 4, StepConstraints(forbidden_planes=planes))
    pts = [a1, a2, a3, a4, a5]
    if not general_position(pts):
        raise AssertionError("tangent-plane process produced points not in general position")
    return pts


# -- point search without a starting point ------------------------------------

def _lines(nvars):
    """Pairs of integer points spanning lines, coordinate lines first."""
    units = [tuple(1 if i == k else 0 for i in range(nvars)) for k in range(nvars)]
    seen = set(units)
    points = list(units)
    for i, j in itertools.combinations(range(len(units)), 2):
        yield units[i], units[j]
    for v in integer_vectors(nvars):
        if v in seen:
            continue
        seen.add(v)
        for p in points:
            yield p, v
        points.append(v)


def binary_restriction(F, p, q):
    """Coefficients (low to high in t) of F(p + t q)."""
    d = F.degree
    xs = [Fraction(k) for k in range(d + 1)]
    ys = [F.evaluate([a + b * x for a, b in zip(p.coords, q.coords)]) for x in xs]
    coeffs = _interpolate(xs, ys)
    return coeffs + [F.field.zero] * (d + 1 - len(coeffs))


def _line_roots(F, p, q, max_degree):
    """Points of V(F) on the line pq: yields (field, embedding, point), base field first."""
    K = F.field
    ident = FieldEmbedding.identity(K)
    p = ProjPoint(p, K)
    q = ProjPoint(q, K)
    coeffs = binary_restriction(F, p, q)
    if not any(coeffs):
        yield K, ident, p
        return
    if not coeffs[0]:
        yield K, ident, p
    if not coeffs[-1]:
        yield K, ident, q
    poly = UniPoly(K, coeffs)
    if poly.degree < 1:
        return
    _, facs = factor(poly)
    for f, _ in facs:
        if f.degree == 1:
            t = -f.coeffs[0]
            yield K, ident, ProjPoint([x + t * y for x, y in zip(p.coords, q.coords)], K)
    if max_degree > 1:
        for f, _ in sorted(facs, key=lambda it: (it[0].degree % 2 == 0, it[0].degree)):
            if 1 < f.degree <= max_degree:
                L, emb, t = extend_field(K, f)
                pl, ql = p.map_coeffs(emb), q.map_coeffs(emb)
                yield L, emb, ProjPoint([x + t * y for x, y in zip(pl.coords, ql.coords)], L)


def find_point_with_embedding(F, caps=None, log=None, check_t=True):
    """(field, embedding, point) with point on V(F); smooth non-T points preferred.

    With check_t False (used for quadrics) the first point found is returned.
    """
    caps = caps or SearchCaps()
    fallback = None
    passes = [(caps.base_lines, 1, "base"), (caps.extension_lines, 3, "odd"), (caps.extension_lines, 2, "even")]
    for budget, max_degree, label in passes:
        for count, (p, q) in enumerate(_lines(F.nvars)):
            if count >= budget:
                break
            for L, emb, pt in _line_roots(F, p, q, max_degree):
                if label == "odd" and L.degree % 2 == 0:
                    continue
                if label == "even" and L.degree == 1:
                    continue
                if not check_t:
                    return L, emb, pt.normalized()
                FL = F.map_coeffs(emb) if L != F.field else F
                grad = polar2(FL, pt)
                if grad.is_zero():
                    if fallback is None:
                        fallback = (L, emb, pt.normalized())
                    continue
                if is_T_point(FL, pt):
                    if log is not None:
                        log.append({"line": [list(p), list(q)], "point": pt.to_strings(), "reason": "T-point"})
                    continue
                return L, emb, pt.normalized()
        if fallback is not None:
            return fallback
    raise SearchExhausted("no point found on the enumerated lines", list(log or []))


def find_point(F, caps=None):
    field, _, point = find_point_with_embedding(F, caps)
    return field, point


# -- plane cubics ------------------------------------------------------------

def _no_three_collinear(points):
    return all(not _collinear(p, q, r) for p, q, r in itertools.combinations(points, 3))


def _select(points, n):
    chosen = []
    for p in points:
        if all(not _collinear(a, b, p) for a, b in itertools.combinations(chosen, 2)):
            chosen.append(p)
            if len(chosen) == n:
                return chosen
    return None


def _grow(C, points, new_budget):
    """One round of tangent and chord third points; returns the newly found points."""
    found = []

    def add(z):
        if not any(z == p for p in points) and not any(z == p for p in found):
            found.append(z.normalized())

    for a in list(points):
        if len(found) >= new_budget:
            break
        grad = polar2(C, a)
        if grad.is_zero():
            continue
        for b in plane_basis(grad):
            if b == a:
                continue
            try:
                add(third_intersection(C, a, b))
            except DegenerateLine:
                pass
            break
    for a, b in itertools.combinations(list(points), 2):
        if len(found) >= new_budget:
            break
        c1 = polar1(C, a).evaluate(b)
        c2 = polar2(C, a).evaluate(b)
        coords = [c1 * x - c2 * y for x, y in zip(a.coords, b.coords)]
        if any(coords):
            add(ProjPoint(coords, C.field))
    return found


def plane_cubic_points_with_embedding(C, n=5, caps=None):
    """(field, embedding, points): n points of the plane cubic C with no three collinear."""
    caps = caps or SearchCaps()
    poly = C.poly if isinstance(C, TernaryCubic) else C
    K = poly.field
    seeds = []
    for count, (p, q) in enumerate(_lines(poly.nvars)):
        if count >= caps.plane_cubic_seeds:
            break
        for L, emb, pt in _line_roots(poly, p, q, 3):
            seeds.append((L, emb, pt))
    # base-field seeds first, then odd extensions, then quadratic ones
    seeds.sort(key=lambda s: (s[0].degree != 1, s[0].degree % 2 == 0, s[0].degree))
    tried_fields = []
    for L, emb, _ in seeds:
        if any(L == f for f in tried_fields):
            continue
        tried_fields.append(L)
        CL = poly.map_coeffs(emb) if L != K else poly
        points = []
        for L2, emb2, pt in seeds:
            if L2 == K:
                pt = pt.map_coeffs(emb) if L != K else pt
            elif L2 != L:
                continue
            if not any(pt == x for x in points):
                points.append(pt.normalized())
        for _ in range(caps.plane_cubic_rounds):
            chosen = _select(points, n)
            if chosen is not None:
                return L, emb, chosen
            new = _grow(CL, points, 4 * n)
            if not new:
                break
            points.extend(new)
        chosen = _select(points, n)
        if chosen is not None:
            return L, emb, chosen
    raise SearchExhausted(f"could not find {n} points with no three collinear on the plane cubic", [])


def plane_cubic_points(C, n=5, caps=None):
    return plane_cubic_points_with_embedding(C, n, caps)[2]
