"""Representations outside the general-position construction, and the top-level dispatcher."""
from . import framerep, linalg
from .classifier import (
    IRREDUCIBLE_CONE,
    IRREDUCIBLE_NON_CONE,
    PLANE_PLUS_QUADRIC,
    THREE_PLANES,
    classify,
)
from .errors import FactorMismatch, SearchExhausted
from .exactfield import FieldEmbedding
from .multipoly import LinearForm, MultiPoly, ProjPoint, general_position, monomial_index
from .pfaffian import PfaffianRep, SkewLinearMatrix, assemble_block, constants, proportionality
from .pointfactory import (
    SearchCaps,
    extend_to_frame,
    find_point_with_embedding,
    integer_vectors,
    plane_cubic_points_with_embedding,
)


def _lift(F, field, embedding=None):
    """F viewed over field (rational surfaces coerce automatically)."""
    if F.field == field:
        return F
    if embedding is None:
        if F.field.degree != 1:
            raise FactorMismatch("surface and factors over unrelated fields")
        embedding = FieldEmbedding(F.field, field, field.element(F.field.gen))
    return F.map_coeffs(embedding)


def _completing_basis(v):
    """Invertible matrix with first column v; other columns are unit vectors."""
    field = v.field
    pivot = next(i for i, c in enumerate(v.coords) if c)
    cols = [list(v.coords)]
    for i in range(len(v.coords)):
        if i != pivot and len(cols) < len(v.coords):
            cols.append([field.one if k == i else field.zero for k in range(len(v.coords))])
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(v.coords))]


def _substitute_matrix(M, B):
    """Entries e(x') -> e(B^-1 x); the matrix given in x' coordinates moves back to x."""
    field = M.field
    Binv = linalg.inverse(B, field)
    forms = [LinearForm(field, row) for row in Binv]
    return M.substitute(forms)


def _minpoly(field):
    return [str(c) for c in field.minpoly] if field.degree > 1 else None


def represent_three_planes(p1, p2, p3, F, provenance=None):
    field = p1.field
    F = _lift(F, field)
    prod = p1 * p2 * p3
    if proportionality(prod, F) is None:
        raise FactorMismatch("the three planes do not multiply to F")
    upper = {(0, 3): p1, (1, 4): p2, (2, 5): p3}
    M = SkewLinearMatrix.from_upper(6, upper, field)
    prov = {"kind": THREE_PLANES, "field_minpoly": _minpoly(field), "frame_points": None}
    prov.update(provenance or {})
    return PfaffianRep(M, None, F, field, prov)


def quadric_block(Q, q):
    """4x4 skew matrix of linear forms with Pfaffian -Q, built from a point q on V(Q)."""
    field = Q.field
    B = _completing_basis(q)
    forms = [LinearForm(field, row) for row in B]
    Qm = Q.substitute(forms)  # Qm(x') = Q(B x'), vanishes at e0
    if Qm.coefficient((2, 0, 0, 0)):
        raise FactorMismatch("the chosen point is not on the quadric")
    # unknowns: coefficients of L1, L2, L3 (4 each); sum (-1)^(i+1) L_i x_i = Qm
    index = monomial_index(2, 4)
    rows = [[field.zero] * 12 for _ in index]
    for i in range(3):
        sign = 1 if i % 2 == 0 else -1
        for j in range(4):
            e = [0, 0, 0, 0]
            e[i + 1] += 1
            e[j] += 1
            rows[index[tuple(e)]][4 * i + j] = field.element(sign)
    sol = linalg.solve(rows, Qm.coefficient_vector(), field)
    if sol is None:
        raise FactorMismatch("quadric is not expressible through the moved point")
    L = [LinearForm(field, sol[4 * i:4 * i + 4]) for i in range(3)]
    _, T3 = constants()
    if field.degree > 1:
        T3 = SkewLinearMatrix([[LinearForm(field, [field.element(c.to_fraction()) for c in e.coeffs]) for e in row] for row in T3.entries], field, check=False)
    P = assemble_block(T3, L)
    return _substitute_matrix(P, B)


def represent_plane_quadric(plane, Q, F, caps=None, provenance=None):
    caps = caps or SearchCaps()
    if plane.field != Q.field:
        raise FactorMismatch("plane and quadric over different fields")
    F = _lift(F, Q.field)
    if proportionality(Q * plane, F) is None:
        raise FactorMismatch("plane times quadric is not proportional to F")
    L, emb, q = find_point_with_embedding(Q, caps, check_t=False)
    if L.degree > 2 * Q.field.degree:
        raise SearchExhausted("point on the quadric needs more than a quadratic extension", [])
    if L != Q.field:
        plane, Q, F = plane.map_coeffs(emb), Q.map_coeffs(emb), F.map_coeffs(emb)
    P = quadric_block(Q, q)
    zero = LinearForm.zero(L)
    grid = [[zero] * 6 for _ in range(6)]
    grid[0][5] = plane
    grid[5][0] = -plane
    for i in range(4):
        for j in range(4):
            grid[1 + i][1 + j] = P.entries[i][j]
    M = SkewLinearMatrix(grid, L, check=False)
    prov = {"kind": PLANE_PLUS_QUADRIC, "field_minpoly": _minpoly(L), "frame_points": None,
            "quadric_point": q.to_strings()}
    prov.update(provenance or {})
    return PfaffianRep(M, None, F, L, prov)


def represent_cone(F, vertex, caps=None, provenance=None):
    caps = caps or SearchCaps()
    field = F.field
    B = _completing_basis(vertex)
    G = F.substitute([LinearForm(field, row) for row in B])
    if any(e[0] for e in G.terms):
        raise ValueError("the given point is not a vertex of the cone")
    C = MultiPoly(field, {e[1:]: c for e, c in G.terms.items()}, 3, 3)
    L, emb, base = plane_cubic_points_with_embedding(C, 5, caps)
    if L != field:
        F = F.map_coeffs(emb)
        B = [[emb(c) for c in row] for row in B]
    tried = 0
    for y in integer_vectors(5):
        if tried >= caps.lift_vectors:
            break
        tried += 1
        lifted = [ProjPoint([L.element(y[i])] + list(base[i].coords), L) for i in range(5)]
        pts = [ProjPoint(linalg.matvec(B, list(p.coords), L), L) for p in lifted]
        if general_position(pts):
            prov = {"kind": IRREDUCIBLE_CONE, "field_minpoly": _minpoly(L), "vertex": vertex.to_strings(),
                    "lift_vector": list(y), "base_points": [p.to_strings() for p in base]}
            prov.update(provenance or {})
            prov["frame_points"] = [p.to_strings() for p in pts]
            return framerep.represent(F, pts, provenance=prov)
    raise SearchExhausted("no lift vector puts the points in general position", [])


def represent_any(F, hint=None, caps=None, injected=None, allow_t_start=False, selector=None):
    caps = caps or SearchCaps()
    kind = classify(F)
    if kind.tag == THREE_PLANES:
        F_ext = F.map_coeffs(kind.embedding) if kind.extension != F.field else F
        return represent_three_planes(*kind.forms, F_ext)
    if kind.tag == PLANE_PLUS_QUADRIC:
        return represent_plane_quadric(kind.plane, kind.quadric, F, caps)
    if kind.tag == IRREDUCIBLE_CONE:
        return represent_cone(F, kind.vertex, caps)
    assert kind.tag == IRREDUCIBLE_NON_CONE
    log = []
    if hint is not None:
        L, FL, start = F.field, F, hint
    else:
        L, emb, start = find_point_with_embedding(F, caps)
        FL = F.map_coeffs(emb) if L != F.field else F
    pts = extend_to_frame(FL, start, caps, injected=injected, allow_t_start=allow_t_start, log=log)
    prov = {"kind": IRREDUCIBLE_NON_CONE, "field_minpoly": _minpoly(L), "start_point": start.to_strings(),
            "candidate_log": log}
    return framerep.represent(FL, pts, selector=selector, provenance=prov)
