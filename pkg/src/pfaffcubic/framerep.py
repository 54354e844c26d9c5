"""From five points in general position on a cubic surface to a Pfaffian representation.

The five points are moved to the standard frame (coordinate points plus the
unit point) by a projectivity A; the fixed 5x5 matrix evaluated at z = A x then
has principal Pfaffians P_1..P_5 vanishing on the points, and F is written as
sum (-1)^(i+1) L_i P_i by solving a 20x20 linear system for the L_i.
"""
from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import FieldMismatch, NotGeneralPosition, PointNotOnSurface
from .multipoly import LinearForm, ProjPoint, general_position, monomial_index
from .pfaffian import PfaffianRep, assemble_block, constants, sub_pfaffians

SYSTEM_RANK = 15


@dataclass(frozen=True)
class Frame:
    points: tuple
    representatives: tuple
    lam: tuple
    A: tuple
    z: tuple
    T: object
    P: tuple

    @property
    def field(self):
        return self.T.field


@dataclass(frozen=True)
class RepFamily:
    particular: tuple
    kernel_basis: tuple
    frame: Frame
    surface: object
    rank: int = SYSTEM_RANK

    def alpha(self, selector=None):
        """Particular solution plus the kernel combination given by selector."""
        alpha = list(self.particular)
        if selector is not None:
            if len(selector) != len(self.kernel_basis):
                raise ValueError(f"selector needs {len(self.kernel_basis)} entries")
            field = self.frame.field
            for s, vec in zip(selector, self.kernel_basis):
                s = field.element(s)
                if s:
                    alpha = [a + s * v for a, v in zip(alpha, vec)]
        return alpha

    def linear_forms(self, selector=None):
        alpha = self.alpha(selector)
        field = self.frame.field
        return [LinearForm(field, alpha[4 * i:4 * i + 4]) for i in range(5)]


def build_frame(pts):
    pts = [p if isinstance(p, ProjPoint) else ProjPoint(p) for p in pts]
    if len(pts) != 5:
        raise ValueError("a frame needs exactly five points")
    field = pts[0].field
    for p in pts[1:]:
        if p.field != field:
            raise FieldMismatch("frame points over different fields")
    if not general_position(pts):
        raise NotGeneralPosition("four of the five points are coplanar")
    reps = [p.normalized() for p in pts]
    cols = [list(r.coords) for r in reps]
    # lambda solves [a1 a2 a3 a4] lambda = a5
    M4 = [[cols[j][i] for j in range(4)] for i in range(4)]
    lam = linalg.solve(M4, cols[4], field)
    if lam is None or not all(lam):
        raise NotGeneralPosition("the fifth point is not in general position")
    B = [[lam[j] * cols[j][i] for j in range(4)] for i in range(4)]
    A = linalg.inverse(B, field)
    z = tuple(LinearForm(field, row) for row in A)
    T0, _ = constants()
    if field.degree > 1:
        T0 = _lift_constant_matrix(T0, field)
    T = T0.substitute(list(z))
    P = tuple(sub_pfaffians(T))
    return Frame(tuple(pts), tuple(reps), tuple(lam), tuple(tuple(r) for r in A), z, T, P)


def _lift_constant_matrix(T, field):
    from .pfaffian import SkewLinearMatrix
    grid = [[LinearForm(field, [field.element(c.to_fraction()) for c in e.coeffs]) for e in row] for row in T.entries]
    return SkewLinearMatrix(grid, field, check=False)


def system_matrix(frame):
    """20x20 matrix: row = cubic monomial (deglex), column (i, j) = coefficients of (-1)^(i+1) x_j P_i."""
    field = frame.field
    index = monomial_index(3, 4)
    rows = [[field.zero] * 20 for _ in range(20)]
    for i, Pi in enumerate(frame.P):
        sign = 1 if i % 2 == 0 else -1
        for j in range(4):
            col = 4 * i + j
            for e, c in Pi.terms.items():
                ne = list(e)
                ne[j] += 1
                r = index[tuple(ne)]
                rows[r][col] = rows[r][col] + (c if sign > 0 else -c)
    return rows


def solve_linear_forms(F, frame):
    field = frame.field
    if F.field != field:
        raise FieldMismatch("surface and frame over different fields")
    for p in frame.points:
        if F.evaluate(p):
            raise PointNotOnSurface(f"{p!r} is not on the surface")
    S = system_matrix(frame)
    rhs = F.coefficient_vector()
    particular = linalg.solve(S, rhs, field)
    if particular is None:
        raise PointNotOnSurface("linear system is inconsistent")
    kernel = linalg.kernel(S, field)
    return RepFamily(tuple(particular), tuple(tuple(v) for v in kernel), frame, F, 20 - len(kernel))


def represent(F, pts, selector=None, provenance=None):
    frame = build_frame(pts)
    family = solve_linear_forms(F, frame)
    L = family.linear_forms(selector)
    M = assemble_block(frame.T, L)
    prov = dict(provenance or {})
    prov.setdefault("frame_points", [p.to_strings() for p in frame.points])
    prov["lambda"] = [str(x) for x in frame.lam]
    prov["family_selector"] = [str(s) for s in selector] if selector is not None else None
    prov["system_rank"] = family.rank
    return PfaffianRep(M, None, F, F.field, prov)
