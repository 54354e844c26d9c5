"""Which construction applies to a cubic surface: planes, plane plus quadric, cone, or general."""
from dataclasses import dataclass
from typing import Optional

from . import linalg
from .errors import NotCubic
from .exactfield import FieldEmbedding
from .linfactor import peel_base_factors, quadric_rank, split_completely
from .multipoly import MultiPoly, ProjPoint, format_poly, monomial_index, polar1

THREE_PLANES = "ThreePlanes"
PLANE_PLUS_QUADRIC = "PlanePlusQuadric"
IRREDUCIBLE_CONE = "IrreducibleCone"
IRREDUCIBLE_NON_CONE = "IrreducibleNonCone"


@dataclass(frozen=True)
class SurfaceKind:
    tag: str
    vertex: Optional[ProjPoint] = None
    forms: tuple = ()
    extension: object = None
    embedding: object = None
    plane: object = None
    quadric: Optional[MultiPoly] = None
    constant: object = None

    def to_json(self):
        out = {"kind": self.tag}
        if self.vertex is not None:
            out["vertex"] = self.vertex.to_strings()
        if self.forms:
            out["forms"] = [format_poly(f) for f in self.forms]
        if self.plane is not None:
            out["plane"] = format_poly(self.plane)
        if self.quadric is not None:
            out["quadric"] = format_poly(self.quadric)
        if self.extension is not None and self.extension.degree > 1:
            out["field_minpoly"] = [str(c) for c in self.extension.minpoly]
        return out


def cone_vertex(F):
    """A point v with sum v_i dF/dx_i identically zero, or None."""
    field = F.field
    index = monomial_index(F.degree - 1, F.nvars)
    rows = [[field.zero] * F.nvars for _ in index]
    for i in range(F.nvars):
        for e, c in F.derivative(i).terms.items():
            rows[index[e]][i] = c
    kernel = linalg.kernel(rows, field, F.nvars)
    if not kernel:
        return None
    v = ProjPoint(kernel[0], field)
    assert polar1(F, v).is_zero()
    return v


def linear_factors(F):
    """(field, forms, residual) with F = prod(forms) * residual over field.

    Base-field factors are peeled first; a residual that still splits (a
    rank-2 quadric or three conjugate planes) is split over an extension.
    """
    forms, residual = peel_base_factors(F)
    field = F.field
    if residual.degree == 2 and quadric_rank(residual) >= 3:
        return field, forms, residual
    if residual.degree >= 2:
        split = split_completely(residual, max_total_degree=6 * field.degree)
        if split is not None:
            L, emb, more, constant = split
            forms = [f.map_coeffs(emb) for f in forms] + more
            return L, forms, MultiPoly.constant(L, constant, F.nvars)
    return field, forms, residual


def classify(F):
    if F.is_zero() or F.degree != 3 or F.nvars != 4:
        raise NotCubic("a nonzero cubic form in x0..x3 is required")
    base_forms, residual = peel_base_factors(F)
    if len(base_forms) == 3:
        return SurfaceKind(THREE_PLANES, forms=tuple(base_forms), extension=F.field,
                           embedding=FieldEmbedding.identity(F.field),
                           constant=residual.coefficient((0, 0, 0, 0)))
    if residual.degree == 2 and quadric_rank(residual) >= 3:
        return SurfaceKind(PLANE_PLUS_QUADRIC, plane=base_forms[0], quadric=residual, extension=F.field)
    if residual.degree in (2, 3):
        split = split_completely(residual, max_total_degree=6 * F.field.degree)
        if split is not None:
            L, emb, more, constant = split
            forms = tuple(f.map_coeffs(emb) for f in base_forms) + tuple(more)
            return SurfaceKind(THREE_PLANES, forms=forms, extension=L, embedding=emb, constant=constant)
    vertex = cone_vertex(F)
    if vertex is not None:
        return SurfaceKind(IRREDUCIBLE_CONE, vertex=vertex, extension=F.field)
    return SurfaceKind(IRREDUCIBLE_NON_CONE, extension=F.field)
