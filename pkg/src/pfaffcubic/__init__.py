"""Exact linear Pfaffian representations of cubic surfaces."""
from .classifier import SurfaceKind, classify, cone_vertex
from .errors import PfaffError, SearchExhausted, TPointStart, VerificationFailed
from .exactfield import QQ, AlgebraicNumber, NumberField, UniPoly, extend_field
from .framerep import build_frame, represent, solve_linear_forms, system_matrix
from .multipoly import LinearForm, MultiPoly, ProjPoint, parse_point, parse_poly, polar1, polar2
from .pfaffian import PfaffianRep, SkewLinearMatrix, pfaffian, sub_pfaffians, verify
from .pointfactory import SearchCaps, extend_to_frame, find_point, is_T_point, total_reducibility
from .specialrep import represent_any, represent_cone, represent_plane_quadric, represent_three_planes

__version__ = "0.1.0"
