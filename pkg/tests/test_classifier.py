import pytest
from hypothesis import given, settings, strategies as st

from pfaffcubic import linalg
from pfaffcubic.classifier import (
    IRREDUCIBLE_CONE,
    IRREDUCIBLE_NON_CONE,
    PLANE_PLUS_QUADRIC,
    THREE_PLANES,
    classify,
    cone_vertex,
    linear_factors,
)
from pfaffcubic.errors import NotCubic
from pfaffcubic.exactfield import QQ
from pfaffcubic.linfactor import divide_by_linear, find_linear_factor, quadric_rank, split_completely
from pfaffcubic.multipoly import LinearForm, MultiPoly, linear_substitution, parse_poly, polar1
from pfaffcubic.specialrep import _completing_basis

from support import WORKED

NORM = parse_poly("x0^3 + 2*x1^3 + 4*x2^3 - 6*x0*x1*x2")


def product(forms, field):
    acc = MultiPoly.constant(field, 1)
    for f in forms:
        acc = acc * f.to_poly()
    return acc


def test_cone_vertex_examples():
    assert cone_vertex(parse_poly("x1^3 + x2^3 + x3^3")).to_strings() == ["1", "0", "0", "0"]
    assert cone_vertex(WORKED) is None
    F = parse_poly("(x1 + x2)^3 + x3^3")
    v = cone_vertex(F)
    assert v is not None and polar1(F, v).is_zero()


def test_vertex_moves_to_origin():
    F = parse_poly("(x0 - x1)^3 + x2^3 + x2*x3^2 + (x0 - x1)*x3^2")
    v = cone_vertex(F)
    B = _completing_basis(v)
    G = linear_substitution(F, B)
    assert all(e[0] == 0 for e in G.terms)


def test_linear_factors_examples():
    K, forms, residual = linear_factors(parse_poly("x0*x1*x2"))
    assert K.degree == 1 and len(forms) == 3 and residual.degree == 0
    K, forms, residual = linear_factors(parse_poly("x0*x1^2 + x0*x2^2 + x0*x3^2"))
    assert len(forms) == 1 and residual.degree == 2 and quadric_rank(residual) >= 3


def test_norm_form_splits_over_degree_six():
    K, forms, residual = linear_factors(NORM)
    assert K.degree == 6 and len(forms) == 3
    c = residual.coefficient((0, 0, 0, 0))
    assert product(forms, K) * c == NORM.map_coeffs(_embedding_into(K))


def _embedding_into(K):
    from pfaffcubic.exactfield import FieldEmbedding
    return FieldEmbedding(QQ, K, K.element(QQ.gen))


def test_find_linear_factor_none_for_irreducible():
    assert find_linear_factor(WORKED) is None
    assert split_completely(parse_poly("x0*x1 - x2*x3")) is None


def test_divide_by_linear():
    F = parse_poly("x0*x1*x2 + x0^2*x3")
    x0 = LinearForm.variable(QQ, 0)
    assert divide_by_linear(F, x0) == parse_poly("x1*x2 + x0*x3")
    with pytest.raises(ValueError):
        divide_by_linear(F, LinearForm.variable(QQ, 1))


def test_classify_examples():
    assert classify(WORKED).tag == IRREDUCIBLE_NON_CONE
    assert classify(parse_poly("x0^2*x2 + x1^2*x3")).tag == IRREDUCIBLE_NON_CONE
    kind = classify(parse_poly("x1^3 + x2^3 + x3^3"))
    assert kind.tag == IRREDUCIBLE_CONE and kind.vertex.to_strings() == ["1", "0", "0", "0"]
    assert classify(parse_poly("x0*x1*x2")).tag == THREE_PLANES
    assert classify(parse_poly("x0^2*x1")).tag == THREE_PLANES
    kind = classify(parse_poly("x3*x0*x1 - x3^2*x2"))
    assert kind.tag == PLANE_PLUS_QUADRIC
    assert classify(NORM).tag == THREE_PLANES


def test_reducible_cone_is_reducible_first():
    # three concurrent planes form a cone, but factors win
    assert classify(parse_poly("x0*x1*(x0 + x1)")).tag == THREE_PLANES
    # plane through the vertex of a quadric cone
    assert classify(parse_poly("x3*(x0*x1 - x2^2)")).tag == PLANE_PLUS_QUADRIC


def test_classify_rejects_non_cubics():
    with pytest.raises(NotCubic):
        classify(parse_poly("x0^2 + x1^2"))
    with pytest.raises(NotCubic):
        classify(MultiPoly.zero(QQ, 3))


def test_surface_kind_json():
    out = classify(parse_poly("x1^3 + x2^3 + x3^3")).to_json()
    assert out == {"kind": IRREDUCIBLE_CONE, "vertex": ["1", "0", "0", "0"]}


FIXTURES = [
    (WORKED, IRREDUCIBLE_NON_CONE),
    (parse_poly("x1^3 + x2^3 + x3^3"), IRREDUCIBLE_CONE),
    (parse_poly("x0*x1*x2"), THREE_PLANES),
    (parse_poly("x3*(x0*x1 - x2*x3)"), PLANE_PLUS_QUADRIC),
]

matrices = st.lists(st.integers(-2, 2), min_size=16, max_size=16).map(
    lambda v: [[QQ.element(v[4 * i + j]) for j in range(4)] for i in range(4)]).filter(lambda A: linalg.det(A, QQ))


@settings(max_examples=30, deadline=None)
@given(matrices, st.sampled_from(FIXTURES))
def test_classify_projective_invariance(A, case):
    F, tag = case
    G = linear_substitution(F, A)
    kind = classify(G)
    assert kind.tag == tag
    if tag == IRREDUCIBLE_CONE:
        assert polar1(G, kind.vertex).is_zero()
    if tag == THREE_PLANES:
        assert product(kind.forms, kind.extension) * kind.constant == G.map_coeffs(kind.embedding)
    if tag == PLANE_PLUS_QUADRIC:
        assert quadric_rank(kind.quadric) >= 3
        c = G.terms[next(iter(G.terms))] / (kind.plane.to_poly() * kind.quadric).terms[next(iter(G.terms))]
        assert kind.plane.to_poly() * kind.quadric * c == G


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any), min_size=3, max_size=3))
def test_random_plane_triples(coeffs):
    forms = [LinearForm(QQ, [QQ.element(c) for c in f]) for f in coeffs]
    F = product(forms, QQ)
    kind = classify(F)
    assert kind.tag == THREE_PLANES
    assert product(kind.forms, kind.extension) * kind.constant == F.map_coeffs(kind.embedding)
