import pytest
from hypothesis import given, settings, strategies as st

from pfaffcubic.classifier import IRREDUCIBLE_CONE, IRREDUCIBLE_NON_CONE, PLANE_PLUS_QUADRIC, THREE_PLANES
from pfaffcubic.errors import FactorMismatch
from pfaffcubic.exactfield import QQ, FieldEmbedding
from pfaffcubic.multipoly import LinearForm, MultiPoly, ProjPoint, monomials, parse_poly
from pfaffcubic.pfaffian import pfaffian
from pfaffcubic.specialrep import quadric_block, represent_any, represent_plane_quadric, represent_three_planes

from support import WORKED, WORKED_START, random_cubic, seeded


def lf(*c):
    return LinearForm(QQ, [QQ.element(x) for x in c])


def check(rep, F):
    G = F if rep.field == F.field else F.map_coeffs(_embed(rep.field))
    assert pfaffian(rep.matrix) == G * rep.constant
    assert rep.constant


def _embed(K):
    return FieldEmbedding(QQ, K, K.element(QQ.gen))


def upper_nonzero(M):
    return sum(1 for i in range(6) for j in range(i + 1, 6) if not M.entries[i][j].is_zero())


def test_three_planes_block():
    F = parse_poly("x0*x1*x2")
    rep = represent_three_planes(lf(1, 0, 0, 0), lf(0, 1, 0, 0), lf(0, 0, 1, 0), F)
    check(rep, F)
    # three above the diagonal, three mirrored below
    assert upper_nonzero(rep.matrix) == 3
    assert sum(1 for row in rep.matrix.entries for e in row if not e.is_zero()) == 6


def test_three_planes_mismatch():
    with pytest.raises(FactorMismatch):
        represent_three_planes(lf(1, 0, 0, 0), lf(0, 1, 0, 0), lf(0, 0, 1, 0), parse_poly("x0*x1*x3"))


def test_repeated_plane():
    F = parse_poly("x0^2*x1")
    rep = represent_any(F)
    assert rep.provenance["kind"] == THREE_PLANES
    check(rep, F)


def test_norm_form_over_degree_six():
    F = parse_poly("x0^3 + 2*x1^3 + 4*x2^3 - 6*x0*x1*x2")
    rep = represent_any(F)
    assert rep.provenance["kind"] == THREE_PLANES
    assert rep.extension_degree == 6
    check(rep, F)


def test_quadric_block_sign():
    Q = parse_poly("x0*x1 - x2*x3")
    P = quadric_block(Q, ProjPoint([1, 0, 0, 0]))
    assert pfaffian(P) == -Q


def test_plane_plus_quadric_rational():
    Q = parse_poly("x0*x1 - x2*x3")
    plane = lf(0, 0, 0, 1)
    F = plane.to_poly() * Q
    rep = represent_plane_quadric(plane, Q, F)
    assert rep.field == QQ
    check(rep, F)


def test_plane_plus_quadric_needs_quadratic_extension():
    F = parse_poly("x3*(x0^2 + x1^2 + x2^2 + x3^2)")
    rep = represent_any(F)
    assert rep.provenance["kind"] == PLANE_PLUS_QUADRIC
    assert rep.extension_degree == 2
    check(rep, F)


def test_cone_over_fermat_curve():
    F = parse_poly("x1^3 + x2^3 + x3^3")
    rep = represent_any(F)
    assert rep.provenance["kind"] == IRREDUCIBLE_CONE
    assert rep.extension_degree <= 3
    check(rep, F)


def test_represent_any_worked_with_hint():
    rep = represent_any(WORKED, hint=WORKED_START)
    assert rep.extension_degree == 1
    assert rep.provenance["start_point"] == ["1", "0", "0", "0"]
    check(rep, WORKED)


def test_represent_any_is_deterministic():
    a = represent_any(WORKED, hint=WORKED_START)
    b = represent_any(WORKED, hint=WORKED_START)
    assert a.matrix.entries == b.matrix.entries and a.constant == b.constant


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_dense_cubic(seed):
    F = random_cubic(seeded(seed))
    rep = represent_any(F)
    if rep.provenance["kind"] == IRREDUCIBLE_NON_CONE:
        assert rep.extension_degree in (1, 3)
    check(rep, F)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any),
       st.lists(st.integers(-2, 2), min_size=10, max_size=10))
def test_random_plane_times_quadric(plane, q):
    Q = MultiPoly(QQ, dict(zip(monomials(2, 4), q)), 2, 4)
    if Q.is_zero():
        return
    F = lf(*plane).to_poly() * Q
    rep = represent_any(F)
    check(rep, F)


def test_surface_without_rational_points_uses_cubic_extension():
    # no rational points at all, though points exist everywhere locally
    F = parse_poly("5*x0^3 + 9*x1^3 + 10*x2^3 + 12*x3^3")
    rep = represent_any(F)
    assert rep.provenance["kind"] == IRREDUCIBLE_NON_CONE
    assert rep.extension_degree == 3
    check(rep, F)
