import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pfaffcubic import linalg
from pfaffcubic.classifier import IRREDUCIBLE_NON_CONE, classify
from pfaffcubic.errors import PointNotOnSurface, SearchExhausted, SingularPoint, TPointStart
from pfaffcubic.exactfield import QQ
from pfaffcubic.multipoly import (
    LinearForm,
    MultiPoly,
    ProjPoint,
    general_position,
    linear_substitution,
    monomials,
    parse_poly,
    polar2,
    restrict_to_plane,
)
from pfaffcubic.pointfactory import (
    CandidateEnumerator,
    SearchCaps,
    StepConstraints,
    count_singular_points,
    extend_to_frame,
    find_point,
    find_point_with_embedding,
    integer_vectors,
    is_singular,
    is_T_point,
    next_point,
    plane_cubic_points,
    total_reducibility,
)
from pfaffcubic.pointfactory import _line_roots

from support import ECKARDT, FERMAT, WORKED, WORKED_CANDIDATES, WORKED_START, seeded

RULED = parse_poly("x0^2*x2 + x1^2*x3")
NO_T = parse_poly("x0^2*x3 + x0*x1*x2 + x1^3")


def P(*c):
    return ProjPoint(list(c), QQ)


def ternary(text):
    return parse_poly(text, nvars=3)


def test_is_singular_examples():
    assert is_singular(WORKED, P(1, 0, 0, 0))
    assert not is_singular(WORKED, P(0, 1, 0, 0))
    for s, t in [(1, 0), (0, 1), (2, -3)]:
        assert is_singular(RULED, P(0, 0, s, t))


def test_is_singular_requires_surface_point():
    with pytest.raises(PointNotOnSurface):
        is_singular(WORKED, P(1, 1, 0, 0))


def test_total_reducibility_small_cases():
    assert total_reducibility(ternary("x0*x1*x2"))
    assert not total_reducibility(ternary("x0^3 + x1^3 + x2^3"))
    assert total_reducibility(ternary("x0*x1^2 + x0*x2^2"))
    assert not total_reducibility(ternary("x0*x1^2 + x1^3 - x0^2*x2"))  # irreducible: linear in x2 with coprime coefficients
    assert total_reducibility(ternary("x0^2*x1"))


def test_fermat_has_no_singular_points():
    assert count_singular_points(ternary("x0^3 + x1^3 + x2^3")) == 0
    assert count_singular_points(ternary("x0*x1*x2")) == 3


def test_ruled_surface_families():
    # [1:0:0:s], [1:t:0:0], [0:1:t:0] are T-points; [1:t:-t^2 s:s] with s, t != 0 is not
    for s in (1, -2, 5):
        assert is_T_point(RULED, P(1, 0, 0, s))
    for t in (1, 3, -2):
        assert is_T_point(RULED, P(1, t, 0, 0))
        assert is_T_point(RULED, P(0, 1, t, 0))
    for s, t in [(1, 1), (3, 2), (-1, 4)]:
        assert not is_T_point(RULED, P(1, t, -t * t * s, s))


def test_surface_without_t_points():
    for s in range(-2, 3):
        for t in range(-2, 3):
            assert not is_T_point(NO_T, P(1, s, t, -s ** 3 - s * t))


def test_eckardt_and_worked_point():
    assert is_T_point(ECKARDT, P(0, 0, 0, 1))
    assert not is_T_point(WORKED, P(0, 1, 0, 0))


def test_is_T_point_rejects_singular():
    with pytest.raises(SingularPoint):
        is_T_point(WORKED, P(1, 0, 0, 0))


def test_shortcut_agrees_with_resultant_count():
    cases = [(RULED, P(1, 2, -12, 3)), (WORKED, P(0, 1, 0, 0)), (NO_T, P(1, 1, 1, -2)), (FERMAT, P(1, -1, 2, -2))]
    for F, a in cases:
        section = restrict_to_plane(F, polar2(F, a))
        image = ProjPoint(section.coordinates_of(a), QQ)
        assert total_reducibility(section) == total_reducibility(section, known_singular=image)


def test_integer_vectors_order():
    first = list(itertools.islice(integer_vectors(3), 13))
    assert first[:3] == [(0, 0, 1), (0, 1, -1), (0, 1, 0)]
    assert all(max(map(abs, v)) == 1 for v in first)
    seen = list(itertools.islice(integer_vectors(3), 200))
    assert len(set(seen)) == len(seen)
    heights = [max(map(abs, v)) for v in seen]
    assert heights == sorted(heights)


def test_candidates_lie_on_plane():
    plane = LinearForm(QQ, [QQ.element(c) for c in (1, -11, 3, -6)])
    for y in itertools.islice(CandidateEnumerator(plane), 50):
        assert not plane.evaluate(y.coords)


def test_next_point_worked_steps():
    plane = polar2(WORKED, P(0, 1, 0, 0))
    z, _ = next_point(WORKED, P(0, 1, 0, 0), plane, StepConstraints(), CandidateEnumerator.replay([[0, 0, 1, 1]]), 5)
    assert z == P(0, -1, 1, 1)
    a3 = P(0, -1, 1, 1)
    z, _ = next_point(WORKED, a3, polar2(WORKED, a3), StepConstraints(), CandidateEnumerator.replay([[5, 0, -1, 1]]), 5)
    assert z == P(-10, 1, 1, -3)


def test_worked_replay():
    pts = extend_to_frame(WORKED, WORKED_START, injected=WORKED_CANDIDATES)
    expected = [P(1, 0, 0, 0), P(0, 1, 0, 0), P(0, -1, 1, 1), P(-10, 1, 1, -3), P(95, 1, -6, 11)]
    assert pts == expected


def test_default_enumerator_frame():
    pts = extend_to_frame(WORKED, WORKED_START)
    assert general_position(pts)
    assert all(not WORKED.evaluate(p.coords) for p in pts)
    for p in pts[1:]:
        assert not is_singular(WORKED, p) and not is_T_point(WORKED, p)
    assert pts == extend_to_frame(WORKED, WORKED_START)


def test_eckardt_start_raises():
    with pytest.raises(TPointStart):
        extend_to_frame(ECKARDT, P(0, 0, 0, 1))


def test_forced_eckardt_start_exhausts_with_log():
    log = []
    caps = SearchCaps(per_step=3)
    with pytest.raises(SearchExhausted) as info:
        extend_to_frame(ECKARDT, P(0, 0, 0, 1), caps, allow_t_start=True, log=log)
    assert len(info.value.log) == 3
    assert all(entry["reason"] != "accepted" for entry in info.value.log)


def test_forced_eckardt_start_stops_at_step_two():
    caps = SearchCaps(per_step=200)
    with pytest.raises(SearchExhausted) as info:
        extend_to_frame(ECKARDT, P(0, 0, 0, 1), caps, allow_t_start=True)
    log = info.value.log
    accepted = [e for e in log if e["reason"] == "accepted"]
    assert [e["step"] for e in accepted] == [1]
    # the accepted point lies on the line [s:t:0:0]
    assert accepted[0]["point"][2:] == ["0", "0"]
    assert log[-1]["step"] == 2


def test_find_point_base_field():
    K, pt = find_point(WORKED)
    assert K.degree == 1 and not WORKED.evaluate(pt.coords)


def test_fermat_line_gives_cubic_extension():
    # F(p + t q) = 1 + 3 t^3 is irreducible over Q
    hits = list(_line_roots(FERMAT, [1, 0, 0, 0], [0, 1, 1, 1], 3))
    assert [L.degree for L, _, _ in hits] == [3]
    L, emb, pt = hits[0]
    assert not FERMAT.map_coeffs(emb).evaluate(pt.coords)


def test_find_point_degree_bound():
    F = parse_poly("x0^3 + 2*x1^3 + 4*x2^3 + 3*x3^3 + x0*x1*x3")
    K, emb, pt = find_point_with_embedding(F)
    assert K.degree <= 3
    assert not F.map_coeffs(emb).evaluate(pt.coords)


def test_plane_cubic_points():
    C = ternary("x1*x2^2 + x0^3 - x0*x2^2")
    pts = plane_cubic_points(C, 5)
    assert len(pts) == 5
    for p in pts:
        assert not C.evaluate(p.coords)
    for trio in itertools.combinations(pts, 3):
        assert linalg.det([list(q.coords) for q in trio], QQ)


matrices = st.lists(st.integers(-2, 2), min_size=16, max_size=16).map(
    lambda v: [[QQ.element(v[4 * i + j]) for j in range(4)] for i in range(4)]).filter(lambda A: linalg.det(A, QQ))

RULED_CASES = [(P(1, 0, 0, 2), True), (P(1, 3, 0, 0), True), (P(0, 1, 4, 0), True), (P(1, 2, -12, 3), False)]


@settings(max_examples=30, deadline=None)
@given(matrices, st.sampled_from(RULED_CASES))
def test_t_point_projective_invariance(A, case):
    a, expected = case
    G = linear_substitution(RULED, A)
    Ainv = linalg.inverse(A, QQ)
    b = ProjPoint(linalg.matvec(Ainv, list(a.coords), QQ), QQ)
    assert is_T_point(G, b) == expected


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_extend_to_frame_random(seed):
    rng = seeded(seed)
    a = P(1, 0, 0, 0)
    # cubics through e0 with a smooth, non-T start
    while True:
        F = MultiPoly(QQ, {e: rng.randint(-4, 4) for e in monomials(3, 4) if e != (3, 0, 0, 0)}, 3, 4)
        if F.is_zero() or is_singular(F, a) or is_T_point(F, a):
            continue
        if classify(F).tag == IRREDUCIBLE_NON_CONE:
            break
    pts = extend_to_frame(F, a)
    assert general_position(pts)
    assert all(not F.evaluate(p.coords) for p in pts)
    for p in pts[1:]:
        assert not is_singular(F, p) and not is_T_point(F, p)
