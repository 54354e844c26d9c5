import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pfaffcubic import linalg
from pfaffcubic.errors import NotSkew, OddSize, VerificationFailed, WrongSize
from pfaffcubic.exactfield import QQ
from pfaffcubic.multipoly import LinearForm, MultiPoly, parse_poly, poly_det
from pfaffcubic.pfaffian import (
    PfaffianRep,
    SkewLinearMatrix,
    assemble_block,
    constants,
    matrix_from_json,
    matrix_to_json,
    pfaffian,
    standard_frame,
    sub_pfaffians,
    verify,
)

X = sympy.symbols("x0:4")
F = parse_poly("x0*x1^2 + x1*x3^2 + x2^3")

# a six-by-six fixture matrix for the worked surface, upper triangle
FIXTURE = {
    (1, 3): "x2 - x3",
    (1, 5): "3*x2 + x3",
    (1, 6): "1470*x1 + 686*x2 + 588*x3",
    (2, 3): "-x2 + x3",
    (2, 4): "34*x0 - 510*x1 - 170*x2 - 340*x3",
    (2, 5): "2*x1 + x2 + x3",
    (2, 6): "1372*x1 + 588*x3",
    (3, 4): "8670*x1 + 6120*x2 + 2550*x3",
    (3, 5): "-34*x1 - 17*x2 - 17*x3",
    (3, 6): "-23324*x1 - 10829*x3",
    (4, 6): "774690*x1 - 624750*x2",
    (5, 6): "-21658*x1 + 11662*x2 + 833*x3",
}
# oracle: sum over perfect matchings in sympy (see _matching_pfaffian), computed before the build
FIXTURE_CONSTANT = 1699320


def lf(text):
    p = parse_poly(text)
    return LinearForm(QQ, [p.coefficient(tuple(int(i == j) for j in range(4))) for i in range(4)])


def fixture_matrix():
    return SkewLinearMatrix.from_upper(6, {(i - 1, j - 1): lf(t) for (i, j), t in FIXTURE.items()}, QQ)


def to_sympy(M):
    return sympy.Matrix([[sum(sympy.Rational(str(c)) * x for c, x in zip(e.coeffs, X)) for e in row]
                         for row in M.entries])


def _matching_pfaffian(A):
    """Pfaffian as the signed sum over perfect matchings; independent of the recursion."""
    n = A.shape[0]
    if n == 0:
        return sympy.Integer(1)
    total = 0
    for j in range(1, n):
        rest = [k for k in range(1, n) if k != j]
        sub = A.extract(rest, rest)
        total += (-1) ** (j + 1) * A[0, j] * _matching_pfaffian(sub)
    return sympy.expand(total)


def to_sympy_poly(G):
    return sympy.expand(sum(sympy.Rational(str(c)) * sympy.prod([x ** k for x, k in zip(X, e)])
                            for e, c in G.terms.items()))


def test_two_by_two_base_case():
    a = lf("x0 + 2*x3")
    M = SkewLinearMatrix.from_upper(2, {(0, 1): a}, QQ)
    assert pfaffian(M) == a.to_poly()


def test_odd_size_rejected():
    T, _ = constants()
    with pytest.raises(OddSize):
        pfaffian(T)


def test_not_skew_rejected():
    x0 = lf("x0")
    with pytest.raises(NotSkew):
        SkewLinearMatrix([[LinearForm.zero(QQ), x0], [x0, LinearForm.zero(QQ)]], QQ)


def test_constants_match_fixture_matrices():
    T, T3 = constants()
    rows = [["0", "0", "-x3", "0", "-x2"], ["0", "0", "x3", "x0-x1", "x1"], ["x3", "-x3", "0", "x1-x3", "-x1"],
            ["0", "-x0+x1", "-x1+x3", "0", "0"], ["x2", "-x1", "x1", "0", "0"]]
    assert to_sympy(T) == sympy.Matrix([[sympy.sympify(e) for e in r] for r in rows])
    assert to_sympy(T3) == sympy.Matrix([[0, -X[3], -X[2]], [X[3], 0, -X[1]], [X[2], X[1], 0]])


def test_sub_pfaffians_of_T():
    T, _ = constants()
    expected = ["x1*(x0 - x3)", "x2*(x3 - x1)", "x2*(x1 - x0)", "x3*(x1 - x2)", "x3*(x0 - x1)"]
    got = [to_sympy_poly(p) for p in sub_pfaffians(T)]
    names = dict(zip(["x0", "x1", "x2", "x3"], X))
    assert got == [sympy.expand(sympy.sympify(e, locals=names)) for e in expected]


def test_sub_pfaffians_vanish_on_frame():
    T, _ = constants()
    for p in sub_pfaffians(T):
        for pt in standard_frame():
            assert not p.evaluate(pt)


def test_sub_pfaffians_wrong_size():
    M = SkewLinearMatrix.from_upper(4, {(0, 1): lf("x0")}, QQ)
    with pytest.raises(WrongSize):
        sub_pfaffians(M)


def test_three_planes_block_sign():
    p1, p2, p3 = lf("x0"), lf("x1 + x2"), lf("x3 - x0")
    M = SkewLinearMatrix.from_upper(6, {(0, 3): p1, (1, 4): p2, (2, 5): p3}, QQ)
    # oracle: the matching expansion gives -p1*p2*p3 for this layout
    assert to_sympy_poly(pfaffian(M)) == _matching_pfaffian(to_sympy(M))
    assert pfaffian(M) == -(p1.to_poly() * p2.to_poly() * p3.to_poly())


def test_assemble_block_examples():
    T, _ = constants()
    zero = LinearForm.zero(QQ)
    assert pfaffian(assemble_block(T, [zero] * 5)).is_zero()
    M = assemble_block(T, [lf("x2"), zero, zero, zero, zero])
    assert pfaffian(M) == parse_poly("x0*x1*x2 - x1*x2*x3")


def test_bordered_T3_sign():
    _, T3 = constants()
    grid = [list(r) + [lf(v)] for r, v in zip(T3.entries, ["x1", "x2", "x3"])]
    grid.append([-lf("x1"), -lf("x2"), -lf("x3"), LinearForm.zero(QQ)])
    P = SkewLinearMatrix(grid, QQ)
    # pinned sign: the bordered Pfaffian is minus the alternating sum
    assert pfaffian(P) == parse_poly("-x1^2 + x2^2 - x3^2")


def test_fixture_matrix_constant_by_oracle():
    P = fixture_matrix()
    pf = _matching_pfaffian(to_sympy(P))
    assert sympy.expand(pf - FIXTURE_CONSTANT * to_sympy_poly(F)) == 0


def test_verify_fixture_matrix():
    assert verify(fixture_matrix(), F).to_fraction() == FIXTURE_CONSTANT


def test_verify_failure_reports_residual():
    T, _ = constants()
    M = assemble_block(T, [LinearForm.zero(QQ)] * 5)
    with pytest.raises(VerificationFailed) as info:
        verify(M, F)
    assert info.value.residual is not None


def test_rep_refuses_unverified():
    T, _ = constants()
    M = assemble_block(T, [LinearForm.zero(QQ)] * 5)
    with pytest.raises(VerificationFailed):
        PfaffianRep(M, None, F, QQ)


def test_matrix_json_round_trip():
    P = fixture_matrix()
    assert matrix_from_json(matrix_to_json(P)).entries == P.entries


forms = st.lists(st.integers(-4, 4), min_size=4, max_size=4).map(lambda c: LinearForm(QQ, [QQ.element(x) for x in c]))


def skew(n):
    return st.lists(forms, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda fs: SkewLinearMatrix.from_upper(n, dict(zip([(i, j) for i in range(n) for j in range(i + 1, n)], fs)), QQ))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 4, 6]).flatmap(skew))
def test_square_is_determinant(M):
    pf = pfaffian(M)
    assert pf * pf == poly_det([[e.to_poly() for e in row] for row in M.entries], QQ, 4)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 6]).flatmap(lambda n: st.tuples(skew(n), st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))))
def test_congruence(args):
    M, flat = args
    n = M.size
    Xm = [[QQ.element(flat[n * i + j]) for j in range(n)] for i in range(n)]
    zero = LinearForm.zero(QQ)
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                for m in range(n):
                    c = Xm[i][k] * Xm[j][m]
                    if c:
                        acc = acc + M.entries[k][m] * c
            row.append(acc)
        grid.append(row)
    moved = SkewLinearMatrix(grid, QQ)
    d = linalg.det(Xm, QQ)
    assert pfaffian(moved) == pfaffian(M) * d


@settings(max_examples=30, deadline=None)
@given(st.lists(forms, min_size=5, max_size=5))
def test_assemble_then_verify_gives_one(L):
    T, _ = constants()
    target = MultiPoly.zero(QQ, 3)
    for i, (form, p) in enumerate(zip(L, sub_pfaffians(T))):
        term = form.to_poly() * p
        target = target + term if i % 2 == 0 else target - term
    if target.is_zero():
        return
    assert verify(assemble_block(T, L), target) == QQ.one


def test_sub_pfaffians_commute_with_substitution():
    rng = random.Random(7)
    T, _ = constants()
    for _ in range(5):
        A = [[QQ.element(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
        forms_ = [LinearForm(QQ, row) for row in A]
        lhs = sub_pfaffians(T.substitute(forms_))
        rhs = [p.substitute(forms_) for p in sub_pfaffians(T)]
        assert lhs == rhs
