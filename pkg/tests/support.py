"""Shared generators for the test suite."""
import random

from pfaffcubic import linalg
from pfaffcubic.exactfield import QQ
from pfaffcubic.multipoly import MultiPoly, ProjPoint, general_position, monomials, parse_poly

WORKED = parse_poly("x0*x1^2 + x1*x3^2 + x2^3")
WORKED_START = ProjPoint([1, 0, 0, 0])
WORKED_CANDIDATES = [[1, 1, 0, 0], [0, 0, 1, 1], [5, 0, -1, 1], [40, 2, -2, 2]]
WORKED_FRAME = [ProjPoint(c) for c in ([1, 0, 0, 0], [0, 1, 0, 0], [0, -1, 1, 1], [-10, 1, 1, -3], [95, 1, -6, 11])]
ECKARDT = parse_poly("x0*x1*x3 + x2^3 + x2*x3^2")
FERMAT = parse_poly("x0^3 + x1^3 + x2^3 + x3^3")


def random_point(rng, bound=5):
    while True:
        c = [rng.randint(-bound, bound) for _ in range(4)]
        if any(c):
            return ProjPoint(c, QQ)


def general_frame(rng, bound=5):
    while True:
        pts = [random_point(rng, bound) for _ in range(5)]
        if general_position(pts):
            return pts


def random_cubic(rng, bound=5):
    while True:
        terms = {e: rng.randint(-bound, bound) for e in monomials(3, 4)}
        F = MultiPoly(QQ, terms, 3, 4)
        if not F.is_zero():
            return F


def cubic_through(pts, rng, bound=3):
    """A random nonzero cubic vanishing at the given points, over their field."""
    field = pts[0].field
    mons = monomials(3, 4)
    rows = [[MultiPoly(field, {e: 1}, 3, 4).evaluate(p.coords) for e in mons] for p in pts]
    basis = linalg.kernel(rows, field, 20)
    while True:
        coeffs = [field.zero] * 20
        for vec in basis:
            k = rng.randint(-bound, bound)
            if k:
                coeffs = [a + b * k for a, b in zip(coeffs, vec)]
        F = MultiPoly(field, dict(zip(mons, coeffs)), 3, 4)
        if not F.is_zero():
            return F


def seeded(seed):
    return random.Random(seed)
