"""Skew-symmetric matrices of linear forms and their Pfaffians."""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import FieldMismatch, NotSkew, OddSize, VerificationFailed, WrongSize
from .exactfield import QQ
from .multipoly import LinearForm, MultiPoly, format_poly


class SkewLinearMatrix:
    """n x n skew-symmetric matrix whose entries are linear forms."""

    __slots__ = ("field", "entries", "nvars")

    def __init__(self, entries, field=None, check=True):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise WrongSize("matrix must be square")
        if field is None:
            field = next((e.field for r in rows for e in r if isinstance(e, LinearForm)), QQ)
        nvars = next((e.nvars for r in rows for e in r if isinstance(e, LinearForm)), 4)
        grid = []
        for r in rows:
            out = []
            for e in r:
                if not isinstance(e, LinearForm):
                    if e not in (0, None):
                        raise TypeError("entries must be linear forms or 0")
                    e = LinearForm.zero(field, nvars)
                elif e.field != field:
                    raise FieldMismatch("entries over different fields")
                out.append(e)
            grid.append(tuple(out))
        self.field = field
        self.nvars = nvars
        self.entries = tuple(grid)
        if check:
            for i in range(n):
                if not grid[i][i].is_zero():
                    raise NotSkew(f"diagonal entry {i} is nonzero")
                for j in range(i + 1, n):
                    if grid[i][j] != -grid[j][i]:
                        raise NotSkew(f"entries ({i},{j}) and ({j},{i}) are not opposite")

    @classmethod
    def from_upper(cls, n, upper, field=QQ, nvars=4):
        """Build from {(i, j): LinearForm} with 0-based i < j; missing entries are zero."""
        zero = LinearForm.zero(field, nvars)
        grid = [[zero] * n for _ in range(n)]
        for (i, j), e in upper.items():
            if i >= j:
                raise ValueError("upper-triangular keys need i < j")
            grid[i][j] = e
            grid[j][i] = -e
        return cls(grid, field, check=False)

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, SkewLinearMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def delete(self, i):
        """Principal submatrix with row and column i (0-based) removed."""
        keep = [k for k in range(self.size) if k != i]
        return SkewLinearMatrix([[self.entries[a][b] for b in keep] for a in keep], self.field, check=False)

    def substitute(self, forms):
        """Replace x_i by forms[i] in every entry."""
        return SkewLinearMatrix([[e.substitute(forms) for e in row] for row in self.entries], forms[0].field, check=False)

    def map_coeffs(self, embedding):
        return SkewLinearMatrix([[e.map_coeffs(embedding) for e in row] for row in self.entries], embedding.target, check=False)

    def nonzero_upper(self):
        n = self.size
        return [(i, j) for i in range(n) for j in range(i + 1, n) if not self.entries[i][j].is_zero()]

    def is_rational(self):
        return all(c.is_rational() for row in self.entries for e in row for c in e.coeffs)

    def __repr__(self):
        rows = ["[" + ", ".join(str(e) for e in row) + "]" for row in self.entries]
        return "SkewLinearMatrix(\n  " + ",\n  ".join(rows) + ")"


def _pfaffian_polys(polys, field, nvars):
    """Pfaffian of a skew matrix of polynomials by expansion along the last row."""
    memo = {}

    def pf(idx):
        if not idx:
            return MultiPoly.constant(field, 1, nvars)
        if idx in memo:
            return memo[idx]
        last = idx[-1]
        acc = None
        for pos, j in enumerate(idx[:-1]):
            entry = polys[last][j]
            if entry.is_zero():
                continue
            rest = tuple(k for k in idx[:-1] if k != j)
            term = entry * pf(rest)
            # 1-based column position pos+1 carries the sign (-1)^(pos+1)
            if pos % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = MultiPoly.zero(field, len(idx) // 2, nvars)
        memo[idx] = acc
        return acc

    return pf(tuple(range(len(polys))))


def pfaffian(T):
    """Pf(T) via the recursion Pf(T) = sum_j (-1)^j t_{2n,j} Pf(T_{2n,j})."""
    if T.size % 2:
        raise OddSize(f"Pfaffian needs an even size, got {T.size}")
    polys = [[e.to_poly() for e in row] for row in T.entries]
    return _pfaffian_polys(polys, T.field, T.nvars)


def sub_pfaffians(T):
    """The five 4x4 principal Pfaffians Pf_i(T) of a 5x5 skew matrix (row/column i deleted)."""
    if T.size != 5:
        raise WrongSize(f"expected a 5x5 matrix, got {T.size}x{T.size}")
    return [pfaffian(T.delete(i)) for i in range(5)]


def assemble_block(T, L):
    """Border the odd-size T by the column L and the row -L.

    The Pfaffian of the result is sum_i (-1)^(i+1) L_i Pf_i(T).
    """
    n = T.size
    if len(L) != n:
        raise WrongSize(f"need {n} border forms, got {len(L)}")
    for form in L:
        if form.field != T.field:
            raise FieldMismatch("border forms and matrix over different fields")
    zero = LinearForm.zero(T.field, T.nvars)
    grid = [list(row) + [L[i]] for i, row in enumerate(T.entries)]
    grid.append([-form for form in L] + [zero])
    return SkewLinearMatrix(grid, T.field, check=False)


def proportionality(P, F):
    """Return c with P = c*F, or None."""
    if F.is_zero():
        return None
    lead = max(F.terms)
    c = P.coefficient(lead) / F.terms[lead]
    if not c:
        return None
    if P.is_zero() or P.degree != F.degree:
        return None
    return c if P == F * c else None


def verify(M, F):
    """Return the nonzero c with Pf(M) = c*F; raise VerificationFailed otherwise."""
    if M.field != F.field:
        raise FieldMismatch("matrix and surface over different fields")
    P = pfaffian(M)
    c = proportionality(P, F)
    if c is None:
        lead = max(F.terms) if F.terms else None
        guess = P.coefficient(lead) / F.terms[lead] if lead is not None else F.field.zero
        residual = P - F * guess if not P.is_zero() and P.degree == F.degree else P
        raise VerificationFailed(f"Pfaffian is not a multiple of F; residual {format_poly(residual)}", residual)
    return c


def constants():
    """The fixed 5x5 matrix for the standard frame and the 3x3 matrix used for quadrics."""
    def lf(*pairs):
        v = [0, 0, 0, 0]
        for c, k in pairs:
            v[k] += c
        return LinearForm(QQ, v)

    z = LinearForm.zero(QQ)
    T5 = [
        [z, z, lf((-1, 3)), z, lf((-1, 2))],
        [z, z, lf((1, 3)), lf((1, 0), (-1, 1)), lf((1, 1))],
        [lf((1, 3)), lf((-1, 3)), z, lf((1, 1), (-1, 3)), lf((-1, 1))],
        [z, lf((-1, 0), (1, 1)), lf((-1, 1), (1, 3)), z, z],
        [lf((1, 2)), lf((-1, 1)), lf((1, 1)), z, z],
    ]
    T3 = [
        [z, lf((-1, 3)), lf((-1, 2))],
        [lf((1, 3)), z, lf((-1, 1))],
        [lf((1, 2)), lf((1, 1)), z],
    ]
    return SkewLinearMatrix(T5, QQ), SkewLinearMatrix(T3, QQ)


def standard_frame():
    """The four coordinate points and the unit point."""
    return [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 1, 1],
    ]


@dataclass(frozen=True)
class PfaffianRep:
    """A verified representation: Pf(matrix) = constant * surface."""

    matrix: SkewLinearMatrix
    constant: object
    surface: MultiPoly
    field: object
    provenance: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.matrix.size != 6:
            raise WrongSize("a representation of a cubic is 6x6")
        c = verify(self.matrix, self.surface)
        if self.constant is None:
            object.__setattr__(self, "constant", c)
        elif c != self.constant:
            raise VerificationFailed(f"recorded constant {self.constant} but Pfaffian gives {c}", None)
        if self.field != self.matrix.field:
            raise FieldMismatch("representation field disagrees with matrix field")

    @property
    def extension_degree(self):
        return self.field.degree


# -- JSON encoding ------------------------------------------------------------

def element_to_json(a):
    return a.to_strings()


def element_from_json(data, field):
    if isinstance(data, (int, str)) and not isinstance(data, bool):
        data = [data]
    coeffs = [Fraction(str(s)) for s in data]
    coeffs += [Fraction(0)] * (field.degree - len(coeffs))
    return field.element(coeffs)


def matrix_to_json(M):
    return [[[element_to_json(c) for c in e.coeffs] for e in row] for row in M.entries]


def matrix_from_json(data, field=QQ):
    grid = [[LinearForm(field, [element_from_json(c, field) for c in entry]) for entry in row] for row in data]
    return SkewLinearMatrix(grid, field)
