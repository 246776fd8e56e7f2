"""Matrices over F_q[x]: exact determinants, adjugates, Hermite normal form,
determinantal divisors, and exact left division.
"""

from __future__ import annotations

from itertools import combinations

from .errors import NotSquare, RankDeficient, ShapeMismatch, SingularDivisor
from .gf import Field
from .polyring import Poly, format_poly, gcd, parse_poly, sigma_poly


class PolyMatrix:
    """Immutable dense matrix of Poly entries."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows):
        rows = [tuple(row) for row in rows]
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise ShapeMismatch("ragged rows")
        else:
            width = 0
        self.field = field
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = Poly.zero(field)
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        z, o = Poly.zero(field), Poly.one(field)
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field, entries):
        entries = list(entries)
        n = len(entries)
        z = Poly.zero(field)
        return cls(
            field,
            [[entries[i] if i == j else z for j in range(n)] for i in range(n)],
        )

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(e for e in row) for row in self.rows)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return PolyMatrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("matrix subtraction shape mismatch")
        return PolyMatrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = [other.col(j) for j in range(other.ncols)]
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = Poly.zero(self.field)
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(self.field, out)

    def transpose(self):
        return PolyMatrix(
            self.field, [self.col(j) for j in range(self.ncols)]
        )

    def map(self, fn):
        return PolyMatrix(self.field, [[fn(e) for e in row] for row in self.rows])

    def sigma(self, k: int):
        """Entrywise coefficient Frobenius a -> a^{p^k}."""
        return self.map(lambda f: sigma_poly(f, k))

    def stack(self, other):
        if self.ncols != other.ncols:
            raise ShapeMismatch("vertical stack width mismatch")
        return PolyMatrix(self.field, list(self.rows) + list(other.rows))

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix(
            self.field, [[self.rows[i][j] for j in col_idx] for i in row_idx]
        )

    def determinant(self) -> Poly:
        if self.nrows != self.ncols:
            raise NotSquare("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Poly.one(self.field)
        if n <= 4:
            return _det_cofactor(self.rows, self.field)
        return _det_bareiss(self)

    def adjugate(self):
        """Classical adjoint: adj(M) * M = det(M) * I."""
        if self.nrows != self.ncols:
            raise NotSquare("adjugate of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        if n == 1:
            return PolyMatrix(self.field, [[Poly.one(self.field)]])
        out = []
        all_rows = list(range(n))
        all_cols = list(range(n))
        for i in range(n):
            out_row = []
            for j in range(n):
                minor_rows = [r for r in all_rows if r != j]
                minor_cols = [c for c in all_cols if c != i]
                cof = _det_cofactor(
                    [[self.rows[r][c] for c in minor_cols] for r in minor_rows],
                    self.field,
                )
                if (i + j) % 2:
                    cof = -cof
                out_row.append(cof)
            out.append(out_row)
        return PolyMatrix(self.field, out)

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"


def _det_cofactor(rows, field) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = Poly.zero(field)
    for j, pivot in enumerate(rows[0]):
        if not pivot:
            continue
        minor = [
            [row[c] for c in range(n) if c != j] for row in rows[1:]
        ]
        term = pivot * _det_cofactor(minor, field)
        acc = acc - term if j % 2 else acc + term
    return acc


def _det_bareiss(mat: PolyMatrix) -> Poly:
    """Fraction-free elimination; every division is exact."""
    n = mat.nrows
    field = mat.field
    a = [list(row) for row in mat.rows]
    prev = Poly.one(field)
    sign = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Poly.zero(field)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num // prev
            a[i][k] = Poly.zero(field)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


class HnfResult:
    """hnf = transform @ matrix, with transform unimodular over F_q[x]."""

    __slots__ = ("hnf", "transform", "pivot_cols")

    def __init__(self, hnf, transform, pivot_cols):
        self.hnf = hnf
        self.transform = transform
        self.pivot_cols = pivot_cols


def hnf(mat: PolyMatrix, require_full_rank: bool = True) -> HnfResult:
    """Row Hermite normal form: upper triangular with monic diagonal pivots,
    entries above each pivot of strictly smaller degree, zero rows at the
    bottom.  Returns the form together with the unimodular row transform.
    """
    field = mat.field
    work = [list(row) for row in mat.rows]
    trans = [list(row) for row in PolyMatrix.identity(field, mat.nrows).rows]
    nrows, ncols = mat.nrows, mat.ncols

    def row_op_sub(i, k, q):
        # row_i -= q * row_k
        if not q:
            return
        work[i] = [a - q * b for a, b in zip(work[i], work[k])]
        trans[i] = [a - q * b for a, b in zip(trans[i], trans[k])]

    def row_scale(i, c):
        work[i] = [a * c for a in work[i]]
        trans[i] = [a * c for a in trans[i]]

    top = 0
    pivot_cols = []
    for col in range(ncols):
        # gcd out the column below the current top row
        while True:
            nz = [i for i in range(top, nrows) if work[i][col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: work[i][col].degree)
            pivot = nz[0]
            for i in nz[1:]:
                q, _ = divmod(work[i][col], work[pivot][col])
                row_op_sub(i, pivot, q)
        nz = [i for i in range(top, nrows) if work[i][col]]
        if not nz:
            continue
        i = nz[0]
        if i != top:
            work[top], work[i] = work[i], work[top]
            trans[top], trans[i] = trans[i], trans[top]
        lead = work[top][col].lead()
        if lead != field.one:
            row_scale(top, lead.inv())
        # reduce entries above the pivot to degree < pivot degree
        for i in range(top):
            q, _ = divmod(work[i][col], work[top][col])
            row_op_sub(i, top, q)
        pivot_cols.append(col)
        top += 1
        if top == nrows:
            break

    if require_full_rank and len(pivot_cols) < ncols:
        raise RankDeficient(
            f"matrix has column rank {len(pivot_cols)} < {ncols}"
        )
    return HnfResult(
        PolyMatrix(field, work), PolyMatrix(field, trans), tuple(pivot_cols)
    )


def is_unimodular(mat: PolyMatrix) -> bool:
    if mat.nrows != mat.ncols:
        return False
    d = mat.determinant()
    return d.degree == 0


def determinantal_divisors(mat: PolyMatrix):
    """d_i = monic gcd of all i x i minors, for i = 1..min(nrows, ncols).

    d_0 = 1 by convention.  If every minor of some order vanishes the
    corresponding entry is the zero polynomial.
    """
    field = mat.field
    out = [Poly.one(field)]
    r = min(mat.nrows, mat.ncols)
    for order in range(1, r + 1):
        acc = Poly.zero(field)
        for row_idx in combinations(range(mat.nrows), order):
            for col_idx in combinations(range(mat.ncols), order):
                minor = _det_cofactor(
                    [[mat.rows[i][j] for j in col_idx] for i in row_idx], field
                )
                if minor:
                    acc = minor if not acc else gcd(acc, minor)
                    if acc.degree == 0:
                        break
            if acc and acc.degree == 0:
                break
        out.append(acc.monic() if acc else acc)
    return out


def left_divide(divisor: PolyMatrix, target: PolyMatrix):
    """Solve Q @ divisor = target exactly over F_q[x].

    Returns Q, or None when no polynomial solution exists.  The divisor
    must be square with nonzero determinant.
    """
    if divisor.nrows != divisor.ncols:
        raise NotSquare("left division by a non-square matrix")
    det = divisor.determinant()
    if not det:
        raise SingularDivisor("left division by a singular matrix")
    if target.ncols != divisor.nrows:
        raise ShapeMismatch("left division width mismatch")
    scaled = target @ divisor.adjugate()
    out = []
    for row in scaled.rows:
        out_row = []
        for entry in row:
            q, r = divmod(entry, det)
            if r:
                return None
            out_row.append(q)
        out.append(out_row)
    return PolyMatrix(divisor.field, out)


def format_matrix(mat: PolyMatrix) -> str:
    return "\n".join(" | ".join(format_poly(e) for e in row) for row in mat.rows)


def parse_matrix(field: Field, text: str) -> PolyMatrix:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([parse_poly(field, part) for part in line.split("|")])
    return PolyMatrix(field, rows)
