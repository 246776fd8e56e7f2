"""Dense-arithmetic cross-check oracle and exhaustive minimum distance.

Works on flat codeword matrices over F_q, with field elements encoded as
table indices in numpy arrays.  Everything here is independent of the
polynomial-matrix pipeline so the two can verify each other.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded, ShapeMismatch, ZeroCodeError
from .gf import Field
from .mtcode import CodeSpec, expand_generator

try:
    from . import _mindist as _kernel
except ImportError:
    _kernel = None
from . import _mindist_py as _kernel_py


def available_backends():
    out = ["fallback"]
    if _kernel is not None:
        out.insert(0, "compiled")
    return out


def default_backend():
    return "compiled" if _kernel is not None else "fallback"


class DenseMatrix:
    """Matrix over F_q stored as an index array plus the field tables."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        self.field = field
        self.data = np.ascontiguousarray(data, dtype=field.tables().dtype)
        if self.data.ndim != 2:
            raise ShapeMismatch("dense matrix data must be 2-dimensional")

    @classmethod
    def from_rows(cls, field: Field, rows):
        idx = [[field.index(a) for a in row] for row in rows]
        if not idx:
            raise ShapeMismatch("dense matrix needs at least one row")
        return cls(field, np.array(idx, dtype=field.tables().dtype))

    @classmethod
    def zeros(cls, field: Field, nrows, ncols):
        return cls(field, np.zeros((nrows, ncols), dtype=field.tables().dtype))

    @property
    def nrows(self):
        return self.data.shape[0]

    @property
    def ncols(self):
        return self.data.shape[1]

    def to_rows(self):
        return [
            [self.field.element_from_index(int(i)) for i in row]
            for row in self.data
        ]

    def stack(self, other):
        if self.ncols != other.ncols:
            raise ShapeMismatch("stack width mismatch")
        return DenseMatrix(self.field, np.vstack([self.data, other.data]))

    def transpose(self):
        return DenseMatrix(self.field, self.data.T)

    def sigma(self, k: int):
        t = self.field.tables()
        return DenseMatrix(self.field, t.frob[k % self.field.e][self.data])

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ShapeMismatch("dense matmul shape mismatch")
        t = self.field.tables()
        out = np.zeros((self.nrows, other.ncols), dtype=t.dtype)
        for k in range(self.ncols):
            out = t.add[out, t.mul[self.data[:, k][:, None], other.data[k][None, :]]]
        return DenseMatrix(self.field, out)

    def rref(self):
        """(reduced row echelon form, pivot columns)."""
        t = self.field.tables()
        work = self.data.copy()
        nrows, ncols = work.shape
        pivots = []
        top = 0
        for col in range(ncols):
            sub = work[top:, col]
            hits = np.nonzero(sub)[0]
            if hits.size == 0:
                continue
            i = top + int(hits[0])
            if i != top:
                work[[top, i]] = work[[i, top]]
            pv = int(work[top, col])
            if pv != 1:
                work[top] = t.mul[t.inv[pv]][work[top]]
            colvals = work[:, col].copy()
            colvals[top] = 0
            factors = t.mul[t.neg[colvals][:, None], work[top][None, :]]
            work = t.add[work, factors]
            pivots.append(col)
            top += 1
            if top == nrows:
                break
        return DenseMatrix(self.field, work), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def row_basis(self):
        """Independent rows spanning the same rowspace (rref nonzero rows)."""
        reduced, pivots = self.rref()
        return DenseMatrix(self.field, reduced.data[: len(pivots)])

    def null_space(self):
        """Basis rows of {v : M v^t = 0}; zero rows if the kernel is trivial."""
        t = self.field.tables()
        reduced, pivots = self.rref()
        ncols = self.ncols
        free = [c for c in range(ncols) if c not in pivots]
        out = np.zeros((len(free), ncols), dtype=t.dtype)
        for r, fc in enumerate(free):
            out[r, fc] = self.field.index(self.field.one)
            for row, pc in enumerate(pivots):
                out[r, pc] = t.neg[reduced.data[row, fc]]
        return DenseMatrix(self.field, out.reshape(len(free), ncols))

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool((self.data == other.data).all())
        )

    def __repr__(self):
        return f"DenseMatrix({self.nrows}x{self.ncols} over GF({self.field.q}))"


def rowspace_equal(a: DenseMatrix, b: DenseMatrix) -> bool:
    ra = a.row_basis()
    rb = b.row_basis()
    return ra == rb


def rowspace_intersection(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Basis rows of rowspace(a) intersected with rowspace(b)."""
    return a.null_space().stack(b.null_space()).null_space().row_basis()


def expanded_matrix(spec: CodeSpec) -> DenseMatrix:
    """All blockwise shifts of the generator rows, as a dense spanning set."""
    rows = expand_generator(spec)
    return DenseMatrix.from_rows(spec.field, rows)


def hongwei_rank(dense: DenseMatrix, kappa: int) -> int:
    """rank(S sigma^kappa(S)^t) for a spanning matrix S; this equals
    dim(code) - dim(kappa-Galois hull)."""
    gram = dense.matmul(dense.sigma(kappa).transpose())
    return gram.rank()


def hull_by_definition(dense: DenseMatrix, kappa: int) -> DenseMatrix:
    """Basis of the hull straight from its definition: the rowspace of S
    intersected with the kappa-Galois dual {v : S sigma^kappa(v)^t = 0}."""
    dual = dense.null_space().sigma(dense.field.e - kappa)
    if dual.nrows == 0:
        dual = DenseMatrix.zeros(dense.field, 1, dense.ncols)
    return rowspace_intersection(dense, dual)


def min_distance(
    spec: CodeSpec, budget: int = 1 << 26, backend: str | None = None
) -> int:
    """Exact minimum Hamming distance by full enumeration of q^k codewords."""
    field = spec.field
    dense = expanded_matrix(spec)
    basis = dense.row_basis()
    k = basis.nrows
    assert k == spec.dimension
    if k == 0:
        raise ZeroCodeError("the zero code has no minimum distance")
    required = field.q**k
    if required > budget:
        raise BudgetExceeded(required, budget)

    if backend is None:
        backend = default_backend()
    if backend == "compiled" and _kernel is None:
        raise ValueError("compiled backend is not available")
    if backend not in ("compiled", "fallback"):
        raise ValueError(f"unknown backend {backend!r}")

    t = field.tables()
    rows = basis.data
    if backend == "fallback":
        return int(_kernel_py.min_weight(rows, t.add, t.neg, t.mul, field.q))

    q = field.q
    n = rows.shape[1]
    # up[j, c] adds (elem(c+1) - elem(c)) * row_j; down undoes it
    deltas = np.array(
        [
            field.index(
                field.element_from_index(c + 1) - field.element_from_index(c)
            )
            for c in range(q - 1)
        ],
        dtype=t.dtype,
    )
    up = t.mul[deltas[None, :, None], rows[:, None, :]]
    down = t.neg[up]
    add16 = np.ascontiguousarray(t.add, dtype=np.uint16)
    up16 = np.ascontiguousarray(up, dtype=np.uint16)
    down16 = np.ascontiguousarray(down, dtype=np.uint16)
    assert up16.shape == (k, q - 1, n)
    return int(_kernel.min_weight(up16, down16, add16, q))
