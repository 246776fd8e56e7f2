"""Multi-twisted codes as F_q[x]-submodules.

A code is described by block lengths (m_1, ..., m_l), shift constants
(lambda_1, ..., lambda_l), and a square generator polynomial matrix G whose
rows generate the module together with the per-block relations
x^{m_j} = lambda_j.  Validity of G means there is a polynomial matrix A with
A @ G = diag[x^{m_j} - lambda_j]; A is recovered exactly from the adjugate.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import NotAGpm, ShapeMismatch, SpecParseError
from .gf import Field, make_field
from .polymat import PolyMatrix, format_matrix, hnf, parse_matrix
from .polyring import Poly, format_element, parse_element


class BlockVector:
    """Element of the ambient module: one residue polynomial per block,
    the j-th reduced modulo x^{m_j} - lambda_j."""

    __slots__ = ("spec", "parts")

    def __init__(self, spec: "CodeSpec", parts):
        parts = tuple(parts)
        if len(parts) != spec.num_blocks:
            raise ShapeMismatch("wrong number of blocks")
        for part, m in zip(parts, spec.blocks):
            if part.degree >= m:
                raise ShapeMismatch(
                    f"block residue of degree {part.degree} >= block length {m}"
                )
        self.spec = spec
        self.parts = parts

    def __eq__(self, other):
        return (
            isinstance(other, BlockVector)
            and self.spec is other.spec
            and self.parts == other.parts
        )

    def __bool__(self):
        return any(self.parts)

    def __repr__(self):
        from .polyring import format_poly

        return "BlockVector(" + " | ".join(format_poly(p) for p in self.parts) + ")"


class CodeSpec:
    """Field, block structure, shift constants, and a generator matrix.

    The generator matrix is validated eagerly: it must be square of size
    num_blocks and its row module must contain every relation row
    (x^{m_j} - lambda_j) * e_j.
    """

    def __init__(self, field: Field, blocks, lambdas, gpm: PolyMatrix):
        blocks = tuple(int(m) for m in blocks)
        lambdas = tuple(lambdas)
        if len(blocks) != len(lambdas):
            raise ShapeMismatch("blocks and lambdas length mismatch")
        if any(m <= 0 for m in blocks):
            raise ShapeMismatch("block lengths must be positive")
        if any(not lam for lam in lambdas):
            raise NotAGpm("shift constants must be nonzero")
        ell = len(blocks)
        if gpm.nrows != ell or gpm.ncols != ell:
            raise ShapeMismatch(
                f"generator matrix must be {ell}x{ell}, got {gpm.nrows}x{gpm.ncols}"
            )
        self.field = field
        self.blocks = blocks
        self.lambdas = lambdas
        self.gpm = gpm
        self.num_blocks = ell
        self.length = sum(blocks)
        self.identical = identical_matrix(self)
        deg_det_a = self.identical.determinant().degree
        deg_det_g = gpm.determinant().degree
        if deg_det_a + deg_det_g != self.length:
            raise NotAGpm("determinant degrees do not complement the length")
        self.dimension = deg_det_a

    def relation_polys(self):
        """x^{m_j} - lambda_j for each block."""
        out = []
        for m, lam in zip(self.blocks, self.lambdas):
            out.append(Poly.monomial(self.field, 1, m) - Poly(self.field, (lam,)))
        return out

    def relation_matrix(self) -> PolyMatrix:
        return PolyMatrix.diagonal(self.field, self.relation_polys())

    def order_n(self) -> int:
        """Smallest N with x^N = 1 in every block: lcm of t_j * m_j where
        t_j is the multiplicative order of lambda_j."""
        return lcm(
            *(
                self.field.mult_order(lam) * m
                for m, lam in zip(self.blocks, self.lambdas)
            )
        )

    def reduced(self) -> "CodeSpec":
        """Equivalent spec whose generator matrix is in Hermite normal form."""
        reduced_gpm = hnf(self.gpm).hnf
        if reduced_gpm == self.gpm:
            return self
        return CodeSpec(self.field, self.blocks, self.lambdas, reduced_gpm)

    def phi(self, vector) -> BlockVector:
        """Flat length-n vector of field elements -> block residues."""
        vector = list(vector)
        if len(vector) != self.length:
            raise ShapeMismatch("vector length mismatch")
        parts = []
        pos = 0
        for m in self.blocks:
            parts.append(Poly(self.field, vector[pos : pos + m]))
            pos += m
        return BlockVector(self, parts)

    def phi_inverse(self, bv_or_parts):
        """Block residues -> flat length-n tuple of field elements."""
        parts = bv_or_parts.parts if isinstance(bv_or_parts, BlockVector) else bv_or_parts
        out = []
        for part, m in zip(parts, self.blocks):
            out.extend(part.coeff(i) for i in range(m))
        return tuple(out)

    def shift(self, vector):
        """One blockwise constacyclic shift of a flat vector."""
        vector = list(vector)
        out = []
        pos = 0
        for m, lam in zip(self.blocks, self.lambdas):
            block = vector[pos : pos + m]
            out.append(block[-1] * lam)
            out.extend(block[:-1])
            pos += m
        return tuple(out)

    def row_vector(self, i: int) -> BlockVector:
        """Row i of the generator matrix, reduced blockwise."""
        parts = [
            entry % rel
            for entry, rel in zip(self.gpm.row(i), self.relation_polys())
        ]
        return BlockVector(self, parts)

    def __repr__(self):
        return (
            f"CodeSpec(q={self.field.q}, blocks={self.blocks}, "
            f"dim={self.dimension})"
        )


def identical_matrix(spec_or_field, blocks=None, lambdas=None, gpm=None) -> PolyMatrix:
    """The unique A with A @ G = diag[x^{m_j} - lambda_j].

    Computed from the adjugate: A = diag @ adj(G) / det(G), every entrywise
    division exact.  Raises NotAGpm when G does not generate a module
    containing all the relation rows.
    """
    if isinstance(spec_or_field, CodeSpec):
        spec = spec_or_field
        field, blocks, lambdas, gpm = spec.field, spec.blocks, spec.lambdas, spec.gpm
    else:
        field = spec_or_field
    det = gpm.determinant()
    if not det:
        raise NotAGpm("generator matrix is singular")
    diag_entries = [
        Poly.monomial(field, 1, m) - Poly(field, (lam,))
        for m, lam in zip(blocks, lambdas)
    ]
    diag = PolyMatrix.diagonal(field, diag_entries)
    scaled = diag @ gpm.adjugate()
    rows = []
    for row in scaled.rows:
        out_row = []
        for entry in row:
            q, r = divmod(entry, det)
            if r:
                raise NotAGpm("relation rows are not in the row module")
            out_row.append(q)
        rows.append(out_row)
    return PolyMatrix(field, rows)


def expand_generator(spec: CodeSpec) -> list:
    """Spanning set of the code over F_q, as flat tuples.

    Row (iota * l + i) is the iota-th blockwise shift of generator row i,
    for iota = 0..N-1 where N is the common shift order.
    """
    n_order = spec.order_n()
    base = [spec.phi_inverse(spec.row_vector(i)) for i in range(spec.num_blocks)]
    rows = []
    current = base
    for _ in range(n_order):
        rows.extend(current)
        current = [spec.shift(v) for v in current]
    return rows


def smallest_mt_containing(field: Field, blocks, lambdas, vectors) -> CodeSpec:
    """Smallest multi-twisted code (given block structure) containing the
    given block vectors; vectors are sequences of per-block polynomials."""
    ell = len(blocks)
    diag_entries = [
        Poly.monomial(field, 1, m) - Poly(field, (lam,))
        for m, lam in zip(blocks, lambdas)
    ]
    rows = []
    for vec in vectors:
        vec = list(vec)
        if len(vec) != ell:
            raise ShapeMismatch("vector has wrong number of blocks")
        rows.append([v % d for v, d in zip(vec, diag_entries)])
    stacked = PolyMatrix(field, rows).stack(PolyMatrix.diagonal(field, diag_entries))
    top = hnf(stacked).hnf.submatrix(range(ell), range(ell))
    return CodeSpec(field, blocks, lambdas, top)


# ---------------------------------------------------------------------------
# text format for code specs
#
#   p = 2
#   e = 4
#   modulus = t^4 + t + 1      (omitted when e = 1)
#   blocks = 3, 2, 4
#   lambdas = 1, 1, 1
#   gpm = [
#   x^2 + x + 1 | 1 | t^5*x + t^5
#   ...
#   ]
# ---------------------------------------------------------------------------

_KV = re.compile(r"^\s*([a-z]+)\s*=\s*(.*?)\s*$")


def parse_spec(text: str) -> CodeSpec:
    fields = {}
    matrix_lines = None
    in_matrix = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if in_matrix:
            if line == "]":
                in_matrix = False
            else:
                matrix_lines.append(line)
            continue
        m = _KV.match(line)
        if not m:
            raise SpecParseError(f"line {lineno}: expected key = value")
        key, value = m.group(1), m.group(2)
        if key == "gpm":
            if value != "[":
                raise SpecParseError(f"line {lineno}: expected 'gpm = ['")
            if matrix_lines is not None:
                raise SpecParseError("duplicate gpm block")
            matrix_lines = []
            in_matrix = True
            continue
        if key in fields:
            raise SpecParseError(f"duplicate key {key!r}")
        if key not in ("p", "e", "modulus", "blocks", "lambdas"):
            raise SpecParseError(f"unknown key {key!r}")
        fields[key] = value
    if in_matrix:
        raise SpecParseError("unterminated gpm block")

    for required in ("p", "e", "blocks", "lambdas"):
        if required not in fields:
            raise SpecParseError(f"missing key {required!r}")
    if matrix_lines is None:
        raise SpecParseError("missing gpm block")

    try:
        p = int(fields["p"])
        e = int(fields["e"])
    except ValueError as exc:
        raise SpecParseError(f"p and e must be integers: {exc}") from exc
    field = make_field(p, e, fields.get("modulus"))
    try:
        blocks = [int(s) for s in fields["blocks"].split(",")]
    except ValueError as exc:
        raise SpecParseError(f"bad blocks list: {exc}") from exc
    try:
        lambdas = [parse_element(field, s) for s in fields["lambdas"].split(",")]
        gpm = parse_matrix(field, "\n".join(matrix_lines))
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc
    return CodeSpec(field, blocks, lambdas, gpm)


def format_spec(spec: CodeSpec) -> str:
    lines = [f"p = {spec.field.p}", f"e = {spec.field.e}"]
    if spec.field.e > 1:
        from .gf import format_modulus

        lines.append(f"modulus = {format_modulus(spec.field)}")
    lines.append("blocks = " + ", ".join(str(m) for m in spec.blocks))
    lines.append("lambdas = " + ", ".join(format_element(lam) for lam in spec.lambdas))
    lines.append("gpm = [")
    lines.append(format_matrix(spec.gpm))
    lines.append("]")
    return "\n".join(lines) + "\n"
