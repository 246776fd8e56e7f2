"""Hull computation and self-orthogonal / LCD classification.

Everything is driven by one auxiliary matrix: with N the common shift order,
B = G diag[(x^N - 1)/(x^{m_j} - lambda_j)] sigma^kappa(star(G))^t reduced
modulo x^N - 1, where star(G) has entries x^{m_j} g_ij(1/x).  The rows of B
together with (x^N - 1) I generate a quasi-cyclic code Q of length N*l whose
dimension equals dim(C) minus the hull dimension, and a generator matrix of
the hull itself falls out of the dual of Q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AssumptionViolated
from .mtcode import CodeSpec
from .galois import assumption_holds, dual_gpm
from .polymat import (
    PolyMatrix,
    determinantal_divisors,
    format_matrix,
    hnf,
)
from .polyring import Poly, format_poly, gcd, laurent_reduce, reverse_scaled

SELF_ORTHOGONAL = "SELF-ORTHOGONAL"
LCD = "LCD"
INTERMEDIATE = "INTERMEDIATE"


def shift_quotients(spec: CodeSpec, n_order: int | None = None):
    """(x^N - 1)/(x^{m_j} - lambda_j) for each block, written directly as
    sum_{s=1}^{N/m_j} lambda_j^{s-1} x^{N - s m_j}."""
    field = spec.field
    if n_order is None:
        n_order = spec.order_n()
    out = []
    for m, lam in zip(spec.blocks, spec.lambdas):
        coeffs = [field.zero] * n_order
        power = field.one
        for s in range(1, n_order // m + 1):
            coeffs[n_order - s * m] = power
            power = power * lam
        out.append(Poly(field, coeffs))
    return out


def b_matrix(spec: CodeSpec, kappa: int) -> PolyMatrix:
    """The auxiliary matrix B for the reduced generator matrix, entries
    reduced to degree < N."""
    reduced = spec.reduced()
    field = spec.field
    n_order = spec.order_n()
    ell = spec.num_blocks
    star = PolyMatrix(
        field,
        [
            [
                reverse_scaled(reduced.gpm[i, j], spec.blocks[j])
                for j in range(ell)
            ]
            for i in range(ell)
        ],
    )
    quotients = PolyMatrix.diagonal(field, shift_quotients(spec, n_order))
    raw = reduced.gpm @ quotients @ star.sigma(kappa).transpose()
    return raw.map(lambda f: laurent_reduce(f, n_order, field.one))


def qc_associate(spec: CodeSpec, kappa: int) -> CodeSpec:
    """The quasi-cyclic code Q generated by the rows of B together with
    (x^N - 1) I, as a code spec with l blocks of length N."""
    field = spec.field
    n_order = spec.order_n()
    ell = spec.num_blocks
    b = b_matrix(spec, kappa)
    rel = Poly.monomial(field, 1, n_order) - Poly.one(field)
    stacked = b.stack(PolyMatrix.diagonal(field, [rel] * ell))
    top = hnf(stacked).hnf.submatrix(range(ell), range(ell))
    return CodeSpec(field, (n_order,) * ell, (field.one,) * ell, top)


def hull_dimension(spec: CodeSpec, kappa: int) -> int:
    """dim of the kappa-Galois hull, by two independent formulas that are
    cross-checked: the determinantal divisors of B, and the dimension of
    the quasi-cyclic code Q."""
    n_order = spec.order_n()
    ell = spec.num_blocks
    b = b_matrix(spec, kappa)
    rel = Poly.monomial(spec.field, 1, n_order) - Poly.one(spec.field)

    divisors = determinantal_divisors(b)
    acc = rel**ell  # the i = 0 term; never zero
    for i in range(1, ell + 1):
        if divisors[i]:
            acc = gcd(acc, rel ** (ell - i) * divisors[i])
    via_divisors = spec.dimension + acc.degree - n_order * ell

    via_qc = spec.dimension - qc_associate(spec, kappa).dimension
    assert via_divisors == via_qc, (via_divisors, via_qc)
    return via_qc


def hull_gpm(spec: CodeSpec, kappa: int) -> PolyMatrix:
    """Generator polynomial matrix of the kappa-Galois hull, in normal form.

    Requires the shift constants to be compatible with kappa (the dual must
    share them), otherwise AssumptionViolated is raised.
    """
    if not assumption_holds(spec, kappa):
        raise AssumptionViolated(
            "shift constants change under this Galois dual; "
            "the hull is not multi-twisted with the same constants"
        )
    reduced = spec.reduced()
    qc = qc_associate(spec, kappa)
    qc_dual = dual_gpm(qc, kappa)
    product = qc_dual @ reduced.gpm
    return hnf(product).hnf


@dataclass
class HullReport:
    kappa: int
    n_order: int
    dim_code: int
    dim_qc: int
    dim_hull: int
    classification: str
    assumption_ok: bool
    b: PolyMatrix
    qc_gpm: PolyMatrix
    qc_identical: PolyMatrix
    qc_dual: PolyMatrix | None = None
    hull: PolyMatrix | None = None

    def as_dict(self):
        out = {
            "kappa": self.kappa,
            "n": self.n_order,
            "dim_code": self.dim_code,
            "dim_qc": self.dim_qc,
            "dim_hull": self.dim_hull,
            "classification": self.classification,
            "assumption_ok": self.assumption_ok,
            "b_matrix": _matrix_rows(self.b),
            "qc_gpm": _matrix_rows(self.qc_gpm),
            "qc_identical": _matrix_rows(self.qc_identical),
        }
        if self.qc_dual is not None:
            out["qc_dual_gpm"] = _matrix_rows(self.qc_dual)
        if self.hull is not None:
            out["hull_gpm"] = _matrix_rows(self.hull)
        return out

    def as_text(self):
        lines = [
            f"kappa = {self.kappa}",
            f"N = {self.n_order}",
            f"dim(code) = {self.dim_code}",
            f"dim(Q) = {self.dim_qc}",
            f"dim(hull) = {self.dim_hull}",
            f"classification = {self.classification}",
            f"assumption_ok = {'yes' if self.assumption_ok else 'no'}",
            "B = [",
            format_matrix(self.b),
            "]",
            "Q gpm = [",
            format_matrix(self.qc_gpm),
            "]",
            "Q identical = [",
            format_matrix(self.qc_identical),
            "]",
        ]
        if self.qc_dual is not None:
            lines += ["Q dual gpm = [", format_matrix(self.qc_dual), "]"]
        if self.hull is not None:
            lines += ["hull gpm = [", format_matrix(self.hull), "]"]
        return "\n".join(lines) + "\n"


def _matrix_rows(mat: PolyMatrix):
    return [[format_poly(e) for e in row] for row in mat.rows]


def classify(spec: CodeSpec, kappa: int, allow_override: bool = False) -> HullReport:
    """Full hull report with classification.

    When the shift constants are incompatible with kappa, this raises
    AssumptionViolated unless allow_override is set; in that case the hull
    dimension is taken from the dense-arithmetic oracle instead of the
    polynomial pipeline, and no hull generator matrix is produced.
    """
    reduced = spec.reduced()
    ok = assumption_holds(spec, kappa)
    if not ok and not allow_override:
        raise AssumptionViolated(
            "shift constants change under this Galois dual; "
            "pass the override flag to classify with the dense oracle"
        )
    b = b_matrix(reduced, kappa)
    qc = qc_associate(reduced, kappa)
    n_order = reduced.order_n()

    if ok:
        dim_hull = hull_dimension(reduced, kappa)
        qc_dual = dual_gpm(qc, kappa)
        hull = hnf(qc_dual @ reduced.gpm).hnf
        if not b:
            classification = SELF_ORTHOGONAL
        elif dim_hull == 0:
            classification = LCD
        else:
            classification = INTERMEDIATE
    else:
        from .oracle import expanded_matrix, hongwei_rank

        dense = expanded_matrix(reduced)
        dim_hull = reduced.dimension - hongwei_rank(dense, kappa)
        qc_dual = None
        hull = None
        if dim_hull == reduced.dimension:
            classification = SELF_ORTHOGONAL
        elif dim_hull == 0:
            classification = LCD
        else:
            classification = INTERMEDIATE

    return HullReport(
        kappa=kappa,
        n_order=n_order,
        dim_code=reduced.dimension,
        dim_qc=qc.dimension,
        dim_hull=dim_hull,
        classification=classification,
        assumption_ok=ok,
        b=b,
        qc_gpm=qc.gpm,
        qc_identical=qc.identical,
        qc_dual=qc_dual,
        hull=hull,
    )
