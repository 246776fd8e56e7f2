"""End-to-end acceptance suite: five worked examples with golden values,
a randomized property suite, and degenerate cases.  All comparisons are
exact; each criterion is one test function (one pass/fail line)."""

import subprocess
import sys
import time
from pathlib import Path

from mthull.galois import (
    assumption_holds,
    containment_witness,
    contains,
    dual_gpm,
    dual_shift_constants,
    galois_inner,
)
from mthull.hull import (
    LCD,
    SELF_ORTHOGONAL,
    b_matrix,
    classify,
    hull_dimension,
    hull_gpm,
    qc_associate,
    shift_quotients,
)
from mthull.mtcode import CodeSpec, parse_spec, smallest_mt_containing
from mthull.oracle import (
    expanded_matrix,
    hongwei_rank,
    hull_by_definition,
    min_distance,
    rowspace_equal,
)
from mthull.polymat import (
    PolyMatrix,
    determinantal_divisors,
    hnf,
    parse_matrix,
)
from mthull.polyring import (
    Poly,
    gcd,
    laurent_reduce,
    parse_poly,
    reverse_scaled,
    sigma_poly,
)

from helpers import field, make_rng, random_spec
from test_polymat import random_unimodular

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return parse_spec((FIXTURES / name).read_text())


def test_acceptance_1_f16_gqc_self_orthogonal():
    spec = load("gqc_f16.spec")
    f = spec.field
    golden_a = parse_matrix(f, "x + 1 | 1 | 0\n0 | x + 1 | t^5\n0 | 0 | x + 1")
    assert spec.identical == golden_a

    golden_h = parse_matrix(f, "x + 1 | 0 | 0\nx^2 | x + 1 | 0\n0 | t^5*x | x + 1")
    golden_h3 = parse_matrix(f, "x + 1 | 0 | 0\nx^2 | x + 1 | 0\n0 | t^10*x | x + 1")
    assert dual_gpm(spec, 0) == golden_h
    assert dual_gpm(spec, 3) == golden_h3

    dual_spec = CodeSpec(f, spec.blocks, dual_shift_constants(spec, 3), golden_h3)
    assert contains(dual_spec, spec)
    golden_m = parse_matrix(
        f,
        "1 | 1 | t^5\n"
        "x^2 | x + 1 | t^5*x + t^5\n"
        "t^10*x^3 | t^10*x^2 + t^10*x | x^2 + 1",
    )
    assert containment_witness(dual_spec, spec) == golden_m

    assert not b_matrix(spec, 3)
    assert classify(spec, 3).classification == SELF_ORTHOGONAL


def test_acceptance_2_binary_qc_n36():
    spec = load("qc_binary_n36.spec")
    assert spec.dimension == 18
    assert not b_matrix(spec, 0)
    report = classify(spec, 0)
    assert report.classification == SELF_ORTHOGONAL
    started = time.time()
    assert min_distance(spec) == 8
    assert time.time() - started < 5.0


def test_acceptance_3_f7_qt_lcd_with_override():
    f = field(7)
    vec = [parse_poly(f, "x + 1"), Poly.zero(f)]
    spec = smallest_mt_containing(
        f, [2, 2], [f.element(2), f.element(5)], [vec]
    )
    assert spec.gpm == parse_matrix(f, "1 | 0\n0 | x^2 + 2")

    b = b_matrix(spec, 0)
    golden_entry = parse_poly(f, "2*x^10 + 4*x^8 + x^6 + 2*x^4 + 4*x^2 + 1")
    assert b[0, 0] == golden_entry
    assert not b[0, 1] and not b[1, 0] and not b[1, 1]

    # published generator rows are a unit multiple of the monic normal form
    qc = qc_associate(spec, 0)
    published = parse_matrix(
        f, "2*x^10 + 4*x^8 + x^6 + 2*x^4 + 4*x^2 + 1 | 0\n0 | x^12 + 6"
    )
    monic_published = PolyMatrix(
        f, [[e.monic() if e else e for e in row] for row in published.rows]
    )
    assert qc.gpm == monic_published
    assert qc.dimension == 2 == spec.dimension

    rel = Poly.monomial(f, 1, 12) - Poly.one(f)
    divisors = determinantal_divisors(b)
    acc = rel**2
    for i in (1, 2):
        if divisors[i]:
            acc = gcd(acc, rel ** (2 - i) * divisors[i])
    assert acc.degree == 22

    report = classify(spec, 0, allow_override=True)
    assert report.classification == LCD
    assert report.dim_hull == 0

    res = subprocess.run(
        [sys.executable, "-m", "mthull.cli", "classify", str(FIXTURES / "qt_f7.spec")],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 4


def test_acceptance_4_f4_mds_hull():
    spec = load("mds_f4.spec")
    f = spec.field
    assert spec.order_n() == 15

    reduced = spec.reduced()
    golden_a = parse_matrix(
        f,
        "x^3 + 1 | t^2*x^2 + t*x + 1\n0 | x^4 + t^2*x^3 + t*x^2 + x + t^2",
    )
    assert reduced.identical == golden_a

    golden_b = parse_matrix(
        f,
        "x^12 + t*x^10 + x^9 + x^6 + t^2*x^5 + x^3 | "
        "t^2*x^14 + t*x^10 + x^9 + t^2*x^5 + t*x^4 + 1\n"
        "t^2*x^11 + t*x^10 + x^6 + t^2*x^5 + t*x + 1 | "
        "t^2*x^14 + t^2*x^11 + x^9 + x^6 + t*x^4 + t*x",
    )
    assert b_matrix(spec, 1) == golden_b

    qc = qc_associate(spec, 1)
    golden_qc = parse_matrix(
        f,
        "x^9 + t*x^7 + x^6 + x^3 + t^2*x^2 + 1 | "
        "x^12 + t^2*x^11 + t*x^7 + x^6 + t^2*x^2 + t*x\n"
        "0 | x^15 + 1",
    )
    assert qc.gpm == golden_qc
    golden_qc_a = parse_matrix(
        f,
        "x^6 + t*x^4 + x^3 + t^2*x^2 + 1 | x^3 + t^2*x^2 + t*x\n0 | 1",
    )
    assert qc.identical == golden_qc_a

    golden_qc_dual = parse_matrix(
        f,
        "x^6 + t*x^4 + x^3 + t^2*x^2 + 1 | 0\nt^2*x^14 + t*x^13 + x^12 | 1",
    )
    assert dual_gpm(qc, 1) == golden_qc_dual

    assert hull_dimension(spec, 1) == 1  # cross-asserts both formulas

    golden_hull = parse_matrix(
        f,
        "x^2 + t^2*x + t | t*x^4 + x^3 + t^2*x^2 + t*x + 1\n0 | x^5 + t",
    )
    gpm = hull_gpm(spec, 1)
    assert gpm == golden_hull
    assert gpm == hnf(golden_qc_dual @ reduced.gpm).hnf

    assert min_distance(spec) == 2
    assert spec.length - spec.dimension + 1 == 2

    hull_spec = CodeSpec(f, spec.blocks, spec.lambdas, gpm)
    assert rowspace_equal(
        expanded_matrix(hull_spec),
        hull_by_definition(expanded_matrix(spec), 1),
    )


def test_acceptance_5_f9_mt_hull():
    spec = load("mt_f9.spec")
    f = spec.field
    assert spec.order_n() == 12
    assert spec.dimension == 8

    qc = qc_associate(spec, 1)
    golden_qc = parse_matrix(
        f,
        "x^8 + x^6 + 2*x^2 + 2 | "
        "t^6*x^7 + t^7*x^6 + 2*x^5 + x^4 + 2*x^3 + x^2 + t*x + t^6 | "
        "x^11 + x^10 + t^7*x^9 + t^2*x^8 + t^2*x^7 + t*x^6 + 2*x^5 + 2*x^4 + "
        "t^3*x^3 + t^6*x^2 + t^6*x + t^5\n"
        "0 | x^9 + 2*x^8 + x^5 + 2*x^4 + x + 2 | 0\n"
        "0 | 0 | x^12 + 2",
    )
    assert qc.gpm == golden_qc

    golden_qc_a = parse_matrix(
        f,
        "x^4 + 2*x^2 + 1 | t^2*x^2 + 2*x + t^6 | 2*x^3 + 2*x^2 + t^6*x + t^5\n"
        "0 | x^3 + x^2 + x + 1 | 0\n"
        "0 | 0 | 1",
    )
    assert qc.identical == golden_qc_a

    golden_qc_dual = parse_matrix(
        f,
        "x^4 + 2*x^2 + 1 | 0 | 0\n"
        "t^2*x^3 + 2*x^2 + t^6*x | x^3 + x^2 + x + 1 | 0\n"
        "t^2*x^11 + 2*x^10 + 2*x^9 + t^7 | 0 | 1",
    )
    assert dual_gpm(qc, 1) == golden_qc_dual

    gpm = hull_gpm(spec, 1)
    golden_hull = parse_matrix(
        f,
        "x^2 + t^2*x + 2 | 0 | x^5 + t^2*x^4 + 2*x^3 + t^6*x^2 + x + t^2\n"
        "0 | x^4 + 2 | 0\n"
        "0 | 0 | x^6 + 1",
    )
    assert gpm == golden_hull
    assert [gpm[i, i] for i in range(3)] == [
        parse_poly(f, "x^2 + t^2*x + 2"),
        parse_poly(f, "x^4 + 2"),
        parse_poly(f, "x^6 + 1"),
    ]

    started = time.time()
    assert min_distance(spec) == 4
    assert time.time() - started < 60.0


def test_acceptance_6_random_property_suite():
    rng = make_rng(2024)
    cases = 0
    while cases < 200:
        spec, kappa = random_spec(rng)
        f = spec.field
        reduced = spec.reduced()
        n_order = spec.order_n()
        rel = Poly.monomial(f, 1, n_order) - Poly.one(f)
        dense = expanded_matrix(reduced)

        # (a) three-way hull dimension agreement
        dim = hull_dimension(reduced, kappa)
        assert dim == reduced.dimension - hongwei_rank(dense, kappa)

        # (b) oracle hull row space equals the expanded hull generator matrix
        gpm = hull_gpm(reduced, kappa)
        dense_hull = hull_by_definition(dense, kappa)
        assert dense_hull.nrows == dim
        if dim > 0:
            hull_spec = CodeSpec(f, spec.blocks, spec.lambdas, gpm)
            assert rowspace_equal(expanded_matrix(hull_spec), dense_hull)

        # (c) shifted-inner-product identity on random vector pairs
        quotients = shift_quotients(reduced, n_order)
        for _ in range(5):
            a = [f.element_from_index(rng.randrange(f.q)) for _ in range(spec.length)]
            b = [f.element_from_index(rng.randrange(f.q)) for _ in range(spec.length)]
            pa, pb = reduced.phi(a).parts, reduced.phi(b).parts
            lhs = Poly.zero(f)
            for j in range(spec.num_blocks):
                term = pa[j] * quotients[j] * sigma_poly(
                    reverse_scaled(pb[j], spec.blocks[j]), kappa
                )
                lhs = lhs + term
            lhs = lhs % rel
            shifted = tuple(b)
            coeffs = []
            for _ in range(n_order):
                coeffs.append(galois_inner(a, shifted, kappa))
                shifted = reduced.shift(shifted)
            assert lhs == Poly(f, coeffs)

        # (d) the generator matrix is orthogonal to the dual generator matrix
        h_kappa = dual_gpm(reduced, kappa)
        star_h = PolyMatrix(
            f,
            [
                [
                    reverse_scaled(h_kappa[i, j], spec.blocks[j])
                    for j in range(spec.num_blocks)
                ]
                for i in range(spec.num_blocks)
            ],
        )
        prod = (
            reduced.gpm
            @ PolyMatrix.diagonal(f, quotients)
            @ star_h.sigma(kappa).transpose()
        )
        assert not prod.map(lambda p: laurent_reduce(p, n_order, f.one))

        # (e) rows of the dense gram matrix interleave into the rows of B
        bmat = b_matrix(reduced, kappa)
        gram = dense.matmul(dense.sigma(kappa).transpose())
        ell = spec.num_blocks
        for i in range(ell):
            for j in range(ell):
                interleaved = Poly(
                    f,
                    [
                        f.element_from_index(int(gram.data[i, iota * ell + j]))
                        for iota in range(n_order)
                    ],
                )
                assert interleaved == bmat[i, j]

        # (f) dual dimension complement and full pairwise orthogonality
        deltas = dual_shift_constants(reduced, kappa)
        dual_spec = CodeSpec(f, spec.blocks, deltas, h_kappa)
        assert reduced.dimension + dual_spec.dimension == spec.length
        if reduced.dimension and dual_spec.dimension:
            dual_dense = expanded_matrix(dual_spec)
            for crow in dense.row_basis().to_rows():
                for drow in dual_dense.row_basis().to_rows():
                    assert not galois_inner(crow, drow, kappa)

        # (g) the normal form is invariant under unimodular premixing
        u = random_unimodular(rng, f, spec.num_blocks)
        assert hnf(u @ spec.gpm).hnf == reduced.gpm

        cases += 1
    assert cases >= 200


def test_acceptance_7_degenerate_cases():
    rng = make_rng(77)

    # single-block constacyclic codes against direct divisor reasoning
    checked = 0
    while checked < 25:
        q = rng.choice([2, 3, 4, 7, 9, 16])
        f = field(q)
        m = rng.randint(2, 8)
        lam = f.one if rng.random() < 0.5 else -f.one
        rel = Poly.monomial(f, 1, m) - Poly(f, (lam,))
        seed_poly = Poly(
            f, [f.element_from_index(rng.randrange(f.q)) for _ in range(m)]
        )
        if not seed_poly:
            continue
        g = gcd(seed_poly, rel)
        spec = smallest_mt_containing(f, [m], [lam], [[g]])
        assert spec.gpm[0, 0] == g

        h = rel // g
        h_rev = reverse_scaled(h, h.degree).monic()
        dual = dual_gpm(spec, 0)
        if spec.dimension == spec.length:
            assert dual[0, 0] == rel
        else:
            assert dual[0, 0].monic() == h_rev

        hull_generator = (g * h_rev) // gcd(g, h_rev)
        if hull_generator.degree > m:
            hull_generator = rel
        gpm = hull_gpm(spec, 0)
        assert gpm[0, 0] == hull_generator.monic()
        assert hull_dimension(spec, 0) == m - hull_generator.degree
        checked += 1

    # Euclidean specialization: kappa = 0 inner product is the dot product,
    # the assumption reduces to lambda^2 = 1, and the dual generator matrix
    # needs no conjugation
    for _ in range(10):
        spec, _ = random_spec(rng)
        f = spec.field
        assert assumption_holds(spec, 0) == all(
            lam * lam == f.one for lam in spec.lambdas
        )
        a = [f.element_from_index(rng.randrange(f.q)) for _ in range(spec.length)]
        b = [f.element_from_index(rng.randrange(f.q)) for _ in range(spec.length)]
        dot = f.zero
        for x, y in zip(a, b):
            dot = dot + x * y
        assert galois_inner(a, b, 0) == dot
        h = dual_gpm(spec, 0)
        assert h.sigma(f.e) == h

    # the zero code: generator matrix of relations
    f = field(4)
    relations = [
        Poly.monomial(f, 1, 3) - Poly.one(f),
        Poly.monomial(f, 1, 2) - Poly.one(f),
    ]
    zero_spec = CodeSpec(f, (3, 2), (f.one, f.one), PolyMatrix.diagonal(f, relations))
    assert zero_spec.dimension == 0
    report = classify(zero_spec, 1)
    assert report.classification == SELF_ORTHOGONAL
    assert report.dim_hull == 0
    assert hull_gpm(zero_spec, 1) == zero_spec.relation_matrix()

    # the full space: dual is the zero code, hull is the zero code
    full_spec = CodeSpec(f, (3, 2), (f.one, f.one), PolyMatrix.identity(f, 2))
    assert full_spec.dimension == 5
    dual = dual_gpm(full_spec, 1)
    assert CodeSpec(f, (3, 2), (f.one, f.one), dual).dimension == 0
    assert hull_dimension(full_spec, 1) == 0
    assert hull_gpm(full_spec, 1) == full_spec.relation_matrix()
    assert min_distance(full_spec) == 1
