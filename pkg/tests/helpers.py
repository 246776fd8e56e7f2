"""Shared helpers for the test suite: small fields and random code specs."""

import random

from mthull.gf import make_field
from mthull.mtcode import CodeSpec, smallest_mt_containing
from mthull.polymat import PolyMatrix
from mthull.polyring import Poly

FIELDS = {
    2: (2, 1, None),
    3: (3, 1, None),
    4: (2, 2, "t^2 + t + 1"),
    7: (7, 1, None),
    9: (3, 2, "t^2 + 2*t + 2"),
    16: (2, 4, "t^4 + t + 1"),
}

_cache = {}


def field(q):
    if q not in _cache:
        p, e, modulus = FIELDS[q]
        _cache[q] = make_field(p, e, modulus)
    return _cache[q]


def compatible_lambdas(f, kappa):
    """Nonzero constants lambda with lambda^(p^(e-kappa)+1) = 1."""
    exp = f.p ** ((f.e - kappa) % f.e) + 1
    return [a for a in f.elements() if a and a**exp == f.one]


def random_poly(rng, f, max_degree):
    degree = rng.randint(-1, max_degree)
    return Poly(f, [f.element_from_index(rng.randrange(f.q)) for _ in range(degree + 1)])


def random_spec(rng, max_n_order=24, max_total=60):
    """Random code spec whose shift constants satisfy the duality assumption
    for the returned kappa.  Rejection-sampled to keep the shift order small
    enough for dense cross-checks."""
    while True:
        q = rng.choice(list(FIELDS))
        f = field(q)
        kappa = rng.randrange(f.e)
        pool = compatible_lambdas(f, kappa)
        ell = rng.randint(1, 3)
        blocks = [rng.randint(1, 8) for _ in range(ell)]
        lambdas = [rng.choice(pool) for _ in range(ell)]
        probe = CodeSpec(
            f, blocks, lambdas,
            PolyMatrix.diagonal(
                f,
                [
                    Poly.monomial(f, 1, m) - Poly(f, (lam,))
                    for m, lam in zip(blocks, lambdas)
                ],
            ),
        )
        n_order = probe.order_n()
        if n_order > max_n_order or n_order * ell > max_total:
            continue
        vectors = []
        for _ in range(rng.randint(1, ell)):
            vectors.append([random_poly(rng, f, m - 1) for m in blocks])
        spec = smallest_mt_containing(f, blocks, lambdas, vectors)
        return spec, kappa


def make_rng(seed):
    return random.Random(seed)
