import pytest

from mthull.errors import BothZero, DegreeTooLarge, DivisionByZero
from mthull.polyring import (
    LaurentPoly,
    Poly,
    format_poly,
    gcd,
    laurent_reduce,
    parse_element,
    parse_poly,
    reverse_scaled,
    sigma_poly,
)

from helpers import field, make_rng, random_poly


def test_divmod_invariant():
    rng = make_rng(11)
    f = field(9)
    for _ in range(100):
        a = random_poly(rng, f, 8)
        b = random_poly(rng, f, 5)
        if not b:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_division_by_zero():
    f = field(4)
    with pytest.raises(DivisionByZero):
        divmod(Poly.one(f), Poly.zero(f))


def test_gcd_properties():
    rng = make_rng(12)
    f = field(7)
    for _ in range(50):
        a = random_poly(rng, f, 6)
        b = random_poly(rng, f, 6)
        if not a and not b:
            continue
        g = gcd(a, b)
        assert not g or g.lead() == f.one
        if a:
            assert not (a % g)
        if b:
            assert not (b % g)
    with pytest.raises(BothZero):
        gcd(Poly.zero(f), Poly.zero(f))


def test_sigma_poly_is_coefficientwise():
    f = field(16)
    p = parse_poly(f, "t^5*x^2 + t*x + 1")
    s = sigma_poly(p, 1)
    assert s.coeff(2) == f.frobenius(f.theta**5, 1)
    assert s.coeff(1) == f.frobenius(f.theta, 1)
    assert s.coeff(0) == f.one


def test_reverse_scaled():
    f = field(7)
    p = parse_poly(f, "x^2 + 3*x + 5")
    r = reverse_scaled(p, 4)
    assert r == parse_poly(f, "5*x^4 + 3*x^3 + x^2")
    with pytest.raises(DegreeTooLarge):
        reverse_scaled(p, 1)


def test_laurent_reduce_negative_exponents():
    f = field(4)
    lam = f.theta
    # x^{-1} = lam^{-1} x^{m-1} in F_q[x]/(x^m - lam)
    lp = LaurentPoly(f, {-1: f.one})
    r = laurent_reduce(lp, 5, lam)
    assert r == Poly.monomial(f, 1, 4) * lam.inv()


def test_laurent_reduce_matches_poly_mod():
    rng = make_rng(13)
    f = field(9)
    lam = f.element(2)
    rel = Poly.monomial(f, 1, 4) - Poly(f, (lam,))
    for _ in range(50):
        p = random_poly(rng, f, 10)
        assert laurent_reduce(p, 4, lam) == p % rel


def test_parse_format_roundtrip():
    rng = make_rng(14)
    for q in (2, 7, 9, 16):
        f = field(q)
        for _ in range(50):
            p = random_poly(rng, f, 6)
            assert parse_poly(f, format_poly(p)) == p


def test_parse_rejects_garbage():
    f = field(4)
    with pytest.raises(ValueError):
        parse_poly(f, "x +")
    with pytest.raises(ValueError):
        parse_poly(f, "y^2")
    with pytest.raises(ValueError):
        parse_poly(f, "(x + 1")
    with pytest.raises(ValueError):
        parse_element(f, "x + 1")


def test_parse_theta_powers_reduce():
    f = field(16)
    assert parse_element(f, "t^5") == f.theta**5
    assert parse_element(f, "t^4 + t + 1") == f.zero
