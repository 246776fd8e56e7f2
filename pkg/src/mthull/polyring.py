"""Dense univariate polynomials over F_q, plus Laurent helpers.

Includes the coefficientwise Frobenius, the substitution x -> 1/x scaled
back to a polynomial, and reduction in quotients F_q[x]/(x^m - lambda)
where x is invertible.
"""

from __future__ import annotations

import re

from .errors import BothZero, DegreeTooLarge, DivisionByZero
from .gf import Field, FieldElement


class Poly:
    """Polynomial over F_q; coeffs[i] is the coefficient of x^i.

    Normalized: no trailing zeros, the zero polynomial has an empty
    coefficient tuple and degree -1 (stand-in for minus infinity).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (field.element(c),))

    @classmethod
    def monomial(cls, field, c, k):
        return cls(field, (field.zero,) * k + (field.element(c),))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.element(i) for i in ints])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        return Poly(
            self.field,
            [self.coeff(i) + other.coeff(i) for i in range(n)] or [z],
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Poly(self.field, [c * other for c in self.coeffs])
        if not self or not other:
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __divmod__(self, other):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.lead().inv()
        quo = [self.field.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            factor = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            quo[shift] = factor
            for i, b in enumerate(other.coeffs):
                rem[i + shift] = rem[i + shift] - factor * b
            while rem and not rem[-1]:
                rem.pop()
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self:
            return self
        return self * self.lead().inv()

    def shift(self, k: int):
        """Multiply by x^k (k >= 0)."""
        if not self:
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def evaluate(self, point: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def divrem(f: Poly, g: Poly):
    """f = q*g + r with deg r < deg g; exact arithmetic."""
    return divmod(f, g)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def sigma_poly(f: Poly, k: int) -> Poly:
    """Coefficientwise Frobenius power a -> a^{p^k}."""
    fld = f.field
    return Poly(fld, [fld.frobenius(c, k) for c in f.coeffs])


def reverse_scaled(f: Poly, d: int) -> Poly:
    """x^d * f(1/x), a genuine polynomial of degree <= d; requires d >= deg f."""
    if f and d < f.degree:
        raise DegreeTooLarge(f"need d >= deg f = {f.degree}, got {d}")
    if not f:
        return f
    out = [f.field.zero] * (d + 1)
    for i, c in enumerate(f.coeffs):
        out[d - i] = c
    return Poly(f.field, out)


class LaurentPoly:
    """Sparse Laurent polynomial: exponent (possibly negative) -> coefficient."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    @classmethod
    def from_poly(cls, f: Poly):
        return cls(f.field, {i: c for i, c in enumerate(f.coeffs)})

    def substitute_inverse(self):
        """Replace x by 1/x (negate all exponents)."""
        return LaurentPoly(self.field, {-k: c for k, c in self.terms.items()})

    def shifted(self, d: int):
        """Multiply by x^d (d may be negative)."""
        return LaurentPoly(self.field, {k + d: c for k, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, self.field.zero) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentPoly(self.field, out)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return LaurentPoly(self.field, {k: c * other for k, c in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                s = out.get(k, self.field.zero) + a * b
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return LaurentPoly(self.field, out)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self.terms})"


def laurent_reduce(f: LaurentPoly | Poly, m: int, lam: FieldElement) -> Poly:
    """Canonical representative of f in F_q[x]/(x^m - lam), degree < m.

    Negative exponents are cleared by multiplying with x^{s m} lam^{-s}
    (a no-op in the quotient, since x^m = lam there), then reducing.
    """
    if isinstance(f, Poly):
        f = LaurentPoly.from_poly(f)
    if not lam:
        raise DivisionByZero("shift constant must be nonzero")
    field = f.field
    if not f.terms:
        return Poly.zero(field)
    min_exp = min(f.terms)
    s = 0
    if min_exp < 0:
        s = (-min_exp + m - 1) // m
    scale = lam.inv() ** s
    out = [field.zero] * m
    for k, c in f.terms.items():
        k += s * m
        c = c * scale
        out[k % m] = out[k % m] + c * lam ** (k // m)
    return Poly(field, out)


# ---------------------------------------------------------------------------
# string grammar shared by the CLI and golden files
#
#   terms `c*x^k`, `x^k`, `c` joined by +/-, coefficients written over `t`
#   (multi-term coefficients parenthesized); whitespace-insensitive.
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[tx]|\^|\*|\+|\-|\(|\))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, field: Field, tokens):
        self.field = field
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse_expr(self) -> Poly:
        if self.peek() == "-":
            self.next()
            acc = -self.parse_term()
        else:
            acc = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()
            t = self.parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def parse_term(self) -> Poly:
        acc = self.parse_factor()
        while self.peek() == "*":
            self.next()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> Poly:
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(tok)
        return base

    def parse_atom(self) -> Poly:
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok.isdigit():
            return Poly.constant(self.field, int(tok))
        if tok == "t":
            return Poly(self.field, (self.field.theta,))
        if tok == "x":
            return Poly.x(self.field)
        if tok == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {tok!r}")


def parse_poly(field: Field, text: str) -> Poly:
    parser = _Parser(field, _tokenize(text))
    result = parser.parse_expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in {text!r}")
    return result


def parse_element(field: Field, text: str) -> FieldElement:
    p = parse_poly(field, text)
    if p.degree > 0:
        raise ValueError(f"{text!r} is not a field element (contains x)")
    return p.coeff(0)


def format_element(a: FieldElement) -> str:
    from .gf import format_element as _fmt

    return _fmt(a)


def _coeff_str(c: FieldElement):
    """(string, is_single_term) for a coefficient in front of x^k."""
    s = format_element(c)
    return s, ("+" not in s and "-" not in s)


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if not c:
            continue
        xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        cs, single = _coeff_str(c)
        if k == 0:
            parts.append(cs)
        elif cs == "1":
            parts.append(xpart)
        elif single:
            parts.append(f"{cs}*{xpart}")
        else:
            parts.append(f"({cs})*{xpart}")
    return " + ".join(parts)
