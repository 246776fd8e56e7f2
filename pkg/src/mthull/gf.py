"""Exact arithmetic in F_{p^e} with a caller-supplied defining modulus.

Elements are coordinate vectors in the basis 1, theta, ..., theta^(e-1),
where theta is a root of the given irreducible modulus over F_p.  The
modulus is required input for e > 1 so that printed matrices are
reproducible bit-for-bit in the intended basis.
"""

from __future__ import annotations

import re

from .errors import BadDegree, DivisionByZero, NotIrreducible, NotPrime, ZeroElement


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- small helpers on integer polynomials mod p (coeff index = exponent) ---

def _ip_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _ip_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_trim(out)


def _ip_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and _ip_trim(a):
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * mi) % p
        _ip_trim(a)
    return a


def _ip_powmod(base, exp, m, p):
    result = [1]
    base = _ip_mod(base, m, p)
    while exp:
        if exp & 1:
            result = _ip_mod(_ip_mul(result, base, p), m, p)
        base = _ip_mod(_ip_mul(base, base, p), m, p)
        exp >>= 1
    return result


def _ip_gcd(a, b, p):
    a, b = _ip_trim(list(a)), _ip_trim(list(b))
    while b:
        a = _ip_mod(a, b, p)
        a, b = b, _ip_trim(a)
    return a


def _is_irreducible(modulus, p, e):
    """Irreducibility of a monic degree-e polynomial over F_p.

    Exhaustive root/factor search for e <= 4; gcd with x^{p^i} - x otherwise.
    """
    if e == 1:
        return True
    # no linear factors
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0:
            return False
    if e <= 3:
        return True
    if e == 4:
        # only remaining possibility is a product of two irreducible quadratics
        for b in range(p):
            for c in range(p):
                quad = [c, b, 1]
                if any(
                    (r * r + b * r + c) % p == 0 for r in range(p)
                ):
                    continue
                q, rem = _ip_divmod_exact(modulus, quad, p)
                if not rem:
                    return False
        return True
    # Rabin's test: x^{p^e} == x mod f, and gcd(x^{p^{e/r}} - x, f) = 1
    x = [0, 1]
    xq = _ip_powmod(x, p**e, modulus, p)
    diff = _ip_trim([(a - b) % p for a, b in zip_pad(xq, x)])
    if diff:
        return False
    for r in set(_prime_factors(e)):
        xr = _ip_powmod(x, p ** (e // r), modulus, p)
        diff = _ip_trim([(a - b) % p for a, b in zip_pad(xr, x)])
        g = _ip_gcd(diff, modulus, p)
        if len(g) - 1 > 0:
            return False
    return True


def zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _ip_divmod_exact(a, b, p):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while _ip_trim(a) and len(a) >= len(b):
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        q[shift] = factor
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * bi) % p
        _ip_trim(a)
    return q, a


_MODULUS_TERM = re.compile(r"^\s*(?:(\d+)\s*\*?\s*)?(t(?:\s*\^\s*(\d+))?)?\s*$")


def parse_modulus(text: str, p: int):
    """Parse a defining-polynomial string in `t`, e.g. ``t^4 + t + 1``."""
    coeffs = {}
    s = text.replace("-", "+-")
    for raw in s.split("+"):
        term = raw.strip()
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        m = _MODULUS_TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise BadDegree(f"cannot parse modulus term {raw!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            k = 0
        elif m.group(3) is None:
            k = 1
        else:
            k = int(m.group(3))
        if neg:
            c = -c
        coeffs[k] = (coeffs.get(k, 0) + c) % p
    deg = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


class FieldElement:
    """An element of F_{p^e} in the theta-basis. Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(c % field.p for c in coeffs)
        if len(self.coeffs) != field.e:
            raise BadDegree(f"element needs {field.e} coordinates")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, [(a + b) % p for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, [(a - b) % p for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, [(-a) % p for a in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        f = self.field
        p, e = f.p, f.e
        prod = [0] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        # reduce using theta^e = -(m_0 + m_1 theta + ... + m_{e-1} theta^{e-1})
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * f.modulus[i]) % p
        return FieldElement(f, prod[:e])

    def inv(self):
        if not self:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, FieldElement) or (
            other.field is not self.field and other.field != self.field
        ):
            raise TypeError("field elements belong to different fields")

    def __repr__(self):
        return f"FieldElement({self.field}, {format_element(self)!r})"


class Field:
    """F_{p^e} with a fixed defining modulus.

    Immutable; safe to share between threads.  The same object must be
    reused for all elements that interact (identity comparison is used).
    """

    def __init__(self, p: int, e: int, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise BadDegree("extension degree must be >= 1")
        if e == 1:
            modulus = (0, 1)  # implicit x - 0; never consulted
        elif modulus is None:
            raise BadDegree("a defining modulus is required for e > 1")
        elif isinstance(modulus, str):
            modulus = parse_modulus(modulus, p)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != e + 1:
            raise BadDegree(f"modulus must have degree {e}")
        if modulus[-1] != 1:
            raise BadDegree("modulus must be monic")
        if e > 1 and not _is_irreducible(list(modulus), p, e):
            raise NotIrreducible("modulus is reducible over the prime field")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.zero = FieldElement(self, (0,) * e)
        self.one = FieldElement(self, (1,) + (0,) * (e - 1))
        self.theta = (
            FieldElement(self, (0, 1) + (0,) * (e - 2)) if e > 1 else self.zero
        )
        self._tables = None

    def element(self, value) -> FieldElement:
        """Build an element from an int (prime-subfield) or coordinate sequence."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            return FieldElement(self, (value,) + (0,) * (self.e - 1))
        return FieldElement(self, tuple(value))

    def elements(self):
        """All q elements, in base-p index order (0 first, 1 second)."""
        for idx in range(self.q):
            yield self.element_from_index(idx)

    def element_from_index(self, idx: int) -> FieldElement:
        coeffs = []
        for _ in range(self.e):
            coeffs.append(idx % self.p)
            idx //= self.p
        return FieldElement(self, coeffs)

    def index(self, a: FieldElement) -> int:
        idx = 0
        for c in reversed(a.coeffs):
            idx = idx * self.p + c
        return idx

    def frobenius(self, a: FieldElement, k: int) -> FieldElement:
        """a^{p^k}; k is reduced mod e."""
        k %= self.e
        return a ** (self.p**k)

    def mult_order(self, a: FieldElement) -> int:
        if not a:
            raise ZeroElement("the zero element has no multiplicative order")
        n = self.q - 1
        for t in sorted(d for d in range(1, n + 1) if n % d == 0):
            if a**t == self.one:
                return t
        raise AssertionError("unreachable: order divides q - 1")

    def tables(self):
        """Dense index-based arithmetic tables (numpy); built lazily.

        Used by the dense-linear-algebra oracle and the distance kernels.
        """
        if self._tables is None:
            self._tables = FieldTables(self)
        return self._tables

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e})"


class FieldTables:
    """Index-based add/mul/neg/inv/frobenius tables for a small field."""

    MAX_Q = 4096

    def __init__(self, field: Field):
        import numpy as np

        q = field.q
        if q > self.MAX_Q:
            raise BadDegree(f"arithmetic tables limited to q <= {self.MAX_Q}")
        dtype = np.uint8 if q <= 256 else np.uint16
        elems = [field.element_from_index(i) for i in range(q)]
        self.field = field
        self.q = q
        self.dtype = dtype
        self.add = np.zeros((q, q), dtype=dtype)
        self.mul = np.zeros((q, q), dtype=dtype)
        self.neg = np.zeros(q, dtype=dtype)
        self.inv = np.zeros(q, dtype=dtype)
        for i, a in enumerate(elems):
            self.neg[i] = field.index(-a)
            if a:
                self.inv[i] = field.index(a.inv())
            for j, b in enumerate(elems):
                self.add[i, j] = field.index(a + b)
                self.mul[i, j] = field.index(a * b)
        # frob[k, i] = index of elems[i]^{p^k}
        self.frob = np.zeros((field.e, q), dtype=dtype)
        for k in range(field.e):
            for i, a in enumerate(elems):
                self.frob[k, i] = field.index(field.frobenius(a, k))


def make_field(p: int, e: int, modulus=None) -> Field:
    """Construct and validate F_{p^e} with the given defining modulus."""
    return Field(p, e, modulus)


def format_modulus(field: Field) -> str:
    """The defining modulus as a polynomial in ``t``."""
    terms = []
    for k in range(field.e, -1, -1):
        c = field.modulus[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "t" if k == 1 else f"t^{k}"
            terms.append(var if c == 1 else f"{c}*{var}")
    return " + ".join(terms) if terms else "0"


def format_element(a: FieldElement, theta_power: bool = False) -> str:
    """Canonical theta-basis string, e.g. ``t^2 + 2*t``.

    With ``theta_power`` and theta generating the multiplicative group, a
    ``t^k`` annotation is appended for nonzero non-rational elements.
    """
    terms = []
    for k in range(a.field.e - 1, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            var = "t" if k == 1 else f"t^{k}"
            terms.append(var if c == 1 else f"{c}*{var}")
    s = " + ".join(terms) if terms else "0"
    if theta_power and a and any(a.coeffs[1:]):
        f = a.field
        x = f.theta
        for k in range(1, f.q):
            if x == a:
                s += f"  (= t^{k})"
                break
            x = x * f.theta
    return s
