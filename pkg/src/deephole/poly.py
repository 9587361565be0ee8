"""Univariate polynomial algebra over GF(q).

Polynomials are immutable coefficient tuples, low degree first, with no
trailing zeros; the zero polynomial has an empty tuple and degree -inf.
Coefficients are field-element encodings (see ``gf``), which is also the
serialization format used in reports.
"""

from __future__ import annotations

import itertools

from deephole.gf import GF, prime_factors

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(not 0 <= c < field.q for c in cs):
            raise ValueError("coefficient out of range")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: GF, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: GF, deg: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * deg + (c,))

    @classmethod
    def from_roots(cls, field: GF, roots) -> "Poly":
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    # -- structure --------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                parts.append(xi if c == 1 else f"{c}*{xi}")
        return " + ".join(parts)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    # -- ring operations ------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("mismatched fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        return Poly(
            f, (f.add(x, y) for x, y in itertools.zip_longest(a, b, fillvalue=0))
        )

    def __sub__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        return Poly(
            f, (f.sub(x, y) for x, y in itertools.zip_longest(a, b, fillvalue=0))
        )

    def __neg__(self):
        f = self.field
        return Poly(f, (f.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, (f.mul(c, x) for x in self.coeffs))

    def monic(self) -> "Poly":
        if not self:
            raise ValueError("zero polynomial cannot be made monic")
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = f.inv(other.lead)
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = f.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - db
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, oc))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base^e reduced modulo mod, by squaring."""
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with g = s*a + t*b and g monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        raise ValueError("gcd(0, 0) is undefined")
    c = f.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def mod_inverse(a: Poly, mod: Poly) -> Poly:
    """Inverse of a modulo mod; requires gcd(a, mod) = 1."""
    g, s, _ = xgcd(a, mod)
    if g.degree != 0:
        raise ValueError(f"{a!r} is not invertible modulo {mod!r}")
    return s % mod


def distinct_roots(f: Poly) -> set[int]:
    """Exact root set {x in GF(q) : f(x) = 0}, by full scan."""
    if not f:
        raise ValueError("zero polynomial vanishes everywhere")
    return {x for x in range(f.field.q) if f(x) == 0}


def splits_into_distinct_linear(f: Poly) -> bool:
    return len(distinct_roots(f)) == f.degree


def is_irreducible(f: Poly) -> bool:
    """Irreducibility of a monic polynomial of degree >= 1.

    Degrees 2 and 3 reduce to root-freeness; higher degrees use the
    gcd-with-x^(q^i)-x criterion.
    """
    if not f.is_monic:
        raise ValueError("irreducibility test expects a monic polynomial")
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility is undefined for constants")
    if d == 1:
        return True
    if d <= 3:
        return not distinct_roots(f)
    field = f.field
    x = Poly.x(field)
    if pow_mod(x, field.q**d, f) != x % f:
        return False
    for t in prime_factors(d):
        g = pow_mod(x, field.q ** (d // t), f) - x
        if not g or gcd(f, g).degree != 0:
            return False
    return True


def monic_irreducibles(field: GF, d: int) -> list[Poly]:
    """All monic irreducibles of degree d, ascending by coefficient encoding
    (coefficients read as base-q digits, low degree first)."""
    q = field.q
    out = []
    for code in range(q**d):
        coeffs = [(code // q**i) % q for i in range(d)] + [1]
        f = Poly(field, coeffs)
        if is_irreducible(f):
            out.append(f)
    return out


def interpolate(field: GF, points) -> Poly:
    """Unique polynomial of degree < len(points) through the given points."""
    pts = list(points)
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")
    acc = Poly.zero(field)
    for i, (xi, yi) in enumerate(pts):
        num = Poly.one(field)
        den = 1
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            num = num * Poly(field, (field.neg(xj), 1))
            den = field.mul(den, field.sub(xi, xj))
        acc = acc + num.scale(field.div(yi, den))
    return acc


class RationalFunction:
    """num/den with den monic and nonzero, evaluated pointwise."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if num.field != den.field:
            raise ValueError("mismatched fields")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not den.is_monic:
            raise ValueError("denominator must be monic")
        self.num = num
        self.den = den

    @property
    def field(self) -> GF:
        return self.num.field

    def __call__(self, x: int) -> int:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.field.div(self.num(x), d)

    def has_pole(self) -> bool:
        return bool(distinct_roots(self.den))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"
