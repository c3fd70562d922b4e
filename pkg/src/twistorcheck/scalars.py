"""Exact scalars: the field Q(i)(m, mb) of rational functions in the fiber
coordinate m and its formal conjugate mb.

``m`` and ``mb`` are independent symbols for differentiation; evaluation at a
point z substitutes m := z and mb := conj(z).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Dict, Iterable, List, Tuple, Union

__all__ = [
    "GaussianRational",
    "Polynomial",
    "RationalFunction",
    "PoleError",
    "field_op",
    "partial",
    "conjugate_scalar",
    "evaluate",
    "as_scalar",
    "M",
    "MB",
    "I",
    "ONE",
    "ZERO",
]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated on a zero of its denominator."""


Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """An element (a + b*i)/d of Q(i), stored with d > 0 and gcd(a, b, d) = 1."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: Union[int, Rational, str] = 0, im: Union[int, Rational, str] = 0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        g = gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @classmethod
    def _new(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def coerce(cls, x: Number) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        return cls(x)

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                other = GaussianRational(other)
            else:
                return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = other._a, other._b, other._d
        if d1 == d2:
            return GaussianRational._new(a1 + a2, b1 + b2, d1)
        return GaussianRational._new(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._new(-self._a, -self._b, self._d)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                other = GaussianRational(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                other = GaussianRational(other)
            else:
                return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = other._a, other._b, other._d
        if b1 == 0 and b2 == 0:
            return GaussianRational._new(a1 * a2, 0, d1 * d2)
        return GaussianRational._new(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational._new(a * d, -b * d, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                other = GaussianRational(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE_Q
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._new(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return _imag_str(im)
        sign = "-" if im < 0 else "+"
        return f"({re} {sign} {_imag_str(abs(im))})"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


ZERO_Q = GaussianRational._new(0, 0, 1)
ONE_Q = GaussianRational._new(1, 0, 1)
I_Q = GaussianRational._new(0, 1, 1)


# ---------------------------------------------------------------------------
# sparse bivariate polynomials

Exp = Tuple[int, int]


def _grlex_key(e: Exp):
    return (e[0] + e[1], e[0])


class Polynomial:
    """Sparse polynomial in (m, mb) over Q(i).

    ``terms`` maps exponent pairs (deg_m, deg_mb) to nonzero coefficients and
    must not be mutated after construction.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Exp, Number] = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[(int(e[0]), int(e[1]))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exp, GaussianRational]) -> "Polynomial":
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        c = GaussianRational.coerce(c)
        return cls._wrap({(0, 0): c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and (0, 0) in t)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0, 0), ZERO_Q)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def leading_exponent(self) -> Exp:
        """Leading exponent in graded-lex order with m > mb."""
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self) -> GaussianRational:
        return self.terms[self.leading_exponent()]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._wrap(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.terms or not other.terms:
            return Polynomial._wrap({})
        out: Dict[Exp, GaussianRational] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return Polynomial._wrap({e: c for e, c in out.items() if c})

    def scale(self, c: GaussianRational) -> "Polynomial":
        if not c:
            return Polynomial._wrap({})
        if c == ONE_Q:
            return self
        return Polynomial._wrap({e: v * c for e, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> "Polynomial":
        return Polynomial._wrap({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Polynomial":
        return Polynomial._wrap({(j, i): c.conjugate() for (i, j), c in self.terms.items()})

    def diff(self, var: int) -> "Polynomial":
        out = {}
        for (i, j), c in self.terms.items():
            k = (i, j)[var]
            if k:
                out[(i - 1, j) if var == 0 else (i, j - 1)] = c * k
        return Polynomial._wrap(out)

    def evaluate(self, x: GaussianRational, y: GaussianRational) -> GaussianRational:
        total = ZERO_Q
        xp: Dict[int, GaussianRational] = {}
        yp: Dict[int, GaussianRational] = {}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x ** i
            if j not in yp:
                yp[j] = y ** j
            total = total + c * xp[i] * yp[j]
        return total

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient().inverse())

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"

    def __str__(self):
        return format_polynomial(self)


# -- univariate helpers (polynomials in mb over Q(i), as {deg: coeff}) ------

def _u_deg(u):
    return max(u) if u else -1


def _u_sub_scaled(u, v, c, shift):
    """u - c * mb^shift * v, in a fresh dict."""
    out = dict(u)
    for k, x in v.items():
        k2 = k + shift
        s = out.get(k2, ZERO_Q) - c * x
        if s:
            out[k2] = s
        else:
            out.pop(k2, None)
    return out


def _u_mul(u, v):
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            out[i + j] = out.get(i + j, ZERO_Q) + a * b
    return {k: c for k, c in out.items() if c}


def _u_divmod(u, v):
    dv = _u_deg(v)
    inv = v[dv].inverse()
    q = {}
    r = dict(u)
    while r and _u_deg(r) >= dv:
        dr = _u_deg(r)
        c = r[dr] * inv
        q[dr - dv] = c
        r = _u_sub_scaled(r, v, c, dr - dv)
    return q, r


def _u_monic(u):
    if not u:
        return u
    inv = u[_u_deg(u)].inverse()
    return {k: c * inv for k, c in u.items()}


def _u_gcd(u, v):
    if u and v and _u_deg(u) > 0 and _u_deg(v) > 0 and _u_surely_coprime(u, v):
        return dict(_U_ONE)
    while v:
        u, v = v, _u_divmod(u, v)[1]
    return _u_monic(u)


_U_ONE = {0: ONE_Q}


def _u_is_one(u):
    return len(u) == 1 and u.get(0) == ONE_Q


# -- bivariate gcd over Q(i), viewing polynomials in Q(i)[mb][m] -----------

def _split(p: Polynomial):
    out: Dict[int, Dict[int, GaussianRational]] = {}
    for (i, j), c in p.terms.items():
        out.setdefault(i, {})[j] = c
    return out


def _join(P) -> Polynomial:
    return Polynomial._wrap({(i, j): c for i, u in P.items() for j, c in u.items()})


def _content(P):
    g = None
    for u in P.values():
        g = _u_monic(u) if g is None else _u_gcd(g, u)
        if _u_is_one(g):
            break
    return g


def _primitive(P, cont):
    if _u_is_one(cont):
        return P
    out = {}
    for i, u in P.items():
        q, r = _u_divmod(u, cont)
        assert not r
        out[i] = q
    return out


def _prem(A, B):
    """Pseudo-remainder of A by B in Q(i)[mb][m] (up to a factor lc(B)^k)."""
    db = max(B)
    lcb = B[db]
    R = dict(A)
    while R and max(R) >= db:
        dr = max(R)
        lr = R[dr]
        new = {}
        for i, u in R.items():
            if i != dr:
                new[i] = _u_mul(u, lcb)
        for i, u in B.items():
            if i == db:
                continue
            k = i + dr - db
            t = _u_mul(lr, u)
            cur = new.get(k, {})
            for e, c in t.items():
                s = cur.get(e, ZERO_Q) - c
                if s:
                    cur[e] = s
                else:
                    cur.pop(e, None)
            new[k] = cur
        R = {i: u for i, u in new.items() if u}
    return R


@lru_cache(maxsize=65536)
def _poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    F, G = _split(f), _split(g)
    cf, cg = _content(F), _content(G)
    c = _u_gcd(cf, cg)
    A, B = _primitive(F, cf), _primitive(G, cg)
    if max(A) < max(B):
        A, B = B, A
    while True:
        if max(B) == 0:
            H = {0: dict(_U_ONE)}
            break
        R = _prem(A, B)
        if not R:
            H = B
            break
        A, B = B, _primitive(R, _content(R))
    H = {i: _u_mul(u, c) for i, u in H.items()}
    return _join(H).monic()


# -- modular coprimality test ------------------------------------------------
# Reduce modulo the prime ideal (p, i - r) of Z[i] with p = 1 mod 4, substitute
# a value for one variable and take the univariate gcd over GF(p).  When the
# leading coefficients survive, the image gcd bounds the degree of the true
# gcd from above, so degree 0 in both variables proves gcd(f, g) = 1.

_MOD_P = 1_000_000_009
_MOD_I = next(
    r for r in (pow(x, (_MOD_P - 1) // 4, _MOD_P) for x in range(2, 100)) if r * r % _MOD_P == _MOD_P - 1
)
_MOD_POINTS = (918_273_645, 271_828_183)


def _mod_coeff(c: GaussianRational):
    if c._d % _MOD_P == 0:
        return None
    return (c._a + c._b * _MOD_I) * pow(c._d, -1, _MOD_P) % _MOD_P


def _mod_image(p: Polynomial, var: int, point: int):
    """Image in GF(p)[var] after substituting ``point`` for the other variable."""
    out: Dict[int, int] = {}
    for e, c in p.terms.items():
        x = _mod_coeff(c)
        if x is None:
            return None
        k = e[var]
        out[k] = (out.get(k, 0) + x * pow(point, e[1 - var], _MOD_P)) % _MOD_P
    return {k: v for k, v in out.items() if v}


def _mod_gcd_degree(u: Dict[int, int], v: Dict[int, int]) -> int:
    while v:
        dv = max(v)
        inv = pow(v[dv], -1, _MOD_P)
        r = dict(u)
        while r and max(r) >= dv:
            dr = max(r)
            c = r[dr] * inv % _MOD_P
            for k, x in v.items():
                k2 = k + dr - dv
                y = (r.get(k2, 0) - c * x) % _MOD_P
                if y:
                    r[k2] = y
                else:
                    r.pop(k2, None)
        u, v = v, r
    return max(u) if u else -1


def _u_surely_coprime(u, v) -> bool:
    """Univariate version: images keep their degree and have coprime gcd mod p."""
    iu, iv = {}, {}
    for src, dst in ((u, iu), (v, iv)):
        for k, c in src.items():
            x = _mod_coeff(c)
            if x is None:
                return False
            if x:
                dst[k] = x
    if max(iu, default=-1) != _u_deg(u) or max(iv, default=-1) != _u_deg(v):
        return False
    return _mod_gcd_degree(iu, iv) == 0


def _surely_coprime(f: Polynomial, g: Polynomial) -> bool:
    for var in (0, 1):
        df, dg = f.degree(var), g.degree(var)
        if df == 0 or dg == 0:
            continue
        for point in _MOD_POINTS:
            fu, gu = _mod_image(f, var, point), _mod_image(g, var, point)
            if fu is None or gu is None:
                return False
            if max(fu, default=-1) == df and max(gu, default=-1) == dg:
                if _mod_gcd_degree(fu, gu) != 0:
                    return False
                break
        else:
            return False
    return True


_FACTORS: List[Polynomial] = []


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic (graded-lex) gcd of two polynomials; gcd(0, 0) = 0."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(1)
    if f == g:
        return f.monic()
    # monomial-only factors are cheap to detect
    if len(f.terms) == 1 and len(g.terms) == 1:
        (e1,), (e2,) = f.terms, g.terms
        return Polynomial._wrap({(min(e1[0], e2[0]), min(e1[1], e2[1])): ONE_Q})
    if _surely_coprime(f, g):
        return Polynomial.constant(1)
    # gcd(f, g) = h * gcd(f/h, g/h) for any common divisor h: strip factors
    # seen before by exact division, then certify the cofactors coprime
    h = Polynomial.constant(1)
    for q in _FACTORS:
        while True:
            try:
                f2, g2 = poly_divexact(f, q), poly_divexact(g, q)
            except ArithmeticError:
                break
            f, g, h = f2, g2, h * q
        if f.is_constant() or g.is_constant():
            return h.monic()
    if _surely_coprime(f, g):
        return h.monic()
    if hash(f) > hash(g):
        f, g = g, f
    rest = _poly_gcd(f, g)
    if not rest.is_constant() and rest not in _FACTORS and len(_FACTORS) < 256:
        _FACTORS.append(rest)
    return (h * rest).monic()


def poly_divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f / g, which must divide exactly."""
    if g.is_constant():
        return f.scale(g.constant_term().inverse())
    lex = max(g.terms)
    lc_inv = g.terms[lex].inverse()
    r = dict(f.terms)
    q = {}
    gi, gj = lex
    while r:
        ri, rj = max(r)
        if ri < gi or rj < gj:
            raise ArithmeticError("polynomial division is not exact")
        c = r[(ri, rj)] * lc_inv
        di, dj = ri - gi, rj - gj
        q[(di, dj)] = c
        for (i, j), x in g.terms.items():
            e = (i + di, j + dj)
            s = r.get(e, ZERO_Q) - c * x
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return Polynomial._wrap(q)


# ---------------------------------------------------------------------------
# rational functions

class RationalFunction:
    """Canonical fraction num/den with gcd(num, den) = 1 and den monic under
    graded-lex order (m > mb).  Equal values have identical representations."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[Polynomial, Number] = 0, den: Union[Polynomial, Number] = 1):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        obj._hash = None
        return obj

    @classmethod
    def _canonical(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        """Wrap an already-reduced fraction, normalizing only the unit."""
        return cls._raw(*_normalize(num, den))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls._raw(p, _POLY_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den is _POLY_ONE or self.den == _POLY_ONE

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_term()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = as_scalar(other) if not isinstance(other, RationalFunction) else other
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RationalFunction._raw(a + c, _POLY_ONE)
        if b == d:
            n = a + c
            g = poly_gcd(n, b)
            if g.is_constant():
                return RationalFunction._canonical(n, b)
            return RationalFunction._canonical(poly_divexact(n, g), poly_divexact(b, g))
        g = poly_gcd(b, d)
        if g.is_constant():
            return RationalFunction._canonical(a * d + c * b, b * d)
        b1 = poly_divexact(b, g)
        d1 = poly_divexact(d, g)
        n = a * d1 + c * b1
        den = b1 * d
        h = poly_gcd(n, g)
        if not h.is_constant():
            n = poly_divexact(n, h)
            den = poly_divexact(den, h)
        return RationalFunction._canonical(n, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = as_scalar(other) if not isinstance(other, RationalFunction) else other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = as_scalar(other)
            if other is NotImplemented:
                return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return _RF_ZERO
        if b.is_constant() and d.is_constant():
            return RationalFunction._raw(a * c, _POLY_ONE)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_constant():
            a, d = poly_divexact(a, g1), poly_divexact(d, g1)
        if not g2.is_constant():
            c, b = poly_divexact(c, g2), poly_divexact(b, g2)
        return RationalFunction._canonical(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction._canonical(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = as_scalar(other)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num ** n, self.den ** n)

    def conjugate(self) -> "RationalFunction":
        return RationalFunction._canonical(self.num.conjugate(), self.den.conjugate())

    def diff(self, var: int) -> "RationalFunction":
        a, b = self.num, self.den
        da = a.diff(var)
        if b.is_constant():
            return RationalFunction._raw(da, b)
        db = b.diff(var)
        # d(a/b) = (a' b - a b') / b^2; gcd with b^2 only needs checking against b
        n = da * b - a * db
        if n.is_zero():
            return _RF_ZERO
        g = poly_gcd(n, b)
        den = b * b
        if not g.is_constant():
            n = poly_divexact(n, g)
            den = poly_divexact(den, g)
            g2 = poly_gcd(n, den)
            if not g2.is_constant():
                n = poly_divexact(n, g2)
                den = poly_divexact(den, g2)
        return RationalFunction._canonical(n, den)

    def evaluate(self, point: Number) -> GaussianRational:
        z = GaussianRational.coerce(point)
        zb = z.conjugate()
        d = self.den.evaluate(z, zb)
        if not d:
            raise PoleError(f"pole at m = {z}: denominator {format_polynomial(self.den)} vanishes")
        return self.num.evaluate(z, zb) / d

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == as_scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


def _normalize(num: Polynomial, den: Polynomial):
    lc = den.leading_coefficient()
    if lc == ONE_Q:
        return num, den
    inv = lc.inverse()
    return num.scale(inv), den.scale(inv)


_POLY_ONE = Polynomial.constant(1)
_RF_ZERO = RationalFunction._raw(Polynomial._wrap({}), _POLY_ONE)


def as_scalar(x) -> RationalFunction:
    """Coerce ints, Fractions, Gaussian rationals and polynomials to the field."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction.from_polynomial(x)
    if isinstance(x, (int, Fraction, GaussianRational)):
        return RationalFunction._raw(Polynomial.constant(x), _POLY_ONE)
    return NotImplemented


M = RationalFunction._raw(Polynomial._wrap({(1, 0): ONE_Q}), _POLY_ONE)
MB = RationalFunction._raw(Polynomial._wrap({(0, 1): ONE_Q}), _POLY_ONE)
I = RationalFunction._raw(Polynomial._wrap({(0, 0): I_Q}), _POLY_ONE)
ONE = RationalFunction._raw(_POLY_ONE, _POLY_ONE)
ZERO = _RF_ZERO

_VARS = {"m": 0, "mb": 1}


def field_op(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def partial(f: RationalFunction, var: str) -> RationalFunction:
    """Partial derivative with m and mb treated as independent variables."""
    try:
        idx = _VARS[var]
    except KeyError:
        raise ValueError(f"variable must be 'm' or 'mb', got {var!r}") from None
    return as_scalar(f).diff(idx)


def conjugate_scalar(f: RationalFunction) -> RationalFunction:
    return as_scalar(f).conjugate()


def evaluate(f: RationalFunction, point: Number) -> GaussianRational:
    return as_scalar(f).evaluate(point)


# ---------------------------------------------------------------------------
# text rendering in the expression syntax

def _format_coeff(c: GaussianRational) -> str:
    re, im = c.re, c.im
    if im == 0:
        return str(re)
    if re == 0:
        return _imag_str(im)
    sign = "-" if im < 0 else "+"
    return f"({re} {sign} {_imag_str(abs(im))})"


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("m" if i == 1 else f"m^{i}")
    if j:
        parts.append("mb" if j == 1 else f"mb^{j}")
    return "*".join(parts)


def _ordered_terms(p: Polynomial) -> Iterable[Tuple[Exp, GaussianRational]]:
    return sorted(p.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(_ordered_terms(p)):
        neg = (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0)
        if neg:
            c = -c
        mono = _format_monomial(i, j)
        if not mono:
            body = _format_coeff(c)
        elif c == ONE_Q:
            body = mono
        else:
            body = f"{_format_coeff(c)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _single_term(p: Polynomial) -> bool:
    return len(p.terms) == 1


def _bare_power(p: Polynomial) -> bool:
    """A lone monic power such as ``m`` or ``mb^3`` (safe right of '/')."""
    if len(p.terms) != 1:
        return False
    ((i, j), c), = p.terms.items()
    return c == ONE_Q and (i == 0) != (j == 0)


def format_scalar(f: RationalFunction, factor: bool = False) -> str:
    """Render f in the expression syntax; with ``factor`` the result is safe
    to use as the left operand of '*'."""
    f = as_scalar(f)
    num = format_polynomial(f.num)
    if f.den.is_constant():
        if factor and not _single_term(f.num):
            return f"({num})"
        return num
    den = format_polynomial(f.den)
    if not _single_term(f.num):
        num = f"({num})"
    if not _bare_power(f.den):
        den = f"({den})"
    return f"{num}/{den}"


_FACTORS.extend(p.num for p in (M * MB + 1, M, MB))
