"""
Exact scalars: Laurent polynomials Z[q0, q0^-1, q, q^-1], their fraction
field, and specializations to Q and prime fields.

BiLaurent stores a finite map (i, j) -> nonzero int coefficient for the
monomial q0^i q^j; the map is the canonical form, so equality is dict
equality.  RationalFunction keeps a reduced num/den pair of BiLaurents with
a normalized denominator (true polynomial, primitive, positive leading
coefficient in lex order on (i, j)).

All coefficients are Python bignums; nothing here ever overflows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class BiLaurent:
    """Element of Z[q0^{+-1}, q^{+-1}] as {(i, j): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v}

    # -- constructors

    @staticmethod
    def const(n):
        return BiLaurent({(0, 0): n} if n else {})

    @staticmethod
    def mono(c, i, j):
        return BiLaurent({(i, j): c} if c else {})

    @staticmethod
    def q0(k=1):
        return BiLaurent({(k, 0): 1})

    @staticmethod
    def q(k=1):
        return BiLaurent({(0, k): 1})

    # -- ring structure

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            return self.unit_inverse() ** (-n)
        out = BiLaurent.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- predicates and parts

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """Units of the Laurent ring: +-q0^i q^j."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def unit_inverse(self):
        ((i, j), c), = self.terms.items()
        if abs(c) != 1:
            raise ValueError("not a unit: %s" % self)
        return BiLaurent({(-i, -j): c})

    def min_exps(self):
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def lead(self):
        """Lex-largest (i, j) with its coefficient."""
        k = max(self.terms)
        return k, self.terms[k]

    def content(self):
        g = 0
        for v in self.terms.values():
            g = _int_gcd(g, abs(v))
        return g

    def shift(self, di, dj):
        return BiLaurent({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def swap_q0_inverse(self):
        """q0 -> q0^{-1} (the scalar part of the eta automorphism)."""
        return BiLaurent({(-i, j): c for (i, j), c in self.terms.items()})

    def subs_q0_one(self):
        """q0 -> 1, collapsing to Z[q, q^-1] (stored with i = 0)."""
        out = {}
        for (i, j), c in self.terms.items():
            k = (0, j)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiLaurent(out)

    def exact_div(self, other):
        other = _coerce(other)
        q, r = _poly_divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact: %s / %s" % (self, other))
        return q

    def divides(self, other):
        _, r = _poly_divmod(_coerce(other), self)
        return r.is_zero()

    # -- evaluation

    def eval_frac(self, q0, q) -> Fraction:
        q0, q = Fraction(q0), Fraction(q)
        tot = Fraction(0)
        for (i, j), c in self.terms.items():
            tot += c * q0 ** i * q ** j
        return tot

    def eval_mod(self, p: int, q0: int, q: int) -> int:
        tot = 0
        for (i, j), c in self.terms.items():
            t = c % p
            t = t * _pow_mod(q0, i, p) % p
            t = t * _pow_mod(q, j, p) % p
            tot = (tot + t) % p
        return tot

    # -- text form: fixed (i, j) order, always the full c*q0^i*q^j shape

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            parts.append("%d*q0^%d*q^%d" % (self.terms[(i, j)], i, j))
        return " + ".join(parts)

    __repr__ = __str__

    @staticmethod
    def parse(text):
        text = text.strip().replace("−", "-")
        if text == "0":
            return BiLaurent()
        out = {}
        for part in text.split("+"):
            part = part.strip()
            if not part:
                continue
            c, i, j = _parse_monomial(part)
            k = (i, j)
            out[k] = out.get(k, 0) + c
        return BiLaurent(out)


def _parse_monomial(part):
    c, i, j = 1, 0, 0
    for factor in part.split("*"):
        factor = factor.strip()
        if factor.startswith("q0"):
            i += int(factor[3:]) if "^" in factor else 1
        elif factor.startswith("q"):
            j += int(factor[2:]) if "^" in factor else 1
        else:
            c *= int(factor)
    return c, i, j


def _coerce(x):
    if isinstance(x, BiLaurent):
        return x
    if isinstance(x, int):
        return BiLaurent.const(x)
    raise TypeError("cannot coerce %r" % (x,))


def _pow_mod(b, e, p):
    if e >= 0:
        return pow(b, e, p)
    return pow(pow(b, -1, p), -e, p)


# ---------------------------------------------------------------------------
# polynomial gcd machinery (q0 outer, q inner; contents down to Z)


def _as_poly(x: BiLaurent):
    """Multiply by the unit clearing negative exponents; return (poly, (di, dj))."""
    if x.is_zero():
        return x, (0, 0)
    mi, mj = x.min_exps()
    return x.shift(-mi, -mj), (mi, mj)


def _q_parts(x: BiLaurent):
    """Split a polynomial by q0-degree: {i: {j: c}}."""
    out = {}
    for (i, j), c in x.terms.items():
        out.setdefault(i, {})[j] = c
    return out


def _uni_gcd(a: dict, b: dict) -> dict:
    """gcd in Z[q] of {j: c} dicts, primitive PRS."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    else:
        ca, pa = _uni_primitive(a)
        cb, pb = _uni_primitive(b)
        cg = _int_gcd(ca, cb)
        while pb:
            rem = _uni_prem(pa, pb)
            pa, pb = pb, _uni_primitive(rem)[1] if rem else {}
        g = {j: cg * c for j, c in pa.items()}
    if g and g[max(g)] < 0:
        g = {j: -c for j, c in g.items()}
    return g

def _uni_primitive(a: dict):
    c = 0
    for v in a.values():
        c = _int_gcd(c, abs(v))
    if c == 0:
        return 0, {}
    return c, {j: v // c for j, v in a.items()}


def _uni_prem(a: dict, b: dict) -> dict:
    """Pseudo-remainder in Z[q]."""
    da, db = max(a), max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        r = {j: lb * c for j, c in r.items()}
        for j, c in b.items():
            k = j + dr - db
            s = r.get(k, 0) - lr * c
            if s:
                r[k] = s
            else:
                r.pop(k, None)
    return r


def _uni_mul(a: dict, b: dict) -> dict:
    out = {}
    for j1, c1 in a.items():
        for j2, c2 in b.items():
            k = j1 + j2
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _uni_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for j, c in b.items():
        s = out.get(j, 0) - c
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    return out


def _poly_content_q(x: BiLaurent) -> dict:
    """Content of a polynomial in q0 with coefficients in Z[q]."""
    parts = _q_parts(x)
    g = {}
    for coeff in parts.values():
        g = _uni_gcd(g, coeff)
        if g == {0: 1}:
            break
    return g


def _from_q_parts(parts) -> BiLaurent:
    terms = {}
    for i, coeff in parts.items():
        for j, c in coeff.items():
            if c:
                terms[(i, j)] = c
    return BiLaurent(terms)


def _poly_prem_q0(a: BiLaurent, b: BiLaurent) -> BiLaurent:
    """Pseudo-remainder of polynomials viewed in (Z[q])[q0]."""
    pa, pb = _q_parts(a), _q_parts(b)
    db = max(pb)
    lb = pb[db]
    r = pa
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        r = {i: _uni_mul(lb, c) for i, c in r.items()}
        for i, c in pb.items():
            k = i + dr - db
            cur = _uni_sub(r.get(k, {}), _uni_mul(lr, c))
            if cur:
                r[k] = cur
            else:
                r.pop(k, None)
    return _from_q_parts(r)


def poly_gcd(a: BiLaurent, b: BiLaurent) -> BiLaurent:
    """gcd in Z[q0, q] of two genuine polynomials (no negative exponents)."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        ca, cb = _poly_content_q(a), _poly_content_q(b)
        cg = _uni_gcd(ca, cb)
        pa = _from_q_parts({i: _uni_exact_div(c, ca) for i, c in _q_parts(a).items()})
        pb = _from_q_parts({i: _uni_exact_div(c, cb) for i, c in _q_parts(b).items()})
        if max(_q_parts(pa)) < max(_q_parts(pb)):
            pa, pb = pb, pa
        while not pb.is_zero():
            rem = _poly_prem_q0(pa, pb)
            if not rem.is_zero():
                cr = _poly_content_q(rem)
                rem = _from_q_parts(
                    {i: _uni_exact_div(c, cr) for i, c in _q_parts(rem).items()}
                )
            pa, pb = pb, rem
        g = BiLaurent({(i, j): c for i, cs in _q_parts(pa).items()
                       for j, c in _uni_mul(cs, cg).items()})
    if g.is_zero():
        return g
    _, lc = g.lead()
    if lc < 0:
        g = -g
    return g


def _uni_exact_div(a: dict, d: dict) -> dict:
    """Exact division in Z[q]."""
    if not a:
        return {}
    out = {}
    r = dict(a)
    dd = max(d)
    ld = d[dd]
    while r:
        dr = max(r)
        if dr < dd or r[dr] % ld:
            raise ValueError("inexact univariate division")
        c = r[dr] // ld
        out[dr - dd] = c
        for j, v in d.items():
            k = j + dr - dd
            s = r.get(k, 0) - c * v
            if s:
                r[k] = s
            else:
                r.pop(k, None)
    return out


def _poly_divmod(a: BiLaurent, b: BiLaurent):
    """Division with remainder over the fraction field, exactness signalled by
    the remainder; inputs may be Laurent (units are pulled out first)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    pa, (ia, ja) = _as_poly(a)
    pb, (ib, jb) = _as_poly(b)
    if pa.is_zero():
        return BiLaurent(), BiLaurent()
    num = RationalFunction(pa, pb)
    if num.den.is_unit():
        q = (num.num * num.den.unit_inverse()).shift(ia - ib, ja - jb)
        return q, BiLaurent()
    return BiLaurent(), a  # not exact; only exactness is ever used


class RationalFunction:
    """Reduced fraction of BiLaurents.

    The denominator is a primitive true polynomial with positive lex-leading
    coefficient; Laurent units are pushed into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _coerce_rf_part(num)
        den = BiLaurent.const(1) if den is None else _coerce_rf_part(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def const(n):
        return RationalFunction(BiLaurent.const(n), BiLaurent.const(1), _reduced=True)

    def __add__(self, other):
        other = _coerce_rf(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def inverse(self):
        return RationalFunction(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunction.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = _coerce_rf(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return self.num.is_zero()

    def eval_frac(self, q0, q):
        d = self.den.eval_frac(q0, q)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the specialization")
        return self.num.eval_frac(q0, q) / d

    def eval_mod(self, p, q0, q):
        d = self.den.eval_mod(p, q0, q)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the specialization")
        return self.num.eval_mod(p, q0, q) * pow(d, -1, p) % p

    def __str__(self):
        if self.den == BiLaurent.const(1):
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    __repr__ = __str__


def _coerce_rf_part(x):
    if isinstance(x, BiLaurent):
        return x
    if isinstance(x, int):
        return BiLaurent.const(x)
    raise TypeError("cannot coerce %r" % (x,))


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_coerce_rf_part(x))


def _reduce(num, den):
    if num.is_zero():
        return BiLaurent(), BiLaurent.const(1)
    pn, (i_n, j_n) = _as_poly(num)
    pd, (i_d, j_d) = _as_poly(den)
    g = poly_gcd(pn, pd)
    if g != BiLaurent.const(1):
        pn = _exact_poly_div(pn, g)
        pd = _exact_poly_div(pd, g)
    # push the Laurent unit into the numerator
    pn = pn.shift(i_n - i_d, j_n - j_d)
    _, lc = pd.lead()
    if lc < 0:
        pn, pd = -pn, -pd
    return pn, pd


def _exact_poly_div(a: BiLaurent, g: BiLaurent) -> BiLaurent:
    """Exact division of polynomials (g obtained as a gcd, so this succeeds)."""
    pa = _q_parts(a)
    pg = _q_parts(g)
    out = {}
    dg = max(pg)
    lg = pg[dg]
    while pa:
        da = max(pa)
        qc = _uni_exact_div(pa[da], lg)
        out[da - dg] = qc
        for i, c in pg.items():
            k = i + da - dg
            cur = _uni_sub(pa.get(k, {}), _uni_mul(qc, c))
            if cur:
                pa[k] = cur
            else:
                pa.pop(k, None)
    return _from_q_parts(out)


# ---------------------------------------------------------------------------
# named polynomials


def defining_polys(r):
    """(g_r, g-check_r).

    g_r = prod_{i=-(r-1)}^{r-1} (q0 + q^i) and g-check_r = 2 prod (q^j + 1).
    Expanding both sides shows q^m g_r(1, q) equals g-check_r^2 / 2, not
    g-check_r itself; the two generate the same localization, and the exact
    relation g-check_r^2 = 2 q^m g_r(1, q) is asserted here.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    g = BiLaurent.const(1)
    for i in range(-(r - 1), r):
        g = g * (BiLaurent.q0() + BiLaurent.q(i))
    gc = BiLaurent.const(2)
    for j in range(1, r):
        gc = gc * (BiLaurent.q(j) + BiLaurent.const(1))
    m = r * (r - 1) // 2
    assert gc * gc == BiLaurent.const(2) * BiLaurent.q(m) * g.subs_q0_one(), \
        "g-check localization identity failed"
    return g, gc


# ---------------------------------------------------------------------------
# specializations


class Specialization:
    """Ring morphism Z[q0*, q*] -> Q or F_p with invertible images."""

    def __init__(self, target, q0, q):
        if target == "Q":
            self.p = None
            self.q0 = Fraction(q0)
            self.q = Fraction(q)
            if self.q0 == 0 or self.q == 0:
                raise ValueError("images must be invertible")
        else:
            kind, p = target
            assert kind == "F"
            self.p = int(p)
            self.q0 = int(q0) % self.p
            self.q = int(q) % self.p
            if self.q0 == 0 or self.q == 0:
                raise ValueError("images must be invertible")
        self.target = target

    def __call__(self, x):
        if isinstance(x, int):
            return Fraction(x) if self.p is None else x % self.p
        if isinstance(x, BiLaurent):
            if self.p is None:
                return x.eval_frac(self.q0, self.q)
            return x.eval_mod(self.p, self.q0, self.q)
        if isinstance(x, RationalFunction):
            if self.p is None:
                return x.eval_frac(self.q0, self.q)
            return x.eval_mod(self.p, self.q0, self.q)
        raise TypeError("cannot specialize %r" % (x,))

    def __repr__(self):
        t = "Q" if self.p is None else "F%d" % self.p
        return "Specialization(%s, q0=%s, q=%s)" % (t, self.q0, self.q)


# ---------------------------------------------------------------------------
# coefficient domains for the Hecke layer


class Domain:
    """Common interface: exact coefficient arithmetic plus the parameters."""

    is_field = False
    q0_is_one = False
    p = None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def eq(self, a, b):
        return a == b


class LaurentDomain(Domain):
    """Z[q0*, q*], or its image at q0 = 1."""

    def __init__(self, q0_one=False):
        self.q0_is_one = q0_one
        self.zero = BiLaurent()
        self.one = BiLaurent.const(1)
        self.q0 = self.one if q0_one else BiLaurent.q0()
        self.q = BiLaurent.q()
        self.name = "Z[q^(+-1)]" if q0_one else "Z[q0^(+-1),q^(+-1)]"

    def from_int(self, n):
        return BiLaurent.const(n)

    def is_zero(self, a):
        return a.is_zero()

    def inv(self, a):
        return a.unit_inverse()

    def q_pow(self, k):
        return BiLaurent.q(k)

    def q0_pow(self, k):
        return self.one if self.q0_is_one else BiLaurent.q0(k)

    def eta_scalar(self, a):
        return a if self.q0_is_one else a.swap_q0_inverse()

    def to_string(self, a):
        return str(a)

    def parse(self, s):
        v = BiLaurent.parse(s)
        return v.subs_q0_one() if self.q0_is_one else v


class FractionDomain(Domain):
    """Frac(Z[q0, q]) = K, or Frac(Z[q]) when q0 is pinned to 1."""

    is_field = True

    def __init__(self, q0_one=False):
        self.q0_is_one = q0_one
        self.zero = RationalFunction.const(0)
        self.one = RationalFunction.const(1)
        self.q0 = self.one if q0_one else RationalFunction(BiLaurent.q0())
        self.q = RationalFunction(BiLaurent.q())
        self.name = "Frac(Z[q])" if q0_one else "K"

    def from_int(self, n):
        return RationalFunction.const(n)

    def is_zero(self, a):
        return a.is_zero()

    def inv(self, a):
        return a.inverse()

    def q_pow(self, k):
        return RationalFunction(BiLaurent.q(k))

    def q0_pow(self, k):
        return self.one if self.q0_is_one else RationalFunction(BiLaurent.q0(k))

    def eta_scalar(self, a):
        if self.q0_is_one:
            return a
        return RationalFunction(a.num.swap_q0_inverse(), a.den.swap_q0_inverse())

    def to_string(self, a):
        return str(a)


class QQDomain(Domain):
    """Q with fixed rational images of q0 and q."""

    is_field = True

    def __init__(self, q0, q):
        self.q0 = Fraction(q0)
        self.q = Fraction(q)
        if self.q0 == 0 or self.q == 0:
            raise ValueError("parameters must be invertible")
        self.q0_is_one = self.q0 == 1
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.name = "Q(q0=%s,q=%s)" % (self.q0, self.q)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def inv(self, a):
        return 1 / a

    def q_pow(self, k):
        return self.q ** k

    def q0_pow(self, k):
        return self.q0 ** k

    def eta_scalar(self, a):
        if self.q0 in (1, -1):
            return a
        raise ValueError("eta needs q0 = q0^{-1} in a specialized domain")

    def to_string(self, a):
        return str(a)


class GFDomain(Domain):
    """F_p with fixed unit images of q0 and q; elements are plain ints."""

    is_field = True

    def __init__(self, p, q0, q):
        self.p = int(p)
        self.q0 = int(q0) % self.p
        self.q = int(q) % self.p
        if self.q0 == 0 or self.q == 0:
            raise ValueError("parameters must be invertible")
        self.q0_is_one = self.q0 == 1
        self.zero = 0
        self.one = 1 % self.p
        self.name = "F%d(q0=%d,q=%d)" % (self.p, self.q0, self.q)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def from_int(self, n):
        return n % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def inv(self, a):
        return pow(a, -1, self.p)

    def q_pow(self, k):
        return _pow_mod(self.q, k, self.p)

    def q0_pow(self, k):
        return _pow_mod(self.q0, k, self.p)

    def eta_scalar(self, a):
        if (self.q0 * self.q0) % self.p == 1 % self.p:
            return a
        raise ValueError("eta needs q0 = q0^{-1} in a specialized domain")

    def to_string(self, a):
        return str(a % self.p)


GENERIC = LaurentDomain()
GENERIC_Q1 = LaurentDomain(q0_one=True)
K_FIELD = FractionDomain()
K_FIELD_Q1 = FractionDomain(q0_one=True)
