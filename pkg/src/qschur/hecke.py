"""
Two-parameter Iwahori-Hecke algebras of type B on the T-basis.

H = H_{q0,q} over a coefficient domain, with T_{s0}^2 = (q0-1)T_{s0} + q0 and
T_{s_i}^2 = (q-1)T_{s_i} + q for i >= 1; T_v T_w = T_{vw} whenever lengths
add.  Elements are sparse maps {group index: coefficient} over one of the
domains from qschur.rings (generic Laurent, fraction field, Q or F_p points).

The type A subalgebra is the span of T_w, w in S_r.  The type D algebra is
realized, only at q0 = 1, as the span of T_w with w in the even-n0 subgroup
(so T_{s0} T_w = T_{s0 w} there and the embedded copy is an honest
subalgebra).

Named elements: pi_a = prod (q^{i-1} + T_{t_i}), pi_a^- with (q0 q^{i-1} -
T_{t_i}) factors, pi-check_a over the u_i, the (twisted) q-permutation
generators x/y, and the v/e elements of the linear prime machinery.
"""

from __future__ import annotations

import json

from . import rings, weyl
from .rings import BiLaurent, RationalFunction
from .weyl import Bicomposition, SignedPermutation, weyl_group

FLAVOR_B = "B"
FLAVOR_A = "A-sub"
FLAVOR_D = "D-sub"


class HeckeAlgebra:
    """H_{q0,q} at a fixed rank over a fixed coefficient domain."""

    def __init__(self, r, domain=None):
        self.r = r
        self.domain = domain if domain is not None else rings.GENERIC
        self.W = weyl_group(r)
        # parameter of the generator s_g
        self.qs = [self.domain.q0] + [self.domain.q] * (r - 1)

    def __repr__(self):
        return "HeckeAlgebra(r=%d, %s)" % (self.r, self.domain.name)

    @property
    def q0_is_one(self):
        return self.domain.q0_is_one

    def zero(self):
        return HeckeElement(self, {})

    def one(self):
        return HeckeElement(self, {self.W.id: self.domain.one})

    def T(self, w):
        """T_w for a SignedPermutation, window, index, or generator word."""
        if isinstance(w, SignedPermutation):
            i = self.W.idx(w)
        elif isinstance(w, tuple):
            i = self.W.index[w]
        elif isinstance(w, int):
            i = w
        else:
            i = self.W.idx(weyl.from_word(self.r, w))
        return HeckeElement(self, {i: self.domain.one})

    def scalar(self, c):
        if isinstance(c, int):
            c = self.domain.from_int(c)
        return HeckeElement(self, {self.W.id: c})

    def from_coeffs(self, coeffs):
        d = self.domain
        return HeckeElement(self, {i: c for i, c in coeffs.items() if not d.is_zero(c)})

    # -- named elements

    def t_word(self, i):
        """Reduced word of t_i = s_{i-1} ... s_1 s_0 s_1 ... s_{i-1}."""
        return list(range(i - 1, 0, -1)) + [0] + list(range(1, i))

    def T_t(self, i):
        return self.T(self.t_word(i))

    def T_u(self, i):
        return self.T(weyl.u_element(self.r, i))

    def pi(self, a):
        """pi_a = prod_{i=1}^{a} (q^{i-1} + T_{t_i})."""
        self._check_a(a)
        out = self.one()
        for i in range(1, a + 1):
            out = out * (self.scalar(self.domain.q_pow(i - 1)) + self.T_t(i))
        return out

    def pi_minus(self, a):
        """pi_a^- = prod_{i=1}^{a} (q0 q^{i-1} - T_{t_i})."""
        self._check_a(a)
        d = self.domain
        out = self.one()
        for i in range(1, a + 1):
            c = d.mul(d.q0, d.q_pow(i - 1))
            out = out * (self.scalar(c) - self.T_t(i))
        return out

    def pi_check(self, a):
        """pi-check_a = prod_{i=2}^{a} (q^{i-1} + T_{u_i}); requires q0 = 1."""
        self._check_a(a)
        self._need_q0_one("pi_check")
        out = self.one()
        for i in range(2, a + 1):
            out = out * (self.scalar(self.domain.q_pow(i - 1)) + self.T_u(i))
        return out

    def pi_family(self, a):
        return self.pi(a), self.pi_minus(a), self.pi_check(a) if self.q0_is_one else None

    def _check_a(self, a):
        if not 0 <= a <= self.r:
            raise ValueError("a = %d out of range for rank %d" % (a, self.r))

    def _need_q0_one(self, what):
        if not self.q0_is_one:
            raise ValueError("%s needs a q0 = 1 coefficient domain" % what)

    def xbar(self, lam: Bicomposition):
        """Sum of T_w over the Young subgroup of bar(lambda)."""
        d = self.domain
        idxs = weyl.subgroup_indices(lam, "typeA")
        return HeckeElement(self, {i: d.one for i in idxs})

    def ybar(self, lam: Bicomposition):
        """Sum of (-q)^{-l(w)} T_w over the Young subgroup of bar(lambda)."""
        d = self.domain
        W = self.W
        out = {}
        for i in weyl.subgroup_indices(lam, "typeA"):
            l = int(W.length[i])
            c = d.q_pow(-l)
            if l % 2:
                c = d.neg(c)
            out[i] = c
        return HeckeElement(self, out)

    def x(self, lam: Bicomposition):
        return self.pi(lam.a) * self.xbar(lam)

    def y(self, lam: Bicomposition):
        return self.pi_minus(lam.a) * self.ybar(lam)

    def x_check(self, lam: Bicomposition):
        return self.pi_check(lam.a) * self.xbar(lam)

    def y_check(self, lam: Bicomposition):
        return self.pi_check(lam.a) * self.ybar(lam)

    def perm_generators(self, lam: Bicomposition):
        xb, yb = self.xbar(lam), self.ybar(lam)
        xc = yc = None
        if self.q0_is_one:
            pc = self.pi_check(lam.a)
            xc, yc = pc * xb, pc * yb
        return xb, yb, self.pi(lam.a) * xb, self.pi_minus(lam.a) * yb, xc, yc

    def v(self, a, b):
        """v_{a,b} = pi_a T_{w_{a,b}} pi_b^-."""
        if a + b > self.r:
            raise ValueError("need a + b <= r")
        return self.pi(a) * self.T(weyl.w_ab(self.r, a, b)) * self.pi_minus(b)

    def v_check(self, a, b):
        """v-check_{a,b} = pi-check_a (T_{w_{a,b}} - T_{f(w_{a,b})}) pi-check_b."""
        if a + b > self.r:
            raise ValueError("need a + b <= r")
        self._need_q0_one("v_check")
        w = weyl.w_ab(self.r, a, b)
        mid = self.T(w) - self.T(weyl.flip(w))
        return self.pi_check(a) * mid * self.pi_check(b)

    def pi_ab_minus(self, a, b):
        """pi(a, b^-) = pi_a T_{w_{a,b}} pi_b^-  (= v_{a,b})."""
        return self.v(a, b)

    def pi_a_minus_b(self, a, b):
        """pi(a^-, b) = pi_a^- T_{w_{a,b}} pi_b."""
        if a + b > self.r:
            raise ValueError("need a + b <= r")
        return self.pi_minus(a) * self.T(weyl.w_ab(self.r, a, b)) * self.pi(b)


class HeckeElement:
    """Sparse T-basis element; coeffs maps group index -> domain element."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    # -- linear structure

    def __add__(self, other):
        other = self._coerce(other)
        d = self.algebra.domain
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = d.add(out.get(i, d.zero), c)
            if d.is_zero(s):
                out.pop(i, None)
            else:
                out[i] = s
        return HeckeElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        d = self.algebra.domain
        return HeckeElement(self.algebra, {i: d.neg(c) for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def scale(self, c):
        d = self.algebra.domain
        if isinstance(c, int):
            c = d.from_int(c)
        if d.is_zero(c):
            return self.algebra.zero()
        return HeckeElement(self.algebra, {i: d.mul(c, v) for i, v in self.coeffs.items()})

    def _coerce(self, other):
        if isinstance(other, HeckeElement):
            if other.algebra is not self.algebra and (
                other.algebra.r != self.algebra.r
                or other.algebra.domain is not self.algebra.domain
            ):
                raise ValueError("algebra mismatch")
            return other
        if isinstance(other, int):
            return self.algebra.scalar(other)
        raise TypeError("cannot coerce %r" % (other,))

    # -- multiplication

    def lmul_gen(self, g):
        """T_{s_g} * self."""
        A = self.algebra
        d = A.domain
        W = A.W
        qs = A.qs[g]
        qs1 = d.sub(qs, d.one)
        out = {}

        def bump(i, c):
            s = d.add(out.get(i, d.zero), c)
            if d.is_zero(s):
                out.pop(i, None)
            else:
                out[i] = s

        for i, c in self.coeffs.items():
            j = int(W.lmul[g, i])
            if W.length[j] > W.length[i]:
                bump(j, c)
            else:
                bump(i, d.mul(qs1, c))
                bump(j, d.mul(qs, c))
        return HeckeElement(A, out)

    def rmul_gen(self, g):
        """self * T_{s_g}."""
        A = self.algebra
        d = A.domain
        W = A.W
        qs = A.qs[g]
        qs1 = d.sub(qs, d.one)
        out = {}

        def bump(i, c):
            s = d.add(out.get(i, d.zero), c)
            if d.is_zero(s):
                out.pop(i, None)
            else:
                out[i] = s

        for i, c in self.coeffs.items():
            j = int(W.rmul[g, i])
            if W.length[j] > W.length[i]:
                bump(j, c)
            else:
                bump(i, d.mul(qs1, c))
                bump(j, d.mul(qs, c))
        return HeckeElement(A, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        A = self.algebra
        d = A.domain
        words = A.W.words
        out = A.zero()
        for i, c in self.coeffs.items():
            piece = other
            for g in reversed(words[i]):
                piece = piece.lmul_gen(g)
            out = out + piece.scale(c)
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    # -- automorphisms

    def eta(self):
        """q0 -> q0^{-1}, T_{s0} -> -q0^{-1} T_{s0}, T_{s_i} fixed."""
        A = self.algebra
        d = A.domain
        out = {}
        for i, c in self.coeffs.items():
            n0 = int(A.W.n0[i])
            c2 = d.eta_scalar(c)
            c2 = d.mul(c2, d.q0_pow(-n0))
            if n0 % 2:
                c2 = d.neg(c2)
            if not d.is_zero(c2):
                out[i] = c2
        return HeckeElement(A, out)

    def iota(self):
        """The anti-automorphism T_w -> T_{w^{-1}}."""
        A = self.algebra
        return HeckeElement(A, {int(A.W.inv[i]): c for i, c in self.coeffs.items()})

    def fcheck(self):
        """T_w -> T_{s0 w s0} on the type D subalgebra (q0 = 1 only)."""
        A = self.algebra
        A._need_q0_one("fcheck")
        W = A.W
        out = {}
        for i, c in self.coeffs.items():
            if W.n0[i] % 2:
                raise ValueError("fcheck needs support in the even-n0 subgroup")
            out[int(W.rmul[0, W.lmul[0, i]])] = c
        return HeckeElement(A, out)

    # -- inspection

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.algebra.scalar(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        d = self.algebra.domain
        return hash(frozenset((i, d.to_string(c)) for i, c in self.coeffs.items()))

    def support(self):
        return sorted(self.coeffs)

    def coeff(self, w):
        A = self.algebra
        i = A.W.idx(w) if not isinstance(w, int) else w
        return self.coeffs.get(i, A.domain.zero)

    def in_symmetric_part(self):
        return all(self.algebra.W.n0[i] == 0 for i in self.coeffs)

    def in_even_part(self):
        return all(self.algebra.W.n0[i] % 2 == 0 for i in self.coeffs)

    def flavor(self):
        if self.in_symmetric_part():
            return FLAVOR_A
        if self.algebra.q0_is_one and self.in_even_part():
            return FLAVOR_D
        return FLAVOR_B

    def map_domain(self, new_algebra, fn):
        """Push coefficients through fn into another algebra of the same rank."""
        nd = new_algebra.domain
        out = {}
        for i, c in self.coeffs.items():
            v = fn(c)
            if not nd.is_zero(v):
                out[i] = v
        return HeckeElement(new_algebra, out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        A = self.algebra
        d = A.domain
        parts = []
        for i in sorted(self.coeffs):
            parts.append("(%s)*T%s" % (d.to_string(self.coeffs[i]),
                                       weyl.format_window(A.W.windows[i])))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        A = self.algebra
        d = A.domain
        return json.dumps(
            {weyl.format_window(A.W.windows[i]): d.to_string(c)
             for i, c in sorted(self.coeffs.items())},
            sort_keys=True,
        )


def from_json(algebra, text):
    data = json.loads(text)
    d = algebra.domain
    out = {}
    for win, cs in data.items():
        i = algebra.W.idx(weyl.parse_element(win, algebra.r))
        out[i] = d.parse(cs)
    return algebra.from_coeffs(out)


# ---------------------------------------------------------------------------
# specialization of elements between domains


def specialize_element(h, target_algebra):
    """Map a generic-Laurent element through evaluation into a Q/F_p algebra."""
    dom = target_algebra.domain
    if dom.p is not None:
        spec = rings.Specialization(("F", dom.p), dom.q0, dom.q)
    else:
        spec = rings.Specialization("Q", dom.q0, dom.q)
    return h.map_domain(target_algebra, spec)


def to_fraction_field(h, K_algebra):
    """Embed a Laurent-coefficient element into the fraction field algebra."""
    return h.map_domain(K_algebra, lambda c: RationalFunction(c))


# ---------------------------------------------------------------------------
# idempotents of the linear prime machinery


def central_z(H, a, b):
    """z with v_{a,b} T_{w_{b,a}} v_{a,b} = v_{a,b} z, z in H(S_{(b,a)}).

    Solved as a linear system over the span of the subgroup; the result is
    checked central in H(S_{(b,a)}).
    """
    v = H.v(a, b)
    w_ba = weyl.w_ab(H.r, b, a)
    lhs = v * H.T(w_ba) * v
    sub = weyl.subgroup_indices(
        Bicomposition((), (b, a) + (1,) * (H.r - a - b)), "typeA"
    )
    sol = _solve_left_product(H, v, sub, lhs)
    z = HeckeElement(H, {i: c for i, c in zip(sub, sol) if not H.domain.is_zero(c)})
    assert (v * z - lhs).is_zero()
    for g in _subgroup_gen_labels(b, a, H.r):
        Tg = H.T([g])
        assert (z * Tg - Tg * z).is_zero(), "z is not central"
    return z


def _subgroup_gen_labels(b, a, r):
    labs = [g for g in range(1, b)]
    labs += [g for g in range(b + 1, b + a)]
    return labs


def _solve_left_product(H, v, sub, target):
    """Find coefficients c_i with v * sum c_i T_{w_i} = target (w_i in sub)."""
    d = H.domain
    cols = []
    support = set(target.coeffs)
    for i in sub:
        col = v * H.T(i)
        cols.append(col)
        support.update(col.coeffs)
    support = sorted(support)
    pos = {s: k for k, s in enumerate(support)}
    mat = [[d.zero] * len(sub) for _ in support]
    rhs = [d.zero] * len(support)
    for j, col in enumerate(cols):
        for i, c in col.coeffs.items():
            mat[pos[i]][j] = c
    for i, c in target.coeffs.items():
        rhs[pos[i]] = c
    sol = _field_solve(d, mat, rhs)
    if sol is None:
        raise ValueError("target is not in v * span")
    return sol


def _field_solve(d, mat, rhs):
    """Dense Gaussian elimination over the domain (must be a field)."""
    m, n = len(mat), len(mat[0]) if mat else 0
    M = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    piv_cols = []
    rank = 0
    for col in range(n):
        sel = None
        for row in range(rank, m):
            if not d.is_zero(M[row][col]):
                sel = row
                break
        if sel is None:
            continue
        M[rank], M[sel] = M[sel], M[rank]
        inv = d.inv(M[rank][col])
        M[rank] = [d.mul(inv, x) for x in M[rank]]
        for row in range(m):
            if row != rank and not d.is_zero(M[row][col]):
                f = M[row][col]
                M[row] = [d.sub(x, d.mul(f, y)) for x, y in zip(M[row], M[rank])]
        piv_cols.append(col)
        rank += 1
    for row in range(rank, m):
        if not d.is_zero(M[row][n]):
            return None
    sol = [d.zero] * n
    for k, col in enumerate(piv_cols):
        sol[col] = M[k][n]
    return sol


def invert_in_subalgebra(H, z, sub):
    """Inverse of z inside the span of T_w, w in sub (a subalgebra)."""
    d = H.domain
    cols = [z * H.T(i) for i in sub]
    pos = {s: k for k, s in enumerate(sub)}
    mat = [[d.zero] * len(sub) for _ in sub]
    for j, col in enumerate(cols):
        for i, c in col.coeffs.items():
            if i not in pos:
                raise ValueError("z * T_w left the subalgebra span")
            mat[pos[i]][j] = c
    rhs = [d.zero] * len(sub)
    rhs[pos[H.W.id]] = d.one
    sol = _field_solve(d, mat, rhs)
    if sol is None:
        raise ValueError("z is not invertible in the subalgebra")
    return HeckeElement(H, {i: c for i, c in zip(sub, sol) if not d.is_zero(c)})


def e_idempotent(H, a, b):
    """The idempotent e_{a,b} = v_{a,b} z_{a,b} T_{w_{b,a}} with
    v_{a,b} H = e_{a,b} H over the fraction field; needs a + b = r."""
    if a + b != H.r:
        raise ValueError("e_{a,b} needs a + b = r")
    if not H.domain.is_field:
        raise ValueError("e_{a,b} lives over a field")
    ztilde = central_z(H, a, b)
    zinv = invert_in_subalgebra(
        H, ztilde, weyl.subgroup_indices(Bicomposition((), (b, a)), "typeA")
    )
    e = H.v(a, b) * zinv * H.T(weyl.w_ab(H.r, b, a))
    assert (e * e - e).is_zero(), "e_{a,b} failed to be idempotent"
    return e
