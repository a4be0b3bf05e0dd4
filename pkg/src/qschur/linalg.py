"""
Exact linear algebra over the T-basis.

Two lanes:

* a fast mod-p lane (VecLane): elements become int64 vectors indexed by the
  fixed group order, generator sweeps and row reduction run through the
  kernels in _kernels;
* a slow exact lane: dense Gaussian elimination over any coefficient domain
  (Fraction, RationalFunction), used for small certifications and as the
  fallback when the mod-p squeeze is inconclusive.

Rank facts used throughout: specializing a matrix can only drop its rank, so
a mod-p rank is a certified lower bound for the rank over Q or over the
fraction field K; explicit candidate elements inside an intersection give a
certified lower bound for the intersection dimension.  When the two bounds
meet, the generic and specialized values all coincide ("the squeeze").
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels, rings, weyl
from .hecke import HeckeAlgebra, HeckeElement


class VecLane:
    """Vectorized Hecke arithmetic at one (rank, F_p point)."""

    def __init__(self, r, p, q0, q):
        self.r = r
        self.p = int(p)
        self.q0 = int(q0) % self.p
        self.q = int(q) % self.p
        self.W = weyl.weyl_group(r)
        self.N = self.W.order
        self.domain = rings.GFDomain(p, q0, q)
        self.algebra = HeckeAlgebra(r, self.domain)
        L = self.W.length
        self.rup = [L[self.W.rmul[g]] > L for g in range(r)]
        self.lup = [L[self.W.lmul[g]] > L for g in range(r)]
        self.qs = [self.q0] + [self.q] * (r - 1)

    def __repr__(self):
        return "VecLane(r=%d, p=%d, q0=%d, q=%d)" % (self.r, self.p, self.q0, self.q)

    # -- element <-> vector

    def vec(self, h) -> np.ndarray:
        """Evaluate a HeckeElement (over any domain) at this point."""
        out = np.zeros(self.N, dtype=np.int64)
        dom = h.algebra.domain
        for i, c in h.coeffs.items():
            out[i] = self._scalar(c, dom)
        return out

    def _scalar(self, c, dom):
        if isinstance(c, rings.BiLaurent) or isinstance(c, rings.RationalFunction):
            return c.eval_mod(self.p, self.q0, self.q)
        if dom.p is not None:
            if dom.p != self.p or dom.q0 != self.q0 or dom.q != self.q:
                raise ValueError("element lives at a different point")
            return int(c) % self.p
        # Fraction
        num, den = c.numerator, c.denominator
        return num % self.p * pow(den % self.p, -1, self.p) % self.p

    def elem(self, v) -> HeckeElement:
        return self.algebra.from_coeffs(
            {i: int(v[i]) % self.p for i in np.nonzero(v % self.p)[0]}
        )

    # -- batched products

    def rmul_word(self, M, word):
        for g in word:
            M = _kernels.rmul_gen_sweep(
                M, self.W.rmul[g], self.rup[g], self.qs[g], self.p
            )
        return M

    def lmul_word(self, M, word):
        # T_{s_{g1}} ... T_{s_{gk}} * row  applies the rightmost factor first
        for g in reversed(word):
            M = _kernels.rmul_gen_sweep(
                M, self.W.lmul[g], self.lup[g], self.qs[g], self.p
            )
        return M

    def rmul_factor(self, M, c, word):
        """M * (c + T_w) with w given by a reduced word."""
        return (c * M + self.rmul_word(M, word)) % self.p

    def lmul_factor(self, M, c, word):
        return (c * M + self.lmul_word(M, word)) % self.p

    def rmul_elem(self, M, h):
        """M * h for an arbitrary element h over this lane's domain."""
        out = np.zeros_like(M)
        for i, c in h.coeffs.items():
            out = (out + int(c) * self.rmul_word(M, self.W.words[i])) % self.p
        return out

    def lmul_elem(self, M, h):
        out = np.zeros_like(M)
        for i, c in h.coeffs.items():
            out = (out + int(c) * self.lmul_word(M, self.W.words[i])) % self.p
        return out

    # -- ideal spans

    def right_ideal(self, gen, reps):
        """Rows gen * T_d over the representative indices."""
        g = self.vec(gen) if isinstance(gen, HeckeElement) else np.asarray(gen)
        words = self.W.words
        rows = np.empty((len(reps), self.N), dtype=np.int64)
        base = g.reshape(1, -1) % self.p
        for k, d in enumerate(reps):
            rows[k] = self.rmul_word(base, words[d])[0]
        return rows

    def left_ideal(self, gen, reps):
        g = self.vec(gen) if isinstance(gen, HeckeElement) else np.asarray(gen)
        words = self.W.words
        rows = np.empty((len(reps), self.N), dtype=np.int64)
        base = g.reshape(1, -1) % self.p
        for k, d in enumerate(reps):
            rows[k] = self.lmul_word(base, words[d])[0]
        return rows

    def spin_right(self, start, gen_words):
        """Row space of start (matrix) closed under right multiplication by
        the elements given as reduced words."""
        M, _ = self.rref(np.atleast_2d(start))
        while True:
            blocks = [M] + [self.rmul_word(M, w) for w in gen_words]
            R, _ = self.rref(np.vstack(blocks))
            if R.shape[0] == M.shape[0]:
                return R
            M = R

    def spin_left(self, start, gen_words):
        M, _ = self.rref(np.atleast_2d(start))
        while True:
            blocks = [M] + [self.lmul_word(M, w) for w in gen_words]
            R, _ = self.rref(np.vstack(blocks))
            if R.shape[0] == M.shape[0]:
                return R
            M = R

    # -- linear algebra

    def rank(self, M):
        if M.size == 0:
            return 0
        return int(_kernels.gf_rank(np.ascontiguousarray(M % self.p), self.p))

    def rref(self, M):
        R = np.ascontiguousarray(M.copy() % self.p)
        rank, piv = _kernels.gf_rref_inplace(R, self.p)
        return R[: int(rank)], np.asarray(piv, dtype=np.int64)

    def left_nullspace(self, M):
        """Rows z with z M = 0 (mod p)."""
        m = M.shape[0]
        aug = np.hstack([M % self.p, np.eye(m, dtype=np.int64)])
        R = np.ascontiguousarray(aug)
        _kernels.gf_rref_inplace(R, self.p)
        zero_left = ~np.any(R[:, : M.shape[1]] % self.p, axis=1)
        return R[zero_left][:, M.shape[1]:]

    def intersect(self, A, B):
        """Row-space intersection: returns (dim, basis matrix)."""
        if A.shape[0] == 0 or B.shape[0] == 0:
            return 0, np.zeros((0, self.N), dtype=np.int64)
        M = np.vstack([A, B]) % self.p
        Z = self.left_nullspace(M)
        if Z.shape[0] == 0:
            return 0, np.zeros((0, self.N), dtype=np.int64)
        basis = Z[:, : A.shape[0]].dot(A) % self.p
        R, _ = self.rref(basis)
        return R.shape[0], R

    def in_row_space(self, v, M):
        return self.rank(M) == self.rank(np.vstack([M, v.reshape(1, -1)]))

    def row_space_equal(self, A, B):
        ra, rb = self.rank(A), self.rank(B)
        return ra == rb == self.rank(np.vstack([A, B]))

    def solve_right(self, M, v):
        """x with x M = v, or None."""
        m = M.shape[0]
        aug = np.hstack([M % self.p, np.eye(m, dtype=np.int64)])
        R = np.ascontiguousarray(aug)
        _kernels.gf_rref_inplace(R, self.p)
        n = M.shape[1]
        x = np.zeros(m, dtype=np.int64)
        rem = v.copy() % self.p
        for row in R:
            lead = np.nonzero(row[:n] % self.p)[0]
            if lead.size == 0:
                continue
            c = rem[lead[0]] % self.p
            if c:
                rem = (rem - c * row[:n]) % self.p
                x = (x + c * row[n:]) % self.p
        if np.any(rem % self.p):
            return None
        return x


# deterministic "generic position" points for fraction-field certification

_CERT_PRIME = 1_000_003


def good_lane(r, k=0, q0_one=False, p=None):
    """A big-prime point avoiding the zero loci of g_r, q+1, and 2."""
    p = p or _CERT_PRIME
    rng = np.random.RandomState(20_000 + 97 * k + r)
    g, _ = rings.defining_polys(r)
    while True:
        q0 = 1 if q0_one else int(rng.randint(2, p - 2))
        q = int(rng.randint(2, p - 2))
        if g.eval_mod(p, q0, q) == 0:
            continue
        if (q + 1) % p == 0 or (q0 + 1) % p == 0:
            continue
        return VecLane(r, p, q0, q)


def cert_lanes(r, count=2, q0_one=False):
    return [good_lane(r, k, q0_one=q0_one) for k in range(count)]


# ---------------------------------------------------------------------------
# exact dense elimination over an arbitrary field domain


def field_rref(rows, dom):
    """Reduced row echelon form over a field domain; returns (rows, pivots)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    m, n = len(M), len(M[0])
    piv = []
    rank = 0
    for col in range(n):
        sel = None
        for row in range(rank, m):
            if not dom.is_zero(M[row][col]):
                sel = row
                break
        if sel is None:
            continue
        M[rank], M[sel] = M[sel], M[rank]
        inv = dom.inv(M[rank][col])
        M[rank] = [dom.mul(inv, x) for x in M[rank]]
        for row in range(m):
            if row != rank and not dom.is_zero(M[row][col]):
                f = M[row][col]
                M[row] = [dom.sub(x, dom.mul(f, y)) for x, y in zip(M[row], M[rank])]
        piv.append(col)
        rank += 1
        if rank == m:
            break
    return M[:rank], piv


def field_rank(rows, dom):
    R, _ = field_rref(rows, dom)
    return len(R)


def elements_matrix(elems, support=None):
    """Coefficient rows of Hecke elements over their common domain."""
    if support is None:
        support = sorted(set().union(*[set(h.coeffs) for h in elems])) if elems else []
    dom = elems[0].algebra.domain
    rows = []
    for h in elems:
        rows.append([h.coeffs.get(i, dom.zero) for i in support])
    return rows, support


def exact_intersection(A_elems, B_elems):
    """Exact intersection of two spans of Hecke elements over a field domain.

    Returns echelonized basis elements.  Dense and slow; meant for small
    certification jobs.
    """
    if not A_elems or not B_elems:
        return []
    alg = A_elems[0].algebra
    dom = alg.domain
    N = alg.W.order
    rows = []
    for h in A_elems:
        rows.append([h.coeffs.get(i, dom.zero) for i in range(N)])
    for h in B_elems:
        rows.append([h.coeffs.get(i, dom.zero) for i in range(N)])
    ka = len(A_elems)
    m = len(rows)
    aug = [row + [dom.one if j == i else dom.zero for j in range(m)]
           for i, row in enumerate(rows)]
    R, _ = field_rref(aug, dom)
    out = []
    for row in R:
        if all(dom.is_zero(x) for x in row[:N]):
            coeffs = row[N:N + ka]
            vec = [dom.zero] * N
            for c, h in zip(coeffs, A_elems):
                if dom.is_zero(c):
                    continue
                for i, v in h.coeffs.items():
                    vec[i] = dom.add(vec[i], dom.mul(c, v))
            out.append(alg.from_coeffs({i: v for i, v in enumerate(vec)}))
    basis_rows = [[h.coeffs.get(i, dom.zero) for i in range(N)] for h in out]
    R2, _ = field_rref(basis_rows, dom)
    return [alg.from_coeffs({i: v for i, v in enumerate(row)}) for row in R2]


# ---------------------------------------------------------------------------
# ideal bases


@dataclass
class IdealBasis:
    """Validated basis of a span inside the Hecke algebra."""

    description: str
    side: str  # "left" | "right" | "sandwich"
    basis: list
    ring: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis:
            alg = self.basis[0].algebra
            if alg.domain.is_field and alg.domain.p is not None:
                lane = VecLane(alg.r, alg.domain.p, alg.domain.q0, alg.domain.q)
                M = np.vstack([lane.vec(h) for h in self.basis])
                if lane.rank(M) != len(self.basis):
                    raise ValueError("ideal basis is linearly dependent: %s"
                                     % self.description)

    @property
    def rank(self):
        return len(self.basis)

    def matrix(self, lane):
        if not self.basis:
            return np.zeros((0, lane.N), dtype=np.int64)
        return np.vstack([lane.vec(h) for h in self.basis])

    def to_json_dict(self):
        return {
            "description": self.description,
            "side": self.side,
            "ring": self.ring,
            "rank": self.rank,
            "basis": [h.to_json() for h in self.basis],
        }


def ideal_basis(gen, reps, side, description=""):
    """IdealBasis {gen T_d} (right) or {T_d gen} (left); independence is
    certified mod p for generic-coefficient domains, directly for GF ones."""
    alg = gen.algebra
    W = alg.W
    elems = []
    for d in reps:
        Td = alg.T(int(d))
        elems.append(gen * Td if side == "right" else Td * gen)
    ib = IdealBasis(description or "ideal", side, elems, alg.domain.name)
    if not alg.domain.is_field or alg.domain.p is None:
        if not _independent_generic(elems):
            raise ValueError("ideal basis is linearly dependent: %s" % description)
    return ib


def _independent_generic(elems):
    if not elems:
        return True
    alg = elems[0].algebra
    for k in range(2):
        lane = good_lane(alg.r, k, q0_one=alg.domain.q0_is_one)
        M = np.vstack([lane.vec(h) for h in elems])
        if lane.rank(M) == len(elems):
            return True
    return False


def intersect_ideals(A: IdealBasis, B: IdealBasis):
    """Intersection of two spans over a specialized field, as an IdealBasis
    with a deterministic echelon basis."""
    if not A.basis or not B.basis:
        alg = (A.basis or B.basis)[0].algebra if (A.basis or B.basis) else None
        return IdealBasis("(%s) cap (%s)" % (A.description, B.description),
                          "intersection", [], A.ring)
    alg = A.basis[0].algebra
    dom = alg.domain
    desc = "(%s) cap (%s)" % (A.description, B.description)
    if dom.p is not None:
        lane = VecLane(alg.r, dom.p, dom.q0, dom.q)
        _, basis = lane.intersect(A.matrix(lane), B.matrix(lane))
        elems = [lane.elem(v) for v in basis]
        return IdealBasis(desc, "intersection", elems, A.ring)
    elems = exact_intersection(A.basis, B.basis)
    return IdealBasis(desc, "intersection", elems, A.ring)


# ---------------------------------------------------------------------------
# the squeeze: certified generic intersection ranks


def squeeze_intersection(r, A_builder, B_builder, candidates_builder,
                         lanes=None, q0_one=False):
    """Certified dim over the generic field of span(A) cap span(B).

    A_builder/B_builder: lane -> row matrix; candidates_builder: lane -> row
    matrix of elements known to lie in both spans.  Certification: candidate
    rows independent at the lane, and dim A + dim B - rank[A;B] equals the
    candidate count.  Returns (dim, certified).
    """
    lanes = lanes or cert_lanes(r, 2, q0_one=q0_one)
    best = None
    for lane in lanes:
        A = A_builder(lane) % lane.p
        B = B_builder(lane) % lane.p
        C = candidates_builder(lane) % lane.p if candidates_builder else None
        ra, rb = lane.rank(A), lane.rank(B)
        if ra != A.shape[0] or rb != B.shape[0]:
            continue  # degenerate point
        upper = ra + rb - lane.rank(np.vstack([A, B]))
        if C is None:
            best = upper if best is None else min(best, upper)
            continue
        lower = lane.rank(C)
        if lower == C.shape[0] and lower == upper:
            return upper, True
        best = upper if best is None else min(best, upper)
    return best, False
