"""
The q-Schur algebra flavors as endomorphism algebras, with their rank
tables, structure constants, base-change scans, stratification data, the
linear prime decompositions and the residue-characteristic-2 quotient map.

Index sets (n_r = max(n, r) parts in the first component, n in the second):

    S1    : bicompositions with empty second component
    S1b   : empty first component
    S2    : all bicompositions
    S1.5  : |first| >= |second|          (type D; q0 = 1)
    S2.5  : all, plus flipped copies of S1b   (type D)
    S1d   : S1b plus flipped copies            (type D)
    S1d'  : S1b only, type D modules           (type D)

Entries are tagged ("p", lam) or ("f", lam) (flipped: the module of the
s0-conjugated subgroup).  Hom spaces are realized as intersections
gen_i A cap A gen_j inside the algebra span; for the type D kinds the
ambient span is the even part at q0 = 1.

Everything rank-valued is computed at explicit points (F_p lanes or exact
Q points); values "over K" are certified by the squeeze: sandwich elements
x_lam T_d x_mu are structural members of the intersections, their
independence at a point bounds the generic dimension from below, and the
stacked-rank bound from above; when the bounds meet all values in the
tower coincide.
"""

from __future__ import annotations

import json
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import intlin, linalg, modrep, rings, tableaux, weyl
from .hecke import HeckeAlgebra, HeckeElement, e_idempotent
from .linalg import VecLane
from .weyl import Bicomposition

KINDS = ("S1", "S1b", "S2", "S1.5", "S2.5", "S1d", "S1d'")
TYPE_D_KINDS = ("S1.5", "S2.5", "S1d", "S1d'")


def index_set(kind, n, r):
    """The tagged index multiset of the kind."""
    if kind == "S1":
        return [("p", lam) for lam in weyl.pi1(n, r)]
    if kind == "S1b":
        return [("p", lam) for lam in weyl.pi1b(n, r)]
    if kind == "S2":
        return [("p", lam) for lam in weyl.pi2(n, r)]
    if kind == "S1.5":
        return [("p", lam) for lam in weyl.pi15(n, r)]
    if kind == "S2.5":
        return [("p", lam) for lam in weyl.pi2(n, r)] + \
               [("f", lam) for lam in weyl.pi1b(n, r)]
    if kind == "S1d":
        return [("p", lam) for lam in weyl.pi1b(n, r)] + \
               [("f", lam) for lam in weyl.pi1b(n, r)]
    if kind == "S1d'":
        return [("p", lam) for lam in weyl.pi1b(n, r)]
    raise ValueError("unknown kind %r" % kind)


def entry_key(entry):
    tag, lam = entry
    return (tag, lam.key())


def index_classes(entries):
    """Deduplicate by (tag, zero-stripped components): identical modules."""
    classes = OrderedDict()
    for e in entries:
        classes.setdefault(entry_key(e), [e, 0])
        classes[entry_key(e)][1] += 1
    return classes


# ---------------------------------------------------------------------------
# module generators and ideal spans at a lane


class ModuleData:
    """Per-lane cache of the cyclic generators and their ideal spans."""

    def __init__(self, lane: VecLane, type_d: bool):
        self.lane = lane
        self.type_d = type_d
        r = lane.r
        self.Hgen = HeckeAlgebra(r, rings.GENERIC_Q1 if type_d else rings.GENERIC)
        if type_d and lane.q0 != 1:
            raise ValueError("type D kinds need a q0 = 1 point")
        W = lane.W
        if type_d:
            gen_elems = [[0, 1, 0]] + [[g] for g in range(1, r)]
        else:
            gen_elems = [[g] for g in range(r)]
        self.gen_words = [w for w in gen_elems]
        self._gen = {}
        self._right = {}
        self._left = {}

    def generator(self, entry):
        key = entry_key(entry)
        if key not in self._gen:
            tag, lam = entry
            H = self.Hgen
            x = H.x_check(lam) if self.type_d else H.x(lam)
            if tag == "f":
                x = x.fcheck()
            self._gen[key] = x
        return self._gen[key]

    def right_span(self, entry):
        key = entry_key(entry)
        if key not in self._right:
            v = self.lane.vec(self.generator(entry))
            self._right[key] = self.lane.spin_right(v, self.gen_words)
        return self._right[key]

    def left_span(self, entry):
        key = entry_key(entry)
        if key not in self._left:
            v = self.lane.vec(self.generator(entry))
            self._left[key] = self.lane.spin_left(v, self.gen_words)
        return self._left[key]


def hom_rank(md: ModuleData, entry_i, entry_j):
    """dim Hom(M_j, M_i) = dim (gen_i A cap A gen_j) at the lane."""
    dim, _ = md.lane.intersect(md.right_span(entry_i), md.left_span(entry_j))
    return dim


def hom_rank_table(kind, n, r, lane):
    """Class-level rank table and the full-index expansion data."""
    entries = index_set(kind, n, r)
    classes = index_classes(entries)
    md = ModuleData(lane, kind in TYPE_D_KINDS)
    keys = list(classes)
    table = {}
    for ki in keys:
        for kj in keys:
            table[(ki, kj)] = hom_rank(md, classes[ki][0], classes[kj][0])
    return RankTable(kind, n, r, lane.domain.name, keys,
                     {k: classes[k][1] for k in keys}, table)


@dataclass
class RankTable:
    kind: str
    n: int
    r: int
    ring: str
    keys: list
    multiplicity: dict
    table: dict

    def dimension(self):
        return sum(self.table[(ki, kj)] * self.multiplicity[ki] * self.multiplicity[kj]
                   for ki in self.keys for kj in self.keys)

    def same_values(self, other):
        return self.keys == other.keys and self.table == other.table

    def drops(self, other):
        out = []
        for k, v in self.table.items():
            if other.table.get(k) != v:
                out.append((k, v, other.table.get(k)))
        return out

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "r": self.r,
            "ring": self.ring,
            "dim": self.dimension(),
            "hom_ranks": [
                [_key_str(ki), _key_str(kj), self.table[(ki, kj)]]
                for ki in self.keys for kj in self.keys
            ],
        }

    def to_tsv(self):
        lines = ["kind\t%s\tn\t%d\tr\t%d\tring\t%s\tdim\t%d"
                 % (self.kind, self.n, self.r, self.ring, self.dimension())]
        for ki in self.keys:
            for kj in self.keys:
                lines.append("%s\t%s\t%d" % (_key_str(ki), _key_str(kj),
                                             self.table[(ki, kj)]))
        return "\n".join(lines) + "\n"


def _key_str(key):
    tag, (f, s) = key
    lam = "(%s;%s)" % (",".join(map(str, f)), ",".join(map(str, s)))
    return lam if tag == "p" else "f" + lam


# ---------------------------------------------------------------------------
# certified generic tables (the squeeze)


def certified_generic_table(kind, n, r, lanes=None):
    """Rank table over the generic field, certified by sandwich candidates.

    Returns (RankTable, all_certified).  For type D kinds the candidates are
    the x-check sandwiches over the even double cosets.
    """
    type_d = kind in TYPE_D_KINDS
    lanes = lanes or linalg.cert_lanes(r, 2, q0_one=type_d)
    entries = index_set(kind, n, r)
    classes = index_classes(entries)
    keys = list(classes)
    result = {}
    certified = True
    per_lane = [ModuleData(lane, type_d) for lane in lanes]
    for ki in keys:
        for kj in keys:
            ei, ej = classes[ki][0], classes[kj][0]
            val, ok = _squeeze_pair(per_lane, ei, ej)
            result[(ki, kj)] = val
            certified = certified and ok
    table = RankTable(kind, n, r, "K(q0=1)" if type_d else "K", keys,
                      {k: classes[k][1] for k in keys}, result)
    return table, certified


def _squeeze_pair(per_lane, ei, ej):
    best = None
    for md in per_lane:
        lane = md.lane
        A = md.right_span(ei)
        B = md.left_span(ej)
        upper = A.shape[0] + B.shape[0] - lane.rank(np.vstack([A, B]))
        C = _sandwich_rows(md, ei, ej)
        lower = lane.rank(C) if C.shape[0] else 0
        if lower == upper:
            return upper, True
        best = upper if best is None else min(best, upper)
    return best, False


def _sandwich_rows(md, ei, ej):
    """Rows gen_i T_d gen_j over the relevant double cosets (structural
    members of the intersection)."""
    lane = md.lane
    W = lane.W
    gi = lane.vec(md.generator(ei)).reshape(1, -1)
    gj = md.generator(ej)
    gj_spec = lane.algebra.from_coeffs(
        {i: c.eval_mod(lane.p, lane.q0, lane.q) for i, c in gj.coeffs.items()}
    )
    if md.type_d:
        universe = weyl.even_subgroup(lane.r)
    else:
        universe = range(W.order)
    sub_i = _stabilizer_indices(md, ei)
    sub_j = _stabilizer_indices(md, ej)
    rows = []
    for dc in weyl.double_cosets(sub_i, sub_j, universe, W):
        d = dc[0]
        v = lane.rmul_word(gi, W.words[d])
        rows.append(lane.rmul_elem(v, gj_spec)[0])
    return np.vstack(rows) if rows else np.zeros((0, lane.N), dtype=np.int64)


def _stabilizer_indices(md, entry):
    tag, lam = entry
    fam = "typeD" if md.type_d else "typeB"
    idxs = weyl.subgroup_indices(lam, fam)
    if tag == "f":
        W = md.lane.W
        idxs = tuple(sorted(int(W.rmul[0, W.lmul[0, i]]) for i in idxs))
    return idxs


# ---------------------------------------------------------------------------
# structure constants


class EndAlgebra:
    """Endomorphism algebra at a lane, on the class level.

    hom basis elements are echelon rows of the intersections; composition
    phi_h . phi_h' = phi_{h s} where gen_j s = h'.
    """

    def __init__(self, kind, n, r, lane, max_dim=20000):
        self.kind, self.n, self.r, self.lane = kind, n, r, lane
        self.entries = index_set(kind, n, r)
        self.classes = index_classes(self.entries)
        self.keys = list(self.classes)
        self.md = ModuleData(lane, kind in TYPE_D_KINDS)
        self.basis = {}
        total = 0
        for ki in self.keys:
            for kj in self.keys:
                A = self.md.right_span(self.classes[ki][0])
                B = self.md.left_span(self.classes[kj][0])
                _, basis = lane.intersect(A, B)
                self.basis[(ki, kj)] = basis
                total += basis.shape[0]
                if total > max_dim:
                    raise ResourceWarning("structure constants over the declared cap")
        self._left_mult = {}
        self._solvers = {}

    def class_dim(self):
        return sum(b.shape[0] for b in self.basis.values())

    def dimension(self):
        m = {k: v[1] for k, v in self.classes.items()}
        return sum(self.basis[(ki, kj)].shape[0] * m[ki] * m[kj]
                   for ki in self.keys for kj in self.keys)

    def _gen_left_matrix(self, kj):
        """Matrix of left multiplication by gen_j (columns indexed by W)."""
        if kj not in self._left_mult:
            lane = self.lane
            gen = self.md.generator(self.classes[kj][0])
            gs = lane.algebra.from_coeffs(
                {i: c.eval_mod(lane.p, lane.q0, lane.q) for i, c in gen.coeffs.items()}
            )
            rows = lane.lmul_elem(np.eye(lane.N, dtype=np.int64), gs)
            self._left_mult[kj] = rows  # row w = gen * T_w
        return self._left_mult[kj]

    def solve_generator_factor(self, kj, hrow):
        """s with gen_j * s = h (as a coefficient vector)."""
        L = self._gen_left_matrix(kj)
        s = self.lane.solve_right(L, hrow)
        if s is None:
            raise ValueError("hom image is not in gen * A")
        return s

    def compose(self, ki, kj, kk, hrow, hrow2):
        """Coefficients of phi_h . phi_h2 in basis[(ki, kk)]."""
        lane = self.lane
        s = self.solve_generator_factor(kj, hrow2)
        selem = lane.elem(s)
        prod = lane.rmul_elem(hrow.reshape(1, -1), selem)[0]
        coeffs = lane.solve_right(self.basis[(ki, kk)], prod)
        if coeffs is None:
            raise ValueError("composition left the hom basis span")
        return coeffs % lane.p

    def structure_tensor(self):
        """{(ki,kj,kk): array[b1, b2, b3]} of all composition expansions."""
        out = {}
        for ki in self.keys:
            for kj in self.keys:
                B1 = self.basis[(ki, kj)]
                if not B1.shape[0]:
                    continue
                for kk in self.keys:
                    B2 = self.basis[(kj, kk)]
                    B3 = self.basis[(ki, kk)]
                    if not B2.shape[0]:
                        continue
                    tens = np.zeros((B1.shape[0], B2.shape[0], max(B3.shape[0], 1)),
                                    dtype=np.int64)
                    for a in range(B1.shape[0]):
                        for b in range(B2.shape[0]):
                            c = self.compose(ki, kj, kk, B1[a], B2[b])
                            if B3.shape[0]:
                                tens[a, b, :] = c
                            else:
                                assert not c.size or not c.any()
                    out[(ki, kj, kk)] = tens
        return out


# ---------------------------------------------------------------------------
# base change scan


def spec_points(r, ring_specs):
    """Lanes for named specs: ("Fp", p, q0, q) or ("Qbig", k, q0_one) for a
    certification point standing in for a random Q point."""
    lanes = []
    for s in ring_specs:
        if s[0] == "Fp":
            _, p, q0, q = s
            lanes.append(VecLane(r, p, q0, q))
        elif s[0] == "Qbig":
            _, k, q0_one = s
            lanes.append(linalg.good_lane(r, k, q0_one=q0_one))
        else:
            raise ValueError("unknown spec %r" % (s,))
    return lanes


def base_change_scan(kind, n, r, lanes):
    """RankTables per lane plus the certified generic table; returns
    (generic_table, certified, tables, verdict, drops)."""
    gen_table, certified = certified_generic_table(kind, n, r)
    tables = []
    verdict = True
    drops = []
    for lane in lanes:
        t = hom_rank_table(kind, n, r, lane)
        tables.append(t)
        if not gen_table.same_values(t):
            verdict = False
            drops.extend([(lane.domain.name,) + d for d in gen_table.drops(t)])
    return gen_table, certified, tables, verdict, drops


# ---------------------------------------------------------------------------
# filtration ranks (hp1 / tsf1 / tsf2 shadows)


def filtration_rank_data(r, lam, mu, lane, Hgen=None):
    """Layer-by-layer ranks of x_lam H cap E^mu_i and (when sizes pair up)
    x_lam^eta H cap E^mu_i, against their combinatorial counts."""
    Hgen = Hgen or HeckeAlgebra(r)
    chain = tableaux.FiltrationChain(Hgen, mu)
    A = lane.right_ideal(Hgen.x(lam), weyl.coset_reps(lam))
    eta_ok = lam.a + mu.a == r
    Aeta = None
    if eta_ok:
        Aeta = lane.right_ideal(Hgen.x(lam).eta(), weyl.coset_reps(lam))
    out = []
    rows = np.zeros((0, lane.N), dtype=np.int64)
    expect = expect_eta = 0
    for i, (nu, t_tt, elems) in enumerate(chain.layers, start=1):
        new = np.vstack([lane.vec(h) for _, h in elems])
        rows = np.vstack([rows, new])
        dim, _ = lane.intersect(A, rows)
        expect += len(tableaux.semistandard_bitableaux(nu, lam))
        rec = {"i": i, "nu": str(nu), "rank": dim, "count": expect}
        if eta_ok:
            dim_e, _ = lane.intersect(Aeta, rows)
            if sum(nu.first) == mu.a:
                expect_eta += len(tableaux.semistandard_top(nu, lam.star()))
            rec["rank_eta"] = dim_e
            rec["count_eta"] = expect_eta
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# stratification (criterion: ordering condition over Pi+_1.5(4,4))


def specht_module_at_lane(Hgen, mu, lane, chain=None):
    """S_mu at the lane as a right module: action matrices of the type D
    generators on x_mu H / iota(E_{n_mu - 1})."""
    chain = chain or tableaux.FiltrationChain(Hgen, mu)
    r = Hgen.r
    # iota maps the left chain inside H x_mu onto a right chain in x_mu H
    sub_rows = []
    for nu, t_tt, elems in chain.layers[:-1]:
        for _, h in elems:
            sub_rows.append(lane.vec(h.iota()))
    top = lane.right_ideal(Hgen.x(mu), weyl.coset_reps(mu))
    sub = np.vstack(sub_rows) if sub_rows else np.zeros((0, lane.N), np.int64)
    sub_r, _ = lane.rref(sub)
    # quotient basis: rows of top independent of sub
    quot = []
    cur = sub_r.copy()
    for row in top:
        test = np.vstack([cur, row.reshape(1, -1)])
        if lane.rank(test) > cur.shape[0]:
            cur = test
            quot.append(row)
    quot = np.array(quot, dtype=np.int64)
    basis = np.vstack([sub_r, quot]) if sub_r.shape[0] else quot
    k = sub_r.shape[0]
    gen_words = [[0, 1, 0]] + [[g] for g in range(1, r)]
    actions = []
    for w in gen_words:
        rows = lane.rmul_word(quot, w)
        coords = _coords_mod(rows, basis, lane)
        actions.append(coords[:, k:] % lane.p)
    return modrep.GFModule(actions, lane.p), quot.shape[0]


def _coords_mod(rows, basis, lane):
    sol = []
    for v in rows:
        x = lane.solve_right(basis, v)
        if x is None:
            raise ValueError("row left the span")
        sol.append(x)
    return np.array(sol, dtype=np.int64)


def hom_dim_from_cyclic(module: modrep.GFModule, gen_entry, md: ModuleData):
    """dim Hom(gen A-check, S) at the lane, via the annihilator criterion:
    Hom is isomorphic to {m in S : m . ann_r(gen) = 0}, computed inside the
    even part of the algebra (the type D span)."""
    lane = md.lane
    if module.dim == 0:
        return 0
    gen = md.generator(gen_entry)
    gs = lane.algebra.from_coeffs(
        {i: c.eval_mod(lane.p, lane.q0, lane.q) for i, c in gen.coeffs.items()}
    )
    even = list(weyl.even_subgroup(lane.r))
    L = lane.lmul_elem(np.eye(lane.N, dtype=np.int64), gs)  # row w = gen T_w
    L_even = L[even]
    ann = lane.left_nullspace(L_even)  # rows over the even index set
    if ann.shape[0] == 0:
        return module.dim
    dwords = lane.W.dwords
    rho_cache = {}

    def rho(i):
        if i not in rho_cache:
            m = np.eye(module.dim, dtype=np.int64)
            for lab in dwords[i]:
                gi = 0 if lab == "u" else lab
                m = m.dot(module.actions[gi]) % lane.p
            rho_cache[i] = m
        return rho_cache[i]

    constraints = []
    for h in ann:
        m = np.zeros((module.dim, module.dim), dtype=np.int64)
        for k in np.nonzero(h % lane.p)[0]:
            m = (m + int(h[k]) * rho(even[int(k)])) % lane.p
        constraints.append(m)
    M = np.hstack(constraints)
    return module.dim - int(linalg._kernels.gf_rank(
        np.ascontiguousarray(M % lane.p), lane.p))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    name: str
    params: str
    expected: object
    computed: object

    @property
    def passed(self):
        return self.expected == self.computed

    def to_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": "pass" if self.passed else "FAIL",
        }


def _jsonable(x):
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def report_json(kind_or_suite, n, r, ring, checks, extra=None):
    doc = {
        "kind": kind_or_suite,
        "n": n,
        "r": r,
        "ring": ring,
        "checks": [c.to_dict() for c in checks],
        "status": "pass" if all(c.passed for c in checks) else "FAIL",
    }
    if extra:
        doc.update(_jsonable(extra))
    return json.dumps(doc, indent=1, sort_keys=True)
