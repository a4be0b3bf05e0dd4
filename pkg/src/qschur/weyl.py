"""
Weyl groups of types B, D and A as signed permutations.

W_r (type B_r) is realized as the group of signed permutations of
{1, ..., r}: bijections w of {-r, ..., -1, 1, ..., r} with w(-i) = -w(i),
stored as the window (w(1), ..., w(r)).  Generators:

    s0        = sign change of the value 1,  window (-1, 2, ..., r)
    s1..s_{r-1} = adjacent transpositions of values

Derived elements: t_1 = s0, t_i = s_{i-1} t_{i-1} s_{i-1} (sign change of
the value i), u_i = t_1 t_i, and u = s0 s1 s0.  The subgroup of elements
with an even number of negative window entries is the type D_r group
W'_r = <u, s1, ..., s_{r-1}>; the subgroup generated by s1..s_{r-1} is the
symmetric group S_r.

Products use the right-action convention: (i)(vw) = ((i)v)w, i.e. ``v * w``
means "apply v first, then w".  This matches the usual tableau action
t^nu . d and makes right cosets of row stabilizers correspond to
row-equivalence classes.

Lengths are computed by the closed formulas

    l(w)  = inv(w) + neg(w) + nsp(w)        (type B, generators s0..s_{r-1})
    lD(w) = inv(w) + nsp(w)                 (type D, generators u, s1..)

with inv(w) = #{i<j : w(i) > w(j)}, neg(w) = #{i : w(i) < 0} and
nsp(w) = #{i<j : w(i) + w(j) < 0}; both are cross-checked against Cayley
graph BFS in the test suite at small rank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

Window = tuple  # tuple of r nonzero signed ints


class SignedPermutation:
    """Element of W_r as an immutable signed window."""

    __slots__ = ("window",)

    def __init__(self, window):
        self.window = tuple(window)

    @property
    def rank(self):
        return len(self.window)

    def __mul__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch: %d vs %d" % (self.rank, other.rank))
        return SignedPermutation(compose_windows(self.window, other.window))

    def inverse(self):
        return SignedPermutation(invert_window(self.window))

    def __call__(self, i):
        """Image of the (signed) point i."""
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return "SignedPermutation(%r)" % (list(self.window),)

    def __str__(self):
        return format_window(self.window)

    def is_identity(self):
        return self.window == tuple(range(1, self.rank + 1))

    def length(self):
        return window_length(self.window)

    def n0(self):
        return sum(1 for x in self.window if x < 0)


def compose_windows(v, w):
    """Window of v*w ("apply v, then w")."""
    out = []
    for x in v:
        out.append(w[x - 1] if x > 0 else -w[-x - 1])
    return tuple(out)


def invert_window(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        if x > 0:
            out[x - 1] = i + 1
        else:
            out[-x - 1] = -(i + 1)
    return tuple(out)


def window_length(w):
    """Coxeter length in type B: inversions + negatives + negative-sum pairs."""
    r = len(w)
    inv = nsp = neg = 0
    for i in range(r):
        if w[i] < 0:
            neg += 1
        for j in range(i + 1, r):
            if w[i] > w[j]:
                inv += 1
            if w[i] + w[j] < 0:
                nsp += 1
    return inv + neg + nsp


def window_length_d(w):
    """Coxeter length in type D (only meaningful when neg(w) is even)."""
    r = len(w)
    inv = nsp = 0
    for i in range(r):
        for j in range(i + 1, r):
            if w[i] > w[j]:
                inv += 1
            if w[i] + w[j] < 0:
                nsp += 1
    return inv + nsp


def identity_window(r):
    return tuple(range(1, r + 1))


def right_gen_window(w, g):
    """Window of w * s_g (value action; g = 0 is the sign change s0)."""
    if g == 0:
        return tuple(-x if abs(x) == 1 else x for x in w)
    a, b = g, g + 1
    out = []
    for x in w:
        ax = abs(x)
        if ax == a:
            out.append(b if x > 0 else -b)
        elif ax == b:
            out.append(a if x > 0 else -a)
        else:
            out.append(x)
    return tuple(out)


def left_gen_window(w, g):
    """Window of s_g * w (position action)."""
    if g == 0:
        return (-w[0],) + w[1:]
    lst = list(w)
    lst[g - 1], lst[g] = lst[g], lst[g - 1]
    return tuple(lst)


def format_window(w):
    return "[" + ", ".join(str(x) for x in w) + "]"


def format_word(word):
    if not word:
        return "e"
    return ".".join("s%d" % g for g in word)


def parse_element(text, r=None):
    """Parse "[−2, 1, 3]" window notation or "s1.s0.s1" word notation."""
    text = text.strip().replace("−", "-")
    if text.startswith("["):
        body = text[1:text.index("]")]
        window = tuple(int(p) for p in body.split(",")) if body.strip() else ()
        seen = sorted(abs(x) for x in window)
        if seen != list(range(1, len(window) + 1)) or (r is not None and len(window) != r):
            raise ValueError("not a signed window: %r" % text)
        return SignedPermutation(window)
    if r is None:
        raise ValueError("word notation needs an explicit rank")
    if text in ("e", ""):
        return SignedPermutation(identity_window(r))
    word = []
    for tok in text.split("."):
        tok = tok.strip()
        if tok == "u":
            word.extend([0, 1, 0])
            continue
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise ValueError("bad generator token %r" % tok)
        word.append(int(tok[1:]))
    return from_word(r, word)


def from_word(r, word):
    """Product of generator labels, left to right; labels are ints 0..r-1,
    strings "s0".."s%d", or "u" (= s0.s1.s0)."""
    w = identity_window(r)
    for lab in word:
        if lab == "u":
            if r < 2:
                raise ValueError("u needs rank >= 2")
            for g in (0, 1, 0):
                w = right_gen_window(w, g)
            continue
        if isinstance(lab, str):
            if not (lab.startswith("s") and lab[1:].isdigit()):
                raise ValueError("unknown generator label %r" % lab)
            lab = int(lab[1:])
        if not 0 <= lab < r:
            raise ValueError("generator index %d out of range for rank %d" % (lab, r))
        w = right_gen_window(w, lab)
    return SignedPermutation(w)


# ---------------------------------------------------------------------------
# the full group, indexed


class WeylGroup:
    """All of W_r, enumerated and indexed, with generator action tables.

    Elements are sorted by (length, window); every piece of downstream
    linear algebra relies on this fixed order.
    """

    def __init__(self, r):
        if r < 1:
            raise ValueError("rank must be >= 1")
        self.r = r
        windows = []
        for perm in itertools.permutations(range(1, r + 1)):
            for signs in itertools.product((1, -1), repeat=r):
                windows.append(tuple(s * p for s, p in zip(signs, perm)))
        windows.sort(key=lambda w: (window_length(w), w))
        self.windows = windows
        self.index = {w: i for i, w in enumerate(windows)}
        n = len(windows)
        self.order = n
        self.length = np.array([window_length(w) for w in windows], dtype=np.int64)
        self.n0 = np.array([sum(1 for x in w if x < 0) for w in windows], dtype=np.int64)
        self.inv = np.array([self.index[invert_window(w)] for w in windows], dtype=np.int64)
        self.rmul = np.empty((r, n), dtype=np.int64)
        self.lmul = np.empty((r, n), dtype=np.int64)
        for g in range(r):
            for i, w in enumerate(windows):
                self.rmul[g, i] = self.index[right_gen_window(w, g)]
                self.lmul[g, i] = self.index[left_gen_window(w, g)]
        self.id = self.index[identity_window(r)]
        self._words = None
        self._dlen = None
        self._dwords = None

    # -- basic ops on indices

    def compose(self, i, j):
        return self.index[compose_windows(self.windows[i], self.windows[j])]

    def element(self, i):
        return SignedPermutation(self.windows[i])

    def idx(self, w):
        if isinstance(w, SignedPermutation):
            w = w.window
        return self.index[w]

    @property
    def words(self):
        """Reduced words for every element (least right descent stripped
        repeatedly), as lists of generator labels multiplying left to right."""
        if self._words is None:
            words = [None] * self.order
            words[self.id] = []
            # elements are sorted by length, so a single sweep suffices
            for i in range(self.order):
                if words[i] is not None:
                    continue
                li = self.length[i]
                for g in range(self.r):
                    j = self.rmul[g, i]
                    if self.length[j] == li - 1:
                        if words[j] is None:
                            # j has smaller length, hence a smaller index range;
                            # fill it recursively (rare: order is length-sorted)
                            words[j] = self._word_of(j, words)
                        words[i] = words[j] + [g]
                        break
            self._words = words
        return self._words

    def _word_of(self, i, words):
        if words[i] is not None:
            return words[i]
        for g in range(self.r):
            j = self.rmul[g, i]
            if self.length[j] == self.length[i] - 1:
                return self._word_of(j, words) + [g]
        raise AssertionError("no descent found")

    def reduced_word(self, w):
        return list(self.words[self.idx(w)])

    @property
    def dlength(self):
        """Type D length (BFS over <u, s1, ...>); -1 off the even-n0 subgroup."""
        if self._dlen is None:
            dlen = np.full(self.order, -1, dtype=np.int64)
            dlen[self.id] = 0
            frontier = [self.id]
            # right multiplication by the type D generators
            gens = []
            if self.r >= 2:
                gens.append(("u", None))
            for g in range(1, self.r):
                gens.append(("s", g))
            dist = 0
            while frontier:
                dist += 1
                nxt = []
                for i in frontier:
                    for kind, g in gens:
                        if kind == "s":
                            j = self.rmul[g, i]
                        else:
                            j = self.rmul[0, self.rmul[1, self.rmul[0, i]]]
                        if dlen[j] == -1:
                            dlen[j] = dist
                            nxt.append(j)
                frontier = nxt
            self._dlen = dlen
        return self._dlen

    @property
    def dwords(self):
        """Reduced words over the type D generators for even-n0 elements;
        labels: "u" for s0 s1 s0 and plain ints for s_g.  None elsewhere."""
        if self._dwords is None:
            words = [None] * self.order
            words[self.id] = []
            frontier = [self.id]
            gens = ([("u", None)] if self.r >= 2 else []) + \
                   [("s", g) for g in range(1, self.r)]
            while frontier:
                nxt = []
                for i in frontier:
                    for kind, g in gens:
                        if kind == "s":
                            j = int(self.rmul[g, i])
                            lab = g
                        else:
                            j = int(self.rmul[0, self.rmul[1, self.rmul[0, i]]])
                            lab = "u"
                        if words[j] is None:
                            words[j] = words[i] + [lab]
                            nxt.append(j)
                frontier = nxt
            self._dwords = words
        return self._dwords

    def length_stats(self, w):
        """(l, n0, lD or None) for an element."""
        i = self.idx(w)
        n0 = int(self.n0[i])
        dl = int(self.dlength[i]) if n0 % 2 == 0 else None
        return int(self.length[i]), n0, dl


@lru_cache(maxsize=None)
def weyl_group(r):
    return WeylGroup(r)


def t_element(r, i):
    """t_i: sign change of the value i."""
    if not 1 <= i <= r:
        raise ValueError("t_%d undefined at rank %d" % (i, r))
    return SignedPermutation(tuple(-x if abs(x) == i else x for x in identity_window(r)))


def u_element(r, i):
    """u_i = t_1 t_i."""
    return t_element(r, 1) * t_element(r, i)


def s_element(r, g):
    return from_word(r, [g])


def w_ab(r, a, b):
    """w_{a,b}: i -> b+i for i <= a and a+j -> j for j <= b, fixing the rest."""
    if a < 0 or b < 0 or a + b > r:
        raise ValueError("need a, b >= 0 with a + b <= r")
    win = [0] * r
    for i in range(1, a + 1):
        win[i - 1] = b + i
    for j in range(1, b + 1):
        win[a + j - 1] = j
    for k in range(a + b + 1, r + 1):
        win[k - 1] = k
    return SignedPermutation(tuple(win))


def flip(w):
    """The inner automorphism g -> s0 g s0 (graph flip on the type D subgroup)."""
    r = w.rank
    s0 = s_element(r, 0)
    return s0 * w * s0


# ---------------------------------------------------------------------------
# bicompositions and index sets


@dataclass(frozen=True)
class Bicomposition:
    """Pair of compositions (zeros allowed and kept) with |first|+|second| = r."""

    first: tuple
    second: tuple

    def __post_init__(self):
        if any(p < 0 for p in self.first + self.second):
            raise ValueError("negative part")

    @property
    def r(self):
        return sum(self.first) + sum(self.second)

    @property
    def a(self):
        """Size of the first component."""
        return sum(self.first)

    def bar(self):
        """The juxtaposed composition."""
        return self.first + self.second

    def star(self):
        return Bicomposition(self.second, self.first)

    def is_bipartition(self):
        return _weakly_decreasing(self.first) and _weakly_decreasing(self.second)

    def key(self):
        """Both components with zero parts removed (same subgroup, same x)."""
        return (tuple(p for p in self.first if p), tuple(p for p in self.second if p))

    def __str__(self):
        return "(%s;%s)" % (",".join(map(str, self.first)), ",".join(map(str, self.second)))


def _weakly_decreasing(t):
    return all(t[i] >= t[i + 1] for i in range(len(t) - 1))


def parse_bicomposition(text):
    """Parse "(a1,a2,..;b1,b2,..)"; "()" stands for an empty component."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("bicomposition must be parenthesized: %r" % text)
    body = text[1:-1]
    if ";" not in body:
        raise ValueError("bicomposition needs ';': %r" % text)
    left, right = body.split(";", 1)

    def side(s):
        s = s.strip()
        if s in ("", "()", "-"):
            return ()
        return tuple(int(p) for p in s.split(","))

    return Bicomposition(side(left), side(right))


def omega(r, a):
    """omega_a = (1^a ; 1^{r-a})."""
    return Bicomposition((1,) * a, (1,) * (r - a))


def omega_hat(r, a):
    return Bicomposition((a,), (1,) * (r - a))


def compositions(n, k):
    """All compositions of k with exactly n parts, zeros allowed (lex order)."""
    if n == 0:
        return [()] if k == 0 else []
    out = []

    def rec(prefix, rest, slots):
        if slots == 1:
            out.append(prefix + (rest,))
            return
        for p in range(rest + 1):
            rec(prefix + (p,), rest - p, slots - 1)

    rec((), k, n)
    return out


def partitions(k, max_part=None):
    """All partitions of k (no zero parts), largest part first, lex-descending."""
    if max_part is None:
        max_part = k
    if k == 0:
        return [()]
    out = []
    for p in range(min(k, max_part), 0, -1):
        for rest in partitions(k - p, p):
            out.append((p,) + rest)
    return out


def pi2(n, r):
    """Pi_2(n, r): first component n_r = max(n, r) parts, second n parts."""
    nr = max(n, r)
    out = []
    for r1 in range(r + 1):
        for f in compositions(nr, r1):
            for s in compositions(n, r - r1):
                out.append(Bicomposition(f, s))
    return out


def pi2_plus(n, r):
    return [lam for lam in pi2(n, r) if lam.is_bipartition()]


def pi1(n, r):
    return [lam for lam in pi2(n, r) if sum(lam.second) == 0]


def pi1b(n, r):
    return [lam for lam in pi2(n, r) if sum(lam.first) == 0]


def pi15(n, r):
    return [lam for lam in pi2(n, r) if sum(lam.first) >= sum(lam.second)]


def pi15_plus(n, r):
    return [lam for lam in pi15(n, r) if lam.is_bipartition()]


def bipartitions(r):
    """All bipartitions of r (no zero padding), ordered by (|first| desc, lex)."""
    out = []
    for a in range(r, -1, -1):
        for f in partitions(a):
            for s in partitions(r - a):
                out.append(Bicomposition(f, s))
    return out


# ---------------------------------------------------------------------------
# quasi-parabolic subgroups


class QuasiParabolic:
    """W_lambda = C_lambda S_bar(lambda) (type B), its type D and A variants."""

    FAMILIES = ("typeB", "typeD", "typeA")

    def __init__(self, lam: Bicomposition, family="typeB"):
        if family not in self.FAMILIES:
            raise ValueError("unknown family %r" % family)
        self.lam = lam
        self.family = family
        self.r = lam.r

    def generator_labels(self):
        """Generating subset of S-tilde = S cup {t_1..t_r}, as tagged labels."""
        labs = []
        a = self.lam.a
        if self.family == "typeB":
            labs += [("t", i) for i in range(1, a + 1)]
        elif self.family == "typeD":
            labs += [("u", i) for i in range(2, a + 1)]
        # adjacent transpositions interior to the blocks of bar(lambda)
        pos = 0
        for part in self.lam.bar():
            for i in range(pos + 1, pos + part):
                labs.append(("s", i))
            pos += part
        return labs

    def generators(self):
        r = self.r
        out = []
        for kind, i in self.generator_labels():
            if kind == "t":
                out.append(t_element(r, i))
            elif kind == "u":
                out.append(u_element(r, i))
            else:
                out.append(s_element(r, i))
        return out

    def order(self):
        a = self.lam.a
        base = 1
        for part in self.lam.bar():
            base *= factorial(part)
        if self.family == "typeB":
            return (2 ** a) * base
        if self.family == "typeA":
            return base
        return (2 ** (a - 1)) * base if a >= 1 else base

    def element_indices(self, W=None):
        """Sorted element indices, by BFS closure over the generators."""
        W = W or weyl_group(self.r)
        gens = [W.idx(g) for g in self.generators()]
        seen = {W.id}
        frontier = [W.id]
        while frontier:
            nxt = []
            for i in frontier:
                for g in gens:
                    j = W.compose(i, g)
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
        out = sorted(seen)
        assert len(out) == self.order(), (self.lam, self.family, len(out), self.order())
        return out

    def elements(self):
        W = weyl_group(self.r)
        return [W.element(i) for i in self.element_indices(W)]

    def contains(self, w):
        W = weyl_group(self.r)
        return W.idx(w) in set(self.element_indices(W))


@lru_cache(maxsize=None)
def _subgroup_indices(r, first, second, family):
    qp = QuasiParabolic(Bicomposition(first, second), family)
    return tuple(qp.element_indices(weyl_group(r)))


def subgroup_indices(lam, family="typeB"):
    return _subgroup_indices(lam.r, lam.first, lam.second, family)


# ---------------------------------------------------------------------------
# distinguished coset representatives


@lru_cache(maxsize=None)
def _coset_reps(r, first, second, family):
    W = weyl_group(r)
    sub = _subgroup_indices(r, first, second, family)
    seen = set()
    reps = []
    for i in range(W.order):
        if i in seen:
            continue
        coset = sorted(W.compose(x, i) for x in sub)
        lengths = [W.length[j] for j in coset]
        lo = min(lengths)
        assert lengths.count(lo) == 1, "coset minimum not unique"
        reps.append(coset[lengths.index(lo)])
        seen.update(coset)
    reps.sort()
    return tuple(reps)


def coset_reps(lam, family="typeB"):
    """The set D_lambda of minimal right coset representatives (W_lambda d)."""
    return _coset_reps(lam.r, lam.first, lam.second, family)


def double_reps(lam, mu, family="typeB", tip=False):
    """D_{lambda,mu} = D_lambda cap D_mu^{-1}; with tip=True keep only the
    representatives d with W_lambda^d cap W_mu = {1}."""
    W = weyl_group(lam.r)
    dl = set(coset_reps(lam, family))
    dm = set(coset_reps(mu, family))
    out = sorted(i for i in dl if int(W.inv[i]) in dm)
    if tip:
        out = [d for d in out if _trivial_intersection(W, lam, mu, d, family)]
    return tuple(out)


def _trivial_intersection(W, lam, mu, d, family):
    sub_l = _subgroup_indices(lam.r, lam.first, lam.second, family)
    sub_m = set(_subgroup_indices(mu.r, mu.first, mu.second, family))
    di = int(W.inv[d])
    for x in sub_l:
        if x == W.id:
            continue
        if W.compose(W.compose(di, x), d) in sub_m:
            return False
    return True


def even_subgroup(r):
    """Indices of the type D subgroup (even number of negative entries)."""
    W = weyl_group(r)
    return tuple(i for i in range(W.order) if W.n0[i] % 2 == 0)


def double_cosets(sub_a, sub_b, universe, W):
    """Partition of the universe into A-B double cosets (as sorted tuples)."""
    universe = list(universe)
    seen = set()
    out = []
    uset = set(universe)
    for i in universe:
        if i in seen:
            continue
        coset = {W.compose(W.compose(x, i), y) for x in sub_a for y in sub_b}
        assert coset <= uset, "double coset leaves the universe"
        seen |= coset
        out.append(tuple(sorted(coset)))
    return out


def min_parabolic(lam):
    """lambda-hat = ((a), second): the minimal parabolic over W_lambda."""
    return Bicomposition((lam.a,), lam.second)


def howlett_decompose(d, lam, mu):
    """Right distinguished decomposition d = u d-hat v with d-hat the
    parabolic double coset representative in W_lhat d W_mhat."""
    W = weyl_group(lam.r)
    di = W.idx(d) if isinstance(d, SignedPermutation) else d
    if di not in set(double_reps(lam, mu)):
        raise ValueError("element is not in D_{lambda,mu}")
    lhat, mhat = min_parabolic(lam), min_parabolic(mu)
    sub_l = _subgroup_indices(lam.r, lhat.first, lhat.second, "typeB")
    sub_m = _subgroup_indices(mu.r, mhat.first, mhat.second, "typeB")
    coset = {W.compose(W.compose(x, di), y) for x in sub_l for y in sub_m}
    dhat = min(coset, key=lambda i: (int(W.length[i]), W.windows[i]))
    lows = [i for i in coset if W.length[i] == W.length[dhat]]
    assert len(lows) == 1, "parabolic double coset minimum not unique"
    # v runs over the distinguished (W_lhat^dhat cap W_mhat)-coset reps in W_mhat
    dhi = int(W.inv[dhat])
    inter = sorted(
        y for y in sub_m if W.compose(W.compose(dhat, y), dhi) in set(sub_l)
    )
    for y in sub_m:
        u = W.compose(W.compose(di, int(W.inv[y])), dhi)
        if u not in set(sub_l):
            continue
        if W.length[di] != W.length[u] + W.length[dhat] + W.length[y]:
            continue
        ycos = [W.compose(z, y) for z in inter]
        if W.length[y] == min(int(W.length[j]) for j in ycos):
            return W.element(u), W.element(dhat), W.element(y)
    raise AssertionError("Howlett decomposition not found")


def w2_element(r, a, beta, gamma):
    """The distinguished S_{(1^a, lam2)}-S_{(1^a, |beta|, |gamma|)} double coset
    representative inside S_{a+1..r} satisfying both conjugation-intersection
    identities; unique, found by exhaustive search."""
    lam2 = tuple(b + c for b, c in zip(beta, gamma))
    if sum(lam2) != r - a:
        raise ValueError("beta + gamma must be a composition of r - a")
    b, c = sum(beta), sum(gamma)
    interleave = tuple(x for pair in zip(beta, gamma) for x in pair)
    big = Bicomposition((1,) * a, (r - a,))
    top = subgroup_indices(big, "typeA")
    sub1 = set(subgroup_indices(Bicomposition((1,) * a, lam2), "typeA"))
    sub2 = set(subgroup_indices(Bicomposition((1,) * a, (b, c)), "typeA"))
    target_mid = set(subgroup_indices(Bicomposition((1,) * a, interleave), "typeA"))
    target_right = set(subgroup_indices(Bicomposition((1,) * a, beta + gamma), "typeA"))
    W = weyl_group(r)
    found = None
    for d in top:
        dinv = int(W.inv[d])
        # S_{(1^a,lam2)} cap d S_{(1^a,b,c)} d^{-1}  =  S_{(1^a,(beta|gamma))}
        meet = {x for x in sub1 if W.compose(W.compose(dinv, x), d) in sub2}
        if meet != target_mid:
            continue
        # d^{-1} S_{(1^a,lam2)} d cap S_{(1^a,b,c)}  =  S_{(1^a,(beta,gamma))}
        if {W.compose(W.compose(dinv, x), d) for x in meet} != target_right:
            continue
        # distinguished: minimal length in its double coset
        dc = {W.compose(W.compose(x, d), y) for x in sub1 for y in sub2}
        if W.length[d] != min(int(W.length[i]) for i in dc):
            continue
        assert found is None, "w2 representative not unique"
        found = d
    if found is None:
        raise AssertionError("w2 representative not found")
    return W.element(found)
