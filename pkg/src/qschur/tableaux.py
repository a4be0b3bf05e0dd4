"""
Bitableau combinatorics and the Murphy / bistandard / induced bases.

Standard bitableaux of shape nu = (nu1, nu2) are pairs of fillings using
each of 1..r once, rows and columns strictly increasing in each component.
The map f sends a standard bitableau to its type-lambda letter image, where
the letters of a bicomposition lambda are the symbols (1, i) (first
component, i-th part) and (2, i), ordered lexicographically.  A letter
tableau is semistandard when rows weakly increase, columns strictly
increase, and component 2 carries only second-alphabet letters (component 1
may carry both alphabets).  This convention is certified, not assumed: the
counting identities sum #T^ss(nu, lambda) #T^ss(nu, mu) = #D_{lambda, mu}
and the omega-type identifications are part of the test suite, and the
mirrored convention already fails them at r = 1.

delta(t) is the permutation with t = t^nu . delta(t) (entrywise right
action), where t^nu is row-filled along the first then the second diagram.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import weyl
from .weyl import Bicomposition, SignedPermutation

# ---------------------------------------------------------------------------
# dominance order on bicompositions


def dominance(lam: Bicomposition, mu: Bicomposition):
    """Partial order: returns "<=", ">=", "=", or "incomparable"."""
    if lam.r != mu.r:
        raise ValueError("different sizes")
    le = _dominated(lam, mu)
    ge = _dominated(mu, lam)
    if le and ge:
        return "="
    if le:
        return "<="
    if ge:
        return ">="
    return "incomparable"


def _dominated(lam, mu):
    """lam <= mu: partial sums of first components, then shifted seconds."""
    n1 = max(len(lam.first), len(mu.first))
    s_l = s_m = 0
    for j in range(n1):
        s_l += lam.first[j] if j < len(lam.first) else 0
        s_m += mu.first[j] if j < len(mu.first) else 0
        if s_l > s_m:
            return False
    a_l, a_m = sum(lam.first), sum(mu.first)
    n2 = max(len(lam.second), len(mu.second))
    s_l = s_m = 0
    for j in range(n2):
        s_l += lam.second[j] if j < len(lam.second) else 0
        s_m += mu.second[j] if j < len(mu.second) else 0
        if a_l + s_l > a_m + s_m:
            return False
    return True


def dominance_key(nu: Bicomposition):
    """Sort key refining reverse dominance: nu before nu' whenever nu
    dominates nu'."""
    return (
        -sum(nu.first),
        tuple(-p for p in nu.first),
        tuple(-p for p in nu.second),
    )


# ---------------------------------------------------------------------------
# type A tableaux (letters 1..n)


@lru_cache(maxsize=None)
def standard_tableaux(shape):
    """All standard Young tableaux of a partition shape, as row tuples."""
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []

    def grow(tab, k):
        if k > n:
            out.append(tuple(tuple(row) for row in tab))
            return
        for i in range(len(shape)):
            row_len = len(tab[i])
            if row_len >= shape[i]:
                continue
            if i > 0 and len(tab[i - 1]) <= row_len:
                continue
            tab[i].append(k)
            grow(tab, k + 1)
            tab[i].pop()

    grow([[] for _ in shape], 1)
    return tuple(out)


@lru_cache(maxsize=None)
def ssyt(shape, content):
    """Semistandard tableaux of a partition shape with the given content
    (content[i] copies of letter i+1); rows weak, columns strict."""
    n = sum(shape)
    if sum(content) != n:
        return ()
    out = []
    counts = list(content)

    def cell_iter():
        for i, ln in enumerate(shape):
            for j in range(ln):
                yield i, j

    cells = list(cell_iter())

    def grow(tab, idx):
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in tab))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, tab[i][j - 1])
        if i > 0:
            lo = max(lo, tab[i - 1][j] + 1)
        for letter in range(lo, len(counts) + 1):
            if counts[letter - 1] == 0:
                continue
            counts[letter - 1] -= 1
            tab[i].append(letter)
            grow(tab, idx + 1)
            tab[i].pop()
            counts[letter - 1] += 1

    grow([[] for _ in shape], 0)
    return tuple(out)


def row_reading(tab):
    return tuple(x for row in tab for x in row)


def delta_bar(tab, n=None, offset=0):
    """Permutation window of delta(t) in S_n: the row filling of the shape,
    shifted by offset, is sent to the entries of t."""
    entries = row_reading(tab)
    n = n if n is not None else len(entries)
    win = list(range(1, n + 1))
    for k, e in enumerate(entries):
        win[offset + k] = e
    return tuple(win)


def f_bar(tab, content):
    """Letter image of a type A tableau: entry k becomes its content block."""
    bounds = []
    tot = 0
    for c in content:
        tot += c
        bounds.append(tot)

    def letter(k):
        for i, b in enumerate(bounds):
            if k <= b:
                return i + 1
        raise ValueError("entry out of range")

    return tuple(tuple(letter(x) for x in row) for row in tab)


@lru_cache(maxsize=None)
def fiber_bar(shape, letters, content):
    """Standard tableaux mapping to the given letter tableau under f_bar."""
    return tuple(t for t in standard_tableaux(shape) if f_bar(t, content) == letters)


# ---------------------------------------------------------------------------
# bitableaux


def _strip(comp):
    return tuple(p for p in comp if p)


@lru_cache(maxsize=None)
def standard_bitableaux(nu1, nu2):
    """All standard bitableaux of shape (nu1, nu2) on entries 1..r."""
    nu1, nu2 = _strip(nu1), _strip(nu2)
    a, b = sum(nu1), sum(nu2)
    r = a + b
    out = []
    for first_set in itertools.combinations(range(1, r + 1), a):
        second_set = tuple(x for x in range(1, r + 1) if x not in set(first_set))
        for t1 in standard_tableaux(nu1):
            t1r = _relabel(t1, first_set)
            for t2 in standard_tableaux(nu2):
                out.append((t1r, _relabel(t2, second_set)))
    return tuple(out)


def _relabel(tab, values):
    return tuple(tuple(values[x - 1] for x in row) for row in tab)


def super_bitableau(nu1, nu2):
    """t^nu: 1..r row-filled along the first then the second diagram."""
    nu1, nu2 = _strip(nu1), _strip(nu2)
    k = 1
    comp1 = []
    for ln in nu1:
        comp1.append(tuple(range(k, k + ln)))
        k += ln
    comp2 = []
    for ln in nu2:
        comp2.append(tuple(range(k, k + ln)))
        k += ln
    return (tuple(comp1), tuple(comp2))


def delta(bt, r=None):
    """delta(t) in S_r with t = t^nu . delta(t) (entry replacement)."""
    entries = row_reading(bt[0]) + row_reading(bt[1])
    r = r if r is not None else len(entries)
    win = list(range(1, r + 1))
    for k, e in enumerate(entries):
        win[k] = e
    return SignedPermutation(tuple(win))


def star(bt):
    return (bt[1], bt[0])


def f_map(bt, lam: Bicomposition):
    """Letter image of a standard bitableau for the type lambda."""
    bounds = []
    tot = 0
    for i, c in enumerate(lam.first):
        tot += c
        bounds.append((tot, (1, i + 1)))
    for i, c in enumerate(lam.second):
        tot += c
        bounds.append((tot, (2, i + 1)))

    def letter(k):
        for b, sym in bounds:
            if k <= b:
                return sym
        raise ValueError("entry out of range")

    return (
        tuple(tuple(letter(x) for x in row) for row in bt[0]),
        tuple(tuple(letter(x) for x in row) for row in bt[1]),
    )


def star_typed(tt):
    """Star on letter tableaux: swap components and swap the two alphabets."""
    sw = lambda rows: tuple(tuple((3 - c, i) for (c, i) in row) for row in rows)
    return (sw(tt[1]), sw(tt[0]))


def is_semistandard_typed(tt):
    """Rows weak, columns strict (lex order on symbols), component 2 pure."""
    for d, rows in enumerate(tt):
        for row in rows:
            for x, y in zip(row, row[1:]):
                if y < x:
                    return False
        for i in range(1, len(rows)):
            for j in range(len(rows[i])):
                if rows[i][j] <= rows[i - 1][j]:
                    return False
        if d == 1:
            for row in rows:
                for (c, _) in row:
                    if c < 2:
                        return False
    return True


def _typed_content_ok(tt, lam):
    from collections import Counter

    cnt = Counter(x for rows in tt for row in rows for x in row)
    for i, c in enumerate(lam.first):
        if cnt.get((1, i + 1), 0) != c:
            return False
    for i, c in enumerate(lam.second):
        if cnt.get((2, i + 1), 0) != c:
            return False
    return True


@lru_cache(maxsize=None)
def _semistandard_cached(nu1, nu2, first, second):
    lam = Bicomposition(first, second)
    nu1s, nu2s = _strip(nu1), _strip(nu2)
    out = []
    n2 = len(lam.second)
    # split the second-alphabet letters between the two components
    seconds = list(lam.second)
    for split in itertools.product(*[range(c + 1) for c in seconds]):
        to1 = list(split)
        to2 = [c - s for c, s in zip(seconds, to1)]
        if sum(to2) != sum(nu2s):
            continue
        # component 2: pure second-alphabet SSYT
        for t2 in ssyt(nu2s, tuple(to2)):
            rows2 = tuple(tuple((2, x) for x in row) for row in t2)
            # component 1: mixed alphabet; letters (1,1)..(1,n1),(2,1)..(2,n2)
            mixed_content = tuple(lam.first) + tuple(to1)
            n1 = len(lam.first)
            for t1 in ssyt(nu1s, mixed_content):
                rows1 = tuple(
                    tuple((1, x) if x <= n1 else (2, x - n1) for x in row)
                    for row in t1
                )
                out.append((rows1, rows2))
    out = [tt for tt in out if is_semistandard_typed(tt)]
    assert all(_typed_content_ok(tt, lam) for tt in out)
    return tuple(sorted(out))


def semistandard_bitableaux(nu: Bicomposition, lam: Bicomposition):
    """T^ss(nu, lambda) for a bipartition shape nu and a type lambda."""
    return _semistandard_cached(nu.first, nu.second, lam.first, lam.second)


@lru_cache(maxsize=None)
def _fiber_cached(nu1, nu2, tt, first, second):
    lam = Bicomposition(first, second)
    return tuple(
        bt for bt in standard_bitableaux(nu1, nu2) if f_map(bt, lam) == tt
    )


def fiber(nu: Bicomposition, tt, lam: Bicomposition):
    """T_s: the standard bitableaux with letter image tt (any letter tableau)."""
    return _fiber_cached(nu.first, nu.second, tt, lam.first, lam.second)


def top_standard(nu: Bicomposition):
    """Standard bitableaux whose first component holds exactly 1..|nu1|."""
    m = sum(nu.first)
    want = tuple(range(1, m + 1))
    return tuple(
        bt
        for bt in standard_bitableaux(nu.first, nu.second)
        if tuple(sorted(row_reading(bt[0]))) == want
    )


def semistandard_top(nu: Bicomposition, lam: Bicomposition):
    """T^ss_m(nu, lambda): semistandard with fiber inside top_standard(nu)."""
    tops = set(top_standard(nu))
    out = []
    for tt in semistandard_bitableaux(nu, lam):
        fib = fiber(nu, tt, lam)
        if fib and all(bt in tops for bt in fib):
            out.append(tt)
    return tuple(out)


# ---------------------------------------------------------------------------
# basis builders


def murphy_x(H, beta, s_tab, t_tab, offset=0):
    """Murphy element T_{delta(s)^{-1}} xbar_beta T_{delta(t)} for type A
    tableaux of shape beta living on the letters offset+1..offset+|beta|."""
    r = H.r
    xb = H.xbar(_embed_composition(beta, r, offset))
    ds = SignedPermutation(delta_bar(s_tab, r, offset))
    dt = SignedPermutation(delta_bar(t_tab, r, offset))
    return H.T(ds.inverse()) * xb * H.T(dt)


def _embed_composition(beta, r, offset):
    head = (1,) * offset + tuple(beta)
    rest = r - sum(head)
    return Bicomposition((), head + (1,) * rest)


def m_pair(H, gamma, s_letter, t_letter, content_s, content_t, offset=0):
    """m^a_{s t} = sum of Murphy elements over both type A fibers."""
    out = H.zero()
    for s_tab in fiber_bar(gamma, s_letter, content_s):
        for t_tab in fiber_bar(gamma, t_letter, content_t):
            out = out + murphy_x(H, gamma, s_tab, t_tab, offset)
    return out


def x_basis_elem(H, nu: Bicomposition, s_tt, t_tt, lam, mu):
    """X^nu_{s t} summed over both fibers (semistandard letter indices)."""
    x_nu = H.x(nu)
    out = H.zero()
    for bs in fiber(nu, s_tt, lam):
        for bt in fiber(nu, t_tt, mu):
            out = out + H.T(delta(bs, H.r).inverse()) * x_nu * H.T(delta(bt, H.r))
    return out


def x_basis_elem_mixed(H, nu: Bicomposition, bs, t_tt, mu):
    """X^nu_{s t} with a fixed standard s and a semistandard t."""
    x_nu = H.x(nu)
    left = H.T(delta(bs, H.r).inverse()) * x_nu
    out = H.zero()
    for bt in fiber(nu, t_tt, mu):
        out = out + left * H.T(delta(bt, H.r))
    return out


def bistandard_basis(H, lam: Bicomposition, mu: Bicomposition):
    """X_{lam, mu}: the bistandard basis of x_lam H cap H x_mu, as a list of
    (nu, s, t, element), nu running over bipartitions in dominance order."""
    r = H.r
    out = []
    for nu in sorted(weyl.bipartitions(r), key=dominance_key):
        ss = semistandard_bitableaux(nu, lam)
        ts = semistandard_bitableaux(nu, mu)
        for s_tt in ss:
            for t_tt in ts:
                out.append((nu, s_tt, t_tt, x_basis_elem(H, nu, s_tt, t_tt, lam, mu)))
    return out


# -- induced bases (a + b = r)


def _top_factors(nu: Bicomposition, tt):
    """Split a top semistandard letter tableau into its type A factors.

    Component 1 letters are (1, i); component 2 letters (2, i).  Returns the
    two pure letter tableaux on plain integers.
    """
    comp1 = tuple(tuple(i for (_, i) in row) for row in tt[0])
    comp2 = tuple(tuple(i for (_, i) in row) for row in tt[1])
    return comp1, comp2


def y_induced_basis(H, lam: Bicomposition, mu: Bicomposition):
    """Y_{lam^-, mu} = {m^a pi(a^-, b) m^b}: the Murphy-type basis of
    x_lam^eta H cap H x_mu; needs |lam1| + |mu1| = r.

    Returns (label, element) pairs, label = (nu, s1, s2, t1, t2) with the
    type A letter tableaux: s1 in Tbar^ss(nu1, lam2), s2 in Tbar^ss(nu2,
    lam1), t1 in Tbar^ss(nu1, mu1), t2 in Tbar^ss(nu2, mu2).
    """
    r = H.r
    a, b = lam.a, mu.a
    if a + b != r:
        raise ValueError("need |lam1| + |mu1| = r")
    mid = H.pi_a_minus_b(a, b)
    out = []
    for nu in _pi2b_shapes(r, b):
        nu1, nu2 = nu
        for s2 in ssyt(nu2, lam.first):
            for t2 in ssyt(nu2, mu.second):
                ma = m_pair(H, nu2, s2, t2, lam.first, mu.second, offset=0)
                for s1 in ssyt(nu1, lam.second):
                    for t1 in ssyt(nu1, mu.first):
                        mb = m_pair(H, nu1, s1, t1, lam.second, mu.first, offset=0)
                        label = (Bicomposition(nu1, nu2), s1, s2, t1, t2)
                        out.append((label, ma * mid * mb))
    return out


def _pi2b_shapes(r, b):
    """Bipartition shapes with |nu1| = b, ordered by the dominance key."""
    shapes = [
        (nu.first, nu.second)
        for nu in sorted(weyl.bipartitions(r), key=dominance_key)
        if sum(nu.first) == b
    ]
    return shapes


def z_basis(H, lam: Bicomposition, mu: Bicomposition):
    """Z-basis of x_lam^eta H cap H x_mu via pi_a^- X^nu sums (Thm ind2 data).

    Same label set as y_induced_basis: for nu with |nu1| = b, the standard
    s runs over bitableaux (shifted s1-fiber, s2-fiber) with the comp-1
    entries a+1..r, and t over the top fiber of (t1, t2).
    """
    r = H.r
    a, b = lam.a, mu.a
    if a + b != r:
        raise ValueError("need |lam1| + |mu1| = r")
    pam = H.pi_minus(a)
    out = []
    shift_s = tuple(range(a + 1, r + 1))  # comp1 entries of s
    shift_t = tuple(range(b + 1, r + 1))  # comp2 entries of t
    for nu in _pi2b_shapes(r, b):
        nu1, nu2 = nu
        x_nu = H.x(Bicomposition(nu1, nu2))
        for s2 in ssyt(nu2, lam.first):
            for s1 in ssyt(nu1, lam.second):
                s_bits = [
                    (_relabel(bs1, shift_s), bs2)
                    for bs1 in fiber_bar(nu1, s1, lam.second)
                    for bs2 in fiber_bar(nu2, s2, lam.first)
                ]
                for t2 in ssyt(nu2, mu.second):
                    for t1 in ssyt(nu1, mu.first):
                        t_bits = [
                            (bt1, _relabel(bt2, shift_t))
                            for bt1 in fiber_bar(nu1, t1, mu.first)
                            for bt2 in fiber_bar(nu2, t2, mu.second)
                        ]
                        elem = H.zero()
                        for bs in s_bits:
                            left = pam * H.T(delta(bs, r).inverse()) * x_nu
                            for bt in t_bits:
                                elem = elem + left * H.T(delta(bt, r))
                        label = (Bicomposition(nu1, nu2), s1, s2, t1, t2)
                        out.append((label, elem))
    return out


def z_basis_eta_form(H, lam: Bicomposition, mu: Bicomposition):
    """The Z-basis rewritten through eta: q0^a sum_{t*} eta(X^{nu*}) pi_b.

    Exactly equal to z_basis (the q0^a unit is forced by eta(pi_a) =
    q0^{-a} pi_a^-; it disappears at q0 = 1).
    """
    r = H.r
    a, b = lam.a, mu.a
    if a + b != r:
        raise ValueError("need |lam1| + |mu1| = r")
    pb = H.pi(b)
    unit = H.scalar(H.domain.q0_pow(a))
    out = []
    shift_s = tuple(range(a + 1, r + 1))
    shift_t = tuple(range(b + 1, r + 1))
    for nu in _pi2b_shapes(r, b):
        nu1, nu2 = nu
        x_nustar = H.x(Bicomposition(nu2, nu1))
        for s2 in ssyt(nu2, lam.first):
            for s1 in ssyt(nu1, lam.second):
                sstar_fib = [
                    (bs2, _relabel(bs1, shift_s))
                    for bs1 in fiber_bar(nu1, s1, lam.second)
                    for bs2 in fiber_bar(nu2, s2, lam.first)
                ]
                for t2 in ssyt(nu2, mu.second):
                    for t1 in ssyt(nu1, mu.first):
                        tstar_fib = [
                            (_relabel(bt2, shift_t), bt1)
                            for bt1 in fiber_bar(nu1, t1, mu.first)
                            for bt2 in fiber_bar(nu2, t2, mu.second)
                        ]
                        elem = H.zero()
                        for btstar in tstar_fib:
                            X = H.zero()
                            right = x_nustar * H.T(delta(btstar, r))
                            for bsstar in sstar_fib:
                                X = X + H.T(delta(bsstar, r).inverse()) * right
                            elem = elem + X.eta() * pb
                        label = (Bicomposition(nu1, nu2), s1, s2, t1, t2)
                        out.append((label, unit * elem))
    return out


# ---------------------------------------------------------------------------
# Specht filtration chains


class FiltrationChain:
    """The left "Specht" chain E^mu_i inside H' x_mu.

    layers[i] holds (t_index, nu, t_tt, elements) for the i-th semistandard
    index; E_i is spanned by the X elements of the first i layers.
    """

    def __init__(self, H, mu: Bicomposition):
        if not mu.is_bipartition():
            raise ValueError("chain shape must be a bipartition")
        self.H = H
        self.mu = mu
        r = H.r
        shapes = [
            nu for nu in sorted(weyl.bipartitions(r), key=dominance_key)
            if _dominated(mu, nu)
        ]
        # each semistandard t of each dominating shape contributes a layer
        self.layers = []
        for nu in shapes:
            tl = sorted(semistandard_bitableaux(nu, mu))
            for t_tt in tl:
                elems = []
                for bs in standard_bitableaux(nu.first, nu.second):
                    elems.append(
                        (bs, x_basis_elem_mixed(H, nu, bs, t_tt, mu))
                    )
                self.layers.append((nu, t_tt, elems))
        self.n_mu = len(self.layers)

    def layer_elements(self, i):
        """All X elements of layers 1..i (1-based i)."""
        out = []
        for nu, t_tt, elems in self.layers[:i]:
            out.extend(h for _, h in elems)
        return out

    def shapes(self):
        return [nu for nu, _, _ in self.layers]
