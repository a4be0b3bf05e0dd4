"""
Composition factors of modules over a finite-dimensional F_p-algebra.

A module is given by the action matrices of a fixed spanning set of the
algebra (not just generators), acting on row vectors from the right.  With
the full spanning set, a subspace is a submodule iff it is closed under
every action matrix, so spinning is sound.

Irreducibility is certified by the standard kernel argument: if theta is in
the enveloping algebra with 0 < nullity, every v in ker(theta) spins to the
whole module, and one w in ker(theta^T) spins to the whole transpose
module, then the module is irreducible.  Composition series are produced by
chopping at discovered submodules.
"""

from __future__ import annotations

import numpy as np


class GFModule:
    """Right module over F_p with explicit action of a spanning set."""

    def __init__(self, actions, p):
        self.actions = [np.asarray(a, dtype=np.int64) % p for a in actions]
        self.p = p
        self.dim = self.actions[0].shape[0] if actions else 0

    def spin(self, vectors):
        """Row space of the submodule generated by the given row vectors."""
        p = self.p
        basis = _rref([np.asarray(v) % p for v in np.atleast_2d(vectors)], p)
        frontier = list(basis)
        while frontier:
            new = []
            for v in frontier:
                for a in self.actions:
                    w = v.dot(a) % p
                    red = _reduce_against(w, basis, p)
                    if red is not None:
                        basis.append(red)
                        new.append(red)
            frontier = new
        return np.array(basis, dtype=np.int64) if basis else np.zeros((0, self.dim), np.int64)

    def restrict(self, basis):
        """Action matrices on the submodule with the given row basis."""
        sub = []
        for a in self.actions:
            rows = basis.dot(a) % self.p
            sub.append(_coords(rows, basis, self.p))
        return GFModule(sub, self.p)

    def quotient(self, basis):
        comp = _complement(basis, self.dim, self.p)
        proj = _quotient_coords(comp, basis, self.p)
        sub = []
        for a in self.actions:
            rows = comp.dot(a) % self.p
            sub.append(proj(rows))
        return GFModule(sub, self.p)

    def transpose(self):
        return GFModule([a.T % self.p for a in self.actions], self.p)

    def random_env_element(self, rng, terms=3):
        """A random element of the enveloping algebra image."""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for _ in range(terms):
            a = self.actions[rng.randrange(len(self.actions))]
            b = self.actions[rng.randrange(len(self.actions))]
            c = rng.randrange(self.p)
            m = (m + c * a.dot(b)) % self.p
        return m

    def is_irreducible(self, rng, tries=60):
        """Norton-certified irreducibility test; returns True/False.

        False comes with a discovered proper submodule stored in
        self.last_submodule.
        """
        self.last_submodule = None
        if self.dim == 0:
            return False
        if self.dim == 1:
            return True
        tr = self.transpose()
        for _ in range(tries):
            theta = self.random_env_element(rng)
            ker = _nullspace(theta, self.p)
            k = ker.shape[0]
            if k == 0 or k == self.dim:
                continue
            if self.p ** k - 1 > 4096:
                continue  # too many kernel vectors; retry with another theta
            for v in _all_nonzero_combos(ker, self.p):
                sub = self.spin(v)
                if sub.shape[0] < self.dim:
                    self.last_submodule = sub
                    return False
            kert = _nullspace(theta.T % self.p, self.p)
            w = kert[0]
            subt = tr.spin(w)
            if subt.shape[0] < self.dim:
                # proper submodule of the transpose = proper quotient here;
                # its annihilator is a proper submodule
                ann = _annihilator(subt, self.p)
                self.last_submodule = self.spin(ann) if ann.shape[0] else None
                if self.last_submodule is not None and \
                        0 < self.last_submodule.shape[0] < self.dim:
                    return False
                # fall through: retry with a fresh theta
                continue
            return True
        raise RuntimeError("irreducibility test did not certify; raise tries")

    def composition_factors(self, rng):
        """List of irreducible GFModules (with multiplicity)."""
        if self.dim == 0:
            return []
        if self.is_irreducible(rng):
            return [self]
        sub = self.last_submodule
        if sub is None or sub.shape[0] in (0, self.dim):
            # find any proper submodule by spinning basis vectors
            sub = None
            for i in range(self.dim):
                v = np.zeros(self.dim, dtype=np.int64)
                v[i] = 1
                s = self.spin(v)
                if 0 < s.shape[0] < self.dim:
                    sub = s
                    break
            if sub is None:
                raise RuntimeError("no proper submodule found for a reducible module")
        return (self.restrict(sub).composition_factors(rng)
                + self.quotient(sub).composition_factors(rng))


def hom_space(A: GFModule, B: GFModule):
    """dim Hom(A, B): matrices F with F a_B = a_A F ... (intertwiners)."""
    if A.dim == 0 or B.dim == 0:
        return 0
    p = A.p
    rows = []
    for a, b in zip(A.actions, B.actions):
        # F: A -> B intertwines: a_A F = F a_B  (row-vector actions)
        # unknowns F (A.dim x B.dim) flattened
        # constraint: a.dot(F) - F.dot(b) = 0
        m = np.kron(a, np.eye(B.dim, dtype=np.int64)) - \
            np.kron(np.eye(A.dim, dtype=np.int64), b.T)
        rows.append(m % p)
    M = np.vstack(rows) % p
    return A.dim * B.dim - _rank(M, p)


def isomorphic_simples(A: GFModule, B: GFModule):
    return A.dim == B.dim and hom_space(A, B) > 0


def _all_nonzero_combos(basis, p):
    """Every nonzero vector of the row space of basis."""
    import itertools

    k = basis.shape[0]
    for coeffs in itertools.product(range(p), repeat=k):
        if not any(coeffs):
            continue
        v = np.zeros(basis.shape[1], dtype=np.int64)
        for c, b in zip(coeffs, basis):
            if c:
                v = (v + c * b) % p
        yield v


def _rref(rows, p):
    basis = []
    for r in rows:
        red = _reduce_against(r % p, basis, p)
        if red is not None:
            basis.append(red)
    return basis


def _reduce_against(v, basis, p):
    v = v.copy() % p
    for b in basis:
        lead = np.nonzero(b)[0][0]
        if v[lead]:
            v = (v - v[lead] * pow(int(b[lead]), -1, p) % p * b) % p
    if not v.any():
        return None
    lead = np.nonzero(v)[0][0]
    v = v * pow(int(v[lead]), -1, p) % p
    return v


def _rank(M, p):
    from . import _kernels

    if M.size == 0:
        return 0
    return int(_kernels.gf_rank(np.ascontiguousarray(M % p), p))


def _nullspace(M, p):
    """Rows v with v M = 0."""
    n = M.shape[0]
    aug = np.hstack([M % p, np.eye(n, dtype=np.int64)])
    from . import _kernels

    R = np.ascontiguousarray(aug)
    _kernels.gf_rref_inplace(R, p)
    zero_left = ~np.any(R[:, : M.shape[1]] % p, axis=1)
    return R[zero_left][:, M.shape[1]:]


def _coords(rows, basis, p):
    """Coordinates of rows in the row space spanned by basis."""
    sol = []
    aug = np.hstack([basis % p, np.eye(basis.shape[0], dtype=np.int64)])
    from . import _kernels

    R = np.ascontiguousarray(aug)
    _kernels.gf_rref_inplace(R, p)
    n = basis.shape[1]
    for v in rows:
        rem = v.copy() % p
        x = np.zeros(basis.shape[0], dtype=np.int64)
        for row in R:
            lead = np.nonzero(row[:n] % p)[0]
            if lead.size == 0:
                continue
            c = rem[lead[0]] % p
            if c:
                rem = (rem - c * row[:n]) % p
                x = (x + c * row[n:]) % p
        if rem.any():
            raise ValueError("row outside the subspace")
        sol.append(x)
    return np.array(sol, dtype=np.int64) % p


def _complement(basis, dim, p):
    """Coordinate vectors completing basis to the full space."""
    cur = [b.copy() for b in basis]
    cur = _rref(cur, p)
    leads = {np.nonzero(b)[0][0] for b in cur}
    comp = []
    for i in range(dim):
        if i not in leads:
            v = np.zeros(dim, dtype=np.int64)
            v[i] = 1
            comp.append(v)
    return np.array(comp, dtype=np.int64) if comp else np.zeros((0, dim), np.int64)


def _quotient_coords(comp, basis, p):
    """Map rows to their coordinates in the quotient by span(basis), using
    the complement rows as the quotient basis."""
    full = np.vstack([basis, comp]) if basis.shape[0] else comp
    k = basis.shape[0]

    def proj(rows):
        x = _coords(rows, full, p)
        return x[:, k:] % p

    return proj


def _annihilator(rows, p):
    """Vectors v with rows . v^T = 0, as rows."""
    return _nullspace(rows.T % p, p)
