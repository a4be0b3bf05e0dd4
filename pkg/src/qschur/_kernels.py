"""
Hot kernels: mod-p row reduction and T-basis generator sweeps.

Everything here works on int64 arrays with entries reduced mod p (p odd,
p**2 well inside int64).  Each kernel has a numba @njit build and a
vectorized pure-numpy build; set QSCHUR_PURE_NUMPY=1 to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("QSCHUR_PURE_NUMPY", "") != "1"
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def _gf_rref_inplace(M, p):
    """Row echelon form with unit pivots, eliminating above and below.

    Returns (rank, pivot column array).  M is modified in place.
    """
    m, n = M.shape
    piv = np.empty(min(m, n), dtype=np.int64)
    rank = 0
    for col in range(n):
        sel = -1
        for row in range(rank, m):
            if M[row, col] % p != 0:
                sel = row
                break
        if sel < 0:
            continue
        if sel != rank:
            for j in range(n):
                t = M[sel, j]
                M[sel, j] = M[rank, j]
                M[rank, j] = t
        inv = _inv_mod(int(M[rank, col]) % p, p)
        for j in range(n):
            M[rank, j] = M[rank, j] * inv % p
        for row in range(m):
            if row != rank:
                f = M[row, col] % p
                if f:
                    for j in range(n):
                        M[row, j] = (M[row, j] - f * M[rank, j]) % p
        piv[rank] = col
        rank += 1
        if rank == m:
            break
    return rank, piv[:rank]


def _inv_mod(a, p):
    # extended Euclid; numba-friendly
    t, newt = 0, 1
    r, newr = p, a % p
    while newr != 0:
        quot = r // newr
        t, newt = newt, t - quot * newt
        r, newr = newr, r - quot * newr
    return t % p


def _gf_rank(M, p):
    M = M.copy()
    rank, _ = gf_rref_inplace(M, p)
    return rank


def _rmul_gen_sweep(M, idx, up, qs, p):
    """Right multiplication of every row of M by T_{s}, given the action
    index table and the length-increase mask for that generator."""
    m, n = M.shape
    out = np.zeros_like(M)
    qs1 = (qs - 1) % p
    for i in range(m):
        for w in range(n):
            c = M[i, w]
            if c == 0:
                continue
            j = idx[w]
            if up[w]:
                out[i, j] = (out[i, j] + c) % p
            else:
                out[i, w] = (out[i, w] + qs1 * c) % p
                out[i, j] = (out[i, j] + qs * c) % p
    return out


if USE_NUMBA:
    _inv_mod = njit(cache=True)(_inv_mod)
    gf_rref_inplace = njit(cache=True)(_gf_rref_inplace)
    gf_rank = njit(cache=True)(_gf_rank)
    rmul_gen_sweep = njit(cache=True)(_rmul_gen_sweep)
else:
    def gf_rref_inplace(M, p):
        """Vectorized fallback of the elimination kernel."""
        m, n = M.shape
        piv = []
        rank = 0
        for col in range(n):
            block = M[rank:, col] % p
            nz = np.nonzero(block)[0]
            if nz.size == 0:
                continue
            sel = rank + int(nz[0])
            if sel != rank:
                M[[rank, sel]] = M[[sel, rank]]
            inv = pow(int(M[rank, col]) % p, -1, p)
            M[rank] = M[rank] * inv % p
            f = M[:, col] % p
            f[rank] = 0
            hit = np.nonzero(f)[0]
            if hit.size:
                M[hit] = (M[hit] - np.outer(f[hit], M[rank])) % p
            piv.append(col)
            rank += 1
            if rank == m:
                break
        return rank, np.array(piv, dtype=np.int64)

    def gf_rank(M, p):
        M = M.copy()
        rank, _ = gf_rref_inplace(M, p)
        return rank

    def rmul_gen_sweep(M, idx, up, qs, p):
        out = np.zeros_like(M)
        upc = np.nonzero(up)[0]
        dnc = np.nonzero(~up)[0]
        out[:, idx[upc]] = M[:, upc]
        out[:, dnc] += (qs - 1) * M[:, dnc]
        out[:, idx[dnc]] += qs * M[:, dnc]
        return out % p
