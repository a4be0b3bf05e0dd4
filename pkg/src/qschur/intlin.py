"""
Small exact integer/rational linear algebra: row HNF, saturation, solving.

Dimensions here are tiny (tens); everything is plain Python integers and
Fractions, dense lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def hnf_rows(rows):
    """Row Hermite normal form (over Z) of a list of integer rows; returns
    the nonzero rows (a lattice basis of the row span)."""
    M = [list(map(int, r)) for r in rows if any(r)]
    if not M:
        return []
    ncols = len(M[0])
    out = []
    col = 0
    while M and col < ncols:
        pivots = [r for r in M if r[col] != 0]
        if not pivots:
            col += 1
            continue
        while True:
            pivots.sort(key=lambda r: abs(r[col]))
            p = pivots[0]
            done = True
            for r in pivots[1:]:
                q = r[col] // p[col]
                if q:
                    for j in range(ncols):
                        r[j] -= q * p[j]
                if r[col] != 0:
                    done = False
            pivots = [p] + [r for r in pivots[1:] if r[col] != 0]
            if done or len(pivots) == 1:
                break
        if p[col] < 0:
            for j in range(ncols):
                p[j] = -p[j]
        out.append(p)
        M = [r for r in M if r is not p and any(r)]
        for r in M:
            q = r[col] // p[col]
            if q:
                for j in range(ncols):
                    r[j] -= q * p[j]
        col += 1
    # reduce above pivots
    for i in range(len(out) - 1, -1, -1):
        lead = next(j for j, v in enumerate(out[i]) if v)
        for k in range(i):
            q = out[k][lead] // out[i][lead]
            if q:
                for j in range(len(out[i])):
                    out[k][j] -= q * out[i][j]
    return out


def int_left_kernel(M):
    """Saturated basis of {v integer row : v M = 0} via HNF of [M | I]."""
    m = len(M)
    if m == 0:
        return []
    ncols = len(M[0])
    aug = [list(map(int, row)) + [1 if k == i else 0 for k in range(m)]
           for i, row in enumerate(M)]
    H = hnf_rows(aug)
    return [row[ncols:] for row in H if not any(row[:ncols])]


def clear_denominators(row):
    den = 1
    for x in row:
        f = Fraction(x)
        den = den * f.denominator // gcd(den, f.denominator)
    return [int(Fraction(x) * den) for x in row]


def saturate_rows(rows):
    """Basis of the saturation: all integer vectors in the rational row
    span.  Computed as the integer kernel of the kernel (both saturated)."""
    rows = [clear_denominators(r) for r in rows if any(Fraction(x) for x in r)]
    if not rows:
        return []
    n = len(rows[0])
    # integer rows spanning the rational right-kernel of `rows`
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    rker = int_left_kernel(cols)  # y with y . rows^T = 0 columnwise
    if not rker:
        return [list(r) for r in hnf_rows([[1 if j == i else 0 for j in range(n)]
                                           for i in range(n)])]
    # saturation = integer vectors orthogonal to every kernel row
    mat = [[rk[j] for rk in rker] for j in range(n)]  # n x k
    return int_left_kernel([[mat[j][k] for k in range(len(rker))]
                            for j in range(n)]) or []


def _q_row_space(rows):
    """Reduced row echelon form over Q."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return []
    m, n = len(M), len(M[0])
    rank = 0
    for col in range(n):
        sel = None
        for row in range(rank, m):
            if M[row][col]:
                sel = row
                break
        if sel is None:
            continue
        M[rank], M[sel] = M[sel], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [x * inv for x in M[rank]]
        for row in range(m):
            if row != rank and M[row][col]:
                f = M[row][col]
                M[row] = [x - f * y for x, y in zip(M[row], M[rank])]
        rank += 1
        if rank == m:
            break
    return [r for r in M if any(r)]


def q_solve_right(A, b):
    """x (rational list) with x A = b for row lists A; None if unsolvable."""
    m = len(A)
    if m == 0:
        return None if any(b) else []
    n = len(A[0])
    aug = [[Fraction(x) for x in row] + [Fraction(1 if k == i else 0) for k in range(m)]
           for i, row in enumerate(A)]
    R = aug
    # eliminate
    rank = 0
    for col in range(n):
        sel = None
        for row in range(rank, m):
            if R[row][col]:
                sel = row
                break
        if sel is None:
            continue
        R[rank], R[sel] = R[sel], R[rank]
        inv = 1 / R[rank][col]
        R[rank] = [x * inv for x in R[rank]]
        for row in range(m):
            if row != rank and R[row][col]:
                f = R[row][col]
                R[row] = [x - f * y for x, y in zip(R[row], R[rank])]
        rank += 1
    rem = [Fraction(x) for x in b]
    x = [Fraction(0)] * m
    for row in R[:rank]:
        lead = next((j for j in range(n) if row[j]), None)
        if lead is None:
            continue
        c = rem[lead]
        if c:
            rem = [u - c * v for u, v in zip(rem, row[:n])]
            x = [u + c * v for u, v in zip(x, row[n:])]
    if any(rem):
        return None
    return x


def q_rank(rows):
    return len(_q_row_space(rows))


def q_intersect(A, B):
    """Basis of the intersection of two rational row spaces."""
    if not A or not B:
        return []
    m = len(A)
    aug = [list(map(Fraction, r)) + [Fraction(1 if k == i else 0) for k in range(m + len(B))]
           for i, r in enumerate(list(A) + list(B))]
    n = len(A[0])
    R = aug
    mrows = len(R)
    rank = 0
    for col in range(n):
        sel = None
        for row in range(rank, mrows):
            if R[row][col]:
                sel = row
                break
        if sel is None:
            continue
        R[rank], R[sel] = R[sel], R[rank]
        inv = 1 / R[rank][col]
        R[rank] = [x * inv for x in R[rank]]
        for row in range(mrows):
            if row != rank and R[row][col]:
                f = R[row][col]
                R[row] = [x - f * y for x, y in zip(R[row], R[rank])]
        rank += 1
    out = []
    for row in R:
        if any(row[:n]):
            continue
        coeffs = row[n:n + m]
        if not any(coeffs):
            continue
        vec = [Fraction(0)] * n
        for c, arow in zip(coeffs, A):
            if c:
                vec = [u + c * v for u, v in zip(vec, arow)]
        if any(vec):
            out.append(vec)
    return _q_row_space(out)
