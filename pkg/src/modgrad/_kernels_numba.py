"""Numba @njit twins of the numpy kernels in _kernels_numpy.

Same signatures, same contracts; plain nested loops, compiled lazily and
cached on disk.  Importing this module requires numba.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def scalar_mul(a, b, red2, p):
    d = a.shape[0]
    out = np.zeros(d, dtype=np.int64)
    for x in range(d):
        ax = a[x]
        if ax == 0:
            continue
        for y in range(d):
            v = ax * b[y]
            if v == 0:
                continue
            for z in range(d):
                out[z] += v * red2[x, y, z]
    for z in range(d):
        out[z] %= p
    return out


@njit(cache=True)
def scalar_inv(a, red2, p, order):
    d = a.shape[0]
    nz = False
    for x in range(d):
        if a[x] % p != 0:
            nz = True
    if not nz:
        raise ZeroDivisionError("inverse of zero field element")
    result = np.zeros(d, dtype=np.int64)
    result[0] = 1
    base = a % p
    e = order - 2
    while e > 0:
        if e & 1:
            result = scalar_mul(result, base, red2, p)
        base = scalar_mul(base, base, red2, p)
        e >>= 1
    return result


@njit(cache=True)
def mat_mul(A, B, red2, p):
    n, m, d = A.shape
    l = B.shape[1]
    out = np.zeros((n, l, d), dtype=np.int64)
    for i in range(n):
        for k in range(l):
            for j in range(m):
                for x in range(d):
                    ax = A[i, j, x]
                    if ax == 0:
                        continue
                    for y in range(d):
                        v = ax * B[j, k, y]
                        if v == 0:
                            continue
                        for z in range(d):
                            out[i, k, z] += v * red2[x, y, z]
            for z in range(d):
                out[i, k, z] %= p
    return out


@njit(cache=True)
def rref(M, red2, p, order):
    rows, cols, d = M.shape
    R = M % p
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    rank = 0
    for col in range(cols):
        piv = -1
        for i in range(rank, rows):
            for x in range(d):
                if R[i, col, x] != 0:
                    piv = i
                    break
            if piv >= 0:
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(cols):
                for x in range(d):
                    tmp = R[rank, c, x]
                    R[rank, c, x] = R[piv, c, x]
                    R[piv, c, x] = tmp
        inv = scalar_inv(R[rank, col].copy(), red2, p, order)
        for c in range(cols):
            R[rank, c] = scalar_mul(R[rank, c].copy(), inv, red2, p)
        for i in range(rows):
            if i == rank:
                continue
            nz = False
            for x in range(d):
                if R[i, col, x] != 0:
                    nz = True
                    break
            if not nz:
                continue
            f = R[i, col].copy()
            for c in range(cols):
                prod = scalar_mul(f, R[rank, c], red2, p)
                for x in range(d):
                    R[i, c, x] = (R[i, c, x] - prod[x]) % p
        pivots[rank] = col
        rank += 1
        if rank == rows:
            break
    return R, pivots[:rank], rank


@njit(cache=True)
def reduce_rows(R, pivots, rows, red2, p):
    k, cols, d = rows.shape
    out = rows % p
    for t in range(pivots.shape[0]):
        col = pivots[t]
        for i in range(k):
            nz = False
            for x in range(d):
                if out[i, col, x] != 0:
                    nz = True
                    break
            if not nz:
                continue
            f = out[i, col].copy()
            for c in range(cols):
                prod = scalar_mul(f, R[t, c], red2, p)
                for x in range(d):
                    out[i, c, x] = (out[i, c, x] - prod[x]) % p
    return out


@njit(cache=True)
def bilinear(U, V, I, J, K, C, red2, p, nout):
    ru, _, d = U.shape
    rv = V.shape[0]
    nnz = I.shape[0]
    out = np.zeros((ru, rv, nout, d), dtype=np.int64)
    tmp = np.zeros(d, dtype=np.int64)
    for a in range(ru):
        for b in range(rv):
            for c in range(nnz):
                for x in range(d):
                    tmp[x] = 0
                ui = U[a, I[c]]
                vj = V[b, J[c]]
                for x in range(d):
                    ux = ui[x]
                    if ux == 0:
                        continue
                    for y in range(d):
                        v = ux * vj[y]
                        if v == 0:
                            continue
                        for z in range(d):
                            tmp[z] += v * red2[x, y, z]
                for x in range(d):
                    tmp[x] %= p
                uv_c = scalar_mul(tmp, C[c], red2, p)
                for x in range(d):
                    out[a, b, K[c], x] += uv_c[x]
            for t in range(nout):
                for x in range(d):
                    out[a, b, t, x] %= p
    return out


@njit(cache=True)
def leibniz_witness(D, I, J, K, C, red2, p):
    n, _, d = D.shape
    nnz = I.shape[0]
    res = np.zeros((n, n, d), dtype=np.int64)
    for i in range(n):
        res[:] = 0
        for c in range(nnz):
            if I[c] == i:
                jc = J[c]
                kc = K[c]
                # + C_c * (D e_{K_c}) into res[jc]
                for t in range(n):
                    prod = scalar_mul(C[c], D[t, kc], red2, p)
                    for x in range(d):
                        res[jc, t, x] += prod[x]
                # - D[jc, j] * C_c at coordinate kc, for every j
                for j in range(n):
                    prod = scalar_mul(D[jc, j], C[c], red2, p)
                    for x in range(d):
                        res[j, kc, x] -= prod[x]
            # - D[I_c, i] * C_c at (J_c, K_c)
            prod = scalar_mul(D[I[c], i], C[c], red2, p)
            for x in range(d):
                res[J[c], K[c], x] -= prod[x]
        for j in range(n):
            for t in range(n):
                for x in range(d):
                    if res[j, t, x] % p != 0:
                        return i, j
    return -1, -1
