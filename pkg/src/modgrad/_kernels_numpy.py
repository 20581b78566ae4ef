"""Vectorized numpy implementations of the finite-field kernels.

All kernels operate on int64 arrays whose trailing axis is the extension
degree d (1 for prime fields); red2 is the field's (d, d, d) reduction
tensor and entries are kept reduced into range(p).  Intermediate products
stay far below 2**63 because entries are < p <= 97 and d <= 97.

This module is the reference backend; _kernels_numba holds the @njit twins.
"""

from __future__ import annotations

import numpy as np


def scalar_mul(a, b, red2, p):
    return np.einsum("i,j,ijk->k", a, b, red2) % p


def scalar_inv(a, red2, p, order):
    d = a.shape[0]
    result = np.zeros(d, dtype=np.int64)
    result[0] = 1
    base = a % p
    if not base.any():
        raise ZeroDivisionError("inverse of zero field element")
    e = order - 2
    while e > 0:
        if e & 1:
            result = scalar_mul(result, base, red2, p)
        base = scalar_mul(base, base, red2, p)
        e >>= 1
    return result


def mat_mul(A, B, red2, p):
    return np.einsum("nmi,mlj,ijk->nlk", A, B, red2, optimize=True) % p


def rref(M, red2, p, order):
    """Reduced row echelon form; returns (R, pivot_columns, rank)."""
    R = M.copy() % p
    rows, cols, d = R.shape
    pivots = []
    rank = 0
    for col in range(cols):
        piv = -1
        for i in range(rank, rows):
            if R[i, col].any():
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            R[[rank, piv]] = R[[piv, rank]]
        inv = scalar_inv(R[rank, col].copy(), red2, p, order)
        R[rank] = np.einsum("ci,j,ijk->ck", R[rank], inv, red2) % p
        mask = np.any(R[:, col] != 0, axis=1)
        mask[rank] = False
        if mask.any():
            factors = R[mask, col].copy()
            R[mask] = (R[mask] - np.einsum("ri,cj,ijk->rck", factors, R[rank], red2)) % p
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    return R, np.array(pivots, dtype=np.int64), rank


def reduce_rows(R, pivots, rows, red2, p):
    """Remainders of `rows` against an RREF matrix R (pivot entries are 1)."""
    out = rows.copy() % p
    for t in range(len(pivots)):
        col = pivots[t]
        f = out[:, col].copy()
        if not f.any():
            continue
        out = (out - np.einsum("ri,cj,ijk->rck", f, R[t], red2)) % p
    return out


def bilinear(U, V, I, J, K, C, red2, p, nout):
    """All pairwise structure-constant products of the rows of U and V.

    Returns (ru, rv, nout, d) with out[a, b] = sum_c C[c] * U[a, I[c]] * V[b, J[c]]
    scattered onto coordinate K[c].
    """
    ru, _, d = U.shape
    rv = V.shape[0]
    out = np.zeros((ru, rv, nout, d), dtype=np.int64)
    if I.shape[0] == 0:
        return out
    VJ = V[:, J, :]
    for a in range(ru):
        W1 = np.einsum("ci,cj,ijk->ck", U[a, I, :], C, red2) % p
        W2 = np.einsum("ci,ijk->cjk", W1, red2)
        tv = np.einsum("cjk,rcj->rck", W2, VJ) % p
        for b in range(rv):
            for z in range(d):
                out[a, b, :, z] = np.bincount(
                    K, weights=tv[b, :, z], minlength=nout
                ).astype(np.int64)
        out[a] %= p
    return out


def leibniz_witness(D, I, J, K, C, red2, p):
    """First basis pair (i, j) violating D(e_i e_j) = (D e_i) e_j + e_i (D e_j).

    Returns (-1, -1) when D is a derivation.
    """
    n, _, d = D.shape
    Dcols = D.transpose(1, 0, 2)  # Dcols[k] = D e_k
    for i in range(n):
        # res[j] = D(e_i e_j) - (D e_i) e_j - e_i (D e_j), laid out (j, coord, d)
        res = np.zeros((n, n, d), dtype=np.int64)
        mask = I == i
        if mask.any():
            Jm, Km, Cm = J[mask], K[mask], C[mask]
            contrib = np.einsum("ci,cnj,ijk->cnk", Cm, Dcols[Km], red2) % p
            np.add.at(res, Jm, contrib)
            # e_i (D e_j) = sum_k D[k, j] (e_i e_k); constants with I == i give e_i e_k
            w3 = np.einsum("cni,cj,ijk->cnk", D[Jm, :, :], Cm, red2) % p
            t3 = np.zeros((n, n, d), dtype=np.int64)
            np.add.at(t3, Km, w3)
            res -= t3.transpose(1, 0, 2)
        # (D e_i) e_j = sum_k D[k, i] (e_k e_j), one term per structure constant
        w2 = np.einsum("ci,cj,ijk->ck", D[I, i, :], C, red2) % p
        np.subtract.at(res, (J, K), w2)
        res %= p
        bad = np.nonzero(np.any(res != 0, axis=(1, 2)))[0]
        if bad.size:
            return i, int(bad[0])
    return -1, -1
