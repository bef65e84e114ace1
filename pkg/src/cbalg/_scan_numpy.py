"""Pure-numpy mod-p scan backend.

Mirrors the semantics of the jitted backend exactly (same enumeration
order, same canonical kernels, same first-witness indices) but leans
on vectorized einsum work instead of tight loops.  Selected with
CBALG_PURE_NUMPY=1 or when numba is unavailable.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def rref_mod(M: np.ndarray, p: int):
    """Row-reduce a copy of M over F_p; returns (R, pivots, rank)."""
    R = M.copy() % p
    m, n = R.shape
    pivots = []
    r = 0
    for c in range(n):
        col = np.nonzero(R[r:, c])[0]
        if col.size == 0:
            continue
        pr = r + int(col[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        other = np.nonzero(R[:, c])[0]
        for i in other:
            if i != r:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, np.array(pivots, dtype=np.int64), r


def kernel_mod(M: np.ndarray, p: int):
    """Canonical RREF basis of the null space; returns (K, pivots)."""
    R, piv, rank = rref_mod(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in set(piv.tolist())]
    K = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        K[idx, f] = 1
        for r in range(rank):
            K[idx, piv[r]] = (-R[r, f]) % p
    K, kpiv, _ = rref_mod(K, p)
    return K, kpiv


def _left_op(c: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    # L[k, j] = sum_i x_i c[i, j, k]
    return np.einsum("i,ijk->kj", x, c) % p


def _right_op(c: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    # R[k, j] = sum_i c[j, i, k] x_i
    return np.einsum("i,jik->kj", x, c) % p


def _reduce_rows(W: np.ndarray, K: np.ndarray, kpiv: np.ndarray, p: int) -> np.ndarray:
    # K is RREF with unit pivots, so one subtraction pass is a full reduction
    if K.shape[0] == 0:
        return W % p
    return (W - W[:, kpiv] @ K) % p


def cb_scan(c: np.ndarray, p: int, V: np.ndarray):
    """First (x_idx, y_row, z_basis) violating bonding, else (-1,-1,-1).

    For each enumerated x, y runs over the canonical kernel basis of
    {y : x*y = 0} and z over the algebra basis; both reductions are
    exact by linearity.
    """
    for m in range(V.shape[0]):
        L = _left_op(c, V[m], p)
        K, _ = kernel_mod(L, p)
        if K.shape[0] == 0:
            continue
        # T[a, z, k] = ((x e_z) y_a)_k with x e_z = L[:, z]
        T = np.einsum("iz,aj,ijk->azk", L, K, c) % p
        viol = T.any(axis=2)
        if viol.any():
            a, z = np.argwhere(viol)[0]
            return m, int(a), int(z)
    return -1, -1, -1


def cl_scan(c: np.ndarray, p: int, V: np.ndarray):
    """First x index whose centralizer is not a two-sided ideal, else -1."""
    n = c.shape[0]
    for m in range(V.shape[0]):
        L = _left_op(c, V[m], p)
        R = _right_op(c, V[m], p)
        K, kpiv = kernel_mod(np.vstack((L, R)), p)
        if K.shape[0] == 0:
            continue
        right = np.einsum("ai,ijk->ajk", K, c) % p  # y * e_j
        left = np.einsum("ai,jik->ajk", K, c) % p   # e_j * y
        W = np.concatenate((right, left)).reshape(-1, n)
        if _reduce_rows(W, K, kpiv, p).any():
            return m
    return -1


def cb_element_check(c: np.ndarray, p: int, V: np.ndarray, z: np.ndarray):
    """First (x_idx, y_row) with y in C(x) and (x z) y != 0, else (-1, -1)."""
    for m in range(V.shape[0]):
        L = _left_op(c, V[m], p)
        w = (L @ z) % p
        if not w.any():
            continue
        R = _right_op(c, V[m], p)
        K, _ = kernel_mod(np.vstack((L, R)), p)
        if K.shape[0] == 0:
            continue
        T = np.einsum("i,aj,ijk->ak", w, K, c) % p
        bad = T.any(axis=1)
        if bad.any():
            return m, int(np.nonzero(bad)[0][0])
    return -1, -1


def cb_element_mask(c: np.ndarray, p: int, V: np.ndarray) -> np.ndarray:
    """Boolean mask over the enumeration: mask[z] iff z is a CB-element."""
    N = V.shape[0]
    mask = np.ones(N, dtype=bool)
    for m in range(N):
        L = _left_op(c, V[m], p)
        R = _right_op(c, V[m], p)
        if not L.any() and not R.any():
            continue
        K, _ = kernel_mod(np.vstack((L, R)), p)
        if K.shape[0] == 0:
            continue
        alive = np.nonzero(mask)[0]
        if alive.size == 0:
            break
        W = (V[alive] @ L.T) % p
        nz = W.any(axis=1)
        if not nz.any():
            continue
        idx = alive[nz]
        T = np.einsum("zi,aj,ijk->zak", W[nz], K, c) % p
        bad = T.any(axis=(1, 2))
        mask[idx[bad]] = False
    return mask
