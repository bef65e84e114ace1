"""Jitted mod-p scan backend.

Tight int64 loops compiled with numba; the default backend whenever
numba imports.  Accumulators stay well inside int64 for the supported
sizes (p <= 97, dim <= 16).  Results are index-identical to the numpy
backend, which the test suite asserts.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _inv_mod(a, p):
    a = a % p
    for k in range(1, p):
        if (a * k) % p == 1:
            return k
    return 0


@njit(cache=True)
def _rref_inplace(M, p, piv):
    m, n = M.shape
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, m):
            if M[i, c] % p != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(n):
                t = M[r, j]
                M[r, j] = M[pr, j]
                M[pr, j] = t
        inv = _inv_mod(M[r, c], p)
        for j in range(n):
            M[r, j] = (M[r, j] * inv) % p
        for i in range(m):
            if i != r and M[i, c] % p != 0:
                f = M[i, c]
                for j in range(n):
                    M[i, j] = (M[i, j] - f * M[r, j]) % p
        piv[r] = c
        r += 1
        if r == m:
            break
    return r


@njit(cache=True)
def _kernel(M, p):
    m, n = M.shape
    A = M.copy()
    piv = np.full(n, -1, np.int64)
    rank = _rref_inplace(A, p, piv)
    is_piv = np.zeros(n, np.bool_)
    for r in range(rank):
        is_piv[piv[r]] = True
    k = n - rank
    K = np.zeros((k, n), np.int64)
    idx = 0
    for f in range(n):
        if is_piv[f]:
            continue
        K[idx, f] = 1
        for r in range(rank):
            K[idx, piv[r]] = (-A[r, f]) % p
        idx += 1
    kpiv = np.full(n, -1, np.int64)
    _rref_inplace(K, p, kpiv)
    return K, kpiv


@njit(cache=True)
def _mulvec(c, x, y, out, p):
    n = c.shape[0]
    for k in range(n):
        out[k] = 0
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n):
            yj = y[j]
            if yj == 0:
                continue
            f = (xi * yj) % p
            if f == 0:
                continue
            for k in range(n):
                ck = c[i, j, k]
                if ck != 0:
                    out[k] = (out[k] + f * ck) % p


@njit(cache=True)
def _left_op(c, x, L, p):
    n = c.shape[0]
    for k in range(n):
        for j in range(n):
            acc = 0
            for i in range(n):
                acc += x[i] * c[i, j, k]
            L[k, j] = acc % p


@njit(cache=True)
def _right_op(c, x, R, p):
    n = c.shape[0]
    for k in range(n):
        for j in range(n):
            acc = 0
            for i in range(n):
                acc += x[i] * c[j, i, k]
            R[k, j] = acc % p


@njit(cache=True)
def _in_span(K, kpiv, w, p):
    # one-pass reduction against an RREF basis with unit pivots
    krows, n = K.shape
    v = w.copy()
    for r in range(krows):
        f = v[kpiv[r]]
        if f != 0:
            for j in range(n):
                v[j] = (v[j] - f * K[r, j]) % p
    for j in range(n):
        if v[j] != 0:
            return False
    return True


@njit(cache=True)
def cb_scan(c, p, V):
    N = V.shape[0]
    n = c.shape[0]
    L = np.empty((n, n), np.int64)
    w = np.empty(n, np.int64)
    d = np.empty(n, np.int64)
    for m in range(N):
        _left_op(c, V[m], L, p)
        K, _ = _kernel(L, p)
        for a in range(K.shape[0]):
            for zb in range(n):
                for k in range(n):
                    w[k] = L[k, zb]
                _mulvec(c, w, K[a], d, p)
                for k in range(n):
                    if d[k] != 0:
                        return m, a, zb
    return -1, -1, -1


@njit(cache=True)
def cl_scan(c, p, V):
    N = V.shape[0]
    n = c.shape[0]
    S = np.empty((2 * n, n), np.int64)
    w = np.empty(n, np.int64)
    for m in range(N):
        _left_op(c, V[m], S[:n], p)
        _right_op(c, V[m], S[n:], p)
        K, kpiv = _kernel(S, p)
        for a in range(K.shape[0]):
            for j in range(n):
                for k in range(n):
                    acc = 0
                    for i in range(n):
                        acc += K[a, i] * c[i, j, k]
                    w[k] = acc % p
                if not _in_span(K, kpiv, w, p):
                    return m
                for k in range(n):
                    acc = 0
                    for i in range(n):
                        acc += K[a, i] * c[j, i, k]
                    w[k] = acc % p
                if not _in_span(K, kpiv, w, p):
                    return m
    return -1


@njit(cache=True)
def cb_element_check(c, p, V, z):
    N = V.shape[0]
    n = c.shape[0]
    S = np.empty((2 * n, n), np.int64)
    w = np.empty(n, np.int64)
    d = np.empty(n, np.int64)
    for m in range(N):
        _mulvec(c, V[m], z, w, p)
        nz = False
        for k in range(n):
            if w[k] != 0:
                nz = True
                break
        if not nz:
            continue
        _left_op(c, V[m], S[:n], p)
        _right_op(c, V[m], S[n:], p)
        K, _ = _kernel(S, p)
        for a in range(K.shape[0]):
            _mulvec(c, w, K[a], d, p)
            for k in range(n):
                if d[k] != 0:
                    return m, a
    return -1, -1


@njit(cache=True)
def cb_element_mask(c, p, V):
    N = V.shape[0]
    n = c.shape[0]
    mask = np.ones(N, np.bool_)
    S = np.empty((2 * n, n), np.int64)
    w = np.empty(n, np.int64)
    d = np.empty(n, np.int64)
    for m in range(N):
        _left_op(c, V[m], S[:n], p)
        _right_op(c, V[m], S[n:], p)
        allzero = True
        for a in range(2 * n):
            for b in range(n):
                if S[a, b] != 0:
                    allzero = False
                    break
            if not allzero:
                break
        if allzero:
            continue
        K, _ = _kernel(S, p)
        if K.shape[0] == 0:
            continue
        for zi in range(N):
            if not mask[zi]:
                continue
            _mulvec(c, V[m], V[zi], w, p)
            nz = False
            for k in range(n):
                if w[k] != 0:
                    nz = True
                    break
            if not nz:
                continue
            for a in range(K.shape[0]):
                _mulvec(c, w, K[a], d, p)
                bad = False
                for k in range(n):
                    if d[k] != 0:
                        bad = True
                        break
                if bad:
                    mask[zi] = False
                    break
    return mask
