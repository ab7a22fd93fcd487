"""Compiled inner loop for multiplication tables of diagram monoids."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def product_table(n, R, keys_sorted, order, raw, fcode):
    """Fill ``raw[i, j]`` (index of R[i] stacked on R[j]) and ``fcode``.

    ``fcode`` packs genus counts of closed components in base ``2n + 1``.
    """
    N = R.shape[0]
    m = 2 * n
    base = m
    fbase = m + 1
    parent = np.empty(2 * m, np.int64)
    blocks = np.zeros(2 * m, np.int64)
    mids = np.zeros(2 * m, np.int64)
    bnd = np.zeros(2 * m, np.bool_)
    relabel = np.empty(2 * m, np.int64)
    out = np.empty(m, np.int64)
    for i in range(N):
        top = R[i]
        nt = 0
        for p in range(m):
            if top[p] + 1 > nt:
                nt = top[p] + 1
        for j in range(N):
            bot = R[j]
            nb = 0
            for p in range(m):
                if bot[p] + 1 > nb:
                    nb = bot[p] + 1
            tot = nb + nt
            for v in range(tot):
                parent[v] = v
                blocks[v] = 0
                mids[v] = 0
                bnd[v] = False
                relabel[v] = -1
            for p in range(n):
                a = _find(parent, bot[n + p])
                b = _find(parent, nb + top[p])
                if a != b:
                    parent[a] = b
            for p in range(n):
                out[p] = _find(parent, bot[p])
                out[n + p] = _find(parent, nb + top[n + p])
            nxt = 0
            key = 0
            mult = 1
            for p in range(m):
                r = out[p]
                bnd[r] = True
                if relabel[r] < 0:
                    relabel[r] = nxt
                    nxt += 1
                key += relabel[r] * mult
                mult *= base
            lo = 0
            hi = N
            while lo < hi:
                mid = (lo + hi) // 2
                if keys_sorted[mid] < key:
                    lo = mid + 1
                else:
                    hi = mid
            raw[i, j] = order[lo]
            for v in range(tot):
                blocks[_find(parent, v)] += 1
            for p in range(n):
                mids[_find(parent, bot[n + p])] += 1
            code = 0
            for v in range(tot):
                if parent[v] == v and not bnd[v] and blocks[v] > 0:
                    g = mids[v] - blocks[v] + 1
                    w = 1
                    for _ in range(g):
                        w *= fbase
                    code += w
            fcode[i, j] = code
    return raw, fcode


def rgs_keys(rgss, n: int) -> np.ndarray:
    base = 2 * n
    w = base ** np.arange(2 * n, dtype=np.int64)
    return (np.asarray(rgss, dtype=np.int64) * w).sum(axis=1)


def decode_floats(code: int, n: int) -> tuple:
    fbase = 2 * n + 1
    out = []
    g = 0
    while code:
        code, c = divmod(code, fbase)
        if c:
            out.append((g, c))
        g += 1
    return tuple(out)
