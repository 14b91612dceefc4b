# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled triangle-packing kernels; same contracts and search order as _pure."""

import numpy as np


def greedy_pack(a):
    cdef const unsigned char[:, ::1] m = np.ascontiguousarray(a, dtype=np.uint8)
    cdef Py_ssize_t k = m.shape[0]
    cdef unsigned char[::1] alive = np.ones(k, dtype=np.uint8)
    cdef Py_ssize_t v, u, w
    cdef bint done
    out = []
    for v in range(k):
        if not alive[v]:
            continue
        done = False
        for u in range(v + 1, k):
            if not (alive[u] and m[v, u]):
                continue
            for w in range(u + 1, k):
                if alive[w] and m[v, w] and m[u, w]:
                    out.append((v, u, w))
                    alive[v] = 0
                    alive[u] = 0
                    alive[w] = 0
                    done = True
                    break
            if done:
                break
    return out


cdef bint _search(const unsigned char[:, ::1] m, unsigned char[::1] alive,
                  Py_ssize_t k, Py_ssize_t start, Py_ssize_t count,
                  Py_ssize_t remaining, int[::1] out, Py_ssize_t depth):
    cdef Py_ssize_t v, u, w
    if remaining == 0:
        return True
    if count < 3 * remaining:
        return False
    v = start
    while v < k and not alive[v]:
        v += 1
    if v >= k:
        return False
    alive[v] = 0
    for u in range(v + 1, k):
        if not (alive[u] and m[v, u]):
            continue
        alive[u] = 0
        for w in range(u + 1, k):
            if alive[w] and m[v, w] and m[u, w]:
                alive[w] = 0
                out[3 * depth] = <int>v
                out[3 * depth + 1] = <int>u
                out[3 * depth + 2] = <int>w
                if _search(m, alive, k, v + 1, count - 3, remaining - 1, out, depth + 1):
                    return True
                alive[w] = 1
        alive[u] = 1
    if _search(m, alive, k, v + 1, count - 1, remaining, out, depth):
        return True
    alive[v] = 1
    return False


def pack_exact(a, int need):
    if need <= 0:
        return []
    cdef const unsigned char[:, ::1] m = np.ascontiguousarray(a, dtype=np.uint8)
    cdef Py_ssize_t k = m.shape[0]
    cdef unsigned char[::1] alive = np.ones(k, dtype=np.uint8)
    cdef int[::1] out = np.zeros(3 * need, dtype=np.intc)
    if not _search(m, alive, k, 0, k, need, out, 0):
        return None
    return [(out[3 * i], out[3 * i + 1], out[3 * i + 2]) for i in range(need)]
