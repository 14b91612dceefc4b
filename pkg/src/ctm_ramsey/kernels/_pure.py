"""Pure-Python triangle-packing kernels.

Both functions take a local boolean adjacency matrix ``a`` (k x k, one
color already selected) and work in local indices 0..k-1. Adjacency is
held as int bitmasks, one per row.
"""

from __future__ import annotations

import sys

import numpy as np


def _rows(a) -> list[int]:
    a = np.asarray(a, dtype=bool)
    rows = []
    for row in a:
        packed = np.packbits(row, bitorder="little").tobytes()
        rows.append(int.from_bytes(packed, "little"))
    return rows


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def greedy_pack(a) -> list[tuple[int, int, int]]:
    """Lexicographically greedy maximal triangle packing.

    Equivalent to repeatedly taking the lexicographically smallest triangle
    among unused vertices; the result leaves no triangle behind.
    """
    nbr = _rows(a)
    k = len(nbr)
    alive = (1 << k) - 1
    out = []
    for v in range(k):
        if not alive >> v & 1:
            continue
        cand = nbr[v] & alive & ~((2 << v) - 1)
        for u in _bits(cand):
            common = cand & nbr[u] & ~((2 << u) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                out.append((v, u, w))
                alive &= ~((1 << v) | (1 << u) | (1 << w))
                break
    return out


def pack_exact(a, need: int) -> list[tuple[int, int, int]] | None:
    """First ``need`` vertex-disjoint triangles in backtracking order, or None.

    Branching: the smallest live vertex either joins a triangle (partners in
    lexicographic order) or is discarded. Prunes when fewer than
    ``3 * remaining`` live vertices are left.
    """
    if need <= 0:
        return []
    nbr = _rows(a)
    k = len(nbr)
    out: list[tuple[int, int, int]] = []
    limit = sys.getrecursionlimit()
    if k + 50 > limit:
        sys.setrecursionlimit(k + 50)

    def search(alive: int, count: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        if count < 3 * remaining or not alive:
            return False
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        cand = nbr[v] & rest
        for u in _bits(cand):
            common = cand & nbr[u] & ~((2 << u) - 1)
            for w in _bits(common):
                out.append((v, u, w))
                if search(rest & ~((1 << u) | (1 << w)), count - 3, remaining - 1):
                    return True
                out.pop()
        return search(rest, count - 1, remaining)

    found = search((1 << k) - 1, k, need)
    return out if found else None
