"""Brute-force reference computations, independent of the package algorithms.

Everything here works from the raw color table with itertools and a
union-find; nothing calls into the matching, packing or extraction code.
"""

from itertools import combinations


def color_edges(table, c, verts=None):
    verts = range(len(table)) if verts is None else sorted(verts)
    return [(u, v) for u, v in combinations(verts, 2) if table[u][v] == c]


def brute_max_matching(table, c, verts=None):
    """Size of a maximum matching: the lowest vertex is either left out or matched to a neighbour."""

    def rec(live):
        if len(live) < 2:
            return 0
        v, rest = live[0], live[1:]
        best = rec(rest)
        for u in rest:
            if table[v][u] == c:
                best = max(best, 1 + rec(tuple(x for x in rest if x != u)))
        return best

    return rec(tuple(sorted(range(len(table)) if verts is None else verts)))


def brute_components(table, c):
    n = len(table)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(range(n), 2):
        if table[u][v] == c:
            parent[find(u)] = find(v)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: (-len(g), g[0]))


def triangles(table, c, verts):
    return [
        t for t in combinations(sorted(verts), 3)
        if table[t[0]][t[1]] == c and table[t[0]][t[2]] == c and table[t[1]][t[2]] == c
    ]


def max_disjoint_triangles(tris):
    """Largest number of pairwise disjoint triangles, by exhaustive recursion."""
    best = 0

    def rec(i, used, count):
        nonlocal best
        best = max(best, count)
        if count + (len(tris) - i) <= best:
            return
        for j in range(i, len(tris)):
            if not used & set(tris[j]):
                rec(j + 1, used | set(tris[j]), count + 1)

    rec(0, set(), 0)
    return best


def brute_has_ctm(table, c, n):
    """True iff one color-c component holds n disjoint color-c triangles."""
    return any(max_disjoint_triangles(triangles(table, c, comp)) >= n for comp in brute_components(table, c))


def brute_has_mono_nk3(table, n):
    return any(max_disjoint_triangles(triangles(table, c, range(len(table)))) >= n for c in (0, 1))
