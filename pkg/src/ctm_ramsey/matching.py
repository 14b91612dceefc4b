"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

Plain BFS formulation with blossom contraction through a ``base`` array;
O(V^3), which is ample for the graph sizes this package handles.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def max_cardinality_matching(adj: Sequence[Sequence[int]]) -> list[int]:
    """Return ``mate`` where ``mate[v]`` is v's partner or -1.

    ``adj[v]`` lists the neighbours of ``v``; the graph must be undirected.
    Neighbour lists are scanned in the given order, so sorted input gives a
    deterministic result.
    """
    n = len(adj)
    mate = [-1] * n

    # greedy warm start
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1 and u != v:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _find_augmenting_path(adj, mate, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def _find_augmenting_path(adj, mate, root):
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                in_tree[mate[to]] = True
                queue.append(mate[to])
    return -1, parent
