"""Almost-square paths through a complete tripartite graph.

Classes are numbered 1, 2, 3 and each has ``m`` slots. A route is a vertex
sequence in which consecutive vertices and vertices two apart lie in
different classes, except for at most two listed "missing diagonals".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError

Vertex = tuple[int, int]


@dataclass(frozen=True)
class SquarePathRoute:
    vertices: tuple[Vertex, ...]
    missing_diagonals: tuple[tuple[int, int], ...]

    def classes(self) -> list[int]:
        return [c for c, _ in self.vertices]


def class_sequence(p: int) -> list[int]:
    """Class pattern for a route of ``p`` vertices starting in class 1 and ending in class 3."""
    k, r = divmod(p, 3)
    if r == 0:
        return [1, 2, 3] * k
    # k - 1 full rounds, then turn around (1,2,1,3) or double up (1,2,1,2,3)
    tail = [1, 2, 1, 3] if r == 1 else [1, 2, 1, 2, 3]
    return [1, 2, 3] * (k - 1) + tail


def route_square_path(m: int, p: int, v1: int, v2: int) -> SquarePathRoute:
    """Route of exactly ``p`` vertices from slot ``v1`` of class 1 to slot ``v2`` of class 3."""
    if m < 2:
        raise PreconditionError(f"m={m} < 2")
    if not 4 <= p <= 3 * m:
        raise PreconditionError(f"need 4 <= p <= 3m={3 * m}, got p={p}")
    if not (0 <= v1 < m and 0 <= v2 < m):
        raise PreconditionError(f"endpoint slots must be in 0..{m - 1}")

    seq = class_sequence(p)
    reserved = {1: v1, 3: v2}
    fresh = {c: iter([s for s in range(m) if s != reserved.get(c)]) for c in (1, 2, 3)}
    verts: list[Vertex] = []
    for i, c in enumerate(seq):
        if i == 0:
            slot = v1
        elif i == p - 1:
            slot = v2
        else:
            slot = next(fresh[c], None)
            if slot is None:
                raise PreconditionError(f"class {c} has no free slot left (m={m}, p={p})")
        verts.append((c, slot))
    missing = tuple((i, i + 2) for i in range(p - 2) if seq[i] == seq[i + 2])
    return SquarePathRoute(tuple(verts), missing)


def validate_route(route: SquarePathRoute, m: int, p: int, v1: int, v2: int) -> str | None:
    """Return None when ``route`` is a valid almost-square path, else a reason."""
    vs = route.vertices
    if len(vs) != p:
        return f"length {len(vs)} != {p}"
    if len(set(vs)) != p:
        return "repeated vertex"
    if any(not (1 <= c <= 3 and 0 <= s < m) for c, s in vs):
        return "vertex outside the tripartite graph"
    if vs[0] != (1, v1) or vs[-1] != (3, v2):
        return "endpoints do not match"
    if any(vs[i][0] == vs[i + 1][0] for i in range(p - 1)):
        return "consecutive vertices share a class"
    gaps = tuple((i, i + 2) for i in range(p - 2) if vs[i][0] == vs[i + 2][0])
    if gaps != route.missing_diagonals:
        return f"missing diagonals {gaps} differ from declared {route.missing_diagonals}"
    if len(gaps) != p % 3:
        return f"{len(gaps)} missing diagonals, expected {p % 3}"
    return None
