"""Triangle matchings, connected-triangle-matching witnesses and their checks.

Also hosts the monochromatic ``nK3`` finders that the extraction code uses
as black boxes, and the exhaustive per-component oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import PreconditionError, StructuralContradiction
from .graph import Color, ColoredGraph, components, maximum_matching

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class TriangleMatching:
    color: int
    triangles: tuple[Triangle, ...]

    def __len__(self) -> int:
        return len(self.triangles)

    def vertices(self) -> list[int]:
        return sorted(v for tri in self.triangles for v in tri)


@dataclass(frozen=True)
class CtmWitness:
    tm: TriangleMatching
    component_id: int

    @property
    def color(self) -> int:
        return self.tm.color


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def make_matching(color: int, triangles: Iterable[Sequence[int]]) -> TriangleMatching:
    """Normalise triangles (each ascending) into a :class:`TriangleMatching`."""
    return TriangleMatching(int(color), tuple(tuple(sorted(int(v) for v in tri)) for tri in triangles))


def make_witness(g: ColoredGraph, tm: TriangleMatching) -> CtmWitness:
    """Attach the component index of the first triangle vertex."""
    comp_id = components(g, tm.color).index_of()[tm.triangles[0][0]] if tm.triangles else 0
    return CtmWitness(tm, comp_id)


def check_triangle_matching(g: ColoredGraph, tm: TriangleMatching) -> Verdict:
    """Disjointness, vertex range and edge colors of a triangle matching."""
    n = g.n_vertices
    seen: set[int] = set()
    for tri in tm.triangles:
        if len(tri) != 3 or len(set(tri)) != 3:
            return Verdict(False, "shape", f"{tri} is not three distinct vertices")
        for v in tri:
            if not 0 <= v < n:
                return Verdict(False, "vertex-range", f"vertex {v} not in 0..{n - 1}")
            if v in seen:
                return Verdict(False, "disjointness", f"vertex {v} used twice")
            seen.add(v)
        a, b, c = tri
        for u, v in ((a, b), (a, c), (b, c)):
            if g.color(u, v) != tm.color:
                return Verdict(False, "edge-color", f"edge {u}-{v} is not color {tm.color}")
    return Verdict(True)


def verify_ctm(g: ColoredGraph, w: CtmWitness, n: int) -> Verdict:
    """Check that ``w`` is a monochromatic connected triangle matching of size >= n.

    Connectivity is recomputed from ``g``; ``w.component_id`` is ignored.
    """
    allowed = range(4) if g.num_colors == 4 else (Color.RED, Color.BLUE)
    if w.tm.color not in allowed:
        return Verdict(False, "color", f"color {w.tm.color} cannot carry a witness")
    if len(w.tm) < n:
        return Verdict(False, "count", f"{len(w.tm)} triangles < {n}")
    basic = check_triangle_matching(g, w.tm)
    if not basic:
        return basic
    index = components(g, w.tm.color).index_of()
    comp_ids = {index[v] for v in w.tm.vertices()}
    if len(comp_ids) > 1:
        return Verdict(False, "connectivity", f"witness spans {len(comp_ids)} components")
    return Verdict(True)


def _local(g: ColoredGraph, c: int, verts: Sequence[int]) -> np.ndarray:
    idx = np.asarray(verts, dtype=np.intp)
    return np.ascontiguousarray(g.mask(c)[np.ix_(idx, idx)], dtype=np.uint8)


def greedy_packing(g: ColoredGraph, c: int, verts: Sequence[int]) -> list[Triangle]:
    """Maximal color-``c`` triangle packing on ``verts`` (sorted), lexicographic greedy."""
    verts = sorted(verts)
    local = kernels.greedy_pack(_local(g, c, verts))
    return [(verts[a], verts[b], verts[d]) for a, b, d in local]


def exact_packing(g: ColoredGraph, c: int, verts: Sequence[int], need: int) -> list[Triangle] | None:
    """``need`` disjoint color-``c`` triangles on ``verts`` by backtracking, or None."""
    verts = sorted(verts)
    if len(verts) < 3 * need:
        return None
    local = kernels.pack_exact(_local(g, c, verts), need)
    if local is None:
        return None
    return [(verts[a], verts[b], verts[d]) for a, b, d in local]


def oracle_has_ctm(g: ColoredGraph, c: int, n: int) -> CtmWitness | None:
    """Exhaustive search for ``n`` disjoint color-``c`` triangles inside one component."""
    for comp_id, comp in enumerate(components(g, c).components):
        if len(comp) // 3 < n:
            continue
        found = exact_packing(g, c, comp, n)
        if found is not None:
            return CtmWitness(make_matching(c, found), comp_id)
    return None


def _as_vertex_list(g: ColoredGraph, within: Iterable[int] | None) -> list[int]:
    return sorted(set(range(g.n_vertices) if within is None else within))


def find_mono_triangle_matching(
    g: ColoredGraph,
    n: int,
    within: Iterable[int] | None = None,
    stats: Counter | None = None,
) -> TriangleMatching:
    """Monochromatic ``nK3`` in a 2-colored complete graph on at least 5n vertices.

    Greedy maximal packings (Red, then Blue on the leftover) settle every
    graph with at least 6n vertices: the leftover spans no monochromatic
    triangle, so it has at most 5 vertices and the two packings hold at
    least 2n - 1 triangles between them. Smaller graphs fall back to exact
    search in each color when greedy falls short.
    """
    verts = _as_vertex_list(g, within)
    if n < 2:
        raise PreconditionError(f"n={n} < 2")
    if g.allows_white and g.mask(Color.WHITE)[np.ix_(verts, verts)].any():
        raise PreconditionError("white edges present; use the perturbed finder")
    if len(verts) < 5 * n:
        raise PreconditionError(f"|V|={len(verts)} < 5n={5 * n}")

    red = greedy_packing(g, Color.RED, verts)
    if len(red) >= n:
        _count(stats, "greedy")
        return make_matching(Color.RED, red[:n])
    used = {v for tri in red for v in tri}
    blue = greedy_packing(g, Color.BLUE, [v for v in verts if v not in used])
    if len(blue) >= n:
        _count(stats, "greedy")
        return make_matching(Color.BLUE, blue[:n])
    if len(verts) >= 6 * n:
        raise StructuralContradiction(
            f"greedy packings {len(red)}+{len(blue)} < 2n-1={2 * n - 1} on |V|={len(verts)} >= 6n"
        )
    _count(stats, "exact")
    for c in (Color.RED, Color.BLUE):
        found = exact_packing(g, c, verts, n)
        if found is not None:
            return make_matching(c, found)
    raise StructuralContradiction(f"no monochromatic {n}K3 on {len(verts)} >= 5n vertices")


def find_mono_triangle_matching_perturbed(
    g: ColoredGraph,
    n: int,
    t: int,
    within: Iterable[int] | None = None,
    stats: Counter | None = None,
) -> TriangleMatching:
    """Monochromatic ``nK3`` when fewer than ``t`` edges per vertex are White.

    Greedy maximal Blue packing, then greedy maximal Red packing on the rest.
    With at least 6n - 2 + 5t vertices the leftover after both phases is
    below 5t + 4 vertices, which forces one color to reach n.
    """
    verts = _as_vertex_list(g, within)
    if n < 2:
        raise PreconditionError(f"n={n} < 2")
    if not 1 <= t <= n:
        raise PreconditionError(f"t={t} outside 1..n")
    if len(verts) < 6 * n - 2 + 5 * t:
        raise PreconditionError(f"|V|={len(verts)} < 6n-2+5t={6 * n - 2 + 5 * t}")
    if g.allows_white:
        wdeg = int(g.mask(Color.WHITE)[np.ix_(verts, verts)].sum(axis=1).max())
        if wdeg >= t:
            raise PreconditionError(f"max white degree {wdeg} is not < t={t}")

    blue = greedy_packing(g, Color.BLUE, verts)
    _count(stats, "greedy")
    if len(blue) >= n:
        return make_matching(Color.BLUE, blue[:n])
    used = {v for tri in blue for v in tri}
    red = greedy_packing(g, Color.RED, [v for v in verts if v not in used])
    if len(red) >= n:
        return make_matching(Color.RED, red[:n])
    raise StructuralContradiction(
        f"greedy packings blue={len(blue)}, red={len(red)} both < n={n} on |V|={len(verts)} >= 6n-2+5t"
    )


def has_connected_matching(g: ColoredGraph, c: int, n: int) -> bool:
    """True iff one color-``c`` component carries a matching of size ``n``."""
    for comp in components(g, c).components:
        if len(comp) < 2 * n:
            continue
        if len(maximum_matching(g, c, comp)) >= n:
            return True
    return False


def _count(stats: Counter | None, key: str) -> None:
    if stats is not None:
        stats[key] += 1
