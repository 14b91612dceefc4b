"""Lower-bound colorings and polynomial-time certificates of witness-freeness.

The structural checkers look only at the coloring they are handed; nothing
about how it was generated is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import PreconditionError
from .graph import Color, ColoredGraph, components, maximum_matching


class ExtremalKind(str, Enum):
    CTM_LOWER_BOUND = "CtmLowerBound"
    TRIPLES_VS_MATCHING_SHARP = "TriplesVsMatchingSharp"
    AFFINE4 = "Affine4"


@dataclass(frozen=True)
class ExtremalSpec:
    kind: ExtremalKind
    n: int
    m: int | None
    part_sizes: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return sum(self.part_sizes)


def ctm_lower_bound_spec(n: int) -> ExtremalSpec:
    if n < 2:
        raise PreconditionError(f"n={n} < 2")
    return ExtremalSpec(ExtremalKind.CTM_LOWER_BOUND, n, None, (3 * n - 1, 3 * n - 1, n - 1))


def triples_vs_matching_sharp_spec(n: int, m: int) -> ExtremalSpec:
    if not 1 <= m <= n:
        raise PreconditionError(f"need 1 <= m <= n, got m={m}, n={n}")
    return ExtremalSpec(ExtremalKind.TRIPLES_VS_MATCHING_SHARP, n, m, (3 * n - 1, m - 1))


def affine4_spec(n: int) -> ExtremalSpec:
    if n < 1 or (2 * n - 1) % 3:
        raise PreconditionError(f"2n-1={2 * n - 1} is not divisible by 3 (need n = 2 mod 3)")
    return ExtremalSpec(ExtremalKind.AFFINE4, n, None, ((2 * n - 1) // 3,) * 9)


def gen_ctm_lower_bound(n: int) -> ColoredGraph:
    """7n - 3 vertices: red cliques on A and B (3n - 1 each), everything else blue.

    A = 0..3n-2, B = 3n-1..6n-3, C = the last n - 1 vertices.
    """
    spec = ctm_lower_bound_spec(n)
    size = spec.n_vertices
    a = 3 * n - 1
    table = np.full((size, size), Color.BLUE, dtype=np.uint8)
    table[:a, :a] = Color.RED
    table[a : 2 * a, a : 2 * a] = Color.RED
    return ColoredGraph(table)


def verify_ctm_lower_bound_structurally(g: ColoredGraph, n: int) -> bool:
    """Certify that ``g`` has no monochromatic connected ``nK3``.

    Red side: every red component has fewer than 3n vertices. Blue side:
    with H the vertices outside the two largest red components, |H| < n and
    the blue graph on V - H is triangle-free, so every blue triangle uses a
    vertex of H and at most |H| of them are disjoint.
    """
    if g.num_colors != 2:
        return False
    red = components(g, Color.RED)
    if max(red.sizes()) >= 3 * n:
        return False
    hub = {v for comp in red.components[2:] for v in comp}
    if len(hub) >= n:
        return False
    rest = [v for v in range(g.n_vertices) if v not in hub]
    b = g.mask(Color.BLUE)[np.ix_(rest, rest)].astype(np.int64)
    # trace(B^3) counts closed walks of length 3, i.e. 6x the triangles
    return int(np.einsum("ij,jk,ki->", b, b, b)) == 0


def gen_triples_vs_matching_sharp(n: int, m: int) -> ColoredGraph:
    """3n + m - 2 vertices: a red clique on the first 3n - 1, blue on every edge meeting the last m - 1."""
    spec = triples_vs_matching_sharp_spec(n, m)
    size = spec.n_vertices
    a = 3 * n - 1
    table = np.full((size, size), Color.BLUE, dtype=np.uint8)
    table[:a, :a] = Color.RED
    return ColoredGraph(table)


def verify_triples_vs_matching_sharp_structurally(g: ColoredGraph, n: int, m: int) -> bool:
    """No red connected ``nK3`` (all red components < 3n) and no blue ``mK2`` (exact matching)."""
    if g.num_colors != 2:
        return False
    if max(components(g, Color.RED).sizes()) >= 3 * n:
        return False
    return len(maximum_matching(g, Color.BLUE)) < m


# Points of AG(2,3) are (x, y) in Z_3^2, numbered 3x + y. Each row below is
# one parallel class: three disjoint lines covering all nine points.
AFFINE_PLANE_3: tuple[tuple[tuple[int, int, int], ...], ...] = (
    ((0, 1, 2), (3, 4, 5), (6, 7, 8)),  # x constant
    ((0, 3, 6), (1, 4, 7), (2, 5, 8)),  # y constant
    ((0, 4, 8), (1, 5, 6), (2, 3, 7)),  # y - x constant
    ((0, 5, 7), (1, 3, 8), (2, 4, 6)),  # y + x constant
)


def _line_class() -> np.ndarray:
    cls = np.full((9, 9), 255, dtype=np.uint8)
    for c, lines in enumerate(AFFINE_PLANE_3):
        for line in lines:
            for p in line:
                for q in line:
                    if p != q:
                        cls[p, q] = c
    return cls


def gen_affine4(n: int) -> ColoredGraph:
    """4-colored ``K_{6n-3}`` from AG(2,3), each point blown up to (2n - 1)/3 vertices.

    An edge between different points gets the parallel class of the line
    through them (0..3); edges inside one point's group get color 0.
    """
    spec = affine4_spec(n)
    group = spec.part_sizes[0]
    point = np.repeat(np.arange(9), group)
    table = _line_class()[np.ix_(point, point)]
    same = point[:, None] == point[None, :]
    table[same] = 0
    return ColoredGraph(table, num_colors=4)


def verify_affine4_structurally(g: ColoredGraph, n: int) -> bool:
    """Every color has exactly 3 components, each of size 2n - 1."""
    if g.num_colors != 4:
        return False
    return all(components(g, c).sizes() == [2 * n - 1] * 3 for c in range(4))
