"""Edge-colored complete graphs and the color-restricted views used everywhere else.

A :class:`ColoredGraph` stores a dense symmetric table of color indices.
Two-colored graphs use Red/Blue; three-colored ("perturbed") graphs add
White for missing edges; four-colored graphs use plain indices 0..3 and
exist for the affine-plane construction only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import PreconditionError

MAX_VERTICES = 4096
_NO_COLOR = 255


class Color(IntEnum):
    RED = 0
    BLUE = 1
    WHITE = 2

    @property
    def letter(self) -> str:
        return "RBW"[self]

    @classmethod
    def from_letter(cls, letter: str) -> "Color":
        try:
            return cls("RBW".index(letter))
        except ValueError:
            raise ValueError(f"unknown color letter {letter!r}") from None

    def other(self) -> "Color":
        """The opposite of Red/Blue."""
        if self is Color.WHITE:
            raise ValueError("white has no opposite color")
        return Color.BLUE if self is Color.RED else Color.RED


class ColoredGraph:
    """Complete graph on ``n_vertices`` vertices with one color per pair.

    ``num_colors`` is 2 (Red/Blue), 3 (Red/Blue/White) or 4 (indices 0..3).
    The instance is immutable; the color table is a read-only ``uint8`` array.
    """

    __slots__ = ("_table", "num_colors", "_masks", "_component_cache")

    def __init__(self, table: np.ndarray, num_colors: int = 2):
        if num_colors not in (2, 3, 4):
            raise PreconditionError(f"num_colors must be 2, 3 or 4, got {num_colors}")
        table = np.array(table, dtype=np.uint8, copy=True)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise PreconditionError("color table must be square")
        n = table.shape[0]
        if not 1 <= n <= MAX_VERTICES:
            raise PreconditionError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        np.fill_diagonal(table, _NO_COLOR)
        off = ~np.eye(n, dtype=bool)
        if not np.array_equal(table, table.T):
            raise PreconditionError("color table must be symmetric")
        if n > 1 and int(table[off].max()) >= num_colors:
            raise PreconditionError(f"color index out of range for a {num_colors}-colored graph")
        table.setflags(write=False)
        self._table = table
        self.num_colors = num_colors
        self._masks: dict[int, np.ndarray] = {}
        self._component_cache: dict[int, ComponentDecomposition] = {}

    # construction helpers

    @classmethod
    def from_function(cls, n: int, color: Callable[[int, int], int], num_colors: int = 2) -> "ColoredGraph":
        """Build from ``color(u, v)`` evaluated for every ``u < v``."""
        table = np.full((n, n), _NO_COLOR, dtype=np.uint8)
        for u in range(n):
            for v in range(u + 1, n):
                table[u, v] = table[v, u] = int(color(u, v))
        return cls(table, num_colors)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: dict[int, Iterable[tuple[int, int]]],
        default: int = Color.BLUE,
        num_colors: int = 2,
    ) -> "ColoredGraph":
        """Build from per-color edge lists; unlisted pairs get ``default``."""
        table = np.full((n, n), int(default), dtype=np.uint8)
        for c, pairs in edges.items():
            for u, v in pairs:
                if u == v:
                    raise PreconditionError(f"self-loop at {u}")
                table[u, v] = table[v, u] = int(c)
        return cls(table, num_colors)

    @classmethod
    def monochromatic(cls, n: int, color: Color) -> "ColoredGraph":
        return cls(np.full((n, n), int(color), dtype=np.uint8))

    # queries

    @property
    def n_vertices(self) -> int:
        return self._table.shape[0]

    @property
    def allows_white(self) -> bool:
        return self.num_colors == 3

    @property
    def table(self) -> np.ndarray:
        return self._table

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no color on the diagonal")
        return int(self._table[u, v])

    def mask(self, c: int) -> np.ndarray:
        """Read-only boolean adjacency matrix of the color-``c`` subgraph."""
        c = int(c)
        m = self._masks.get(c)
        if m is None:
            m = self._table == c
            m.setflags(write=False)
            self._masks[c] = m
        return m

    def neighbors(self, v: int, c: int) -> list[int]:
        return np.flatnonzero(self.mask(c)[v]).tolist()

    def induced(self, vertices: Sequence[int]) -> "ColoredGraph":
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        idx = np.asarray(vertices, dtype=np.intp)
        return ColoredGraph(self._table[np.ix_(idx, idx)], self.num_colors)

    def edges(self, c: int) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.mask(c), 1))
        return list(zip(us.tolist(), vs.tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.num_colors == other.num_colors and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.num_colors, self._table.tobytes()))

    def __repr__(self) -> str:
        return f"ColoredGraph(n_vertices={self.n_vertices}, num_colors={self.num_colors})"


@dataclass(frozen=True)
class ComponentDecomposition:
    color: int
    components: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def sizes(self) -> list[int]:
        return [len(comp) for comp in self.components]

    def index_of(self) -> dict[int, int]:
        """Map each vertex to the position of its component."""
        return {v: i for i, comp in enumerate(self.components) for v in comp}


@dataclass(frozen=True)
class Matching:
    color: int
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


@dataclass(frozen=True)
class WhiteDegreeProfile:
    max_white_degree: int
    per_vertex: tuple[int, ...]


def components(g: ColoredGraph, c: int) -> ComponentDecomposition:
    """Connected components of the color-``c`` subgraph.

    Components are sorted by decreasing size, ties by smallest vertex; the
    vertices inside each component are ascending. Isolated vertices appear as
    singletons.
    """
    c = int(c)
    cached = g._component_cache.get(c)
    if cached is not None:
        return cached
    n = g.n_vertices
    mask = g.mask(c)
    label = [-1] * n
    comps: list[list[int]] = []
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = len(comps)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in np.flatnonzero(mask[v]).tolist():
                if label[u] < 0:
                    label[u] = label[s]
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda comp: (-len(comp), comp[0]))
    result = ComponentDecomposition(c, tuple(tuple(comp) for comp in comps))
    g._component_cache[c] = result
    return result


def white_profile(g: ColoredGraph) -> WhiteDegreeProfile:
    if not g.allows_white:
        per = (0,) * g.n_vertices
    else:
        per = tuple(int(d) for d in g.mask(Color.WHITE).sum(axis=1))
    return WhiteDegreeProfile(max(per, default=0), per)


def maximum_matching(g: ColoredGraph, c: int, within: Iterable[int] | None = None) -> Matching:
    """Maximum-cardinality matching of the color-``c`` subgraph induced on ``within``."""
    from .matching import max_cardinality_matching

    verts = sorted(set(range(g.n_vertices) if within is None else within))
    if verts and (verts[0] < 0 or verts[-1] >= g.n_vertices):
        raise PreconditionError("'within' contains vertices outside the graph")
    sub = g.mask(c)[np.ix_(verts, verts)]
    adj = [np.flatnonzero(row).tolist() for row in sub]
    mate = max_cardinality_matching(adj)
    pairs = sorted((verts[i], verts[j]) for i, j in enumerate(mate) if j > i)
    return Matching(int(c), tuple(pairs))


def random_coloring(n: int, seed: int) -> ColoredGraph:
    """Edge-i.i.d. uniform Red/Blue coloring of ``K_n``.

    Uses numpy's PCG64 (``numpy.random.default_rng(seed)``) and draws one
    integer in {0, 1} per pair, pairs taken in row-major upper-triangular
    order ``(0,1), (0,2), ..., (1,2), ...``; 0 is Red, 1 is Blue.
    """
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8)
    table = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    table[iu] = draws
    table.T[iu] = draws
    return ColoredGraph(table)


def with_random_white(g: ColoredGraph, t: int, seed: int, density: float = 0.5) -> ColoredGraph:
    """Overlay a random White graph of maximum degree below ``t`` on ``g``.

    Pairs are visited in a PCG64-shuffled order; each is whitened with
    probability ``density`` when both endpoints still have white degree
    below ``t - 1``. ``t <= 1`` leaves the coloring untouched.
    """
    table = g.table.copy()
    n = g.n_vertices
    if t > 1:
        rng = np.random.default_rng(seed)
        us, vs = np.triu_indices(n, 1)
        order = rng.permutation(len(us))
        coins = rng.random(len(us))
        deg = [0] * n
        for k in order.tolist():
            u, v = int(us[k]), int(vs[k])
            if deg[u] < t - 1 and deg[v] < t - 1 and coins[k] < density:
                table[u, v] = table[v, u] = Color.WHITE
                deg[u] += 1
                deg[v] += 1
    return ColoredGraph(table, num_colors=3)
