"""Witness extraction: turn the Ramsey-threshold arguments into algorithms.

Every extractor returns an object a verifier can check against the host
graph, plus (for the connected-triangle-matching extractors) a trace of the
branch that produced it.

Throughout, ``C`` is the color whose class is connected (the role Blue
plays in the argument) and ``D`` the other one. When only Red is connected
the roles swap and the trace records it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import PreconditionError, StructuralContradiction
from .graph import Color, ColoredGraph, Matching, components, maximum_matching, white_profile
from .packing import (
    CtmWitness,
    Triangle,
    find_mono_triangle_matching,
    find_mono_triangle_matching_perturbed,
    greedy_packing,
    make_matching,
    make_witness,
    verify_ctm,
)


class Regime(str, Enum):
    BLUE_NK3 = "BlueNK3"
    RED_CONNECTED = "RedConnected"
    X1_AT_LEAST_5N = "X1AtLeast5n"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4A = "Case4a"
    CASE4B = "Case4b"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtractionTrace:
    swapped_colors: bool
    regime: Regime
    params: dict = field(default_factory=dict)

    def format(self) -> str:
        """``regime=<name> swapped=<0|1> key=value ...`` on one line."""
        parts = [f"regime={self.regime.value}", f"swapped={int(self.swapped_colors)}"]
        for key, value in self.params.items():
            if isinstance(value, (list, tuple)):
                value = ",".join(str(v) for v in value) or "-"
            parts.append(f"{key}={value}")
        return " ".join(parts)


@dataclass(frozen=True)
class TriplesOrMatching:
    red_ctm: CtmWitness | None = None
    blue_matching: Matching | None = None

    def __post_init__(self):
        if (self.red_ctm is None) == (self.blue_matching is None):
            raise ValueError("exactly one of red_ctm / blue_matching must be set")


# ---------------------------------------------------------------------------
# triangles versus matchings


def _check_2colored(g: ColoredGraph, verts: Sequence[int]) -> None:
    if g.allows_white and g.mask(Color.WHITE)[np.ix_(verts, verts)].any():
        raise PreconditionError("white edges present; use the perturbed variant")


def _max_white_degree(g: ColoredGraph, verts: Sequence[int]) -> int:
    if not g.allows_white or not verts:
        return 0
    return int(g.mask(Color.WHITE)[np.ix_(verts, verts)].sum(axis=1).max())


def _triangles_or_matching(
    g: ColoredGraph, verts: Sequence[int], n: int, m: int, t: int, red: Color
) -> tuple[CtmWitness | None, Matching | None]:
    """Shared core: ``n`` connected ``red`` triangles or ``m`` disjoint edges of the other color.

    Take a maximum matching M in the other color. If it is short, the
    unmatched set X spans no edge of that color, and by maximality each
    matched edge has an endpoint p with at most one such neighbour in X.
    Pair each p with two X vertices, then pack the rest of X greedily.
    """
    blue = red.other()
    mm = maximum_matching(g, blue, verts)
    if len(mm) >= m:
        return None, Matching(int(blue), mm.edges[:m])

    rm, bm = g.mask(red), g.mask(blue)
    matched = mm.vertices()
    xs = [v for v in verts if v not in matched]
    alive = dict.fromkeys(xs, True)
    triangles: list[Triangle] = []

    for a, b in mm.edges:
        if len(triangles) == n:
            break
        p = next((e for e in (a, b) if sum(bool(bm[e, x]) for x in xs) <= 1), None)
        if p is None:
            raise StructuralContradiction(
                f"both ends of matched edge {a}-{b} have >= 2 neighbours of color {blue.letter} "
                "among unmatched vertices; matching is not maximum"
            )
        pair = _first_red_pair(rm, p, [x for x in xs if alive[x]])
        if pair is None:
            raise StructuralContradiction(f"vertex {p} has no red edge inside its red neighbourhood in X")
        x, y = pair
        alive[x] = alive[y] = False
        triangles.append((p, x, y))

    if len(triangles) < n:
        rest = greedy_packing(g, red, [x for x in xs if alive[x]])
        triangles.extend(rest[: n - len(triangles)])
    if len(triangles) < n:
        raise StructuralContradiction(
            f"only {len(triangles)} red triangles from |X|={len(xs)}, |M|={len(mm)}; need n={n}"
        )
    tm = make_matching(red, triangles)
    w = make_witness(g, tm)
    verdict = verify_ctm(g, w, n)
    if not verdict:
        raise StructuralContradiction(f"assembled red triangles fail verification: {verdict.reason}")
    return w, None


def _first_red_pair(rm: np.ndarray, p: int, pool: Sequence[int]) -> tuple[int, int] | None:
    nb = [x for x in pool if rm[p, x]]
    for i, x in enumerate(nb):
        row = rm[x]
        for y in nb[i + 1 :]:
            if row[y]:
                return x, y
    return None


def extract_triples_vs_matching(
    g: ColoredGraph, within: Iterable[int] | None, n: int, m: int
) -> TriplesOrMatching:
    """Red connected ``nK3`` or blue ``mK2`` inside ``within`` (|within| >= 3n + m - 1)."""
    verts = sorted(set(range(g.n_vertices) if within is None else within))
    if not 1 <= m <= n:
        raise PreconditionError(f"need 1 <= m <= n, got m={m}, n={n}")
    if len(verts) < 3 * n + m - 1:
        raise PreconditionError(f"|within|={len(verts)} < 3n+m-1={3 * n + m - 1}")
    _check_2colored(g, verts)
    w, mm = _triangles_or_matching(g, verts, n, m, 0, Color.RED)
    return TriplesOrMatching(red_ctm=w, blue_matching=mm)


def extract_triples_vs_matching_perturbed(
    g: ColoredGraph, n: int, m: int, t: int, within: Iterable[int] | None = None
) -> TriplesOrMatching:
    """As :func:`extract_triples_vs_matching` with fewer than ``t`` White edges per vertex.

    Needs |within| >= 3n + m - 1 + 2t; ``t = 0`` means no White edges at all.
    """
    verts = sorted(set(range(g.n_vertices) if within is None else within))
    if not 1 <= m <= n:
        raise PreconditionError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0 <= t <= n:
        raise PreconditionError(f"need 0 <= t <= n, got t={t}")
    if len(verts) < 3 * n + m - 1 + 2 * t:
        raise PreconditionError(f"|within|={len(verts)} < 3n+m-1+2t={3 * n + m - 1 + 2 * t}")
    wdeg = _max_white_degree(g, verts)
    if (t == 0 and wdeg > 0) or (t > 0 and wdeg >= t):
        raise PreconditionError(f"max white degree {wdeg} is not < t={t}")
    w, mm = _triangles_or_matching(g, verts, n, m, t, Color.RED)
    return TriplesOrMatching(red_ctm=w, blue_matching=mm)


# ---------------------------------------------------------------------------
# connected component of one color


def mono_connected_component(g: ColoredGraph) -> tuple[Color, tuple[int, ...]]:
    """Largest monochromatic component over Red and Blue (ties go to Blue).

    Requires every vertex to have at least 3|V|/4 non-White edges; the
    returned component then has more vertices than that minimum degree.
    """
    n = g.n_vertices
    min_deg = n - 1 - white_profile(g).max_white_degree
    if 4 * min_deg < 3 * n:
        raise PreconditionError(f"non-white minimum degree {min_deg} < 3|V|/4 = {3 * n / 4}")
    blue = components(g, Color.BLUE).components[0]
    red = components(g, Color.RED).components[0]
    color, comp = (Color.BLUE, blue) if len(blue) >= len(red) else (Color.RED, red)
    if len(comp) <= min_deg:
        raise StructuralContradiction(f"largest monochromatic component {len(comp)} <= minimum degree {min_deg}")
    return color, comp


# ---------------------------------------------------------------------------
# connected triangle matchings


def extract_ctm(g: ColoredGraph, n: int, stats: Counter | None = None) -> tuple[CtmWitness, ExtractionTrace]:
    """Monochromatic connected ``nK3`` in a 2-colored ``K_N`` with N >= 7n - 2.

    Only the first 7n - 2 vertices are used.
    """
    if n < 2:
        raise PreconditionError(f"n={n} < 2")
    if g.n_vertices < 7 * n - 2:
        raise PreconditionError(f"|V|={g.n_vertices} < 7n-2={7 * n - 2}")
    _check_2colored(g, list(range(g.n_vertices)))
    return _Extractor(g, n, 0, perturbed=False, stats=stats).run()


def extract_ctm_perturbed(
    g: ColoredGraph, n: int, t: int, stats: Counter | None = None
) -> tuple[CtmWitness, ExtractionTrace]:
    """Monochromatic connected ``nK3`` when fewer than ``t`` edges per vertex are White.

    Needs N >= 7n - 2 + 7t and 0 <= t <= 2n/3; only the first 7n - 2 + 7t
    vertices are used.
    """
    if n < 2:
        raise PreconditionError(f"n={n} < 2")
    if not 0 <= 3 * t <= 2 * n:
        raise PreconditionError(f"need 0 <= t <= 2n/3, got t={t}")
    need = 7 * n - 2 + 7 * t
    if g.n_vertices < need:
        raise PreconditionError(f"|V|={g.n_vertices} < 7n-2+7t={need}")
    wdeg = _max_white_degree(g, list(range(need)))
    if (t == 0 and wdeg > 0) or (t > 0 and wdeg >= t):
        raise PreconditionError(f"max white degree {wdeg} is not < t={t}")
    return _Extractor(g, n, t, perturbed=True, stats=stats).run()


class _Done(Exception):
    def __init__(self, triangles, color, regime, **params):
        self.triangles = triangles
        self.color = color
        self.regime = regime
        self.params = params


class _Extractor:
    """One extraction run; ``t = 0`` with ``perturbed=False`` is the 2-color case."""

    def __init__(self, g: ColoredGraph, n: int, t: int, perturbed: bool, stats: Counter | None):
        self.g = g
        self.n = n
        self.t = t
        self.perturbed = perturbed
        self.stats = stats
        size = 7 * n - 2 + 7 * t
        self.h = g if g.n_vertices == size else g.induced(range(size))
        self.V = list(range(size))

    # finders -------------------------------------------------------------

    def _find(self, within):
        if self.t == 0:
            return find_mono_triangle_matching(self.h, self.n, within=within, stats=self.stats)
        return find_mono_triangle_matching_perturbed(self.h, self.n, self.t, within=within, stats=self.stats)

    def _lemma(self, part, m, regime, **params):
        w, mm = _triangles_or_matching(self.h, part, self.n, m, self.t, self.D)
        if w is not None:
            raise _Done(list(w.tm.triangles), self.D, regime, via="lemma", **params)
        return mm

    # assembly helpers ----------------------------------------------------

    def _extend(self, edges, pool, used):
        """Close each C-colored edge into a triangle with the lowest admissible pool vertex."""
        cm = self.cm
        out = []
        for a, b in edges:
            x = next((x for x in pool if x not in used and cm[a, x] and cm[b, x]), None)
            if x is None:
                raise StructuralContradiction(f"no vertex left to close edge {a}-{b} into a triangle")
            used.add(x)
            out.append((a, b, x))
        return out

    def _transversal(self, pools, count, used):
        """``count`` C-colored triangles with one vertex from each pool.

        Vertices come from the smallest pool first; the last pick is from the
        largest, which needs the most slack when White edges block choices.
        """
        cm, dm = self.cm, self.dm
        p0, p1, p2 = sorted(pools, key=len)
        out = []
        for _ in range(count):
            tri = None
            for a in p0:
                if a in used:
                    continue
                b = next((b for b in p1 if b not in used and cm[a, b]), None)
                if b is None:
                    continue
                c = next((c for c in p2 if c not in used and cm[a, c] and cm[b, c]), None)
                if c is not None:
                    tri = (a, b, c)
                    break
            if tri is None:
                raise StructuralContradiction(
                    f"transversal ran out after {len(out)} of {count} triangles (pools {len(p0)},{len(p1)},{len(p2)})"
                )
            for u, v in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])):
                if dm[u, v]:
                    raise StructuralContradiction(f"edge {u}-{v} between distinct components has color D")
            used.update(tri)
            out.append(tri)
        return out

    # main ----------------------------------------------------------------

    def run(self) -> tuple[CtmWitness, ExtractionTrace]:
        h, n = self.h, self.n
        if self.perturbed:
            self.C, X = mono_connected_component(h)
        else:
            if len(components(h, Color.BLUE)) == 1:
                self.C = Color.BLUE
            elif len(components(h, Color.RED)) == 1:
                self.C = Color.RED
            else:
                raise StructuralContradiction("neither color class is connected")
            X = tuple(self.V)
        self.D = self.C.other()
        self.cm, self.dm = h.mask(self.C), h.mask(self.D)
        self.X = X
        try:
            self._dispatch()
        except _Done as done:
            return self._finish(done)
        raise AssertionError("unreachable: dispatch always ends in _Done")

    def _finish(self, done: _Done):
        tm = make_matching(done.color, done.triangles)
        w = make_witness(self.g, tm)
        verdict = verify_ctm(self.g, w, self.n)
        if not verdict:
            raise StructuralContradiction(
                f"{done.regime.value} produced an invalid witness: {verdict.reason} ({verdict.detail})"
            )
        trace = ExtractionTrace(self.C == Color.RED, done.regime, done.params)
        return w, trace

    def _dispatch(self):
        h, n, t = self.h, self.n, self.t
        T = self._find(self.X)
        if T.color == self.C:
            raise _Done(T.triangles, self.C, Regime.BLUE_NK3)
        parts = components(h, self.D).components
        if len(parts) == 1:
            raise _Done(T.triangles, self.D, Regime.RED_CONNECTED)
        x1 = parts[0]
        s, a1 = len(parts), len(x1)
        a2 = len(parts[1])
        ceiling_hit = a1 > 6 * n - 2 + 5 * t if self.perturbed else a1 >= 5 * n
        if ceiling_hit:
            pool = sorted(set(x1) & set(self.X))
            T = self._find(pool)
            raise _Done(T.triangles, T.color, Regime.X1_AT_LEAST_5N, s=s, X1=a1, X2=a2)
        if len(self.X) != len(self.V):
            raise StructuralContradiction(
                f"|X1|={a1} below the ceiling but the {self.C.letter}-component misses {len(self.V) - len(self.X)} vertices"
            )

        if a2 >= 3 * n + 2 * t:
            self._case1(parts)
        elif a1 >= 3 * n + 2 * t and a2 >= 2 * n + 2 * t:
            self._case2(parts)
        elif a1 >= 3 * n + 2 * t and a2 >= n + 2 * t:
            self._case3(parts)
        else:
            self._case4(parts)

    def _case1(self, parts):
        n, t = self.n, self.t
        x1, x2 = parts[0], parts[1]
        k1, k2 = len(x1) - 3 * n - 2 * t, len(x2) - 3 * n - 2 * t
        info = dict(s=len(parts), X1=len(x1), X2=len(x2), k1=k1, k2=k2)
        m1 = self._lemma(x1, min(k1 + 1, n), Regime.CASE1, **info)
        m2 = self._lemma(x2, min(k2 + 1, n), Regime.CASE1, **info)
        used = m1.vertices() | m2.vertices()
        tris = self._extend(m1.edges, x2, used)
        tris += self._extend(m2.edges, x1, used)
        l = max(0, n - len(tris))
        if l:
            rest = set(x1) | set(x2)
            a = [v for v in self.V if v not in rest]
            tris += self._transversal([a, list(x1), list(x2)], l, used)
        raise _Done(tris, self.C, Regime.CASE1, l=l, via="matchings", **info)

    def _case2(self, parts):
        n, t = self.n, self.t
        x1, x2 = parts[0], parts[1]
        k1, k2 = len(x1) - 3 * n - 2 * t, 3 * n + 2 * t - len(x2)
        info = dict(s=len(parts), X1=len(x1), X2=len(x2), k1=k1, k2=k2)
        m1 = self._lemma(x1, min(k1 + 1, n), Regime.CASE2, **info)
        used = set(m1.vertices())
        tris = self._extend(m1.edges, x2, used)
        q = max(0, n - k1 + k2 - 2)
        if q:
            rest = set(x1) | set(x2)
            a = [v for v in self.V if v not in rest]
            tris += self._transversal([a, list(x1), list(x2)], q, used)
        raise _Done(tris, self.C, Regime.CASE2, q=q, via="matchings", **info)

    def _case3(self, parts):
        n, t = self.n, self.t
        x1, x2 = parts[0], parts[1]
        k1, k2 = len(x1) - 3 * n - 2 * t, len(x2) - n - 2 * t
        info = dict(s=len(parts), X1=len(x1), X2=len(x2), k1=k1, k2=k2)
        if k1 >= n:
            m1 = self._lemma(x1, n, Regime.CASE3, **info)
            used = set(m1.vertices())
            tris = self._extend(m1.edges, x2, used)
            raise _Done(tris, self.C, Regime.CASE3, via="matching", **info)
        rest = set(x1) | set(x2)
        a = [v for v in self.V if v not in rest]
        tris = self._transversal([list(x1), list(x2), a], n, set())
        raise _Done(tris, self.C, Regime.CASE3, via="tripartite", **info)

    def _case4(self, parts):
        n, t = self.n, self.t
        x1 = parts[0]
        a1 = len(x1)
        info = dict(s=len(parts), X1=a1, X2=len(parts[1]))
        if a1 > 4 * n - 2 + 2 * t:
            m1 = self._lemma(x1, n, Regime.CASE4A, **info)
            used = set(m1.vertices())
            outside = [v for v in self.V if v not in set(x1)]
            tris = self._extend(m1.edges, outside, used)
            raise _Done(tris, self.C, Regime.CASE4A, via="matching", **info)

        if a1 >= n + 2 * t:
            s1 = list(x1[: n + 2 * t])
            s2, touched = _take_sequential(parts, 1, n + 2 * t)
            blocked = set(x1).union(*(parts[i] for i in touched))
            s3 = [v for v in self.V if v not in blocked]
            if len(s3) < n + t:
                raise StructuralContradiction(f"|V - (X1 u A)|={len(s3)} < n+t={n + t}")
            regime = Regime.CASE4A
        else:
            s1, touched1 = _take_sequential(parts, 0, n + t)
            s2, touched2 = _take_sequential(parts, touched1[-1] + 1, n + t)
            blocked = set().union(*(parts[i] for i in touched1 + touched2))
            s3 = [v for v in self.V if v not in blocked]
            if len(s3) < n + 2 * t:
                raise StructuralContradiction(f"|V - B|={len(s3)} < n+2t={n + 2 * t}")
            regime = Regime.CASE4B
        tris = self._transversal([s1, s2, s3], n, set())
        raise _Done(tris, self.C, regime, via="tripartite", S1=s1, S2=s2, S3=s3, **info)


def _take_sequential(parts, start: int, size: int) -> tuple[list[int], list[int]]:
    """First ``size`` vertices of parts[start], parts[start+1], ... in order.

    Returns the vertices and the indices of the parts touched.
    """
    out: list[int] = []
    touched: list[int] = []
    i = start
    while len(out) < size:
        if i >= len(parts):
            raise StructuralContradiction(f"ran out of components collecting {size} vertices from index {start}")
        touched.append(i)
        out.extend(parts[i][: size - len(out)])
        i += 1
    return out, touched
