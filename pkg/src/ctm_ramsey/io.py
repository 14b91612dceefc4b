"""Text formats for colorings and witnesses.

Graph file::

    ctm-graph v1 <N> <num_colors>
    u v c            # one line per pair u < v, row-major order

``c`` is R/B (2 colors), R/B/W (3 colors) or 1..4 (4 colors).

Witness file::

    ctm-witness v1 <color> <count>
    a b c            # one triangle per line, ascending

``color`` is R/B, or 1..4 for witnesses in 4-colored graphs.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .graph import MAX_VERTICES, Color, ColoredGraph
from .packing import CtmWitness, TriangleMatching


class ParseError(ValueError):
    """Malformed graph or witness file."""


def _color_token(c: int, num_colors: int) -> str:
    return str(c + 1) if num_colors == 4 else Color(c).letter


def _parse_color(tok: str, num_colors: int) -> int:
    if num_colors == 4:
        if tok not in ("1", "2", "3", "4"):
            raise ParseError(f"bad color {tok!r} for a 4-color file")
        return int(tok) - 1
    allowed = "RBW"[:num_colors]
    if len(tok) != 1 or tok not in allowed:
        raise ParseError(f"bad color {tok!r}; expected one of {','.join(allowed)}")
    return "RBW".index(tok)


def render_graph(g: ColoredGraph) -> str:
    n = g.n_vertices
    lines = [f"ctm-graph v1 {n} {g.num_colors}"]
    table = g.table
    for u in range(n):
        row = table[u]
        lines.extend(f"{u} {v} {_color_token(int(row[v]), g.num_colors)}" for v in range(u + 1, n))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> ColoredGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ctm-graph" or head[1] != "v1":
        raise ParseError(f"bad header {lines[0]!r}")
    try:
        n, k = int(head[2]), int(head[3])
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    if not 1 <= n <= MAX_VERTICES or k not in (2, 3, 4):
        raise ParseError(f"unsupported size/colors in header {lines[0]!r}")
    expected = n * (n - 1) // 2
    if len(lines) - 1 != expected:
        raise ParseError(f"expected {expected} pair lines, found {len(lines) - 1}")
    table = np.full((n, n), 255, dtype=np.uint8)
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'u v c'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad vertex ids") from None
        if not 0 <= u < v < n:
            raise ParseError(f"line {lineno}: need 0 <= u < v < {n}")
        if table[u, v] != 255:
            raise ParseError(f"line {lineno}: pair {u} {v} repeated")
        table[u, v] = table[v, u] = _parse_color(parts[2], k)
    return ColoredGraph(table, num_colors=k)


def render_witness(w: CtmWitness, num_colors: int = 2) -> str:
    tris = w.tm.triangles
    lines = [f"ctm-witness v1 {_color_token(w.tm.color, num_colors)} {len(tris)}"]
    lines.extend(" ".join(str(v) for v in sorted(tri)) for tri in tris)
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> CtmWitness:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty witness file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ctm-witness" or head[1] != "v1":
        raise ParseError(f"bad header {lines[0]!r}")
    tok = head[2]
    if tok in ("R", "B"):
        color = "RB".index(tok)
    elif tok in ("1", "2", "3", "4"):
        color = int(tok) - 1
    else:
        raise ParseError(f"bad witness color {tok!r}")
    try:
        count = int(head[3])
    except ValueError:
        raise ParseError(f"bad triangle count {head[3]!r}") from None
    if len(lines) - 1 != count:
        raise ParseError(f"header announces {count} triangles, found {len(lines) - 1}")
    tris = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            tri = tuple(int(x) for x in ln.split())
        except ValueError:
            raise ParseError(f"line {lineno}: bad vertex ids") from None
        if len(tri) != 3:
            raise ParseError(f"line {lineno}: expected three vertices")
        tris.append(tri)
    return CtmWitness(TriangleMatching(color, tuple(tris)), 0)


def read_graph(path: str | Path) -> ColoredGraph:
    return parse_graph(Path(path).read_text())


def read_witness(path: str | Path) -> CtmWitness:
    return parse_witness(Path(path).read_text())
