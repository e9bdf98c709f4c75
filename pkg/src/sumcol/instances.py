"""Deterministic constructions for the classic coloring benchmark families.

Three families are pure constructions and can be synthesized bit-for-bit
compatible with the distributed instances (isomorphic; every quantity the
bounds use is isomorphism invariant):

  myciel{k}            iterated Mycielskian of K2 (k-1 rounds, 2 levels)
  {k}-Insertions_{l}   iterated generalized Mycielskian of K2 with k+2
                       levels per round (l-1 rounds)
  queen{r}_{c}         one vertex per square of an r x c board, edges
                       between squares sharing a row, column, or diagonal

The pseudo-random families (DSJC*, DSJR*, flat*) are fixed published
instances and cannot be regenerated; supply their .col files on disk.
"""

from __future__ import annotations

import re

from .graph import Graph


def mycielskian(g: Graph, levels: int = 2, name: str = "") -> Graph:
    """Generalized Mycielskian: `levels` stacked copies plus an apex.

    Level 0 keeps the original edges; higher levels are internally empty;
    (u, i) connects to (v, i+1) whenever uv is an edge; the apex connects
    to all of the top level. levels=2 is the classic construction.
    """
    if levels < 2:
        raise ValueError("need at least 2 levels")
    n = g.n
    edges = list(g.edges())
    out = []
    out.extend(edges)
    for gap in range(levels - 1):
        lo, hi = gap * n, (gap + 1) * n
        for u, v in edges:
            out.append((lo + u, hi + v))
            out.append((lo + v, hi + u))
    apex = levels * n
    top = (levels - 1) * n
    for v in range(n):
        out.append((top + v, apex))
    return Graph.from_edges(levels * n + 1, out, name=name)


def myciel_graph(k: int) -> Graph:
    """myciel{k}: k-1 Mycielskian rounds from K2 (k=3 is the 11-vertex graph)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    g = Graph.from_edges(2, [(0, 1)])
    for _ in range(k - 1):
        g = mycielskian(g, 2)
    return Graph(g.n, g.adj, name=f"myciel{k}")


def insertions_graph(k: int, l: int) -> Graph:
    """{k}-Insertions_{l}: l-1 generalized Mycielskian rounds (k+2 levels) from K2."""
    if k < 1 or l < 2:
        raise ValueError("need k >= 1 and l >= 2")
    g = Graph.from_edges(2, [(0, 1)])
    for _ in range(l - 1):
        g = mycielskian(g, k + 2)
    return Graph(g.n, g.adj, name=f"{k}-Insertions_{l}")


def queen_graph(rows: int, cols: int) -> Graph:
    """queen{rows}_{cols}: mutual-attack graph of queens on a board."""
    if rows < 1 or cols < 1:
        raise ValueError("board dimensions must be >= 1")
    n = rows * cols
    edges = []
    for r1 in range(rows):
        for c1 in range(cols):
            u = r1 * cols + c1
            for r2 in range(r1, rows):
                start = c1 + 1 if r2 == r1 else 0
                for c2 in range(start, cols):
                    if r2 == r1 or c2 == c1 or abs(r2 - r1) == abs(c2 - c1):
                        edges.append((u, r2 * cols + c2))
    return Graph.from_edges(n, edges, name=f"queen{rows}_{cols}")


_MYCIEL = re.compile(r"^myciel(\d+)$")
_QUEEN = re.compile(r"^queen(\d+)_(\d+)$")
_INSERTIONS = re.compile(r"^(\d+)-Insertions_(\d+)$")


def can_generate(name: str) -> bool:
    return bool(_MYCIEL.match(name) or _QUEEN.match(name) or _INSERTIONS.match(name))


def generate(name: str) -> Graph:
    """Build a benchmark instance from its conventional name.

    Raises ValueError for names outside the constructible families.
    """
    m = _MYCIEL.match(name)
    if m:
        return myciel_graph(int(m.group(1)))
    m = _QUEEN.match(name)
    if m:
        return queen_graph(int(m.group(1)), int(m.group(2)))
    m = _INSERTIONS.match(name)
    if m:
        return insertions_graph(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"no generator for instance {name!r}")
