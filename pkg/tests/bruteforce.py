"""Independent reference implementations used only by the tests.

Deliberately written with different algorithms than the package (subset
sweeps and direct backtracking instead of branch and bound) so agreement
is meaningful evidence of correctness.
"""

from __future__ import annotations

import itertools
import random

from sumcol.graph import Graph


def mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def brute_alpha_and_sets(g: Graph) -> tuple[int, list[tuple[int, ...]]]:
    """Stability number and all maximum independent sets by a 2^n sweep.

    A subset is independent iff dropping its lowest vertex leaves an
    independent subset not adjacent to that vertex, so one pass over all
    masks in increasing order settles every subset.
    """
    n, adj = g.n, g.adj
    if n > 22:
        raise ValueError("brute force capped at n <= 22")
    indep = bytearray(1 << n)
    indep[0] = 1
    best, sets = 0, [0]
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if indep[rest] and not adj[low.bit_length() - 1] & rest:
            indep[mask] = 1
            k = mask.bit_count()
            if k > best:
                best, sets = k, [mask]
            elif k == best:
                sets.append(mask)
    return best, sorted(mask_to_tuple(m) for m in sets)


def count_sets_of_size(g: Graph, size: int) -> int:
    """Number of independent sets of exactly `size` vertices (2^n sweep)."""
    n, adj = g.n, g.adj
    if n > 22:
        raise ValueError("brute force capped at n <= 22")
    indep = bytearray(1 << n)
    indep[0] = 1
    count = 1 if size == 0 else 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if indep[rest] and not adj[low.bit_length() - 1] & rest:
            indep[mask] = 1
            if mask.bit_count() == size:
                count += 1
    return count


def count_independent_combinations(g: Graph, size: int) -> int:
    """Number of independent sets of exactly `size` vertices.

    Scans raw vertex combinations with an early exit on the first edge,
    which stays practical past the 2^n sweep's vertex cap as long as
    C(n, size) is modest.
    """
    count = 0
    for combo in itertools.combinations(range(g.n), size):
        taken = 0
        for v in combo:
            if g.adj[v] & taken:
                break
            taken |= 1 << v
        else:
            count += 1
    return count


def random_graph(n: int, p: float, rng: random.Random, name: str = "") -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges, name=name)


def queens_row_by_row_count(rows: int, cols: int) -> int:
    """Placements of `rows` mutually non-attacking queens, one per row.

    Direct board backtracking, no graph involved; equals the number of
    maximum independent sets of the queen graph whenever alpha = rows <= cols.
    """
    count = 0

    def rec(r: int, used_cols: int, d1: int, d2: int) -> None:
        nonlocal count
        if r == rows:
            count += 1
            return
        for c in range(cols):
            if used_cols >> c & 1 or d1 >> (r + c) & 1 or d2 >> (r - c + cols) & 1:
                continue
            rec(r + 1, used_cols | 1 << c, d1 | 1 << (r + c), d2 | 1 << (r - c + cols))

    rec(0, 0, 0, 0)
    return count
