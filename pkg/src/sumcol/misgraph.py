"""Intersection structure of the maximum independent sets.

Once the maximum independent sets of a graph are enumerated, they become
vertices of a new graph where two sets are adjacent iff they share a
vertex. The stability number of that intersection graph says how many
color classes of maximum size can coexist, which caps the m parameter of
the bound formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .stable import AlphaResult, Budget, max_independent_set


@dataclass(frozen=True)
class MisGraph:
    """Intersection graph over independent sets; members keep 0-based ids."""

    members: tuple[tuple[int, ...], ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.members)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.adj, name="mis-graph")


def build_mis_graph(sets) -> MisGraph:
    """Wire up the intersection graph of the given vertex sets.

    Raises on an empty collection, an empty member set, or duplicate sets.
    """
    members = []
    masks = []
    seen = set()
    for s in sets:
        member = tuple(sorted(s))
        if not member:
            raise ValueError("member sets must be nonempty")
        if member in seen:
            raise ValueError(f"duplicate set {member}")
        seen.add(member)
        mask = 0
        for v in member:
            mask |= 1 << v
        members.append(member)
        masks.append(mask)
    if not members:
        raise ValueError("need at least one set")
    count = len(members)
    adj = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return MisGraph(tuple(members), tuple(adj))


def alpha_tilde(mg: MisGraph, budget: Budget | None = None) -> AlphaResult:
    """Stability number of the intersection graph (exact, or upper bound on timeout)."""
    return max_independent_set(mg.to_graph(), budget)


def compute_m(
    n: int, alpha_bar: int, num_is: int | None = None, alpha_tilde_value: int | None = None
) -> int:
    """Cap on the number of parts equal to alpha_bar.

    Always includes floor(n / alpha_bar); the number of maximum independent
    sets and the intersection-graph stability number tighten it when known
    (pass None for quantities that were skipped or truncated).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= alpha_bar <= n:
        raise ValueError("alpha_bar must be in 1..n")
    candidates = [n // alpha_bar]
    for value in (num_is, alpha_tilde_value):
        if value is not None:
            if value < 1:
                raise ValueError("known quantities must be >= 1")
            candidates.append(value)
    return min(candidates)
