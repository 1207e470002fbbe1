"""Labeled trees, BFS distances, and the definitional pair-count invariants.

Everything here works from the definitions: ``closer_count`` literally counts
vertices strictly closer to one endpoint than the other (ties count for
neither side), the Mostar index sums the resulting imbalance over edges, and
``ub_oracle`` sums it over all unordered vertex pairs.  These are the
brute-force ground truth that the closed forms elsewhere are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_ORDER = 100_000


class TreeError(ValueError):
    """Raised for edge lists that do not describe a valid labeled tree."""


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices 0..order-1, stored as a validated edge list."""

    order: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, order, edges):
        object.__setattr__(self, "order", int(order))
        object.__setattr__(
            self, "edges", tuple(tuple(sorted((int(u), int(v)))) for u, v in edges)
        )
        self._validate()

    def _validate(self):
        n = self.order
        if n < 1:
            raise TreeError(f"order must be positive, got {n}")
        if n > MAX_ORDER:
            raise TreeError(f"order {n} exceeds supported maximum {MAX_ORDER}")
        if len(self.edges) != n - 1:
            raise TreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(self.edges)}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u},{v}) out of range for order {n}")
            if (u, v) in seen:
                raise TreeError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        # n-1 edges + connected == tree; check connectivity by BFS from 0
        adj = self.adjacency
        visited = bytearray(n)
        visited[0] = 1
        queue = [0]
        for x in queue:
            for y in adj[x]:
                if not visited[y]:
                    visited[y] = 1
                    queue.append(y)
        if len(queue) != n:
            raise TreeError("edge list is disconnected (or cyclic)")

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def relabel(self, perm) -> "LabeledTree":
        """Apply a vertex permutation (perm[v] is the new label of v)."""
        return LabeledTree(self.order, [(perm[u], perm[v]) for u, v in self.edges])


def path_tree(n: int) -> LabeledTree:
    return LabeledTree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> LabeledTree:
    return LabeledTree(n, [(0, i) for i in range(1, n)])


def all_pairs_distances(t: LabeledTree) -> np.ndarray:
    """Hop-count distance matrix via BFS from every vertex.

    Returns an (n, n) int64 array with dist[u][u] = 0, symmetric entries, and
    every entry at most n - 1.
    """
    n = t.order
    adj = t.adjacency
    dist = np.empty((n, n), dtype=np.int64)
    row = [0] * n
    for s in range(n):
        for v in range(n):
            row[v] = -1
        row[s] = 0
        queue = [s]
        for x in queue:
            dx = row[x]
            for y in adj[x]:
                if row[y] < 0:
                    row[y] = dx + 1
                    queue.append(y)
        dist[s] = row
    return dist


def closer_count(t: LabeledTree, dist: np.ndarray, u: int, v: int) -> int:
    """Number of vertices strictly closer to u than to v (ties count for neither)."""
    if u == v:
        raise ValueError("closer_count requires two distinct vertices")
    return int(np.count_nonzero(dist[u] < dist[v]))


def mostar_index(t: LabeledTree) -> int:
    """Sum of |n(u,v) - n(v,u)| over the edges of the tree."""
    dist = all_pairs_distances(t)
    total = 0
    for u, v in t.edges:
        total += abs(closer_count(t, dist, u, v) - closer_count(t, dist, v, u))
    return total


def ub_oracle(t: LabeledTree) -> int:
    """Distance-unbalancedness by direct summation over all C(n,2) pairs."""
    dist = all_pairs_distances(t)
    # closer[u, v] = #{w : dist[u, w] < dist[v, w]}, vectorized over all pairs
    closer = (dist[:, None, :] < dist[None, :, :]).sum(axis=2)
    imbalance = np.abs(closer - closer.T)
    iu = np.triu_indices(t.order, k=1)
    return int(imbalance[iu].sum())


def ub_upper_bound(n: int) -> int:
    """n(n-1)(n-2)/2, the trivial bound: C(n,2) pairs, each contributing <= n-2."""
    return n * (n - 1) * (n - 2) // 2


def parse_tree_text(text: str) -> LabeledTree:
    """Parse the tree file format: first line n, then n-1 lines "u v"."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise TreeError("empty tree file")
    try:
        n = int(lines[0])
    except ValueError:
        raise TreeError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if len(lines) != n:
        raise TreeError(f"expected {n - 1} edge lines for order {n}, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise TreeError(f"malformed edge line {ln!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise TreeError(f"malformed edge line {ln!r}") from None
    return LabeledTree(n, edges)


def read_tree(path) -> LabeledTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree_text(fh.read())


def format_tree(t: LabeledTree) -> str:
    lines = [str(t.order)]
    lines += [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"
