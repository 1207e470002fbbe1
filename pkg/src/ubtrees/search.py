"""Exhaustive maximizer searches: over subdivided stars and over all trees.

Subdivided stars of order n correspond to the integer partitions of n - 1;
the search streams them in reverse-lexicographic order and keeps the exact
maximum together with the complete tie set.  For small orders the same
maximum is taken over one representative per isomorphism class of free
trees, which lets us confirm that every maximizing tree is a spider.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .stars import StarSignature, ub_total_fast
from .trees import LabeledTree, ub_oracle

FREE_TREE_CAP = 16
_WITNESS_CAP = 1024


def partition_count(m: int) -> int:
    """p(m) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * m
    for t in range(1, m + 1):
        s = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > t and g2 > t:
                break
            sign = 1 if k % 2 else -1
            if g1 <= t:
                s += sign * p[t - g1]
            if g2 <= t:
                s += sign * p[t - g2]
            k += 1
        p[t] = s
    return p[m]


def partitions_desc(m: int) -> Iterator[tuple[int, ...]]:
    """All partitions of m as nonincreasing tuples, in reverse-lex order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        yield ()
        return
    a = [m]
    while True:
        yield tuple(a)
        j = len(a) - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            return
        rem = a[j] + (len(a) - 1 - j)
        v = a[j] - 1
        del a[j:]
        while rem > v:
            a.append(v)
            rem -= v
        a.append(rem)


def enumerate_signatures(n: int) -> Iterator[StarSignature]:
    """Every signature of order n (partitions of n - 1), reverse-lex, streamed."""
    if n < 2:
        raise ValueError("need n >= 2")
    for parts in partitions_desc(n - 1):
        yield StarSignature(parts)


@dataclass(frozen=True)
class MaximizerRecord:
    """Exact maximum uB over subdivided stars of one order, with all witnesses."""

    order: int
    max_ub: int
    witnesses: tuple[StarSignature, ...]

    def __post_init__(self):
        if not self.witnesses:
            raise ValueError("witness set must be nonempty")
        for w in self.witnesses:
            if w.order != self.order:
                raise ValueError(f"witness {w} has order {w.order}, expected {self.order}")


def max_ub_subdivided_stars(n: int) -> MaximizerRecord:
    """Exact maximum of uB over all subdivided stars of order n, with ties."""
    if n < 4:
        raise ValueError("need n >= 4")
    m = n - 1
    B, Q = _kernels.int_tables(n)
    wit = np.zeros((_WITNESS_CAP, m), dtype=np.int64)
    best, count = _kernels.scan_max(m, B, Q, wit)
    if count > _WITNESS_CAP:
        raise RuntimeError(f"tie set of size {count} overflowed the witness buffer")
    witnesses = []
    for r in range(count):
        parts = [int(v) for v in wit[r] if v > 0]
        witnesses.append(StarSignature(parts))
    witnesses.sort(key=lambda s: s.parts, reverse=True)
    return MaximizerRecord(n, int(best), tuple(witnesses))


def _max_ub_reference(n: int) -> MaximizerRecord:
    """Plain-Python scan; slow, kept as an independent check of the kernel."""
    best = -1
    witnesses: list[StarSignature] = []
    for sig in enumerate_signatures(n):
        total = ub_total_fast(sig)
        if total > best:
            best, witnesses = total, [sig]
        elif total == best:
            witnesses.append(sig)
    witnesses.sort(key=lambda s: s.parts, reverse=True)
    return MaximizerRecord(n, best, tuple(witnesses))


def search_orders(start: int, stop: int, workers: int | None = None) -> list[MaximizerRecord]:
    """MaximizerRecord for every order in [start, stop]; deterministic merge.

    Orders are independent, so they can fan out across processes; results are
    reassembled by order regardless of completion sequence.
    """
    if not 4 <= start <= stop:
        raise ValueError("need 4 <= start <= stop")
    orders = range(start, stop + 1)
    if workers is None or workers <= 1:
        return [max_ub_subdivided_stars(n) for n in orders]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(max_ub_subdivided_stars, orders))


def max_gap_ratio(n: int) -> float:
    """Worst |uB(S) - n^3 f(x)| / ((4+k) n^2) over all signatures of order n."""
    if n < 2:
        raise ValueError("need n >= 2")
    B, Q = _kernels.int_tables(n)
    Bf, Qf, Bf2, Qf2 = _kernels.float_tables(n)
    return float(_kernels.scan_gap_ratio(n - 1, B, Q, Bf, Qf, Bf2, Qf2))


# ---------------------------------------------------------------------------
# free trees up to isomorphism

def _centers(adj: list[list[int]], n: int) -> list[int]:
    if n == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        removed += len(nxt)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: list[list[int]], root: int) -> str:
    def rec(v: int, parent: int) -> str:
        subs = sorted(rec(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return rec(root, -1)


def tree_certificate(t: LabeledTree) -> str:
    """Canonical-form certificate: equal iff the trees are isomorphic."""
    adj = t.adjacency
    return min(_rooted_code(adj, c) for c in _centers(adj, t.order))


def enumerate_free_trees(n: int, cap: int = FREE_TREE_CAP) -> Iterator[LabeledTree]:
    """One representative per isomorphism class of trees on n vertices.

    Grows trees a leaf at a time, deduplicating by canonical certificate;
    every n-vertex tree arises from an (n-1)-vertex tree by leaf removal, so
    the sweep is exhaustive.  Yields in certificate order.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    level: dict[str, tuple[tuple[int, int], ...]] = {
        tree_certificate(LabeledTree(1, ())): ()
    }
    for m in range(2, n + 1):
        nxt: dict[str, tuple[tuple[int, int], ...]] = {}
        for edges in level.values():
            for v in range(m - 1):
                cand = LabeledTree(m, edges + ((v, m - 1),))
                cert = tree_certificate(cand)
                if cert not in nxt:
                    nxt[cert] = cand.edges
        level = nxt
    for cert in sorted(level):
        yield LabeledTree(n, level[cert])


def spider_signature(t: LabeledTree) -> StarSignature | None:
    """The signature of t if it is a subdivided star, else None.

    A tree is a spider iff at most one vertex has degree >= 3.  A path is the
    degenerate spider S(n-1) rooted at an endpoint; the one-vertex tree is
    not a subdivided star.
    """
    n = t.order
    if n == 1:
        return None
    adj = t.adjacency
    hubs = [v for v in range(n) if len(adj[v]) >= 3]
    if len(hubs) > 1:
        return None
    if not hubs:
        return StarSignature((n - 1,))
    center = hubs[0]
    # branch orders = component sizes after deleting the center
    parts = []
    seen = {center}
    for start in adj[center]:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        for x in comp:
            for y in adj[x]:
                if y != center and y not in seen:
                    seen.add(y)
                    comp.append(y)
        parts.append(len(comp))
    return StarSignature(parts)


def max_ub_all_trees(n: int) -> tuple[int, list[LabeledTree]]:
    """Exact maximum of uB over all isomorphism classes of trees on n vertices."""
    if not 4 <= n <= FREE_TREE_CAP:
        raise ValueError(f"need 4 <= n <= {FREE_TREE_CAP}")
    best = -1
    witnesses: list[LabeledTree] = []
    for t in enumerate_free_trees(n):
        val = ub_oracle(t)
        if val > best:
            best, witnesses = val, [t]
        elif val == best:
            witnesses.append(t)
    return best, witnesses


def verify_dominance(n: int) -> bool:
    """True iff every uB-maximizing tree of order n is a subdivided star whose
    value matches the subdivided-star maximum."""
    if not 4 <= n <= 15:
        raise ValueError("dominance is only checked for 4 <= n <= 15")
    best, witnesses = max_ub_all_trees(n)
    record = max_ub_subdivided_stars(n)
    if best != record.max_ub:
        return False
    return all(spider_signature(t) is not None for t in witnesses)
