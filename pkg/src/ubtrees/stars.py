"""Subdivided stars S(n1,...,nk) and their exact distance-unbalancedness.

A subdivided star (spider) is a center vertex whose removal leaves k disjoint
paths ("branches") of orders n1 >= ... >= nk.  Its distance-unbalancedness
splits into four exact integer components by pair type:

  ub1 - pairs {center, branch vertex}
  ub2 - cross-branch pairs at equal distance from the center
  ub3 - same-branch pairs
  ub4 - cross-branch pairs at different distances from the center

``ub_closed_form`` evaluates the four sums term by term, with every absolute
value taken literally.  ``ub_total_fast`` collapses each innermost run of
consecutive integers and is the evaluator used for large orders; the two are
property-tested against each other and against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import LabeledTree


@dataclass(frozen=True)
class StarSignature:
    """Sorted tuple (n1 >= ... >= nk >= 1) identifying S(n1,...,nk)."""

    parts: tuple[int, ...]

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise ValueError("signature needs at least one branch")
        if parts[-1] < 1:
            raise ValueError(f"branch orders must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return 1 + sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)


def parse_signature(text: str) -> StarSignature:
    try:
        parts = [int(f) for f in text.split(",") if f.strip() != ""]
    except ValueError:
        raise ValueError(f"malformed signature {text!r}") from None
    return StarSignature(parts)


@dataclass(frozen=True)
class UbBreakdown:
    """The four components of uB(S) plus their total, all exact integers."""

    ub1: int
    ub2: int
    ub3: int
    ub4: int
    total: int

    def __post_init__(self):
        if min(self.ub1, self.ub2, self.ub3, self.ub4) < 0:
            raise ValueError("components must be nonnegative")
        if self.total != self.ub1 + self.ub2 + self.ub3 + self.ub4:
            raise ValueError("total must equal the sum of the components")


def build_tree(s: StarSignature) -> LabeledTree:
    """The spider: vertex 0 is the center, each branch a path hanging off it."""
    edges = []
    nxt = 1
    for p in s.parts:
        prev = 0
        for _ in range(p):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return LabeledTree(nxt, edges)


def ub_closed_form(s: StarSignature) -> UbBreakdown:
    """The four component sums, evaluated exactly as written."""
    parts = s.parts
    n = s.order
    k = len(parts)

    ub1 = 0
    for ni in parts:
        for d in range(1, ni + 1):
            ub1 += abs(n - 2 * ni - 1 + d)

    ub2 = 0
    for i in range(k - 1):
        for j in range(i + 1, k):
            ub2 += (parts[i] - parts[j]) * parts[j]

    ub3 = 0
    for ni in parts:
        for d in range(1, ni):
            for dp in range(1, ni - d + 1):
                ub3 += abs(n - 2 * ni - 1 + 2 * d + dp)

    ub4 = 0
    for i in range(k - 1):
        ni = parts[i]
        for j in range(i + 1, k):
            nj = parts[j]
            for dj in range(1, min(nj, ni - 1) + 1):
                for di in range(dj + 1, ni + 1):
                    ub4 += abs(n - 2 * ni - 1 + di - dj)
            for di in range(1, nj):
                for dj in range(di + 1, nj + 1):
                    ub4 += abs(n - 2 * nj - 1 + dj - di)

    return UbBreakdown(ub1, ub2, ub3, ub4, ub1 + ub2 + ub3 + ub4)


def _tri(a: int, b: int) -> int:
    return (a + b) * (b - a + 1) // 2


def abs_range_sum(a: int, b: int) -> int:
    """Sum of |t| for integers t in [a, b] (0 if the range is empty)."""
    if a > b:
        return 0
    if a >= 0:
        return _tri(a, b)
    if b <= 0:
        return -_tri(a, b)
    return _tri(1, b) + _tri(1, -a)


def ub1_branch(n: int, v: int) -> int:
    c = n - 2 * v - 1
    return abs_range_sum(c + 1, c + v)


def ub3_branch(n: int, v: int) -> int:
    c = n - 2 * v - 1
    return sum(abs_range_sum(c + 2 * d + 1, c + 2 * d + v - d) for d in range(1, v))


def ub4_pair(n: int, u: int, v: int) -> int:
    """Cross-branch unequal-distance contribution for branch orders u >= v."""
    cu = n - 2 * u - 1
    cv = n - 2 * v - 1
    total = 0
    for dj in range(1, min(v, u - 1) + 1):
        total += abs_range_sum(cu + 1, cu + u - dj)
    for di in range(1, v):
        total += abs_range_sum(cv + 1, cv + v - di)
    return total


def ub_total_fast(s: StarSignature) -> int:
    """Exact uB(S) with each innermost run summed in closed form.

    O(n*k) instead of the O(n^2)-ish literal sums; identical values by the
    run-sum identity, which the tests check against ``ub_closed_form``.
    """
    parts = s.parts
    n = s.order
    k = len(parts)
    total = 0
    for ni in parts:
        total += ub1_branch(n, ni) + ub3_branch(n, ni)
    for i in range(k - 1):
        ni = parts[i]
        for j in range(i + 1, k):
            nj = parts[j]
            total += (ni - nj) * nj + ub4_pair(n, ni, nj)
    return total


def signature_fractions(s: StarSignature):
    """Branch fractions x_i = n_i / n, the continuous stand-in for the signature."""
    from .relaxation import BranchFractions

    n = s.order
    return BranchFractions([p / n for p in s.parts])
