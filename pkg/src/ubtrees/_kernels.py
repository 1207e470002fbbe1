"""Numba kernels for sweeping every branch signature of a fixed order.

The per-order tables reduce a signature's unbalancedness to lookups:
B[v] holds the center-pair plus same-branch contribution of a branch of
order v, Q[u][v] the full contribution of a branch pair {u, v}.  A
signature's value is then sum(B over parts) + sum(Q over part pairs),
evaluated per run of equal parts.  The kernels stream the partitions of
n - 1 in reverse-lexicographic order and never materialize them.
"""

from __future__ import annotations

import numba
import numpy as np

from .stars import ub1_branch, ub3_branch, ub4_pair


def int_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(B, Q) exact int64 contribution tables for order n."""
    m = n - 1
    B = np.zeros(m + 1, dtype=np.int64)
    Q = np.zeros((m + 1, m + 1), dtype=np.int64)
    for v in range(1, m + 1):
        B[v] = ub1_branch(n, v) + ub3_branch(n, v)
    for u in range(1, m + 1):
        for v in range(1, u + 1):
            q = (u - v) * v + ub4_pair(n, u, v)
            Q[u, v] = q
            Q[v, u] = q
    return B, Q


def float_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """n^3-scaled continuous-relaxation tables for order n.

    (Bf, Qf) are the x1 <= 1/2 polynomial terms at x = v/n; (Bf2, Qf2) the
    dominant-branch variants used when the largest part exceeds n/2.
    """
    from .relaxation import branch_term, branch_term_major, pair_term, pair_term_major

    m = n - 1
    n3 = float(n) ** 3
    Bf = np.zeros(m + 1)
    Bf2 = np.zeros(m + 1)
    Qf = np.zeros((m + 1, m + 1))
    Qf2 = np.zeros((m + 1, m + 1))
    for v in range(1, m + 1):
        x = v / n
        Bf[v] = n3 * branch_term(x)
        Bf2[v] = n3 * branch_term_major(x)
    for u in range(1, m + 1):
        xu = u / n
        for v in range(1, u + 1):
            xv = v / n
            q = n3 * pair_term(xu, xv)
            Qf[u, v] = q
            Qf[v, u] = q
        for v in range(1, m + 1):
            Qf2[u, v] = n3 * pair_term_major(xu, v / n)
    return Bf, Qf, Bf2, Qf2


@numba.njit(cache=True)
def scan_max(m, B, Q, wit):  # pragma: no cover - exercised via search
    """Max signature value over all partitions of m, collecting the tie set.

    Ties are written into ``wit`` (rows zero-padded); returns (best, count).
    A count above wit.shape[0] means the tie set overflowed the buffer.
    """
    a = np.zeros(m, np.int64)
    rv = np.zeros(m, np.int64)
    rm = np.zeros(m, np.int64)
    a[0] = m
    ln = 1
    best = np.int64(-1)
    count = 0
    cap = wit.shape[0]
    while True:
        total = np.int64(0)
        nruns = 0
        i = 0
        while i < ln:
            v = a[i]
            j = i + 1
            while j < ln and a[j] == v:
                j += 1
            c = j - i
            total += c * B[v] + (c * (c - 1) // 2) * Q[v, v]
            for r in range(nruns):
                total += rm[r] * c * Q[rv[r], v]
            rv[nruns] = v
            rm[nruns] = c
            nruns += 1
            i = j
        if total > best:
            best = total
            count = 0
        if total == best:
            if count < cap:
                for t in range(ln):
                    wit[count, t] = a[t]
                for t in range(ln, m):
                    wit[count, t] = 0
            count += 1
        j = ln - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            break
        rem = a[j] + (ln - 1 - j)
        v = a[j] - 1
        ln = j
        while rem > v:
            a[ln] = v
            ln += 1
            rem -= v
        a[ln] = rem
        ln += 1
    return best, count


@numba.njit(cache=True)
def scan_gap_ratio(m, B, Q, Bf, Qf, Bf2, Qf2):  # pragma: no cover
    """Worst |uB - n^3 f| / ((4+k) n^2) over all partitions of m (order n = m+1).

    A part above n/2 is necessarily unique and first, so the dominant-branch
    polynomial applies exactly to run 0 and its cross pairs.
    """
    n = m + 1
    a = np.zeros(m, np.int64)
    rv = np.zeros(m, np.int64)
    rm = np.zeros(m, np.int64)
    a[0] = m
    ln = 1
    worst = 0.0
    while True:
        major = 2 * a[0] > n
        total = np.int64(0)
        fcont = 0.0
        nruns = 0
        i = 0
        while i < ln:
            v = a[i]
            j = i + 1
            while j < ln and a[j] == v:
                j += 1
            c = j - i
            total += c * B[v] + (c * (c - 1) // 2) * Q[v, v]
            if major and i == 0:
                fcont += Bf2[v]
            else:
                fcont += c * Bf[v] + (c * (c - 1) / 2.0) * Qf[v, v]
            for r in range(nruns):
                total += rm[r] * c * Q[rv[r], v]
                if major and r == 0:
                    fcont += rm[r] * c * Qf2[rv[r], v]
                else:
                    fcont += rm[r] * c * Qf[rv[r], v]
            rv[nruns] = v
            rm[nruns] = c
            nruns += 1
            i = j
        ratio = abs(total - fcont) / ((4.0 + ln) * n * n)
        if ratio > worst:
            worst = ratio
        j = ln - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            break
        rem = a[j] + (ln - 1 - j)
        v = a[j] - 1
        ln = j
        while rem > v:
            a[ln] = v
            ln += 1
            rem -= v
        a[ln] = rem
        ln += 1
    return worst
