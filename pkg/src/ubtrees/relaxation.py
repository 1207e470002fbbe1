"""Continuous relaxation of the subdivided-star unbalancedness.

Rescaling branch orders to fractions x_i = n_i/n turns the two dominant
component sums (same-branch and cross-branch-unequal pairs) into double
integrals of piecewise-linear integrands; their sum f(x) approximates
uB(S)/n^3 up to O(k n^2)/n^3.  This module provides:

  * f_quadrature - numeric integration of the defining integrals (the oracle),
  * f_closed     - the exact piecewise-polynomial value, with separate
                   branches for x1 <= 1/2 and x1 > 1/2,
  * f_uniform    - the optimum value 1/2 - 5/(6k) + 1/(3k^2) at x = (1/k,...),
  * f2, f3       - the reductions used to rule out maximizers with x1 > 1/2,
  * maximize_f   - projected gradient ascent recovering the uniform optimum,
  * lemma1_gap   - the discrete-vs-continuous approximation gap and its
                   (4 + k) n^2 bound, plus the exact per-branch/per-pair
                   discrepancy identities valid when 2 n_1 <= n.

Polynomial helpers accept Fractions as well as floats, so the exact
identities can be checked in rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .stars import StarSignature, signature_fractions, ub3_branch, ub4_pair, ub_total_fast

SUM_SLACK = 1e-12


class QuadratureError(RuntimeError):
    """Numeric integration did not reach the requested tolerance."""


class ConvergenceError(RuntimeError):
    """Ascent stopped before reaching a stationary point."""


@dataclass(frozen=True)
class BranchFractions:
    """Sorted real vector x1 >= ... >= xk in [0,1] with sum <= 1."""

    x: tuple[float, ...]

    def __init__(self, x):
        x = tuple(float(v) for v in x)
        if not x:
            raise ValueError("need at least one fraction")
        if any(v < 0.0 or v > 1.0 for v in x):
            raise ValueError(f"fractions must lie in [0,1], got {x}")
        if list(x) != sorted(x, reverse=True):
            raise ValueError(f"fractions must be nonincreasing, got {x}")
        if sum(x) > 1.0 + SUM_SLACK:
            raise ValueError(f"fractions must sum to at most 1, got sum {sum(x)}")
        object.__setattr__(self, "x", x)

    @property
    def k(self) -> int:
        return len(self.x)

    def __iter__(self):
        return iter(self.x)


def _coerce(x) -> tuple:
    """Accept BranchFractions or any sequence; canonicalize to sorted-desc tuple."""
    if isinstance(x, BranchFractions):
        return x.x
    vals = tuple(sorted(x, reverse=True))
    if not vals:
        raise ValueError("need at least one fraction")
    if any(v < 0 or v > 1 for v in vals):
        raise ValueError(f"fractions must lie in [0,1], got {vals}")
    if sum(vals) > 1 + SUM_SLACK:
        raise ValueError(f"fractions must sum to at most 1, got sum {sum(vals)}")
    return vals


# ---------------------------------------------------------------------------
# closed forms (Fraction-friendly: only integer-denominator divisions)

def branch_term(x):
    """Same-branch integral for a minor branch (x <= 1/2): x^2/2 - x^3/2."""
    return x * x / 2 - x**3 / 2


def branch_term_major(x1):
    """Same-branch integral for a dominant branch (x1 >= 1/2)."""
    sixth = Fraction(1, 6) if isinstance(x1, Fraction) else 1.0 / 6.0
    return x1 - 3 * x1 * x1 / 2 + 5 * x1**3 / 6 - sixth


def pair_term(xi, xj):
    """Cross-branch integral for two minor branches, xi >= xj."""
    return xi * xj + xi * xj * xj / 2 - 3 * xi * xi * xj / 2 - 2 * xj**3 / 3


def pair_term_major(x1, xj):
    """Cross-branch integral when the larger branch dominates (x1 >= 1/2)."""
    return 5 * x1 * x1 * xj / 2 + x1 * xj * xj / 2 - 3 * x1 * xj + xj - 2 * xj**3 / 3


def f_closed(x) -> float:
    """Exact value of the relaxation, branching on x1 <= 1/2 vs x1 > 1/2."""
    vals = _coerce(x)
    k = len(vals)
    x1 = vals[0]
    if x1 <= 0.5:
        total = sum(branch_term(v) for v in vals)
        for i in range(k - 1):
            for j in range(i + 1, k):
                total += pair_term(vals[i], vals[j])
        return total
    total = branch_term_major(x1)
    total += sum(branch_term(v) for v in vals[1:])
    total += sum(pair_term_major(x1, v) for v in vals[1:])
    for i in range(1, k - 1):
        for j in range(i + 1, k):
            total += pair_term(vals[i], vals[j])
    return total


def f_uniform(k: int) -> float:
    """f(1/k,...,1/k) = 1/2 - 5/(6k) + 1/(3k^2), the maximum of f."""
    if k < 2:
        raise ValueError("uniform value needs k >= 2")
    return 0.5 - 5.0 / (6.0 * k) + 1.0 / (3.0 * k * k)


def f_uniform_exact(k: int) -> Fraction:
    return Fraction(1, 2) - Fraction(5, 6 * k) + Fraction(1, 3 * k * k)


# ---------------------------------------------------------------------------
# quadrature oracle

_EPSABS = 1e-13


def _quad(fun, lo, hi, pts, errs):
    pts = [p for p in pts if lo < p < hi]
    val, err = quad(fun, lo, hi, points=pts or None, epsabs=_EPSABS, epsrel=1e-11, limit=200)
    errs.append(err)
    return val


def _branch_integral(xi, errs):
    # int_0^{xi} int_0^{xi-y} |1-2xi+2y+y'| dy' dy
    def outer(y):
        c = 1 - 2 * xi + 2 * y
        return _quad(lambda t: abs(c + t), 0.0, xi - y, [-c], errs)

    return _quad(outer, 0.0, xi, [xi - 0.5], errs)


def _pair_integral(xi, xj, errs):
    # int_0^{xj} int_{yj}^{xi} |1-2xi+yi-yj| dyi dyj
    def outer1(yj):
        c = 1 - 2 * xi - yj
        return _quad(lambda t: abs(c + t), yj, xi, [-c], errs)

    # int_0^{xj} int_{yi}^{xj} |1-2xj+yj-yi| dyj dyi
    def outer2(yi):
        c = 1 - 2 * xj - yi
        return _quad(lambda t: abs(c + t), yi, xj, [-c], errs)

    total = _quad(outer1, 0.0, xj, [1 - xi], errs)
    total += _quad(outer2, 0.0, xj, [1 - xj], errs)
    return total


def f_quadrature(x, tol: float = 1e-9) -> float:
    """Numeric integration of the defining double integrals.

    Splits every inner interval at the kink of the absolute value, so the
    piecewise-linear integrands are resolved exactly; raises QuadratureError
    with the achieved error estimate if the accumulated estimate exceeds tol.
    """
    vals = _coerce(x)
    k = len(vals)
    errs: list[float] = []
    total = 0.0
    for v in vals:
        if v > 0.0:
            total += _branch_integral(v, errs)
    for i in range(k - 1):
        for j in range(i + 1, k):
            if vals[j] > 0.0:
                total += _pair_integral(vals[i], vals[j], errs)
    achieved = float(sum(errs))
    if achieved > tol:
        raise QuadratureError(f"quadrature error estimate {achieved:.3e} exceeds {tol:.3e}")
    return total


# ---------------------------------------------------------------------------
# the f2 / f3 reductions for the dominant-branch case

def f2(x1: float, y: float, k: int) -> float:
    """f(x1, y, ..., y) for x1 >= 1/2 and k-1 equal minor branches."""
    return (
        (-5.0 * k * k / 6.0 + 4.0 * k / 3.0 - 0.5) * y**3
        + ((k - 1) * (k + x1 - 1) / 2.0) * y * y
        + ((k - 1) * (5 * x1 * x1 - 6 * x1 + 2) / 2.0) * y
        + (x1 - 1.5 * x1 * x1 + 5.0 * x1**3 / 6.0 - 1.0 / 6.0)
    )


def f3(x1: float, k: int) -> float:
    """f2 at the extreme y = (1-x1)/(k-1), as a rational function of x1."""
    if k == 1:
        raise ValueError("f3 requires k >= 2")
    num = (
        (-10 * x1**3 + 27 * x1 * x1 - 24 * x1 + 8) * k * k
        + (28 * x1**3 - 75 * x1 * x1 + 66 * x1 - 21) * k
        - 16 * x1**3
        + 42 * x1 * x1
        - 36 * x1
        + 11
    )
    return num / (6.0 * (k - 1) ** 2)


def df3(x1: float, k: int) -> float:
    """d f3 / d x1; vanishes on (1/2, 1) only at (4k-3)/(5k-4)."""
    num = (
        (-30 * x1 * x1 + 54 * x1 - 24) * k * k
        + (84 * x1 * x1 - 150 * x1 + 66) * k
        - 48 * x1 * x1
        + 84 * x1
        - 36
    )
    return num / (6.0 * (k - 1) ** 2)


def f3_critical_point(k: int) -> float:
    """Numeric root of df3 on (1/2, 1)."""
    return float(brentq(lambda t: df3(t, k), 0.5 + 1e-9, 1.0 - 1e-6, xtol=1e-14))


def f3_at_half(k: int) -> float:
    """f3(1/2) = (3k-2)(2k-3)/(24(k-1)^2)."""
    return (3 * k - 2) * (2 * k - 3) / (24.0 * (k - 1) ** 2)


# ---------------------------------------------------------------------------
# maximization over {x sorted, sum <= 1}

def _project(x: np.ndarray) -> np.ndarray:
    y = np.clip(x, 0.0, 1.0)
    y = np.sort(y)[::-1]
    s = y.sum()
    if s > 1.0:
        y = y / s
    return y


def _grad(x: np.ndarray, h: float = 1e-7) -> np.ndarray:
    g = np.empty_like(x)
    for i in range(len(x)):
        xp = x.copy()
        xm = x.copy()
        xp[i] = min(xp[i] + h, 1.0)
        xm[i] = max(xm[i] - h, 0.0)
        g[i] = (f_closed(_project(xp)) - f_closed(_project(xm))) / (xp[i] - xm[i])
    return g


def _ascend(x0: np.ndarray, max_iter: int = 400) -> tuple[np.ndarray, float]:
    x = _project(x0)
    fx = f_closed(x)
    step = 0.25
    for _ in range(max_iter):
        g = _grad(x)
        moved = False
        while step >= 1e-13:
            xn = _project(x + step * g)
            fn = f_closed(xn)
            if fn > fx + 1e-16:
                x, fx = xn, fn
                moved = True
                break
            step /= 2.0
        if not moved:
            return x, fx
    if step > 1e-8:
        raise ConvergenceError(f"ascent exhausted iterations with step {step:.2e}")
    return x, fx


def maximize_f(k: int, restarts: int = 32, seed: int = 0) -> tuple[BranchFractions, float]:
    """Best local maximizer found from the uniform point plus random restarts.

    Value ties (within float noise) are broken toward the lexicographically
    smallest point: for k = 2 the maximum is attained along the whole segment
    x1 + x2 = 1 (every split of a path gives the same tree), and the smallest
    sorted point on that ridge is the uniform one.  Deterministic for a seed.
    """
    if k < 2:
        raise ValueError("maximization needs k >= 2")
    rng = np.random.default_rng(seed)
    starts = [np.full(k, 1.0 / k)]
    for _ in range(restarts):
        raw = rng.random(k)
        raw = raw / raw.sum() * rng.uniform(0.3, 1.0)
        starts.append(raw)
    best_x, best_f = None, -np.inf
    for x0 in starts:
        x, fx = _ascend(x0)
        if fx > best_f + 1e-13 or (abs(fx - best_f) <= 1e-13 and tuple(x) < tuple(best_x)):
            best_x, best_f = x, fx
    return BranchFractions(best_x), float(best_f)


# ---------------------------------------------------------------------------
# discrete vs continuous: the approximation gap and its exact identities

def lemma1_gap(s: StarSignature) -> tuple[float, float]:
    """(|uB(S) - n^3 f(x)|, (4+k) n^2) for x_i = n_i/n.

    The single constant 4+k dominates both proof cases of the approximation
    bound: n^2 + n^2 + n^2/2 + k n^2 when 2 n_1 <= n, and
    n^2 + n^2 + (2n^2+1)/4 + n(n+1/3) + (k/2) n^2 otherwise.
    """
    n = s.order
    k = s.k
    gap = abs(ub_total_fast(s) - n**3 * f_closed(signature_fractions(s)))
    return gap, float((4 + k) * n * n)


def case1_branch_identity(n: int, ni: int) -> bool:
    """Exact same-branch discrepancy when 2 ni <= n, in rational arithmetic.

    |sum - n^3 * x^2(1-x)/2| must equal n^2 x (1-x) / 2 for x = ni/n.
    """
    if 2 * ni > n:
        raise ValueError("identity requires 2*ni <= n")
    x = Fraction(ni, n)
    disc = ub3_branch(n, ni)
    lhs = abs(disc - n**3 * branch_term(x))
    rhs = n * n * x * (1 - x) / 2
    return lhs == rhs


def case1_pair_identity(n: int, ni: int, nj: int) -> bool:
    """Exact cross-branch discrepancy when 2 ni <= n, ni >= nj.

    |sum - n^3 * pair_term(xi, xj)| must equal xj n ((1-xj) n - 2/3).
    """
    if not (ni >= nj >= 1 and 2 * ni <= n):
        raise ValueError("identity requires n >= 2*ni and ni >= nj >= 1")
    xi = Fraction(ni, n)
    xj = Fraction(nj, n)
    disc = ub4_pair(n, ni, nj)
    lhs = abs(disc - n**3 * pair_term(xi, xj))
    rhs = xj * n * ((1 - xj) * n - Fraction(2, 3))
    return lhs == rhs


def theorem1_value(n: int, k: int) -> float:
    """Leading term of the maximum over subdivided stars: f_uniform(k) * n^3."""
    if not n > k >= 2:
        raise ValueError("requires n > k >= 2")
    return f_uniform(k) * n**3
