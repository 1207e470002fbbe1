"""The continuous relaxation f of uB(S)/n^3 on the simplex.

Scaling branch sizes to fractions x_i = n_i/n and replacing the two
dominant sums by integrals gives a piecewise-polynomial function f over
{x_1 >= ... >= x_k >= 0, sum <= 1}.  Its maximum is attained at the
uniform point (1/k, ..., 1/k) with value 1/2 - 5/(6k) + 1/(3k^2), which
explains why balanced spiders with k ~ sqrt(n) branches push uB toward
its cubic ceiling n^3/2.
"""

import math

from ubtrees import (
    StarSignature,
    f_closed,
    f_quadrature,
    f_uniform,
    lemma1_gap,
    maximize_f,
    ub_total_fast,
)


def main():
    x = [0.4, 0.3, 0.2]
    print(f"f{tuple(x)}: closed={f_closed(x):.12f}  quadrature={f_quadrature(x):.12f}")

    print("\nsimplex maximum vs the uniform-point formula:")
    for k in range(2, 7):
        xs, val = maximize_f(k)
        dev = max(abs(v - 1.0 / k) for v in xs)
        print(f"  k={k}  max f={val:.10f}  formula={f_uniform(k):.10f}  |x*-1/k|<={dev:.1e}")

    print("\ndiscretization gap |uB - n^3 f| against the (4+k) n^2 bound:")
    for parts in ((3, 3, 3), (5, 5, 4), (10, 9, 9, 8)):
        sig = StarSignature(parts)
        gap, bound = lemma1_gap(sig)
        print(f"  S({sig}): gap={gap:8.1f}  bound={bound:8.1f}  ratio={gap / bound:.3f}")

    print("\nbalanced spiders with k = isqrt(n) branches approach uB/n^3 -> 1/2:")
    for target in (100, 400, 1600, 6400):
        k = math.isqrt(target)
        m = (target - 1) // k
        n = k * m + 1
        ratio = ub_total_fast(StarSignature((m,) * k)) / n**3
        print(f"  n={n:5d}  k={k:2d}  uB/n^3 = {ratio:.4f}")


if __name__ == "__main__":
    main()
