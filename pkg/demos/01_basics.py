"""Distance-unbalancedness and the Mostar index of small trees.

For each pair of vertices u, v of a tree T, some vertices are strictly
closer to u and some strictly closer to v (ties count for neither side).
uB(T) sums |n(u,v) - n(v,u)| over all pairs; the Mostar index sums the
same quantity over edges only.
"""

from ubtrees import (
    LabeledTree,
    mostar_index,
    path_tree,
    star_tree,
    ub_oracle,
    ub_upper_bound,
)


def show(name, tree):
    n = tree.order
    print(
        f"{name:>12}: n={n:2d}  uB={ub_oracle(tree):4d}"
        f"  Mostar={mostar_index(tree):4d}  bound={ub_upper_bound(n):4d}"
    )


def main():
    for n in (4, 6, 8, 10):
        show(f"path P{n}", path_tree(n))
        show(f"star K1,{n - 1}", star_tree(n))

    # a small caterpillar, built edge by edge
    cat = LabeledTree(7, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (3, 6)])
    show("caterpillar", cat)


if __name__ == "__main__":
    main()
