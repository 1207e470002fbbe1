"""The exact four-part decomposition of uB for subdivided stars.

A subdivided star S(n1, ..., nk) consists of k paths ("branches") of
lengths n1 >= ... >= nk glued at a common center.  Its
distance-unbalancedness splits into four sums:

  uB1  pairs {center, branch vertex}
  uB2  cross-branch pairs at equal distance from the center
  uB3  pairs inside a single branch
  uB4  cross-branch pairs at unequal distances

The closed form agrees with the brute-force oracle, and ub_total_fast
evaluates the total in O(n k) without materializing the tree.
"""

from ubtrees import (
    StarSignature,
    build_tree,
    parse_signature,
    ub_closed_form,
    ub_oracle,
    ub_total_fast,
)


def main():
    for text in ("2,1,1", "3,3,2", "5,4,4,3", "10,10,10"):
        sig = parse_signature(text)
        b = ub_closed_form(sig)
        oracle = ub_oracle(build_tree(sig))
        print(
            f"S({sig})  uB1={b.ub1:4d} uB2={b.ub2:4d} uB3={b.ub3:4d} uB4={b.ub4:5d}"
            f"  total={b.total:5d}  oracle={oracle:5d}  fast={ub_total_fast(sig):5d}"
        )

    # the fast form scales to signatures far beyond brute force
    big = StarSignature((500,) * 20)
    print(f"\nS(500 x 20): n={big.order}  uB={ub_total_fast(big)}")


if __name__ == "__main__":
    main()
