"""Which subdivided stars maximize uB at a given order?

For orders 5..15 the search over all trees confirms that every
uB-maximizing tree is a subdivided star (a spider), so for larger orders
it suffices to scan integer partitions of n-1.  The scan is exhaustive:
at n = 59 it covers all 715220 partitions of 58.
"""

from ubtrees import (
    max_ub_all_trees,
    max_ub_subdivided_stars,
    search_orders,
    spider_signature,
)


def main():
    print("orders 5..10, all trees vs subdivided stars only:")
    for n in range(5, 11):
        best, trees = max_ub_all_trees(n)
        rec = max_ub_subdivided_stars(n)
        sigs = sorted({str(spider_signature(t)) for t in trees})
        agree = "ok" if best == rec.max_ub else "MISMATCH"
        print(f"  n={n:2d}  max uB={best:4d}  maximizers: {'; '.join(sigs)}  [{agree}]")

    print("\nspider-only scan, orders 16..25:")
    for rec in search_orders(16, 25):
        wits = "; ".join(str(w) for w in rec.witnesses)
        print(f"  n={rec.order:2d}  max uB={rec.max_ub:5d}  {wits}")

    print("\nfirst order with a tie between two signatures:")
    rec = max_ub_subdivided_stars(44)
    for w in rec.witnesses:
        print(f"  n=44  uB={rec.max_ub}  S({w})")


if __name__ == "__main__":
    main()
