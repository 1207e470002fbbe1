"""Golden maximizer tuples: subdivided stars with the largest uB per order.

FIRST_TABLE covers orders 5..15 (also maximal among all trees there);
SECOND_TABLE covers orders 16..59 (maximal among subdivided stars).
MAX_UB_BY_ORDER freezes selected maxima this package computes, so
regressions are caught bit-for-bit.
"""

FIRST_TABLE_TUPLES = [
    (2, 1, 1),
    (2, 2, 1),
    (2, 2, 1, 1),
    (2, 2, 2, 1),
    (3, 2, 2, 1),
    (3, 2, 2, 2),
    (3, 3, 2, 1),
    (3, 2, 2, 1, 1),
    (3, 3, 2, 2),
    (3, 3, 2, 2, 1),
    (3, 3, 3, 2, 1),
    (3, 3, 3, 2, 2),
    (4, 3, 3, 2, 2),
]

SECOND_TABLE_TUPLES = [
    (4, 3, 3, 2, 2, 1),
    (4, 3, 3, 3, 2, 1),
    (4, 4, 3, 3, 2, 1),
    (4, 4, 3, 3, 2, 2),
    (4, 4, 3, 3, 3, 2),
    (4, 4, 4, 3, 3, 2),
    (4, 4, 4, 3, 3, 2, 1),
    (4, 4, 4, 3, 3, 2, 2),
    (5, 4, 4, 3, 3, 2, 2),
    (5, 4, 4, 3, 3, 3, 2),
    (5, 4, 4, 4, 3, 3, 2),
    (5, 5, 4, 4, 3, 3, 2),
    (5, 5, 4, 4, 3, 3, 2, 1),
    (5, 5, 4, 4, 3, 3, 2, 2),
    (5, 5, 4, 4, 4, 3, 2, 2),
    (5, 5, 4, 4, 4, 3, 3, 2),
    (5, 5, 5, 4, 4, 3, 3, 2),
    (6, 5, 5, 4, 4, 3, 3, 2),
    (6, 5, 5, 4, 4, 4, 3, 2),
    (6, 5, 5, 5, 4, 4, 3, 2),
    (6, 5, 5, 5, 4, 4, 3, 3),
    (6, 5, 5, 5, 4, 4, 3, 3, 1),
    (6, 5, 5, 5, 4, 4, 3, 3, 2),
    (6, 6, 5, 5, 4, 4, 3, 3, 2),
    (6, 6, 5, 5, 4, 4, 4, 3, 2),
    (6, 6, 5, 5, 5, 4, 4, 3, 2),
    (6, 6, 5, 5, 5, 4, 4, 3, 3),
    (6, 6, 6, 5, 5, 4, 4, 3, 3),
    (6, 6, 6, 5, 5, 4, 4, 3, 3, 1),
    (6, 6, 5, 5, 5, 4, 4, 3, 3, 2),
    (6, 6, 6, 5, 5, 4, 4, 3, 3, 2),
    (6, 6, 6, 5, 5, 4, 4, 4, 3, 2),
    (6, 6, 6, 5, 5, 5, 4, 4, 3, 2),
    (7, 6, 6, 5, 5, 5, 4, 4, 3, 2),
    (7, 6, 6, 6, 5, 5, 4, 4, 3, 2),
    (7, 6, 6, 6, 5, 5, 4, 4, 3, 3),
    (7, 6, 6, 6, 5, 5, 5, 4, 3, 3),
    (7, 7, 6, 6, 5, 5, 5, 4, 3, 3),
    (7, 7, 6, 6, 5, 5, 5, 4, 4, 3),
    (7, 7, 6, 6, 6, 5, 5, 4, 4, 3),
    (7, 7, 6, 6, 5, 5, 5, 4, 4, 3, 2),
    (7, 7, 6, 6, 6, 5, 5, 4, 4, 3, 2),
    (7, 7, 7, 6, 6, 5, 5, 4, 4, 3, 2),
    (7, 7, 6, 6, 6, 5, 5, 4, 4, 3, 3),
    (7, 7, 7, 6, 6, 5, 5, 5, 4, 3, 2),
    (7, 7, 7, 6, 6, 5, 5, 4, 4, 3, 3),
    (7, 7, 7, 6, 6, 5, 5, 5, 4, 3, 3),
]


# frozen maxima for selected orders, computed by this package
MAX_UB_BY_ORDER = {
    5: 16,
    6: 32,
    7: 56,
    8: 90,
    9: 138,
    10: 198,
    16: 1006,
    44: 28210,
    57: 64692,
    58: 68378,
}


def _by_order(tuples):
    table = {}
    for parts in tuples:
        table.setdefault(1 + sum(parts), set()).add(parts)
    return table


FIRST_TABLE = _by_order(FIRST_TABLE_TUPLES)
SECOND_TABLE = _by_order(SECOND_TABLE_TUPLES)

assert sorted(FIRST_TABLE) == list(range(5, 16))
assert sorted(SECOND_TABLE) == list(range(16, 60))
assert sum(len(v) for v in FIRST_TABLE.values()) == 13
assert sum(len(v) for v in SECOND_TABLE.values()) == 47
