import networkx as nx
import pytest

from golden_tables import FIRST_TABLE
from ubtrees import (
    build_tree,
    enumerate_free_trees,
    enumerate_signatures,
    max_ub_all_trees,
    max_ub_subdivided_stars,
    partition_count,
    partitions_desc,
    path_tree,
    search_orders,
    spider_signature,
    tree_certificate,
    ub_oracle,
    verify_dominance,
)
from ubtrees.search import _max_ub_reference


class TestPartitions:
    def test_reverse_lex_order(self):
        assert list(partitions_desc(3)) == [(3,), (2, 1), (1, 1, 1)]
        assert list(partitions_desc(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_signatures_of_order_five(self):
        sigs = list(enumerate_signatures(5))
        assert len(sigs) == partition_count(4) == 5

    @pytest.mark.parametrize("m", [1, 5, 10, 20, 30])
    def test_stream_count_matches_recurrence(self, m):
        assert sum(1 for _ in partitions_desc(m)) == partition_count(m)

    def test_each_partition_once_and_valid(self):
        seen = set(partitions_desc(12))
        assert len(seen) == partition_count(12)
        assert all(sum(p) == 12 and list(p) == sorted(p, reverse=True) for p in seen)


class TestStarSearch:
    @pytest.mark.parametrize("n", range(8, 15))
    def test_kernel_matches_python_reference(self, n):
        assert max_ub_subdivided_stars(n) == _max_ub_reference(n)

    def test_first_table(self):
        for n, expected in FIRST_TABLE.items():
            rec = max_ub_subdivided_stars(n)
            assert {w.parts for w in rec.witnesses} == expected

    def test_witnesses_sorted_descending(self):
        rec = max_ub_subdivided_stars(10)
        parts = [w.parts for w in rec.witnesses]
        assert parts == sorted(parts, reverse=True)

    def test_worker_count_does_not_change_results(self):
        assert search_orders(5, 10, workers=1) == search_orders(5, 10, workers=2)

    def test_rejects_tiny_orders(self):
        with pytest.raises(ValueError):
            max_ub_subdivided_stars(3)


# counts of free trees on n vertices, n = 1..10 (OEIS A000055)
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


class TestFreeTrees:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_counts(self, n):
        assert sum(1 for _ in enumerate_free_trees(n)) == FREE_TREE_COUNTS[n - 1]

    @pytest.mark.parametrize("n", [7, 9])
    def test_counts_against_networkx(self, n):
        # independent enumeration oracle
        assert sum(1 for _ in enumerate_free_trees(n)) == sum(
            1 for _ in nx.nonisomorphic_trees(n)
        )

    def test_pairwise_non_isomorphic(self):
        certs = [tree_certificate(t) for t in enumerate_free_trees(8)]
        assert len(certs) == len(set(certs))

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            list(enumerate_free_trees(17))


class TestSpiderSignature:
    def test_round_trip(self):
        for parts in [(2, 1, 1), (4, 3, 3, 2, 2), (1, 1, 1, 1)]:
            from ubtrees import StarSignature

            assert spider_signature(build_tree(StarSignature(parts))).parts == parts

    def test_path_is_degenerate_spider(self):
        assert spider_signature(path_tree(4)).parts == (3,)

    def test_double_hub_tree_is_not_a_spider(self):
        from ubtrees import LabeledTree

        # two adjacent degree-3 vertices
        t = LabeledTree(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (3, 6), (6, 7)])
        assert spider_signature(t) is None


class TestAllTrees:
    def test_order_five_witness(self):
        best, wits = max_ub_all_trees(5)
        assert best == 16
        assert len(wits) == 1
        assert spider_signature(wits[0]).parts == (2, 1, 1)

    def test_order_ten_triple_tie(self):
        best, wits = max_ub_all_trees(10)
        assert {spider_signature(t).parts for t in wits} == FIRST_TABLE[10]

    @pytest.mark.parametrize("n", [5, 8, 12])
    def test_dominance(self, n):
        assert verify_dominance(n)

    def test_witness_values_are_maxima(self):
        best, wits = max_ub_all_trees(7)
        assert all(ub_oracle(t) == best for t in wits)
