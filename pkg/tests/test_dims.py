import pytest

from diagmon.diagrams import Flavor
from diagmon.dims import (InadmissibleLabel, PartitionLabel, Verdict, b_semisimple, cell_dim, cell_dim_row,
                          dim_table, dim_table_csv, merge_diagram_count, monoid_order, partition_cell_is_simple,
                          partitions, sum_of_squares, syt_count)
from oracles import CELL_DIMS, MERGE_COUNT_N3, ORDERS, PARTITION_SIMPLE


@pytest.mark.parametrize("name,counts", sorted(ORDERS.items()))
def test_closed_form_orders(name, counts):
    f = Flavor.parse(name)
    assert [monoid_order(f, n) for n in range(len(counts))] == counts


@pytest.mark.parametrize("key,row", sorted(CELL_DIMS.items()))
def test_cell_dims(key, row):
    name, n = key
    f = Flavor.parse(name)
    assert {k: cell_dim(f, n, k) for k in row} == row


def test_sum_of_squares_matches_order_for_rook_and_symmetric():
    for n in range(1, 5):
        assert sum_of_squares(Flavor.ROOK, n) == monoid_order(Flavor.ROOK, n)
        assert sum_of_squares(Flavor.SYMMETRIC, n) == monoid_order(Flavor.SYMMETRIC, n)
        assert sum_of_squares(Flavor.TEMPERLEY_LIEB, n) == monoid_order(Flavor.TEMPERLEY_LIEB, n)


def test_inadmissible_labels():
    with pytest.raises(InadmissibleLabel):
        cell_dim(Flavor.TEMPERLEY_LIEB, 4, 1)
    with pytest.raises(InadmissibleLabel):
        cell_dim(Flavor.BRAUER, 3, 1, PartitionLabel((2,)))
    with pytest.raises(InadmissibleLabel):
        cell_dim(Flavor.MOTZKIN, 3, 1, PartitionLabel((1,)))


def test_partitions_and_hooks():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert syt_count(PartitionLabel((2, 2))) == 2
    assert syt_count(PartitionLabel((3, 2))) == 5
    assert PartitionLabel.parse("(2,1)").conjugate() == PartitionLabel((2, 1))
    with pytest.raises(ValueError):
        PartitionLabel((1, 2))


def test_merge_diagram_count():
    assert [merge_diagram_count(3, k) for k in range(4)] == MERGE_COUNT_N3


@pytest.mark.parametrize("flavor", [Flavor.TEMPERLEY_LIEB, Flavor.MOTZKIN, Flavor.PLANAR_ROOK,
                                    Flavor.PLANAR_PARTITION])
def test_fast_rows_agree(flavor):
    for n in range(0, 25):
        row = cell_dim_row(flavor, n)
        assert row == {k: cell_dim(flavor, n, k) for k in row}


@pytest.mark.parametrize("key,expect", sorted(PARTITION_SIMPLE.items()))
def test_partition_predicate_even_n(key, expect):
    delta, shape = key
    for n in (10, 12):
        for k, simple in expect.items():
            lam = PartitionLabel.row(k) if shape == "row" else PartitionLabel.column(k)
            want = Verdict.SIMPLE if simple else Verdict.EVENTUALLY_NOT_SIMPLE
            assert partition_cell_is_simple(n, k, lam, delta) is want


def test_partition_predicate_unknown_on_bad_label():
    assert partition_cell_is_simple(4, 2, PartitionLabel((3,)), 1) is Verdict.UNKNOWN


def test_dim_table_csv():
    text = dim_table_csv(dim_table(Flavor.BRAUER, 3))
    lines = text.strip().splitlines()
    assert lines[0] == "flavor,n,k,lambda,dim"
    assert "brauer,3,1,(1),3" in lines
    assert "brauer,3,3,\"(2,1)\",2" in lines
