from itertools import product

import pytest

from maorank.partitions import (
    Partition, d_series, d_values, dyson_rank, enumerate_partitions, m2_rank,
    p_of, partition_counts, rank_table,
)
from maorank.qseries import eval_product, poch
from maorank.series import LaurentSeries, equal_to_order


def compositions_sorted(n):
    """All multisets of positive parts summing to n, by filtering tuples."""
    out = set()

    def go(rest, acc):
        if rest == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        for p in range(1, rest + 1):
            go(rest - p, acc + [p])
    go(n, [])
    return out


def test_enumerate_examples():
    parts = {p.parts for p in enumerate_partitions(4)}
    assert parts == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    odd = {p.parts for p in enumerate_partitions(5, distinct_odd_only=True)}
    assert odd == {(5,), (4, 1), (3, 2), (2, 2, 1)}
    assert [p.parts for p in enumerate_partitions(0, True)] == [()]


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_each_exactly_once(n):
    got = [p.parts for p in enumerate_partitions(n)]
    assert len(got) == len(set(got))
    assert set(got) == compositions_sorted(n)
    odd = [p.parts for p in enumerate_partitions(n, True)]
    assert set(odd) == {t for t in compositions_sorted(n) if Partition(t).has_distinct_odd_parts()}


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert not Partition((3, 3, 2)).has_distinct_odd_parts()
    assert Partition((4, 4, 3, 1)).has_distinct_odd_parts()


def test_rank_examples():
    assert dyson_rank(Partition((4,))) == 3
    assert dyson_rank(Partition((1, 1, 1, 1))) == -3
    assert m2_rank(Partition((5,))) == 2
    assert m2_rank(Partition((2, 2, 1))) == -2
    assert dyson_rank(Partition()) == m2_rank(Partition()) == 0


def test_rank_table_examples():
    t = rank_table("dyson", 5, 10)
    assert [t(s, 4) for s in range(5)] == [1] * 5
    t6 = rank_table("m2", 6, 10)
    assert [t6(s, 2) for s in range(6)] == [1, 0, 0, 0, 0, 0]
    assert p_of(4) == 5
    with pytest.raises(ValueError):
        rank_table("crank", 5, 10)


def test_d_small_values():
    d = d_values(5)
    assert d[0] == 1 and d[2] == 1
    # ranks of 5, 4+1, 3+2, 2+2+1 are 2, 0, 0, -2 -> residues 2, 0, 0, 4
    ranks = [m2_rank(p) % 6 for p in enumerate_partitions(5, True)]
    assert sorted(ranks) == [0, 0, 2, 4]
    assert d[5] == 1


@pytest.mark.parametrize("flavor,m", list(product(("dyson", "m2"), (1, 2, 5, 6, 7, 10))))
def test_dp_matches_enumeration(flavor, m):
    top = 40 if flavor == "dyson" else 60
    assert rank_table(flavor, m, top, "enumerate") == rank_table(flavor, m, top, "dp")


def test_totals_are_partition_counts():
    pc = partition_counts(80)
    po = partition_counts(80, distinct_odd_only=True)
    td, t2 = rank_table("dyson", 7, 80), rank_table("m2", 6, 80)
    assert all(td.total(n) == pc[n] for n in range(81))
    assert all(t2.total(n) == po[n] for n in range(81))


def test_distinct_odd_counts_match_product():
    # (-q; q^2)_inf / (q^2; q^2)_inf
    gen = eval_product(poch(-1, 1, 2) / poch(1, 2, 2), 45)
    counts = [sum(1 for _ in enumerate_partitions(n, True)) for n in range(46)]
    assert equal_to_order(LaurentSeries.from_coeffs(counts, 0, 45), gen, 45)[0]
    t = rank_table("m2", 6, 60, "enumerate")
    gen = eval_product(poch(-1, 1, 2) / poch(1, 2, 2), 60)
    assert [t.total(n) for n in range(61)] == gen.dense(0, 60)


@pytest.mark.parametrize("flavor,m", [("dyson", 5), ("dyson", 7), ("dyson", 10),
                                      ("m2", 6), ("m2", 10)])
def test_rank_symmetry(flavor, m):
    t = rank_table(flavor, m, 60)
    for n in range(61):
        assert all(t(s, n) == t(m - s, n) for s in range(1, m))


def test_ramanujan_congruences():
    pc = partition_counts(100)
    for m, r in ((5, 4), (7, 5), (11, 6)):
        assert all(pc[n] % m == 0 for n in range(r, 101, m))


def test_d_series_is_integral_power_series():
    s = d_series(100)
    assert s.min_exp == 0 and s.order == 100 and s.is_integral()
