import itertools
import math

import pytest

import ordtree


def brute_force(n):
    out = []
    for t in itertools.product(range(n), repeat=n):
        open_slots = 1
        for i, d in enumerate(t):
            open_slots += d - 1
            if open_slots < 0 or (open_slots == 0 and i < n - 1):
                break
        else:
            if open_slots == 0:
                out.append(t)
    return out


def test_count_matches_catalan():
    for n in range(1, 20):
        assert ordtree.count(n) == math.comb(2 * (n - 1), n - 1) // n
    assert ordtree.count(64) == math.comb(126, 63) // 64


def test_trees_equal_brute_force():
    for n in range(1, 8):
        got = list(ordtree.trees(n))
        assert got == sorted(brute_force(n))
        assert list(ordtree.trees(n, "desc")) == got[::-1]


def test_worked_example():
    assert list(itertools.islice(ordtree.trees(4), 3)) == [(1, 1, 1, 0), (1, 2, 0, 0), (2, 0, 1, 0)]
    assert list(ordtree.deltas(4)) == [(0, (1, 1, 1)), (1, (2, 0)), (0, (2, 0, 1)), (1, (1, 0)), (0, (3, 0, 0))]


def test_validate_and_bounds():
    assert ordtree.validate([2, 0, 1, 0])
    assert not ordtree.validate([1, 3, 0, 0])
    assert ordtree.explain_invalid([1, 3, 0, 0])
    assert ordtree.bounds(4, []) == (1, 3)
    assert ordtree.bounds(4, [2]) == (0, 1)
    assert ordtree.bounds(4, [2, 0]) == (1, 1)


def test_first_and_successor():
    assert ordtree.first(4) == (1, 1, 1, 0)
    assert ordtree.first(4, "desc") == (3, 0, 0, 0)
    assert ordtree.successor((2, 1, 0, 0)) == (3, 0, 0, 0)
    assert ordtree.successor((3, 0, 0, 0)) is None
    with pytest.raises(ValueError):
        ordtree.successor((1, 3, 0, 0))


def test_rank_unrank_round_trip():
    for n in range(1, 8):
        for position, t in enumerate(ordtree.trees(n)):
            assert ordtree.rank(t) == position
            assert ordtree.unrank(n, position) == t
    big = ordtree.count(40) - 1
    assert ordtree.unrank(40, big) == (39,) + (0,) * 39
    with pytest.raises(IndexError):
        ordtree.unrank(4, 5)


def test_bijections_round_trip():
    for t in ordtree.trees(6):
        assert ordtree.from_dyck(ordtree.to_dyck(t)) == t
        assert ordtree.from_lattice_path(ordtree.to_lattice_path(t)) == t
        assert ordtree.from_parent_array(ordtree.to_parent_array(t)) == t
    assert ordtree.to_dyck((3, 0, 0, 0)) == "((()))"
    assert ordtree.to_parent_array((2, 0, 1, 0)) == [0, 1, 1, 3]
    assert ordtree.to_dot((1, 0)).startswith("digraph tree {")
    with pytest.raises(ValueError):
        ordtree.from_dyck(")(")


def test_sampling_is_reproducible():
    a = ordtree.sample(12, 100, seed=9)
    assert a == ordtree.sample(12, 100, seed=9)
    assert all(ordtree.validate(t) for t in a)
    u = ordtree.sample(12, 100, seed=9, mode="uniform")
    assert all(ordtree.validate(t) for t in u)
    with pytest.raises(ValueError):
        ordtree.sample(4, 1, seed=1, mode="best")


def test_bench_records():
    records = ordtree.bench(max_n=6, runs=2)
    assert len(records) == 12
    assert sum(r["trees"] for r in records if r["run_id"] == 1) == sum(ordtree.count(n) for n in range(1, 7))
    assert {r["mode"] for r in records} == {"generation-only"}
