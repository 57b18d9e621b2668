import pytest

import corners


def test_partition_basics():
    assert corners.parse_partition("7,4,4,2,2,2,1") == [7, 4, 4, 2, 2, 2, 1]
    assert corners.to_string([4, 2, 1]) == "4,2,1"
    assert corners.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert corners.sum_of([7, 4, 4, 2, 2, 2, 2, 1], [4, 2, 1]) == [11, 6, 5, 2, 2, 2, 2, 1]
    assert corners.union_of([3, 1], [2]) == [3, 2, 1]
    assert corners.num_corners([7, 4, 4, 2, 2, 2, 1]) == 4
    assert corners.staircase(3) == [3, 2, 1]
    assert corners.contains([3, 2, 1], [2, 1])
    assert corners.staircase_decompose([7, 4, 4, 2, 2, 2, 1], 4) == ([3, 1], [4, 2, 2])
    with pytest.raises(corners.MalformedPartition):
        corners.parse_partition("0")


def test_enumeration():
    assert corners.partitions_of(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert corners.nu(6, 1) == 4
    assert corners.nu(9, 3) == 10
    assert corners.max_feasible_corners(10) == 4
    rows = corners.triangle(6)
    assert rows[6] == [0, 4, 6, 1]
    assert sum(rows[5]) == 7
    assert corners.count_pairs(3) == 10
    assert corners.count_pairs_bounded(2, 1) == 2
    assert len(corners.pairs_of(2)) == 5


def test_series():
    assert corners.partition_numbers(5) == [1, 1, 2, 3, 5, 7]
    assert corners.corner_gf(1, 6)[1][6] == 4
    assert corners.summand_k(2, 5)[5] == 5
    assert corners.pair_count_series(1, 2)[2] == 4


def test_fine():
    assert corners.fine_lhs(4, 1) == 7
    assert corners.fine_rhs(4, 1) == 7
    assert corners.nu_via_fine(7, 3) == 2
    assert corners.pairs_via_decomposition(9, 3) == 10
    with pytest.raises(corners.OutOfRange):
        corners.nu_via_fine(6, 2)


def test_bijection():
    assert corners.forward([1], [], 3) == [4, 2, 1]
    assert corners.inverse([3, 2, 1, 1], 3) == ([], [1])
    horiz, vert = corners.border_coordinates([7, 4, 4, 2, 2, 2, 1])
    assert horiz == [1, 1, 2, 3]
    assert vert == [1, 2, 3, 1]
    assert corners.from_border_coordinates(horiz, vert) == [7, 4, 4, 2, 2, 2, 1]
    with pytest.raises(corners.NotInImage):
        corners.inverse([3, 2, 1], 2)
    with pytest.raises(corners.LengthBudgetExceeded):
        corners.forward([1, 1], [1, 1], 3)


def test_round_trip_against_enumeration():
    for m in range(6):
        for k in range(5):
            images = set()
            count = 0
            for alpha, beta in corners.pairs_of(m):
                if len(alpha) + len(beta) > k:
                    continue
                lam = tuple(corners.forward(alpha, beta, k))
                assert corners.inverse(list(lam), k) == (alpha, beta)
                images.add(lam)
                count += 1
            assert len(images) == count
            assert count == corners.count_pairs_bounded(m, k)


def test_verification_suite():
    report = corners.run_suite("conjecture", max_k=4)
    assert report["passed"]
    assert report["checks_run"] > 0
    assert "result: PASS" in report["report"]
