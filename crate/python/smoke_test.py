"""Smoke test for the `srm` extension module.

Build and install first, e.g. `pip install --no-build-isolation ./crates/python`,
or put a directory holding the built `srm.so` on PYTHONPATH.
"""

import srm


def main():
    assert srm.max_nonzeros(6, 8) == 37
    assert srm.extremal_srm(9, 11).nonzeros() == 76
    assert srm.count_srms(2, 2) == 10
    assert srm.count_srms(2, 2, plus=True) == 9

    assert srm.violation([[-1]]) == "column 1 prefix sum -1 at (1,1)"
    assert srm.is_srm([[0, 1], [1, -1]])

    c = srm.Srm([[0, 1], [0, 0]])
    d = srm.Srm([[0, 0], [1, 0]])
    p = c & d
    assert p.rows() == [[0, 1], [1, -1]]
    assert p <= c and p <= d and not c <= d
    assert srm.Srm([[1, 0], [0, 0]]) | srm.Srm([[0, 1], [1, 0]]) == p
    assert len({p, c & d, c}) == 2

    a = srm.Srm([[0, 1, 1], [1, -1, 0], [0, 1, -1], [0, 0, 1]])
    plus, steps = a.eliminate()
    assert steps == ["(1,2)x(1,2) +", "(1,3)x(2,3) +"]
    assert plus.is_plus() and plus.margins() == a.margins()

    total = [[0] * 3 for _ in range(4)]
    for sign, rows in a.decompose():
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                total[i][j] += sign * v
    assert total == a.rows()

    assert srm.pm_nonempty([2, 0], [2, 0])
    assert srm.srm_ordering(4, [(0, 1), (1, 2), (1, 3)], [2, 3]) is not None
    assert srm.srm_ordering(2, [(0, 1), (1, 0)]) is None
    assert srm.verify_polytope(2, 2, 1)
    assert srm.find_joint_realization([2, 0], [1, 1], [1, 0], [1, 0]) is None

    try:
        srm.Srm([[1], [1]])
    except ValueError as e:
        assert "column 1 prefix sum 2" in str(e)
    else:
        raise AssertionError("accepted a non-SRM")

    passed, _ = srm.run_suite(3)
    assert passed
    print("ok")


if __name__ == "__main__":
    main()
