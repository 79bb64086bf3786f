import random

from ck6.linalg import (
    LabeledLinearSystem,
    dump_system,
    load_system,
    row_space_contains,
    row_space_equal,
)
from ck6.scalars import gq


def build(columns, rows):
    sys = LabeledLinearSystem(columns)
    for k, row in enumerate(rows):
        sys.add_row(f"q{k}", row)
    return sys


def test_identity_rref():
    sys = build(["a", "b", "c"], [{"a": 1}, {"b": 1}, {"c": 1}])
    red, rank = sys.rref()
    assert rank == 3
    assert red.rows == [{0: gq(1)}, {1: gq(1)}, {2: gq(1)}]
    assert sys.kernel() == []


def test_zero_matrix():
    sys = build(["a", "b"], [{}, {}])
    red, rank = sys.rref()
    assert rank == 0
    assert red.rows == []


def test_single_row_kernel():
    sys = build(["x", "y"], [{"x": 1, "y": gq(0, 1)}])
    ker = sys.kernel()
    assert len(ker) == 1
    # spanned by (-i, 1)
    vec = ker[0]
    ratio = vec["x"] / vec["y"]
    assert ratio == gq(0, -1)


def test_rref_idempotent_and_rank_nullity():
    rng = random.Random(7)
    cols = [f"c{k}" for k in range(9)]
    for trial in range(25):
        rows = []
        for _ in range(rng.randrange(1, 12)):
            row = {}
            for c in cols:
                if rng.random() < 0.4:
                    row[c] = gq(rng.randrange(-4, 5), rng.randrange(-2, 3))
            rows.append(row)
        sys = build(cols, rows)
        red, rank = sys.rref()
        red2, rank2 = red.rref()
        assert rank == rank2
        assert red.rows == red2.rows
        assert rank + len(sys.kernel()) == len(cols)


def test_rref_independent_of_row_order():
    cols = ["a", "b", "c", "d"]
    rows = [
        {"a": 2, "b": gq(0, 1), "d": 1},
        {"b": 1, "c": gq(3)},
        {"a": 1, "c": gq(-1), "d": gq("1/2")},
    ]
    s1 = build(cols, rows)
    s2 = build(cols, rows[::-1])
    r1, _ = s1.rref()
    r2, _ = s2.rref()
    assert r1.rows == r2.rows and r1.pivots == r2.pivots


def test_row_space_comparisons():
    cols = ["a", "b", "c"]
    base = [{"a": 1, "b": 2}, {"b": 1, "c": gq(0, 1)}]
    sys = build(cols, base)
    permuted = build(cols, base[::-1])
    assert row_space_equal(sys, permuted)
    scaled = build(cols, [{k: gq(2, 1) * v if hasattr(v, "re") else gq(2, 1) * gq(v) for k, v in r.items()} for r in base])
    assert row_space_equal(sys, scaled)
    bigger = build(cols, base + [{"c": 1}])
    assert not row_space_equal(sys, bigger)
    assert row_space_contains(bigger, sys) == []
    missing = row_space_contains(sys, bigger)
    assert missing == ["q2"]


def test_serialization_roundtrip():
    cols = ["Id*v1", "E0*v1", "F12*v135"]
    sys = build(cols, [{"Id*v1": gq("1/2", "-3/4"), "F12*v135": gq(0, 1)}, {"E0*v1": 5}])
    text = dump_system(sys)
    back = load_system(text)
    assert back.columns == sys.columns
    assert back.rows == sys.rows
    assert back.row_ids == sys.row_ids
