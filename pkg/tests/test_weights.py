from fractions import Fraction

import pytest

from ck6.weights import (
    Weight,
    degenerate_table,
    family_degree,
    family_weight,
    is_degenerate,
    matching_families,
    singular_family_instances,
    singular_weight,
)

H = Fraction(1, 2)


def test_label_roundtrip_small_grid():
    for n1 in range(0, 5):
        for n2 in range(0, 5):
            for n3 in range(0, 5):
                w = Weight.from_labels(Fraction(7, 3), n1, n2, n3)
                n0, m1, m2, m3 = w.labels
                assert (m1, m2, m3) == (n1, n2, n3)
                assert Weight.from_labels(n0, m1, m2, m3) == w


def test_dominant_integral_examples():
    assert Weight(Fraction(9, 2), (H, H, -H)).dominant_integral()
    assert not Weight(Fraction(9, 2), (H, -H, H)).dominant_integral()
    assert Weight(0, (0, 0, 0)).dominant_integral()


def test_family_weight_examples():
    assert family_weight("b", (2,)) == Weight(5, (1, 1, -1))
    assert singular_weight("b", (2,)) == Weight(2, (0, 0, 0))
    assert family_weight("f", (0, 0)) == Weight(0, (0, 0, 0))
    assert singular_weight("f", (0, 0)) == Weight(-1, (1, 0, 0))
    assert family_weight("c", (0,)) == Weight(2, (0, 0, 0))
    assert singular_weight("c", (0,)) == Weight(-1, (1, 1, 1))
    assert family_weight("a") == Weight(Fraction(9, 2), (H, H, -H))


def test_family_parameter_ranges():
    with pytest.raises(ValueError):
        family_weight("b", (1,))
    with pytest.raises(ValueError):
        family_weight("d", (0, 2))
    with pytest.raises(ValueError):
        family_weight("e", (0, 1))
    family_weight("f", (0, 0))  # boundary allowed


def test_every_family_weight_is_dominant_integral():
    for fam, params in singular_family_instances(4):
        assert family_weight(fam, params).dominant_integral()


def test_mu0_shift_is_family_degree_for_b_to_f():
    for fam, params in singular_family_instances(4):
        if fam == "a":
            continue
        shift = singular_weight(fam, params).mu0 - family_weight(fam, params).mu0
        assert shift == family_degree(fam)


def test_degenerate_table_examples():
    t1 = degenerate_table(1)
    assert Weight.from_labels(5, 1, 0, 0) in t1
    t0 = degenerate_table(0)
    assert Weight.from_labels(2, 0, 0, 0) in t0
    assert Weight.from_labels(0, 0, 0, 0) in t0
    # no degenerate weight has labels (3; 0,0,0)
    assert all(w.labels != (3, 0, 0, 0) for w in degenerate_table(6))


def test_degenerate_table_matches_family_union():
    table = {w for w in degenerate_table(4)}
    fams = {family_weight(f, p) for f, p in singular_family_instances(4)}
    # every family weight is degenerate; the table may reach further out in
    # parameter range at the same bound
    assert fams <= table
    for w in table:
        assert is_degenerate(w)
        assert matching_families(w), f"{w} listed degenerate but matches no family"


def test_matching_families_negative_control():
    w = Weight.from_labels(1, 1, 0, 0)
    assert matching_families(w) == []
    assert not is_degenerate(w)


def test_parse_str_roundtrip():
    for text in ["(9/2; 1/2, 1/2, -1/2)", "(0; 0, 0, 0)", "(-3/2; 2, 1, -1)"]:
        w = Weight.parse(text)
        assert Weight.parse(str(w)) == w
