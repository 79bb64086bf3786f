import itertools

import pytest

from ck6.grassmann import (
    GrassmannElement,
    hodge,
    indices_of,
    mask_of,
    monomials,
    order_of,
    partial,
    wedge,
)
from ck6.scalars import gq


def mono(*idx, n=6):
    return GrassmannElement.monomial(idx, n=n)


def test_wedge_sorted_and_transposed():
    assert wedge(mono(1), mono(2)) == mono(1, 2)
    assert wedge(mono(2), mono(1)) == mono(1, 2).scale(-1)
    assert wedge(mono(1), mono(1)).is_zero()


def bubble_sign(seq):
    """Oracle: sign of the permutation sorting seq, by explicit bubble sort."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign


def test_wedge_against_bubble_sort_oracle():
    # xi_13 ^ xi_24 = -xi_1234 per the inversion count
    assert wedge(mono(1, 3), mono(2, 4)) == mono(1, 2, 3, 4).scale(-1)
    for left in itertools.combinations(range(1, 7), 2):
        for right in itertools.combinations(range(1, 7), 3):
            got = wedge(mono(*left), mono(*right))
            if set(left) & set(right):
                assert got.is_zero()
            else:
                expect = mono(*sorted(left + right)).scale(bubble_sign(left + right))
                assert got == expect


def test_wedge_anticommutativity_all_monomials():
    ms = monomials(6)
    for a in ms:
        for b in ms:
            f = GrassmannElement(6, {a: 1})
            g = GrassmannElement(6, {b: 1})
            sign = -1 if (order_of(a) & 1) and (order_of(b) & 1) else 1
            assert wedge(f, g) == wedge(g, f).scale(sign)


def test_partial_examples():
    assert partial(2, mono(1, 2)) == mono(1).scale(-1)
    assert partial(3, mono(1, 2)).is_zero()
    # Leibniz cross-check: d1 (xi_1 ^ xi_23) = xi_23
    assert partial(1, wedge(mono(1), mono(2, 3))) == mono(2, 3)


def test_partial_leibniz_rule():
    ms = monomials(6)
    for a in ms[:32]:
        for b in ms[:32]:
            f = GrassmannElement(6, {a: 1})
            g = GrassmannElement(6, {b: 1})
            for i in range(1, 7):
                lhs = partial(i, wedge(f, g))
                sign = -1 if order_of(a) & 1 else 1
                rhs = wedge(partial(i, f), g) + wedge(f, partial(i, g)).scale(sign)
                assert lhs == rhs


def test_partials_anticommute_and_square_zero():
    for m in monomials(6):
        f = GrassmannElement(6, {m: 1})
        for i in range(1, 7):
            assert partial(i, partial(i, f)).is_zero()
            for j in range(1, 7):
                if i != j:
                    assert partial(i, partial(j, f)) == partial(j, partial(i, f)).scale(-1)


def test_partial_out_of_range():
    with pytest.raises(IndexError):
        partial(7, mono(1))


def test_hodge_examples():
    assert hodge(GrassmannElement.one()) == mono(1, 2, 3, 4, 5, 6)
    assert hodge(mono(1, 2)) == mono(3, 4, 5, 6)
    assert hodge(mono(2)) == mono(1, 3, 4, 5, 6).scale(-1)


def test_hodge_defining_property_exhaustive():
    top = mono(1, 2, 3, 4, 5, 6)
    for m in monomials(6):
        f = GrassmannElement(6, {m: 1})
        assert wedge(f, hodge(f)) == top


def test_hodge_twice_sign():
    for m in monomials(6):
        f = GrassmannElement(6, {m: 1})
        k = order_of(m)
        sign = -1 if (k * (6 - k)) & 1 else 1
        assert hodge(hodge(f)) == f.scale(sign)


def test_small_n_sign_logic():
    # n = 3: xi_2 dual is xi_13 with sign -1 (one inversion)
    f = GrassmannElement.monomial([2], n=3)
    assert hodge(f) == GrassmannElement(3, {mask_of([1, 3]): gq(-1)})
    assert indices_of(mask_of([1, 3])) == (1, 3)


def test_monomials_order_is_lexicographic_within_order():
    ms = monomials(6, orders=[2])
    as_tuples = [indices_of(m) for m in ms]
    assert as_tuples == sorted(as_tuples)
    assert as_tuples[:6] == [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3)]
