from fractions import Fraction

import pytest

from ck6.kalgebra import KElement, so6_structure
from ck6.repn import (
    ConcreteRep,
    apply_element,
    half_spin_reps,
    irrep,
    mat_apply,
    raising_stability_check,
    tensor,
    to_weight_basis,
    vec_is_zero,
    vec_scale,
    vector_rep,
    verify_so6_commutators,
    weyl_dim,
)
from ck6.scalars import GaussianRational, ONE, ZERO
from ck6.weights import Weight

H = Fraction(1, 2)


def test_vector_rep_basics():
    rep = vector_rep()
    assert rep.dim == 6
    # H1 = i F12 has eigenvalues {1,-1,0,0,0,0}
    h1 = rep.h_matrix(1)
    seen = []
    wb = to_weight_basis(rep)
    for k, w in enumerate(wb.basis_weights):
        v = tuple(ONE if j == k else ZERO for j in range(6))
        hv = mat_apply(wb.h_matrix(1), v)
        assert hv == vec_scale(v, w[0])
        seen.append(w[0])
    assert sorted(seen) == [-1, 0, 0, 0, 0, 1]
    # highest weight vector e1 - i e2 is annihilated by all Borel generators
    for m in rep.borel_matrices():
        assert vec_is_zero(mat_apply(m, rep.hw_vector))


def test_half_spin_reps():
    la2, la3 = half_spin_reps()
    assert la2.dim == 4 and la3.dim == 4
    assert la2.highest_weight.mu == (H, H, -H)
    assert la3.highest_weight.mu == (H, H, H)
    want_la3 = {w for w in la3.basis_weights}
    assert want_la3 == {
        (H, H, H), (H, -H, -H), (-H, H, -H), (-H, -H, H),
    }
    # weight multiplicities are all 1
    assert len(la3.basis_weights) == len(set(la3.basis_weights))
    # (1/2,-3/2,1/2) occurs in neither spin summand
    bad = (H, Fraction(-3, 2), H)
    assert bad not in la2.basis_weights and bad not in la3.basis_weights
    for rep in (la2, la3):
        for m in rep.borel_matrices():
            assert vec_is_zero(mat_apply(m, rep.hw_vector))


def test_tensor_dim_and_weight_additivity():
    v = to_weight_basis(vector_rep())
    vv = tensor(v, v)
    assert vv.dim == 36
    assert vv.basis_weights[0] == (2, 0, 0)  # hw (x) hw
    # vector (x) vector contains a Borel-annihilated vector of weight (2,0,0)
    from ck6.repn import highest_weight_vectors

    hws = highest_weight_vectors(vv, (2, 0, 0))
    assert len(hws) == 1


def test_weyl_dim_oracle():
    assert weyl_dim((1, 0, 0)) == 6
    assert weyl_dim((H, H, H)) == 4
    assert weyl_dim((H, H, -H)) == 4
    assert weyl_dim((1, 1, -1)) == 10
    assert weyl_dim((0, 0, 0)) == 1
    assert weyl_dim((1, 1, 0)) == 15  # adjoint
    assert weyl_dim((1, 1, 1)) == 10  # 2*la3, the symmetric square of a spinor


def test_irrep_examples():
    rep = irrep(Weight(5, (1, 1, -1)))
    assert rep.dim == 10
    assert rep.e00_scalar == 5
    triv = irrep(Weight(2, (0, 0, 0)))
    assert triv.dim == 1 and triv.e00_scalar == 2
    spin = irrep(Weight(Fraction(9, 2), (H, H, -H)))
    assert spin.dim == 4
    assert spin.e00_scalar == Fraction(9, 2)


@pytest.mark.parametrize(
    "labels",
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (1, 1, 0), (0, 1, 1)],
)
def test_irrep_dimensions_against_weyl(labels):
    w = Weight.from_labels(0, *labels)
    rep = irrep(w)
    assert rep.dim == weyl_dim(w.mu)
    # commutators hold exhaustively in the restricted module
    verify_so6_commutators(rep.action)
    # weight multiplicities sum to the dimension
    assert len(rep.basis_weights) == rep.dim
    assert raising_stability_check(rep)
    # hw vector is Borel-annihilated and of the right weight
    for m in rep.borel_matrices():
        assert vec_is_zero(mat_apply(m, rep.hw_vector))
    assert rep.cartan_weight_of(rep.hw_vector) == w.mu


def test_irrep_bound():
    with pytest.raises(ValueError):
        irrep(Weight(0, (4, 0, 0)))
    with pytest.raises(ValueError):
        irrep(Weight(0, (1, H, -H)))  # not dominant integral: labels 1/2


def test_apply_element():
    rep = vector_rep(e00_scalar=3)
    so6 = so6_structure()
    hw = rep.hw_vector
    assert mat_apply(rep.element_matrix(so6.cartan[0]), hw) == hw
    for token in ("e12", "e13", "e23", "em12", "em13", "em23"):
        assert vec_is_zero(apply_element(rep, so6.roots[token], hw))
    t = KElement(6, {(1, 0): 1})
    assert apply_element(rep, t, hw) == vec_scale(hw, 3)
    with pytest.raises(ValueError):
        apply_element(rep, KElement(6, {(0, 0b111): 1}), hw)
