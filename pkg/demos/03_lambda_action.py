"""The lambda-action on induced modules: both formulas, their conjugation
by the signed Hodge dual, and the coefficient decomposition feeding the
singularity conditions."""

from fractions import Fraction

from ck6.grassmann import GrassmannElement, mask_of
from ck6.induced import (
    ConcreteSpace,
    InducedVector,
    decompose,
    lambda_action_direct,
    lambda_action_dual,
    t_conjugate,
    t_conjugate_inverse,
)
from ck6.repn import vector_rep
from ck6.scalars import ONE, ZERO

space = ConcreteSpace(vector_rep(e00_scalar=Fraction(7, 2)))
v = tuple(ONE if j == 0 else ZERO for j in range(6))

print("== the dualised action ==")
m = InducedVector(space, {(0, mask_of([1])): v})
for j, out in lambda_action_dual(GrassmannElement.monomial([1]), m).items():
    print(f"  la^{j}:", out)

print("\n== the direct action on the vacuum ==")
m0 = InducedVector(space, {(0, 0): v})
for j, out in lambda_action_direct(GrassmannElement.one(), m0).items():
    print(f"  la^{j}:", out)

print("\n== conjugation equivalence ==")
f = GrassmannElement.monomial([2, 5])
m = InducedVector(space, {(0, mask_of([1, 3, 4])): v})
dual = lambda_action_dual(f, m)
via_t = {
    j: t_conjugate(u)
    for j, u in lambda_action_direct(f, t_conjugate_inverse(m)).items()
}
via_t = {j: u for j, u in via_t.items() if not u.is_zero()}
print("  dual action == T . direct . T^-1 :", dual == via_t)

print("\n== the a/b/B/C decomposition ==")
dec = decompose(GrassmannElement.monomial([1]), InducedVector(space, {(0, mask_of([1])): v}))
print("  a =", dec.a)
print("  b =", dec.b)
print("  B =", dec.B)
print("  C =", dec.C)
