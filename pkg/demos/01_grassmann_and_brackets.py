"""A tour of the algebraic ground floor: the Grassmann algebra Lambda(6),
the conformal lambda-bracket, the annihilation bracket, and the integration
operator that carves E(1,6) out of K(1,6)+."""

from ck6.grassmann import GrassmannElement, hodge, partial, wedge
from ck6.kalgebra import (
    ConformalElement,
    KElement,
    a_operator,
    ann_bracket,
    e16_basis_of_degree,
    is_in_e16,
    lambda_bracket,
)
from ck6.scalars import gq

mono = GrassmannElement.monomial

print("== Lambda(6) ==")
print("xi1 ^ xi2          =", wedge(mono([1]), mono([2])))
print("xi2 ^ xi1          =", wedge(mono([2]), mono([1])))
print("xi13 ^ xi24        =", wedge(mono([1, 3]), mono([2, 4])))
print("d2 (xi1 xi2)       =", partial(2, mono([1, 2])))
print("hodge(xi2)         =", hodge(mono([2])))
print("xi2 ^ hodge(xi2)   =", wedge(mono([2]), hodge(mono([2]))))

print("\n== the conformal lambda-bracket of K6 ==")
one = ConformalElement.monomial(0, [])
xi1 = ConformalElement.monomial(0, [1])
print("[1 la 1]    =", lambda_bracket(one, one))
print("[xi1 la xi1] =", lambda_bracket(xi1, xi1))

print("\n== the annihilation bracket of K(1,6)+ ==")
t = KElement.monomial(1, [])
print("[1, t]      =", ann_bracket(KElement.monomial(0, []), t))
print("[t, xi3]    =", ann_bracket(t, KElement.monomial(0, [3])))
print("[xi3, xi3]  =", ann_bracket(KElement.monomial(0, [3]), KElement.monomial(0, [3])))

print("\n== the operator A and E(1,6) ==")
print("A(xi123)    =", a_operator(KElement.monomial(0, [1, 2, 3])))
print("A(t xi12)   =", a_operator(KElement.monomial(1, [1, 2])))
f = KElement.monomial(0, [1, 2, 3])
print("xi123 in E(1,6)?               ", is_in_e16(f))
g = f - KElement.monomial(0, [4, 5, 6]).scale(gq(0, 1))
print("xi123 - i xi456 in E(1,6)?     ", is_in_e16(g))
print("E(1,6) graded dimensions -2..2:",
      [len(e16_basis_of_degree(d)) for d in range(-2, 3)])
