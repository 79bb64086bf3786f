"""Weights for cso(6) and concrete modules: labels vs tuples, the family
tables, the Clifford half-spin construction, and cyclic highest-weight
extraction inside tensor products."""

from fractions import Fraction

from ck6.repn import half_spin_reps, irrep, vector_rep, weyl_dim
from ck6.weights import (
    Weight,
    degenerate_table,
    family_weight,
    singular_family_instances,
    singular_weight,
)

print("== weights and labels ==")
w = Weight.from_labels(Fraction(9, 2), 0, 1, 0)
print("labels (9/2; 0,1,0)  ->  tuple", w)
print("dominant integral?      ", w.dominant_integral())
print("a non-dominant tuple:   ", Weight(Fraction(9, 2), (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2))).dominant_integral())

print("\n== the singular-vector families ==")
for fam, params in singular_family_instances(2):
    print(f"  family {fam}{list(params)}: module {family_weight(fam, params)}"
          f"  ->  singular weight {singular_weight(fam, params)}")

print("\n== degenerate highest weights with small labels ==")
for v in degenerate_table(1):
    print("  ", v)

print("\n== concrete modules ==")
rep = vector_rep()
print("vector rep: dim", rep.dim, " hw vector", rep.hw_vector[:3], "...")
la2, la3 = half_spin_reps()
print("half-spins: dims", la2.dim, la3.dim, " weights of the la3 half:", la3.basis_weights)
for labels in [(1, 0, 0), (0, 2, 0), (1, 1, 0)]:
    mu = Weight.from_labels(0, *labels).mu
    rep = irrep(Weight.from_labels(0, *labels))
    print(f"irrep labels {labels}: dim {rep.dim} (Weyl formula: {weyl_dim(mu)})")
