"""Explicit singular vectors: build each family's vector inside a concrete
module, check the conditions, read off its weight, and cross-check with
the brute-force kernel count."""

from ck6.classify import (
    build_singular_vector,
    check_singular,
    kernel_singular,
    weight_of,
)
from ck6.weights import family_weight, singular_weight

CASES = [
    ("f", (0, 0)),
    ("f", (1, 0)),
    ("e", (1, 0)),
    ("d", (1, 0)),
    ("c", (0,)),
    ("b", (2,)),
    ("a", ()),
]

for fam, params in CASES:
    m, rep = build_singular_vector(fam, params)
    ok = check_singular(m)
    wt = weight_of(m)
    print(f"family {fam}{list(params)}: module {family_weight(fam, params)} (dim {rep.dim})")
    print(f"   singular: {ok};  weight {wt}  (table: {singular_weight(fam, params)})")

print("\nbrute-force cross-check at the degree -5 weight:")
w = family_weight("a", ())
for degree in (-5, -4, -3):
    dim, _ = kernel_singular(w, degree)
    print(f"   kernel dimension at degree {degree}: {dim}")
print("(the -3 count is the excluded spin case; the -4 count is the generic impossibility)")
