"""Weight bookkeeping for cso(6) = C E00 + so(6).

A weight is the 1+3-tuple (mu0; mu1, mu2, mu3) of eigenvalues on
(E00, H1, H2, H3).  The label form (n0, n1, n2, n3) writes the so(6) part
over the fundamental weights la1 = eps1, la2 = (eps1+eps2-eps3)/2,
la3 = (eps1+eps2+eps3)/2:

    mu1 = n1 + n2/2 + n3/2,  mu2 = n2/2 + n3/2,  mu3 = -n2/2 + n3/2.

The family tables describe the highest weights carrying singular vectors
and the degenerate induced modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class Weight:
    mu0: Fraction
    mu: tuple

    def __init__(self, mu0, mu):
        object.__setattr__(self, "mu0", Fraction(mu0))
        object.__setattr__(self, "mu", tuple(Fraction(m) for m in mu))
        if len(self.mu) != 3:
            raise ValueError("so(6) part must have three components")
        for m in self.mu:
            if (2 * m).denominator != 1:
                raise ValueError(f"2*mu_i must be integral, got {m}")

    # -- label conversion -------------------------------------------------

    @property
    def labels(self):
        """(n0, n1, n2, n3) with n0 = mu0."""
        m1, m2, m3 = self.mu
        return (self.mu0, m1 - m2, m2 - m3, m2 + m3)

    @classmethod
    def from_labels(cls, n0, n1, n2, n3):
        n1, n2, n3 = Fraction(n1), Fraction(n2), Fraction(n3)
        half = Fraction(1, 2)
        return cls(n0, (n1 + half * n2 + half * n3, half * n2 + half * n3, -half * n2 + half * n3))

    def dominant_integral(self) -> bool:
        _, n1, n2, n3 = self.labels
        return all(n.denominator == 1 and n >= 0 for n in (n1, n2, n3))

    # -- text form ---------------------------------------------------------

    def __str__(self):
        frac = lambda f: str(f)
        return f"({frac(self.mu0)}; {frac(self.mu[0])}, {frac(self.mu[1])}, {frac(self.mu[2])})"

    @classmethod
    def parse(cls, text: str) -> "Weight":
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"weight must look like '(n0; m1, m2, m3)': {text!r}")
        head, _, tail = s[1:-1].partition(";")
        parts = [p.strip() for p in tail.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three so(6) components in {text!r}")
        return cls(Fraction(head.strip()), tuple(Fraction(p) for p in parts))


# ---------------------------------------------------------------------------
# singular-vector families (a)-(f) and degenerate families A-C
# ---------------------------------------------------------------------------

#: family -> (parameter names, degree of the singular vector)
SINGULAR_FAMILIES = {
    "a": ((), -5),
    "b": (("n",), -3),
    "c": (("n",), -3),
    "d": (("n1", "n2"), -1),
    "e": (("n2", "n3"), -1),
    "f": (("n1", "n3"), -1),
}


def _check_params(fam: str, params: tuple):
    names, _ = SINGULAR_FAMILIES[fam]
    if len(params) != len(names):
        raise ValueError(f"family {fam} takes {len(names)} parameter(s)")
    for p in params:
        if p != int(p) or p < 0:
            raise ValueError(f"family {fam} parameters must be nonnegative integers")
    params = tuple(int(p) for p in params)
    if fam == "b" and params[0] < 2:
        raise ValueError("family b requires n >= 2")
    if fam == "d" and params[0] < 1:
        raise ValueError("family d requires n1 >= 1")
    if fam == "e" and params[0] < 1:
        raise ValueError("family e requires n2 >= 1")
    return params


def family_weight(fam: str, params=()) -> Weight:
    """Highest weight of the module carrying the family's singular vector."""
    params = _check_params(fam, tuple(params))
    h = Fraction(1, 2)
    if fam == "a":
        return Weight.from_labels(Fraction(9, 2), 0, 1, 0)
    if fam == "b":
        (n,) = params
        return Weight.from_labels(h * n + 4, 0, n, 0)
    if fam == "c":
        (n,) = params
        return Weight.from_labels(-h * n + 2, 0, 0, n)
    if fam == "d":
        n1, n2 = params
        return Weight.from_labels(n1 + h * n2 + 4, n1, n2, 0)
    if fam == "e":
        n2, n3 = params
        return Weight.from_labels(h * n2 - h * n3 + 2, 0, n2, n3)
    if fam == "f":
        n1, n3 = params
        return Weight.from_labels(-(n1 + h * n3), n1, 0, n3)
    raise ValueError(f"unknown family {fam!r}")


def singular_weight(fam: str, params=()) -> Weight:
    """Weight of the singular vector itself, per the classification."""
    params = _check_params(fam, tuple(params))
    h = Fraction(1, 2)
    if fam == "a":
        return Weight.from_labels(Fraction(-1, 2), 0, 0, 1)
    if fam == "b":
        (n,) = params
        return Weight.from_labels(h * n + 1, 0, n - 2, 0)
    if fam == "c":
        (n,) = params
        return Weight.from_labels(-h * n - 1, 0, 0, n + 2)
    if fam == "d":
        n1, n2 = params
        return Weight.from_labels(n1 + h * n2 + 3, n1 - 1, n2, 0)
    if fam == "e":
        n2, n3 = params
        return Weight.from_labels(h * n2 - h * n3 + 1, 0, n2 - 1, n3 + 1)
    if fam == "f":
        n1, n3 = params
        return Weight.from_labels(-(n1 + h * n3 + 1), n1 + 1, 0, n3)
    raise ValueError(f"unknown family {fam!r}")


def family_degree(fam: str) -> int:
    return SINGULAR_FAMILIES[fam][1]


def singular_family_instances(bound: int):
    """All (family, params) with parameter sum <= bound."""
    out = [("a", ())]
    for n in range(2, bound + 1):
        out.append(("b", (n,)))
    for n in range(0, bound + 1):
        out.append(("c", (n,)))
    for n1 in range(1, bound + 1):
        for n2 in range(0, bound - n1 + 1):
            out.append(("d", (n1, n2)))
    for n2 in range(1, bound + 1):
        for n3 in range(0, bound - n2 + 1):
            out.append(("e", (n2, n3)))
    for n1 in range(0, bound + 1):
        for n3 in range(0, bound - n1 + 1):
            out.append(("f", (n1, n3)))
    return out


def matching_families(w: Weight, degree=None):
    """(family, params) pairs whose module weight equals w, filtered by degree.

    The parameters are recovered from the labels, so the scan is exhaustive.
    """
    n0, n1, n2, n3 = w.labels
    if not w.dominant_integral():
        return []
    n1, n2, n3 = int(n1), int(n2), int(n3)
    out = []

    def consider(fam, params):
        if degree is not None and family_degree(fam) != degree:
            return
        try:
            fw = family_weight(fam, params)
        except ValueError:
            return
        if fw == w:
            out.append((fam, params))

    if (n1, n2, n3) == (0, 1, 0):
        consider("a", ())
    if n1 == 0 and n3 == 0:
        consider("b", (n2,))
    if n1 == 0 and n2 == 0:
        consider("c", (n3,))
    if n3 == 0:
        consider("d", (n1, n2))
    if n1 == 0:
        consider("e", (n2, n3))
    if n2 == 0:
        consider("f", (n1, n3))
    return out


def degenerate_table(max_params: int):
    """Deduplicated degenerate highest weights with parameter sums <= bound."""
    h = Fraction(1, 2)
    seen = set()
    out = []

    def push(w):
        if w not in seen:
            seen.add(w)
            out.append(w)

    for n1 in range(0, max_params + 1):
        for n2 in range(0, max_params - n1 + 1):
            if n1 >= 1 or n2 >= 1:
                push(Weight.from_labels(n1 + h * n2 + 4, n1, n2, 0))
    for n2 in range(0, max_params + 1):
        for n3 in range(0, max_params - n2 + 1):
            push(Weight.from_labels(h * n2 - h * n3 + 2, 0, n2, n3))
    for n1 in range(0, max_params + 1):
        for n3 in range(0, max_params - n1 + 1):
            push(Weight.from_labels(-(n1 + h * n3), n1, 0, n3))
    return out


def is_degenerate(w: Weight) -> bool:
    """Membership in the degenerate list, decided from the label patterns."""
    n0, n1, n2, n3 = w.labels
    if not w.dominant_integral():
        return False
    h = Fraction(1, 2)
    if n3 == 0 and (n1 >= 1 or n2 >= 1) and n0 == n1 + h * n2 + 4:
        return True
    if n1 == 0 and n0 == h * n2 - h * n3 + 2:
        return True
    if n2 == 0 and n0 == -(n1 + h * n3):
        return True
    return False
