"""The Grassmann superalgebra Lambda(n) in odd generators xi_1..xi_n.

Monomials xi_I are stored canonically with ascending indices, encoded as an
n-bit mask (bit k-1 set  <=>  k in I).  All signs come from inversion counts
against that canonical order.  Derivatives are left derivatives.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, _coerce


def mask_of(indices) -> int:
    """Bitmask of a set of 1-based indices."""
    m = 0
    for i in indices:
        b = 1 << (i - 1)
        if m & b:
            raise ValueError(f"repeated index {i}")
        m |= b
    return m


def indices_of(mask: int) -> tuple:
    """Ascending 1-based indices of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def order_of(mask: int) -> int:
    return bin(mask).count("1")


def wedge_sign(left: int, right: int) -> int:
    """Sign of xi_L xi_R relative to xi_{L|R}; 0 if the masks intersect.

    Counts pairs (a in L, b in R) with a > b.
    """
    if left & right:
        return 0
    inversions = 0
    m = right
    pos = 0
    while m:
        if m & 1:
            inversions += order_of(left >> (pos + 1))
        m >>= 1
        pos += 1
    return -1 if inversions & 1 else 1


def partial_sign(mask: int, i: int) -> int:
    """Sign of d/dxi_i applied to xi_mask; 0 if i not in mask."""
    b = 1 << (i - 1)
    if not (mask & b):
        return 0
    below = order_of(mask & (b - 1))
    return -1 if below & 1 else 1


class GrassmannElement:
    """Sparse element of Lambda(n): a map from index masks to scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int = 6, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for mask, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[mask] = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def monomial(cls, indices, n: int = 6, coeff=1) -> "GrassmannElement":
        return cls(n, {mask_of(indices): coeff})

    @classmethod
    def one(cls, n: int = 6) -> "GrassmannElement":
        return cls(n, {0: ONE})

    @classmethod
    def zero(cls, n: int = 6) -> "GrassmannElement":
        return cls(n)

    # -- vector space ops ------------------------------------------------

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        self._check(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            s = terms.get(mask, ZERO) + c
            if s:
                terms[mask] = s
            else:
                terms.pop(mask, None)
        out = GrassmannElement(self.n)
        out.terms = terms
        return out

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def __neg__(self) -> "GrassmannElement":
        out = GrassmannElement(self.n)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def scale(self, c) -> "GrassmannElement":
        c = _coerce(c)
        out = GrassmannElement(self.n)
        if c:
            out.terms = {m: c * v for m, v in self.terms.items()}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted((m, c.re, c.im) for m, c in self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("mixed Grassmann algebras")

    # -- grading ----------------------------------------------------------

    def is_homogeneous(self) -> bool:
        orders = {order_of(m) for m in self.terms}
        return len(orders) <= 1

    def order(self) -> int:
        """Common order |f| of a homogeneous element (0 for the zero element)."""
        orders = {order_of(m) for m in self.terms}
        if len(orders) > 1:
            raise ValueError("element is not homogeneous")
        return orders.pop() if orders else 0

    def parity(self) -> int:
        p = {order_of(m) & 1 for m in self.terms}
        if len(p) > 1:
            raise ValueError("element has mixed parity")
        return p.pop() if p else 0

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mask in sorted(self.terms, key=lambda m: (order_of(m), m)):
            name = "1" if mask == 0 else "xi" + "".join(map(str, indices_of(mask)))
            bits.append(f"({self.terms[mask]})*{name}")
        return " + ".join(bits)


def wedge(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    """Product in Lambda(n), bilinear over the monomial sign rule."""
    f._check(g)
    terms = {}
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            s = wedge_sign(mf, mg)
            if not s:
                continue
            mask = mf | mg
            c = cf * cg
            if s < 0:
                c = -c
            acc = terms.get(mask)
            acc = c if acc is None else acc + c
            if acc:
                terms[mask] = acc
            else:
                terms.pop(mask, None)
    out = GrassmannElement(f.n)
    out.terms = terms
    return out


def partial(i: int, f: GrassmannElement) -> GrassmannElement:
    """Left derivative d/dxi_i."""
    if not 1 <= i <= f.n:
        raise IndexError(f"index {i} out of range 1..{f.n}")
    b = 1 << (i - 1)
    terms = {}
    for mask, c in f.terms.items():
        s = partial_sign(mask, i)
        if not s:
            continue
        terms[mask ^ b] = c if s > 0 else -c
    out = GrassmannElement(f.n)
    out.terms = terms
    return out


def hodge(f: GrassmannElement) -> GrassmannElement:
    """Hodge dual, normalised so that xi_I * hodge(xi_I) = xi_1..xi_n."""
    full = (1 << f.n) - 1
    terms = {}
    for mask, c in f.terms.items():
        dual = full ^ mask
        s = wedge_sign(mask, dual)
        terms[dual] = c if s > 0 else -c
    out = GrassmannElement(f.n)
    out.terms = terms
    return out


def monomials(n: int = 6, orders=None):
    """All monomial masks, ascending in (order, lexicographic index tuple)."""
    masks = sorted(range(1 << n), key=lambda m: (order_of(m), indices_of(m)))
    if orders is None:
        return masks
    wanted = set(orders)
    return [m for m in masks if order_of(m) in wanted]
