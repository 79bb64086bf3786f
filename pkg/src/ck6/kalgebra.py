"""The conformal algebra K6, its annihilation algebra K(1,6)+, the
integration operator cutting out E(1,6), and the so(6) Cartan-Weyl data.

Elements of K(1,6)+ are polynomials in an even t times Grassmann monomials;
elements of K6 are C[d]-combinations of Grassmann monomials (d the conformal
derivative).  All coefficients live in Q(i).
"""

from __future__ import annotations

from fractions import Fraction

from .grassmann import (
    GrassmannElement,
    indices_of,
    mask_of,
    monomials,
    order_of,
    partial_sign,
    wedge_sign,
)
from .scalars import GaussianRational, ZERO, _coerce

# ---------------------------------------------------------------------------
# K(1,6)+ elements: sparse maps (t-power, xi-mask) -> scalar
# ---------------------------------------------------------------------------


class KElement:
    """Element of Lambda(1,n)+ = C[t] (x) Lambda(n)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int = 6, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = _coerce(c)
                if c:
                    m, mask = key
                    if m < 0:
                        raise ValueError("negative t-power")
                    self.terms[(m, mask)] = c

    @classmethod
    def monomial(cls, t_power, indices, n=6, coeff=1):
        return cls(n, {(t_power, mask_of(indices)): coeff})

    @classmethod
    def zero(cls, n=6):
        return cls(n)

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, ZERO) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = KElement(self.n)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _coerce(c)
        out = KElement(self.n)
        if c:
            out.terms = {k: c * v for k, v in self.terms.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, KElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(((k, c.re, c.im) for k, c in self.terms.items()))))

    def is_zero(self):
        return not self.terms

    def multiply(self, other: "KElement") -> "KElement":
        """Associative product: t-powers add, xi-parts wedge."""
        terms = {}
        for (ma, xa), ca in self.terms.items():
            for (mb, xb), cb in other.terms.items():
                s = wedge_sign(xa, xb)
                if not s:
                    continue
                key = (ma + mb, xa | xb)
                c = ca * cb
                if s < 0:
                    c = -c
                acc = terms.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        out = KElement(self.n)
        out.terms = terms
        return out

    def partial_t(self) -> "KElement":
        terms = {}
        for (m, mask), c in self.terms.items():
            if m > 0:
                terms[(m - 1, mask)] = c * m
        out = KElement(self.n)
        out.terms = terms
        return out

    def integrate_t(self) -> "KElement":
        """(d/dt)^(-1): sends t^m to t^(m+1)/(m+1); integration constant 0."""
        terms = {}
        for (m, mask), c in self.terms.items():
            terms[(m + 1, mask)] = c * Fraction(1, m + 1)
        out = KElement(self.n)
        out.terms = terms
        return out

    def partial_xi(self, i: int) -> "KElement":
        terms = {}
        b = 1 << (i - 1)
        for (m, mask), c in self.terms.items():
            s = partial_sign(mask, i)
            if s:
                terms[(m, mask ^ b)] = c if s > 0 else -c
        out = KElement(self.n)
        out.terms = terms
        return out

    def grassmann_part(self, t_power: int) -> GrassmannElement:
        out = GrassmannElement(self.n)
        out.terms = {mask: c for (m, mask), c in self.terms.items() if m == t_power}
        return out

    def degrees(self):
        return {2 * m + order_of(mask) - 2 for (m, mask) in self.terms}

    def degree(self):
        """Degree deg(t^m xi_I) = 2m + |I| - 2 of a homogeneous element."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("element is not graded-homogeneous")
        return degs.pop() if degs else None

    def graded_piece(self, d: int) -> "KElement":
        out = KElement(self.n)
        out.terms = {
            key: c for key, c in self.terms.items() if 2 * key[0] + order_of(key[1]) - 2 == d
        }
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (m, mask) in sorted(self.terms, key=lambda k: (k[0], order_of(k[1]), k[1])):
            name = ""
            if m:
                name += f"t^{m}" if m > 1 else "t"
            if mask:
                name += "xi" + "".join(map(str, indices_of(mask)))
            if not name:
                name = "1"
            bits.append(f"({self.terms[(m, mask)]})*{name}")
        return " + ".join(bits)


def ann_bracket(f: KElement, g: KElement) -> KElement:
    """The K(1,n)+ bracket, extended bilinearly over monomials."""
    n = f.n
    out = KElement(n)
    for (mf, xf), cf in f.terms.items():
        a = KElement(n, {(mf, xf): cf})
        pa = order_of(xf) & 1
        for (mg, xg), cg in g.terms.items():
            b = KElement(n, {(mg, xg): cg})
            term = _euler(a).multiply(b.partial_t())
            term = term - a.partial_t().multiply(_euler(b))
            cross = KElement(n)
            for i in range(1, n + 1):
                cross = cross + a.partial_xi(i).multiply(b.partial_xi(i))
            if pa:
                cross = cross.scale(-1)
            out = out + term + cross
    return out


def _euler(f: KElement) -> KElement:
    """2f - sum_i xi_i d_i f."""
    out = f.scale(2)
    for i in range(1, f.n + 1):
        xi = KElement(f.n, {(0, 1 << (i - 1)): 1})
        out = out - xi.multiply(f.partial_xi(i))
    return out


def a_operator(f: KElement) -> KElement:
    """Integration-twisted Hodge dual on K(1,6)+.

    On a monomial with d odd generators: (-1)^(d(d+1)/2) (d/dt)^(3-d) applied
    to the Hodge-dualised monomial, where negative powers integrate in t.
    """
    full = (1 << f.n) - 1
    out = KElement(f.n)
    for (m, mask), c in f.terms.items():
        d = order_of(mask)
        dual = full ^ mask
        s = wedge_sign(mask, dual)
        coeff = c if s > 0 else -c
        if (d * (d + 1) // 2) & 1:
            coeff = -coeff
        piece = KElement(f.n, {(m, dual): coeff})
        steps = 3 - d
        while steps > 0:
            piece = piece.partial_t()
            steps -= 1
        while steps < 0:
            piece = piece.integrate_t()
            steps += 1
        out = out + piece
    return out


def e16_project(f: KElement) -> KElement:
    """Image under I - iA; E(1,6) is the span of these over monomials."""
    return f - a_operator(f).scale(GaussianRational(0, 1))


def _k_basis_of_degree(d: int, n: int = 6):
    """Monomials t^m xi_I of degree d (t-power bounded by the degree)."""
    out = []
    m = 0
    while 2 * m - 2 <= d:
        k = d + 2 - 2 * m
        if 0 <= k <= n:
            for mask in monomials(n, orders=[k]):
                out.append(KElement(n, {(m, mask): 1}))
        m += 1
    return out


def e16_basis_of_degree(d: int, n: int = 6):
    """A basis of the degree-d piece of E(1,6), from projected monomials."""
    from .linalg import rref_rows

    gens = [e16_project(b) for b in _k_basis_of_degree(d, n)]
    keys = sorted({key for g in gens for key in g.terms})
    index = {k: j for j, k in enumerate(keys)}
    rows = [{index[k]: c for k, c in g.terms.items()} for g in gens if not g.is_zero()]
    pivots, reduced = rref_rows(rows, len(keys))
    basis = []
    for row in reduced:
        el = KElement(n)
        el.terms = {keys[j]: c for j, c in row.items()}
        basis.append(el)
    return basis


def is_in_e16(f: KElement) -> bool:
    """Exact span test against projected monomials, graded piece by piece."""
    from .linalg import row_reduce_against, rref_rows

    if f.is_zero():
        return True
    for d in sorted(f.degrees()):
        piece = f.graded_piece(d)
        gens = [e16_project(b) for b in _k_basis_of_degree(d, f.n)]
        keys = sorted({key for g in gens for key in g.terms} | set(piece.terms))
        index = {k: j for j, k in enumerate(keys)}
        rows = [{index[k]: c for k, c in g.terms.items()} for g in gens if not g.is_zero()]
        pivots, reduced = rref_rows(rows, len(keys))
        target = {index[k]: c for k, c in piece.terms.items()}
        if row_reduce_against(target, pivots, reduced):
            return False
    return True


# ---------------------------------------------------------------------------
# conformal elements of K6 = C[d] (x) Lambda(6) and the lambda-bracket
# ---------------------------------------------------------------------------


class ConformalElement:
    """Element of K6: sparse map (d-power, xi-mask) -> scalar."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int = 6, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def from_grassmann(cls, f: GrassmannElement, d_power: int = 0):
        return cls(f.n, {(d_power, mask): c for mask, c in f.terms.items()})

    @classmethod
    def monomial(cls, d_power, indices, n=6, coeff=1):
        return cls(n, {(d_power, mask_of(indices)): coeff})

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, ZERO) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = ConformalElement(self.n)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = _coerce(c)
        out = ConformalElement(self.n)
        if c:
            out.terms = {k: c * v for k, v in self.terms.items()}
        return out

    def apply_d(self, times: int = 1) -> "ConformalElement":
        out = ConformalElement(self.n)
        out.terms = {(dp + times, mask): c for (dp, mask), c in self.terms.items()}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ConformalElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (dp, mask) in sorted(self.terms, key=lambda k: (k[0], order_of(k[1]), k[1])):
            name = ""
            if dp:
                name += f"d^{dp}*" if dp > 1 else "d*"
            name += "1" if mask == 0 else "xi" + "".join(map(str, indices_of(mask)))
            bits.append(f"({self.terms[(dp, mask)]})*{name}")
        return " + ".join(bits)


class LambdaPoly:
    """Polynomial in lambda with coefficients in some additive value type."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for j, v in coeffs.items():
                if not v.is_zero():
                    self.coeffs[j] = v

    def coefficient(self, j, zero):
        return self.coeffs.get(j, zero)

    def degree(self):
        return max(self.coeffs, default=-1)

    def __add__(self, other):
        out = dict(self.coeffs)
        for j, v in other.coeffs.items():
            if j in out:
                s = out[j] + v
                if s.is_zero():
                    del out[j]
                else:
                    out[j] = s
            else:
                out[j] = v
        return LambdaPoly(out)

    def scale(self, c):
        return LambdaPoly({j: v.scale(c) for j, v in self.coeffs.items()})

    def shift(self, by: int):
        return LambdaPoly({j + by: v for j, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return " + ".join(f"la^{j}*[{v!r}]" for j, v in sorted(self.coeffs.items())) or "0"


def _mono_lambda_bracket(mask_f, cf, mask_g, cg, n) -> LambdaPoly:
    """[f_la g] for plain Grassmann monomials per the K_n formula."""
    r = order_of(mask_f)
    s = order_of(mask_g)
    fg_sign = wedge_sign(mask_f, mask_g)
    coeff = cf * cg
    out = {}
    if fg_sign:
        fg = ConformalElement(n, {(0, mask_f | mask_g): coeff if fg_sign > 0 else -coeff})
        if r - 2:
            out[0] = fg.apply_d().scale(r - 2)
        lam = fg.scale(r + s - 4)
        if not lam.is_zero():
            out[1] = lam
    cross = ConformalElement(n)
    for i in range(1, n + 1):
        si = partial_sign(mask_f, i)
        ti = partial_sign(mask_g, i)
        if si and ti:
            b = 1 << (i - 1)
            ws = wedge_sign(mask_f ^ b, mask_g ^ b)
            if ws:
                sign = si * ti * ws
                cross = cross + ConformalElement(
                    n, {(0, (mask_f ^ b) | (mask_g ^ b)): coeff if sign > 0 else -coeff}
                )
    if not cross.is_zero():
        if r & 1:
            cross = cross.scale(-1)
        prev = out.get(0)
        out[0] = cross if prev is None else prev + cross
    return LambdaPoly({j: v for j, v in out.items() if not v.is_zero()})


def _compose_lambda_shift(poly: LambdaPoly, a: int, b: int, n: int) -> LambdaPoly:
    """(-la)^a (la+d)^b applied to a ConformalElement-valued polynomial."""
    from math import comb

    out = LambdaPoly()
    for j, el in poly.coeffs.items():
        for k in range(b + 1):
            piece = el.apply_d(b - k).scale(comb(b, k))
            sign = -1 if a & 1 else 1
            out = out + LambdaPoly({j + a + k: piece.scale(sign)})
    return out


def lambda_bracket(f: ConformalElement, g: ConformalElement) -> LambdaPoly:
    """K6 lambda-bracket extended by conformal sesquilinearity."""
    n = f.n
    total = LambdaPoly()
    for (da, xa), ca in f.terms.items():
        for (db, xb), cb in g.terms.items():
            base = _mono_lambda_bracket(xa, ca, xb, cb, n)
            total = total + _compose_lambda_shift(base, da, db, n)
    return total


def lambda_substitute_minus(poly: LambdaPoly, n: int) -> LambdaPoly:
    """Substitute la -> -la-d into a ConformalElement-valued polynomial."""
    from math import comb

    out = LambdaPoly()
    for j, el in poly.coeffs.items():
        # (-la-d)^j = (-1)^j sum_k C(j,k) la^k d^(j-k)
        for k in range(j + 1):
            piece = el.apply_d(j - k).scale(comb(j, k))
            if j & 1:
                piece = piece.scale(-1)
            out = out + LambdaPoly({k: piece})
    return out


def ck6_element(f: GrassmannElement) -> ConformalElement:
    """The CK6 generator attached to f with |f| <= 3."""
    from .grassmann import hodge

    r = f.order()
    if r > 3:
        raise ValueError("CK6 generators require |f| <= 3")
    sign = -1 if ((r * (r + 1)) // 2) & 1 else 1
    dual = ConformalElement.from_grassmann(hodge(f), d_power=3 - r)
    if (3 - r) & 1:
        dual = dual.scale(-1)  # (-d)^(3-|f|)
    return ConformalElement.from_grassmann(f) - dual.scale(GaussianRational(0, sign))


# ---------------------------------------------------------------------------
# so(6) structure constants and Cartan-Weyl basis inside degree 0
# ---------------------------------------------------------------------------

ROOT_ORDER = (
    "e12", "em12", "me12", "mem12",
    "e13", "em13", "me13", "mem13",
    "e23", "em23", "me23", "mem23",
)

# root token -> (l, j, sign_l, sign_j) meaning  sign_l*eps_l + sign_j*eps_j
ROOT_DATA = {
    "e12": (1, 2, 1, -1), "em12": (1, 2, 1, 1),
    "me12": (1, 2, -1, 1), "mem12": (1, 2, -1, -1),
    "e13": (1, 3, 1, -1), "em13": (1, 3, 1, 1),
    "me13": (1, 3, -1, 1), "mem13": (1, 3, -1, -1),
    "e23": (2, 3, 1, -1), "em23": (2, 3, 1, 1),
    "me23": (2, 3, -1, 1), "mem23": (2, 3, -1, -1),
}


def root_weight(token: str):
    l, j, sl, sj = ROOT_DATA[token]
    w = [Fraction(0)] * 3
    w[l - 1] = Fraction(sl)
    w[j - 1] = Fraction(sj)
    return tuple(w)


def f_element(r: int, s: int, n: int = 6) -> KElement:
    """F_rs = -xi_r xi_s (antisymmetric in r, s)."""
    if r == s:
        return KElement.zero(n)
    sign = -1
    if r > s:
        r, s = s, r
        sign = 1
    return KElement(n, {(0, mask_of([r, s])): sign})


class So6Basis:
    """Cartan, root and Borel elements of cso(6) inside E(1,6)_0."""

    def __init__(self, n: int = 6):
        self.n = n
        self.e00 = KElement(n, {(1, 0): 1})  # t
        i = GaussianRational(0, 1)
        self.cartan = [f_element(2 * j - 1, 2 * j, n).scale(i) for j in (1, 2, 3)]
        self.roots = {}
        for token, (l, j, sl, sj) in ROOT_DATA.items():
            a = f_element(2 * l - 1, 2 * j - 1, n)
            b = f_element(2 * l, 2 * j, n)
            c = f_element(2 * l - 1, 2 * j, n)
            d = f_element(2 * l, 2 * j - 1, n)
            if sl == 1 and sj == -1:
                el = a + b + (c - d).scale(i)
            elif sl == 1 and sj == 1:
                el = a - b - (c + d).scale(i)
            elif sl == -1 and sj == 1:
                el = a + b - (c - d).scale(i)
            else:
                el = a - b + (c + d).scale(i)
            self.roots[token] = el
        self.borel = []
        for (l, j) in ((1, 2), (1, 3), (2, 3)):
            alpha = f_element(2 * l - 1, 2 * j - 1, n) - f_element(2 * l, 2 * j - 1, n).scale(i)
            beta = f_element(2 * l, 2 * j, n) + f_element(2 * l - 1, 2 * j, n).scale(i)
            self.borel.append((f"alpha{l}{j}", alpha))
            self.borel.append((f"beta{l}{j}", beta))
        self._verify()

    def _verify(self):
        # [H_j, E_alpha] = alpha(H_j) E_alpha for every root and j
        for token, el in self.roots.items():
            w = root_weight(token)
            for j, h in enumerate(self.cartan):
                got = ann_bracket(h, el)
                want = el.scale(w[j])
                if got != want:
                    raise AssertionError(f"Cartan-Weyl relation fails: [H{j+1}, {token}]")
        # Borel combinations match (E_{el-ej} +- E_{el+ej})/2
        half = Fraction(1, 2)
        for k, (l, j) in enumerate(((1, 2), (1, 3), (2, 3))):
            alpha = self.borel[2 * k][1]
            beta = self.borel[2 * k + 1][1]
            plus = (self.roots[f"e{l}{j}"] + self.roots[f"em{l}{j}"]).scale(half)
            minus = (self.roots[f"e{l}{j}"] - self.roots[f"em{l}{j}"]).scale(half)
            if alpha != plus or beta != minus:
                raise AssertionError("Borel generators disagree with root combinations")
        # E00 is central in degree 0
        for token, el in self.roots.items():
            if not ann_bracket(self.e00, el).is_zero():
                raise AssertionError("E00 fails to be central")


_SO6 = None


def so6_structure() -> So6Basis:
    global _SO6
    if _SO6 is None:
        _SO6 = So6Basis()
    return _SO6
