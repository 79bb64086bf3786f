"""The induced module C[d] (x) Lambda(6) (x) F and the lambda-action.

Coefficients are either formal (sparse combinations of operator-monomials
Id*v, E00*v, F_rs*v over named symbols) or concrete vectors in a
ConcreteRep.  Both lambda-action formulas are implemented; they agree under
the Hodge-dual conjugation T, and the dualised one drives the singularity
conditions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .grassmann import (
    GrassmannElement,
    hodge,
    indices_of,
    monomials,
    order_of,
    partial,
    partial_sign,
    wedge,
    wedge_sign,
)
from .kalgebra import so6_structure
from .repn import ConcreteRep, mat_apply, vec_add, vec_scale
from .scalars import GaussianRational, ONE, ZERO, _coerce

I_ = GaussianRational(0, 1)

F_PAIRS = tuple(itertools.combinations(range(1, 7), 2))
F_OPERATORS = ("Id", "E0") + tuple(f"F{r}{s}" for r, s in F_PAIRS)
CW_OPERATORS = ("Id", "E0", "H1", "H2", "H3",
                "e12", "em12", "me12", "mem12",
                "e13", "em13", "me13", "mem13",
                "e23", "em23", "me23", "mem23")


def carrier_name(mask: int) -> str:
    return "v" + "".join(map(str, indices_of(mask)))


# ---------------------------------------------------------------------------
# coefficient spaces
# ---------------------------------------------------------------------------


class FormalSpace:
    """Coefficients are sparse maps (operator, carrier) -> scalar.

    Operator monomials have degree <= 1: applying a generator to anything
    but an Id-monomial is refused.
    """

    def __init__(self, carriers):
        self.carriers = tuple(carriers)

    def zero(self):
        return {}

    def symbol(self, carrier):
        return {("Id", carrier): ONE}

    def is_zero(self, c):
        return not c

    def add(self, c1, c2):
        out = dict(c1)
        for key, v in c2.items():
            s = out.get(key, ZERO) + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return out

    def scale(self, c, s):
        s = _coerce(s)
        if not s:
            return {}
        return {key: s * v for key, v in c.items()}

    def apply_e00(self, c):
        out = {}
        for (op, carrier), v in c.items():
            if op != "Id":
                raise ValueError("operator product on a formal coefficient")
            out[("E0", carrier)] = v
        return out

    def apply_f(self, c, r, s):
        if r == s:
            return {}
        sign = ONE
        if r > s:
            r, s = s, r
            sign = -ONE
        out = {}
        for (op, carrier), v in c.items():
            if op != "Id":
                raise ValueError("operator product on a formal coefficient")
            out[(f"F{r}{s}", carrier)] = sign * v
        return out


class ConcreteSpace:
    """Coefficients are exact coordinate vectors in a concrete module."""

    def __init__(self, rep: ConcreteRep, mu0=None):
        self.rep = rep
        self.mu0 = rep.e00_scalar if mu0 is None else Fraction(mu0)
        if self.mu0 is None:
            raise ValueError("concrete module needs an E00 scalar")

    def zero(self):
        return None  # None stands for the zero vector

    def is_zero(self, c):
        return c is None or all(not x for x in c)

    def add(self, c1, c2):
        if c1 is None:
            return c2
        if c2 is None:
            return c1
        out = vec_add(c1, c2)
        return None if all(not x for x in out) else out

    def scale(self, c, s):
        s = _coerce(s)
        if c is None or not s:
            return None
        return vec_scale(c, s)

    def apply_e00(self, c):
        if c is None:
            return None
        return vec_scale(c, self.mu0)

    def apply_f(self, c, r, s):
        if c is None or r == s:
            return None
        out = mat_apply(self.rep.f_matrix(r, s), c)
        return None if all(not x for x in out) else out


class InducedVector:
    """Element of the induced module: sparse map (d-power, xi-mask) -> coeff."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not space.is_zero(c):
                    self.terms[key] = c

    def add(self, other: "InducedVector") -> "InducedVector":
        out = dict(self.terms)
        sp = self.space
        for key, c in other.terms.items():
            s = sp.add(out.get(key, sp.zero()), c)
            if sp.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return InducedVector(sp, out)

    def scale(self, s) -> "InducedVector":
        sp = self.space
        return InducedVector(sp, {k: sp.scale(c, s) for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def shift_d(self, by: int) -> "InducedVector":
        return InducedVector(self.space, {(k + by, m): c for (k, m), c in self.terms.items()})

    def layer(self, k: int) -> "InducedVector":
        """The d^k layer, returned with d-power zero."""
        return InducedVector(
            self.space, {(0, m): c for (kk, m), c in self.terms.items() if kk == k}
        )

    def max_d(self) -> int:
        return max((k for (k, _) in self.terms), default=0)

    def degrees(self):
        return {-2 * k - (6 - order_of(m)) for (k, m) in self.terms}

    def __eq__(self, other):
        return isinstance(other, InducedVector) and self.terms == other.terms

    def __repr__(self):
        bits = []
        for (k, m) in sorted(self.terms, key=lambda km: (km[0], order_of(km[1]), km[1])):
            name = f"d^{k}." if k else ""
            name += "1" if m == 0 else "xi" + "".join(map(str, indices_of(m)))
            bits.append(f"{name}(x){self.terms[(k, m)]!r}")
        return " + ".join(bits) or "0"


# ---------------------------------------------------------------------------
# the dualised lambda-action (the workhorse formula)
# ---------------------------------------------------------------------------


def _action_dual_layer(f: GrassmannElement, m: InducedVector):
    """lambda-action of f on a d-power-zero vector; dict la-power -> vector.

    The output at la^0 carries d-powers 0 and 1; higher la-powers are d-free.
    """
    sp = m.space
    out = {0: {}, 1: {}, 2: {}}

    def put(j, key, c):
        bucket = out[j]
        s = sp.add(bucket.get(key, sp.zero()), c)
        if sp.is_zero(s):
            bucket.pop(key, None)
        else:
            bucket[key] = s

    for mf, cf in f.terms.items():
        r = order_of(mf)
        pf = r & 1
        pref_sign = 1 if ((r * (r + 1)) // 2) % 2 == 0 else -1
        for (k, mg), cv in m.terms.items():
            if k:
                raise ValueError("layer action expects d-power zero")
            g_order = order_of(mg)
            sign0 = pref_sign * (-1 if (r * g_order) & 1 else 1)
            base = cf * sign0
            # la^0, d-part: (|f|-2) d (f g) (x) v
            ws = wedge_sign(mf, mg)
            if ws and r != 2:
                c = base * (r - 2)
                if ws < 0:
                    c = -c
                put(0, (1, mf | mg), sp.scale(cv, c))
            # la^0: -(-1)^p(f) sum_i (d_i f)(d_i g) (x) v
            common = mf & mg
            bit = 1
            i = 1
            while bit <= common:
                if common & bit:
                    si = partial_sign(mf, i)
                    ti = partial_sign(mg, i)
                    ws2 = wedge_sign(mf ^ bit, mg ^ bit)
                    if ws2:
                        sgn = si * ti * ws2
                        c = base * (-sgn if pf == 0 else sgn)
                        put(0, (0, (mf ^ bit) | (mg ^ bit)), sp.scale(cv, c))
                bit <<= 1
                i += 1
            # la^0: - sum_{r<s} (d_r d_s f) g (x) F_rs v
            for (a, b) in F_PAIRS:
                ba, bb = 1 << (a - 1), 1 << (b - 1)
                if (mf & ba) and (mf & bb):
                    s_b = partial_sign(mf, b)
                    s_a = partial_sign(mf ^ bb, a)
                    ws2 = wedge_sign(mf ^ ba ^ bb, mg)
                    if ws2:
                        sgn = s_a * s_b * ws2
                        c = base * (-sgn)
                        put(0, (0, (mf ^ ba ^ bb) | mg), sp.scale(sp.apply_f(cv, a, b), c))
            # la^1: f g (x) E00 v
            if ws:
                c = base if ws > 0 else -base
                put(1, (0, mf | mg), sp.scale(sp.apply_e00(cv), c))
            # la^1: -(-1)^p(f) sum_i d_i (f xi_i g) (x) v
            for i in range(1, 7):
                bi = 1 << (i - 1)
                if (mf & bi) or (mg & bi):
                    continue
                s1 = wedge_sign(mf, bi)
                s2 = wedge_sign(mf | bi, mg)
                if not s2:
                    continue
                whole = mf | bi | mg
                sd = partial_sign(whole, i)
                sgn = s1 * s2 * sd
                c = base * (-sgn if pf == 0 else sgn)
                put(1, (0, whole ^ bi), sp.scale(cv, c))
            # la^1: (-1)^p(f) sum_{i != j} (d_i f) xi_j g (x) F_ij v
            for i in range(1, 7):
                bi = 1 << (i - 1)
                si = partial_sign(mf, i)
                if not si:
                    continue
                for j in range(1, 7):
                    if j == i:
                        continue
                    bj = 1 << (j - 1)
                    s1 = wedge_sign(bj, mg)
                    if not s1:
                        continue
                    s2 = wedge_sign(mf ^ bi, bj | mg)
                    if not s2:
                        continue
                    sgn = si * s1 * s2
                    c = base * (sgn if pf == 0 else -sgn)
                    put(1, (0, (mf ^ bi) | bj | mg), sp.scale(sp.apply_f(cv, i, j), c))
            # la^2: - sum_{i<j} f xi_i xi_j g (x) F_ij v
            for (a, b) in F_PAIRS:
                ba, bb = 1 << (a - 1), 1 << (b - 1)
                if (mf | mg) & (ba | bb):
                    continue
                s1 = wedge_sign(ba, bb)
                s2 = wedge_sign(mf, ba | bb)
                s3 = wedge_sign(mf | ba | bb, mg)
                if not (s1 and s2 and s3):
                    continue
                sgn = s1 * s2 * s3
                c = base * (-sgn)
                put(2, (0, mf | ba | bb | mg), sp.scale(sp.apply_f(cv, a, b), c))
    return {
        j: InducedVector(sp, bucket) for j, bucket in out.items() if bucket
    }


def lambda_action_dual(f: GrassmannElement, m: InducedVector):
    """Full lambda-action on a vector with d-powers, as dict la-power -> vector.

    Layers shift by (la+d)^k: the module axiom a_la(d m) = (la+d)(a_la m).
    """
    sp = m.space
    total = {}
    for k in sorted({key[0] for key in m.terms}):
        layer = m.layer(k)
        inner = _action_dual_layer(f, layer)
        for j, vec in inner.items():
            for t in range(k + 1):
                c = comb(k, t)
                piece = vec.shift_d(k - t).scale(c)
                idx = j + t
                total[idx] = piece if idx not in total else total[idx].add(piece)
    return {j: v for j, v in total.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# the direct (pre-dualisation) lambda-action and the conjugation T
# ---------------------------------------------------------------------------


def _partial_mono(mask: int, g: GrassmannElement) -> GrassmannElement:
    """The iterated left derivative attached to a monomial: for
    f = xi_a xi_b ... (ascending), d_f = d_a d_b ... applied to g."""
    out = g
    for i in reversed(indices_of(mask)):
        out = partial(i, out)
    return out


def _partial_of(el: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    """Linear extension of the derivative-by-monomial, for +-monomial el."""
    out = GrassmannElement(g.n)
    for mask, c in el.terms.items():
        out = out + _partial_mono(mask, g).scale(c)
    return out


def _action_direct_layer(f: GrassmannElement, m: InducedVector):
    sp = m.space
    out = {0: {}, 1: {}, 2: {}}

    def put(j, dp, el: GrassmannElement, c):
        if sp.is_zero(c):
            return
        bucket = out[j]
        for mask, x in el.terms.items():
            key = (dp, mask)
            s = sp.add(bucket.get(key, sp.zero()), sp.scale(c, x))
            if sp.is_zero(s):
                bucket.pop(key, None)
            else:
                bucket[key] = s

    for mf, cf in f.terms.items():
        r = order_of(mf)
        pf = r & 1
        fm = GrassmannElement(6, {mf: cf})
        for (k, mg), cv in m.terms.items():
            if k:
                raise ValueError("layer action expects d-power zero")
            g = GrassmannElement(6, {mg: 1})
            pg = order_of(mg) & 1
            # la^0
            dfg = _partial_of(fm, g)
            if r != 2:
                c0 = -1 if pf else 1
                put(0, 1, dfg.scale((r - 2) * c0), cv)
            for i in range(1, 7):
                dif = partial(i, fm)
                if dif.is_zero():
                    continue
                term = _partial_of(dif, wedge(GrassmannElement.monomial([i]), g))
                put(0, 0, term, cv)
            for (a, b) in F_PAIRS:
                dd = partial(a, partial(b, fm))
                if dd.is_zero():
                    continue
                term = _partial_of(dd, g)
                if pf:
                    term = term.scale(-1)
                put(0, 0, term, sp.apply_f(cv, a, b))
            # la^1
            put(1, 0, dfg.scale(-1 if pf else 1), sp.apply_e00(cv))
            for i in range(1, 7):
                dig = partial(i, g)
                if dig.is_zero():
                    continue
                term = wedge(_partial_of(fm, dig), GrassmannElement.monomial([i]))
                sign = -1 if (pf + pg) & 1 else 1
                put(1, 0, term.scale(sign), cv)
            for i in range(1, 7):
                dif = partial(i, fm)
                if dif.is_zero():
                    continue
                for j in range(1, 7):
                    if j == i:
                        continue
                    term = _partial_of(dif, partial(j, g))
                    if term.is_zero():
                        continue
                    put(1, 0, term, sp.apply_f(cv, i, j))
            # la^2
            for (a, b) in F_PAIRS:
                term = _partial_of(fm, partial(a, partial(b, g)))
                if term.is_zero():
                    continue
                if pf:
                    term = term.scale(-1)
                put(2, 0, term, sp.apply_f(cv, a, b))
    return {j: InducedVector(sp, bucket) for j, bucket in out.items() if bucket}


def lambda_action_direct(f: GrassmannElement, m: InducedVector):
    sp = m.space
    total = {}
    for k in sorted({key[0] for key in m.terms}):
        layer = m.layer(k)
        inner = _action_direct_layer(f, layer)
        for j, vec in inner.items():
            for t in range(k + 1):
                piece = vec.shift_d(k - t).scale(comb(k, t))
                idx = j + t
                total[idx] = piece if idx not in total else total[idx].add(piece)
    return {j: v for j, v in total.items() if not v.is_zero()}


def t_conjugate(m: InducedVector) -> InducedVector:
    """T(g (x) v) = (-1)^|g| g* (x) v, extended C[d]-linearly."""
    sp = m.space
    full = (1 << 6) - 1
    terms = {}
    for (k, mask), c in m.terms.items():
        dual = full ^ mask
        s = wedge_sign(mask, dual)
        if order_of(mask) & 1:
            s = -s
        terms[(k, dual)] = sp.scale(c, s)
    return InducedVector(sp, terms)


def t_conjugate_inverse(m: InducedVector) -> InducedVector:
    sp = m.space
    full = (1 << 6) - 1
    terms = {}
    for (k, mask), c in m.terms.items():
        pre = full ^ mask  # T maps pre -> mask
        s = wedge_sign(pre, mask)
        if order_of(pre) & 1:
            s = -s
        terms[(k, pre)] = sp.scale(c, Fraction(1, s))
    return InducedVector(sp, terms)


# ---------------------------------------------------------------------------
# a/b/B/C decomposition
# ---------------------------------------------------------------------------


class ActionDecomposition:
    """The d/la coefficients of f_la m and of f*_la m for a single layer."""

    __slots__ = ("a", "b", "B", "C", "ad", "bd", "Bd", "Cd")

    def __init__(self, a, b, B, C, ad, bd, Bd, Cd):
        self.a, self.b, self.B, self.C = a, b, B, C
        self.ad, self.bd, self.Bd, self.Cd = ad, bd, Bd, Cd


def _split_abBC(f: GrassmannElement, m: InducedVector):
    act = _action_dual_layer(f, m)
    sp = m.space
    zero = InducedVector(sp)
    a_terms = {}
    b_terms = {}
    for (dp, mask), c in act.get(0, zero).terms.items():
        if dp == 1:
            a_terms[(0, mask)] = c
        elif dp == 0:
            b_terms[(0, mask)] = c
        else:
            raise AssertionError("layer action produced d-power > 1")
    B = act.get(1, zero)
    C = act.get(2, zero)
    if any(k for (k, _) in B.terms) or any(k for (k, _) in C.terms):
        raise AssertionError("la>=1 coefficients must be d-free")
    return InducedVector(sp, a_terms), InducedVector(sp, b_terms), B, C


def decompose(f: GrassmannElement, m: InducedVector) -> ActionDecomposition:
    """Split f_la m = (la+d)a + b + la(B-a) + la^2 C for a d-free layer m,
    together with the same data for the Hodge dual of f."""
    if any(k for (k, _) in m.terms):
        raise ValueError("decompose expects a single d-power-zero layer")
    a, b, B, C = _split_abBC(f, m)
    ad, bd, Bd, Cd = _split_abBC(hodge(f), m)
    return ActionDecomposition(a, b, B, C, ad, bd, Bd, Cd)


# ---------------------------------------------------------------------------
# singularity conditions (S1)-(S3)
# ---------------------------------------------------------------------------


def _borel_grassmann():
    """The six Borel generators as Grassmann elements (order-2, degree 0)."""
    out = []
    for name, el in so6_structure().borel:
        g = GrassmannElement(6)
        for (m, mask), c in el.terms.items():
            if m != 0:
                raise AssertionError("Borel element leaves Lambda(6)")
            g = g + GrassmannElement(6, {mask: c})
        out.append((name, g))
    return out


def condition_polynomial(f: GrassmannElement, m: InducedVector):
    """P_f(la) = f_la m - i(-1)^(|f|(|f|+1)/2) la^(3-|f|) (f*_la m)."""
    r = f.order()
    act = lambda_action_dual(f, m)
    dual = lambda_action_dual(hodge(f), m)
    sign = -1 if ((r * (r + 1)) // 2) & 1 else 1
    shift = 3 - r
    total = dict(act)
    for j, vec in dual.items():
        piece = vec.scale(GaussianRational(0, -sign))
        idx = j + shift
        total[idx] = piece if idx not in total else total[idx].add(piece)
    return {j: v for j, v in total.items() if not v.is_zero()}


def _f_name(mask: int) -> str:
    return "f" + ("0" if mask == 0 else "".join(map(str, indices_of(mask))))


def condition_rows(m: InducedVector, include=("S1", "S2", "S3")):
    """All (row_id, coefficient) pairs expressing (S1)-(S3) on m.

    Row ids read  S1(f13)l3.d1.x245  for the la^3, d^1, xi_245 component of
    the f = xi_1 xi_3 condition.  Emission order: monomial f ascending in
    (order, lex), then Borel generators, then la-power, d-power, xi-mask.
    """
    rows = []

    def emit(tag, fname, poly, powers):
        for j in powers:
            vec = poly.get(j)
            if vec is None:
                continue
            for (dp, mask) in sorted(vec.terms, key=lambda km: (km[0], indices_of(km[1]))):
                rid = f"{tag}({fname})l{j}.d{dp}.x" + ("0" if mask == 0 else "".join(map(str, indices_of(mask))))
                rows.append((rid, vec.terms[(dp, mask)]))

    for mask in monomials(6, orders=[0, 1, 2, 3]):
        f = GrassmannElement(6, {mask: 1})
        poly = condition_polynomial(f, m)
        top = max(poly, default=-1)
        name = _f_name(mask)
        r = order_of(mask)
        if "S1" in include:
            emit("S1", name, poly, range(2, top + 1))
        if "S2" in include and 1 <= r <= 3:
            emit("S2", name, poly, (1,))
        if "S3" in include and r == 3:
            emit("S3", name, poly, (0,))
    if "S3" in include:
        for name, g in _borel_grassmann():
            poly = condition_polynomial(g, m)
            emit("S3", name, poly, (0,))
    return rows


def singular_conditions(m: InducedVector):
    """The full (S1)-(S3) condition list; empty iff m is a singular vector."""
    return condition_rows(m)


def is_singular(m: InducedVector) -> bool:
    """Concrete-mode check that every condition evaluates to zero."""
    sp = m.space
    return all(sp.is_zero(c) for _, c in singular_conditions(m))


# ---------------------------------------------------------------------------
# the curated equation list and its per-degree applicability
# ---------------------------------------------------------------------------

# (family, index) -> list of (part, layer, scalar); part names reference the
# ActionDecomposition attributes; the equation asserts the sum vanishes.
LEMMA_EQUATIONS = {
    ("E0", 1): [("C", 0, ONE), ("B", 1, ONE)],
    ("E0", 2): [("B", 2, 2), ("a", 2, ONE), ("C", 1, ONE)],
    ("E0", 3): [("bd", 0, 2), ("a", 2, -I_), ("C", 1, I_)],
    ("E1", 1): [("B", 2, 3), ("bd", 1, 2 * I_), ("ad", 0, 2 * I_), ("C", 1, 2)],
    ("E1", 2): [("C", 0, 2), ("a", 1, -ONE), ("B", 1, ONE), ("bd", 0, 2 * I_)],
    ("E1", 3): [("a", 2, 2), ("B", 2, ONE)],
    ("E1", 4): [("Bd", 0, 3), ("C", 1, -I_), ("bd", 1, ONE), ("ad", 0, -2)],
    ("E1", 5): [("b", 2, 2), ("a", 1, ONE), ("B", 1, ONE)],
    ("E1", 6): [("b", 1, ONE), ("B", 0, ONE)],
    ("E2", 1): [("C", 0, 2), ("Bd", 0, 2 * I_), ("B", 1, ONE), ("ad", 0, -I_), ("bd", 1, I_)],
    ("E2", 2): [("b", 2, 2), ("ad", 0, I_), ("bd", 1, I_), ("B", 1, ONE)],
    ("E2", 3): [("bd", 0, ONE), ("b", 1, -I_), ("B", 0, -I_)],
    ("E3", 1): [("C", 0, ONE), ("Cd", 0, -I_)],
    ("E3", 2): [("bd", 0, ONE), ("b", 0, I_)],
    ("E3", 3): [("B", 1, ONE), ("Bd", 1, -I_), ("a", 1, -ONE), ("ad", 1, I_)],
    ("E3", 4): [("b", 2, ONE), ("bd", 2, -I_), ("a", 1, ONE), ("ad", 1, -I_)],
    ("E3", 5): [("bd", 1, ONE), ("Bd", 0, ONE), ("B", 0, I_), ("b", 1, I_)],
    ("E3", 6): [("ad", 0, ONE), ("a", 0, I_), ("Bd", 0, -ONE), ("B", 0, -I_)],
    ("EB", 1): [("b", 2, ONE)],
    ("EB", 2): [("b", 1, ONE)],
    ("EB", 3): [("b", 0, ONE)],
}

# degree -> {(family, index): expected xi-length of the nonzero components}
APPLICABILITY = {
    -5: {
        ("E0", 1): 3, ("E0", 2): 5, ("E0", 3): 5,
        ("E1", 1): 6, ("E1", 2): 4, ("E1", 3): 6, ("E1", 4): 6, ("E1", 5): 4, ("E1", 6): 2,
        ("E2", 1): 5, ("E2", 2): 5, ("E2", 3): 3,
        ("E3", 1): 6, ("E3", 2): 2, ("E3", 3): 6, ("E3", 4): 6, ("E3", 5): 4, ("E3", 6): 4,
        ("EB", 1): 5, ("EB", 2): 3, ("EB", 3): 1,
    },
    -4: {
        ("E0", 1): 4, ("E0", 2): 6, ("E0", 3): 6,
        ("E1", 2): 5, ("E1", 5): 5, ("E1", 6): 3,
        ("E2", 1): 6, ("E2", 2): 6, ("E2", 3): 4,
        ("E3", 2): 3, ("E3", 5): 5, ("E3", 6): 5,
        ("EB", 1): 6, ("EB", 2): 4, ("EB", 3): 2,
    },
    -3: {
        ("E0", 1): 5,
        ("E1", 2): 6, ("E1", 5): 6, ("E1", 6): 4,
        ("E2", 3): 5,
        ("E3", 2): 4, ("E3", 5): 6, ("E3", 6): 6,
        ("EB", 2): 5, ("EB", 3): 3,
    },
    -2: {
        ("E0", 1): 6,
        ("E1", 6): 5,
        ("E2", 3): 6,
        ("E3", 2): 5,
        ("EB", 2): 6, ("EB", 3): 4,
    },
    -1: {
        ("E1", 6): 6,
        ("E3", 2): 6,
        ("EB", 3): 5,
    },
}

_FAMILY_ORDERS = {"E0": [0], "E1": [1], "E2": [2], "E3": [3]}


def lemma_condition_equations(m: InducedVector, degree: int, on_discrepancy=None):
    """The curated per-degree equation list in the a/b/B/C vocabulary.

    Returns (row_id, coefficient) pairs like condition_rows.  Discrepancies
    with the expected component lengths are reported through the callback
    instead of being dropped.
    """
    table = APPLICABILITY[degree]
    layers = {k: m.layer(k) for k in (0, 1, 2)}
    rows = []

    def emit(fname, fam_idx, dec_by_layer):
        combo = {}
        sp = m.space
        for part, layer_k, scalar in LEMMA_EQUATIONS[fam_idx]:
            piece = getattr(dec_by_layer[layer_k], part)
            for (dp, mask), c in piece.terms.items():
                key = mask
                s = sp.add(combo.get(key, sp.zero()), sp.scale(c, scalar))
                if sp.is_zero(s):
                    combo.pop(key, None)
                else:
                    combo[key] = s
        expected = table[fam_idx]
        for mask in sorted(combo, key=lambda mm: indices_of(mm)):
            if order_of(mask) != expected and on_discrepancy is not None:
                on_discrepancy(fam_idx, fname, mask, expected)
            rid = f"{fam_idx[0]}.{fam_idx[1]}({fname})x" + "".join(map(str, indices_of(mask)))
            rows.append((rid, combo[mask]))

    monomial_fs = {
        fam: [GrassmannElement(6, {mk: 1}) for mk in monomials(6, orders=orders)]
        for fam, orders in _FAMILY_ORDERS.items()
    }
    for fam in ("E0", "E1", "E2", "E3"):
        fam_indices = sorted(idx for (fm, idx) in table if fm == fam)
        if not fam_indices:
            continue
        for f in monomial_fs[fam]:
            mask = next(iter(f.terms))
            dec_by_layer = {
                k: decompose(f, layers[k]) for k in (0, 1, 2)
            }
            for idx in fam_indices:
                emit(_f_name(mask), (fam, idx), dec_by_layer)
    borel_indices = sorted(idx for (fm, idx) in table if fm == "EB")
    if borel_indices:
        for name, g in _borel_grassmann():
            dec_by_layer = {k: decompose(g, layers[k]) for k in (0, 1, 2)}
            for idx in borel_indices:
                emit(name, ("EB", idx), dec_by_layer)
    return rows
