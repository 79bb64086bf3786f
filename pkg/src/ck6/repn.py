"""Concrete finite-dimensional irreducible cso(6)-modules over Q(i).

The vector representation acts by F_rs -> E_rs - E_sr; the half-spin
representations come from a Clifford module on six gamma matrices split by
chirality.  General dominant integral weights are realised inside tensor
products by extracting the cyclic span of the highest weight vector under
the lowering operators.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .kalgebra import ROOT_ORDER, KElement, so6_structure
from .linalg import kernel_rows
from .scalars import GaussianRational, ONE, ZERO, _coerce
from .weights import Weight

I_ = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# minimal dense exact matrices (row-major tuples, acting on column vectors)
# ---------------------------------------------------------------------------


def mat_zero(n, m=None):
    m = n if m is None else m
    return tuple(tuple(ZERO for _ in range(m)) for _ in range(n))


def mat_eye(n, c=ONE):
    c = _coerce(c)
    return tuple(
        tuple(c if r == s else ZERO for s in range(n)) for r in range(n)
    )


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    c = _coerce(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_apply(a, v):
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def mat_kron(a, b):
    nb = len(b)
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(x * y for x in ra for y in rb))
    return tuple(out)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(u, c):
    c = _coerce(c)
    return tuple(c * x for x in u)


def vec_is_zero(u):
    return all(not x for x in u)


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


# ---------------------------------------------------------------------------
# the concrete representation record
# ---------------------------------------------------------------------------


class ConcreteRep:
    """dim, the 15 matrices for F_rs (r<s), and highest-weight metadata.

    basis_weights, when set, gives the (H1,H2,H3) eigenvalue triple of every
    basis vector; all constructions below keep the basis weight-graded.
    """

    def __init__(self, dim, action, e00_scalar=None, highest_weight=None,
                 hw_vector=None, basis_weights=None, check=True):
        self.dim = dim
        self.action = dict(action)
        self.e00_scalar = None if e00_scalar is None else Fraction(e00_scalar)
        self.highest_weight = highest_weight
        self.hw_vector = hw_vector
        self.basis_weights = basis_weights
        if check:
            verify_so6_commutators(self.action)

    # -- generator access ---------------------------------------------------

    def f_matrix(self, r, s):
        if r == s:
            return mat_zero(self.dim)
        if r < s:
            return self.action[(r, s)]
        return mat_scale(self.action[(s, r)], -1)

    def h_matrix(self, j):
        return mat_scale(self.f_matrix(2 * j - 1, 2 * j), I_)

    def cartan_weight_of(self, v):
        """(H1,H2,H3) eigenvalues of an eigenvector v; None if not one."""
        out = []
        for j in (1, 2, 3):
            hv = mat_apply(self.h_matrix(j), v)
            lead = next((k for k, x in enumerate(v) if x), None)
            if lead is None:
                return None
            c = hv[lead] / v[lead]
            if hv != vec_scale(v, c):
                return None
            if c.im != 0:
                return None
            out.append(c.re)
        return tuple(out)

    def element_matrix(self, x: KElement):
        """Matrix of a degree-0 element (span of t and xi_i xi_j)."""
        out = mat_zero(self.dim)
        for (m, mask), c in x.terms.items():
            if m == 1 and mask == 0:
                if self.e00_scalar is None:
                    raise ValueError("E00 scalar unassigned for this module")
                out = mat_add(out, mat_eye(self.dim, c * self.e00_scalar))
            elif m == 0 and bin(mask).count("1") == 2:
                lo = (mask & -mask).bit_length()
                hi = mask.bit_length()
                # F_rs = -xi_r xi_s, so xi_r xi_s acts as -F_rs
                out = mat_add(out, mat_scale(self.f_matrix(lo, hi), -c))
            else:
                raise ValueError("element outside the degree-0 span of t, xi_i xi_j")
        return out

    def root_matrix(self, token):
        return self.element_matrix(so6_structure().roots[token])

    def borel_matrices(self):
        return [self.element_matrix(el) for _, el in so6_structure().borel]

    def weight(self) -> Weight:
        if self.highest_weight is not None:
            return self.highest_weight
        raise ValueError("module has no highest-weight metadata")


def apply_element(rep: ConcreteRep, x: KElement, v):
    """Apply a degree-0 algebra element to a module vector."""
    return mat_apply(rep.element_matrix(x), v)


SO6_PAIRS = tuple(itertools.combinations(range(1, 7), 2))


def verify_so6_commutators(action):
    """[F_ab, F_cd] = d_bc F_ad + d_ad F_bc - d_ac F_bd - d_bd F_ac."""
    dim = len(next(iter(action.values())))

    def f(r, s):
        if r == s:
            return mat_zero(dim)
        return action[(r, s)] if r < s else mat_scale(action[(s, r)], -1)

    for (a, b), (c, d) in itertools.combinations_with_replacement(SO6_PAIRS, 2):
        got = commutator(f(a, b), f(c, d))
        want = mat_zero(dim)
        if b == c:
            want = mat_add(want, f(a, d))
        if a == d:
            want = mat_add(want, f(b, c))
        if a == c:
            want = mat_sub(want, f(b, d))
        if b == d:
            want = mat_sub(want, f(a, c))
        if got != want:
            raise AssertionError(f"so(6) relation fails for F{a}{b}, F{c}{d}")


# ---------------------------------------------------------------------------
# the basic representations
# ---------------------------------------------------------------------------


def vector_rep(e00_scalar=None) -> ConcreteRep:
    """The 6-dimensional vector representation, F_rs -> E_rs - E_sr."""
    action = {}
    for r, s in SO6_PAIRS:
        m = [[ZERO] * 6 for _ in range(6)]
        m[r - 1][s - 1] = ONE
        m[s - 1][r - 1] = -ONE
        action[(r, s)] = tuple(tuple(row) for row in m)
    hw = tuple(
        [ONE, -I_] + [ZERO] * 4
    )  # e1 - i e2, weight eps1
    return ConcreteRep(
        6,
        action,
        e00_scalar=e00_scalar,
        highest_weight=Weight(0 if e00_scalar is None else e00_scalar, (1, 0, 0)),
        hw_vector=hw,
    )


def _pauli():
    sx = ((ZERO, ONE), (ONE, ZERO))
    sy = ((ZERO, -I_), (I_, ZERO))
    sz = ((ONE, ZERO), (ZERO, -ONE))
    id2 = mat_eye(2)
    return sx, sy, sz, id2


def gamma_matrices():
    """Six 8x8 gammas with gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij."""
    sx, sy, sz, id2 = _pauli()
    gammas = []
    for k in range(3):
        for s in (sx, sy):
            factors = [sz] * k + [s] + [id2] * (2 - k)
            g = factors[0]
            for f in factors[1:]:
                g = mat_kron(g, f)
            gammas.append(g)
    return gammas


def spin8_rep():
    """The reducible 8-dimensional Clifford module, F_rs -> gamma_r gamma_s / 2."""
    gammas = gamma_matrices()
    action = {}
    for r, s in SO6_PAIRS:
        action[(r, s)] = mat_scale(mat_mul(gammas[r - 1], gammas[s - 1]), Fraction(1, 2))
    return action, gammas


def half_spin_reps(e00_la2=None, e00_la3=None):
    """The two 4-dimensional chirality halves, with highest weights
    (1/2,1/2,-1/2) and (1/2,1/2,1/2)."""
    action, gammas = spin8_rep()
    chi = mat_eye(8)
    for g in gammas:
        chi = mat_mul(chi, g)
    chi = mat_scale(chi, I_)  # i*gamma_1..gamma_6 has eigenvalues +-1
    halves = []
    for eig in (ONE, -ONE):
        cols = [k for k in range(8) if chi[k][k] == eig]
        if len(cols) != 4 or any(
            chi[r][c] != (eig if r == c else ZERO)
            for r in cols
            for c in cols
        ):
            raise AssertionError("chirality operator failed to split diagonally")
        sub_action = {
            key: tuple(tuple(m[r][c] for c in cols) for r in cols)
            for key, m in action.items()
        }
        halves.append((cols, sub_action))
    reps = []
    for scalar, (cols, sub_action) in zip((e00_la2, e00_la3), halves):
        rep = ConcreteRep(4, sub_action, e00_scalar=scalar, check=True)
        rep.basis_weights = [rep.cartan_weight_of(tuple(
            ONE if k == j else ZERO for k in range(4))) for j in range(4)]
        reps.append(rep)
    # identify which half is which by its top weight
    def top(rep):
        return max(rep.basis_weights)

    reps.sort(key=lambda r: top(r)[2])  # la2 has mu3 = -1/2, la3 has +1/2
    la2, la3 = reps
    la2.highest_weight = Weight(0 if e00_la2 is None else e00_la2,
                                (Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2)))
    la3.highest_weight = Weight(0 if e00_la3 is None else e00_la3,
                                (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    for rep in (la2, la3):
        idx = rep.basis_weights.index(rep.highest_weight.mu)
        rep.hw_vector = tuple(ONE if k == idx else ZERO for k in range(4))
    return la2, la3


def tensor(a: ConcreteRep, b: ConcreteRep) -> ConcreteRep:
    """Kronecker module a (x) b; the E00 scalar is left unassigned."""
    da, db = a.dim, b.dim
    ea, eb = mat_eye(da), mat_eye(db)
    action = {}
    for key in SO6_PAIRS:
        action[key] = mat_add(
            mat_kron(a.action[key], eb), mat_kron(ea, b.action[key])
        )
    rep = ConcreteRep(da * db, action, check=False)
    if a.basis_weights and b.basis_weights:
        rep.basis_weights = [
            tuple(x + y for x, y in zip(wa, wb))
            for wa in a.basis_weights
            for wb in b.basis_weights
        ]
    return rep


def to_weight_basis(rep: ConcreteRep) -> ConcreteRep:
    """Conjugate into a basis of simultaneous H-eigenvectors.

    The vector representation needs this before entering tensor products so
    that coordinates stay weight-pure; pairs (e_{2j-1}, e_{2j}) rotate to
    e_{2j-1} -+ i e_{2j}.
    """
    if rep.basis_weights is not None:
        return rep
    if rep.dim != 6:
        raise ValueError("only the vector representation needs rotating")
    # columns of B are the new basis vectors
    cols = []
    weights = []
    for j in range(3):
        for sign in (1, -1):
            v = [ZERO] * 6
            v[2 * j] = ONE
            v[2 * j + 1] = -I_ if sign == 1 else I_
            cols.append(tuple(v))
            w = [Fraction(0)] * 3
            w[j] = Fraction(sign)
            weights.append(tuple(w))
    binv_rows = []
    for j in range(3):
        for sign in (1, -1):
            v = [ZERO] * 6
            v[2 * j] = GaussianRational(Fraction(1, 2))
            v[2 * j + 1] = GaussianRational(0, Fraction(1, 2)) if sign == 1 else GaussianRational(0, Fraction(-1, 2))
            binv_rows.append(tuple(v))
    B = tuple(zip(*cols))
    Binv = tuple(binv_rows)
    action = {key: mat_mul(Binv, mat_mul(m, B)) for key, m in rep.action.items()}
    out = ConcreteRep(6, action, e00_scalar=rep.e00_scalar,
                      highest_weight=rep.highest_weight, check=False)
    out.basis_weights = weights
    out.hw_vector = tuple(ONE if k == 0 else ZERO for k in range(6))
    return out


# ---------------------------------------------------------------------------
# Weyl dimension oracle for so(6)
# ---------------------------------------------------------------------------

_POS_ROOTS = [
    (1, -1, 0), (1, 0, -1), (0, 1, -1),
    (1, 1, 0), (1, 0, 1), (0, 1, 1),
]
_RHO = (Fraction(2), Fraction(1), Fraction(0))


def weyl_dim(mu) -> int:
    """dim of the irreducible so(6)-module with highest weight mu."""
    mu = tuple(Fraction(m) for m in mu)
    num = Fraction(1)
    den = Fraction(1)
    for alpha in _POS_ROOTS:
        num *= sum((m + r) * a for m, r, a in zip(mu, _RHO, alpha))
        den *= sum(r * a for r, a in zip(_RHO, alpha))
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise ValueError(f"weight {mu} is not dominant integral")
    return int(d)


# ---------------------------------------------------------------------------
# highest-weight extraction
# ---------------------------------------------------------------------------


def _weight_space_indices(rep, target):
    return [k for k, w in enumerate(rep.basis_weights) if w == tuple(target)]


class EchelonSpan:
    """Echelon basis of a growing subspace with coordinate bookkeeping.

    Every reduced row remembers its expression over the inserted generators,
    so membership tests double as coordinate extraction.
    """

    def __init__(self):
        self.rows = {}  # lead index -> (normalised sparse row, expression)
        self.size = 0

    def _reduce(self, vec):
        v = dict(vec)
        used = []
        while v:
            lead = min(v)
            entry = self.rows.get(lead)
            if entry is None:
                break
            row, _ = entry
            c = v[lead]
            used.append((lead, c))
            for k, x in row.items():
                acc = v.get(k, ZERO) - c * x
                if acc:
                    v[k] = acc
                else:
                    v.pop(k, None)
        return v, used

    def insert(self, vec):
        """Insert generator number `self.size` if independent; return True."""
        residual, used = self._reduce(vec)
        if not residual:
            return False
        j = self.size
        expr = {j: ONE}
        for lead, c in used:
            for b, x in self.rows[lead][1].items():
                acc = expr.get(b, ZERO) - c * x
                if acc:
                    expr[b] = acc
                else:
                    expr.pop(b, None)
        lead = min(residual)
        inv = residual[lead].inverse()
        norm = {k: inv * x for k, x in residual.items()}
        expr = {b: inv * x for b, x in expr.items()}
        self.rows[lead] = (norm, expr)
        self.size += 1
        return True

    def coordinates(self, vec):
        """Coordinates over the inserted generators; None if not in span."""
        residual, used = self._reduce(vec)
        if residual:
            return None
        coords = {}
        for lead, c in used:
            for b, x in self.rows[lead][1].items():
                acc = coords.get(b, ZERO) + c * x
                if acc:
                    coords[b] = acc
                else:
                    coords.pop(b, None)
        return coords


def highest_weight_vectors(rep: ConcreteRep, mu):
    """Basis of the Borel-annihilated subspace of the mu weight space."""
    mu = tuple(Fraction(m) for m in mu)
    idx = _weight_space_indices(rep, mu)
    if not idx:
        return []
    borel = rep.borel_matrices()
    rows = []
    for m in borel:
        for r in range(rep.dim):
            row = {}
            for pos, k in enumerate(idx):
                if m[r][k]:
                    row[pos] = m[r][k]
            if row:
                rows.append(row)
    ker = kernel_rows(rows, len(idx))
    out = []
    for vec in ker:
        full = [ZERO] * rep.dim
        for pos, c in vec.items():
            full[idx[pos]] = c
        out.append(tuple(full))
    return out


def cyclic_span(rep: ConcreteRep, start, operators):
    """Exact cyclic span of `start` under repeated operator application."""
    span = EchelonSpan()
    span.insert({k: c for k, c in enumerate(start) if c})
    basis_vectors = [start]
    frontier = [start]
    while frontier:
        new_frontier = []
        for dense in frontier:
            for m in operators:
                img = mat_apply(m, dense)
                sparse = {k: c for k, c in enumerate(img) if c}
                if sparse and span.insert(sparse):
                    new_frontier.append(img)
                    basis_vectors.append(img)
        frontier = new_frontier
    return basis_vectors, span


_IRREP_CACHE = {}


def irrep(w: Weight, bound: int = 3) -> ConcreteRep:
    """Concrete irreducible module with highest weight w.

    Realised inside vector^(x n1) (x) spin2^(x n2) (x) spin3^(x n3) by
    extracting the cyclic span of the highest weight vector under the six
    lowering operators.  The so(6) part is cached per label triple; the
    central scalar is stamped per call.
    """
    cached = _IRREP_CACHE.get((w.mu, bound))
    if cached is not None:
        if cached.e00_scalar == w.mu0:
            return cached
        out = ConcreteRep(cached.dim, cached.action, e00_scalar=w.mu0,
                          highest_weight=w, hw_vector=cached.hw_vector, check=False)
        out.basis_weights = cached.basis_weights
        return out
    rep = _build_irrep(w, bound)
    _IRREP_CACHE[(w.mu, bound)] = rep
    return rep


def _build_irrep(w: Weight, bound: int) -> ConcreteRep:
    n0, n1f, n2f, n3f = w.labels
    if not w.dominant_integral():
        raise ValueError(f"{w} is not dominant integral")
    n1, n2, n3 = int(n1f), int(n2f), int(n3f)
    if n1 + n2 + n3 > bound:
        raise ValueError(
            f"labels {n1, n2, n3} exceed the tensor construction bound {bound}"
        )
    if n1 + n2 + n3 == 0:
        action = {key: mat_zero(1) for key in SO6_PAIRS}
        rep = ConcreteRep(1, action, e00_scalar=n0, highest_weight=w,
                          hw_vector=(ONE,), check=False)
        rep.basis_weights = [(Fraction(0),) * 3]
        return rep

    vec = to_weight_basis(vector_rep())
    la2, la3 = half_spin_reps()
    factors = [vec] * n1 + [la2] * n2 + [la3] * n3
    amb = factors[0]
    for f in factors[1:]:
        amb = tensor(amb, f)

    hws = highest_weight_vectors(amb, w.mu)
    if len(hws) != 1:
        raise ValueError(
            f"highest weight space for {w} has {len(hws)} Borel-annihilated "
            f"vectors in the tensor ambient (expected 1)"
        )
    hw = hws[0]
    lowering = [amb.element_matrix(so6_structure().roots[t])
                for t in ("me12", "me13", "me23", "mem12", "mem13", "mem23")]
    basis_vectors, span = cyclic_span(amb, hw, lowering)
    dim = len(basis_vectors)
    expected = weyl_dim(w.mu)
    if dim != expected:
        raise AssertionError(
            f"cyclic span of {w} has dimension {dim}, Weyl formula gives {expected}"
        )
    # restrict all generators to the span
    action = {}
    for key in SO6_PAIRS:
        m = amb.action[key]
        cols = []
        for b in basis_vectors:
            img = mat_apply(m, b)
            coords = span.coordinates({k: c for k, c in enumerate(img) if c})
            if coords is None:
                raise AssertionError("cyclic span is not generator invariant")
            cols.append(tuple(coords.get(j, ZERO) for j in range(dim)))
        action[key] = tuple(zip(*cols))
    rep = ConcreteRep(dim, action, e00_scalar=n0, highest_weight=w, check=False)
    rep.hw_vector = tuple(ONE if k == 0 else ZERO for k in range(dim))
    rep.basis_weights = [amb.cartan_weight_of(b) for b in basis_vectors]
    if any(bw is None for bw in rep.basis_weights):
        raise AssertionError("cyclic basis lost weight homogeneity")
    return rep


def raising_stability_check(rep: ConcreteRep) -> bool:
    """Irreducibility spot check: regenerating from the last weight vector of
    the module under all root operators recovers the full dimension."""
    ops = [rep.root_matrix(t) for t in ROOT_ORDER]
    start = tuple(ONE if j == rep.dim - 1 else ZERO for j in range(rep.dim))
    basis, _ = cyclic_span(rep, start, ops)
    return len(basis) == rep.dim
