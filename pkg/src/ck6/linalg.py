"""Exact sparse linear algebra over Q(i) with labeled rows and columns.

The observable contract is the unique reduced row-echelon form with respect
to a fixed column order; rank, kernel and row-space comparisons all derive
from it.  Rows are sparse maps column-index -> GaussianRational.
"""

from __future__ import annotations

from .scalars import GaussianRational, ONE, ZERO, format_scalar, parse_scalar

# ---------------------------------------------------------------------------
# core sparse elimination (integer column indices)
# ---------------------------------------------------------------------------


def rref_rows(rows, ncols):
    """Reduced row echelon form of sparse rows.

    Returns (pivots, reduced) where pivots is the ordered list of pivot
    column indices and reduced the corresponding normalised rows.  The
    result is the canonical RREF: independent of input row order.
    """
    # forward elimination, processing columns left to right
    pending = [dict(r) for r in rows if r]
    pivot_rows = {}  # col -> row dict (pivot normalised to 1)
    # bucket rows by their leading column for leftmost-first processing
    buckets = {}
    for r in pending:
        buckets.setdefault(min(r), []).append(r)
    for col in range(ncols):
        queue = buckets.pop(col, None)
        if not queue:
            continue
        pivot = None
        for r in queue:
            c = r.get(col)
            if c is None or c.is_zero():
                lead = min((k for k, v in r.items() if v), default=None)
                if lead is not None:
                    buckets.setdefault(lead, []).append(r)
                continue
            if pivot is None:
                inv = c.inverse()
                pivot = {k: inv * v for k, v in r.items() if v}
                pivot_rows[col] = pivot
                continue
            # eliminate col from r
            factor = c
            for k, v in pivot.items():
                acc = r.get(k, ZERO) - factor * v
                if acc:
                    r[k] = acc
                else:
                    r.pop(k, None)
            lead = min((k for k, v in r.items() if v), default=None)
            if lead is not None:
                buckets.setdefault(lead, []).append(r)
    # back substitution: clear pivot columns above
    pivots = sorted(pivot_rows)
    for idx in range(len(pivots) - 1, -1, -1):
        col = pivots[idx]
        row = pivot_rows[col]
        for upper_col in pivots[:idx]:
            upper = pivot_rows[upper_col]
            c = upper.get(col)
            if c is None or c.is_zero():
                continue
            for k, v in row.items():
                acc = upper.get(k, ZERO) - c * v
                if acc:
                    upper[k] = acc
                else:
                    upper.pop(k, None)
    return pivots, [pivot_rows[c] for c in pivots]


def kernel_rows(rows, ncols):
    """Basis of the right null space of the sparse system.

    Rows are consumed incrementally; once the rank reaches the column count
    the kernel is empty and the remaining rows are skipped unreduced.
    """
    by_lead = {}
    for row in rows:
        if len(by_lead) == ncols:
            return []
        v = {k: c for k, c in row.items() if c}
        while v:
            lead = min(v)
            piv = by_lead.get(lead)
            if piv is None:
                inv = v[lead].inverse()
                by_lead[lead] = {k: inv * x for k, x in v.items()}
                break
            c = v[lead]
            for k, x in piv.items():
                acc = v.get(k, ZERO) - c * x
                if acc:
                    v[k] = acc
                else:
                    v.pop(k, None)
    if len(by_lead) == ncols:
        return []
    # back substitution to the canonical RREF
    pivots = sorted(by_lead)
    for idx in range(len(pivots) - 1, -1, -1):
        col = pivots[idx]
        row = by_lead[col]
        for upper_col in pivots[:idx]:
            upper = by_lead[upper_col]
            c = upper.get(col)
            if c is None or c.is_zero():
                continue
            for k, v in row.items():
                acc = upper.get(k, ZERO) - c * v
                if acc:
                    upper[k] = acc
                else:
                    upper.pop(k, None)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = {fc: ONE}
        for col in pivots:
            c = by_lead[col].get(fc)
            if c is not None and c:
                vec[col] = -c
        basis.append(vec)
    return basis


def row_reduce_against(row, pivots, reduced):
    """Reduce a sparse row modulo an RREF; nonempty result <=> independent."""
    r = dict(row)
    for col, prow in zip(pivots, reduced):
        c = r.get(col)
        if c is None or c.is_zero():
            continue
        for k, v in prow.items():
            acc = r.get(k, ZERO) - c * v
            if acc:
                r[k] = acc
            else:
                r.pop(k, None)
    return {k: v for k, v in r.items() if v}


# ---------------------------------------------------------------------------
# labeled systems
# ---------------------------------------------------------------------------


class LabeledLinearSystem:
    """Sparse exact matrix with labeled columns and identified rows."""

    def __init__(self, columns):
        self.columns = list(columns)
        self.col_index = {c: k for k, c in enumerate(self.columns)}
        if len(self.col_index) != len(self.columns):
            raise ValueError("duplicate column labels")
        self.row_ids = []
        self.rows = []  # list of dict col-index -> GaussianRational
        self._row_id_set = set()

    def add_row(self, row_id, entries):
        """entries: mapping column-label -> scalar; zero entries dropped."""
        if row_id in self._row_id_set:
            raise ValueError(f"duplicate row id {row_id!r}")
        row = {}
        for label, c in entries.items():
            if not isinstance(c, GaussianRational):
                c = GaussianRational(c)
            if c:
                row[self.col_index[label]] = c
        self.row_ids.append(row_id)
        self.rows.append(row)
        self._row_id_set.add(row_id)

    @property
    def shape(self):
        return (len(self.rows), len(self.columns))

    def rref(self):
        """Return (reduced system, rank); rows of the result are labeled r1.."""
        pivots, reduced = rref_rows(self.rows, len(self.columns))
        out = LabeledLinearSystem(self.columns)
        for k, row in enumerate(reduced):
            out.row_ids.append(f"r{k + 1}")
            out.rows.append(dict(row))
            out._row_id_set.add(f"r{k + 1}")
        out.pivots = list(pivots)
        return out, len(pivots)

    def rank(self) -> int:
        pivots, _ = rref_rows(self.rows, len(self.columns))
        return len(pivots)

    def kernel(self):
        """Kernel basis as list of dicts column-label -> scalar, verified."""
        basis = kernel_rows(self.rows, len(self.columns))
        out = []
        for vec in basis:
            for row in self.rows:
                acc = ZERO
                for k, c in row.items():
                    v = vec.get(k)
                    if v is not None:
                        acc = acc + c * v
                if acc:
                    raise AssertionError("kernel vector fails verification")
            out.append({self.columns[k]: c for k, c in vec.items()})
        return out

    def row_as_labels(self, idx):
        return {self.columns[k]: c for k, c in self.rows[idx].items()}


def align_columns(a: LabeledLinearSystem, b: LabeledLinearSystem):
    """Rebuild both systems over the union of their column labels."""
    cols = list(a.columns)
    seen = set(cols)
    for c in b.columns:
        if c not in seen:
            cols.append(c)
            seen.add(c)
    out = []
    for sys in (a, b):
        ns = LabeledLinearSystem(cols)
        for rid, row in zip(sys.row_ids, sys.rows):
            ns.add_row(rid, {sys.columns[k]: c for k, c in row.items()})
        out.append(ns)
    return out[0], out[1]


def row_space_equal(a: LabeledLinearSystem, b: LabeledLinearSystem) -> bool:
    a2, b2 = align_columns(a, b)
    ra, _ = a2.rref()
    rb, _ = b2.rref()
    return ra.pivots == rb.pivots and ra.rows == rb.rows


def row_space_contains(sys: LabeledLinearSystem, other: LabeledLinearSystem):
    """Row ids of `other` whose rows are NOT in the row space of `sys`."""
    s2, o2 = align_columns(sys, other)
    red, _ = s2.rref()
    missing = []
    for rid, row in zip(o2.row_ids, o2.rows):
        if row_reduce_against(row, red.pivots, red.rows):
            missing.append(rid)
    return missing


def row_space_difference(a: LabeledLinearSystem, b: LabeledLinearSystem):
    """Symmetric difference report: rows of each not in the other's span."""
    return {
        "a_not_in_b": row_space_contains(b, a),
        "b_not_in_a": row_space_contains(a, b),
    }


# ---------------------------------------------------------------------------
# text serialization: header of column labels, then `row_id: col=val, ...`
# ---------------------------------------------------------------------------


def dump_system(sys: LabeledLinearSystem) -> str:
    lines = ["columns: " + " ".join(sys.columns)]
    for rid, row in zip(sys.row_ids, sys.rows):
        entries = ", ".join(
            f"{sys.columns[k]}={format_scalar(c)}" for k, c in sorted(row.items())
        )
        lines.append(f"{rid}: {entries}")
    return "\n".join(lines) + "\n"


def load_system(text: str) -> LabeledLinearSystem:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("columns:"):
        raise ValueError("missing 'columns:' header")
    columns = lines[0][len("columns:"):].split()
    sys = LabeledLinearSystem(columns)
    for ln in lines[1:]:
        rid, _, rest = ln.partition(":")
        entries = {}
        rest = rest.strip()
        if rest:
            for piece in rest.split(","):
                label, _, val = piece.strip().partition("=")
                entries[label.strip()] = parse_scalar(val)
        sys.add_row(rid.strip(), entries)
    return sys
