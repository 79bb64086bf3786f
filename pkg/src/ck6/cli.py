"""Command-line surface: classification runs, kernel counts, family
verification, weight scans, representation inspection and axiom suites.

Every subcommand renders one report, as deterministic JSON or text, and
exits 0 on success, 1 on any failed verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from . import classify as cls
from .grassmann import GrassmannElement, monomials, order_of
from .induced import (
    ConcreteSpace,
    InducedVector,
    lambda_action_direct,
    lambda_action_dual,
    t_conjugate,
    t_conjugate_inverse,
)
from .kalgebra import (
    ConformalElement,
    KElement,
    ann_bracket,
    e16_basis_of_degree,
    is_in_e16,
    lambda_bracket,
    lambda_substitute_minus,
    so6_structure,
)
from .linalg import row_space_equal
from .repn import irrep, vector_rep
from .weights import (
    Weight,
    SINGULAR_FAMILIES,
    degenerate_table,
    family_degree,
    family_weight,
    matching_families,
    singular_family_instances,
    singular_weight,
)

FAMILY_PARAM_NAMES = {f: names for f, (names, _) in SINGULAR_FAMILIES.items()}


def _render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, default=str)
    lines = [f"command: {report['command']}"]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for key in obj:
                val = obj[key]
                if isinstance(val, (dict, list)):
                    lines.append(f"{pad}{key}:")
                    walk(val, indent + 1)
                else:
                    lines.append(f"{pad}{key}: {val}")
        elif isinstance(obj, list):
            for val in obj:
                if isinstance(val, (dict, list)):
                    walk(val, indent + 1)
                    lines.append(pad + "-")
                else:
                    lines.append(f"{pad}- {val}")

    walk(report.get("results", {}), 0)
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)


def _finish(report, args):
    print(_render(report, args.format))
    return 0 if report["status"] in ("pass", "info") else 1


def _parse_params(fam, text):
    names = FAMILY_PARAM_NAMES[fam]
    given = {}
    if text:
        for piece in text.split(","):
            key, _, val = piece.partition("=")
            if not val:
                raise ValueError(f"malformed parameter {piece!r}")
            given[key.strip()] = int(val)
    missing = [n for n in names if n not in given]
    extra = [k for k in given if k not in names]
    if missing or extra:
        raise ValueError(
            f"family {fam} takes parameters {', '.join(names) or '(none)'}"
        )
    return tuple(given[n] for n in names)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_classify(args):
    degree = -abs(args.degree)
    rep = cls.reduce_and_substitute(degree, fixtures_dir=args.fixtures)
    verdict = {
        -5: "unique singular vector family at (9/2; 1/2, 1/2, -1/2)",
        -4: "no singular vectors",
        -3: "singular vectors along the two one-parameter families",
        -2: "no singular vectors",
        -1: "singular vectors along the three two-parameter families",
    }[degree]
    if rep["status"] == "pass":
        rep["verdict"] = verdict
    report = {
        "command": f"classify --degree {abs(args.degree)}",
        "results": rep,
        "status": rep["status"],
    }
    return _finish(report, args)


def cmd_kernel(args):
    w = Weight.parse(args.weight)
    degree = -abs(args.degree)
    dim, basis = cls.kernel_singular(w, degree)
    results = {
        "weight": str(w),
        "degree": degree,
        "kernel_dim": dim,
        "families": [f"{fam}{list(params)}" for fam, params in matching_families(w, degree)],
    }
    expected = 1 if results["families"] else 0
    results["expected"] = expected
    status = "pass" if dim == expected else "fail"
    report = {
        "command": f"kernel --weight {args.weight} --degree {abs(args.degree)}",
        "results": results,
        "status": status,
    }
    return _finish(report, args)


def cmd_verify(args):
    fam = args.family
    params = _parse_params(fam, args.params)
    m, rep = cls.build_singular_vector(fam, params)
    ok = cls.check_singular(m)
    results = {
        "family": fam,
        "params": list(params),
        "module_weight": str(family_weight(fam, params)),
        "degree": family_degree(fam),
        "is_singular": ok,
    }
    status = "pass" if ok else "fail"
    if ok:
        wt = cls.weight_of(m)
        want = singular_weight(fam, params)
        results["singular_weight"] = str(wt)
        results["table_weight"] = str(want)
        if wt != want:
            status = "fail"
        if fam == "a":
            mu0 = family_weight(fam, params).mu0
            results["e00_conventions"] = {
                "module_mu0": str(mu0),
                "module_mu0_plus_degree": str(mu0 + family_degree(fam)),
                "computed": str(wt.mu0),
            }
    report = {
        "command": f"verify --family {fam}" + (f" --params {args.params}" if args.params else ""),
        "results": results,
        "status": status,
    }
    return _finish(report, args)


def cmd_scan(args):
    degrees = (
        [-1, -2, -3, -4, -5]
        if args.degrees == "all"
        else [-abs(int(d)) for d in args.degrees.split(",")]
    )
    rows = cls.scan_weights(args.max_label, degrees, rep_bound=args.bound)
    bad = [r for r in rows if not r["ok"]]
    report = {
        "command": f"scan --max-label {args.max_label} --degrees {args.degrees}",
        "results": {
            "cases": rows if args.verbose else len(rows),
            "failures": bad,
        },
        "status": "pass" if not bad else "fail",
    }
    return _finish(report, args)


def cmd_irrep(args):
    w = Weight.parse(args.weight)
    rep = irrep(w, bound=args.bound)
    weight_counts = {}
    for wt in rep.basis_weights:
        key = "(" + ", ".join(str(x) for x in wt) + ")"
        weight_counts[key] = weight_counts.get(key, 0) + 1
    report = {
        "command": f"irrep --weight {args.weight}",
        "results": {
            "weight": str(w),
            "dim": rep.dim,
            "e00_scalar": str(rep.e00_scalar),
            "weight_diagram": dict(sorted(weight_counts.items())),
        },
        "status": "pass",
    }
    return _finish(report, args)


def cmd_tables(args):
    singular = []
    for fam, params in singular_family_instances(args.max):
        singular.append({
            "family": fam,
            "params": list(params),
            "weight": str(family_weight(fam, params)),
            "singular_weight": str(singular_weight(fam, params)),
            "degree": family_degree(fam),
        })
    degen = [str(w) for w in degenerate_table(args.max)]
    report = {
        "command": f"tables --max {args.max}",
        "results": {"singular_vectors": singular, "degenerate": degen},
        "status": "pass",
    }
    return _finish(report, args)


# -- selfcheck: bounded versions of the axiom suites -------------------------


def _selfcheck_lambda_bracket(rng, failures):
    masks = monomials(6)
    for _ in range(200):
        xa, xb = rng.choice(masks), rng.choice(masks)
        da, db = rng.randrange(0, 2), rng.randrange(0, 2)
        a = ConformalElement(6, {(da, xa): 1})
        b = ConformalElement(6, {(db, xb): 1})
        lhs = lambda_bracket(a, b)
        rhs = lambda_substitute_minus(lambda_bracket(b, a), 6)
        sign = -1 if (order_of(xa) * order_of(xb)) & 1 == 0 else 1
        if lhs != rhs.scale(sign):
            failures.append(f"skew-symmetry at masks {xa:06b},{xb:06b}")
            return


def _selfcheck_ann_bracket(rng, failures):
    basis = [KElement(6, {(m, mask): 1}) for m in (0, 1) for mask in monomials(6, orders=[0, 1, 2, 3])]
    for _ in range(120):
        a, b, c = (rng.choice(basis) for _ in range(3))
        pa = order_of(next(iter(a.terms))[1]) & 1
        pb = order_of(next(iter(b.terms))[1]) & 1
        lhs = ann_bracket(a, ann_bracket(b, c))
        rhs = ann_bracket(ann_bracket(a, b), c)
        tail = ann_bracket(b, ann_bracket(a, c))
        if (pa * pb) & 1:
            tail = tail.scale(-1)
        if lhs != rhs + tail:
            failures.append("annihilation-bracket Jacobi failure")
            return


def _selfcheck_e16_closure(failures):
    basis = []
    for d in range(-2, 3):
        basis.extend(e16_basis_of_degree(d))
    for a, b in itertools.product(basis, repeat=2):
        if not is_in_e16(ann_bracket(a, b)):
            failures.append("E(1,6) bracket closure failure")
            return


def _selfcheck_t_equivalence(rng, failures):
    space = ConcreteSpace(vector_rep(e00_scalar=2))
    from .scalars import ONE, ZERO

    def bv(k):
        return tuple(ONE if j == k else ZERO for j in range(6))

    masks = monomials(6)
    for _ in range(150):
        f = GrassmannElement(6, {rng.choice(masks): 1})
        m = InducedVector(space, {(0, rng.choice(masks)): bv(rng.randrange(6))})
        dual = lambda_action_dual(f, m)
        via = {
            j: t_conjugate(v)
            for j, v in lambda_action_direct(f, t_conjugate_inverse(m)).items()
        }
        via = {j: v for j, v in via.items() if not v.is_zero()}
        if dual != via:
            failures.append("lambda-action dual/direct T-conjugation mismatch")
            return


def _selfcheck_equation_equivalence(degrees, failures):
    for degree in degrees:
        direct = cls.assemble_formal_system(degree, source="direct")
        lemma = cls.assemble_formal_system(degree, source="lemma")
        if not row_space_equal(direct, lemma):
            failures.append(f"condition-list equivalence fails at degree {degree}")


def cmd_selfcheck(args):
    rng = random.Random(20240 + args.seed)
    failures = []
    so6_structure()  # construction runs the Cartan-Weyl assertions
    _selfcheck_lambda_bracket(rng, failures)
    _selfcheck_ann_bracket(rng, failures)
    _selfcheck_e16_closure(failures)
    _selfcheck_t_equivalence(rng, failures)
    degrees = [-1, -2] if args.quick else [-1, -2, -3, -4, -5]
    _selfcheck_equation_equivalence(degrees, failures)
    report = {
        "command": "selfcheck" + (" --quick" if args.quick else ""),
        "results": {
            "suites": [
                "cartan-weyl relations",
                "lambda-bracket skew symmetry",
                "annihilation-bracket Jacobi",
                "E(1,6) closure",
                "action conjugation equivalence",
                f"condition-list equivalence at degrees {degrees}",
            ],
            "failures": failures,
        },
        "status": "pass" if not failures else "fail",
    }
    return _finish(report, args)


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ck6",
        description="Singular-vector classification for E(1,6) induced modules",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--fixtures", default=None, help="fixture directory override")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("classify", help="formal pipeline at one degree")
    p.add_argument("--degree", type=int, required=True, choices=(1, 2, 3, 4, 5))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("kernel", help="concrete singular-vector count")
    p.add_argument("--weight", required=True)
    p.add_argument("--degree", type=int, required=True, choices=(1, 2, 3, 4, 5))
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("verify", help="check an explicit family vector")
    p.add_argument("--family", required=True, choices=tuple("abcdef"))
    p.add_argument("--params", default="")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="kernel dimensions over a weight grid")
    p.add_argument("--max-label", type=int, default=1)
    p.add_argument("--degrees", default="all")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("irrep", help="construct a concrete module")
    p.add_argument("--weight", required=True)
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_irrep)

    p = sub.add_parser("selfcheck", help="axiom suites")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selfcheck)

    p = sub.add_parser("tables", help="family and degenerate weight tables")
    p.add_argument("--max", type=int, default=3)
    p.set_defaults(func=cmd_tables)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
