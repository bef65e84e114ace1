"""Command line driver.

Every command reads one .alg file (except `catalog`), prints a human
report or, with --machine, the same tree as JSON, and exits with:

    0   command succeeded / all checked properties hold
    1   a checked property is false (a witness is included)
    2   usage or input errors

Reports carry no timestamps, so machine output is stable under re-run.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from . import structure
from .actions import generate_group, orbit, orbit_union, verify_cb_preservation
from .algebra import Algebra
from .errors import CapExceeded, CbalgError, NotASubspace
from .fields import Field, PrimeField, field_from_spec
from .fileformat import parse_algebra_file, render_algebra
from .identities import identity_report, symmetric_leibniz_pointwise
from .linalg import Subspace
from .structure import (
    DEFAULT_CAP,
    cb_element_subalgebra,
    cb_element_test,
    center,
    centralizer,
    decide_cb_cl,
    series,
)

IDEAL_NOTE = "ideal containments checked: I*A <= I and A*I <= I (two-sided)"


# ----------------------------------------------------------------------
# rendering helpers
# ----------------------------------------------------------------------
def _field_name(field: Field) -> str:
    return f"F{field.p}" if isinstance(field, PrimeField) else "Q"


def _element(A: Algebra, v) -> dict:
    return {"coords": [A.field.render(x) for x in v], "pretty": A.format_element(v)}


def _subspace(A: Algebra, S: Subspace) -> dict:
    return {"dim": S.dim, "basis": [A.format_element(row) for row in S.basis]}


def _witness(A: Algebra, w) -> dict:
    out = {"indices": list(w.indices), "expression": w.expression}
    out["defect"] = A.format_element(w.defect)
    return out


def _cb_block(A: Algebra, report) -> dict:
    block = {"method": report.method, "is_cb": report.is_cb, "is_cl": report.is_cl}
    if report.cb_witness is not None:
        w = report.cb_witness
        block["cb_witness"] = {
            "x": A.format_element(w.x),
            "y": A.format_element(w.y),
            "z": A.format_element(w.z),
            "defect (x*z)*y": A.format_element(w.defect),
        }
    if report.cl_witness is not None:
        w = report.cl_witness
        block["cl_witness"] = {
            "x": A.format_element(w.x),
            "centralizer_member": A.format_element(w.member),
            "factor": A.format_element(w.factor),
            "side": w.side,
            "product_outside_centralizer": A.format_element(w.product),
        }
    return block


def _human(obj, indent: int = 0, out=None):
    pad = "  " * indent
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        for k, v in obj.items():
            if isinstance(v, dict):
                print(f"{pad}{k}:", file=out)
                _human(v, indent + 1, out)
            elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
                print(f"{pad}{k}:", file=out)
                _table(v, indent + 1, out)
            else:
                print(f"{pad}{str(k):<{width}}  {_scalar_str(v)}", file=out)
    else:
        print(f"{pad}{_scalar_str(obj)}", file=out)


def _scalar_str(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_str(x) for x in v) + "]"
    return str(v)


def _table(rows, indent: int, out=None):
    pad = "  " * indent
    cols = list(rows[0].keys())
    widths = {c: max(len(str(c)), max(len(_scalar_str(r.get(c))) for r in rows)) for c in cols}
    print(pad + "  ".join(f"{c:<{widths[c]}}" for c in cols), file=out)
    for r in rows:
        print(pad + "  ".join(f"{_scalar_str(r.get(c)):<{widths[c]}}" for c in cols), file=out)


def _emit(report: dict, machine: bool) -> None:
    if machine:
        print(json.dumps(report, indent=2))
    else:
        _human(report)


# ----------------------------------------------------------------------
# shared loading
# ----------------------------------------------------------------------
def _load(args):
    override = field_from_spec(args.field) if getattr(args, "field", None) else None
    return parse_algebra_file(args.file, field_override=override)


def _parse_element(A: Algebra, text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != A.dim:
        raise CbalgError(f"element needs {A.dim} comma-separated coordinates")
    return tuple(A.field.parse(p) for p in parts)


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------
def cmd_check(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    rep = identity_report(A)
    report = {
        "command": "check",
        "file": args.file,
        "field": _field_name(A.field),
        "dim": A.dim,
        "identities": {
            "anti_commutative": rep.anti_commutative,
            "anti_associative": rep.anti_associative,
            "lie": rep.lie,
            "associative": rep.associative,
            "right_leibniz": rep.right_leibniz,
            "left_leibniz": rep.left_leibniz,
            "symmetric_leibniz": rep.symmetric_leibniz,
        },
    }
    if rep.witnesses:
        report["identity_witnesses"] = {k: _witness(A, w) for k, w in rep.witnesses.items()}
    if isinstance(A.field, PrimeField):
        try:
            ok, _ = symmetric_leibniz_pointwise(A, args.cap)
            report["symmetric_leibniz_pointwise"] = ok
        except CapExceeded:
            report["symmetric_leibniz_pointwise"] = "skipped (cap)"
    report["center"] = _subspace(A, center(A))
    low = series(A, "lower_central")
    der = series(A, "derived")
    report["lower_central_dims"] = list(low.dims)
    report["nilpotency_class"] = low.nilpotency_class
    report["derived_dims"] = list(der.dims)
    report["solvable"] = der.solvable
    report["metabelian"] = der.metabelian
    finite = isinstance(A.field, PrimeField)
    in_cap = finite and A.field.p ** A.dim <= args.cap
    exit_code = 0
    if rep.anti_commutative:
        mode = "both" if (args.brute and in_cap) else "theorem"
        cb = decide_cb_cl(A, mode, args.cap)
        report["cb"] = _cb_block(A, cb)
    elif args.brute and in_cap:
        cb = decide_cb_cl(A, "brute_force", args.cap)
        report["cb"] = _cb_block(A, cb)
    else:
        cb = None
        report["cb"] = {
            "method": "none",
            "note": "not anticommutative; rerun with --brute over a finite field",
        }
    report["note"] = IDEAL_NOTE
    if cb is not None and not (cb.is_cb and cb.is_cl):
        exit_code = 1
    _emit(report, args.machine)
    return exit_code


def cmd_centralizer(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    if not args.element:
        raise CbalgError("centralizer needs --element")
    x = _parse_element(A, args.element)
    C = centralizer(A, x)
    left, right = A.ideal_containments(C)
    report = {
        "command": "centralizer",
        "file": args.file,
        "field": _field_name(A.field),
        "x": _element(A, x),
        "centralizer": _subspace(A, C),
        "is_ideal": left and right,
        "containments": {"C*A <= C": left, "A*C <= C": right},
        "note": IDEAL_NOTE,
    }
    _emit(report, args.machine)
    return 0


def cmd_series(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    rep = series(A, args.kind)
    report = {
        "command": "series",
        "file": args.file,
        "field": _field_name(A.field),
        "kind": rep.kind,
        "dims": list(rep.dims),
        "terms": [
            {"index": i + 1, "dim": t.dim, "basis": [A.format_element(b) for b in t.basis]}
            for i, t in enumerate(rep.terms)
        ],
        "nilpotency_class": rep.nilpotency_class,
        "solvable": rep.solvable,
        "metabelian": rep.metabelian,
    }
    _emit(report, args.machine)
    return 0


def cmd_cb(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    from .identities import is_anti_commutative

    anti, _ = is_anti_commutative(A)
    if args.brute:
        mode = "both" if anti else "brute_force"
    else:
        mode = "theorem"
    cb = decide_cb_cl(A, mode, args.cap)
    report = {
        "command": "cb",
        "file": args.file,
        "field": _field_name(A.field),
        **_cb_block(A, cb),
    }
    _emit(report, args.machine)
    return 0 if cb.is_cb and cb.is_cl else 1


def cmd_cb_elements(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    from .identities import is_anti_commutative

    anti, _ = is_anti_commutative(A)
    report = {"command": "cb-elements", "file": args.file, "field": _field_name(A.field)}
    exit_code = 0
    if args.element:
        z = _parse_element(A, args.element)
        report["z"] = _element(A, z)
        verdicts = {}
        if anti:
            res = cb_element_test(A, z, "necessary", args.cap)
            verdicts["necessary"] = res.verdict
            witness = res.witness
        if isinstance(A.field, PrimeField):
            res = cb_element_test(A, z, "brute_force", args.cap)
            verdicts["brute_force"] = res.verdict
            witness = res.witness
        if not verdicts:
            raise CbalgError("no applicable test: not anticommutative and not a finite field")
        report["verdicts"] = verdicts
        if witness is not None:
            report["witness"] = {
                "x": A.format_element(witness[0]),
                "y_in_centralizer_of_x": A.format_element(witness[1]),
            }
        if "no" in verdicts.values():
            exit_code = 1
    else:
        try:
            k = cb_element_subalgebra(A, args.cap)
            report["cb_elements"] = {
                "count": k.count,
                "K": _subspace(A, k.K),
                "closed_under_product": k.closed,
                "is_subspace": True,
            }
        except NotASubspace as exc:
            report["cb_elements"] = {"is_subspace": False, "detail": str(exc)}
            exit_code = 1
    _emit(report, args.machine)
    return exit_code


def cmd_catalog(args) -> int:
    field = field_from_spec(args.field) if args.field else None
    if args.action == "list":
        rows = [
            {
                "name": e.name,
                "dim": e.dim,
                "parametric": e.parametric,
                "expected_cb": e.expected_cb,
            }
            for e in catalog_mod.entries()
        ]
        _emit({"command": "catalog list", "entries": rows}, args.machine)
        return 0
    if args.action == "get":
        if args.name is None:
            raise CbalgError("catalog get needs a NAME")
        field = field or field_from_spec("Q")
        eps = field.parse(args.eps) if args.eps is not None else None
        A = catalog_mod.get_entry(args.name, field, eps)
        sys.stdout.write(render_algebra(A))
        return 0
    # catalog check
    field = field or field_from_spec("Q")
    eps_samples = None
    if args.eps is not None:
        eps_samples = tuple(field.parse(t.strip()) for t in args.eps.split(","))
    rows = catalog_mod.check_catalog(field, eps_samples)
    table = [
        {
            "name": r.name,
            "dim": r.dim,
            "eps": "-" if not r.parametric else ",".join(
                field.render(s[0]) for s in r.samples
            ),
            "expected_cb": r.expected_cb,
            "computed_cb": r.computed_cb,
            "L3_zero": r.l3_zero,
            "match": r.match,
        }
        for r in rows
    ]
    all_match = all(r.match for r in rows)
    report = {
        "command": "catalog check",
        "field": _field_name(field),
        "rows": table,
        "all_match": all_match,
    }
    _emit(report, args.machine)
    return 0 if all_match else 1


def cmd_construct(args) -> int:
    parsed = _load(args)
    if parsed.decomposition is None:
        raise CbalgError("the file has no decomposition block")
    from .construct import build_from_decomposition
    from .errors import IllDefined

    report = {"command": "construct", "file": args.file}
    try:
        result = build_from_decomposition(parsed.decomposition)
    except IllDefined as exc:
        report["well_defined"] = False
        report["detail"] = str(exc)
        _emit(report, args.machine)
        return 1
    rep = result.report
    report["conditions"] = {f"cond{i}": getattr(rep, f"cond{i}") for i in range(1, 7)}
    report["well_defined"] = rep.well_defined
    report["center_exact"] = rep.center_exact
    if rep.notes:
        report["notes"] = rep.notes
    report["algebra"] = json.loads(render_algebra(result.algebra))
    _emit(report, args.machine)
    return 0


def cmd_liesation(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    from .construct import liesation

    res = liesation(A)
    from .identities import is_lie

    ok, _ = is_lie(res.quotient)
    report = {
        "command": "liesation",
        "file": args.file,
        "field": _field_name(A.field),
        "ideal": _subspace(A, res.ideal),
        "quotient_dim": res.quotient.dim,
        "quotient_is_lie": ok,
        "quotient": json.loads(render_algebra(res.quotient)),
    }
    _emit(report, args.machine)
    return 0


def cmd_orbit(args) -> int:
    parsed = _load(args)
    A = parsed.algebra
    if not parsed.generators:
        raise CbalgError("the file has no generators block")
    action = generate_group(A, parsed.generators, cap=args.cap)
    report = {
        "command": "orbit",
        "file": args.file,
        "field": _field_name(A.field),
        "generators": len(parsed.generators),
        "group_order": action.order,
    }
    exit_code = 0
    if args.element:
        x = _parse_element(A, args.element)
        orb = sorted(orbit(action, x))
        report["element"] = _element(A, x)
        report["orbit_size"] = len(orb)
        report["orbit"] = [A.format_element(v) for v in orb]
    finite = isinstance(A.field, PrimeField)
    if finite and A.field.p ** A.dim <= args.cap:
        pres = verify_cb_preservation(action, args.cap)
        union = orbit_union(action, args.cap)
        report["cb_elements"] = pres.cb_count
        report["space_size"] = pres.space_size
        report["preservation_holds"] = pres.holds
        if not pres.holds:
            report["violations"] = len(pres.violations)
            exit_code = 1
        report["orbit_union"] = {
            "size": union.size,
            "span_dim": union.span.dim,
            "is_subalgebra": union.is_subalgebra,
            "set_equals_span": union.set_equals_span,
        }
        if not union.is_subalgebra:
            exit_code = 1
    else:
        report["preservation"] = "skipped (infinite field or cap); certification needs enumeration"
    _emit(report, args.machine)
    return exit_code


# ----------------------------------------------------------------------
# argument surface
# ----------------------------------------------------------------------
def _add_common(p, element=False, brute=False):
    p.add_argument("file", help="path to an .alg file")
    p.add_argument("--field", help="override the file's field: Q, F<p> or Fp:<p>")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"enumeration cap on p^n (default {DEFAULT_CAP})")
    p.add_argument("--machine", action="store_true", help="JSON output")
    if element:
        p.add_argument("--element", help="comma-separated coordinates")
    if brute:
        p.add_argument("--brute", action="store_true",
                       help="force the brute-force oracle (finite fields)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbalg",
        description="exact analysis of nonassociative algebras given by structure constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="identities, center, series and bonding verdicts")
    _add_common(p, brute=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("centralizer", help="centralizer of an element, with the ideal test")
    _add_common(p, element=True)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("series", help="lower central or derived series")
    _add_common(p)
    p.add_argument("--kind", choices=["lower_central", "derived"], default="lower_central")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("cb", help="bonding / centralizer-ideal verdict")
    _add_common(p, brute=True)
    p.set_defaults(func=cmd_cb)

    p = sub.add_parser("cb-elements", help="the subalgebra of CB-elements, or test one element")
    _add_common(p, element=True)
    p.set_defaults(func=cmd_cb_elements)

    p = sub.add_parser("catalog", help="the built-in nilpotent Lie catalog")
    p.add_argument("action", choices=["list", "check", "get"])
    p.add_argument("name", nargs="?", help="entry name for `get`, e.g. L5,4")
    p.add_argument("--field", help="Q, F<p> or Fp:<p> (default Q)")
    p.add_argument("--eps", help="parameter(s); a single value for get, a CSV list for check")
    p.add_argument("--machine", action="store_true", help="JSON output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("construct", help="build an algebra from a decomposition block")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("liesation", help="largest Lie quotient of a Leibniz algebra")
    _add_common(p)
    p.set_defaults(func=cmd_liesation)

    p = sub.add_parser("orbit", help="group action analysis from a generators block")
    _add_common(p, element=True)
    p.set_defaults(func=cmd_orbit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CbalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
