"""Command-line front end.

Exit codes: 0 success / PASS, 1 a check FAILed, 2 usage or input error,
3 the requested computation is not available over the given field.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import modules as MD
from . import scalarext as SX
from . import serialize as S
from .errors import KextError, UnknownCheck, UnsupportedField

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

def _arg(text):
    if text is None:
        return None
    if not text.startswith("catalog:") and not Path(text).is_file():
        bundled = S.catalog_dir() / text
        if bundled.is_file():
            text = str(bundled)
    return S.load_json_arg(text)


def _algebra(args):
    if args.algebra is None:
        return None
    # load once so that every module of this invocation shares the algebra object
    if getattr(args, "_alg", None) is None:
        args._alg = S.load_algebra(_arg(args.algebra))
    return args._alg


def _module(text, args, what="--module"):
    if text is None:
        raise UsageError(f"{what} is required")
    return S.load_module(_arg(text), _algebra(args))


def _field(text):
    if text is None:
        raise UsageError("--extend is required")
    return S.load_field(_arg(text))


def _fmt_rows(rows, K):
    return [[K.format(x) for x in r] for r in rows]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_algebra_info(args):
    E = _algebra(args)
    if E is None:
        raise UsageError("--algebra is required")
    out = {"name": E.name, "field": str(E.field), "dim": E.dim,
           "commutative": E.is_commutative, "center_dim": len(E.center),
           "generators": list(E.generators), "separable": E.is_separable()}
    if E.radical_supported():
        out["radical_dim"] = len(E.radical)
        out["semisimple"] = E.is_semisimple()
    else:
        out["radical_dim"] = None
        out["semisimple"] = True if out["separable"] else None
    frob, lam = E.is_frobenius(args.seed)
    out["frobenius"] = frob
    if frob:
        out["frobenius_functional"] = E.format_element(lam)
    return out, EXIT_OK


def cmd_module_info(args):
    M = _module(args.module, args)
    filt = MD.socle_filtration(M)
    simple, certified = MD.is_simple(M, args.seed)
    return {"name": M.name, "algebra": M.alg.name, "dim": M.dim, "end_dim": MD.end_dim(M),
            "socle_dim": len(MD.socle(M)), "socle_dims": filt.dims,
            "socle_length": filt.slg, "semisimple": filt.slg <= 1,
            "simple": simple, "simple_certified": certified}, EXIT_OK


def cmd_homdim(args):
    X = _module(args.source, args, "--source")
    Y = _module(args.target, args, "--target")
    if X.alg is not Y.alg:
        raise UsageError("--source and --target must share an algebra (use --algebra)")
    return {"dim": MD.hom_space(X, Y).dim}, EXIT_OK


def cmd_radical(args):
    E = _algebra(args)
    if E is None:
        raise UsageError("--algebra is required")
    rad = E.radical
    return {"algebra": E.name, "dim": len(rad), "basis": _fmt_rows(rad, E.field)}, EXIT_OK


def cmd_socle(args):
    M = _module(args.module, args)
    soc = MD.socle(M)
    return {"module": M.name, "dim": len(soc), "basis": _fmt_rows(soc, M.field)}, EXIT_OK


def cmd_semisimplify(args):
    M = _module(args.module, args)
    filt = MD.socle_filtration(M)
    return {"module": M.name, "socle_dims": filt.dims, "socle_length": filt.slg,
            "layer_dims": [X.dim for X in filt.layers],
            "semisimplification": S.module_to_json(filt.semisimplification,
                                                   include_algebra=False)}, EXIT_OK


def _decomposition_json(dec):
    return {"dim": dec.module.dim, "length": dec.length,
            "of_semisimplification": dec.of_semisimplification,
            "summands": [{"dim": s.module.dim, "multiplicity": s.multiplicity,
                          "endo_dim": s.endo_dim} for s in dec.summands],
            "certificate_ok": dec.certificate_ok, "notes": list(dec.notes)}


def cmd_decompose(args):
    M = _module(args.module, args)
    return _decomposition_json(MD.decompose(M, args.seed)), EXIT_OK


def cmd_extend(args):
    K2 = _field(args.extend)
    if args.module is not None:
        M = _module(args.module, args)
        inc = SX.inclusion(M.field, K2)
        return S.module_to_json(SX.t_extend_module(M, inc)), EXIT_OK
    E = _algebra(args)
    if E is None:
        raise UsageError("extend needs --algebra or --module")
    return S.algebra_to_json(SX.extend_algebra(E, SX.inclusion(E.field, K2))), EXIT_OK


def cmd_split(args):
    Sm = _module(args.simple or args.module, args, "--simple")
    inc = SX.inclusion(Sm.field, _field(args.extend))
    rep = SX.split_simple(Sm, inc, args.seed)
    out = rep.to_json()
    return out, EXIT_OK if rep.consistent else EXIT_FAIL


def _run_checks(ids, args):
    from .properties import run_check
    reports = [run_check(i, args.seed, args.trials) for i in ids]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return reports, code


def cmd_check(args):
    if not args.check:
        raise UsageError("--check is required")
    ids = [x.strip() for x in args.check.split(",") if x.strip()]
    return _run_checks(ids, args)


def cmd_suite(args):
    from .properties import CHECK_IDS
    return _run_checks(list(CHECK_IDS), args)


COMMANDS = {
    "algebra-info": cmd_algebra_info,
    "module-info": cmd_module_info,
    "homdim": cmd_homdim,
    "radical": cmd_radical,
    "socle": cmd_socle,
    "semisimplify": cmd_semisimplify,
    "decompose": cmd_decompose,
    "extend": cmd_extend,
    "split": cmd_split,
    "check": cmd_check,
    "suite": cmd_suite,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _text(obj, indent=0) -> list:
    pad = " " * indent
    if not isinstance(obj, dict):
        return [pad + json.dumps(obj)]
    width = max((len(k) for k in obj), default=0)
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 2))
        else:
            lines.append(f"{pad}{k.ljust(width)}  {json.dumps(v)}")
    return lines


def _emit_reports(reports, args, out):
    for r in reports:
        if args.format == "json":
            for o in r.outcomes:
                out.write(json.dumps(o, sort_keys=True) + "\n")
            summary = r.to_json(include_time=args.timing)
            summary.pop("outcomes")
            out.write(json.dumps(summary, sort_keys=True) + "\n")
        else:
            line = (f"{r.check:<30} {'PASS' if r.passed else 'FAIL'}  "
                    f"{len(r.outcomes):>5} instances")
            if args.timing:
                line += f"  {r.wall_time:7.2f} s"
            out.write(line + "\n")
            if r.counterexample:
                out.write(f"  counterexample: {r.counterexample['instance']}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kext", description="Exact scalar extension of module categories.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--check", help="comma-separated check ids")
    p.add_argument("--extend", help="target field: catalog name, tower JSON or file")
    p.add_argument("--algebra")
    p.add_argument("--module")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--simple")
    p.add_argument("--timing", action="store_true", help="include wall times in check reports")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed flags
    out = sys.stdout
    try:
        result, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kext: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedField as exc:
        print(f"kext: unsupported field: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except UnknownCheck as exc:
        print(f"kext: unknown check {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KextError, json.JSONDecodeError, OSError) as exc:
        print(f"kext: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, list):
        _emit_reports(result, args, out)
    elif args.format == "json":
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        out.write("\n".join(_text(result)) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
