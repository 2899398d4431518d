"""Command-line front end.

Exit codes: 0 success / verified, 1 verified false or hypothesis failure,
2 input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import serialize as ser
from .duality import dual_superpotential, dualize, is_calabi_yau, krawitz_dual, weight_lattice
from .errors import LGDualError
from .groups import DEFAULT_CAP
from .model import QuotientLGModel, factorize, quotient_superpotential
from .selftest import run_selftest
from .verify import verify_cy_corollary, verify_equal_sups, verify_main

THEOREMS = {"main": verify_main, "equal-sups": verify_equal_sups, "cy-corollary": verify_cy_corollary}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str) -> QuotientLGModel:
    model = ser.load_model_text(_read(path))
    for name in model.exponents.unused_variables():
        print(f"warning: variable {name} appears in no monomial", file=sys.stderr)
    return model


def _is_matrix(v: Any) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, list) and all(not isinstance(x, (list, dict)) for x in r) for r in v)


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                lines += render_text(val, indent + 1)
            elif _is_matrix(val):
                cells = [[_scalar(x) for x in r] for r in val]
                w = max((len(c) for r in cells for c in r), default=1)
                lines.append(f"{pad}{key}:")
                lines += [f"{pad}  [ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells]
            elif isinstance(val, list) and val and isinstance(val[0], dict):
                lines.append(f"{pad}{key}:")
                for item in val:
                    lines.append(f"{pad}  -")
                    lines += render_text(item, indent + 2)
            elif isinstance(val, list):
                lines.append(f"{pad}{key.ljust(width)} : " + (", ".join(_scalar(x) for x in val) if val else "(none)"))
            else:
                lines.append(f"{pad}{key.ljust(width)} : {_scalar(val)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "text":
        sys.stdout.write("\n".join(render_text(obj)) + "\n")
    else:
        sys.stdout.write(ser.dumps(obj))


def cmd_parse(args) -> int:
    model = _load(args.path)
    out = ser.model_json(model)
    out["warnings"] = [f"variable {v} appears in no monomial" for v in model.exponents.unused_variables()]
    _emit(out, args.format)
    return 0


def cmd_dual(args) -> int:
    _emit(ser.dual_json(dualize(_load(args.path))), args.format)
    return 0


def cmd_krawitz(args) -> int:
    model = _load(args.path)
    _emit({"source": ser.model_json(model), "krawitz_dual": ser.group_json(krawitz_dual(model.exponents, model.group))}, args.format)
    return 0


def cmd_cy(args) -> int:
    model = _load(args.path)
    out = ser.cy_json(is_calabi_yau(model.exponents))
    out["P"] = ser.matrix_json(model.P)
    _emit(out, args.format)
    return 0


def cmd_weights(args) -> int:
    f = factorize(_load(args.path))
    chars = quotient_superpotential(f) if args.side == "primal" else dual_superpotential(f)
    out = ser.weights_json(weight_lattice(chars))
    out["side"] = args.side
    out["monomials"] = ser.character_sum_json(chars)
    _emit(out, args.format)
    return 0


def cmd_verify(args) -> int:
    if args.path_a == "-" and args.path_b == "-":
        raise InputError("only one model may be read from stdin")
    a, b = _load(args.path_a), _load(args.path_b)
    cert = THEOREMS[args.theorem](a, b, seed=args.seed)
    _emit(cert.to_json(), args.format)
    return 0 if cert.passed else 1


def cmd_selftest(args) -> int:
    summary = run_selftest(args.seed, args.cap)
    _emit(summary, args.format)
    return 0 if summary["verdict"] == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized layers")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration guard")

    parser = argparse.ArgumentParser(prog="lgdual", description="Duality of quotient Landau-Ginzburg models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("parse", cmd_parse, "canonical model JSON").add_argument("path")
    add("dual", cmd_dual, "dual model (P^T, G^T)").add_argument("path")
    add("krawitz", cmd_krawitz, "Krawitz dual group").add_argument("path")
    add("cy", cmd_cy, "Calabi-Yau report").add_argument("path")
    p = add("weights", cmd_weights, "weight-vector lattice")
    p.add_argument("path")
    p.add_argument("--side", choices=("primal", "dual"), default="dual")
    p = add("verify", cmd_verify, "certify a theorem for two models sharing a group")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--theorem", choices=sorted(THEOREMS), default="main")
    add("selftest", cmd_selftest, "run the invariant suite over the bundled corpus")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        parser.error("--cap must be positive")
    try:
        return args.func(args)
    except (InputError, LGDualError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
