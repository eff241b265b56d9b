"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails
(a witness is printed), 2 on unknown commands or malformed input.  JSON
reports are versioned with a ``schema`` field and are byte-identical for
identical configurations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import (
    AlgebraParams,
    Element,
    InvalidIndexError,
    Window,
    bracket,
    center_in_window,
    check_jacobi,
)
from .cohomology import solve_h1, verify_invariants_are_central, verify_skew_image_lemma
from .derivations import is_derivation, table_from_json
from .literals import LiteralError, parse_element, parse_tensor2
from .tensors import (
    check_cojacobi_identity,
    check_mybe,
    coboundary,
    skew_part_membership,
    ybe_c,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

MAX_WINDOW = 64


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text:
        raise UsageError(f"decimal input is rejected, use a rational like -5/3: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational: {text!r} ({exc})")


@dataclass
class JobConfig:
    """A validated single-command configuration."""

    command: str
    params: Optional[AlgebraParams]
    window: Window
    r_path: Optional[str] = None
    derivation_path: Optional[str] = None
    degree: Fraction = Fraction(0)
    target: str = "algebra"
    order: int = 2
    json_output: bool = False
    threads: int = 1
    operands: tuple = ()


def _config_from_args(args: argparse.Namespace) -> JobConfig:
    params = None
    if getattr(args, "s", None) is not None:
        s = _parse_rational(args.s)
        lam = _parse_rational(args.lam)
        central = {"true": True, "false": False}[args.central]
        try:
            params = AlgebraParams(s, lam, central)
        except ValueError as exc:
            raise UsageError(str(exc))
    bound = getattr(args, "window", 12)
    if not (0 < bound <= MAX_WINDOW):
        raise UsageError(f"window bound must be in 1..{MAX_WINDOW}, got {bound}")
    threads = 1
    env = os.environ.get("SVLIE_THREADS")
    if env is not None:
        try:
            threads = int(env)
        except ValueError:
            raise UsageError(f"SVLIE_THREADS must be an integer, got {env!r}")
        if threads < 1:
            raise UsageError("SVLIE_THREADS must be at least 1")
    degree = _parse_rational(getattr(args, "degree", "0") or "0")
    return JobConfig(
        command=args.command,
        params=params,
        window=Window.symmetric(bound),
        r_path=getattr(args, "r", None),
        derivation_path=getattr(args, "derivation", None),
        degree=degree,
        target=getattr(args, "target", "algebra"),
        order=getattr(args, "order", 2),
        json_output=bool(getattr(args, "json", False)),
        threads=threads,
        operands=tuple(getattr(args, "operands", ()) or ()),
    )


def _load_r(cfg: JobConfig):
    if not cfg.r_path:
        raise UsageError("this command needs an r-matrix file (--r FILE)")
    text = Path(cfg.r_path).read_text()
    r = parse_tensor2(text)
    if not skew_part_membership(r):
        print("warning: r is not skew (not in the image of 1 - twist)", file=sys.stderr)
    return r


def _emit(cfg: JobConfig, payload: dict, human: str) -> None:
    if cfg.json_output:
        payload = {"schema": 1, "command": cfg.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _params_dict(p: AlgebraParams) -> dict:
    return {"s": str(p.s), "lambda": str(p.lam), "central": p.central}


# ---------------------------------------------------------------------------
# Command handlers (return process exit codes)
# ---------------------------------------------------------------------------

def _cmd_bracket(cfg: JobConfig) -> int:
    if len(cfg.operands) != 2:
        raise UsageError("bracket takes two element literals")
    x = parse_element(cfg.operands[0])
    y = parse_element(cfg.operands[1])
    out = bracket(x, y, cfg.params)
    _emit(cfg, {"params": _params_dict(cfg.params), "result": str(out)}, str(out))
    return EXIT_OK


def _cmd_jacobi(cfg: JobConfig) -> int:
    rep = check_jacobi(cfg.params, cfg.window)
    human = (
        f"Jacobi: {'pass' if rep.ok else 'FAIL'} "
        f"({rep.checked} triples checked)"
    )
    if not rep.ok:
        gx, gy, gz, res = rep.failures[0]
        human += f"\nwitness: ({gx.label()}, {gy.label()}, {gz.label()}) -> {res}"
    _emit(
        cfg,
        {
            "params": _params_dict(cfg.params),
            "window": [cfg.window.lo, cfg.window.hi],
            "checked": rep.checked,
            "violations": len(rep.failures),
        },
        human,
    )
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def _cmd_center(cfg: JobConfig) -> int:
    basis = center_in_window(cfg.params, cfg.window)
    human = "center basis: " + (", ".join(str(b) for b in basis) if basis else "(zero)")
    _emit(
        cfg,
        {
            "params": _params_dict(cfg.params),
            "window": [cfg.window.lo, cfg.window.hi],
            "basis": [str(b) for b in basis],
        },
        human,
    )
    return EXIT_OK


def _cmd_cybe(cfg: JobConfig) -> int:
    r = _load_r(cfg)
    obstruction = ybe_c(r, cfg.params)
    ok = not obstruction
    human = "CYBE: satisfied" if ok else f"CYBE: violated, c(r) = {obstruction}"
    _emit(
        cfg,
        {"params": _params_dict(cfg.params), "satisfied": ok, "obstruction_terms": len(obstruction.terms)},
        human,
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_mybe(cfg: JobConfig) -> int:
    r = _load_r(cfg)
    ok = check_mybe(r, cfg.params, cfg.window)
    human = "MYBE: satisfied" if ok else "MYBE: violated"
    _emit(
        cfg,
        {
            "params": _params_dict(cfg.params),
            "window": [cfg.window.lo, cfg.window.hi],
            "satisfied": ok,
        },
        human,
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_coboundary(cfg: JobConfig) -> int:
    if len(cfg.operands) != 1:
        raise UsageError("coboundary takes one element literal")
    r = _load_r(cfg)
    x = parse_element(cfg.operands[0])
    out = coboundary(r, x, cfg.params)
    _emit(cfg, {"params": _params_dict(cfg.params), "result": str(out)}, str(out))
    return EXIT_OK


def _cmd_cojacobi(cfg: JobConfig) -> int:
    r = _load_r(cfg)
    bad = []
    for g in cfg.window.basis_indices(cfg.params):
        if not check_cojacobi_identity(r, Element.basis(g), cfg.params):
            bad.append(g.label())
    human = "co-Jacobi balance: holds" if not bad else f"co-Jacobi balance: broken at {bad}"
    _emit(
        cfg,
        {
            "params": _params_dict(cfg.params),
            "window": [cfg.window.lo, cfg.window.hi],
            "violations": bad,
        },
        human,
    )
    return EXIT_OK if not bad else EXIT_CHECK_FAILED


def _cmd_check_derivation(cfg: JobConfig) -> int:
    if not cfg.derivation_path:
        raise UsageError("check-derivation needs --derivation FILE")
    table = table_from_json(Path(cfg.derivation_path).read_text())
    rep = is_derivation(table, cfg.params)
    human = (
        f"derivation check: {'pass' if rep.ok else 'FAIL'} "
        f"({rep.checked} pairs checked, {rep.skipped} boundary pairs skipped)"
    )
    if not rep.ok:
        g, h, lhs, rhs = rep.witness()
        human += f"\nwitness pair ({g.label()}, {h.label()}): D[g,h] = {lhs} but action gives {rhs}"
    _emit(
        cfg,
        {
            "params": _params_dict(cfg.params),
            "checked": rep.checked,
            "skipped": rep.skipped,
            "violations": len(rep.violations),
        },
        human,
    )
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def _cmd_h1(cfg: JobConfig) -> int:
    rep = solve_h1(cfg.params, cfg.target, cfg.degree, cfg.window)
    human = (
        f"H1 {cfg.target} degree {cfg.degree}: dim_der={rep.dim_der} "
        f"dim_inn={rep.dim_inn} dim_h1={rep.dim_h1}"
        + (" (certified basis: " + ", ".join(rep.quotient_names) + ")" if rep.certified and rep.quotient_names else "")
        + (f"\nnote: {rep.note}" if rep.note else "")
    )
    _emit(cfg, {"report": rep.as_dict()}, human)
    return EXIT_OK


def _cmd_invariants(cfg: JobConfig) -> int:
    rep = verify_invariants_are_central(cfg.params, cfg.order, cfg.window)
    human = (
        f"invariant tensors (order {cfg.order}): "
        f"{'match center products' if rep.ok else 'MISMATCH'} "
        f"(dim {rep.details['kernel_dim']})"
    )
    _emit(cfg, {"report": rep.as_dict()}, human)
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def _cmd_skew_lemma(cfg: JobConfig) -> int:
    rep = verify_skew_image_lemma(cfg.params, cfg.window)
    human = (
        "skew-image decomposition: holds"
        if rep.ok
        else f"skew-image decomposition: fails for {rep.details['failures']}"
    )
    _emit(cfg, {"report": rep.as_dict()}, human)
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


def _cmd_verify_paper(cfg: JobConfig) -> int:
    lines: list[str] = []
    results = run_verification(
        window=cfg.window.hi, log=lines.append if cfg.json_output else print
    )
    ok = all(r.ok for r in results)
    if cfg.json_output:
        payload = {
            "schema": 1,
            "command": "verify-paper",
            "window": cfg.window.hi,
            "criteria": [
                {
                    "number": r.number,
                    "name": r.name,
                    "ok": r.ok,
                    "details": r.details,
                }
                for r in results
            ],
            "ok": ok,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("all criteria passed" if ok else "some criteria FAILED")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


_HANDLERS = {
    "bracket": _cmd_bracket,
    "jacobi": _cmd_jacobi,
    "center": _cmd_center,
    "cybe": _cmd_cybe,
    "mybe": _cmd_mybe,
    "coboundary": _cmd_coboundary,
    "cojacobi": _cmd_cojacobi,
    "check-derivation": _cmd_check_derivation,
    "h1": _cmd_h1,
    "invariants": _cmd_invariants,
    "skew-lemma": _cmd_skew_lemma,
    "verify-paper": _cmd_verify_paper,
}

_NEEDS_PARAMS = {
    "bracket",
    "jacobi",
    "center",
    "cybe",
    "mybe",
    "coboundary",
    "cojacobi",
    "check-derivation",
    "h1",
    "invariants",
    "skew-lemma",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svlie",
        description=(
            "Exact workbench for the deformative Schrodinger-Virasoro "
            "Lie algebras: brackets, Yang-Baxter checks, derivation "
            "verification and windowed cohomology."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_flags(sp, window_default=12):
        sp.add_argument("--s", required=True, choices=["0", "1/2"], help="sector")
        sp.add_argument("--lambda", dest="lam", required=True, metavar="RAT",
                        help="deformation parameter, a rational like -5/3")
        sp.add_argument("--central", choices=["true", "false"], default="true",
                        help="keep the central charge c (default true)")
        sp.add_argument("--window", type=int, default=window_default, metavar="N",
                        help=f"doubled-degree bound, at most {MAX_WINDOW}")
        sp.add_argument("--json", action="store_true", help="machine-readable report")

    sp = sub.add_parser("bracket", help="bracket of two element literals")
    algebra_flags(sp)
    sp.add_argument("operands", nargs=2, metavar="ELEMENT")

    sp = sub.add_parser("jacobi", help="exact Jacobi check on a window")
    algebra_flags(sp)

    sp = sub.add_parser("center", help="window center basis")
    algebra_flags(sp)

    sp = sub.add_parser("cybe", help="classical Yang-Baxter check for an r-matrix")
    algebra_flags(sp)
    sp.add_argument("--r", required=True, metavar="FILE")

    sp = sub.add_parser("mybe", help="modified Yang-Baxter check on a window")
    algebra_flags(sp)
    sp.add_argument("--r", required=True, metavar="FILE")

    sp = sub.add_parser("coboundary", help="cobracket candidate at an element")
    algebra_flags(sp)
    sp.add_argument("--r", required=True, metavar="FILE")
    sp.add_argument("operands", nargs=1, metavar="ELEMENT")

    sp = sub.add_parser("cojacobi", help="co-Jacobi balance for every window generator")
    algebra_flags(sp)
    sp.add_argument("--r", required=True, metavar="FILE")

    sp = sub.add_parser("check-derivation", help="verify a serialized derivation table")
    algebra_flags(sp)
    sp.add_argument("--derivation", required=True, metavar="FILE")

    sp = sub.add_parser("h1", help="windowed first-cohomology dimensions")
    algebra_flags(sp)
    sp.add_argument("--degree", default="0", metavar="RAT")
    sp.add_argument("--target", choices=["algebra", "tensor-square"], default="algebra")

    sp = sub.add_parser("invariants", help="invariant tensors vs center products")
    algebra_flags(sp)
    sp.add_argument("--order", type=int, choices=[1, 2], default=2)

    sp = sub.add_parser("skew-lemma", help="skew-orbit decomposition check")
    algebra_flags(sp)

    sp = sub.add_parser("verify-paper", help="run the full verification suite")
    sp.add_argument("--window", type=int, default=16, metavar="N")
    sp.add_argument("--json", action="store_true")

    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    """Fold values like '-5/3' into '--flag=-5/3'.

    argparse only special-cases plain negative integers, so a bare
    '--lambda -5/3' would otherwise be read as a dangling option.
    """
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--lambda", "--degree") and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and len(nxt) > 1 and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
                skip = True
                continue
        out.append(tok)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_negative_values(list(argv)))
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[args.command](cfg)
    except (UsageError, LiteralError, InvalidIndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
