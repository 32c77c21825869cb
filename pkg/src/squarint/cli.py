"""Command line interface: list identities, verify them, evaluate ad-hoc
integrals.

Exit codes: 0 all selected asserted identities pass; 1 some FAIL;
2 usage or parse error; 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import cubature
from .errors import (EngineFailure, ParseError, SquarintError,
                     UnknownIdentity)
from .model import (CubeIntegrandSpec, FactorProduct, GeometricFactor,
                    LinearFactor)
from .planner import PROFILES, Profile, evaluate_plan, verify_all
from .registry import builtin_registry

DEFAULT_SEED = cubature.DEFAULT_SEED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squarint",
        description="Verify unit-square/cube integral identities by "
                    "closed form, cubature and series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list registry identities")
    p_list.add_argument("--filter", default="*", help="glob over identity ids")

    p_verify = sub.add_parser("verify", help="verify identities")
    p_verify.add_argument("--id", help="verify a single identity id")
    p_verify.add_argument("--filter", default="*", help="glob over identity ids")
    p_verify.add_argument("--profile", choices=sorted(PROFILES),
                          default=os.environ.get("SQUARINT_PROFILE", "quick"))
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--format", choices=("human", "json"), default="human")
    p_verify.add_argument("--out", help="write the report to this path")
    p_verify.add_argument("--budget-evals", type=int, default=None)
    p_verify.add_argument("--budget-points", type=int, default=None)

    p_eval = sub.add_parser("eval", help="evaluate an ad-hoc integral")
    p_eval.add_argument("kind", choices=("halfline", "cube"))
    p_eval.add_argument("spec", help="integrand literal (see docs)")
    p_eval.add_argument("--profile", choices=sorted(PROFILES),
                        default=os.environ.get("SQUARINT_PROFILE", "quick"))
    p_eval.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_eval.add_argument("--budget-evals", type=int, default=None)
    p_eval.add_argument("--budget-points", type=int, default=None)
    return parser


def _resolve_profile(args) -> Profile:
    base = PROFILES[args.profile]
    seed = getattr(args, "seed", DEFAULT_SEED)
    evals = getattr(args, "budget_evals", None)
    points = getattr(args, "budget_points", None)
    from dataclasses import replace
    prof = replace(base, seed=seed)
    if evals:
        prof = replace(prof, budget_evals=evals)
    if points:
        prof = replace(prof, budget_points=points)
    return prof


# ---------------------------------------------------------------------------
# eval literals
# ---------------------------------------------------------------------------

def _parse_number(text: str, pos: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"expected a number, got {text!r}", pos)


def _parse_complex(text: str, pos: int) -> complex:
    raw = text.strip().replace(" ", "")
    if not raw:
        raise ParseError("empty complex literal", pos)
    try:
        return complex(raw.replace("i", "j"))
    except ValueError:
        raise ParseError(f"unreadable complex literal {text!r}", pos)


def parse_halfline_literal(text: str) -> tuple[FactorProduct, float]:
    """'(a,b,c)[^m](a,b,c)...[; num=c0,c1,...][; m=W]' -> (product, weight)."""
    body = text.split(";")
    factors = []
    i = 0
    head = body[0]
    while i < len(head):
        ch = head[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' to open a factor, got {ch!r}", i)
        close = head.find(")", i)
        if close < 0:
            raise ParseError("unclosed factor", i)
        parts = head[i + 1:close].split(",")
        if len(parts) != 3:
            raise ParseError("factor needs three components a,b,c", i)
        a = _parse_number(parts[0], i)
        b = _parse_number(parts[1], i)
        c = _parse_number(parts[2], i)
        mult = 1
        i = close + 1
        if i < len(head) and head[i] == "^":
            j = i + 1
            while j < len(head) and (head[j].isdigit()):
                j += 1
            if j == i + 1:
                raise ParseError("expected an integer multiplicity after '^'", i)
            mult = int(head[i + 1:j])
            i = j
        factors.append(LinearFactor(a, complex(b, c), mult))
    if not factors:
        raise ParseError("no factors given", 0)
    numerator = (1.0,)
    weight = 0.0
    offset = len(body[0])
    for chunk in body[1:]:
        offset += 1
        key, _, value = chunk.partition("=")
        key = key.strip()
        if key == "num":
            numerator = tuple(_parse_number(v, offset) for v in value.split(","))
        elif key == "m":
            weight = _parse_number(value, offset)
        else:
            raise ParseError(f"unknown option {key!r}", offset)
        offset += len(chunk)
    return FactorProduct(factors=tuple(factors), numerator=numerator), weight


def parse_cube_literal(text: str) -> CubeIntegrandSpec:
    """'k=2; mu=0,0; logw=1,1; j=1[; m=0][; z=C; e=..][; part=im]' -> spec."""
    fields = {}
    offset = 0
    for chunk in text.split(";"):
        key, eq, value = chunk.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {chunk.strip()!r}", offset)
        fields[key.strip()] = (value.strip(), offset)
        offset += len(chunk) + 1
    try:
        k_raw, k_pos = fields.pop("k")
    except KeyError:
        raise ParseError("missing k=", 0)
    k = int(_parse_number(k_raw, k_pos))
    try:
        mu_raw, mu_pos = fields.pop("mu")
    except KeyError:
        raise ParseError("missing mu=", 0)
    exponents = tuple(_parse_complex(v, mu_pos) for v in mu_raw.split(","))
    logw_raw, logw_pos = fields.pop("logw", ("", 0))
    if logw_raw:
        weights = tuple(_parse_number(v, logw_pos) for v in logw_raw.split(","))
    else:
        weights = (1.0,) * k
    j_raw, j_pos = fields.pop("j", ("1", 0))
    m_raw, m_pos = fields.pop("m", ("0", 0))
    part_raw, _ = fields.pop("part", ("full", 0))
    geo = None
    if "z" in fields:
        z_raw, z_pos = fields.pop("z")
        e_raw, e_pos = fields.pop("e", (",".join(["1"] * k), 0))
        geo = GeometricFactor(
            z=_parse_complex(z_raw, z_pos),
            exps=tuple(_parse_number(v, e_pos) for v in e_raw.split(",")),
        )
    if fields:
        name = next(iter(fields))
        raise ParseError(f"unknown option {name!r}", fields[name][1])
    return CubeIntegrandSpec(
        dim=k,
        exponents=exponents,
        log_weights=weights,
        log_power=int(_parse_number(j_raw, j_pos)),
        log_shift=_parse_number(m_raw, m_pos),
        geometric=geo,
        poly_log=(),
        part=part_raw,
    )


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _fmt9(x: float) -> str:
    return f"{x:.9g}"


def report_to_json_obj(report, profile: Profile) -> dict:
    diag = report.lhs_diagnostics
    return {
        "id": report.identity_id,
        "lhs": {"re": report.lhs_value.real, "im": report.lhs_value.imag},
        "rhs": {"re": report.rhs_value.real, "im": report.rhs_value.imag},
        "absError": report.abs_error,
        "relError": report.rel_error,
        "status": report.status,
        "engine": {
            "method": diag.method,
            "evals": diag.evaluations,
            "estimate": diag.error_estimate,
        },
        "seed": profile.seed,
        "profile": profile.name,
    }


def _human_report(reports) -> str:
    lines = [f"{'id':24s} {'status':8s} {'lhs':>16s} {'rhs':>16s} "
             f"{'absErr':>10s} {'relErr':>10s}  engine"]
    for r in reports:
        lhs = _fmt9(r.lhs_value.real)
        if abs(r.lhs_value.imag) > 0:
            lhs += f"{r.lhs_value.imag:+.3g}i"
        rhs = _fmt9(r.rhs_value.real)
        if abs(r.rhs_value.imag) > 0:
            rhs += f"{r.rhs_value.imag:+.3g}i"
        lines.append(
            f"{r.identity_id:24s} {r.status:8s} {lhs:>16s} {rhs:>16s} "
            f"{r.abs_error:10.2e} {r.rel_error:10.2e}  "
            f"{r.lhs_diagnostics.method}")
    passed = sum(1 for r in reports if r.status == "PASS")
    flagged = [r.identity_id for r in reports if r.status == "FLAGGED"]
    failed = [r.identity_id for r in reports if r.status == "FAIL"]
    lines.append(f"-- {passed} PASS, {len(flagged)} FLAGGED, {len(failed)} FAIL")
    if flagged:
        lines.append("   flagged: " + ", ".join(flagged))
    if failed:
        lines.append("   failed:  " + ", ".join(failed))
    return "\n".join(lines)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_list(args) -> int:
    reg = builtin_registry()
    rows = reg.filtered(args.filter)
    print(f"{'id':24s} {'paper location':28s} {'trust':15s} tolerance")
    for rec in rows:
        print(f"{rec.id:24s} {rec.paper_location:28s} {rec.trust:15s} "
              f"{rec.tolerance:g}")
    print(f"-- {len(rows)} identities")
    return 0


def cmd_verify(args) -> int:
    reg = builtin_registry()
    profile = _resolve_profile(args)
    if args.id is not None:
        if reg.lookup(args.id) is None:
            print(f"error: UnknownIdentity: no identity with id {args.id!r}",
                  file=sys.stderr)
            return 2
        ids = [args.id]
    else:
        ids = [r.id for r in reg.filtered(args.filter)]
    reports = verify_all(reg, profile, ids=ids)
    if args.format == "json":
        payload = [report_to_json_obj(r, profile) for r in reports]
        text = json.dumps(payload, indent=2)
    else:
        text = _human_report(reports)
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return 3
    selected = [r for r in reports
                if reg.lookup(r.identity_id).trust == "asserted"]
    return 1 if any(r.status == "FAIL" for r in selected) else 0


def cmd_eval(args) -> int:
    profile = _resolve_profile(args)
    try:
        if args.kind == "halfline":
            from .model import HalflinePlan
            product, weight = parse_halfline_literal(args.spec)
            value, diag = evaluate_plan(HalflinePlan(product=product,
                                                     weight=weight), profile)
        else:
            from .model import CubePlan
            spec = parse_cube_literal(args.spec)
            value, diag = evaluate_plan(CubePlan(spec=spec), profile)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SquarintError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(f"value      = {_fmt9(value.real)}")
    print(f"imaginary  = {_fmt9(value.imag)}")
    print(f"estimate   = {diag.error_estimate:.3e}")
    print(f"evals      = {diag.evaluations}")
    print(f"method     = {diag.method}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        return cmd_list(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "eval":
        return cmd_eval(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
