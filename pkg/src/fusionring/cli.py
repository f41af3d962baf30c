"""Command-line front end.

Every command prints one envelope ``{command, group, level, payload, version}``
as JSON (or as aligned text with ``--format table``).  Rationals are written as
``"p/q"`` strings.  Exit codes: 2 malformed input, 3 unsupported request,
4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .center import (
    basic_level,
    fundamental_level,
    multiplicative_level,
    parse_group_spec,
    partition_by_character,
)
from .errors import FusionRingError, InputError, UnsupportedError
from .fusion import brane_quantize, fuse, fusion_table
from .modular import modular_data
from .nsc import classify_irreps, invariance_defects, modular_invariant, resolve_character, virasoro_character
from .repro import DEFAULT_TOLERANCE, run_all
from .rootdata import RootDatum, enumerate_level_weights
from .tensor import tensor_decompose, weight_system

COMMANDS = ("weights", "tensor", "fuse", "table", "smatrix", "orbits", "levels", "classify", "invariant", "brane", "repro")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostics instead of usage dumps
        raise InputError(message)


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _wl(w) -> list[int]:
    return [int(x) for x in w]


def _components(items) -> list:
    return [[_wl(w), int(n)] for w, n in items]


def _parse_weight(d: RootDatum, text: str, spin: bool) -> list[int]:
    if text is None:
        raise InputError("missing weight")
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        if spin:
            if d.rank != 1:
                raise InputError("--spin only applies to rank-1 groups")
            vals = []
            for p in parts:
                two_j = 2 * Fraction(p)
                if two_j.denominator != 1:
                    raise InputError(f"spin {p} is not a half-integer")
                vals.append(int(two_j))
        else:
            vals = [int(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed weight {text!r}") from None
    if len(vals) != d.rank:
        raise InputError(f"weight {text!r} needs {d.rank} Dynkin labels")
    return vals


def _simply_connected(args) -> RootDatum:
    d, cd = parse_group_spec(args.group)
    if cd.order != 1:
        raise InputError(f"{args.command} expects a simply connected group, got {args.group}")
    return d


def _level(args, required: bool = True) -> int | None:
    if args.level is None:
        if required:
            raise InputError("--level is required")
        return None
    if args.level < 0:
        raise InputError(f"level must be non-negative, got {args.level}")
    return args.level


def _char(cd, text):
    if text is None:
        return None
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"malformed character {text!r}") from None
    return resolve_character(cd, parts)


def cmd_weights(args):
    d = _simply_connected(args)
    if args.highest is not None:
        lam = _parse_weight(d, args.highest, args.spin)
        ws = weight_system(d, lam)
        return {"highest": lam, "dominant_weights": _components(ws.dominant)}
    k = _level(args)
    return {"basis": [_wl(w) for w in enumerate_level_weights(d, k)]}


def cmd_tensor(args):
    d = _simply_connected(args)
    lhs = _parse_weight(d, args.lhs, args.spin)
    rhs = _parse_weight(d, args.rhs, args.spin)
    dec = tensor_decompose(d, lhs, rhs)
    return {"lhs": lhs, "rhs": rhs, "components": _components(dec.components)}


def cmd_fuse(args):
    d = _simply_connected(args)
    k = _level(args)
    lhs = _parse_weight(d, args.lhs, args.spin)
    rhs = _parse_weight(d, args.rhs, args.spin)
    return {"lhs": lhs, "rhs": rhs, "components": _components(fuse(d, k, lhs, rhs).terms)}


def cmd_table(args):
    d = _simply_connected(args)
    k = _level(args)
    t = fusion_table(d, k)
    return {
        "group": str(d),
        "level": k,
        "basis": [_wl(w) for w in t.basis],
        "N": [list(e) for e in t.coefficients],
    }


def cmd_smatrix(args):
    d = _simply_connected(args)
    k = _level(args)
    md = modular_data(d, k)
    return {
        "basis": [_wl(w) for w in md.basis],
        "S_re": [[float(x) + 0.0 for x in row] for row in md.S.real],
        "S_im": [[float(x) + 0.0 for x in row] for row in md.S.imag],
        "T_phase": [rational(p) for p in md.t_phase],
        "c": rational(md.c),
    }


def _orbit_json(cd, o) -> dict:
    return {"orbit": [_wl(w) for w in o.members], "stabilizer": [_wl(cd.elements[z]) for z in o.stabilizer]}


def cmd_orbits(args):
    _, cd = parse_group_spec(args.group)
    k = _level(args)
    chi = _char(cd, args.char)
    if chi is None:
        return [
            dict(_orbit_json(cd, o), character=list(cd.character_label(ch)))
            for ch, obs in partition_by_character(cd, k).items()
            for o in obs
        ]
    return [_orbit_json(cd, o) for o in partition_by_character(cd, k)[chi]]


def cmd_levels(args):
    _, cd = parse_group_spec(args.group)
    try:
        fund = fundamental_level(cd)
    except UnsupportedError:
        fund = None
    return {"basic": basic_level(cd), "multiplicative": multiplicative_level(cd), "fundamental": fund}


def cmd_classify(args):
    _, cd = parse_group_spec(args.group)
    k = _level(args)
    chi = _char(cd, args.char if args.char is not None else "0")
    out = []
    for lab in classify_irreps(cd, k, chi):
        rho: Any = list(lab.rho_index) if len(lab.rho_index) > 1 else (lab.rho_index[0] if lab.rho_index else 0)
        out.append(
            {
                "orbit": [_wl(w) for w in lab.orbit.members],
                "stabilizer_order": lab.stabilizer_order,
                "rho": rho,
                "virasoro": _components(virasoro_character(lab).terms),
            }
        )
    return out


def cmd_invariant(args):
    d, cd = parse_group_spec(args.group)
    k = _level(args)
    mi = modular_invariant(cd, k)
    ds, dt = invariance_defects(mi.M, modular_data(d, k))
    return {
        "basis": [_wl(w) for w in mi.basis],
        "M": mi.M.tolist(),
        "commutes_S": ds < args.tolerance,
        "commutes_T": dt < args.tolerance,
    }


def cmd_brane(args):
    d = _simply_connected(args)
    k = _level(args)
    lam = _parse_weight(d, args.weight if args.weight is not None else args.lhs, args.spin)
    elem = brane_quantize(d, k, lam)
    out = {"weight": lam, "quantization": _components(elem.terms)}
    if args.rhs is not None:
        mu = _parse_weight(d, args.rhs, args.spin)
        out["rhs"] = mu
        out["product"] = _components((elem * brane_quantize(d, k, mu)).terms)
    return out


def cmd_repro(args):
    results = run_all(args.tolerance)
    return [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fusionring", description="Verlinde fusion rings and simple-current orbits")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--group", default="A1" if name != "repro" else None, required=name != "repro")
        s.add_argument("--level", type=int)
        s.add_argument("--format", choices=("json", "table"), default="json")
        s.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
        s.add_argument("--spin", action="store_true", help="read rank-1 weights as spins j = label/2")
        if name in ("tensor", "fuse", "brane"):
            s.add_argument("--lhs")
            s.add_argument("--rhs")
        if name == "brane":
            s.add_argument("--weight")
        if name == "weights":
            s.add_argument("--highest")
        if name in ("orbits", "classify"):
            s.add_argument("--char", help="character label m (or m1,m2 for Z2xZ2)")
    return p


def render_table(envelope: dict) -> str:
    """Plain-text rendering.  Values are JSON-encoded so numbers match the JSON output exactly."""
    lines = [f"{key}: {json.dumps(envelope[key])}" for key in ("command", "group", "level")]
    payload = envelope["payload"]
    if isinstance(payload, dict):
        width = max((len(k) for k in payload), default=0)
        for key, val in payload.items():
            if isinstance(val, list) and val and isinstance(val[0], list) and key not in ("lhs", "rhs", "weight", "highest"):
                lines.append(f"{key}:")
                lines.extend(f"  {json.dumps(row)}" for row in val)
            else:
                lines.append(f"{key.ljust(width)}  {json.dumps(val)}")
    else:
        for row in payload:
            lines.append("  ".join(f"{k}={json.dumps(v)}" for k, v in row.items()))
    lines.append(f"version: {json.dumps(envelope['version'])}")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise InputError(f"missing subcommand; choose one of {', '.join(COMMANDS)}")
        payload = HANDLERS[args.command](args)
        envelope = {
            "command": args.command,
            "group": args.group,
            "level": args.level,
            "payload": payload,
            "version": __version__,
        }
        if args.format == "table":
            stdout.write(render_table(envelope) + "\n")
        else:
            stdout.write(json.dumps(envelope) + "\n")
        if args.command == "repro" and not all(r["passed"] for r in payload):
            return 1
        return 0
    except FusionRingError as exc:
        msg = " ".join(str(exc).split())
        stderr.write(f"fusionring: {exc.kind}: {msg}\n")
        return exc.exit_code


def main() -> None:
    sys.exit(run())
