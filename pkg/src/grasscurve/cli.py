"""Command-line interface.

    grasscurve analyze CURVE.json
    grasscurve decide CURVE.json
    grasscurve laws --d 2 --trials 100 --seed 0
    grasscurve klein CURVE.json

Exit codes: 0 success / accepted, 1 well-formed negative verdict or failed
law, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .curve import CurveError, parse_curve
from .laws import run_instance, run_laws
from .morita import analyze, decide_morita
from .parsing import ParseError
from .pluecker import klein_quadric_residual, morita_plane_residuals, pluecker_vector

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, message: str, digest: str | None = None):
        super().__init__(message)
        self.digest = digest


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read_curve(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    digest = _digest(raw)
    try:
        return parse_curve(raw.decode("utf-8")), digest
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text", digest) from None
    except (ParseError, CurveError) as exc:
        raise InputError(str(exc), digest) from None


def cmd_analyze(args) -> dict:
    curve, digest = _read_curve(args.file)
    return _report("analyze", digest, analyze(curve).to_json(), EXIT_OK)


def cmd_decide(args) -> dict:
    curve, digest = _read_curve(args.file)
    verdict = decide_morita(curve)
    return _report("decide", digest, verdict.to_json(), EXIT_OK if verdict.accepted else EXIT_NEGATIVE)


def cmd_laws(args) -> dict:
    if args.replay:
        try:
            with open(args.replay, "rb") as fh:
                raw = fh.read()
            inst = json.loads(raw)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load replay instance: {exc}") from None
        try:
            ok = run_instance(inst)
            error = None
        except (KeyError, ValueError, ArithmeticError) as exc:
            ok, error = False, f"{type(exc).__name__}: {exc}"
        result = {"replay": inst, "passed": ok}
        if error:
            result["error"] = error
        return _report("laws", _digest(raw), result, EXIT_OK if ok else EXIT_NEGATIVE)
    if args.d < 1 or args.trials < 1:
        raise InputError("need --d >= 1 and --trials >= 1")
    params = json.dumps({"d": args.d, "trials": args.trials, "seed": args.seed}, sort_keys=True)
    summary = run_laws(args.d, args.trials, args.seed)
    return _report("laws", _digest(params.encode()), summary, EXIT_OK if summary["all_passed"] else EXIT_NEGATIVE)


def cmd_klein(args) -> dict:
    curve, digest = _read_curve(args.file)
    if curve.d != 2:
        raise InputError("Klein quadric defined only for d=2", digest)
    pv = pluecker_vector(curve)
    plane = morita_plane_residuals(curve)
    result = {
        "coordinates": {f"z{label}": str(f) for label, f in zip(pv.labels(), pv.coords)},
        "degree": pv.degree,
        "quadric_residual": str(klein_quadric_residual(curve)),
        "plane_residuals": [str(f) for f in plane],
        "on_morita_plane": all(f.is_zero() for f in plane),
    }
    return _report("klein", digest, result, EXIT_OK)


def _report(command: str, digest: str, result: dict, code: int) -> dict:
    return {"command": command, "input_digest": digest, "result": result, "exit_code": code}


def _plain(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_plain(val, indent + 1))
        elif isinstance(val, list) and val and all(isinstance(v, list) for v in val):
            lines.append(f"{pad}{key}:")
            for row in val:
                lines.append(f"{pad}  [" + ", ".join(map(str, row)) + "]")
        elif isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  - " + json.dumps(item, sort_keys=True))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val) if not isinstance(val, str) else val}")
    return lines


def render(report: dict, fmt: str) -> str:
    if fmt == "plain":
        return "\n".join(_plain(report))
    return json.dumps(report, sort_keys=True, indent=2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("structured", "plain"), default=argparse.SUPPRESS,
                        help="output format (default: structured)")
    parser = argparse.ArgumentParser(prog="grasscurve", parents=[common],
                                     description="Exact analysis of rational curves in G(d, 2d).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
        ("analyze", cmd_analyze, "degree, splitting type, width, Delta and sigma"),
        ("decide", cmd_decide, "decide equivalence to the Morita curve"),
        ("klein", cmd_klein, "Plücker coordinates and Klein quadric residuals (d=2)"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.set_defaults(func=fn)
    p = sub.add_parser("laws", parents=[common], help="run the seeded law suites")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--replay", metavar="INSTANCE.json", help="rerun one serialized instance")
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    fmt = getattr(args, "format", "structured")
    try:
        report = args.func(args)
    except InputError as exc:
        report = _report(args.command, exc.digest, {"error": str(exc)}, EXIT_INPUT)
    print(render(report, fmt))
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
