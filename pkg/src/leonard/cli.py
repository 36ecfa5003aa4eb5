"""Command-line interface: JSON in, JSON out.

Exit codes: 0 success / accepted, 1 well-formed but rejected, 2 malformed
input, 3 field constraint violated. Diagnostics go to stderr as
``{"reason": ..., "detail": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canon import lb_ub, td_d
from .errors import (
    BadCharacteristic,
    CharTwoUnsupported,
    ConstraintViolated,
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    InvalidInput,
    SizeMismatch,
)
from .exactfield import QQ, FieldSpec
from .jsonio import (
    MalformedInput,
    array_from_json,
    array_to_json,
    dumps,
    field_from_json,
    loads,
    matrix_from_json,
    matrix_to_json,
)
from .parray import krawtchouk_array, orbit, qracah_array, validate
from .recognize import recognize_lbub, recognize_tdd
from .selftest import run_selftest
from .transition import transition_matrices

EXIT_OK, EXIT_REJECTED, EXIT_MALFORMED, EXIT_FIELD = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code, reason, detail):
        super().__init__(detail)
        self.code, self.reason, self.detail = code, reason, detail


def _read(args):
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            return loads(fh.read())
    return loads(sys.stdin.read())


def _array_doc(args):
    return array_from_json(_read(args))


def report_to_json(report) -> dict:
    return {
        "valid": report.valid,
        "violations": [
            {"condition": v.condition, "index": v.index, "detail": v.detail} for v in report.violations
        ],
        "unevaluated": list(report.unevaluated),
    }


def recognition_to_json(report) -> dict:
    return {
        "accepted": report.accepted,
        "arrays": [array_to_json(p) for p in report.arrays],
        "reject_reason": report.reject_reason,
        "detail": report.detail,
    }


def transition_to_json(t) -> dict:
    return {
        "P": matrix_to_json(t.p_mat),
        "P_star": matrix_to_json(t.p_star_mat),
        "k": [str(x) for x in t.k],
        "k_star": [str(x) for x in t.k_star],
        "nu": str(t.nu),
        "source": array_to_json(t.source),
    }


def cmd_validate(args):
    report = validate(_array_doc(args))
    return report_to_json(report), EXIT_OK if report.valid else EXIT_REJECTED


def cmd_canon(args):
    p = _array_doc(args)
    pair = lb_ub(p) if args.form == "lbub" else td_d(p)
    doc = {
        "form": pair.form,
        "a": matrix_to_json(pair.a),
        "a_star": matrix_to_json(pair.a_star),
        "source": array_to_json(pair.source),
    }
    return doc, EXIT_OK


def cmd_recognize(args):
    doc = _read(args)
    if not isinstance(doc, dict) or "a" not in doc or "a_star" not in doc:
        raise MalformedInput("recognize expects an object with 'a' and 'a_star'")
    field = field_from_json(doc["field"]) if "field" in doc else None
    a = matrix_from_json(doc["a"], field)
    a_star = matrix_from_json(doc["a_star"], field)
    report = recognize_lbub(a, a_star) if args.shape == "lbub" else recognize_tdd(a, a_star)
    return recognition_to_json(report), EXIT_OK if report.accepted else EXIT_REJECTED


def cmd_orbit(args):
    return {"arrays": [array_to_json(q) for q in orbit(_array_doc(args))]}, EXIT_OK


def cmd_transition(args):
    return transition_to_json(transition_matrices(_array_doc(args))), EXIT_OK


def _field_arg(args) -> FieldSpec:
    return FieldSpec.prime(args.prime) if args.prime is not None else QQ


def cmd_example(args):
    field = _field_arg(args)
    if args.d is None or args.d < 0:
        raise MalformedInput("--d must be a nonnegative integer")
    if args.family == "krawtchouk":
        p = krawtchouk_array(args.d, field)
    else:
        missing = [n for n in ("q", "s", "s_star", "r1", "r2") if getattr(args, n) is None]
        if missing:
            raise MalformedInput(f"qracah needs --{', --'.join(m.replace('_', '-') for m in missing)}")
        try:
            vals = [field.parse(getattr(args, n)) for n in ("q", "s", "s_star", "r1", "r2")]
        except DivisionByZero:
            raise
        except ValueError as e:
            raise MalformedInput(str(e)) from e
        p = qracah_array(args.d, *vals)
    return array_to_json(p), EXIT_OK


def cmd_selftest(args):
    results = run_selftest(corrupt=args.corrupt)
    doc = {
        "invariants": [
            {"name": r.name, "ok": r.ok, "passed": r.passed, "failed": r.failed} for r in results
        ],
        "ok": all(r.ok for r in results),
    }
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} {r.name} ({r.passed}/{r.passed + len(r.failed)})", file=sys.stderr)
    return doc, EXIT_OK if doc["ok"] else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leonard", description="Exact Leonard-pair toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def io_args(p):
        p.add_argument("--in", dest="input", default="-", help="input JSON file (default stdin)")
        p.add_argument("--out", dest="output", default="-", help="output file (default stdout)")
        return p

    io_args(sub.add_parser("validate", help="check a parameter array")).set_defaults(func=cmd_validate)
    p = io_args(sub.add_parser("canon", help="canonical matrix pair of a parameter array"))
    p.add_argument("--form", choices=("lbub", "tdd"), required=True)
    p.set_defaults(func=cmd_canon)
    p = io_args(sub.add_parser("recognize", help="recognize a matrix pair"))
    p.add_argument("--shape", choices=("lbub", "tdd"), required=True)
    p.set_defaults(func=cmd_recognize)
    io_args(sub.add_parser("orbit", help="the arrays p, down p, ddown p, down ddown p")).set_defaults(
        func=cmd_orbit
    )
    io_args(sub.add_parser("transition", help="transition matrices and weights")).set_defaults(
        func=cmd_transition
    )
    p = io_args(sub.add_parser("example", help="built-in parameter-array families"))
    p.add_argument("--family", choices=("krawtchouk", "qracah"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--prime", type=int, default=None, help="work over GF(PRIME) instead of QQ")
    for name in ("q", "s", "s-star", "r1", "r2"):
        p.add_argument(f"--{name}", default=None)
    p.set_defaults(func=cmd_example)
    p = io_args(sub.add_parser("selftest", help="run invariants over built-in fixtures"))
    p.add_argument("--corrupt", action="store_true", help="corrupt one fixture (must fail)")
    p.set_defaults(func=cmd_selftest)
    return ap


def _diagnose(code, reason, detail):
    print(json.dumps({"reason": reason, "detail": detail}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_MALFORMED if e.code else EXIT_OK
    try:
        doc, code = args.func(args)
    except (MalformedInput, FieldMismatch, SizeMismatch) as e:
        return _diagnose(EXIT_MALFORMED, type(e).__name__, str(e))
    except (InvalidField, BadCharacteristic, ConstraintViolated, CharTwoUnsupported, DivisionByZero) as e:
        return _diagnose(EXIT_FIELD, type(e).__name__, str(e))
    except InvalidInput as e:
        return _diagnose(EXIT_REJECTED, "InvalidInput", str(e))
    except OSError as e:
        return _diagnose(EXIT_MALFORMED, "IOError", str(e))
    text = dumps(doc)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
