"""Command-line interface: one binary, subcommands for each computation.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 usage or
input errors (bad letters, out-of-range sizes, oracle cap). All output is
deterministic: the same invocation always produces the same bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from .bracket import (
    bracket_state_sum,
    bracket_via_tl,
    jones_polynomial,
    normalized_bracket,
)
from .braid import parse_braid
from .fibrep import (
    braid_generator_matrix,
    fib_dim,
    fibonacci_params,
    make_params,
    tl_generator_matrix,
    verify_model,
)
from .laurent import LaurentPoly, delta, format_jones
from .tl import TLElement, markov_trace

_PHASE_RE = re.compile(
    r"^([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?$", re.IGNORECASE
)


def parse_phase(text: str) -> float:
    """Accept decimal radians or literal multiples of pi like 3pi/5, -pi/2."""
    s = text.strip()
    m = _PHASE_RE.match(s)
    if m:
        num_text, den_text = m.group(1), m.group(2)
        if num_text in ("", "+"):
            num = 1.0
        elif num_text == "-":
            num = -1.0
        else:
            num = float(num_text)
        den = float(den_text) if den_text else 1.0
        return num * math.pi / den
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"bad phase {text!r}: use radians or a pi literal") from None


def _fmt_float(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _fmt_complex(z: complex) -> str:
    re_part = _fmt_float(z.real)
    im_part = _fmt_float(abs(z.imag))
    sign = "-" if z.imag < 0 else "+"
    return f"{re_part}{sign}{im_part}j"


def _print_matrix(mat, complex_entries: bool):
    fmt = _fmt_complex if complex_entries else _fmt_float
    for row in mat:
        print(" ".join(fmt(v) for v in row))


def _matrix_json_entries(mat) -> list:
    return [[float(v.real), float(v.imag)] for row in mat for v in row]


def _params_from_args(args):
    phase = parse_phase(args.phase) if getattr(args, "phase", None) else None
    if getattr(args, "delta", None) is not None:
        return make_params(args.delta, phase)
    sign = -1 if getattr(args, "delta_sign", "+") == "-" else 1
    return fibonacci_params(sign, phase)


def cmd_bracket(args) -> int:
    word = parse_braid(args.word, args.strands)
    tl_poly = None
    oracle_poly = None
    if args.both or not args.oracle:
        tl_poly = bracket_via_tl(word)
    if args.both or args.oracle:
        oracle_poly = bracket_state_sum(word)
    poly = tl_poly if tl_poly is not None else oracle_poly
    if args.normalized:
        w = word.writhe()
        poly = LaurentPoly.monomial((-1) ** (w % 2), -3 * w) * poly
    if args.json:
        payload = {
            "strands": word.strands,
            "word": list(word.letters),
            "variable": "A",
            "terms": poly.to_json(),
        }
        print(json.dumps(payload))
    else:
        print(poly)
    if args.both and tl_poly != oracle_poly:
        print(
            "cross-check FAILED: state sum disagrees with the algebra trace",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_jones(args) -> int:
    word = parse_braid(args.word, args.strands)
    poly = jones_polynomial(word)
    if args.json:
        payload = {
            "strands": word.strands,
            "word": list(word.letters),
            "variable": "q",
            "terms": poly.to_json(),
        }
        print(json.dumps(payload))
    else:
        print(format_jones(poly))
    return 0


def cmd_eval(args) -> int:
    word = parse_braid(args.word, args.strands)
    theta = parse_phase(args.phase)
    poly = normalized_bracket(word) if args.normalized else bracket_via_tl(word)
    value = poly.evaluate_phase(theta)
    if args.json:
        payload = {
            "strands": word.strands,
            "word": list(word.letters),
            "phase": theta,
            "value": [value.real, value.imag],
        }
        print(json.dumps(payload))
    else:
        print(_fmt_complex(value))
    return 0


def cmd_dims(args) -> int:
    if args.max < 1:
        raise ValueError("--max must be >= 1")
    for n in range(1, args.max + 1):
        print(f"{n} {fib_dim(n)}")
    return 0


def cmd_fib_matrix(args) -> int:
    params = _params_from_args(args)
    if args.braid:
        mat = braid_generator_matrix(args.n, args.gen, params)
        complex_entries = True
    else:
        mat = tl_generator_matrix(args.n, args.gen, params, right_end=args.right_end)
        complex_entries = False
    if args.json:
        payload = {
            "n": args.n,
            "generator": args.gen,
            "kind": "braid" if args.braid else "tl",
            "dim": len(mat),
            "entries": _matrix_json_entries(mat),
        }
        print(json.dumps(payload))
    else:
        _print_matrix(mat, complex_entries)
    return 0


def _print_report(report) -> int:
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{check.name:<48} {check.residual:>12.3e}  {status}")
    if report.passed:
        print(f"all relations hold at tol {report.tol:g}")
        return 0
    failed = sum(1 for c in report.checks if not c.passed)
    print(f"{failed} relation(s) FAILED at tol {report.tol:g}")
    return 1


def cmd_fib_verify(args) -> int:
    params = _params_from_args(args)
    report = verify_model(args.n, params, tol=args.tol, right_end=args.right_end)
    return _print_report(report)


def _verify_tl_exact(n: int) -> int:
    if n < 1:
        raise ValueError("--n must be >= 1")
    if n > 12:
        raise ValueError("--n must be <= 12 for the diagram algebra suite")
    dlt = delta()
    gens = [TLElement.generator(n, i) for i in range(1, n)]
    rows: list[tuple[str, bool]] = []

    def every(pairs):
        return all(lhs == rhs for lhs, rhs in pairs)

    rows.append(
        (
            "U_i U_i = delta U_i",
            every((g * g, g.scale(dlt)) for g in gens),
        )
    )
    rows.append(
        (
            "U_i U_j U_i = U_i (|i-j| = 1)",
            every(
                (gens[i] * gens[j] * gens[i], gens[i])
                for i in range(len(gens))
                for j in (i - 1, i + 1)
                if 0 <= j < len(gens)
            ),
        )
    )
    rows.append(
        (
            "U_i U_j = U_j U_i (|i-j| > 1)",
            every(
                (gens[i] * gens[j], gens[j] * gens[i])
                for i in range(len(gens))
                for j in range(i + 2, len(gens))
            ),
        )
    )
    rows.append(
        (
            "trace(U_i U_j) = trace(U_j U_i)",
            every(
                (markov_trace(gens[i] * gens[j]), markov_trace(gens[j] * gens[i]))
                for i in range(len(gens))
                for j in range(len(gens))
            ),
        )
    )
    ok_all = True
    for name, ok in rows:
        ok_all = ok_all and ok
        print(f"{name:<48} {'exact' if ok else 'differs':>12}  {'PASS' if ok else 'FAIL'}")
    if ok_all:
        print("all relations hold exactly")
        return 0
    print("some relations FAILED")
    return 1


def cmd_verify(args) -> int:
    if args.module == "tl":
        return _verify_tl_exact(args.n)
    return cmd_fib_verify(args)


def _add_braid_args(sub):
    sub.add_argument("--strands", type=int, required=True, help="strand count")
    sub.add_argument(
        "--word",
        type=str,
        required=True,
        help="letters, whitespace or comma separated; empty for the identity",
    )


def _add_params_args(sub):
    sub.add_argument(
        "--delta-sign",
        choices=["+", "-"],
        default="+",
        help="sign of the golden-ratio loop value (default +)",
    )
    sub.add_argument(
        "--delta",
        type=float,
        default=None,
        help="explicit loop value, overriding --delta-sign",
    )
    sub.add_argument(
        "--phase",
        type=str,
        default=None,
        help="bracket phase in radians or a pi literal like 3pi/5",
    )
    sub.add_argument(
        "--right-end",
        choices=["uniform", "literal"],
        default="uniform",
        help="window rule at the last position (literal is diagnostic only)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlbraid",
        description="Exact bracket/Jones polynomials of braid closures and "
        "the golden-ratio braid representation.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("bracket", help="bracket polynomial of a braid closure")
    _add_braid_args(p)
    p.add_argument("--normalized", action="store_true", help="writhe-normalized")
    p.add_argument(
        "--oracle", action="store_true", help="use the 2^N smoothing enumeration"
    )
    p.add_argument(
        "--both",
        action="store_true",
        help="run both evaluators; exit 1 if they disagree",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bracket)

    p = commands.add_parser("jones", help="Jones polynomial of a braid closure")
    _add_braid_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jones)

    p = commands.add_parser("eval", help="evaluate a bracket at A = e^(i*theta)")
    _add_braid_args(p)
    p.add_argument("--phase", type=str, required=True)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = commands.add_parser("dims", help="sequence-space dimension table")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = commands.add_parser("fib-matrix", help="one generator matrix, printed")
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--gen", type=int, required=True, help="generator index i")
    p.add_argument(
        "--braid", action="store_true", help="braid generator instead of U_i"
    )
    _add_params_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fib_matrix)

    p = commands.add_parser("fib-verify", help="relation suite on the sequence space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_params_args(p)
    p.set_defaults(func=cmd_fib_verify)

    p = commands.add_parser("verify", help="relation suite (exact tl or numeric fib)")
    p.add_argument("--module", choices=["tl", "fib"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_params_args(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
