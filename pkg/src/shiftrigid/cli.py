"""Command line client for the rigidity toolkit.

Thin by design: every subcommand parses arguments, calls one operation from
`shiftrigid.ops`, and formats the result.  Exit codes: 0 for success (and
for "rigid" / all checks passing), 1 for a failed check or a nonrigid input,
2 for unusable input or arguments.  Output depends only on the arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from shiftrigid.alpha import FiberAnomaly
from shiftrigid.homext import DiscreteInterval
from shiftrigid.ops import op_check, op_count, op_enumerate, op_enumerate_alpha, op_ext, op_verify


def _parse_end(token: str, side: str) -> int | None:
    if side == "lo" and token == "ninf":
        return None
    if side == "hi" and token == "pinf":
        return None
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"bad {side} endpoint {token!r}: want an integer or {'ninf' if side == 'lo' else 'pinf'}")


def _parse_interval(text: str) -> DiscreteInterval:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bad interval {text!r}: want LO,HI")
    return DiscreteInterval(_parse_end(parts[0], "lo"), _parse_end(parts[1], "hi"))


def _parse_window(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bad window {text!r}: want LO,HI integers")
    return (int(parts[0]), int(parts[1]))


def _orbit_token(obj: dict) -> str:
    if obj["kind"] == "fin":
        return f"fin:{obj['a']}:{obj['len']}"
    return f"{obj['kind']}:{obj['d'] if obj['kind'] == 'lray' else obj['c']}"


def _grid_token(obj: dict) -> str:
    lo = "ninf" if obj["lo"] == "ninf" else f"{obj['lo']}{'c' if obj['lo_closed'] else 'o'}"
    hi = "pinf" if obj["hi"] == "pinf" else f"{obj['hi']}{'c' if obj['hi_closed'] else 'o'}"
    return f"{lo}..{hi}"


def _family_token(obj: dict) -> str:
    side = "L" if obj["dir"] == "left" else "R"
    far = obj["far"]
    if far in ("ninf", "pinf"):
        return f"{obj['gap']}{side}:{far}"
    return f"{obj['gap']}{side}:{far}{'c' if obj['far_closed'] else 'o'}"


def _cmd_count(args) -> int:
    res = op_count(args.period)
    print(res["count"])
    if res["count"] != res["formula"]:
        print(f"count {res['count']} disagrees with the closed form {res['formula']}", file=sys.stderr)
        return 1
    return 0


def _cmd_enumerate(args) -> int:
    res = op_enumerate(args.period)
    if args.format == "json":
        print(json.dumps(res, indent=2))
    else:
        for s in res["sets"]:
            print("\t".join(_orbit_token(o) for o in s["orbits"]))
    return 0


def _cmd_enumerate_alpha(args) -> int:
    res = op_enumerate_alpha(args.n, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(res, indent=2))
    else:
        for rep in res["classes"]:
            orbits = ";".join(_grid_token(o) for o in rep["orbits"])
            families = ";".join(_family_token(f) for f in rep["families"])
            print(f"{orbits}\t{families}")
    if res["count"] != res["formula"]:
        print(f"count {res['count']} disagrees with the closed form {res['formula']}", file=sys.stderr)
        return 1
    return 0


def _cmd_ext(args) -> int:
    window = _parse_window(args.window) if args.window else None
    res = op_ext(_parse_interval(args.i), _parse_interval(args.j), window)
    print(f"ext {res['ext']}")
    if window is not None:
        print(f"window-hom {res['window']['hom']}")
        print(f"window-ext {res['window']['ext']}")
        if not res["agrees"]:
            print("window computation disagrees with the closed form; widen the window", file=sys.stderr)
            return 1
    return 0


def _cmd_check(args) -> int:
    try:
        with open(args.file) as fh:
            payload = json.load(fh)
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print("invalid")
        print(f"not JSON: {exc}", file=sys.stderr)
        return 2
    res = op_check(payload)
    if not res["valid"]:
        print("invalid")
        for v in res["violations"]:
            print(v, file=sys.stderr)
        return 2
    if res["rigid"]:
        print("valid rigid")
        return 0
    print("valid nonrigid")
    print(res["witness"], file=sys.stderr)
    return 1


def _cmd_verify(args) -> int:
    res = op_verify(args.n_min, args.n_max, jobs=args.jobs)
    for row in res["rows"]:
        verdict = "PASS" if row["pass"] else "FAIL"
        print(f"{row['n']}  {row['formula']}  {row['enumerated']}  {verdict}")
        if "error" in row:
            print(row["error"], file=sys.stderr)
    return 0 if res["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftrigid",
        description="Rigidity and exact counts for interval representations with a shift.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count maximal rigid orbit sets on the period-m lattice")
    p.add_argument("--period", type=int, required=True, metavar="M")
    p.set_defaults(run=_cmd_count)

    p = sub.add_parser("enumerate", help="list maximal rigid orbit sets on the period-m lattice")
    p.add_argument("--period", type=int, required=True, metavar="M")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("enumerate-alpha", help="list maximal rigid continuous classes for n grid points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for fiber expansion")
    p.set_defaults(run=_cmd_enumerate_alpha)

    p = sub.add_parser("ext", help="extension count between two lattice interval classes")
    p.add_argument("--i", required=True, metavar="LO,HI", help="first interval; LO may be ninf; use --i=-3,2 for negatives")
    p.add_argument("--j", required=True, metavar="LO,HI", help="second interval; HI may be pinf")
    p.add_argument("--window", metavar="LO,HI", help="finite window for a matrix-level cross check; use --window=-5,5 for negatives")
    p.set_defaults(run=_cmd_ext)

    p = sub.add_parser("check", help="validate a representation file and decide rigidity")
    p.add_argument("--file", required=True, metavar="PATH")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("verify", help="compare enumerated counts against the closed form")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for fiber expansion")
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, FiberAnomaly) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if isinstance(exc, FiberAnomaly) else 2


if __name__ == "__main__":
    sys.exit(main())
