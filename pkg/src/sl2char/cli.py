"""
Command-line front end.

Exit status: 0 ok, 1 verification failure, 2 parse error or bad bounds,
3 no Demazure flag, 4 a formula route's precondition failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import cvmod
from .charlat import (
    GradedCharacter,
    NoFlag,
    decompose_irreducible,
    demazure_flag_decompose,
    dimension,
    graded_dimension,
    irr_char,
    tensor,
)
from .closedforms import (
    OrderViolation,
    quotient_character,
    tensor_weyl_weyl_pieri_form,
    tensor_weyl_weyl_truncated_form,
    weyl_tensor_irr_multiplicities,
    weyl_tensor_level2_multiplicities,
    weyl_tensor_weyl_quotients,
)
from .cvmod import Partition, cv_char, enumerate_basis
from .macdonald import gm, macdonald_p, pieri_expand, sympoly_to_character
from .qalg import QPoly
from .suites import SUITES, UnknownSuite, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_NOFLAG, EXIT_PRECONDITION = 0, 1, 2, 3, 4
CACHE_ENV = "DEMAZURE_CACHE_DIR"
CACHE_FILE = "cv_cache.json"


class ParseError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass
class Output:
    """What a command produced: a JSON payload plus the same content as table rows."""

    payload: dict
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    status: int = EXIT_OK


# --- spec parsing ------------------------------------------------------------


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


#: kind -> number of integer parameters (cv takes a partition string instead)
KINDS = {"weyl": 1, "irr": 1, "demazure": 2, "truncated": 2, "hook": 2, "cv": None}


@dataclass(frozen=True)
class Spec:
    kind: str
    args: tuple

    def __str__(self) -> str:
        if self.kind == "cv":
            return f"cv:{self.args[0]}"
        return ":".join([self.kind, *map(str, self.args)])

    def partition(self) -> Partition | None:
        k, a = self.kind, self.args
        try:
            if k == "weyl":
                return cvmod.weyl_partition(*a)
            if k == "irr":
                return Partition.canonical(a)
            if k == "demazure":
                return cvmod.demazure_partition(*a)
            if k == "truncated":
                return cvmod.truncated_weyl_partition(*a)
            if k == "hook":
                return cvmod.hook_partition(*a)
            return a[0]
        except ValueError as exc:
            raise ParseError(f"{self}: {exc}") from None

    def character(self) -> GradedCharacter:
        if self.kind == "weyl":
            if self.args[0] < 0:
                raise ParseError(f"{self}: weight must be nonnegative")
            return cvmod.weyl_char(self.args[0])
        if self.kind == "irr":
            if self.args[0] < 0:
                raise ParseError(f"{self}: weight must be nonnegative")
            return irr_char(self.args[0])
        return cv_char(self.partition())


def build_spec(kind: str, params: list[str]) -> Spec:
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind == "cv":
        if len(params) > 1:
            raise ParseError("cv takes one partition, e.g. 2,2,1")
        return Spec("cv", (_partition(params[0] if params else ""),))
    if len(params) != KINDS[kind]:
        raise ParseError(f"{kind} takes {KINDS[kind]} integer parameter(s), got {len(params)}")
    return Spec(kind, tuple(_int(p, kind) for p in params))


def parse_spec(text: str) -> Spec:
    """Parse 'weyl:1', 'irr:2', 'cv:2,1', 'demazure:2:3', 'truncated:5:3', 'hook:3:2'."""
    kind, _, rest = text.partition(":")
    if kind == "cv":
        return build_spec("cv", [rest])
    return build_spec(kind, rest.split(":") if rest else [])


def parse_decompose(text: str | None):
    if text is None:
        return None
    if text == "irr":
        return ("irr", None)
    if text.startswith("flag="):
        level = _int(text[5:], "flag level")
        if level < 1:
            raise ParseError(f"flag level must be positive, got {level}")
        return ("flag", level)
    raise ParseError(f"--decompose takes 'irr' or 'flag=<level>', got {text!r}")


def parse_range(text: str, what: str) -> list[int]:
    """'4' -> [4]; '1..4' -> [1, 2, 3, 4]."""
    lo, sep, hi = text.partition("..")
    a = _int(lo, what)
    b = _int(hi, what) if sep else a
    if a < 0 or b < a:
        raise ParseError(f"bad {what} range {text!r}")
    return list(range(a, b + 1))


# --- rendering ---------------------------------------------------------------


def poly_text(p: QPoly) -> str:
    return str(p)


def character_rows(label: str, ch: GradedCharacter) -> list[list]:
    return [[label, w, poly_text(p)] for w, p in ch.items()]


def parts_rows(label: str, parts: dict) -> list[list]:
    return [[label, k, poly_text(p)] for k, p in parts.items()]


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(out.header)
        writer.writerows(out.rows)
        return buf.getvalue()
    cells = [list(map(str, out.header))] + [[str(c) for c in row] for row in out.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(out.header))]
    lines = ["  ".join(c.rjust(w) if i == 1 else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths))).rstrip()
             for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# --- commands ----------------------------------------------------------------


def _decorate(ch: GradedCharacter, payload: dict, rows: list, decompose, want_dim: bool) -> None:
    if decompose is not None:
        kind, level = decompose
        if kind == "irr":
            dec = decompose_irreducible(ch)
            payload["decomposition"] = dec.to_json()
            rows += parts_rows("irr", dec.parts)
        else:
            dec = demazure_flag_decompose(ch, level)
            payload["flag"] = dec.to_json()
            rows += parts_rows(f"flag{level}", dec.parts)
    if want_dim:
        gd = graded_dimension(ch)
        payload["graded_dimension"] = gd.to_json()
        payload["dimension"] = dimension(ch)
        rows += [["grdim", "", poly_text(gd)], ["dim", "", str(dimension(ch))]]


def cmd_char(args) -> Output:
    if args.kind == "demazure" and not args.params:
        if args.level is None or args.weight is None:
            raise ParseError("demazure needs --level and --weight (or two positional integers)")
        spec = Spec("demazure", (args.level, args.weight))
    else:
        spec = build_spec(args.kind, args.params)
    ch = spec.character()
    payload = {"spec": str(spec), "character": ch.to_json()}
    rows = character_rows("ch", ch)
    _decorate(ch, payload, rows, parse_decompose(args.decompose), args.dim)
    return Output(payload, ["kind", "weight", "polynomial"], rows)


def _weyl_pair(left: Spec, right: Spec, route: str) -> tuple[int, int]:
    if left.kind != "weyl" or right.kind != "weyl":
        raise PreconditionError(f"route {route!r} needs two weyl specs, got {left} and {right}")
    return left.args[0], right.args[0]


def tensor_by_route(left: Spec, right: Spec, route: str) -> GradedCharacter:
    if route == "direct":
        return tensor(left.character(), right.character())
    n, m = _weyl_pair(left, right, route)
    try:
        if route == "pieri":
            return tensor_weyl_weyl_pieri_form(n, m)
        if route == "truncated":
            return tensor_weyl_weyl_truncated_form(n, m)
        if m < 1:
            raise PreconditionError("route 'quotients' needs the right factor weyl:m with m >= 1")
        return quotient_character(weyl_tensor_weyl_quotients(n, m))
    except OrderViolation as exc:
        raise PreconditionError(str(exc)) from None


def cmd_tensor(args) -> Output:
    left, right = parse_spec(args.left), parse_spec(args.right)
    ch = tensor_by_route(left, right, args.route)
    payload = {"left": str(left), "right": str(right), "character": ch.to_json()}
    rows = character_rows("ch", ch)
    _decorate(ch, payload, rows, parse_decompose(args.decompose), args.dim)
    return Output(payload, ["kind", "weight", "polynomial"], rows)


def cmd_flag(args) -> Output:
    if args.level < 1:
        raise ParseError(f"level must be positive, got {args.level}")
    specs = [parse_spec(s) for s in args.specs]
    ch = specs[0].character()
    for s in specs[1:]:
        ch = tensor(ch, s.character())
    flag = demazure_flag_decompose(ch, args.level)
    payload = {"specs": [str(s) for s in specs], "flag": flag.to_json()}
    return Output(payload, ["kind", "weight", "polynomial"], parts_rows(f"flag{args.level}", flag.parts))


def cmd_basis(args) -> Output:
    xi = _partition(args.partition)
    rows = []
    for tup in enumerate_basis(xi):
        w = xi.size - 2 * sum(tup)
        g = sum(r * i for r, i in enumerate(tup))
        rows.append([",".join(map(str, tup)), w, g])
    payload = {
        "partition": str(xi),
        "basis": [{"exponents": list(map(int, r[0].split(","))) if r[0] else [], "weight": r[1], "grade": r[2]}
                  for r in rows],
        "cardinality": len(rows),
    }
    return Output(payload, ["exponents", "weight", "grade"], rows)


def cmd_dim(args) -> Output:
    specs = [parse_spec(s) for s in args.specs]
    ch = specs[0].character()
    for s in specs[1:]:
        ch = tensor(ch, s.character())
    gd = graded_dimension(ch)
    payload = {"specs": [str(s) for s in specs], "graded_dimension": gd.to_json(), "dimension": dimension(ch)}
    return Output(payload, ["kind", "weight", "polynomial"],
                  [["grdim", "", poly_text(gd)], ["dim", "", str(dimension(ch))]])


def cmd_pieri(args) -> Output:
    if not args.n >= args.m >= 0:
        raise PreconditionError(f"pieri needs n >= m >= 0, got ({args.n}, {args.m})")
    coeffs = pieri_expand(args.n, args.m)
    payload = {
        "n": args.n,
        "m": args.m,
        "coefficients": [{"shape": list(lam), "coeff": c.to_json()} for lam, c in coeffs.items()],
    }
    rows = [[f"{lam[0]},{lam[1]}", str(c.num), str(c.den)] for lam, c in coeffs.items()]
    return Output(payload, ["shape", "numerator", "denominator"], rows)


def cmd_macdonald(args) -> Output:
    if args.gm is not None:
        if args.gm < 0:
            raise ParseError(f"g_m needs m >= 0, got {args.gm}")
        p, label = gm(args.gm), f"g_{args.gm}"
    else:
        if args.shape is None:
            raise ParseError("macdonald needs a shape like 2,1 or --gm M")
        raw = [_int(t, "shape part") for t in args.shape.split(",")]
        if any(p < 0 for p in raw) or any(a < b for a, b in zip(raw, raw[1:])):
            raise ParseError(f"shape must be weakly decreasing and nonnegative, got {args.shape}")
        lam = tuple(p for p in raw if p)
        if len(lam) > 2:
            raise ParseError(f"two-row shapes only, got {args.shape}")
        p, label = macdonald_p(lam), f"P_({args.shape})"
    payload = {"polynomial": label, **p.to_json()}
    rows = [[f"{a},{b}", str(c.num), str(c.den)] for (a, b), c in p.terms.items()]
    if args.character:
        ch = sympoly_to_character(p)
        payload["character"] = ch.to_json()
    return Output(payload, ["exponents", "numerator", "denominator"], rows)


def cmd_verify(args) -> Output:
    bounds = {"max": args.max, "size": args.size, "max_part": args.max_part, "weight": args.weight, "m": args.m}
    try:
        report = run_suite(args.suite, bounds, jobs=args.jobs)
    except UnknownSuite:
        raise ParseError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}, all") from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rows = [[f["suite"] if "suite" in f else report.suite, json.dumps(f["case"]), json.dumps(f, sort_keys=True)]
            for f in report.failures]
    out = Output(json.loads(report.dumps()), ["suite", "case", "failure"], rows)
    out.status = EXIT_OK if report.ok else EXIT_VERIFY
    return out


# --- sweeps ------------------------------------------------------------------


def _sweep_graded_mul(m, n):
    dec = weyl_tensor_irr_multiplicities(m, n)
    return [[m, n, (m + n - w) // 2, w, p] for w, p in dec.parts.items()]


def _sweep_level2(n, m):
    flag = weyl_tensor_level2_multiplicities(n, m)
    return [[n, m, (m + n - w) // 2, w, p] for w, p in flag.parts.items()]


def _sweep_weyl_flag(m, level):
    flag = demazure_flag_decompose(cvmod.weyl_char(m), level)
    return [[m, level, (m - w) // 2, w, p] for w, p in flag.parts.items()]


def _sweep_row(case):
    target, a, b = case
    return {"graded-mul": _sweep_graded_mul, "level2-flag": _sweep_level2, "weyl-flag": _sweep_weyl_flag}[target](a, b)


SWEEPS = {
    "graded-mul": (["m", "n", "i", "weight", "multiplicity"], ("m", "n")),
    "level2-flag": (["n", "m", "s", "weight", "multiplicity"], ("n", "m")),
    "weyl-flag": (["m", "level", "s", "weight", "multiplicity"], ("m", "level")),
}


def _sweep_cases(target: str, args) -> list[tuple]:
    _, (ka, kb) = SWEEPS[target]
    raw = {"m": args.m, "n": args.n, "level": args.level}
    for key in (ka, kb):
        if raw[key] is None:
            raise ParseError(f"sweep {target} needs --{key}")
    xs, ys = parse_range(raw[ka], ka), parse_range(raw[kb], kb)
    cases = []
    for a in xs:
        for b in ys:
            if target == "graded-mul" and (a < 1 or b < 1):
                raise ParseError("graded-mul needs m, n >= 1")
            if target == "level2-flag" and a < b:
                raise ParseError(f"level2-flag needs n >= m, got n={a}, m={b}")
            if target == "weyl-flag" and b < 1:
                raise ParseError("weyl-flag needs level >= 1")
            cases.append((target, a, b))
    return cases


def _run_sweep_case(case):
    try:
        return ("ok", _sweep_row(case))
    except NoFlag as exc:
        return ("noflag", exc.to_json())


def cmd_sweep(args) -> Output:
    if args.target not in SWEEPS:
        raise ParseError(f"unknown sweep target {args.target!r}; expected one of {', '.join(SWEEPS)}")
    if args.format == "table":
        raise ParseError("sweep output is json or csv")
    header, _ = SWEEPS[args.target]
    cases = _sweep_cases(args.target, args)
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_sweep_case, cases))
    else:
        results = [_run_sweep_case(c) for c in cases]
    rows = []
    for status, value in results:
        if status == "noflag":
            raise NoFlagPayload(value)
        rows.extend(value)
    payload = {
        "target": args.target,
        "rows": [dict(zip(header[:-1], r[:-1]), multiplicity=r[-1].to_json()) for r in rows],
    }
    return Output(payload, header, [r[:-1] + [poly_text(r[-1])] for r in rows])


class NoFlagPayload(Exception):
    """A NoFlag raised in a worker, carried back as its JSON description."""

    def __init__(self, payload: dict):
        super().__init__(payload)
        self.payload = payload


# --- argument parser ---------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=["json", "table", "csv"], default=d if suppress else "json")
    parser.add_argument("--jobs", type=int, default=d if suppress else 1, help="worker processes for sweeps")
    parser.add_argument("--output", default=d, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2char", description="Graded characters of sl2[t]-modules.")
    _globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="character of a named module")
    p.add_argument("kind", help="weyl | cv | demazure | truncated | hook | irr")
    p.add_argument("params", nargs="*", help="integers, or a partition like 2,2,1 for cv")
    p.add_argument("--level", type=int)
    p.add_argument("--weight", type=int)
    p.add_argument("--decompose", help="irr or flag=<level>")
    p.add_argument("--dim", action="store_true", help="also print the graded dimension")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("tensor", parents=[common], help="tensor product of two characters")
    p.add_argument("left", help="e.g. weyl:2, irr:1, cv:2,1, demazure:2:3, truncated:5:3, hook:3:2")
    p.add_argument("right")
    p.add_argument("--route", choices=["direct", "pieri", "truncated", "quotients"], default="direct")
    p.add_argument("--decompose", help="irr or flag=<level>")
    p.add_argument("--dim", action="store_true")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("flag", parents=[common], help="Demazure flag of a (tensor product of) character(s)")
    p.add_argument("specs", nargs="+")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser("basis", parents=[common], help="monomial basis of V(xi)")
    p.add_argument("partition")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dim", parents=[common], help="graded dimension of a (tensor product of) character(s)")
    p.add_argument("specs", nargs="+")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("pieri", parents=[common], help="Pieri coefficients of P_(n) g_m at t = 0")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("macdonald", parents=[common], help="P_lambda(x1, x2; q, 0) or g_m")
    p.add_argument("shape", nargs="?", help="two-row shape such as 2,1")
    p.add_argument("--gm", type=int, metavar="M", help="print g_m instead")
    p.add_argument("--character", action="store_true", help="also map to a graded character")
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(list(SUITES) + ["all"]))
    p.add_argument("--max", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--max-part", type=int, dest="max_part")
    p.add_argument("--weight", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="tabulate multiplicity polynomials")
    p.add_argument("target", help=", ".join(SWEEPS))
    p.add_argument("--m", help="integer or range a..b")
    p.add_argument("--n", help="integer or range a..b")
    p.add_argument("--level", help="integer or range a..b")
    p.set_defaults(func=cmd_sweep)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cache_path() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) / CACHE_FILE if d else None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.output = getattr(args, "output", None)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    cache = _cache_path()
    if cache is not None and cache.exists():
        cvmod.load_cache(cache)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoFlag as exc:
        _emit(json.dumps(exc.to_json(), indent=2) + "\n", args.output)
        return EXIT_NOFLAG
    except NoFlagPayload as exc:
        _emit(json.dumps(exc.payload, indent=2) + "\n", args.output)
        return EXIT_NOFLAG
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(render(out, args.format), args.output)
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        cvmod.save_cache(cache)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
