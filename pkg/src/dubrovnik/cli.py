"""Command-line front end.

Exit codes: 0 ok, 1 semantic input error, 2 parse error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .diagram import DiagramError, MalformedLine, format_pd, parse_pd
from .families import ChainSpec, InvalidSpec, RationalWord, build_chain, build_rational
from .ring import render, z_degree, z_min_degree
from .skein import (
    BASIS_NAMES,
    NotALink,
    NotATangle,
    SkeinEngine,
    ambient_normalize,
    to_basis3,
)
from .verify import SUITES, run_suite
from . import wiring

OK, SEMANTIC, PARSE, FAILED = 0, 1, 2, 3


@dataclass
class CommandResult:
    status: str = "ok"
    lines: list[str] = field(default_factory=list)
    code: int = OK


def _fmt_deg(d) -> str:
    if d == float("-inf"):
        return "-inf"
    if d == float("inf"):
        return "inf"
    return str(d)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_pd(path: str):
    return parse_pd(_read(path))


def cmd_compute(args) -> CommandResult:
    d = _load_pd(args.input)
    if d.is_tangle:
        raise NotALink("compute needs a closed diagram; use decompose for tangles")
    poly = SkeinEngine().evaluate_link(d)
    if args.ambient:
        poly = ambient_normalize(poly, d.writhe())
    return CommandResult(
        lines=[
            render(poly),
            f"zdeg={_fmt_deg(z_degree(poly))} zmin={_fmt_deg(z_min_degree(poly))} components={d.n_components()}",
        ]
    )


def cmd_decompose(args) -> CommandResult:
    d = _load_pd(args.input)
    if not d.is_tangle:
        raise NotATangle("decompose needs a tangle with endpoints NW, NE, SW, SE")
    m = SkeinEngine().decompose(d)
    if args.basis3:
        names, coeffs = BASIS_NAMES[:3], to_basis3(m)
    else:
        names, coeffs = BASIS_NAMES, m.coefficients
    lines = [f"{n}: {render(f)}" for n, f in zip(names, coeffs)]
    lines.append(f"N={m.source_N} B={m.source_B} bound={m.bound()}")
    lines.append(" ".join(f"zdeg_{n}={_fmt_deg(z_degree(f))}" for n, f in zip(names, coeffs)))
    return CommandResult(lines=lines)


def cmd_bound(args) -> CommandResult:
    w = wiring.parse_wiring(_read(args.wiring))
    tangles = [_load_pd(p) for p in args.tangles]
    bound = wiring.theorem13_bound(w, tangles)
    poly = wiring.evaluate_by_decomposition(w, tangles)
    deg = z_degree(poly)
    slack = bound - deg
    line = f"bound={bound} actual={_fmt_deg(deg)} slack={_fmt_deg(slack)}"
    if slack < 0:
        return CommandResult("violation", [line], FAILED)
    return CommandResult(lines=[line])


def _parse_twists(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InvalidSpec(f"bad twist list {text!r}") from None


_SIGNS = {"+": "positive", "positive": "positive", "-": "negative", "negative": "negative"}


def cmd_family(args) -> CommandResult:
    if args.family == "chain":
        d = build_chain(ChainSpec(_parse_twists(args.twists), closed=not args.open))
    else:
        if args.sign not in _SIGNS:
            raise InvalidSpec(f"sign must be + or -, not {args.sign!r}")
        d = build_rational(RationalWord(_SIGNS[args.sign], args.word or ""))
    return CommandResult(lines=format_pd(d).rstrip("\n").split("\n"))


def cmd_verify(args) -> CommandResult:
    lines = [f"suite={args.suite} seed={args.seed}"]
    failed = total = 0
    for case in run_suite(args.suite, args.max, args.seed, args.cases):
        total += 1
        failed += not case.passed
        lines.append(case.line())
    lines.append(f"summary: {total - failed}/{total} passed")
    if failed:
        return CommandResult("violation", lines, FAILED)
    return CommandResult(lines=lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dubrovnik", description="Dubrovnik polynomial tools")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate a closed diagram")
    c.add_argument("--input", required=True, help="PD file, or - for stdin")
    c.add_argument("--ambient", action="store_true", help="normalize away the writhe")
    c.set_defaults(func=cmd_compute)

    d = sub.add_parser("decompose", help="expand a tangle in the P, Q, R1, R2 basis")
    d.add_argument("--input", required=True)
    d.add_argument("--basis3", action="store_true", help="eliminate R2")
    d.set_defaults(func=cmd_decompose)

    b = sub.add_parser("bound", help="compare a wiring's degree bound with the actual degree")
    b.add_argument("--wiring", required=True)
    b.add_argument("--tangles", required=True, nargs="+")
    b.set_defaults(func=cmd_bound)

    f = sub.add_parser("family", help="print a generated diagram as PD")
    fam = f.add_subparsers(dest="family", required=True)
    ch = fam.add_parser("chain")
    ch.add_argument("--twists", required=True, help="comma separated even integers")
    ch.add_argument("--open", action="store_true")
    ra = fam.add_parser("rational")
    ra.add_argument("--sign", required=True, help="+ or -")
    ra.add_argument("--word", default="", help="letters V and H")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    v.add_argument("--max", type=int, default=None, help="size limit for the suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=None, help="number of random cases")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedLine, wiring.MalformedLine) as exc:
        return CommandResult("error", [f"parse error: {exc}"], PARSE)
    except InvalidSpec as exc:
        return CommandResult("error", [f"invalid spec: {exc}"], PARSE)
    except (DiagramError, wiring.WiringError) as exc:
        return CommandResult("error", [f"error: {exc}"], SEMANTIC)
    except OSError as exc:
        return CommandResult("error", [f"error: {exc}"], SEMANTIC)


def main(argv=None) -> int:
    result = run(argv)
    stream = sys.stdout if result.code in (OK, FAILED) else sys.stderr
    for line in result.lines:
        print(line, file=stream)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
