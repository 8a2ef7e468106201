"""Command-line interface: ``freeconv <command> [options]``.

Every command prints one JSON document (keys sorted, so output is byte
for byte reproducible).  Exit codes: 0 verified / success, 2 indeterminate,
3 certified violation, 1 usage or input error.  ``reproduce-counterexample``
exits 4 when the recomputed values refute the conjecture but disagree with
the published value at the refuting point.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import ParseError
from .inequality_lab import CONJECTURES, STATEMENTS, SearchConfig, run_statement, search_conjectures
from .majorization import IndexTuple, hermitian_falsify, horn_triples
from .multiaffine import MultiPoly, boxplus_gamma, reproduce_counterexample
from .poly import RatPoly, boxplus, rat_to_str
from .report import VerdictReport
from .roots import DEFAULT_EPS, Trilean, is_real_rooted, padded_root_vector, root_vector
from .sampling import RNG_ALGORITHM

EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE, EXIT_VIOLATED, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _rat(s: str) -> Fraction:
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {s!r}") from exc
    if v <= 0:
        raise argparse.ArgumentTypeError("eps must be positive")
    return v


def _load(spec: str):
    """Inline JSON, or a path to a JSON file."""
    text = spec
    if not spec.lstrip().startswith(("{", "[")):
        try:
            text = Path(spec).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {spec}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {spec[:60]!r}: {exc}") from exc


def _exit_for(v: Trilean) -> int:
    if v.is_true:
        return EXIT_OK
    if v.is_false:
        return EXIT_VIOLATED
    return EXIT_INDETERMINATE


def _envelope(args, result) -> dict:
    return {
        "command": args.command,
        "version": __version__,
        "eps": rat_to_str(args.eps),
        "seed": args.seed,
        "result": result,
    }


def _need_inputs(args, k: int) -> list:
    if len(args.inputs) < k:
        raise ParseError(f"{args.command} needs {k} --in argument(s), got {len(args.inputs)}")
    return [_load(s) for s in args.inputs]


def cmd_convolve(args):
    a, b = _need_inputs(args, 2)[:2]
    if "terms" in a or "terms" in b:
        out = boxplus_gamma(MultiPoly.from_json(a), MultiPoly.from_json(b)).to_json()
    else:
        p, q = RatPoly.from_json(a), RatPoly.from_json(b)
        n = args.n if args.n is not None else max(p.n, q.n)
        out = boxplus(p, q, n).to_json()
    return _envelope(args, out), EXIT_OK


def cmd_roots(args):
    (obj,) = _need_inputs(args, 1)[:1]
    p = RatPoly.from_json(obj)
    out = {"poly": p.to_json(), "real_rooted": is_real_rooted(p)}
    if out["real_rooted"]:
        rv = padded_root_vector(p, args.n, args.eps) if args.n else root_vector(p, args.eps)
        out["roots"] = rv.to_json()
        out["width"] = rat_to_str(rv.width)
    return _envelope(args, out), EXIT_OK if out["real_rooted"] else EXIT_VIOLATED


def _report_like(obj):
    if isinstance(obj, dict) and "result" in obj and isinstance(obj["result"], dict):
        obj = obj["result"]
    if isinstance(obj, dict) and "statement" in obj and "inputs" in obj:
        return obj
    return None


def cmd_verify(args):
    objs = _need_inputs(args, 1)
    rep = _report_like(objs[0])
    if rep is not None:
        statement = args.statement or rep["statement"]
        inputs = rep["inputs"]
        eps = Fraction(rep.get("eps", rat_to_str(args.eps))) if args.eps_default else args.eps
    else:
        if not args.statement:
            raise ParseError("--statement is required unless --in is a report")
        statement, eps = args.statement, args.eps
        inputs = {}
        for o in objs:
            if not isinstance(o, dict):
                raise ParseError("verify inputs must be JSON objects")
            inputs.update(o)
    report = run_statement(statement, inputs, eps)
    if args.seed is not None and report.seed is None:
        report = VerdictReport(report.statement, report.inputs, report.verdict, report.witness,
                               report.eps, args.seed, report.details)
    return _envelope(args, report.to_json()), _exit_for(report.verdict)


def cmd_search(args):
    statement = args.statement or "2.3"
    cfg = SearchConfig(statement, n=args.n or 3, eps=args.eps)
    workers = max(1, int(os.environ.get("FREECONV_THREADS", "1") or 1))
    seed = args.seed if args.seed is not None else 0
    reports, summary = search_conjectures(cfg, args.trials, seed, workers=workers)
    out = {"summary": summary, "reports": [r.to_json() for r in reports]}
    args.seed = seed
    return _envelope(args, out), EXIT_VIOLATED if summary["violated"] else EXIT_OK


def cmd_horn(args):
    n = args.n or 2
    sizes = [args.r] if args.r else list(range(1, n + 1))
    out = []
    for r in sizes:
        for t in sorted(horn_triples(n, r), key=lambda t: t.triple):
            entry = t.to_json()
            if args.trials:
                hit = hermitian_falsify(t, args.trials, args.seed or 0)
                entry["falsified"] = hit is not None
            out.append(entry)
    result = {"n": n, "triples": out}
    if args.trials:
        result["rng"] = RNG_ALGORITHM
    return _envelope(args, result), EXIT_OK


def cmd_reproduce(args):
    rep = reproduce_counterexample()
    d = rep.details
    code = EXIT_OK if d["reproduced"] else (EXIT_MISMATCH if d["refuted"] else EXIT_ERROR)
    return _envelope(args, rep.to_json()), code


COMMANDS = {
    "convolve": cmd_convolve,
    "roots": cmd_roots,
    "verify": cmd_verify,
    "search": cmd_search,
    "horn": cmd_horn,
    "reproduce-counterexample": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=_rat, default=None, help="certification width (default 2^-40)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--n", type=int, default=None, help="ambient degree")
    common.add_argument("--statement", default=None,
                        help=f"verify: one of {sorted(STATEMENTS)}; search: one of {list(CONJECTURES)}")
    common.add_argument("--in", dest="inputs", action="append", default=[],
                        help="JSON input: a file path or an inline document (repeatable)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", choices=["json"], default="json")
    common.add_argument("--r", type=int, default=None, help="horn: subset size")

    parser = _Parser(prog="freeconv", description="Exact finite free convolution toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.eps_default = args.eps is None
    if args.eps is None:
        args.eps = DEFAULT_EPS
    try:
        doc, code = COMMANDS[args.command](args)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"freeconv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
