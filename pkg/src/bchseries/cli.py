"""Command-line front end: ``terms``, ``verify`` and ``count``.

Exit codes: 0 success, 1 verified mismatch, 2 usage error.  Machine output
goes to stdout, diagnostics to stderr.  ``BCH_COLOR=1`` enables ANSI colour
in the human-readable formats.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys

from . import __version__
from .bch import XY_ALPHABET, BchResult, bch_direct, bch_matrix
from .errors import AlgebraError
from .freealg import Alphabet, HomogeneousComponent, format_coeff, format_terms, parse_rational
from .metering import CountReport, count_full_bch, count_product_of_exponentials
from .verify import run_verification

SCHEMA_VERSION = "1"
DEFAULT_MAX_ORDER = 12

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


# payload encoding


def component_to_json(term: HomogeneousComponent, alphabet: Alphabet = XY_ALPHABET) -> dict:
    return {
        "degree": term.degree,
        "monomials": [
            {"coeff": f"{'-' if c < 0 else ''}{format_coeff(c, always_fraction=True)}",
             "word": alphabet.render(w) if w else ""}
            for w, c in term
        ],
    }


def component_from_json(data: dict, alphabet: Alphabet = XY_ALPHABET) -> HomogeneousComponent:
    return HomogeneousComponent(
        data["degree"],
        {alphabet.parse_word(m["word"]): parse_rational(m["coeff"]) for m in data["monomials"]},
    )


def output_document(command: str, parameters: dict, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "parameters": parameters, "payload": payload}


def emit_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# human-readable rendering


def _color(text: str, ok: bool) -> str:
    if os.environ.get("BCH_COLOR", "0") != "1":
        return text
    return f"\x1b[{32 if ok else 31}m{text}\x1b[0m"


def _latex_label(label: str) -> str:
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", label)
    return f"{m.group(1)}_{{{m.group(2)}}}" if m else label


def latex_word(word, alphabet: Alphabet = XY_ALPHABET) -> str:
    """``xxy`` -> ``x^2 y``; runs of equal letters become powers."""
    if not word:
        return "1"
    parts = []
    for letter, run in itertools.groupby(word):
        p = len(list(run))
        base = _latex_label(alphabet.labels[letter])
        parts.append(base if p == 1 else f"{base}^{{{p}}}" if p > 9 else f"{base}^{p}")
    return " ".join(parts)


def latex_terms(term, alphabet: Alphabet = XY_ALPHABET) -> str:
    out = []
    for w, c in term:
        a = abs(c)
        if a.denominator != 1:
            coeff = f"\\frac{{{a.numerator}}}{{{a.denominator}}} "
        elif a != 1 or not w:
            coeff = f"{a.numerator} "
        else:
            coeff = ""
        body = coeff + latex_word(w, alphabet) if w else coeff.strip()
        if not out:
            out.append(("- " if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


def plain_terms(terms) -> str:
    return "\n".join(f"deg {t.degree}: {format_terms(t, XY_ALPHABET, sep='  ')}" for t in terms)


def count_table(report: CountReport) -> str:
    d, m = report.direct_counts, report.matrix_counts
    rows = [("degree", "direct", "matrix")]
    rows += [(str(i), str(a), str(b)) for i, (a, b) in
             enumerate(zip(d.as_list(report.order), m.as_list(report.order)))]
    rows.append(("total", str(d.total), str(m.total)))
    rows.append(("scalar", str(d.scalar_total), str(m.scalar_total)))
    width = max(len(c) for r in rows for c in r)
    lines = [f"scope: {report.scope}  order: {report.order}  backend: {report.backend}"]
    lines += ["  ".join(c.rjust(width) for c in r) for r in rows]
    lines.append(_color(f"equal: {'true' if report.equal else 'false'}", report.equal))
    return "\n".join(lines)


# commands


def _check_order(n: int, lo: int, max_order: int) -> None:
    if not lo <= n <= max_order:
        raise _Usage(f"order must lie in {lo}..{max_order}, got {n}")


def cmd_terms(args, out) -> int:
    _check_order(args.order, 1, args.max_order)
    results: list[BchResult] = []
    if args.method in ("direct", "both"):
        results.append(bch_direct(args.order))
    if args.method in ("matrix", "both"):
        results.append(bch_matrix(args.order))
    terms = results[0].terms
    agreement = all(r.terms == terms for r in results)
    params = {"order": args.order, "method": args.method, "format": args.format}

    if args.format == "json":
        payload = {"method": args.method, "terms": [component_to_json(t) for t in terms]}
        if args.method == "both":
            payload["agreement"] = agreement
        out.write(emit_json(output_document("terms", params, payload)))
    elif args.format == "latex":
        for t in terms:
            out.write(latex_terms(t) + "\n")
        if args.method == "both":
            out.write(f"% agreement: {'true' if agreement else 'false'}\n")
    else:
        out.write(plain_terms(terms) + "\n")
        if args.method == "both":
            out.write(_color(f"agreement: {'true' if agreement else 'false'}", agreement) + "\n")
    if not agreement:
        print("direct and matrix pipelines disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, out) -> int:
    _check_order(args.order, 1, args.max_order)
    if args.trials < 1 or args.generators < 1:
        raise _Usage("--trials and --generators must be at least 1")
    if not 0 < args.density <= 1:
        raise _Usage("--density must lie in (0, 1]")
    summary = run_verification(args.order, args.trials, args.seed, args.generators, args.density)
    params = {"order": args.order, "trials": args.trials, "seed": args.seed,
              "generators": args.generators, "density": args.density}
    if args.format == "json":
        out.write(emit_json(output_document("verify", params, summary.to_dict())))
    else:
        for check, passed in summary.passed.items():
            out.write(f"{check:<22} passed {passed:>6}  failed {summary.failed[check]:>6}\n")
        out.write(_color("all checks passed" if summary.ok else "FAILED", summary.ok) + "\n")
    if not summary.ok:
        for f in summary.failures[:10]:
            print(f"reproducer: {f.reproducer()} {f.detail}".rstrip(), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_count(args, out) -> int:
    lo = 0 if args.scope == "product" else 1
    _check_order(args.order, lo, args.max_order)
    if args.scope == "product":
        report = count_product_of_exponentials(args.order, args.backend)
    else:
        report = count_full_bch(args.order, args.backend)
    params = {"order": args.order, "scope": args.scope, "backend": args.backend}
    if args.format == "json":
        out.write(emit_json(output_document("count", params, report.to_dict())))
    else:
        out.write(count_table(report) + "\n")
    return EXIT_OK if report.equal else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchseries",
        description="Exact BCH terms by direct expansion and by Reinsch matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_order):
        p.add_argument("--order", "-n", type=int, default=default_order)
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    p = sub.add_parser("terms", help="print BCH terms degree by degree")
    common(p, 4)
    p.add_argument("--method", choices=("direct", "matrix", "both"), default="both")
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("verify", help="randomized equivalence check")
    common(p, 4)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--generators", type=int, default=2)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="compare multiplication counts")
    common(p, 2)
    p.add_argument("--scope", choices=("product", "full"), default="product")
    p.add_argument("--backend", choices=("compact", "dense"), default="compact")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (_Usage, AlgebraError) as exc:
        print(f"bchseries {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
