"""Command-line driver.

Requests come either from a request file (`--input`) or from inline
flags mirroring the input grammar.  Exit codes: 0 success, 1 failed
`--assert-paracr`, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as rep
from .classify import Pi1Decomposition, classify, enumerate_reports
from .satake import SatakeDiagram, bundled_catalog, catalog_lookup, normalize_name
from .speclang import SpecDocument, SpecError, parse_catalog, parse_spec


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="paracr",
        description="Classify para-CR structures on flag manifolds of simple Lie algebras.",
    )
    p.add_argument("--input", metavar="FILE", help="spec file to run")
    p.add_argument("--algebra", metavar="TOKEN", help="algebra, e.g. A3 or E6")
    p.add_argument("--realform", metavar="NAME", help="catalog real form, e.g. su(2,2)")
    p.add_argument("--satake", metavar="SPEC",
                   help="inline diagram, e.g. 'black {2} arrows {(1,3)}'")
    p.add_argument("--pi1", metavar="SET", help="label-one vertices, e.g. 1,4,6")
    p.add_argument("--plus", metavar="SET", help="plus part of the split")
    p.add_argument("--minus", metavar="SET", help="minus part of the split")
    p.add_argument("--mode", choices=("classify", "enumerate", "tables"),
                   help="run mode (default classify)")
    p.add_argument("--tables", metavar="TOKEN",
                   help="shorthand for --algebra TOKEN --mode tables")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-rank", type=int, default=8, metavar="N",
                   help="enumeration rank bound (default 8)")
    p.add_argument("--all-decompositions", action="store_true",
                   help="evaluate every split of pi1")
    p.add_argument("--assert-paracr", action="store_true",
                   help="exit 1 unless some evaluated split is a para-CR structure")
    p.add_argument("--satake-catalog", metavar="FILE",
                   help="alternative Satake catalog file")
    return p


def _braced(text: str) -> str:
    text = text.strip()
    return text if text.startswith("{") else "{" + text + "}"


def _doc_from_args(args) -> SpecDocument:
    if args.input:
        return parse_spec(Path(args.input).read_text())
    lines = []
    algebra = args.tables or args.algebra
    if algebra:
        lines.append(f"algebra {algebra}")
    if args.realform:
        lines.append(f"realform {args.realform}")
    if args.satake:
        lines.append(f"satake {args.satake.strip()}")
    if args.pi1 is not None:
        lines.append(f"pi1 {_braced(args.pi1)}")
    if args.plus is not None or args.minus is not None:
        lines.append(f"split plus {_braced(args.plus or '')} minus {_braced(args.minus or '')}")
    if args.tables:
        lines.append("mode tables")
    elif args.mode:
        lines.append(f"mode {args.mode}")
    return parse_spec("\n".join(lines) + "\n")


def _load_catalog(args) -> dict[str, SatakeDiagram]:
    if args.satake_catalog:
        diagrams = parse_catalog(Path(args.satake_catalog).read_text())
        return {normalize_name(sd.name): sd for sd in diagrams}
    return bundled_catalog()


def run(args) -> int:
    doc = _doc_from_args(args)
    real_form = doc.satake
    if doc.real_form is not None:
        real_form = catalog_lookup(doc.real_form, _load_catalog(args))

    if doc.mode == "classify":
        if doc.pi1 is None:
            raise SpecError("classify mode needs a pi1 statement", 1)
        dec = None
        if doc.plus is not None:
            dec = Pi1Decomposition(frozenset(doc.plus), frozenset(doc.minus))
        result = classify(
            doc.algebra, real_form, doc.pi1, decomposition=dec,
            enumerate_decompositions=args.all_decompositions or dec is None,
        )
        payload = rep.classify_payload(result)
        text = rep.render_classify(result)
        ok = result.any_paracr
    elif doc.mode == "enumerate":
        reports = enumerate_reports(doc.algebra, real_form, max_rank=args.max_rank)
        payload = rep.enumerate_payload(reports, doc.algebra, real_form.name if real_form else None)
        text = rep.render_enumerate(reports, doc.algebra, real_form.name if real_form else None)
        ok = any(r.any_paracr for r in reports)
    else:  # tables
        reports = enumerate_reports(doc.algebra, real_form, max_rank=args.max_rank)
        payload = rep.tables_payload(reports, doc.algebra, real_form.name if real_form else None)
        text = rep.render_tables(payload)
        ok = bool(payload["paracr_feasible"])

    sys.stdout.write(rep.to_json(payload) if args.format == "json" else text)
    if args.assert_paracr and not ok:
        return 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (SpecError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
