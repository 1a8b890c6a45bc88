"""Command-line front end: ``wajsberg <command> ...``.

Exit status: 0 on success, 1 when the input is well-formed but refused on
algebraic grounds (axiom failure, non-ideal, census above the cap), 2 for
usage and parse errors.  Output depends only on the inputs and flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .constructors import PreconditionError, chain, product_of
from .core import AxiomViolation, MalformedTableError, WajsbergTable
from .enumeration import CensusCapError, labeled_census
from .formats import FORMATS, TableDocument, TableParseError, read_document, render
from .ideals import IdealSet, decompose, enumerate_ideals, is_prime_ideal, quotient
from .isomorphism import find_isomorphism, poset_isomorphic
from .regression import RECONSTRUCTIONS, audit_order6_maps, paper_regression, reconstruct

OK, REFUSED, USAGE = 0, 1, 2


class Refusal(Exception):
    """Well-formed input that the requested operation cannot accept."""


def _load(path: str, fmt: str | None) -> WajsbergTable:
    doc = read_document(path, fmt)
    report = doc.validate()
    if not report.ok:
        raise Refusal(f"{path}: not a Wajsberg algebra\n{report.summary()}")
    return report.table


def _json(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_chain(args) -> str:
    labels = args.labels.split(",") if args.labels else None
    return render(chain(args.n, labels), args.format)


def cmd_product(args) -> str:
    tables = [_load(p, args.input_format) for p in args.files]
    return render(product_of(*tables), args.format)


def cmd_verify(args) -> tuple[str, int]:
    doc = read_document(args.file, args.input_format)
    report = doc.validate()
    if args.format == "json":
        out = _json(
            {
                "valid": report.ok,
                "n": report.n,
                "violations": [
                    {"axiom": v.axiom, "witness": [report.labels[i] for i in v.witness], "detail": v.detail}
                    for v in report.violations
                ],
            }
        )
    elif args.format == "csv":
        rows = [["axiom", "witness", "detail"]]
        rows += [[v.axiom, " ".join(report.labels[i] for i in v.witness), v.detail] for v in report.violations]
        out = _csv(rows)
    else:
        out = report.summary(limit=args.limit) + "\n"
    return out, OK if report.ok else REFUSED


def _emit_sets(W: WajsbergTable, sets: Sequence[IdealSet], fmt: str, key: str) -> str:
    if fmt == "json":
        return _json({key: [list(I.labels(W)) for I in sets]})
    if fmt == "csv":
        return _csv([I.labels(W) for I in sets])
    return "".join(I.format(W) + "\n" for I in sets)


def cmd_ideals(args) -> str:
    W = _load(args.file, args.input_format)
    ideals = enumerate_ideals(W, proper=args.proper)
    if args.prime or args.literal:
        ideals = [I for I in ideals if is_prime_ideal(W, I, literal=args.literal)]
    return _emit_sets(W, ideals, args.format, "ideals")


def cmd_quotient(args) -> str:
    W = _load(args.file, args.input_format)
    try:
        I = IdealSet.from_labels(W, [s.strip() for s in args.ideal.split(",") if s.strip()])
    except KeyError as exc:
        raise Refusal(f"unknown label in --ideal: {exc.args[0]}") from None
    try:
        Q = quotient(W, I)
    except ValueError as exc:
        raise Refusal(str(exc)) from None
    blocks = ", ".join(
        f"{name}={{{','.join(members)}}}" for name, members in zip(Q.table.labels, Q.block_labels(W))
    )
    doc = TableDocument.from_table(Q.table, note=f"blocks {blocks}")
    return render(doc, args.format)


def cmd_iso(args) -> str:
    A = _load(args.file_a, args.input_format)
    B = _load(args.file_b, args.input_format)
    f = poset_isomorphic(A, B) if args.poset else find_isomorphism(A, B)
    pairs = None if f is None else [(A.labels[x], B.labels[f(x)]) for x in range(A.n)]
    if args.format == "json":
        return _json({"kind": "order" if args.poset else "algebra", "witness": None if pairs is None else dict(pairs)})
    if args.format == "csv":
        return _csv([["from", "to"], *(pairs or [])])
    if pairs is None:
        return "none\n"
    return " ".join(f"{a}->{b}" for a, b in pairs) + "\n"


def cmd_census(args) -> str:
    try:
        report = labeled_census(args.n, cap=args.cap, allow_large=args.allow_large)
    except CensusCapError as exc:
        raise Refusal(str(exc)) from None
    if args.report == "json":
        return _json(report.to_dict())
    if args.report == "csv":
        rows = [["field", "value"]]
        for key, value in report.to_dict().items():
            rows.append([key, json.dumps(value, ensure_ascii=False) if isinstance(value, (list, dict)) else value])
        return _csv(rows)
    return report.to_text() + "\n"


def cmd_decompose(args) -> str:
    W = _load(args.file, args.input_format)
    d = decompose(W)
    sig = "{" + ",".join(str(s) for s in d.signature) + "}"
    if args.format == "json":
        return _json(
            {
                "signature": list(d.signature),
                "factors": [
                    {"ideal": list(P.labels(W)), "size": q.table.n, "blocks": [list(b) for b in q.block_labels(W)]}
                    for P, q in zip(d.ideals, d.quotients)
                ],
            }
        )
    if args.format == "csv":
        return _csv([["ideal", "size"], *([" ".join(P.labels(W)), q.table.n] for P, q in zip(d.ideals, d.quotients))])
    lines = [f"signature: {sig}"]
    for k, (P, q) in enumerate(zip(d.ideals, d.quotients), 1):
        lines.append(f"P{k} = {P.format(W)}  quotient: chain of order {q.table.n}")
    return "\n".join(lines) + "\n"


def cmd_regress(args) -> str:
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        suffix = {"text": "txt", "json": "json", "csv": "csv"}[args.format]
        lines = []
        for name, (source, _) in RECONSTRUCTIONS.items():
            path = out / f"{name}.{suffix}"
            doc = TableDocument.from_table(reconstruct(name), note=f"reconstructed: {source}")
            path.write_text(render(doc, args.format), encoding="utf-8")
            lines.append(f"{path}\n")
        return "".join(lines)
    report = paper_regression(args.fixtures)
    unexpected = report.unexpected() if args.fixtures is None else {}
    audits = audit_order6_maps(args.fixtures) if args.maps else []
    if args.format == "json":
        data = {
            name: {
                "source": c.source,
                "missing": c.missing,
                "error": c.error,
                "printed_valid": c.printed_valid,
                "mismatches": [[m.row, m.col, m.printed, m.computed] for m in c.mismatches],
                "unexpected": name in unexpected,
            }
            for name, c in report.comparisons.items()
        }
        if audits:
            data = {"tables": data, "maps": [vars(a) for a in audits]}
        return _json(data)
    if args.format == "csv":
        rows = [["table", "row", "col", "printed", "computed"]]
        for name, c in report.comparisons.items():
            if c.missing:
                rows.append([name, "", "", "MISSING", ""])
            rows += [[name, m.row, m.col, m.printed, m.computed] for m in c.mismatches]
        return _csv(rows)
    text = report.to_text() + "\n"
    if unexpected:
        text += "unexpected: " + ", ".join(sorted(unexpected)) + "\n"
    for a in audits:
        printed = "-" if a.printed_table_homomorphism is None else str(a.printed_table_homomorphism).lower()
        text += (
            f"f{a.key}: {a.images} listed as {a.printed_kind}; transported table isomorphic: "
            f"{str(a.map_is_isomorphism).lower()}; order automorphism of the product: "
            f"{str(a.order_automorphism).lower()}; morphism onto printed table: {printed}\n"
        )
    return text


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("order must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wajsberg", description="Finite Wajsberg algebra workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, help: str, reads: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, description=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=FORMATS, default="text", help="output format (default text)")
        if reads:
            p.add_argument(
                "--input-format", choices=FORMATS, default=None, help="input format (default: from file extension)"
            )
        return p

    p = command("chain", cmd_chain, "print the chain of order n", reads=False)
    p.add_argument("n", type=_positive)
    p.add_argument("--labels", help="comma-separated labels, bottom first, unit last")

    p = command("product", cmd_product, "direct product of two or more tables, folded left to right")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = command("verify", cmd_verify, "check the axioms; exit 1 with witnesses on failure")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=3, help="witnesses shown per axiom in text output")

    p = command("ideals", cmd_ideals, "list ideals in ascending order")
    p.add_argument("file")
    p.add_argument("--proper", action="store_true", help="omit the trivial ideal and the whole algebra")
    p.add_argument("--prime", action="store_true", help="keep prime ideals only")
    p.add_argument(
        "--literal", action="store_true", help="prime test with x, y ranging over the ideal only (implies --prime)"
    )

    p = command("quotient", cmd_quotient, "quotient by an ideal, with its blocks in the note line")
    p.add_argument("file")
    p.add_argument("--ideal", required=True, help="comma-separated labels, e.g. O,C")

    p = command("iso", cmd_iso, "least isomorphism between two tables, or none")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--poset", action="store_true", help="search order isomorphisms instead")

    p = sub.add_parser("census", help="labeled census of order n", description="labeled census of order n")
    p.set_defaults(func=cmd_census)
    p.add_argument("n", type=_positive)
    p.add_argument("--report", "--format", dest="report", choices=FORMATS, default="text")
    p.add_argument("--cap", type=int, default=None, help="order limit (default from WAJSBERG_CENSUS_CAP or 9, at most 10)")
    p.add_argument("--allow-large", action="store_true", help="admit orders up to 12")

    p = command("decompose", cmd_decompose, "chain signature and the prime ideals that realise it")
    p.add_argument("file")

    p = command("regress", cmd_regress, "compare the bundled printed tables with their reconstructions", reads=False)
    p.add_argument("--fixtures", default=None, help="fixture directory (default: bundled)")
    p.add_argument("--maps", action="store_true", help="also audit the order-6 map listing")
    p.add_argument("--export", metavar="DIR", help="write the reconstructed tables to DIR instead of comparing")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except TableParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (Refusal, AxiomViolation, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return REFUSED
    except MalformedTableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    out, status = result if isinstance(result, tuple) else (result, OK)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
