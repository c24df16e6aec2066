"""Command-line interface.

Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.
All output is deterministic; --json variants keep a stable key set.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .ablation import ablate, ablate_all
from .axioms import AxiomError, check_bjoin, check_lmosaic
from .core import BJoinSemilattice
from .document import (
    FILE_SUFFIX,
    ParseError,
    load_structure,
    save_structure,
    serialize_structure,
)
from .enumeration import (
    bjoin_bound,
    canonical_form,
    enumerate_bjoin,
    enumerate_lmosaic,
)
from .equivalence import (
    hyper_assoc_witness,
    roundtrip_bjoin,
    roundtrip_lmosaic,
    verify_family,
)
from .extraction import extract_bjoin
from .hasse import emit_hasse, render_hasse
from .nakano import nakano
from .report import write_family_report


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _write_document(text: str, output: Optional[str]) -> None:
    if output is None:
        print(text, end="")
    else:
        Path(output).write_text(text, encoding="utf-8")
        print(f"wrote {output}")


def _cmd_check(args) -> int:
    s = load_structure(args.file)
    if isinstance(s, BJoinSemilattice):
        if args.strict_neutral:
            print("error: --strict-neutral only applies to lmosaic structures",
                  file=sys.stderr)
            return 2
        kind, report = "bjoin", check_bjoin(s)
    else:
        kind, report = "lmosaic", check_lmosaic(
            s, strict_neutral=args.strict_neutral
        )
    if args.json:
        _print_json({"kind": kind, **report.to_json_dict()})
    else:
        print(report)
    return 0 if report.ok else 1


def _cmd_nakano(args) -> int:
    s = load_structure(args.file)
    if not isinstance(s, BJoinSemilattice):
        print("error: nakano requires a 'bjoin' structure", file=sys.stderr)
        return 2
    _write_document(serialize_structure(nakano(s)), args.output)
    return 0


def _cmd_extract(args) -> int:
    s = load_structure(args.file)
    if isinstance(s, BJoinSemilattice):
        print("error: extract requires an 'lmosaic' structure", file=sys.stderr)
        return 2
    _write_document(serialize_structure(extract_bjoin(s)), args.output)
    return 0


def _cmd_roundtrip(args) -> int:
    s = load_structure(args.file)
    if isinstance(s, BJoinSemilattice):
        direction = "bjoin -> lmosaic -> bjoin"
        diff = roundtrip_bjoin(s)
    else:
        direction = "lmosaic -> bjoin -> lmosaic"
        diff = roundtrip_lmosaic(s)
    if args.json:
        _print_json({"direction": direction, **diff.to_json_dict()})
    else:
        print(f"{direction}: {diff}")
    return 0 if diff.kind == "identical" else 1


def _cmd_enumerate(args) -> int:
    if args.general_rho and args.kind != "lmosaic":
        print("error: --general-rho only applies to lmosaic enumeration",
              file=sys.stderr)
        return 2
    if args.kind == "bjoin":
        structures = list(enumerate_bjoin(args.n))
    else:
        structures = list(enumerate_lmosaic(args.n, general_rho=args.general_rho))
    if args.count_only:
        print(len(structures))
        return 0
    if args.out_dir is not None:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for s in structures:
            name = f"{args.kind}_n{args.n}_{canonical_form(s).digest()}{FILE_SUFFIX}"
            save_structure(s, out / name)
        print(f"wrote {len(structures)} structure(s) to {out}")
        return 0
    for i, s in enumerate(structures):
        if i:
            print()
        print(serialize_structure(s), end="")
    return 0


def _cmd_verify_family(args) -> int:
    summary = verify_family(args.n)
    if args.json:
        _print_json(summary.to_json_dict())
    else:
        print(summary)
    if args.report_dir is not None:
        for path in write_family_report(summary, args.report_dir):
            print(f"wrote {path}")
    return 0 if summary.ok else 1


def _cmd_ablate(args) -> int:
    if args.all:
        results = ablate_all(args.n, args.axiom)
    else:
        found = ablate(args.n, args.axiom)
        results = () if found is None else (found,)
    if args.json:
        _print_json({
            "axiom": args.axiom,
            "size": args.n,
            "results": [
                {
                    "dropped": r.dropped,
                    "structure": json.loads(serialize_structure(r.structure)),
                    "broken": [
                        {"name": b.name, "witness": _jsonable(b.witness)}
                        for b in r.broken
                    ],
                }
                for r in results
            ],
        })
        return 0
    if not results:
        print(f"no structure of size {args.n} fails exactly {args.axiom!r}")
        return 0
    for i, r in enumerate(results):
        if i:
            print()
        print(f"dropping {r.dropped!r} admits:")
        print(serialize_structure(r.structure), end="")
        if r.broken:
            print("broken downstream properties:")
            for b in r.broken:
                print(f"  {b}")
        else:
            print("broken downstream properties: none")
    return 0


def _cmd_assoc_scan(args) -> int:
    bound = bjoin_bound()
    if not 1 <= args.n <= bound:
        print(f"error: size must be in 1..{bound}, got {args.n}", file=sys.stderr)
        return 2
    for size in range(1, args.n + 1):
        for index, s in enumerate(enumerate_bjoin(size)):
            witness = hyper_assoc_witness(nakano(s))
            if witness is not None:
                print(f"size={size} structure={index} triple={witness}")
                return 0
    print(f"no associativity failure up to size {args.n}")
    return 0


def _cmd_hasse(args) -> int:
    s = load_structure(args.file)
    dot = emit_hasse(s)
    if args.output is not None:
        Path(args.output).write_text(dot, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        print(dot, end="")
    if args.render is not None:
        render_hasse(s, args.render)
        print(f"wrote {args.render}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperkit",
        description="Finite-model toolkit for L-mosaics and join-semilattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom checker on a structure file")
    p.add_argument("file")
    p.add_argument("--strict-neutral", action="store_true",
                   help="require e (+) x = {x} instead of x in e (+) x")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("nakano", help="derive the hyperoperation of a semilattice")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_nakano)

    p = sub.add_parser("extract", help="extract the join table of an L-mosaic")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("roundtrip",
                       help="run both constructions and compare to the input")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("enumerate", help="list structures up to isomorphism")
    p.add_argument("kind", choices=("bjoin", "lmosaic"))
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out-dir", help="write one file per structure")
    p.add_argument("--general-rho", action="store_true",
                   help="search every involutive reversibility map")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-family",
                       help="cross-check every structure of one size")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--report-dir",
                   help="write a results table and diagram galleries")
    p.set_defaults(func=_cmd_verify_family)

    p = sub.add_parser("ablate",
                       help="find structures failing exactly one axiom")
    p.add_argument("n", type=int)
    p.add_argument("axiom")
    p.add_argument("--all", action="store_true",
                   help="every qualifying structure up to isomorphism")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ablate)

    p = sub.add_parser("assoc-scan",
                       help="search derived hyperoperations for an "
                            "associativity failure")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_assoc_scan)

    p = sub.add_parser("hasse", help="emit the covering relation as DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--render", help="also render the diagram to an image file")
    p.set_defaults(func=_cmd_hasse)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
