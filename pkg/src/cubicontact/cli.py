"""Command line interface.

Commands:

  check FILE              assumption and dimension summary of a cubic
  verify FILE [--which]   run verification suites with a seeded config
  extract --type G2       extract the cubic of a simple Lie algebra
  catalog list|emit NAME  catalog of Jordan norm cubics

Exit codes follow the contract: 0 success, 1 failed check or rejected
input (e.g. assumption violation, type A extraction), 2 malformed input.
All file I/O uses the JSON tensor format; reports are byte-deterministic
for a fixed configuration.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from .catalog import catalog_get, catalog_list, compare_to_extraction, signature
from .cubic import (
    SymCubic,
    TensorFormatError,
    assumption_holds,
    b_rank,
    cubic_hash,
    dumps_tensor,
    loads_tensor,
)
from .extraction import (
    ExtractionError,
    algebra_for,
    extraction,
    gradings_report,
    ternary_dimension_check,
    verify_embedding,
)
from .reports import RunConfig, canonical_json, jsonable
from .rootsystems import RootSystemError, TypeARejection
from .verify import SUITES, run_verification

OUT_ENV = "CUBICONTACT_OUT"


def _out_dir(args) -> Path:
    out = args.out or os.environ.get(OUT_ENV) or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _load_cubic(path: str) -> SymCubic:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads_tensor(fh.read())
    except FileNotFoundError:
        raise TensorFormatError(f"no such file: {path}")


def _emit(args, name: str, text: str) -> None:
    if args.out or os.environ.get(OUT_ENV):
        target = _out_dir(args) / name
        target.write_text(text + "\n", encoding="utf-8")
        print(f"wrote {target}")
    else:
        print(text)


def cmd_check(args) -> int:
    try:
        T = _load_cubic(args.cubic)
    except TensorFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rank = b_rank(T)
    ok = rank == T.dim
    record = {
        "cubic_hash": cubic_hash(T),
        "p": T.dim,
        "b_rank": rank,
        "assumption_ok": ok,
        "dim_xc": 2 * T.dim + 3,
    }
    print(canonical_json(record))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    try:
        T = _load_cubic(args.cubic)
    except TensorFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    which = list(SUITES) if args.which == "all" else [args.which]
    cfg = RunConfig(
        seed=args.seed,
        samples=args.samples,
        primes=tuple(args.primes),
        probe_budget=args.budget,
        long_run=args.long_run,
    )
    report = run_verification(T, which, cfg)
    _emit(args, f"verify-{cubic_hash(T)[:12]}.{args.format}", report.render(args.format))
    if report.all_pass:
        return 0
    # Serialize the first counterexample for failed checks.
    for check in report.checks:
        if check["status"] != "pass":
            print(
                f"check {check['name']}: {check['status']}",
                file=sys.stderr,
            )
            break
    return 1


_TYPE_RE = re.compile(r"^([A-Ga-g])\s*([0-9]+)$")


def _parse_type(text: str):
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise RootSystemError(f"cannot parse Lie type {text!r}")
    return m.group(1).upper(), int(m.group(2))


def cmd_extract(args) -> int:
    try:
        lie_type, rank = _parse_type(args.type)
        alg = algebra_for(lie_type, rank)
        data = extraction(alg)
    except TypeARejection as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    except (RootSystemError, ExtractionError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    name = f"{lie_type}{rank}"
    _emit(args, f"extracted-{name}.json", dumps_tensor(data.tensor))
    report = {
        "gradings": gradings_report(alg),
        "ternary": ternary_dimension_check(alg),
    }
    if args.embedding:
        report["embedding"] = verify_embedding(alg).to_json()
    if args.compare:
        entry = catalog_get(args.compare)
        report["comparison"] = compare_to_extraction(entry, alg)
    _emit(args, f"extract-report-{name}.json", canonical_json(report))
    if args.compare and not report["comparison"]["consistent"]:
        return 1
    if args.embedding and not report["embedding"]["ok"]:
        return 1
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog_list():
            print(f"{entry.name}\tp={entry.p}\t{entry.description}")
        return 0
    if args.action == "emit":
        if not args.name:
            print("error: catalog emit needs a name", file=sys.stderr)
            return 2
        try:
            entry = catalog_get(args.name)
        except KeyError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(args, f"catalog-{entry.name}.json", dumps_tensor(entry.tensor()))
        return 0
    if args.action == "signature":
        if not args.name:
            print("error: catalog signature needs a name", file=sys.stderr)
            return 2
        entry = catalog_get(args.name)
        print(canonical_json(jsonable(signature(entry.tensor()))))
        return 0
    print(f"error: unknown catalog action {args.action!r}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicontact",
        description="exact verification of the nilpotent contact geometry of a cubic form",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="output directory (or $CUBICONTACT_OUT)")
        p.add_argument("--format", choices=("json", "md"), default="json")

    p_check = sub.add_parser("check", help="assumption and dimension summary")
    p_check.add_argument("cubic")
    p_check.set_defaults(func=cmd_check)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("cubic")
    p_verify.add_argument(
        "--which",
        choices=("all",) + tuple(SUITES),
        default="all",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument(
        "--primes", type=int, nargs="+", default=[5, 7, 11, 13]
    )
    p_verify.add_argument("--budget", type=int, default=10 ** 6)
    p_verify.add_argument("--long-run", action="store_true")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_extract = sub.add_parser("extract", help="extract the cubic of a simple Lie algebra")
    p_extract.add_argument("--type", required=True, help="e.g. G2, F4, E8")
    p_extract.add_argument("--compare", default=None, help="catalog entry to compare against")
    p_extract.add_argument(
        "--embedding", action="store_true", help="also run the embedding verification"
    )
    add_common(p_extract)
    p_extract.set_defaults(func=cmd_extract)

    p_cat = sub.add_parser("catalog", help="catalog of Jordan norm cubics")
    p_cat.add_argument("action", choices=("list", "emit", "signature"))
    p_cat.add_argument("name", nargs="?")
    add_common(p_cat)
    p_cat.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
