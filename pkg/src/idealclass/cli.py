"""Command line front end: classify, zideal, enumerate, verify, search.

Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 theorem failure, 2 usage or parse error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import classify
from .config import DEFAULT_CAPS, Caps, parse_caps
from .errors import CapExceededError, IdealclassError, OutOfScopeError
from .ideals import enumerate_ideals, format_ideal, parse_ideal
from .rings import build_ring, parse_ring
from .theorems import (
    OUT_OF_SCOPE,
    REGISTRY,
    search_ideals,
    verify_all,
    verify_theorem,
)
from .zideals import FactoredInteger, classify_z

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_CONFIG_KEYS = ("format", "workers", "caps", "corpus")


def _load_config(path: str) -> dict:
    settings: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise IdealclassError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise IdealclassError(
                    f"{path}:{lineno}: unknown key {key!r}; valid keys: "
                    + ", ".join(_CONFIG_KEYS)
                )
            settings[key] = value.strip()
    return settings


def _settings(args) -> tuple[str, Caps, int, str | None]:
    """Resolve format/caps/workers/corpus from defaults, config file, then flags."""
    cfg = _load_config(args.config) if args.config else {}
    fmt = args.format or cfg.get("format") or "table"
    if fmt not in ("table", "json"):
        raise IdealclassError(f"unknown format {fmt!r}; expected table or json")
    caps = DEFAULT_CAPS
    if "caps" in cfg:
        caps = parse_caps(cfg["caps"], caps)
    if args.caps:
        caps = parse_caps(args.caps, caps)
    if args.workers is not None:
        workers = args.workers
    elif "workers" in cfg:
        workers = int(cfg["workers"])
    else:
        workers = 1
    if workers < 1:
        raise IdealclassError("workers must be at least 1")
    corpus = getattr(args, "corpus", None) or cfg.get("corpus")
    return fmt, caps, workers, corpus


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _opt(value) -> str:
    return "-" if value is None else str(value)


def _report_rows(report) -> list[tuple[str, str]]:
    f = report.flags
    return [
        ("proper", _yes(f["proper"])),
        ("prime", _yes(f["prime"])),
        ("maximal", _yes(f["maximal"])),
        ("primary", _yes(f["primary"])),
        ("uniformly-primary", _yes(f["uniformlyPrimary"])),
        ("ord", _opt(report.ord)),
        ("2-absorbing", _yes(f["twoAbsorbing"])),
        ("2AP", _yes(f["twoAbsorbingPrimary"])),
        ("NS2AP", _yes(f["noetherStrongly2AP"])),
        ("u2AP", _yes(f["uniformlyTwoAbsorbingPrimary"])),
        ("special", _yes(f["special"])),
        ("2-ord", _opt(report.two_ord)),
        ("2-e", _opt(report.two_exp)),
        ("radical-nilpotency", str(report.rad_nilpotency)),
        ("radical-shape", report.radical_shape),
        ("minimal-primes", " ".join(
            "[" + ",".join(str(int(g)) for g in gens) + "]"
            for gens in report.minimal_primes) or "-"),
        ("irreducible", _yes(f["irreducible"])),
        ("divided-prime-radical", _yes(f["dividedPrimeRadical"])),
    ]


def _print_rows(rows) -> None:
    for key, value in rows:
        sys.stdout.write(f"{key}: {value}\n")


def cmd_classify(args, fmt: str, caps: Caps) -> int:
    ring = build_ring(parse_ring(args.ring))
    ideal = parse_ideal(ring, args.ideal)
    report = classify(ideal, caps=caps)
    if fmt == "json":
        _emit_json(report.to_json_dict())
    else:
        rows = [("ring", ring.key), ("ideal", format_ideal(ideal))]
        _print_rows(rows + _report_rows(report))
    return EXIT_OK


def cmd_zideal(args, fmt: str, caps: Caps) -> int:
    n = FactoredInteger.parse(args.n)
    result = classify_z(n, caps=caps)
    if fmt == "json":
        _emit_json(result.to_json_dict())
        return EXIT_OK
    rows = [("n", str(result.n)), ("ideal", f"({result.n.value})" if not result.n.zero else "(0)")]
    rows += _report_rows(result.report)
    if result.bridge == "verified":
        agreement = f"verified against the zero ideal of zn:{result.modulus}"
    elif result.bridge == "analytic":
        agreement = "analytic (no finite quotient to compare)"
    else:
        agreement = "skipped (modulus above the cubic cap; closed forms only)"
    rows.append(("agreement", agreement))
    _print_rows(rows)
    return EXIT_OK


_ENUM_COLUMNS = ("ideal", "prime", "primary", "2abs", "2AP", "u2AP", "special",
                 "ord", "2-ord", "2-e")


def cmd_enumerate(args, fmt: str, caps: Caps) -> int:
    ring = build_ring(parse_ring(args.ring))
    lattice = enumerate_ideals(ring, caps)
    proper = lattice.proper()
    reports = [classify(q, lattice=lattice, caps=caps) for q in proper]
    if fmt == "json":
        _emit_json([r.to_json_dict() for r in reports])
        return EXIT_OK
    rows = [_ENUM_COLUMNS]
    for q, rep in zip(proper, reports):
        f = rep.flags
        rows.append((
            format_ideal(q), _yes(f["prime"]), _yes(f["primary"]),
            _yes(f["twoAbsorbing"]), _yes(f["twoAbsorbingPrimary"]),
            _yes(f["uniformlyTwoAbsorbingPrimary"]), _yes(f["special"]),
            _opt(rep.ord), _opt(rep.two_ord), _opt(rep.two_exp),
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(_ENUM_COLUMNS))]
    for row in rows:
        sys.stdout.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    sys.stderr.write(f"{ring.key}: {len(reports)} proper ideals\n")
    return EXIT_OK


def _resolve_corpus(value: str | None) -> str | None:
    if value is None or value == "default":
        return None
    if value.startswith("@"):
        return _read_corpus_file(value[1:])
    if ":" not in value and os.path.isfile(value):
        return _read_corpus_file(value)
    return value


def _read_corpus_file(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        parts = [line.strip().rstrip(",") for line in fh]
    specs = [p for p in parts if p and not p.startswith("#")]
    if not specs:
        raise IdealclassError(f"corpus file {path} holds no descriptors")
    return ",".join(specs)


def cmd_verify(args, fmt: str, caps: Caps, workers: int, corpus: str | None) -> int:
    if args.list:
        for tid in REGISTRY:
            sys.stdout.write(tid + "\n")
        sys.stderr.write("out of scope: " + ", ".join(OUT_OF_SCOPE) + "\n")
        return EXIT_OK
    if not args.all and not args.theorem:
        raise IdealclassError("verify needs --all, --theorem ID, or --list")
    corpus = _resolve_corpus(corpus)
    if args.theorem:
        results = [verify_theorem(args.theorem, corpus=corpus, caps=caps,
                                  workers=workers, use_mutant=args.mutant)]
    else:
        results = verify_all(corpus=corpus, caps=caps, workers=workers,
                             use_mutant=args.mutant)
    if fmt == "json":
        _emit_json([r.to_json_dict() for r in results])
    else:
        for r in results:
            tag = " [mutant]" if r.mutant else ""
            sys.stdout.write(
                f"{r.theorem}{tag}: {r.verdict}  instances={r.instances}  "
                f"counterexamples={len(r.counterexamples)}  skipped={len(r.skipped)}\n"
            )
    failures = sum(1 for r in results if r.verdict != "passed")
    sys.stderr.write(f"{len(results)} theorems, {failures} failures\n")
    for r in results:
        for c in r.counterexamples[:3]:
            sys.stderr.write(f"  {r.theorem}: {json.dumps(c)}\n")
    return EXIT_FAILED if failures else EXIT_OK


def cmd_search(args, fmt: str, caps: Caps, workers: int, corpus: str | None) -> int:
    corpus = _resolve_corpus(corpus) or "zn:2..60"
    matches = search_ideals(args.where, corpus, caps=caps, limit=args.limit,
                            workers=workers)
    if fmt == "json":
        _emit_json(matches)
    else:
        for m in matches:
            gens = ",".join(str(g) for g in m["report"]["ideal"]["gens"])
            sys.stdout.write(f"{m['ring']}  [{gens}]\n")
    sys.stderr.write(f"{len(matches)} matches\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=None,
                        help="output format (default table)")
    common.add_argument("--caps", default=None,
                        help="size caps, e.g. cubic=1024,enumeration=8192")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for verify/search (default 1)")
    common.add_argument("--config", default=None,
                        help="flat key=value config file; flags override it")

    parser = argparse.ArgumentParser(
        prog="idealclass",
        description="Classify ideals of finite commutative rings and of Z, and "
                    "machine-check the registered theorems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify one ideal of a finite ring")
    p.add_argument("--ring", required=True, help="ring descriptor, e.g. zn:12")
    p.add_argument("--ideal", required=True,
                   help="ideal as [g1,g2,...] codes or (d) principal shorthand")

    p = sub.add_parser("zideal", parents=[common],
                       help="classify nZ inside Z symbolically, with oracle bridge")
    p.add_argument("n", help="n >= 0 as decimal or factored form like 2^2*3")

    p = sub.add_parser("enumerate", parents=[common],
                       help="classify every proper ideal of a finite ring")
    p.add_argument("--ring", required=True, help="ring descriptor, e.g. zn:12")

    p = sub.add_parser("verify", parents=[common],
                       help="run registered theorem checkers over corpora")
    p.add_argument("--all", action="store_true", help="check every registered theorem")
    p.add_argument("--theorem", default=None, help="check one theorem id")
    p.add_argument("--list", action="store_true", help="list registered theorem ids")
    p.add_argument("--corpus", default=None,
                   help="corpus spec, @file, or 'default' for per-theorem corpora")
    p.add_argument("--mutant", action="store_true",
                   help="run the registered broken variant (self-test; must fail)")

    p = sub.add_parser("search", parents=[common],
                       help="list classified ideals matching a predicate")
    p.add_argument("--where", required=True,
                   help="predicate, e.g. 'u2ap && !twoAbsorbing'")
    p.add_argument("--corpus", default=None, help="corpus spec (default zn:2..60)")
    p.add_argument("--limit", type=int, default=None, help="stop after this many matches")

    return parser


_COMMANDS = {
    "classify": lambda a, fmt, caps, workers, corpus: cmd_classify(a, fmt, caps),
    "zideal": lambda a, fmt, caps, workers, corpus: cmd_zideal(a, fmt, caps),
    "enumerate": lambda a, fmt, caps, workers, corpus: cmd_enumerate(a, fmt, caps),
    "verify": cmd_verify,
    "search": cmd_search,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        fmt, caps, workers, corpus = _settings(args)
        return _COMMANDS[args.command](args, fmt, caps, workers, corpus)
    except CapExceededError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_CAP
    except OutOfScopeError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE
    except (IdealclassError, ValueError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
