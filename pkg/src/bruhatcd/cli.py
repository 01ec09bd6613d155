"""
Command-line front end.

    bruhatcd interval --group S4 --u 1234 --v 4231
    bruhatcd scan --group S4 [--sample N --seed K --jobs J --out PATH]
    bruhatcd verify --group S4 [--sample N --seed K --jobs J]

Exit codes: 0 success, 1 internal inconsistency, 2 ``u`` not below ``v``,
3 unparsable input.  All structured output is JSON carrying ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Optional

from . import klcd, qsym, suites
from .brupaths import b_stats
from .coxeter import CoxeterSystem, IncomparableError, ReflectionOrdering
from .klcore import kl_polynomial, r_tilde
from .polyalg import format_composition, format_word

__all__ = ["RunConfig", "main", "interval_document", "scan_records"]

SCHEMA = 1

EXIT_OK, EXIT_INCONSISTENT, EXIT_INCOMPARABLE, EXIT_PARSE = 0, 1, 2, 3


class ParseFailure(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on; ``from_dict`` rejects unknown keys."""

    command: str
    group: str
    u: Optional[str] = None
    v: Optional[str] = None
    ordering: str = "lex"
    sample: Optional[int] = None
    seed: int = 7
    jobs: int = 1
    out: Optional[str] = None
    max_degree: int = 6

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**d)

    def system(self) -> CoxeterSystem:
        return CoxeterSystem.parse_name(self.group)

    def reflection_ordering(self) -> ReflectionOrdering:
        return ReflectionOrdering(self.ordering)


# --- documents ---------------------------------------------------------------


def interval_document(W: CoxeterSystem, u, v, ordering: ReflectionOrdering) -> dict:
    l = W.length(v) - W.length(u)
    stats = b_stats(W, u, v, ordering)
    psi = qsym.complete_cd_index(W, u, v, ordering)
    doc = {
        "schema": SCHEMA,
        "group": W.name,
        "u": W.format(u),
        "v": W.format(v),
        "length": l,
        "ordering": ordering.mode,
        "R_tilde": str(r_tilde(W, u, v)),
        "P": str(kl_polynomial(W, u, v)),
        "paths": stats.total(),
        "b": {format_composition(a): c for a, c in sorted(stats.by_composition.items(), key=_comp_key)},
        "cd": {format_word(w): c for w, c in psi.poly.items()},
    }
    if u != v:
        doc["a_vector"] = list(klcd.a_vector(psi.poly, l))
        doc["g_dual"] = str(klcd.g_dual(psi.poly, l))
        checks = suites.IDENTITY + suites.FLIPS + suites.CONJECTURES
        doc["checks"] = {c.key: ok for c, (ok, _) in zip(checks, suites.interval_checks(W, u, v, checks))}
    return doc


def _comp_key(item):
    alpha = item[0]
    return (sum(alpha), len(alpha), alpha)


def _record(args):
    degrees, u, v = args
    return klcd.conjecture_record(CoxeterSystem(degrees), u, v)


def scan_records(W: CoxeterSystem, pairs, jobs: int = 1) -> list[dict]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_record, [(W.degrees, u, v) for u, v in pairs], chunksize=16))
    return [klcd.conjecture_record(W, u, v) for u, v in pairs]


# --- commands ----------------------------------------------------------------


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_size(cfg: RunConfig, W: CoxeterSystem) -> None:
    if max(W.degrees) > cfg.max_degree:
        raise ParseFailure(f"{W.name} exceeds the configured bound S{cfg.max_degree}")


def cmd_interval(cfg: RunConfig) -> int:
    W = cfg.system()
    try:
        u, v = W.parse(cfg.u or ""), W.parse(cfg.v or "")
    except ValueError as e:
        raise ParseFailure(str(e)) from e
    if not W.bruhat_leq(u, v):
        raise IncomparableError(f"{cfg.u} is not below {cfg.v} in {W.name}")
    doc = interval_document(W, u, v, cfg.reflection_ordering())
    _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    return EXIT_OK if all(doc.get("checks", {}).values()) else EXIT_INCONSISTENT


def cmd_scan(cfg: RunConfig) -> int:
    W = cfg.system()
    _check_size(cfg, W)
    pairs = suites.corpus(W, cfg.sample, cfg.seed)
    records = scan_records(W, pairs, cfg.jobs)
    summary = {"schema": SCHEMA, "group": W.name, "sample": cfg.sample, "seed": cfg.seed}
    summary.update(klcd.conjecture_scan(records))
    lines = [json.dumps(r) for r in records] + [json.dumps(summary)]
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    W = cfg.system()
    _check_size(cfg, W)
    pairs = suites.corpus(W, cfg.sample, cfg.seed)
    reports = []
    for suite in (suites.IDENTITY, suites.FLIPS, suites.CONJECTURES):
        reports += suites.run_checks(W, pairs, suite, cfg.jobs)
    if len(W.degrees) > 1:
        reports += suites.product_suite(W)
    out = [r.line() for r in reports]
    failed = [r for r in reports if not r.ok]
    if failed:
        first = failed[0]
        out.append(f"first failing suite: [{first.key}] {first.title}")
        out.extend("  " + f for f in first.failures[:5])
    _emit("\n".join(out) + "\n", cfg.out)
    return EXIT_INCONSISTENT if failed else EXIT_OK


COMMANDS = {"interval": cmd_interval, "scan": cmd_scan, "verify": cmd_verify}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bruhatcd", description="Complete cd-index and KL polynomials of Bruhat intervals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--group", required=True, help='e.g. "S4" or "S2xS3"')
        sp.add_argument("--ordering", choices=("lex", "revlex"), default="lex")
        sp.add_argument("--out", default=None, help="write output here instead of stdout")
        if name == "interval":
            sp.add_argument("--u", required=True)
            sp.add_argument("--v", required=True)
        else:
            sp.add_argument("--sample", type=int, default=None, help="seeded sample of N pairs")
            sp.add_argument("--seed", type=int, default=7)
            sp.add_argument("--jobs", type=int, default=1)
            sp.add_argument("--max-degree", type=int, default=6, dest="max_degree")
    return p


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    try:
        cfg = RunConfig.from_dict(args)
        cfg.system()
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE
    try:
        return COMMANDS[cfg.command](cfg)
    except IncomparableError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INCOMPARABLE
    except ParseFailure as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PARSE
    except ArithmeticError as e:
        sys.stderr.write(f"inconsistency: {e}\n")
        return EXIT_INCONSISTENT

if __name__ == "__main__":
    raise SystemExit(main())
