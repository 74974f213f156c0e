"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
All numbers are printed exactly; JSON output uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from cyclinv.commutative import identity_catalog, minimal_monoid_generators
from cyclinv.config import CapExceeded, Caps
from cyclinv.exact_arith import DomainError, field_from_tag
from cyclinv.free_algebra import parse_ncpoly
from cyclinv.group_actions import cyclic_group
from cyclinv.invariant_core import (
    commutative_molien_series,
    cyclic_hilbert_series,
    free_generators_up_to_degree,
    invariant_monomial_basis,
    noncommutative_molien_series,
)
from cyclinv.s_algebra import (
    SGeneratorSet,
    cyclic_s_generators,
    deficiency_reports,
    identity_sides,
    s_identity_catalog,
    s_membership,
    x_basis_s_generators_d3,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    d: int = 3
    max_degree: int = 4
    field: str = "Q"
    fmt: str = "text"
    cap_ambient: int | None = None
    cap_group_order: int | None = None

    def __post_init__(self):
        if self.d < 2:
            raise UsageError("d must be >= 2")
        if self.max_degree < 1:
            raise UsageError("max-degree must be >= 1")
        if self.fmt not in ("text", "json"):
            raise UsageError("format must be text or json")
        for cap in (self.cap_ambient, self.cap_group_order):
            if cap is not None and cap < 1:
                raise UsageError("caps must be positive")

    @property
    def caps(self) -> Caps:
        return Caps.from_env(ambient=self.cap_ambient, group_order=self.cap_group_order)

    def coefficient_field(self):
        return field_from_tag(self.field, self.d)


def _order(text: str) -> int:
    """Accepts ``3`` or ``d=3``."""
    raw = text[2:] if text.startswith("d=") else text
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("d_pos", nargs="?", type=_order, metavar="d", help="group order (also d=N)")
    common.add_argument("--d", type=_order, help="group order")
    common.add_argument("--max-degree", type=int, default=4)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--field", default="Q", help="Q, Qe, or Q(e_d)")
    common.add_argument("--cap-ambient", type=int)
    common.add_argument("--cap-group-order", type=int)

    parser = _Parser(prog="cyclinv", description="Invariants of cyclic groups in free algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series of the invariants")
    p.add_argument("--terms", type=int, default=8)
    p.add_argument("--source", choices=("formula", "nc-molien", "comm-molien"), default="formula")
    p = sub.add_parser("basis", parents=[common], help="invariant monomial basis by degree")
    p.add_argument("--degree", type=int)
    p = sub.add_parser("freegens", parents=[common], help="free generators by degree")
    p.add_argument("--degree", type=int)
    sub.add_parser("commgens", parents=[common], help="generators of the commutative invariants")
    sub.add_parser("verify-comm", parents=[common], help="check the commutative identity catalog")
    p = sub.add_parser("s-generators", parents=[common], help="S-algebra generating set")
    p.add_argument("--basis", choices=("y", "x"), default="y")
    p = sub.add_parser("s-member", parents=[common], help="S-subalgebra membership with certificate")
    p.add_argument("--gens", required=True, help="JSON generator file")
    p.add_argument("--target", required=True, help="homogeneous polynomial")
    p = sub.add_parser("s-deficiency", parents=[common], help="new S-generators needed per degree")
    p.add_argument("--basis", choices=("y", "x"), default="y")
    p.add_argument("--gens", help="JSON generator file (overrides --basis)")
    sub.add_parser("verify-s", parents=[common], help="check the S-identity catalog (d=3)")
    p = sub.add_parser("selftest", parents=[common], help="run the reference example catalog")
    p.add_argument("--strict", action="store_true", help="known discrepancies also fail")
    return parser


def _config(args) -> RunConfig:
    if args.d is not None and args.d_pos is not None and args.d != args.d_pos:
        raise UsageError("conflicting values for d")
    d = args.d if args.d is not None else (args.d_pos if args.d_pos is not None else 3)
    return RunConfig(d, args.max_degree, args.field, args.fmt, args.cap_ambient, args.cap_group_order)


def _emit_json(out: TextIO, data) -> None:
    out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _degrees(args, cfg: RunConfig) -> list[int]:
    if args.degree is not None:
        if args.degree < 1:
            raise UsageError("degree must be >= 1")
        return [args.degree]
    return list(range(1, cfg.max_degree + 1))


def cmd_hilbert(args, cfg: RunConfig, out: TextIO) -> int:
    if args.terms < 1:
        raise UsageError("terms must be >= 1")
    if args.source == "formula":
        series = cyclic_hilbert_series(cfg.d)
    else:
        group = cyclic_group(cfg.d, caps=cfg.caps)
        fn = noncommutative_molien_series if args.source == "nc-molien" else commutative_molien_series
        series = fn(group)
    if cfg.fmt == "json":
        _emit_json(out, {"d": cfg.d, "source": args.source, **series.to_json(args.terms)})
    else:
        out.write(f"H(t) = {series}\n")
        out.write("coefficients: " + " ".join(series.field.format(c) for c in series.coefficients(args.terms)) + "\n")
    return EXIT_OK


def _word_tables(cfg: RunConfig, degrees: list[int], table: dict) -> list[dict]:
    return [{"d": cfg.d, "degree": n, "count": len(table[n]), "items": [str(w) for w in table[n]]}
            for n in degrees]


def _print_tables(out: TextIO, rows: list[dict]) -> None:
    for row in rows:
        out.write(f"degree {row['degree']}: {row['count']}\n")
        for item in row["items"]:
            out.write(f"  {item}\n")


def cmd_basis(args, cfg: RunConfig, out: TextIO) -> int:
    degrees = _degrees(args, cfg)
    table = {n: invariant_monomial_basis(cfg.d, n, cfg.caps) for n in degrees}
    rows = _word_tables(cfg, degrees, table)
    _emit_json(out, rows) if cfg.fmt == "json" else _print_tables(out, rows)
    return EXIT_OK


def cmd_freegens(args, cfg: RunConfig, out: TextIO) -> int:
    degrees = _degrees(args, cfg)
    table = free_generators_up_to_degree(cfg.d, max(degrees), cfg.caps)
    rows = _word_tables(cfg, degrees, table)
    _emit_json(out, rows) if cfg.fmt == "json" else _print_tables(out, rows)
    return EXIT_OK


def cmd_commgens(args, cfg: RunConfig, out: TextIO) -> int:
    gens = minimal_monoid_generators(cfg.d)
    if cfg.fmt == "json":
        by_degree: dict[str, list[str]] = {}
        for g in gens:
            by_degree.setdefault(str(g.degree), []).append(str(g))
        _emit_json(out, {"d": cfg.d, "count": len(gens), "generators": [str(g) for g in gens],
                         "by_degree": by_degree})
        return EXIT_OK
    by_degree: dict[int, list[str]] = {}
    for g in gens:
        by_degree.setdefault(g.degree, []).append(str(g))
    for degree, items in by_degree.items():
        out.write(f"deg={degree}: {' '.join(items)}\n")
    out.write(f"{len(gens)} generators\n")
    return EXIT_OK


def _report(out: TextIO, cfg: RunConfig, kind: str, results: list[tuple[str, bool]]) -> int:
    if cfg.fmt == "json":
        _emit_json(out, {"d": cfg.d, "kind": kind, "results": [{"name": n, "ok": ok} for n, ok in results]})
    else:
        for name, ok in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def cmd_verify_comm(args, cfg: RunConfig, out: TextIO) -> int:
    try:
        catalog = identity_catalog(cfg.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report(out, cfg, "commutative", [(i.name, i.holds()) for i in catalog])


def cmd_verify_s(args, cfg: RunConfig, out: TextIO) -> int:
    if cfg.d != 3:
        raise UsageError("the S-identity catalog exists for d=3 only")
    results = []
    for key in s_identity_catalog():
        lhs, rhs = identity_sides(key)
        results.append((key, lhs == rhs))
    return _report(out, cfg, "s-identity", results)


def _generator_set(args, cfg: RunConfig) -> SGeneratorSet:
    if getattr(args, "gens", None):
        try:
            return SGeneratorSet.load(args.gens, cfg.d if args.d is not None or args.d_pos is not None else None)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read generator file: {exc}") from None
    if args.basis == "x":
        if cfg.d != 3:
            raise UsageError("the x-basis generating set is provided for d=3 only")
        return x_basis_s_generators_d3()
    return cyclic_s_generators(cfg.d)


def cmd_s_generators(args, cfg: RunConfig, out: TextIO) -> int:
    gens = _generator_set(args, cfg)
    fld = cfg.coefficient_field()
    if fld != gens.field:
        gens = gens.embed(fld)
    if cfg.fmt == "json":
        _emit_json(out, gens.to_json())
    else:
        for name, g in zip(gens.names, gens.generators):
            out.write(f"{name} = {g}\n" if name != str(g) else f"{g}\n")
    return EXIT_OK


def cmd_s_member(args, cfg: RunConfig, out: TextIO) -> int:
    gens = _generator_set(args, cfg)
    fld = gens.field if args.field == "Q" else field_from_tag(args.field, gens.alphabet_size)
    target = parse_ncpoly(args.target, gens.alphabet_size, fld)
    if target.symbol != gens.symbol:
        raise UsageError(f"target uses {target.symbol}-variables, generators use {gens.symbol}-variables")
    res = s_membership(target, gens, cfg.caps)
    if cfg.fmt == "json":
        _emit_json(out, res.certificate.to_json() if res else {"member": False, "target": str(target)})
    else:
        out.write(f"{res.certificate}\n" if res else "not a member\n")
    return EXIT_OK


def cmd_s_deficiency(args, cfg: RunConfig, out: TextIO) -> int:
    gens = _generator_set(args, cfg)
    reports = deficiency_reports(cfg.d, gens, cfg.max_degree, cfg.caps)
    if cfg.fmt == "json":
        _emit_json(out, {"d": cfg.d, "generators": list(gens.names), "degrees": [r.to_json() for r in reports]})
    else:
        out.write("degree  dim  rank  decomposable  codim  needed\n")
        for r in reports:
            out.write(f"{r.degree:>6}  {r.invariant_dim:>3}  {r.component_rank:>4}  "
                      f"{r.decomposable_rank:>12}  {r.codimension:>5}  {r.generators_needed:>6}\n")
    full = all(r.component_rank == r.invariant_dim for r in reports)
    return EXIT_OK if full or args.gens else EXIT_FAIL


def cmd_selftest(args, cfg: RunConfig, out: TextIO) -> int:
    from cyclinv.selftest import run_checks

    outcomes = run_checks()
    failed = [o for o in outcomes if not o.ok and (args.strict or not o.known_discrepancy)]
    if cfg.fmt == "json":
        _emit_json(out, {"strict": args.strict, "failed": len(failed),
                         "results": [{"name": o.name, "status": o.status, "detail": o.detail} for o in outcomes]})
    else:
        for o in outcomes:
            out.write(f"{o.status:<5} {o.name}\n")
            if not o.ok:
                out.write(f"      {o.detail}\n")
        known = sum(o.status == "KNOWN" for o in outcomes)
        out.write(f"{len(outcomes)} checks, {len(failed)} failed, {known} known discrepancies\n")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "hilbert": cmd_hilbert,
    "basis": cmd_basis,
    "freegens": cmd_freegens,
    "commgens": cmd_commgens,
    "verify-comm": cmd_verify_comm,
    "s-generators": cmd_s_generators,
    "s-member": cmd_s_member,
    "s-deficiency": cmd_s_deficiency,
    "verify-s": cmd_verify_s,
    "selftest": cmd_selftest,
}


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (ValueError, DomainError, SyntaxError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
