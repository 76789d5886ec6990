"""Command-line interface: ``pmt <subcommand> [options]``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage,
configuration or lookup errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog, verify
from .errors import ConfigError, ConstraintError, PmtError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """``re`` or ``re,im``."""
    parts = text.split(",")
    if len(parts) > 2:
        raise ValueError(f"expected re[,im], got {text!r}")
    try:
        return complex(*(float(p) for p in parts))
    except ValueError:
        raise ValueError(f"expected re[,im], got {text!r}") from None


def parse_binding(items: Sequence[str] | None, flag: str) -> dict[str, complex]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"{flag} expects name=re[,im], got {item!r}")
        try:
            out[name.strip()] = parse_complex(value.strip())
        except ValueError as exc:
            raise UsageError(f"{flag} {name}: {exc}") from None
    return out


def default_seed() -> int:
    raw = os.environ.get("PMT_SEED")
    if raw is None:
        return verify.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PMT_SEED must be an integer, got {raw!r}") from None


def _common(p: argparse.ArgumentParser, fmt: str) -> None:
    p.add_argument("--samples", type=int, help="samples per check")
    p.add_argument("--tol", type=float, help="override the check tolerance")
    p.add_argument("--seed", type=int, help="master seed (default: $PMT_SEED or %d)" % verify.DEFAULT_SEED)
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), default=fmt)


def _case_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", required=True, help="catalog id, e.g. T2.13")
    p.add_argument("--param", action="append", metavar="NAME=RE[,IM]",
                   help="parameter binding (repeatable); default: the entry's sweep")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pmt", description="Verify point and potential "
                                     "transformations of nonlinear diffusion equations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list catalog entries with their anchors")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="equivalence check for one case")
    _case_args(p)
    p.add_argument("--at", action="append", metavar="NAME=RE[,IM]",
                   help="replay a single sample point (x, t, u/w, derivatives)")
    _common(p, "text")

    p = sub.add_parser("cycle", help="cyclic-order check")
    _case_args(p)
    p.add_argument("--order", type=int, help="expected order (default: from the catalog)")
    _common(p, "text")

    p = sub.add_parser("map-solution", help="map one closed-form solution onto another")
    _case_args(p)
    p.add_argument("--from", dest="source", default="S2", help="unprimed solution id")
    p.add_argument("--to", dest="target", default="S1", help="primed solution id")
    _common(p, "text")

    p = sub.add_parser("relation", help="check the H/H' relation for scalar cases")
    _case_args(p)
    _common(p, "text")

    p = sub.add_parser("suite", help="run every check of the catalog")
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--dump-config", action="store_true",
                   help="print the effective config and exit")
    p.add_argument("--ids", help="comma-separated catalog ids")
    p.add_argument("--workers", type=int)
    _common(p, "json")
    return parser


def _cases(args) -> list[catalog.VerificationCase]:
    entry = catalog.get_entry(args.case)
    binding = parse_binding(args.param, "--param")
    if binding or not entry.free_params:
        return [catalog.instantiate_case(entry.id, binding)]
    return [catalog.instantiate_case(entry.id, b) for b in entry.sweep]


def _sampling(args, default_count: int) -> verify.SamplingConfig:
    seed = args.seed if args.seed is not None else default_seed()
    return verify.SamplingConfig(seed=seed, count=args.samples or default_count)


def _tol(args, default: float) -> float:
    return default if args.tol is None else args.tol


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _render(report: verify.SuiteReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv().rstrip("\n")
    return report.to_text()


def _finish(args, seed: int, reports: list[verify.CheckReport]) -> int:
    reports = sorted(reports, key=verify.CheckReport.sort_key)
    suite = verify.SuiteReport(seed, reports)
    _emit(_render(suite, args.format), args.out)
    return EXIT_OK if suite.passed else EXIT_FAIL


def cmd_list(args) -> int:
    if args.format == "json":
        _emit(catalog.export_catalog_json(), args.out)
        return EXIT_OK
    lines = []
    for item in catalog.list_cases():
        params = ",".join(item["free_params"]) or "-"
        lines.append(f'{item["id"]:<8} {item["kind"]:<9} params={params:<6} '
                     f'anchor: "{item["anchor"]}"')
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _sampling(args, 100)
    cases = _cases(args)
    if args.at:
        if len(cases) != 1:
            raise UsageError("--at needs a single parameter binding (use --param)")
        result = verify.replay_sample(cases[0], parse_binding(args.at, "--at"))
        tol = _tol(args, verify.TOL_EQUIVALENCE)
        ok = result["max_rel_residual"] <= tol
        _emit(json.dumps({"case_id": cases[0].id, **result, "tolerance": tol, "pass": ok},
                         indent=2), args.out)
        return EXIT_OK if ok else EXIT_FAIL
    tol = _tol(args, verify.TOL_EQUIVALENCE)
    return _finish(args, cfg.seed, [verify.check_equivalence(c, cfg, tol) for c in cases])


def cmd_cycle(args) -> int:
    cfg = _sampling(args, 50)
    tol = _tol(args, verify.TOL_CYCLIC)
    explicit = bool(args.param)
    reports = []
    for case in _cases(args):
        order = args.order
        if order is None:
            claims = [c.order for c in case.entry.cyclic
                      if all(complex(case.params[k]) == complex(v) for k, v in c.binding.items())]
            if not claims:
                if explicit:
                    raise UsageError(f"{case.id}: no cyclic order declared for this binding; "
                                     "pass --order")
                continue
            order = claims[0]
        reports.append(verify.check_cyclic(case, order, cfg, tol))
    if not reports:
        raise UsageError(f"{args.case}: no cyclic order declared; pass --param and --order")
    return _finish(args, cfg.seed, reports)


def cmd_map_solution(args) -> int:
    tol = _tol(args, verify.TOL_SOLUTION)
    seed = args.seed if args.seed is not None else default_seed()
    reports = [verify.check_solution_map(c, args.source, args.target, None, tol)
               for c in _cases(args)]
    return _finish(args, seed, reports)


def cmd_relation(args) -> int:
    cfg = _sampling(args, 100)
    tol = _tol(args, verify.TOL_EQUIVALENCE)
    return _finish(args, cfg.seed, [verify.check_theorem_relation(c, cfg, tol) for c in _cases(args)])


def cmd_suite(args) -> int:
    ids = tuple(i.strip() for i in args.ids.split(",") if i.strip()) if args.ids else None
    seed = args.seed
    if seed is None:
        file_values = {}
        if args.config:
            try:
                with open(args.config) as fh:
                    file_values = verify.parse_config(fh.read(), args.config)
            except OSError as exc:
                raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        seed = file_values.get("seed", default_seed())
    cfg = verify.load_config(args.config, seed=seed, samples=args.samples, tol=args.tol,
                             ids=ids, workers=args.workers)
    if args.dump_config:
        _emit(verify.dump_config(cfg).rstrip("\n"), args.out)
        return EXIT_OK
    report = verify.run_suite(cfg)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "list": cmd_list,
    "verify": cmd_verify,
    "cycle": cmd_cycle,
    "map-solution": cmd_map_solution,
    "relation": cmd_relation,
    "suite": cmd_suite,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ConfigError, ConstraintError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PmtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
