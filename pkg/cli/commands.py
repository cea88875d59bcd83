"""
Command-line surface: construct, verify, search and report.

Every handler prints its result on stdout and returns the process exit code:
0 success or informative outcome, 1 usage error, 2 parse error,
3 verification failure, 4 nonexistent by theorem.
"""

from __future__ import annotations

import argparse
import logging
import sys
from itertools import islice
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import BaseModel, Field, ValidationError

from cli.cache import ResultCache
from cli.report import TABLES, ReportManager, e_grid, existence_table, s_grid, witness_table
from config import Config
from constructions.catalog import CATALOG, build
from constructions.shattering import ShatteringSet
from constructions.small import advertised_r
from constructions.twin_free import NonexistentError
from constructions.witnesses import witness_excess
from graphs.graph import Graph, twin_partition
from graphs.graph6 import ParseError, decode_graph, encode_graph6, encode_sparse6
from graphs.models import SaturationReport
from graphs.saturation import is_saturated, is_tsat_witness, saturation_report
from search.extremal import SEARCH_PARAMS, run_search
from search.models import EnumerationBudget, ExtremalRecord, RecordKind, RecordStatus, record_key
from search.stability import classify_33_systems, classify_conical_systems
from systems.checks import check_system
from systems.models import SystemInstance
from systems.serialization import dumps_system, loads_system

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3
EXIT_NONEXISTENT = 4


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with EXIT_USAGE."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_BUDGET_FLAGS = {
    "budget_vertices": "max_vertices",
    "budget_free_vertices": "max_free_vertices",
    "budget_edges": "max_edges",
    "budget_candidates": "max_candidates",
    "budget_clique_nodes": "max_clique_nodes",
    "budget_time": "wall_time_cap",
}


def _add_params(p: argparse.ArgumentParser, letters: str) -> None:
    for name in letters:
        p.add_argument(f"--{name}", type=int, default=None)


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-vertices", type=int, help="Largest graph order enumerated")
    p.add_argument("--budget-free-vertices", type=int, help="Largest order for triangle-free enumeration")
    p.add_argument("--budget-edges", type=int, help="Largest host edge count for e_rt searches")
    p.add_argument("--budget-candidates", type=int)
    p.add_argument("--budget-clique-nodes", type=int)
    p.add_argument("--budget-time", type=float, help="Seconds per search")
    p.add_argument("--workers", type=int, default=None, help="Processes for enumeration")
    p.add_argument("--no-cache", action="store_true", help="Recompute even when a cached record exists")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="satlab", description="Twin-free K_r-saturated graphs and (r,t)-systems")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("construct", help="Build a catalog construction")
    p.add_argument("family", choices=sorted(CATALOG))
    _add_params(p, "nmsrtlk")
    p.add_argument("--name", help="Sporadic graph name for `small`")
    p.add_argument("--verify", action="store_true", help="Check the construction before printing it")
    p.add_argument("--format", choices=["graph6", "sparse6"], default="graph6")

    p = sub.add_parser("verify", help="Check a graph6/sparse6 graph or a system JSON document")
    p.add_argument("input", help="Encoded object, a file containing it, or - for stdin")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--twin-free", action="store_true", help="Require a twin-free saturated graph")
    p.add_argument("--maximal", action="store_true", help="Require the system to be maximal")

    p = sub.add_parser("search", help="Exhaustive extremal search")
    p.add_argument("kind", choices=[k.value for k in RecordKind])
    _add_params(p, "nmsrtk")
    _add_budget(p)

    p = sub.add_parser("report", help="Compare searched values with formulas and constructions")
    p.add_argument("table", choices=TABLES)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--min", type=int, default=None, dest="low")
    p.add_argument("--max", type=int, default=None, dest="high")
    p.add_argument("--save", action="store_true", help="Also write the table under the reports directory")
    p.add_argument("--previous", type=int, default=None, metavar="N", help="Print the last N saved reports instead")
    p.add_argument("--list", action="store_true", help="List saved reports for the table")
    _add_budget(p)
    return parser


def budget_from(args: argparse.Namespace, cfg: Config) -> EnumerationBudget:
    """Config budget with the --budget-* flags applied on top."""
    values = EnumerationBudget.from_config(cfg).model_dump()
    for flag, field_name in _BUDGET_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            values[field_name] = value
    return EnumerationBudget(**values)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _construction_problem(family: str, params: dict[str, Any], obj: Any) -> Optional[str]:
    if isinstance(obj, SystemInstance):
        report = check_system(obj)
        failure = report.first_failure()
        return None if failure is None else f"{failure.name}: {failure.counterexample}"
    if isinstance(obj, ShatteringSet):
        return None
    if family == "ehm":
        ok = is_saturated(obj, params["r"])
    elif family == "small":
        ok = is_tsat_witness(obj, advertised_r(params["name"]))
    elif family == "twinfree":
        ok = is_tsat_witness(obj, params["r"])
    elif family == "tsat_witness":
        ok = is_tsat_witness(obj, 3)
    else:
        ok = is_tsat_witness(obj, params["r"], params["t"])
    return None if ok else f"{family} output fails its witness predicate"


# witness families whose edge excess over t*n is reported; None means t comes from --t
_EXCESS_T: dict[str, Optional[int]] = {"tsat_witness": 6, "tsat_min_deg_witness": None}


def _render(obj: Any, fmt: str) -> str:
    if isinstance(obj, Graph):
        data = encode_sparse6(obj) if fmt == "sparse6" else encode_graph6(obj)
        return data.decode("ascii")
    if isinstance(obj, SystemInstance):
        return dumps_system(obj)
    return ",".join("".join(map(str, x)) for x in obj.sequences)


def cmd_construct(args: argparse.Namespace, cfg: Config) -> int:
    params = {name: getattr(args, name, None) for name in ("n", "m", "s", "r", "t", "l", "k", "name")}
    try:
        obj = build(args.family, params)
    except NonexistentError as e:
        print(f"nonexistent: {e.case}", file=sys.stderr)
        logger.info("%s", e)
        return EXIT_NONEXISTENT
    except (KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.verify:
        problem = _construction_problem(args.family, params, obj)
        if problem is not None:
            print(f"verification failed: {problem}", file=sys.stderr)
            return EXIT_VERIFY
    if args.family in _EXCESS_T:
        t = _EXCESS_T[args.family] or params["t"]
        excess, constant = witness_excess(obj, t)
        logger.info("%s: n=%d, e=%d, e - %dn = %d, C = %.4f", args.family, obj.n, obj.edge_count, t, excess, constant)
        print(f"excess: e-{t}n={excess} C={constant:.4f}", file=sys.stderr)
    print(_render(obj, args.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

class GraphVerdict(BaseModel):
    n: int
    edges: int
    saturation: SaturationReport
    twin_free: bool
    twin_pairs: list[tuple[int, int]] = Field(default_factory=list, description="First twin pairs, at most 10")
    tsat_witness: Optional[bool] = None
    passed: bool


def _read_input(raw: str) -> str:
    if raw == "-":
        return sys.stdin.read().strip()
    if not raw.lstrip().startswith("{"):
        try:
            path = Path(raw)
            if path.is_file():
                return path.read_text(encoding="utf-8").strip()
        except OSError:
            # long encodings are not valid file names
            pass
    return raw.strip()


def _verify_system(text: str, args: argparse.Namespace) -> int:
    inst = loads_system(text)
    if args.maximal:
        inst = inst.with_changes(maximal=True)
    report = check_system(inst)
    print(report.model_dump_json())
    return EXIT_OK if report.valid else EXIT_VERIFY


def _verify_graph(text: str, args: argparse.Namespace) -> int:
    g = decode_graph(text)
    sat = saturation_report(g, args.r)
    twins = twin_partition(g)
    tsat = None
    if args.twin_free or args.t is not None:
        tsat = is_tsat_witness(g, args.r, args.t)
    verdict = GraphVerdict(
        n=g.n,
        edges=g.edge_count,
        saturation=sat,
        twin_free=twins.is_twin_free,
        twin_pairs=list(islice(twins.twin_pairs(), 10)),
        tsat_witness=tsat,
        passed=sat.is_saturated and tsat is not False,
    )
    print(verdict.model_dump_json())
    return EXIT_OK if verdict.passed else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    text = _read_input(args.input)
    try:
        if text.startswith("{"):
            return _verify_system(text, args)
        return _verify_graph(text, args)
    except ParseError as e:
        print(f"parse error at byte {e.offset}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


# ---------------------------------------------------------------------------
# search and report
# ---------------------------------------------------------------------------

class Searcher:
    """Cache-aware search runner shared by `search` and `report`."""

    def __init__(self, budget: EnumerationBudget, cache: Optional[ResultCache], workers: int, refresh: bool) -> None:
        self.budget = budget
        self.cache = cache
        self.workers = workers
        self.refresh = refresh

    def __call__(self, kind: RecordKind, params: dict[str, int]) -> ExtremalRecord:
        params = {p: params[p] for p in SEARCH_PARAMS[kind] if params.get(p) is not None}
        key = record_key(kind, params, self.budget.fingerprint())
        if self.cache is not None and not self.refresh:
            hit = self.cache.get(key)
            if hit is not None:
                logger.info("cache hit %s", key)
                return hit
        record = run_search(kind, params, self.budget, self.workers)
        if self.cache is not None and record.status != RecordStatus.BUDGET_EXCEEDED:
            self.cache.put(record)
        return record


def _searcher(args: argparse.Namespace, cfg: Config) -> Searcher:
    workers = args.workers if args.workers is not None else cfg.workers
    return Searcher(budget_from(args, cfg), ResultCache(cfg.cache_path), workers, args.no_cache)


def cmd_search(args: argparse.Namespace, cfg: Config) -> int:
    try:
        searcher = _searcher(args, cfg)
        params = {name: getattr(args, name) for name in ("n", "m", "s", "r", "t", "k")}
        record = searcher(RecordKind(args.kind), params)
    except (ValueError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(record.model_dump_json())
    return EXIT_OK


def _render_table(args: argparse.Namespace, searcher: Searcher) -> str:
    r = args.r if args.r is not None else (4 if args.table == "conical" else 3)
    t = args.t if args.t is not None else r
    if args.table == "witness":
        low = args.low if args.low is not None else 2000
        high = args.high if args.high is not None else low
        return witness_table(sorted({low, high})).to_markdown()
    if args.table == "existence":
        return existence_table(r, args.high if args.high is not None else 8, searcher).to_markdown()
    if args.table == "s_rt":
        low = args.low if args.low is not None else 3
        high = args.high if args.high is not None else 7
        return s_grid(r, t, range(low, high + 1), searcher).to_markdown()
    if args.table == "e_rt":
        low = args.low if args.low is not None else 1
        high = args.high if args.high is not None else 3
        return e_grid(r, t, range(low, high + 1), searcher).to_markdown()
    high = args.high if args.high is not None else 7
    if args.table == "stability33":
        return classify_33_systems(high, searcher.budget).to_markdown()
    return classify_conical_systems(r, high, searcher.budget).to_markdown()


def cmd_report(args: argparse.Namespace, cfg: Config) -> int:
    manager = ReportManager(cfg.reports_dir)
    if args.list:
        for name in manager.list_reports(args.table):
            print(name)
        return EXIT_OK
    if args.previous is not None:
        if args.previous < 1:
            print("error: --previous must be positive", file=sys.stderr)
            return EXIT_USAGE
        print("\n".join(manager.read_reports(args.table, args.previous)))
        return EXIT_OK
    try:
        content = _render_table(args, _searcher(args, cfg))
    except (ValueError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(content)
    if args.save:
        path = manager.write_report(args.table, content)
        print(f"saved {path}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "report": cmd_report,
}


def run(argv: Optional[Sequence[str]] = None, cfg: Optional[Config] = None) -> int:
    """Parse argv and dispatch; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return COMMANDS[args.command](args, cfg or Config())
