"""
Command-line front end of the homshift square kit.

Subcommands: analyze, realize, probe, cover, lift and export-dot. Each
prints a text report on stdout and, with ``-o``, writes a JSON file with
sorted keys. Exit codes: 0 on success, 2 on invalid input or
configuration, 3 when a budget is exhausted (a partial report is still
written).
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import config_manager
from core.exceptions import BudgetExceededError, ConfigurationError, ValidationError
from core.logging_config import configure_logging
from covers import (
    Cover,
    RewriteBudget,
    check_covering_map,
    check_square_lifting,
    parse_cover,
    square_cover,
    universal_cover_ball,
)
from graphs import Graph, is_bipartite, is_connected, is_mixing, parse_graph, require_connected
from groups import SimplifyEffort, SquareGroupAnalysis, analyze_square_group, classify_fundamental, parse_presentation
from homshift import LINEAR, LOGARITHMIC, Obstruction, gluing_rate_probe, lift_pattern, parse_pattern
from realization import (
    RealizationConfig,
    add_self_loop,
    realize,
    reduce_presentation_input,
    self_loop_presentation,
    verify_realization,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


class PartialReport(Exception):
    """A budget ran out after part of a report was assembled."""

    def __init__(self, error: BudgetExceededError, partial: Dict[str, Any]):
        super().__init__(str(error))
        self.error = error
        self.partial = partial


@dataclass
class AnalysisReport:
    """Summary of the invariants of one graph."""

    connected: bool
    bipartite: bool
    fundamental: Dict[str, int]
    analysis: SquareGroupAnalysis
    cover: str
    predicted: str
    mixing: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'connected': self.connected,
            'bipartite': self.bipartite,
            'fundamental': dict(self.fundamental),
            'square_group': self.analysis.to_dict(),
            'square_cover': self.cover,
            'predicted_gluing': self.predicted,
            'phased_only': self.bipartite,
            'mixing': self.mixing,
        }

    def to_text(self) -> str:
        a = self.analysis
        lines = [
            f"vertices: {len(a.graph.vertices)}  edges: {a.graph.edge_count}",
            f"connected: {self.connected}  bipartite: {self.bipartite}  mixing: {self.mixing}",
            f"fundamental group: F_{self.fundamental['k']} * (Z/2)^{self.fundamental['n']}",
            f"square group: {a.simplified}",
            f"enumeration: {a.outcome}",
            f"abelianization: {a.abelian}",
            f"certified infinite: {a.infinite_certificate or 'no'}",
            f"square cover: {self.cover}",
            f"predicted gluing: {self.predicted}" + (" (phased only)" if self.bipartite else ""),
        ]
        return "\n".join(lines) + "\n"


def build_analysis_report(g: Graph, analysis: SquareGroupAnalysis) -> AnalysisReport:
    k, n = classify_fundamental(g)
    if analysis.is_finite:
        cover = f"finite, {analysis.outcome.order * len(g.vertices)} vertices"
        predicted = LOGARITHMIC
    else:
        cover = "not decided by enumeration; truncated balls only"
        predicted = LINEAR if analysis.is_infinite else 'Undetermined'
    bipartite = bool(is_bipartite(g))
    if bipartite:
        logger.warning("Bipartite graph: the gluing prediction is for phased gluing only")
    return AnalysisReport(is_connected(g), bipartite, {'k': k, 'n': n}, analysis, cover, predicted, is_mixing(g))


# ---------------------------------------------------------------------- helpers

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e.strerror}", field='path', value=path) from e


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _dump(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _write(path: Optional[str], text: str) -> None:
    if path:
        Path(path).write_text(text)
        logger.info(f"Wrote {path}")


def _effort() -> SimplifyEffort:
    cfg = config_manager.get_config()
    return SimplifyEffort(depth=cfg.simplify.redundancy_depth, max_states=cfg.simplify.redundancy_states)


def _analysis(g: Graph, args: argparse.Namespace) -> SquareGroupAnalysis:
    require_connected(g)
    if args.tree_root is not None and not g.has_vertex(args.tree_root):
        raise ValidationError(f"unknown tree root {args.tree_root!r}", field='tree_root', value=args.tree_root)
    return analyze_square_group(g, args.tree_root, args.max_cosets, _effort())


# ---------------------------------------------------------------------- commands

def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    analysis = _analysis(g, args)
    report = build_analysis_report(g, analysis)
    sys.stdout.write(report.to_text())
    if args.dump_table:
        if not analysis.is_finite:
            raise BudgetExceededError("no closed coset table to dump", budget=args.max_cosets,
                                      used=analysis.outcome.cosets_used)
        _write(args.dump_table, analysis.outcome.table.to_text())
    _write(args.output, _dump(report.to_dict()))
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    p = reduce_presentation_input(parse_presentation(_read(args.presentation)))
    cfg = RealizationConfig(petal=args.petal, nu=args.nu)
    g = realize(p, cfg)
    report = dict(g.metadata['report'])
    expected = p
    if args.self_loop:
        g = add_self_loop(g)
        report['self_loop'] = g.vertices[0]
        expected = self_loop_presentation(p)
    if args.verify:
        report['verification'] = verify_realization(expected, g, args.max_cosets).to_dict()
    sys.stdout.write(f"realized {p} as a graph with {len(g.vertices)} vertices and {g.edge_count} edges\n")
    if 'verification' in report:
        sys.stdout.write(f"verification: {report['verification']['status']}\n")
    if args.output:
        _write(args.output, _dump(g.to_dict()))
        _write(args.output + '.report.json', _dump(report))
    return EXIT_OK


def cmd_probe(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        raise ValidationError("--n-max must be at least 1", field="n_max", value=args.n_max)
    g = _load_graph(args.graph)
    analysis = _analysis(g, args)
    probe_cfg = config_manager.get_config().probe
    report = gluing_rate_probe(g, args.n_max, args.walk_cap, probe_cfg.exact_cap, probe_cfg.fit_points,
                               probe_cfg.residual_margin, probe_cfg.pair_cap, args.max_cosets, analysis)
    if not report.rows:
        raise PartialReport(BudgetExceededError("no strip graph fits the walk budget", budget=args.walk_cap),
                            report.to_dict())
    sys.stdout.write(report.to_table() + "\n")
    _write(args.output, _dump(report.to_dict()))
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    require_connected(g)
    if args.square:
        cover_cfg = config_manager.get_config().cover
        budget = RewriteBudget(args.rewrite_depth, cover_cfg.rewrite_states, cover_cfg.conjugate_tail)
        c = square_cover(g, max_cosets=args.max_cosets, radius=args.radius,
                         analysis=_analysis(g, args), budget=budget)
        lifting = check_square_lifting(c)
    else:
        root = args.tree_root if args.tree_root is not None else g.vertices[0]
        c = universal_cover_ball(g, root, args.radius)
        lifting = None
    covering = check_covering_map(c)
    sys.stdout.write(f"{c.provenance} cover: {len(c.total.vertices)} vertices over {len(g.vertices)}\n")
    sys.stdout.write(f"covering map: {'ok' if covering else covering.witness}\n")
    if lifting is not None:
        sys.stdout.write(f"squares lift: {'ok' if lifting else lifting.witness}\n")
    _write(args.output, _dump(c.to_dict()))
    return EXIT_OK


def _corner(c: Cover, label: str, requested: Optional[str]) -> str:
    if requested is not None:
        return requested
    if c.basepoint is not None and c.projection.get(c.basepoint) == label:
        return c.basepoint
    fiber = c.fiber(label)
    if not fiber:
        raise ValidationError(f"cover has no vertex over {label!r}", field='corner', value=label)
    return fiber[0]


def cmd_lift(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    pattern = parse_pattern(_read(args.pattern))
    c = parse_cover(_read(args.cover), g)
    corner = _corner(c, pattern.at(0, 0), args.corner)
    try:
        outcome = lift_pattern(c, pattern, corner)
    except BudgetExceededError as e:
        raise PartialReport(e, {'status': 'truncated', 'corner': corner, 'pattern': pattern.to_dict()}) from e
    if isinstance(outcome, Obstruction):
        result = {'status': 'obstructed', 'corner': corner, 'obstruction': outcome.to_dict()}
        sys.stdout.write(f"obstruction at cell {outcome.cell}: {outcome.via_row} != {outcome.via_column}\n")
    else:
        result = {'status': 'lifted', 'corner': corner, 'pattern': outcome.to_dict()}
        sys.stdout.write(f"lifted {pattern.width}x{pattern.height} pattern from {corner}\n")
    _write(args.output, _dump(result))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    text = parse_cover(_read(args.cover), g).to_dot() if args.cover else g.to_dot()
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    cfg = config_manager.get_config()
    parser = argparse.ArgumentParser(prog='hsk', description="Square groups, square covers and homshift probes.")
    parser.add_argument('--config', help="configuration file (default config.toml or $HSK_CONFIG)")
    parser.add_argument('--log-level', help="logging level (overrides [log] level)")
    sub = parser.add_subparsers(dest='command', required=True)

    def budgets(p: argparse.ArgumentParser) -> None:
        p.add_argument('--max-cosets', type=int, default=cfg.enumeration.max_cosets)
        p.add_argument('--tree-root', default=None, help="spanning tree root (first vertex by default)")
        p.add_argument('-o', '--output', default=None, help="JSON output path")

    p = sub.add_parser('analyze', help="fundamental and square group report")
    p.add_argument('graph')
    budgets(p)
    p.add_argument('--dump-table', default=None, metavar='PATH', help="write the closed coset table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('realize', help="compile a presentation into a graph")
    p.add_argument('presentation')
    p.add_argument('--petal', type=int, default=cfg.realization.petal)
    p.add_argument('--nu', choices=('zero', 'alternating'), default=cfg.realization.nu)
    p.add_argument('--self-loop', action='store_true', help="add a self-loop on the first vertex")
    p.add_argument('--verify', action='store_true', help="cross-check the square group of the result")
    p.add_argument('--max-cosets', type=int, default=cfg.enumeration.max_cosets)
    p.add_argument('-o', '--output', default=None, help="graph output path; the report goes to PATH.report.json")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser('probe', help="diameter growth of strip graphs")
    p.add_argument('graph')
    budgets(p)
    p.add_argument('--n-max', type=int, default=cfg.probe.n_max)
    p.add_argument('--walk-cap', type=int, default=cfg.probe.walk_cap)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser('cover', help="universal cover ball or square cover")
    p.add_argument('graph')
    budgets(p)
    p.add_argument('--square', action='store_true', help="build the square cover instead of a universal ball")
    p.add_argument('--radius', type=int, default=cfg.cover.radius)
    p.add_argument('--rewrite-depth', type=int, default=cfg.cover.rewrite_depth)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser('lift', help="lift a pattern through a cover")
    p.add_argument('graph')
    p.add_argument('pattern')
    p.add_argument('--cover', required=True)
    p.add_argument('--corner', default=None, help="total vertex over cell (0, 0)")
    p.add_argument('-o', '--output', default=None)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser('export-dot', help="DOT rendering of a graph or cover")
    p.add_argument('graph')
    p.add_argument('--cover', default=None)
    p.add_argument('-o', '--output', default=None)
    p.set_defaults(func=cmd_export_dot)
    return parser


def _pre_parse(argv: Sequence[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config')
    pre.add_argument('--log-level')
    known, _ = pre.parse_known_args(argv)
    return known


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    early = _pre_parse(argv)
    try:
        cfg = config_manager.refresh_config(early.config)
    except ConfigurationError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    configure_logging(cfg.log, early.log_level)

    args = build_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except (ValidationError, ConfigurationError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    except PartialReport as e:
        sys.stderr.write(f"budget exhausted: {e.error}\n")
        _write(getattr(args, 'output', None), _dump({'status': 'budget-exhausted', 'error': e.error.message,
                                                     'budget': e.error.budget, 'used': e.error.used,
                                                     'partial': e.partial}))
        return EXIT_BUDGET
    except BudgetExceededError as e:
        sys.stderr.write(f"budget exhausted: {e}\n")
        _write(getattr(args, 'output', None), _dump({'status': 'budget-exhausted', 'error': e.message,
                                                     'budget': e.budget, 'used': e.used, 'partial': None}))
        return EXIT_BUDGET


if __name__ == '__main__':
    sys.exit(main())
