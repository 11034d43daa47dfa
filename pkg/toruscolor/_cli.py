"""
toruscolor command line.

Reports go to standard output, logs to standard error. Exit code 0 means success, 1 a
negative finding (UNSAT, out of class, negative charges, a stuck reduction, a rejected
coloring) and 2 an input or usage error.
"""
import argparse
import logging
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from toruscolor._coloring import (
    DefectiveColoring, ListAssignment, RandomListGenerator, ReductionOutcome, reduce_and_color,
    verify_coloring,
)
from toruscolor._components import Container
from toruscolor._components_config import read_toolkit_config, with_overrides
from toruscolor._discharging import apply_discharging, audit, audit_constants, format_rational
from toruscolor._embedding import EmbeddedGraph, EmbeddingRequired
from toruscolor._formats import (
    CorpusEntry, Palette, Provenance, emit_coloring, emit_corpus_entry, emit_graph6, emit_lists,
    emit_rotation, parse_coloring, parse_corpus_entry, parse_graph6, parse_lists, parse_rotation,
)
from toruscolor._generators import gen_complete, gen_cycle, gen_subdivision, gen_torus_grid
from toruscolor._graph import Graph
from toruscolor._oracle import OracleSolver
from toruscolor._rules import RuleSet
from toruscolor._structures import (
    NOT_FOUND, ClassChecker, configuration_counts, find_all_configurations, incidence_bound_violations,
    verify_observations,
)
from toruscolor._toolkit import default_components
from toruscolor._types import ToruscolorError, TriangleMode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2

RANDOM_LISTS = 'random'


class CommandResult(NamedTuple):
    exit_code: int
    report: str
    error: str = ''


class _Report:
    """Collects report records; `machine` renders each as `record=<tag> key=value ...`."""

    def __init__(self, machine: bool):
        self._machine = machine
        self._lines: List[str] = []

    def add(self, tag: str, text: str, **fields: Any) -> None:
        if self._machine:
            self._lines.append(' '.join(
                [f'record={tag}'] + [f'{key}={_machine_value(value)}' for key, value in fields.items()]
            ))
        else:
            self._lines.append(text)

    def raw(self, text: str) -> None:
        self._lines.extend(text.splitlines())

    def text(self) -> str:
        return ''.join(f'{line}\n' for line in self._lines)


def _machine_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (set, frozenset, tuple, list)):
        return ','.join(str(item) for item in sorted(value)) or '-'
    if value is None:
        return '-'
    return str(value)


class UsageError(Exception):
    pass


class _Session:
    def __init__(self, args: argparse.Namespace, overrides: Dict[str, Dict[str, Any]]):
        self.args = args
        self.report = _Report(args.machine)
        self._overrides = overrides
        self._container: Optional[Container] = None

    def component(self, name: str, check_type: Any = None) -> Any:
        if self._container is None:
            try:
                raw = read_toolkit_config(self.args.config) if self.args.config else {}
                self._container = default_components().start(with_overrides(raw, self._overrides))
            except (TypeError, ValueError) as e:
                raise UsageError(f'bad configuration: {e}') from e

        try:
            return self._container.get(name, check_type)
        except ValueError as e:
            raise UsageError(f'bad {name} configuration: {e}') from e


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandResult(EXIT_INPUT_ERROR if e.code else EXIT_OK, '')

    _setup_logging(args.verbose)
    session = _Session(args, _overrides(args))
    try:
        exit_code = args.handler(session)
    except (ToruscolorError, OSError, UsageError) as e:
        logger.debug('command failed', exc_info=True)
        return CommandResult(EXIT_INPUT_ERROR, session.report.text(), f'toruscolor: error: {e}')

    return CommandResult(exit_code, session.report.text())


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    sys.stdout.write(result.report)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.exit_code


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )


def _overrides(args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    overrides: Dict[str, Dict[str, Any]] = {}

    if getattr(args, 'triangle_mode', None):
        overrides['class_checker'] = {'triangle_mode': args.triangle_mode}

    if getattr(args, 'rules', None):
        overrides['rules'] = {'-impl': 'rules_file', 'path': str(args.rules)}
        if args.case:
            overrides['rules']['case'] = args.case
    elif getattr(args, 'case', None):
        overrides['rules'] = {'-impl': 'rules', 'case': args.case}

    oracle = {}
    if getattr(args, 'budget', None):
        oracle['node_budget'] = args.budget
    if getattr(args, 'workers', None):
        oracle['workers'] = args.workers
    if oracle:
        overrides['oracle'] = oracle

    return overrides


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='toruscolor', description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--config', type=Path, help='TOML file configuring toolkit components')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    parser.add_argument('--machine', action='store_true', help='one key=value record per line')

    commands = parser.add_subparsers(dest='command', required=True)

    faces = commands.add_parser('faces', help='face census and genus of a rotation file')
    faces.add_argument('input', type=Path)
    faces.add_argument('--list', action='store_true', help='print every face boundary')
    faces.set_defaults(handler=_cmd_faces)

    class_ = commands.add_parser('class', help='class membership report')
    class_.add_argument('input', type=Path)
    class_.add_argument('--triangle-mode', choices=[mode.value for mode in TriangleMode])
    class_.set_defaults(handler=_cmd_class)

    configs = commands.add_parser('configs', help='all reducible configurations')
    configs.add_argument('input', type=Path)
    configs.set_defaults(handler=_cmd_configs)

    discharge = commands.add_parser('discharge', help='run and audit a discharging rule set')
    discharge.add_argument('input', type=Path)
    discharge.add_argument('--case', type=int, choices=(1, 2))
    discharge.add_argument('--rules', type=Path, help='rule file instead of a built-in rule set')
    discharge.add_argument('--ledger', action='store_true', help='dump every transfer')
    discharge.add_argument('--constants', action='store_true', help='also audit the vertex arithmetic')
    discharge.set_defaults(handler=_cmd_discharge)

    color = commands.add_parser('color', help='constructive (L,1)-coloring by reduction')
    _add_lists_arguments(color)
    color.add_argument('--write-coloring', type=Path)
    color.set_defaults(handler=_cmd_color)

    oracle = commands.add_parser('oracle', help='exhaustive (L,d)-coloring search')
    _add_lists_arguments(oracle)
    oracle.add_argument('--d', type=int, required=True)
    oracle.add_argument('--budget', type=int, help='search node budget')
    oracle.add_argument('--workers', type=int)
    oracle.add_argument('--write-coloring', type=Path)
    oracle.set_defaults(handler=_cmd_oracle)

    verify = commands.add_parser('verify', help='check a coloring against lists')
    verify.add_argument('input', type=Path)
    verify.add_argument('--lists', type=Path, required=True)
    verify.add_argument('--coloring', type=Path, required=True)
    verify.add_argument('--d', type=int, help='defaults to the coloring file header')
    verify.set_defaults(handler=_cmd_verify)

    gen = commands.add_parser('gen', help='emit a generated corpus entry')
    gen.add_argument('--format', choices=('corpus', 'rotation', 'graph6'), default='corpus')
    gen.add_argument('--output', type=Path)
    generators = gen.add_subparsers(dest='generator', required=True)

    grid = generators.add_parser('grid')
    grid.add_argument('m', type=int)
    grid.add_argument('n', type=int)
    grid.add_argument('--diagonals', action='store_true')
    grid.set_defaults(handler=_cmd_gen, make=lambda args: gen_torus_grid(args.m, args.n, args.diagonals))

    subdiv = generators.add_parser('subdiv')
    subdiv.add_argument('input', type=Path)
    subdiv.add_argument('k', type=int)
    subdiv.set_defaults(handler=_cmd_gen, make=lambda args: gen_subdivision(_load_entry(args.input), args.k))

    complete = generators.add_parser('complete')
    complete.add_argument('n', type=int)
    complete.set_defaults(handler=_cmd_gen, make=lambda args: gen_complete(args.n))

    cycle = generators.add_parser('cycle')
    cycle.add_argument('n', type=int)
    cycle.set_defaults(handler=_cmd_gen, make=lambda args: gen_cycle(args.n))

    return parser


def _add_lists_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('input', type=Path)
    parser.add_argument('--lists', required=True, help=f'lists file or {RANDOM_LISTS!r}')
    parser.add_argument('--seed', type=int, help=f'seed for --lists {RANDOM_LISTS}')
    parser.add_argument('--write-lists', type=Path, help='save the lists used')


def _load_entry(path: Path) -> CorpusEntry:
    """Graph6, rotation or corpus entry file, told apart by content."""

    text = path.read_text(encoding='utf-8')
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if any(line.startswith('# name') for line in lines):
        return parse_corpus_entry(text)

    content = [line for line in lines if not line.startswith('#')]
    if content and content[0].startswith('n '):
        embedded = parse_rotation(text)
        return CorpusEntry(path.stem, embedded.graph, embedded, _file_provenance(path))

    return CorpusEntry(path.stem, parse_graph6('\n'.join(content)), None, _file_provenance(path))


def _file_provenance(path: Path) -> Provenance:
    return Provenance('file', (('path', path.name),))


def _load_embedded(path: Path, command: str) -> EmbeddedGraph:
    entry = _load_entry(path)
    if entry.embedding is None:
        raise EmbeddingRequired(f'{command} (got an abstract graph from {path})')
    return entry.embedding


def _load_lists(session: _Session, graph: Graph) -> Tuple[ListAssignment, Palette]:
    args = session.args
    if args.lists != RANDOM_LISTS:
        lists, palette = parse_lists(Path(args.lists).read_text(encoding='utf-8'), graph.n)
    else:
        if args.seed is None:
            if args.machine:
                raise UsageError('--seed is required for random lists in machine mode')
            logger.warning('random lists without --seed, using seed 0')

        generator = session.component('list_generator', RandomListGenerator)
        lists, palette = generator.generate(graph, args.seed or 0), Palette()

    if args.write_lists is not None:
        args.write_lists.write_text(emit_lists(lists, palette), encoding='utf-8')
    return lists, palette


def _report_coloring(
        session: _Session, coloring: DefectiveColoring, palette: Palette, path: Optional[Path],
) -> None:
    for v, color in sorted(coloring.colors.items()):
        token = palette.token(color)
        session.report.add('color', f'{v}: {token}', vertex=v, color=token)

    if path is not None:
        path.write_text(emit_coloring(coloring, palette), encoding='utf-8')


def _cmd_faces(session: _Session) -> int:
    embedded = _load_embedded(session.args.input, 'faces')
    graph, faces, report = embedded.graph, embedded.faces, session.report

    report.add(
        'embedding',
        f'vertices {graph.n} edges {graph.edge_count} faces {len(faces)}'
        f' components {embedded.components} genus {embedded.genus}',
        vertices=graph.n, edges=graph.edge_count, faces=len(faces),
        components=embedded.components, genus=embedded.genus,
    )

    census = Counter(face.degree for face in faces.faces)
    for degree, count in sorted(census.items()):
        report.add('face-degree', f'{count} faces of degree {degree}', degree=degree, count=count)

    if session.args.list:
        for face in faces.faces:
            corners = ' '.join(str(v) for v in face.corners)
            report.add('face', f'face {face.index} degree {face.degree}: {corners}',
                       face=face.index, degree=face.degree, corners=','.join(map(str, face.corners)))

    return EXIT_OK


def _cmd_class(session: _Session) -> int:
    embedded = _load_embedded(session.args.input, 'class')
    checker = session.component('class_checker', ClassChecker)
    result = checker.check(embedded)

    flags = ' '.join(f'C{length} {"yes" if present else "no"}' for length, present in sorted(result.cycle_flags.items()))
    qualifying = ','.join(str(length) for length in sorted(result.qualifying_l)) or 'none'
    session.report.add(
        'class',
        f'{"in class" if result.in_class else "NOT in class"}: genus {result.genus}'
        f' min degree {result.min_degree}'
        f' adjacent triangles {"yes" if result.adjacent_triangles else "no"} ({checker.triangle_mode.value})'
        f' {flags} qualifying l {qualifying}',
        in_class=result.in_class, genus=result.genus, genus_ok=result.genus_ok,
        min_degree=result.min_degree, adjacent_triangles=result.adjacent_triangles,
        triangle_mode=checker.triangle_mode.value,
        **{f'c{length}': present for length, present in sorted(result.cycle_flags.items())},
        qualifying_l=result.qualifying_l,
    )

    return EXIT_OK if result.in_class else EXIT_NEGATIVE


def _cmd_configs(session: _Session) -> int:
    entry = _load_entry(session.args.input)
    configs = find_all_configurations(entry.graph, entry.embedding)
    report = session.report

    if not configs:
        report.add('configs', repr(NOT_FOUND), found=0)
        return EXIT_NEGATIVE

    counts = configuration_counts(configs)
    report.add(
        'configs',
        f'{len(configs)} configurations: ' + ', '.join(f'{kind.value} {count}' for kind, count in counts.items()),
        found=len(configs), **{kind.value: count for kind, count in counts.items()},
    )
    for config in configs:
        where = '' if config.face_id is None else f' (face {config.face_id})'
        report.add(
            'config', f'{config.kind.value} {" ".join(map(str, config.witness))}{where}',
            kind=config.kind.value, witness=','.join(map(str, config.witness)), face=config.face_id,
        )

    return EXIT_OK


def _cmd_discharge(session: _Session) -> int:
    args = session.args
    embedded = _load_embedded(args.input, 'discharge')
    rules = session.component('rules', RuleSet)

    final, ledger = apply_discharging(embedded, rules)
    result = audit(final, embedded)
    report = session.report

    report.add(
        'audit',
        f'total {format_rational(result.total)} expected {format_rational(result.expected_total)}'
        f' conserved {"yes" if result.conserved else "no"}'
        f' negatives {len(result.negatives)} positives {len(result.positives)}',
        total=result.total, expected=result.expected_total, conserved=result.conserved,
        negatives=len(result.negatives), positives=len(result.positives), case=result.case,
    )
    for rule_id, count in ledger.firing_counts().items():
        report.add('rule', f'rule #{rule_id} fired {count} times', rule=rule_id, fired=count)
    for element, value in result.negatives:
        report.add('negative', f'negative {element} {format_rational(value)}',
                   kind=element.kind.value, index=element.index, charge=value)

    failed_templates = 0
    for check in result.template_checks:
        failed_templates += not check.holds
        report.add(
            'template',
            f'face {check.face} {check.template} bound {format_rational(check.bound)}'
            f' charge {format_rational(check.charge)} {"ok" if check.holds else "FAIL"}',
            face=check.face, template=check.template, bound=check.bound, charge=check.charge,
            holds=check.holds,
        )

    observations_failed = False
    if result.case in (1, 2):
        observations = verify_observations(embedded, result.case)
        observations_failed = not observations.passed
        for item in observations.results:
            report.add(
                'observation',
                f'observation {item.name} {"ok" if item.passed else f"FAIL at {item.witness}"}',
                name=item.name, passed=item.passed, witness=item.witness and str(item.witness),
            )
        if observations.passed:
            violations = incidence_bound_violations(embedded, result.case)
            report.add(
                'incidence', f'incidence bounds violated at {len(violations)} vertices',
                violations=len(violations),
            )

    if args.constants:
        for check in audit_constants():
            report.add('constant', f'{check.name} {format_rational(check.value)} {"ok" if check.holds else "FAIL"}',
                       name=check.name.replace(' ', '_'), value=check.value, holds=check.holds)

    if args.ledger:
        for entry in ledger.entries:
            report.add(
                'transfer', f'rule #{entry.rule_id}: {entry.source} -> {entry.target} {format_rational(entry.amount)}',
                rule=entry.rule_id, source=str(entry.source).replace(' ', ':'),
                target=str(entry.target).replace(' ', ':'), amount=entry.amount,
            )

    if not result.conserved or not result.nonnegative or failed_templates or observations_failed:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_color(session: _Session) -> int:
    args = session.args
    entry = _load_entry(args.input)
    lists, palette = _load_lists(session, entry.graph)
    report = session.report

    outcome = reduce_and_color(entry.graph, lists)
    if not isinstance(outcome, ReductionOutcome):
        report.add(
            'stuck',
            f'STUCK after {len(outcome.peeled)} configurations, remainder {" ".join(map(str, outcome.remainder))}',
            peeled=len(outcome.peeled), remainder=outcome.remainder,
        )
        return EXIT_NEGATIVE

    coloring = outcome.coloring
    verdict = verify_coloring(entry.graph, lists, coloring, coloring.impropriety)
    report.add('coloring', f'coloring verified d={coloring.impropriety}' if verdict.ok else 'coloring FAILED verification',
               verified=verdict.ok, d=coloring.impropriety, steps=len(outcome.trace.steps))
    for step in outcome.trace.steps:
        config = step.configuration
        report.add('step', f'step {config.kind.value} {" ".join(map(str, config.witness))}',
                   kind=config.kind.value, witness=','.join(map(str, config.witness)))
    _report_coloring(session, coloring, palette, args.write_coloring)

    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def _cmd_oracle(session: _Session) -> int:
    args = session.args
    entry = _load_entry(args.input)
    lists, palette = _load_lists(session, entry.graph)
    solver = session.component('oracle', OracleSolver)

    result = solver.solve(entry.graph, lists, args.d)
    if not isinstance(result, DefectiveColoring):
        session.report.add('oracle', f'UNSAT ({result.nodes} nodes)', sat=False, nodes=result.nodes, d=args.d)
        return EXIT_NEGATIVE

    session.report.add('oracle', 'SAT', sat=True, d=args.d)
    _report_coloring(session, result, palette, args.write_coloring)
    return EXIT_OK


def _cmd_verify(session: _Session) -> int:
    args = session.args
    entry = _load_entry(args.input)
    lists, palette = parse_lists(args.lists.read_text(encoding='utf-8'), entry.graph.n)
    coloring = parse_coloring(args.coloring.read_text(encoding='utf-8'), entry.graph.n, palette)
    d = coloring.impropriety if args.d is None else args.d

    verdict = verify_coloring(entry.graph, lists, coloring, d)
    session.report.add('verdict', 'OK' if verdict.ok else f'FAIL ({len(verdict.violations)} violations)',
                       ok=verdict.ok, d=d, violations=len(verdict.violations))
    for violation in verdict.violations:
        detail = palette.token(violation.detail) if violation.kind.value == 'off-list' else str(violation.detail)
        session.report.add(
            'violation', f'vertex {violation.vertex} {violation.kind.value} {detail}',
            vertex=violation.vertex, kind=violation.kind.value, detail=detail,
        )

    return EXIT_OK if verdict.ok else EXIT_NEGATIVE


def _cmd_gen(session: _Session) -> int:
    args = session.args
    entry: CorpusEntry = args.make(args)

    if args.format == 'graph6':
        text = emit_graph6(entry.graph)
    elif args.format == 'rotation':
        if entry.embedding is None:
            raise EmbeddingRequired('rotation output')
        text = emit_rotation(entry.embedding)
    else:
        text = emit_corpus_entry(entry)

    if args.output is not None:
        args.output.write_text(text, encoding='utf-8')
    else:
        session.report.raw(text)

    return EXIT_OK

