import enum
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, List, Literal, NamedTuple, Optional, Tuple

from toruscolor._embedding import EmbeddedGraph
from toruscolor._rules import Comparison, Policy, Rule, RuleSet, condition, face_rule, vertex_rule
from toruscolor._types import Element, ElementKind, ToruscolorError, face, vertex

logger = logging.getLogger(__name__)


@enum.unique
class ChargeStage(enum.Enum):
    INITIAL = 'initial'
    FINAL = 'final'


class ChargeState(NamedTuple):
    """Exact charges indexed by vertex id and face id."""

    vertex_charge: Tuple[Fraction, ...]
    face_charge: Tuple[Fraction, ...]
    stage: ChargeStage
    case: Optional[int] = None

    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    def charge(self, element: Element) -> Fraction:
        if element.kind == ElementKind.VERTEX:
            return self.vertex_charge[element.index]
        return self.face_charge[element.index]

    def elements(self) -> Iterator[Tuple[Element, Fraction]]:
        for index, value in enumerate(self.vertex_charge):
            yield vertex(index), value
        for index, value in enumerate(self.face_charge):
            yield face(index), value


class Transfer(NamedTuple):
    source: Element
    target: Element
    amount: Fraction
    rule_id: int


class TransferLedger(NamedTuple):
    entries: Tuple[Transfer, ...]

    def outgoing(self, element: Element) -> Fraction:
        return sum((entry.amount for entry in self.entries if entry.source == element), Fraction(0))

    def incoming(self, element: Element) -> Fraction:
        return sum((entry.amount for entry in self.entries if entry.target == element), Fraction(0))

    def firing_counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(entry.rule_id for entry in self.entries).items()))


def initial_charges(embedded: EmbeddedGraph) -> ChargeState:
    graph = embedded.graph
    return ChargeState(
        vertex_charge=tuple(Fraction(graph.degree(v), 3) - 1 for v in range(graph.n)),
        face_charge=tuple(Fraction(f.degree, 6) - 1 for f in embedded.faces.faces),
        stage=ChargeStage.INITIAL,
    )


def expected_total(embedded: EmbeddedGraph) -> Fraction:
    """Sum of all initial charges: `2g - 2` per component, i.e. minus the Euler characteristic."""

    return Fraction(2 * embedded.genus - 2 * embedded.components)


def builtin_rules(case: Literal[1, 2] = 1) -> RuleSet:
    """
    Rule sets of the two discharging arguments.

    Case 1 (no 5- and 6-cycles): 4-vertices pay 1/6 and 5^+-vertices pay 1/3 to each
    incident 3- or 4-face; 7^+-faces pay 1/42 per shared edge to adjacent 4^--faces.

    Case 2 (no 6- and 7-cycles): 4-vertices pay 1/6 to 3- and 4-faces and 1/18 to
    5-faces; 5^+-vertices pay 1/4, 1/6, 1/18 to 3-, 4-, 5-faces; 8^+-faces pay 1/24 per
    shared edge to adjacent 5^--faces.
    """

    eq, ge, le, in_ = Comparison.EQ, Comparison.GE, Comparison.LE, Comparison.IN

    if case == 1:
        rules = [
            vertex_rule(condition(eq, 4), condition(in_, 3, 4), Fraction(1, 6)),
            vertex_rule(condition(ge, 5), condition(in_, 3, 4), Fraction(1, 3)),
            face_rule(condition(ge, 7), condition(le, 4), Fraction(1, 42)),
        ]
    elif case == 2:
        rules = [
            vertex_rule(condition(eq, 4), condition(in_, 3, 4), Fraction(1, 6)),
            vertex_rule(condition(eq, 4), condition(eq, 5), Fraction(1, 18)),
            vertex_rule(condition(ge, 5), condition(eq, 3), Fraction(1, 4)),
            vertex_rule(condition(ge, 5), condition(eq, 4), Fraction(1, 6)),
            vertex_rule(condition(ge, 5), condition(eq, 5), Fraction(1, 18)),
            face_rule(condition(ge, 8), condition(le, 5), Fraction(1, 24)),
        ]
    else:
        raise ValueError('case should be 1 or 2', case)

    return RuleSet(rules, case)


def apply_discharging(
        embedded: EmbeddedGraph, rules: RuleSet,
) -> Tuple[ChargeState, TransferLedger]:
    """
    Fire every rule on the initial structure and move the charge.

    Guards only read degrees and incidences, never charges, so the result does not depend
    on the order rules are evaluated in.
    """

    initial = initial_charges(embedded)

    entries: List[Transfer] = []
    for rule_id, rule in rules:
        fired = list(_fire(embedded, rule, rule_id))
        logger.debug('rule #%d fired %d times', rule_id, len(fired))
        entries.extend(fired)

    ledger = TransferLedger(tuple(entries))
    return replay_ledger(initial, ledger, rules.case), ledger


def replay_ledger(
        initial: ChargeState, ledger: TransferLedger, case: Optional[int] = None,
) -> ChargeState:
    vertex_charge = list(initial.vertex_charge)
    face_charge = list(initial.face_charge)
    charges = {ElementKind.VERTEX: vertex_charge, ElementKind.FACE: face_charge}

    for entry in ledger.entries:
        charges[entry.source.kind][entry.source.index] -= entry.amount
        charges[entry.target.kind][entry.target.index] += entry.amount

    return ChargeState(tuple(vertex_charge), tuple(face_charge), ChargeStage.FINAL, case)


def _fire(embedded: EmbeddedGraph, rule: Rule, rule_id: int) -> Iterator[Transfer]:
    graph = embedded.graph
    faces = embedded.faces

    if rule.source_kind == ElementKind.VERTEX:
        for v in range(graph.n):
            if not rule.source.matches(graph.degree(v)):
                continue
            for f in sorted(faces.incidences(v)):
                if faces[f].walk and rule.target.matches(faces.degree(f)):
                    yield Transfer(vertex(v), face(f), rule.amount, rule_id)
        return

    for f in faces.faces:
        if not f.walk or not rule.source.matches(f.degree):
            continue
        for g, multiplicity in faces.adjacent_faces(f.index):
            if g == f.index or not rule.target.matches(faces.degree(g)):
                continue
            times = multiplicity if rule.policy == Policy.PER_EDGE else 1
            for _ in range(times):
                yield Transfer(face(f.index), face(g), rule.amount, rule_id)


class BoundTemplate(NamedTuple):
    """
    Lower bound for the final charge of a small face: its initial charge plus the least it
    is guaranteed to receive when the template's premises hold.
    """

    name: str
    case: int
    face_degree: int
    terms: Tuple[Fraction, ...]

    @property
    def bound(self) -> Fraction:
        return sum(self.terms, Fraction(0))

    @property
    def strict(self) -> bool:
        return self.bound > 0


def _terms(*values: Tuple[int, int]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(*value) for value in values)


BOUND_TEMPLATES: Tuple[BoundTemplate, ...] = (
    BoundTemplate('triangle-strong-corner', 1, 3, _terms((-1, 2), (1, 3), (1, 6), (3, 42))),
    BoundTemplate('triangle-three-4plus', 1, 3, _terms((-1, 2), (3, 6), (3, 42))),
    BoundTemplate('quad-two-4plus', 1, 4, _terms((-1, 3), (1, 3), (1, 6), (4, 42))),
    BoundTemplate('pentagon-near-8plus', 2, 5, _terms((-1, 6), (3, 18), (1, 24))),
    BoundTemplate('pentagon-isolated', 2, 5, _terms((-1, 6), (3, 18))),
    BoundTemplate('quad-near-8plus', 2, 4, _terms((-1, 3), (2, 6), (3, 24))),
    BoundTemplate('triangle-strong-corner-near-8plus', 2, 3, _terms((-1, 2), (1, 4), (1, 6), (2, 24))),
    BoundTemplate('triangle-three-4plus-near-8plus', 2, 3, _terms((-1, 2), (3, 6), (2, 24))),
)

_templates_by_name = {template.name: template for template in BOUND_TEMPLATES}


def applicable_template(embedded: EmbeddedGraph, f: int, case: int) -> Optional[BoundTemplate]:
    """The template whose premises the face meets, read from degrees and face adjacency."""

    faces = embedded.faces
    graph = embedded.graph
    corners = [graph.degree(v) for v in faces[f].corners]
    big = 7 if case == 1 else 8
    shared_with_big = sum(
        multiplicity
        for g, multiplicity in faces.adjacent_faces(f)
        if g != f and faces.degree(g) >= big
    )
    four_plus = sum(1 for d in corners if d >= 4)
    strong = any(d >= 5 for d in corners) and four_plus >= 2
    degree = faces.degree(f)

    if min(corners, default=0) < 3:
        return None

    name = None
    if case == 1 and shared_with_big == degree:
        if degree == 3:
            if strong:
                name = 'triangle-strong-corner'
            elif four_plus == 3:
                name = 'triangle-three-4plus'
        elif degree == 4:
            has_three = any(d == 3 for d in corners)
            if four_plus == 4 or (has_three and four_plus >= 2 and (strong or four_plus >= 3)):
                name = 'quad-two-4plus'

    elif case == 2:
        if degree == 5 and four_plus >= 3:
            name = 'pentagon-near-8plus' if shared_with_big >= 1 else 'pentagon-isolated'
        elif degree == 4 and four_plus >= 2 and shared_with_big >= 3:
            name = 'quad-near-8plus'
        elif degree == 3 and shared_with_big >= 2:
            if strong:
                name = 'triangle-strong-corner-near-8plus'
            elif four_plus == 3:
                name = 'triangle-three-4plus-near-8plus'

    return None if name is None else _templates_by_name[name]


class TemplateCheck(NamedTuple):
    face: int
    template: str
    bound: Fraction
    charge: Fraction

    @property
    def holds(self) -> bool:
        return self.charge >= self.bound


class AuditReport(NamedTuple):
    total: Fraction
    expected_total: Fraction
    negatives: Tuple[Tuple[Element, Fraction], ...]
    positives: Tuple[Tuple[Element, Fraction], ...]
    template_checks: Tuple[TemplateCheck, ...]
    case: Optional[int] = None

    @property
    def conserved(self) -> bool:
        return self.total == self.expected_total

    @property
    def nonnegative(self) -> bool:
        return not self.negatives

    def lines(self) -> List[str]:
        lines = [
            f'total {format_rational(self.total)}',
            f'expected {format_rational(self.expected_total)}',
            f'conserved {"yes" if self.conserved else "no"}',
            f'negatives {len(self.negatives)}',
            f'positives {len(self.positives)}',
        ]
        lines.extend(f'negative {element} {format_rational(value)}' for element, value in self.negatives)
        lines.extend(
            f'template face {check.face} {check.template} bound {format_rational(check.bound)}'
            f' charge {format_rational(check.charge)} {"ok" if check.holds else "FAIL"}'
            for check in self.template_checks
        )
        return lines


def audit(state: ChargeState, embedded: EmbeddedGraph) -> AuditReport:
    """
    Report on final charges; nothing is asserted, negatives are findings.

    :raises StageError
    """

    if state.stage != ChargeStage.FINAL:
        raise StageError(state.stage)

    checks = []
    if state.case in (1, 2):
        for f in embedded.faces.faces:
            template = applicable_template(embedded, f.index, state.case) if f.walk else None
            if template is not None:
                checks.append(TemplateCheck(f.index, template.name, template.bound, state.face_charge[f.index]))

    elements = list(state.elements())
    return AuditReport(
        total=state.total(),
        expected_total=expected_total(embedded),
        negatives=tuple((element, value) for element, value in elements if value < 0),
        positives=tuple((element, value) for element, value in elements if value > 0),
        template_checks=tuple(checks),
        case=state.case,
    )


def case1_vertex_floor(k: int) -> Fraction:
    """Least final charge of a k-vertex under case-1 rules, given at most floor(k/2) small faces."""

    if k <= 3:
        return Fraction(k, 3) - 1

    paid = Fraction(1, 6) if k == 4 else Fraction(1, 3)
    return Fraction(k, 3) - 1 - (k // 2) * paid


def case2_vertex_bound_small_r1(k: int) -> Fraction:
    return Fraction(9 * k - 33 - 9 * (k // 4), 36)


def case2_vertex_bound_large_r1(k: int) -> Fraction:
    return Fraction(10 * k - 38 - 3 * (k // 2) - 6 * (k // 3), 36)


class ConstantCheck(NamedTuple):
    name: str
    value: Fraction
    strict: bool

    @property
    def holds(self) -> bool:
        return self.value > 0 if self.strict else self.value >= 0


def audit_constants(max_degree: int = 64) -> List[ConstantCheck]:
    """Exact evaluation of every constant the two arguments compare against zero."""

    checks = [
        ConstantCheck(f'template {template.name}', template.bound, template.strict)
        for template in BOUND_TEMPLATES
    ]
    checks.extend(
        ConstantCheck(f'case1 vertex k={k}', case1_vertex_floor(k), False)
        for k in range(3, max_degree + 1)
    )
    for k in range(6, max_degree + 1):
        checks.append(ConstantCheck(f'case2 vertex k={k} r1<=k/2', case2_vertex_bound_small_r1(k), False))
        checks.append(ConstantCheck(f'case2 vertex k={k} r1>k/2', case2_vertex_bound_large_r1(k), False))

    return checks


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


class StageError(ToruscolorError):
    def __init__(self, stage: ChargeStage):
        self.stage = stage

    def __str__(self) -> str:
        return f'Audit needs final charges, got the {self.stage.value} stage'
