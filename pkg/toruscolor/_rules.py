"""
Discharging rule files.

One rule per line, `#` starts a comment::

    vertex k=4 -> face d in {3,4}: 1/6
    vertex k>=5 -> face d in {3,4}: 1/3 per-incidence
    face d>=7 -> adjface d<=4: 1/42 per-edge

A `vertex` source pays each incident `face`, once per corner (`per-incidence`). A `face`
source pays each adjacent face (`adjface`), once per shared edge (`per-edge`) or once per
neighbor (`per-incidence`). `k` and `d` both denote the degree of the selected element.
"""
import enum
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from toruscolor._types import ElementKind, ToruscolorError


@enum.unique
class Comparison(enum.Enum):
    EQ = '='
    GE = '>='
    LE = '<='
    IN = 'in'


class Condition(NamedTuple):
    op: Comparison
    values: Tuple[int, ...]

    def matches(self, degree: int) -> bool:
        if self.op == Comparison.EQ:
            return degree == self.values[0]
        if self.op == Comparison.GE:
            return degree >= self.values[0]
        if self.op == Comparison.LE:
            return degree <= self.values[0]
        return degree in self.values

    def overlaps(self, other: 'Condition') -> bool:
        if self.op == Comparison.IN:
            return any(other.matches(value) for value in self.values)
        if other.op == Comparison.IN:
            return any(self.matches(value) for value in other.values)

        low = max(self._low(), other._low())
        highs = [high for high in (self._high(), other._high()) if high is not None]
        return not highs or low <= min(highs)

    def render(self, letter: str) -> str:
        if self.op == Comparison.IN:
            return f'{letter} in {{' + ','.join(str(value) for value in self.values) + '}'
        return f'{letter}{self.op.value}{self.values[0]}'

    def _low(self) -> int:
        return 0 if self.op == Comparison.LE else self.values[0]

    def _high(self) -> Optional[int]:
        return None if self.op == Comparison.GE else self.values[0]


def condition(op: Comparison, *values: int) -> Condition:
    return Condition(op, tuple(sorted(set(values))))


@enum.unique
class Policy(enum.Enum):
    PER_EDGE = 'per-edge'
    PER_INCIDENCE = 'per-incidence'


class Rule(NamedTuple):
    """Guarded transfer; the target is an incident face for vertex sources, an adjacent face for face sources."""

    source_kind: ElementKind
    source: Condition
    target: Condition
    amount: Fraction
    policy: Policy

    def render(self) -> str:
        if self.source_kind == ElementKind.VERTEX:
            head = f'vertex {self.source.render("k")} -> face {self.target.render("d")}'
        else:
            head = f'face {self.source.render("d")} -> adjface {self.target.render("d")}'
        return f'{head}: {self.amount.numerator}/{self.amount.denominator} {self.policy.value}'


def vertex_rule(source: Condition, target: Condition, amount: Fraction) -> Rule:
    return Rule(ElementKind.VERTEX, source, target, Fraction(amount), Policy.PER_INCIDENCE)


def face_rule(
        source: Condition, target: Condition, amount: Fraction,
        policy: Policy = Policy.PER_EDGE,
) -> Rule:
    return Rule(ElementKind.FACE, source, target, Fraction(amount), policy)


class RuleSet:
    """
    Ordered rules; rule ids are 1-based positions.

    :param case: which argument the rules implement, if any (enables bound templates in audits)
    :raises OverlappingSelectors
    """

    def __init__(self, rules: Iterable[Rule] = (), case: Optional[int] = None):
        self._rules = tuple(rules)
        self._case = case

        for rule_id, rule in self:
            if rule.amount <= 0:
                raise ValueError('rule amount should be positive', rule_id, rule.amount)

        for (first_id, first), (second_id, second) in _pairs(list(self)):
            if (
                    first.source_kind == second.source_kind
                    and first.source.overlaps(second.source)
                    and first.target.overlaps(second.target)
            ):
                raise OverlappingSelectors(first_id, second_id)

    @property
    def rules(self) -> Tuple[Rule, ...]:
        return self._rules

    @property
    def case(self) -> Optional[int]:
        return self._case

    def __iter__(self) -> Iterator[Tuple[int, Rule]]:
        return iter(enumerate(self._rules, 1))

    def __len__(self) -> int:
        return len(self._rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RuleSet):
            return NotImplemented
        return self._rules == other._rules

    def __repr__(self) -> str:
        return f'RuleSet({len(self._rules)} rules, case={self._case})'


def _pairs(items: Sequence) -> Iterator[tuple]:
    for i, first in enumerate(items):
        for second in items[i + 1:]:
            yield first, second


def parse_rules(text: str, case: Optional[int] = None) -> RuleSet:
    """
    :raises ParseError
    :raises OverlappingSelectors
    """

    rules = []
    for line_no, line in enumerate(text.splitlines(), 1):
        content = line.split('#', 1)[0]
        if content.strip():
            rules.append(_LineParser(content, line_no).parse_rule())

    return RuleSet(rules, case)


def emit_rules(rule_set: RuleSet) -> str:
    return ''.join(f'{rule.render()}\n' for _, rule in rule_set)


def rules_file(path: Path, case: Optional[int] = None) -> RuleSet:
    """
    :raises ParseError
    :raises OverlappingSelectors
    """

    return parse_rules(path.read_text(encoding='utf-8'), case)


_token_re = re.compile(r'\s*(?:(->|>=|<=|[=:{},/])|(-?\d+)|([A-Za-z][A-Za-z-]*))')


class _Token(NamedTuple):
    kind: str  # 'op', 'int', 'word' or 'end'
    text: str
    column: int


class _LineParser:
    def __init__(self, text: str, line_no: int):
        self._line_no = line_no
        self._tokens = self._tokenize(text)
        self._pos = 0

    def parse_rule(self) -> Rule:
        source_word = self._expect_word('vertex', 'face')
        source = self._parse_condition()
        self._expect_op('->')

        target_token = self._peek()
        target_word = self._expect_word('face', 'adjface')
        if (source_word, target_word) not in (('vertex', 'face'), ('face', 'adjface')):
            raise self._error(target_token, f'{source_word} rules should target '
                              f'{"face" if source_word == "vertex" else "adjface"}')

        target = self._parse_condition()
        self._expect_op(':')
        amount_token = self._peek()
        amount = self._parse_rational()
        if amount <= 0:
            raise self._error(amount_token, 'amount should be positive')

        source_kind = ElementKind.VERTEX if source_word == 'vertex' else ElementKind.FACE
        policy = Policy.PER_INCIDENCE if source_kind == ElementKind.VERTEX else Policy.PER_EDGE

        policy_token = self._peek()
        if policy_token.kind != 'end':
            policy_word = self._expect_word(*(item.value for item in Policy))
            policy = Policy(policy_word)
            if source_kind == ElementKind.VERTEX and policy == Policy.PER_EDGE:
                raise self._error(policy_token, 'vertex rules are paid per incidence')

        end = self._peek()
        if end.kind != 'end':
            raise self._error(end, f'unexpected {end.text!r}')

        return Rule(source_kind, source, target, amount, policy)

    def _parse_condition(self) -> Condition:
        self._expect_word('k', 'd')
        token = self._next()
        if token.kind == 'op' and token.text in ('=', '>=', '<='):
            return Condition(Comparison(token.text), (self._parse_int(),))

        if token.kind == 'word' and token.text == 'in':
            self._expect_op('{')
            values = [self._parse_int()]
            while self._peek().text == ',':
                self._next()
                values.append(self._parse_int())
            self._expect_op('}')
            return condition(Comparison.IN, *values)

        raise self._error(token, "expected '=', '>=', '<=' or 'in'")

    def _parse_rational(self) -> Fraction:
        numerator = self._parse_int()
        if self._peek().text != '/':
            return Fraction(numerator)

        self._next()
        denominator_token = self._peek()
        denominator = self._parse_int()
        if denominator == 0:
            raise self._error(denominator_token, 'zero denominator')
        return Fraction(numerator, denominator)

    def _parse_int(self) -> int:
        token = self._next()
        if token.kind != 'int':
            raise self._error(token, 'expected an integer')
        return int(token.text)

    def _expect_word(self, *words: str) -> str:
        token = self._next()
        if token.kind != 'word' or token.text not in words:
            raise self._error(token, 'expected ' + ' or '.join(repr(word) for word in words))
        return token.text

    def _expect_op(self, op: str) -> None:
        token = self._next()
        if token.kind != 'op' or token.text != op:
            raise self._error(token, f'expected {op!r}')

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _next(self) -> _Token:
        token = self._tokens[self._pos]
        if token.kind != 'end':
            self._pos += 1
        return token

    def _error(self, token: _Token, message: str) -> 'ParseError':
        return ParseError(self._line_no, token.column, message)

    def _tokenize(self, text: str) -> List[_Token]:
        tokens = []
        pos = 0
        stripped_end = len(text.rstrip())
        while pos < stripped_end:
            match = _token_re.match(text, pos)
            if match is None or match.end() == pos:
                column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
                raise ParseError(self._line_no, column, f'unexpected character {text[column - 1]!r}')

            op, number, word = match.groups()
            if op is not None:
                tokens.append(_Token('op', op, match.start(1) + 1))
            elif number is not None:
                tokens.append(_Token('int', number, match.start(2) + 1))
            else:
                tokens.append(_Token('word', word, match.start(3) + 1))
            pos = match.end()

        tokens.append(_Token('end', '<end of line>', stripped_end + 1))
        return tokens


class RuleError(ToruscolorError):
    pass


class ParseError(RuleError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message

    def __str__(self) -> str:
        return f'line {self.line}, column {self.column}: {self.message}'


class OverlappingSelectors(RuleError):
    def __init__(self, first_id: int, second_id: int):
        self.first_id = first_id
        self.second_id = second_id

    def __str__(self) -> str:
        return f'Rules #{self.first_id} and #{self.second_id} select the same source and target degrees'
