"""
Text syntax shared by the library, the certificate files and the CLI.

Field elements are integers (prime fields) or coefficient vectors
``[c0,c1,...]`` in the modulus basis; rational functions are expressions in
``t`` built with ``+ - * / ^`` and parentheses; tower elements may also use
the generators ``x1``, ``x2``, ... Places are written ``t``, ``t - c``,
``irr:<polynomial>`` or ``inf``. Printing any value with ``str`` and parsing
it back gives the same value.
"""

import re
from typing import List, NamedTuple

from .artin_schreier import ASTower, TowerElement
from .base_fields import FiniteField, Place, Polynomial, RationalFunction
from .errors import DivisionByZero, ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<vector>\[[^\]]*\])|(?P<generator>x\d+)"
    r"|(?P<variable>t)|(?P<operator>[-+*/^()]))"
)


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"Unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FiniteField, tower: ASTower | None, level: int):
        self._tokens = _tokenize(text)
        self._index = 0
        self._field = field
        self._tower = tower
        self._level = level

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, operator: str) -> _Token | None:
        token = self._current
        if token.kind == "operator" and token.text == operator:
            self._index += 1
            return token
        return None

    def _expect(self, operator: str) -> None:
        if self._accept(operator) is None:
            raise ParseError(f"Expected {operator!r}", self._current.position)

    def parse(self):
        if self._current.kind == "end":
            raise ParseError("Empty expression", 0)
        value = self._expression()
        if self._current.kind != "end":
            raise ParseError(
                f"Unexpected {self._current.text!r}", self._current.position
            )
        return value

    def _expression(self):
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self):
        value = self._unary()
        while True:
            if self._accept("*"):
                value = value * self._unary()
                continue
            token = self._accept("/")
            if token is None:
                return value
            divisor = self._unary()
            try:
                value = value / divisor
            except DivisionByZero:
                raise ParseError("Division by zero", token.position) from None

    def _unary(self):
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        token = self._accept("^")
        if token is None:
            return base
        exponent = self._exponent()
        try:
            return base**exponent
        except DivisionByZero:
            raise ParseError("Negative power of zero", token.position) from None

    def _exponent(self) -> int:
        parenthesized = self._accept("(") is not None
        negative = self._accept("-") is not None
        token = self._advance()
        if token.kind != "number":
            raise ParseError("Expected an integer exponent", token.position)
        if parenthesized:
            self._expect(")")
        return -int(token.text) if negative else int(token.text)

    def _atom(self):
        token = self._advance()
        field = self._field
        if token.kind == "number":
            return RationalFunction.constant(field, field.from_int(int(token.text)))
        if token.kind == "vector":
            body = token.text[1:-1].strip()
            try:
                digits = [int(d) for d in body.split(",")] if body else []
                value = field.from_vector(digits)
            except ValueError:
                raise ParseError(
                    f"Invalid field element {token.text}", token.position
                ) from None
            return RationalFunction.constant(field, value)
        if token.kind == "variable":
            return RationalFunction.t(field)
        if token.kind == "generator":
            k = int(token.text[1:])
            if self._tower is None or not 1 <= k <= self._level:
                raise ParseError(f"Unknown generator {token.text}", token.position)
            return self._tower.generator(k)
        if token.kind == "operator" and token.text == "(":
            value = self._expression()
            self._expect(")")
            return value
        raise ParseError(
            f"Unexpected {token.text or 'end of input'!r}", token.position
        )


def parse_element(text: str, field: FiniteField) -> RationalFunction:
    """Parse a rational function of F_q(t)."""
    return _Parser(text, field, None, 0).parse()


def parse_tower_element(
    text: str, tower: ASTower, level: int | None = None
) -> TowerElement:
    """
    Parse an element of a tower, at ``level`` (the top level by default).

    Only the generators x1 .. x_level may occur.
    """
    level = tower.length if level is None else level
    value = _Parser(text, tower.field, tower, level).parse()
    return TowerElement.of(value).lift_to(tower.level(level))


def parse_field_element(text: str, field: FiniteField) -> int:
    value = parse_element(text, field)
    if not value.is_constant():
        raise ParseError(f"{text!r} is not a constant", 0)
    return value.numerator[0]


def parse_place(text: str, field: FiniteField) -> Place:
    """Parse ``t``, ``t - c``, ``irr:<polynomial>`` or ``inf``."""
    stripped = text.strip()
    if stripped in ("inf", "infinity"):
        return Place.infinity(field)
    offset = 0
    if stripped.startswith("irr:"):
        offset = 4
        stripped = stripped[4:]
    value = parse_element(stripped, field)
    if not value.is_polynomial() or value.numerator.degree < 1:
        raise ParseError(f"{text!r} is not a place polynomial", offset)
    polynomial: Polynomial = value.numerator.monic()
    if offset == 0 and polynomial.degree != 1:
        raise ParseError(f"Use irr:<polynomial> for the place {text!r}", 0)
    try:
        return Place.finite(polynomial)
    except ValueError as e:
        raise ParseError(str(e), offset) from None
