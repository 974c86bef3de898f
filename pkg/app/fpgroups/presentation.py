"""Finite presentations and their text syntax.

``< a, b | a^3, b^2, (a*b)^2 >``: comma separated generator names, then relators built
from names, ``*`` products, ``^`` integer powers, parentheses and ``1`` for the empty
word. A relation ``u = v`` stands for the relator ``u*v^-1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from core.exceptions import PresentationSyntaxError, UnknownGeneratorError
from fpgroups.words import Word, concat, format_word, free_reduce, inverse, power

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[<>|,*^()=\-]))"
)


@dataclass(frozen=True)
class FpGroup:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError(f"Duplicate generator names in {self.generator_names}")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))
        for relator in self.relators:
            if any(abs(x) > self.ngens for x in relator):
                raise ValueError(f"Relator {relator} uses an index above {self.ngens}")

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def format(self, word: Sequence[int]) -> str:
        return format_word(word, self.generator_names)

    def parse_word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)

    def __str__(self) -> str:
        relators = ", ".join(self.format(r) for r in self.relators)
        return f"< {', '.join(self.generator_names)} | {relators} >"


class _Parser:
    def __init__(self, text: str, names: Sequence[str] = ()):
        self.text = text
        self.names = {name: i + 1 for i, name in enumerate(names)}
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None or match.end() == pos:
                if text[pos:].strip() == "":
                    break
                raise PresentationSyntaxError(f"Unexpected character {text[pos]!r}", pos)
            kind = match.lastgroup
            if kind is None:
                break
            self.tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        self.index = 0

    @property
    def position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][2]
        return len(self.text)

    def peek(self) -> str | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return None

    def next(self) -> tuple[str, str, int]:
        if self.index >= len(self.tokens):
            raise PresentationSyntaxError("Unexpected end of input", len(self.text))
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, symbol: str):
        kind, value, pos = self.next()
        if value != symbol:
            raise PresentationSyntaxError(f"Expected {symbol!r}, found {value!r}", pos)

    def at_end(self) -> bool:
        return self.index >= len(self.tokens)

    def presentation(self) -> FpGroup:
        self.expect("<")
        names: list[str] = []
        while self.peek() not in ("|", ">"):
            kind, value, pos = self.next()
            if kind != "name":
                raise PresentationSyntaxError(f"Expected a generator name, found {value!r}", pos)
            if value in names:
                raise PresentationSyntaxError(f"Duplicate generator {value!r}", pos)
            names.append(value)
            if self.peek() == ",":
                self.next()
            elif self.peek() not in ("|", ">"):
                raise PresentationSyntaxError("Expected ',' or '|'", self.position)
        self.names = {name: i + 1 for i, name in enumerate(names)}
        relators: list[Word] = []
        if self.peek() == "|":
            self.next()
            while self.peek() != ">":
                relators.append(self.relation())
                if self.peek() == ",":
                    self.next()
                elif self.peek() != ">":
                    raise PresentationSyntaxError("Expected ',' or '>'", self.position)
        self.expect(">")
        if not self.at_end():
            raise PresentationSyntaxError("Trailing input after '>'", self.position)
        return FpGroup(tuple(names), tuple(relators))

    def relation(self) -> Word:
        left = self.word()
        if self.peek() == "=":
            self.next()
            return concat(left, inverse(self.word()))
        return left

    def word(self) -> Word:
        result = self.factor()
        while self.peek() == "*":
            self.next()
            result = concat(result, self.factor())
        return result

    def factor(self) -> Word:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            kind, value, pos = self.next()
            if kind != "int":
                raise PresentationSyntaxError(f"Expected an exponent, found {value!r}", pos)
            base = power(base, sign * int(value))
        return base

    def atom(self) -> Word:
        kind, value, pos = self.next()
        if value == "(":
            inner = self.word()
            self.expect(")")
            return inner
        if kind == "int" and value == "1":
            return ()
        if kind == "name":
            if value not in self.names:
                raise UnknownGeneratorError(value)
            return (self.names[value],)
        raise PresentationSyntaxError(f"Unexpected {value!r}", pos)


def parse_presentation(text: str) -> FpGroup:
    return _Parser(text).presentation()


def parse_word(text: str, names: Sequence[str]) -> Word:
    parser = _Parser(text, names)
    result = parser.relation()
    if not parser.at_end():
        raise PresentationSyntaxError("Trailing input after word", parser.position)
    return result
