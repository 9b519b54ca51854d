# Copyright The Volcano Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Recursive-descent parser for the predicate language.

    formula  := iff
    iff      := implies ('<=>' implies)*
    implies  := or ('=>' implies)?
    or       := and ('|' and)*
    and      := unary ('&' unary)*
    unary    := '~' unary | ('E'|'A') var (',' var)* formula | '(' formula ')' | atom
    atom     := SEQ '[' term ']' '=' '@' NUMBER | term relop term
    term     := (var | NUMBER) ('+' (var | NUMBER))*

Variables are lowercase identifiers, sequence names uppercase. A quantifier
body extends as far to the right as possible.
"""

import re
from typing import List, NamedTuple, NoReturn, Optional, Set

from vtmkit.exceptions import PredicateSyntaxError
from vtmkit.logic.ast import (
    COMPARISONS,
    Add,
    Binary,
    Comparison,
    Const,
    Formula,
    Not,
    Quantifier,
    SequenceAtom,
    Term,
    Var,
)

TOKEN_PATTERNS = [
    ("op", r"<=>|=>|<=|>=|!=|=|<|>|&|\||~|\(|\)|\[|\]|@|\+|,"),
    ("number", r"[0-9]+"),
    ("lower", r"[a-z][a-z0-9_]*"),
    ("upper", r"[A-Z][A-Z0-9_]*"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in TOKEN_PATTERNS))


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise PredicateSyntaxError(f"Unexpected character {text[pos]!r}", pos, text)
        tokens.append(Token(match.lastgroup or "", match.group(0), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class PredicateParser:
    """Parses one predicate; not reusable across texts."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.bound: Set[str] = set()

    def parse(self) -> Formula:
        node = self._iff()
        if self._peek().kind != "end":
            self._fail(f"Unexpected {self._peek().value!r}")
        return node

    def _peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def _next(self) -> Token:
        token = self._peek()
        self.index += 1
        return token

    def _accept(self, value: str) -> bool:
        token = self._peek()
        if token.kind == "op" and token.value == value:
            self.index += 1
            return True
        return False

    def _expect(self, value: str) -> None:
        if not self._accept(value):
            found = self._peek().value or "end of input"
            self._fail(f"Expected {value!r}, found {found!r}")

    def _fail(self, message: str, token: Optional[Token] = None) -> NoReturn:
        raise PredicateSyntaxError(message, (token or self._peek()).position, self.text)

    def _iff(self) -> Formula:
        node = self._implies()
        while self._accept("<=>"):
            node = Binary("<=>", node, self._implies())
        return node

    def _implies(self) -> Formula:
        node = self._or()
        if self._accept("=>"):
            return Binary("=>", node, self._implies())
        return node

    def _or(self) -> Formula:
        node = self._and()
        while self._accept("|"):
            node = Binary("|", node, self._and())
        return node

    def _and(self) -> Formula:
        node = self._unary()
        while self._accept("&"):
            node = Binary("&", node, self._unary())
        return node

    def _unary(self) -> Formula:
        token = self._peek()
        if self._accept("~"):
            return Not(self._unary())
        if token.kind == "upper" and token.value in ("E", "A") and self._peek(1).kind == "lower":
            return self._quantifier()
        if self._accept("("):
            node = self._iff()
            self._expect(")")
            return node
        return self._atom()

    def _quantifier(self) -> Formula:
        kind = self._next().value
        names = [self._bind(self._next())]
        while self._accept(","):
            token = self._next()
            if token.kind != "lower":
                self._fail("Expected a variable after ','", token)
            names.append(self._bind(token))
        body = self._iff()
        for name in names:
            self.bound.discard(name)
        for name in reversed(names):
            body = Quantifier(kind, name, body)
        return body

    def _bind(self, token: Token) -> str:
        if token.value in self.bound:
            self._fail(f"Variable {token.value!r} is already bound", token)
        self.bound.add(token.value)
        return token.value

    def _atom(self) -> Formula:
        token = self._peek()
        if token.kind == "upper":
            return self._sequence_atom()
        left = self._term()
        op = self._peek()
        if op.kind != "op" or op.value not in COMPARISONS:
            self._fail(f"Expected a comparison after {left}")
        self.index += 1
        return Comparison(op.value, left, self._term())

    def _sequence_atom(self) -> Formula:
        name = self._next().value
        self._expect("[")
        index = self._term()
        self._expect("]")
        self._expect("=")
        self._expect("@")
        letter = self._next()
        if letter.kind != "number":
            self._fail("Expected a letter after '@'", letter)
        return SequenceAtom(name, index, int(letter.value))

    def _term(self) -> Term:
        term = self._summand()
        while self._accept("+"):
            term = Add(term, self._summand())
        return term

    def _summand(self) -> Term:
        token = self._next()
        if token.kind == "lower":
            return Var(token.value)
        if token.kind == "number":
            return Const(int(token.value))
        self._fail(f"Expected a variable or number, found {token.value or 'end of input'!r}", token)


def parse_predicate(text: str) -> Formula:
    return PredicateParser(text).parse()
