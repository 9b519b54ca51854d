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

"""Syntax tree for predicates over automatic sequences."""

from dataclasses import dataclass
from typing import FrozenSet, Tuple, Union


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"{self.left}+{self.right}"


Term = Union[Var, Const, Add]

COMPARISONS = ("=", "!=", "<", "<=", ">", ">=")
CONNECTIVES = ("&", "|", "=>", "<=>")
QUANTIFIERS = ("E", "A")


@dataclass(frozen=True)
class Comparison:
    op: str
    left: Term
    right: Term

    def __str__(self) -> str:
        return f"{self.left}{self.op}{self.right}"


@dataclass(frozen=True)
class SequenceAtom:
    """NAME[index]=@letter"""

    sequence: str
    index: Term
    letter: int

    def __str__(self) -> str:
        return f"{self.sequence}[{self.index}]=@{self.letter}"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self) -> str:
        return f"~{_wrap(self.body)}"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"{_wrap(self.left)} {self.op} {_wrap(self.right)}"


@dataclass(frozen=True)
class Quantifier:
    kind: str
    variable: str
    body: "Formula"

    def __str__(self) -> str:
        return f"{self.kind}{self.variable} {self.body}"


Formula = Union[Comparison, SequenceAtom, Not, Binary, Quantifier]


def _wrap(node: "Formula") -> str:
    if isinstance(node, (Comparison, SequenceAtom, Not)):
        return str(node)
    return f"({node})"


def term_variables(term: Term) -> FrozenSet[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Add):
        return term_variables(term.left) | term_variables(term.right)
    return frozenset()


def summands(term: Term) -> Tuple[Union[Var, Const], ...]:
    """Flatten nested additions, left to right."""
    if isinstance(term, Add):
        return summands(term.left) + summands(term.right)
    return (term,)


def free_variables(node: Formula) -> FrozenSet[str]:
    if isinstance(node, Comparison):
        return term_variables(node.left) | term_variables(node.right)
    if isinstance(node, SequenceAtom):
        return term_variables(node.index)
    if isinstance(node, Not):
        return free_variables(node.body)
    if isinstance(node, Binary):
        return free_variables(node.left) | free_variables(node.right)
    return free_variables(node.body) - {node.variable}


def bound_variables(node: Formula) -> FrozenSet[str]:
    if isinstance(node, Quantifier):
        return bound_variables(node.body) | {node.variable}
    if isinstance(node, Not):
        return bound_variables(node.body)
    if isinstance(node, Binary):
        return bound_variables(node.left) | bound_variables(node.right)
    return frozenset()


def sequence_names(node: Formula) -> FrozenSet[str]:
    if isinstance(node, SequenceAtom):
        return frozenset((node.sequence,))
    if isinstance(node, (Not, Quantifier)):
        return sequence_names(node.body)
    if isinstance(node, Binary):
        return sequence_names(node.left) | sequence_names(node.right)
    return frozenset()
