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

"""Automata for the atomic relations, built over placeholder tracks and then renamed."""

from typing import List

from vtmkit.dfao import DFAO
from vtmkit.exceptions import DomainError
from vtmkit.logic.automaton import TrackAutomaton, minimize, relabel

SLOTS = ("#0", "#1", "#2")
DEAD = -1


def _slot_automaton(arity: int, rows: List[List[int]], accepting: List[int], names: List[str]) -> TrackAutomaton:
    """Close a partial table with a dead state, then rename slot j to names[j]."""
    dead = len(rows)
    width = 1 << arity
    complete = [[dead if t == DEAD else t for t in row] for row in rows] + [[dead] * width]
    a = TrackAutomaton.build(SLOTS[:arity], complete, accepting)
    return relabel(a, dict(zip(SLOTS, names)))


def equality(x: str, y: str) -> TrackAutomaton:
    """x = y"""
    return _slot_automaton(2, [[0, DEAD, DEAD, 0]], [0], [x, y])


def constant(x: str, value: int) -> TrackAutomaton:
    """x = value: leading zeros, then exactly the binary digits of value."""
    if value < 0:
        raise DomainError(f"Constants are naturals, got {value}")
    digits = [int(d) for d in format(value, "b")] if value else []
    # state i: the first i digits of value have been read
    rows = []
    for i in range(len(digits) + 1):
        row = [DEAD, DEAD]
        if i == 0:
            row[0] = 0
        if i < len(digits):
            row[digits[i]] = i + 1
        rows.append(row)
    return _slot_automaton(1, rows, [len(digits)], [x])


def addition(x: str, y: str, z: str) -> TrackAutomaton:
    """x + y = z, read most-significant digit first.

    The state is the carry the unread low digits must deliver into the
    column just read; the column fixes the carry it needs in turn.
    """
    rows = []
    for carry_out in (0, 1):
        row = []
        for symbol in range(8):
            a, b, s = symbol & 1, (symbol >> 1) & 1, (symbol >> 2) & 1
            carry_in = s + 2 * carry_out - a - b
            row.append(carry_in if carry_in in (0, 1) else DEAD)
        rows.append(row)
    return _slot_automaton(3, rows, [0], [x, y, z])


def less_than(x: str, y: str, strict: bool = True) -> TrackAutomaton:
    """x < y (or x <= y): the first differing digit decides."""
    equal, less = 0, 1
    # symbol bit 0 is x, bit 1 is y
    rows = [[equal, DEAD, less, equal], [less, less, less, less]]
    return _slot_automaton(2, rows, [less] if strict else [equal, less], [x, y])


def sequence_atom(x: str, dfao: DFAO, letter: int) -> TrackAutomaton:
    """The DFAO reads x and outputs letter."""
    accepting = [q for q, out in enumerate(dfao.outputs) if out == letter]
    a = TrackAutomaton.build((x,), dfao.transitions, accepting, dfao.initial)
    return minimize(a)
