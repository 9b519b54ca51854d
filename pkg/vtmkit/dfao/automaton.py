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
Base-2 deterministic finite automata with output (DFAOs).

Digits are read most-significant first. The integer 0 is the empty digit
string; reading "0" must give the same letter for automata that are
invariant under leading zeros.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from vtmkit.exceptions import ArtifactFormatError, DomainError
from vtmkit.utils.partition import quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DFAO:
    """A complete binary DFAO: transitions[state] = (on 0, on 1), outputs[state] = letter."""

    transitions: Tuple[Tuple[int, int], ...]
    outputs: Tuple[int, ...]
    initial: int = 0
    _table: np.ndarray = field(init=False, repr=False, compare=False)
    _out: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.transitions)
        if n == 0:
            raise DomainError("A DFAO needs at least one state")
        if len(self.outputs) != n:
            raise DomainError(f"DFAO has {n} states but {len(self.outputs)} outputs")
        if not 0 <= self.initial < n:
            raise DomainError(f"Initial state {self.initial} out of range")
        for q, row in enumerate(self.transitions):
            if len(row) != 2 or not all(0 <= t < n for t in row):
                raise DomainError(f"State {q} needs two transitions into 0..{n - 1}, got {row}")
        if any(letter < 0 for letter in self.outputs):
            raise DomainError("DFAO outputs must be non-negative letters")
        object.__setattr__(self, "_table", np.asarray(self.transitions, dtype=np.int64).reshape(n, 2))
        object.__setattr__(self, "_out", np.asarray(self.outputs, dtype=np.int64))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], outputs: Iterable[int], initial: int = 0) -> "DFAO":
        return cls(tuple((int(r[0]), int(r[1])) for r in rows), tuple(int(o) for o in outputs), initial)

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.outputs)))

    def to_text(self) -> str:
        lines = [f"states {self.state_count} initial {self.initial}"]
        for q, (t0, t1) in enumerate(self.transitions):
            lines.append(f"{q} {self.outputs[q]} {t0} {t1}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, source: Union[str, Path] = "<text>") -> "DFAO":
        lines = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        if not lines:
            raise ArtifactFormatError(source, "empty DFAO file")
        header = lines[0]
        if len(header) != 4 or header[0] != "states" or header[2] != "initial":
            raise ArtifactFormatError(source, f"bad header {' '.join(header)!r}")
        try:
            count, initial = int(header[1]), int(header[3])
            body = [[int(x) for x in parts] for parts in lines[1:]]
        except ValueError as e:
            raise ArtifactFormatError(source, f"non-integer field: {e}")
        if len(body) != count or any(len(row) != 4 for row in body):
            raise ArtifactFormatError(source, f"expected {count} lines of 'state output t0 t1'")
        body.sort(key=lambda row: row[0])
        if [row[0] for row in body] != list(range(count)):
            raise ArtifactFormatError(source, "states must be numbered 0..N-1")
        try:
            return cls.from_rows([row[2:] for row in body], [row[1] for row in body], initial)
        except DomainError as e:
            raise ArtifactFormatError(source, str(e))

    def to_dot(self, name: str = "dfao") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point];']
        for q, letter in enumerate(self.outputs):
            lines.append(f'  q{q} [shape=circle, label="{q}/{letter}"];')
        lines.append(f"  start -> q{self.initial};")
        for q, row in enumerate(self.transitions):
            for bit, t in enumerate(row):
                lines.append(f'  q{q} -> q{t} [label="{bit}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def binary_digits(n: int) -> str:
    """MSD-first binary representation; 0 is the empty string."""
    if n < 0:
        raise DomainError(f"Only naturals have a binary representation, got {n}")
    return format(n, "b") if n else ""


def run_digits(d: DFAO, digits: Union[str, Sequence[int]]) -> int:
    """Output after reading the given binary digits, most-significant first."""
    state = d.initial
    for ch in digits:
        bit = int(ch)
        if bit not in (0, 1):
            raise DomainError(f"Binary digit expected, got {ch!r}")
        state = d.transitions[state][bit]
    return d.outputs[state]


def run(d: DFAO, n: int) -> int:
    """The letter the DFAO assigns to n."""
    return run_digits(d, binary_digits(n))


def run_many(d: DFAO, ns: Union[np.ndarray, Sequence[int]]) -> np.ndarray:
    """Vectorised run over an array of naturals; digits start at each value's own leading 1."""
    values = np.asarray(ns, dtype=np.int64)
    if values.size and int(values.min()) < 0:
        raise DomainError("Only naturals have a binary representation")
    states = np.full(values.shape, d.initial, dtype=np.int64)
    width = int(values.max()).bit_length() if values.size else 0
    for p in range(width - 1, -1, -1):
        active = values >= (1 << p)
        bits = (values >> p) & 1
        states = np.where(active, d._table[states, bits], states)
    return d._out[states]


def minimize_dfao(d: DFAO) -> DFAO:
    """Moore refinement seeded by outputs; result is trimmed and numbered breadth-first."""
    rows, outputs, initial = quotient(d.transitions, d.outputs, d.initial)
    result = DFAO.from_rows(rows, outputs, initial)
    if result.state_count != d.state_count:
        logger.debug(f"Minimized DFAO from {d.state_count} to {result.state_count} states")
    return result


def dfao_isomorphic(a: DFAO, b: DFAO) -> bool:
    """Equal after canonical minimization."""
    return minimize_dfao(a) == minimize_dfao(b)


def read_dfao(path: Union[str, Path]) -> DFAO:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"DFAO file not found: {path}")
    return DFAO.from_text(path.read_text(), source=path)


def leading_zero_invariant(d: DFAO, limit: int, max_padding: int = 4) -> bool:
    """Check run(0^j bin(n)) == run(n) for all n < limit and 1 <= j <= max_padding.

    Reading j leading zeros only moves the start state, so each padding is one
    vectorised run from the state reached after the zeros.
    """
    values = np.arange(limit, dtype=np.int64)
    expected = run_many(d, values)
    start = d.initial
    for _ in range(max_padding):
        start = d.transitions[start][0]
        padded = DFAO(d.transitions, d.outputs, start)
        if not np.array_equal(run_many(padded, values), expected):
            return False
    return True
