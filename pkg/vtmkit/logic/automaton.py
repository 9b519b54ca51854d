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
Multi-track binary automata.

Every track carries one natural number, most-significant digit first, all
tracks padded with leading zeros to a common width. A symbol is an integer
whose bit j is the digit of tracks[j]; tracks are kept sorted by name so the
encoding of a variable set is unique.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np

from vtmkit.exceptions import ArtifactFormatError, DomainError, StateCeilingError
from vtmkit.utils.partition import quotient

logger = logging.getLogger(__name__)

DEFAULT_STATE_CEILING = 10**6

BOOLEAN_OPS: Dict[str, Callable[[bool, bool], bool]] = {
    "&": lambda x, y: x and y,
    "|": lambda x, y: x or y,
    "=>": lambda x, y: (not x) or y,
    "<=>": lambda x, y: x == y,
}


@dataclass(frozen=True)
class TrackAutomaton:
    """Complete deterministic automaton over 2^len(tracks) symbols."""

    tracks: Tuple[str, ...]
    transitions: Tuple[Tuple[int, ...], ...]
    accepting: FrozenSet[int]
    initial: int = 0
    _table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if list(self.tracks) != sorted(set(self.tracks)):
            raise DomainError(f"Tracks must be distinct and sorted, got {self.tracks}")
        n = len(self.transitions)
        width = 1 << len(self.tracks)
        if n == 0 or not 0 <= self.initial < n:
            raise DomainError("Automaton needs at least one state and a valid initial state")
        for q, row in enumerate(self.transitions):
            if len(row) != width or not all(0 <= t < n for t in row):
                raise DomainError(f"State {q} needs {width} transitions into 0..{n - 1}")
        if not all(0 <= q < n for q in self.accepting):
            raise DomainError("Accepting state out of range")
        object.__setattr__(self, "_table", np.asarray(self.transitions, dtype=np.int64).reshape(n, width))

    @classmethod
    def build(
        cls,
        tracks: Sequence[str],
        rows: Iterable[Sequence[int]],
        accepting: Iterable[int],
        initial: int = 0,
    ) -> "TrackAutomaton":
        return cls(tuple(tracks), tuple(tuple(int(t) for t in row) for row in rows), frozenset(accepting), initial)

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def table(self) -> np.ndarray:
        """Transition table as an int64 array of shape (states, symbols)."""
        return self._table

    @property
    def symbol_count(self) -> int:
        return 1 << len(self.tracks)

    @property
    def accepting_mask(self) -> np.ndarray:
        mask = np.zeros(self.state_count, dtype=bool)
        mask[list(self.accepting)] = True
        return mask

    def column(self, symbol: int) -> Tuple[int, ...]:
        """Digits of each track in a symbol, in track order."""
        return tuple((symbol >> j) & 1 for j in range(len(self.tracks)))

    def to_text(self) -> str:
        lines = [
            "tracks " + " ".join(self.tracks),
            f"states {self.state_count} initial {self.initial}",
            "accepting " + " ".join(str(q) for q in sorted(self.accepting)),
        ]
        for q, row in enumerate(self.transitions):
            lines.append(f"{q} " + " ".join(str(t) for t in row))
        return "\n".join(line.rstrip() for line in lines) + "\n"

    @classmethod
    def from_text(cls, text: str, source: Union[str, Path] = "<text>") -> "TrackAutomaton":
        lines = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        if len(lines) < 3 or lines[0][0] != "tracks" or lines[1][0] != "states" or lines[2][0] != "accepting":
            raise ArtifactFormatError(source, "expected 'tracks', 'states' and 'accepting' header lines")
        tracks = lines[0][1:]
        try:
            count, initial = int(lines[1][1]), int(lines[1][3])
            accepting = [int(q) for q in lines[2][1:]]
            body = {int(parts[0]): [int(t) for t in parts[1:]] for parts in lines[3:]}
        except (ValueError, IndexError) as e:
            raise ArtifactFormatError(source, f"bad automaton field: {e}")
        if sorted(body) != list(range(count)):
            raise ArtifactFormatError(source, f"expected transition lines for states 0..{count - 1}")
        try:
            return cls.build(tracks, [body[q] for q in range(count)], accepting, initial)
        except DomainError as e:
            raise ArtifactFormatError(source, str(e))

    def to_dot(self, name: str = "automaton") -> str:
        """Edges sharing endpoints are merged into one multi-line label of digit tuples."""
        lines = [f"digraph {name} {{", "  rankdir=LR;", "  start [shape=point];"]
        for q in range(self.state_count):
            shape = "doublecircle" if q in self.accepting else "circle"
            lines.append(f'  q{q} [shape={shape}, label="{q}"];')
        lines.append(f"  start -> q{self.initial};")
        header = ",".join(self.tracks)
        for q, row in enumerate(self.transitions):
            grouped: Dict[int, List[str]] = {}
            for symbol, t in enumerate(row):
                grouped.setdefault(t, []).append("".join(str(b) for b in self.column(symbol)) or "()")
            for t, labels in grouped.items():
                label = "\\n".join(labels)
                lines.append(f'  q{q} -> q{t} [label="{label}"];')
        lines.append(f'  label="tracks: {header}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def constant_automaton(value: bool, tracks: Sequence[str] = ()) -> TrackAutomaton:
    """Accepts everything (value True) or nothing over the given tracks."""
    tracks = tuple(sorted(tracks))
    return TrackAutomaton.build(tracks, [[0] * (1 << len(tracks))], [0] if value else [])


def minimize(a: TrackAutomaton) -> TrackAutomaton:
    rows, labels, initial = quotient(a.transitions, [q in a.accepting for q in range(a.state_count)], a.initial)
    return TrackAutomaton.build(a.tracks, rows, [q for q, accept in enumerate(labels) if accept], initial)


def complement(a: TrackAutomaton) -> TrackAutomaton:
    flipped = frozenset(range(a.state_count)) - a.accepting
    return TrackAutomaton(a.tracks, a.transitions, flipped, a.initial)


def isomorphic(a: TrackAutomaton, b: TrackAutomaton) -> bool:
    """Same tracks and identical canonical minimal forms."""
    return minimize(a) == minimize(b)


def is_padding_closed(a: TrackAutomaton) -> bool:
    """A leading all-zero column never changes acceptance."""
    m = minimize(a)
    return m.transitions[m.initial][0] == m.initial


def symbol_map(source: Sequence[str], target: Sequence[str]) -> np.ndarray:
    """For each symbol over target tracks, the symbol over source tracks (source must be a subset)."""
    missing = set(source) - set(target)
    if missing:
        raise DomainError(f"Tracks {sorted(missing)} are not among {list(target)}")
    symbols = np.arange(1 << len(target), dtype=np.int64)
    mapped = np.zeros_like(symbols)
    for j, name in enumerate(source):
        mapped |= ((symbols >> target.index(name)) & 1) << j
    return mapped


def product(
    a: TrackAutomaton,
    b: TrackAutomaton,
    op: str,
    ceiling: int = DEFAULT_STATE_CEILING,
    context: str = "",
) -> TrackAutomaton:
    """Boolean combination over the union of both track sets; missing tracks are unconstrained."""
    if op not in BOOLEAN_OPS:
        raise DomainError(f"Unknown boolean operator {op!r}")
    accept = BOOLEAN_OPS[op]
    tracks = tuple(sorted(set(a.tracks) | set(b.tracks)))
    to_a = symbol_map(a.tracks, tracks).tolist()
    to_b = symbol_map(b.tracks, tracks).tolist()
    start = (a.initial, b.initial)
    index = {start: 0}
    queue = deque([start])
    rows: List[List[int]] = []
    while queue:
        p, q = queue.popleft()
        row_a, row_b = a.transitions[p], b.transitions[q]
        row = []
        for sa, sb in zip(to_a, to_b):
            pair = (row_a[sa], row_b[sb])
            if pair not in index:
                index[pair] = len(index)
                if len(index) > ceiling:
                    raise StateCeilingError(context or f"product {op}", ceiling)
                queue.append(pair)
            row.append(index[pair])
        rows.append(row)
    accepting = [i for (p, q), i in index.items() if accept(p in a.accepting, q in b.accepting)]
    return minimize(TrackAutomaton.build(tracks, rows, accepting))


def relabel(a: TrackAutomaton, names: Mapping[str, str]) -> TrackAutomaton:
    """Rename tracks; tracks sent to the same name must carry equal values."""
    new_tracks = tuple(sorted({names.get(t, t) for t in a.tracks}))
    symbols = np.arange(1 << len(new_tracks), dtype=np.int64)
    old = np.zeros_like(symbols)
    for j, track in enumerate(a.tracks):
        old |= ((symbols >> new_tracks.index(names.get(track, track))) & 1) << j
    rows = a.table[:, old]
    return minimize(TrackAutomaton.build(new_tracks, rows.tolist(), a.accepting, a.initial))


def project(
    a: TrackAutomaton,
    track: str,
    ceiling: int = DEFAULT_STATE_CEILING,
    context: str = "",
) -> TrackAutomaton:
    """Existentially erase one track.

    The erased value may need more digits than the others, so the start set
    is every state reachable by reading columns that are zero on the
    surviving tracks. Subset construction then minimization follow.
    """
    if track not in a.tracks:
        raise DomainError(f"Track {track!r} is not one of {list(a.tracks)}")
    t = a.tracks.index(track)
    rest = tuple(name for name in a.tracks if name != track)
    low = (1 << t) - 1
    erased_pairs = []
    for s in range(1 << len(rest)):
        full = (s & low) | ((s >> t) << (t + 1))
        erased_pairs.append((full, full | (1 << t)))

    def step(states: Iterable[int], symbol: int) -> FrozenSet[int]:
        s0, s1 = erased_pairs[symbol]
        return frozenset(a.transitions[q][s] for q in states for s in (s0, s1))

    start = {a.initial}
    frontier = [a.initial]
    while frontier:
        reached = step(frontier, 0) - start
        start |= reached
        frontier = list(reached)

    initial = frozenset(start)
    index = {initial: 0}
    queue = deque([initial])
    rows: List[List[int]] = []
    while queue:
        subset = queue.popleft()
        row = []
        for s in range(1 << len(rest)):
            target = step(subset, s)
            if target not in index:
                index[target] = len(index)
                if len(index) > ceiling:
                    raise StateCeilingError(context or f"E{track}", ceiling)
                queue.append(target)
            row.append(index[target])
        rows.append(row)
    accepting = [i for subset, i in index.items() if subset & a.accepting]
    logger.debug(f"Projected {track!r}: {a.state_count} states -> {len(index)} subsets")
    return minimize(TrackAutomaton.build(rest, rows, accepting))


def read_automaton(path: Union[str, Path]) -> TrackAutomaton:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Automaton file not found: {path}")
    return TrackAutomaton.from_text(path.read_text(), source=path)
