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

"""Questions asked of a compiled automaton: truth, membership and enumeration."""

from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

import numpy as np

from vtmkit.exceptions import ArityError, DomainError
from vtmkit.logic.automaton import TrackAutomaton

DEFAULT_MAX_BITS = 64


def decide(a: TrackAutomaton) -> bool:
    """Truth value of a closed formula."""
    if a.tracks:
        raise ArityError(f"decide needs a closed formula, automaton has free tracks {list(a.tracks)}")
    return a.initial in a.accepting


def _check_tracks(a: TrackAutomaton, names: Sequence[str]) -> None:
    if sorted(names) != list(a.tracks):
        raise ArityError(f"Assignment names {sorted(names)} but automaton tracks are {list(a.tracks)}")


def membership(a: TrackAutomaton, assignment: Mapping[str, int]) -> bool:
    _check_tracks(a, list(assignment))
    values = [int(assignment[t]) for t in a.tracks]
    if any(v < 0 for v in values):
        raise DomainError(f"Assignment values must be naturals, got {dict(assignment)}")
    state = a.initial
    for p in range(max((v.bit_length() for v in values), default=0) - 1, -1, -1):
        symbol = sum(((v >> p) & 1) << j for j, v in enumerate(values))
        state = a.transitions[state][symbol]
    return state in a.accepting


def membership_many(a: TrackAutomaton, columns: Mapping[str, Union[np.ndarray, Sequence[int]]]) -> np.ndarray:
    """Vectorised membership; the value arrays are broadcast against each other."""
    _check_tracks(a, list(columns))
    if not a.tracks:
        return np.asarray(a.initial in a.accepting)
    arrays = np.broadcast_arrays(*[np.asarray(columns[t], dtype=np.int64) for t in a.tracks])
    if any(arr.size and int(arr.min()) < 0 for arr in arrays):
        raise DomainError("Assignment values must be naturals")
    width = max(int(arr.max()).bit_length() if arr.size else 0 for arr in arrays)
    states = np.full(arrays[0].shape, a.initial, dtype=np.int64)
    for p in range(width - 1, -1, -1):
        symbols = np.zeros(arrays[0].shape, dtype=np.int64)
        for j, arr in enumerate(arrays):
            symbols |= ((arr >> p) & 1) << j
        states = a.table[states, symbols]
    return a.accepting_mask[states]


def enumerate_accepted(a: TrackAutomaton, limit: int, max_bits: int = DEFAULT_MAX_BITS) -> List[Dict[str, int]]:
    """Accepted assignments in shortlex order of their digit columns.

    Width w covers tuples whose largest value has exactly w digits; within a
    width, columns are tried in increasing symbol order. Search stops after
    limit results or when no width up to max_bits can be accepted.
    """
    results: List[Dict[str, int]] = []
    if limit <= 0:
        return results
    if a.initial in a.accepting:
        results.append({t: 0 for t in a.tracks})
    if not a.tracks:
        return results[:limit]

    # reach[r]: states from which some r more columns lead to acceptance
    reach = [a.accepting_mask]
    table = a.table
    for width in range(1, max_bits + 1):
        if len(results) >= limit:
            break
        reach.append(reach[-1][table].any(axis=1))
        if not reach[-1].any():
            break
        if not reach[width][a.initial]:
            continue
        for values in _walk(a, reach, width):
            results.append(dict(zip(a.tracks, values)))
            if len(results) >= limit:
                break
    return results


def _walk(a: TrackAutomaton, reach: List[np.ndarray], width: int) -> Iterator[Tuple[int, ...]]:
    n = len(a.tracks)

    def descend(state: int, depth: int, values: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if depth == width:
            yield values
            return
        remaining = width - depth - 1
        for symbol in range(1 if depth == 0 else 0, a.symbol_count):
            nxt = a.transitions[state][symbol]
            if reach[remaining][nxt]:
                yield from descend(nxt, depth + 1, tuple(2 * v + ((symbol >> j) & 1) for j, v in enumerate(values)))

    yield from descend(a.initial, 0, (0,) * n)
