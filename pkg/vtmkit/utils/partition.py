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

"""Moore partition refinement and breadth-first renumbering for complete automata."""

from collections import deque
from typing import Dict, Hashable, List, Mapping, Sequence, Tuple, Union


def refine_partition(transitions: Sequence[Sequence[int]], labels: Sequence[Hashable]) -> List[int]:
    """Return a block id per state; states share a block iff no input separates them."""
    ids: Dict[Hashable, int] = {}
    block = [ids.setdefault(label, len(ids)) for label in labels]
    count = len(ids)
    while True:
        signatures: Dict[Tuple[int, ...], int] = {}
        refined = [
            signatures.setdefault((block[q],) + tuple(block[t] for t in row), len(signatures))
            for q, row in enumerate(transitions)
        ]
        if len(signatures) == count:
            return refined
        block, count = refined, len(signatures)


def bfs_numbering(transitions: Union[Sequence[Sequence[int]], Mapping[int, Sequence[int]]], initial: int) -> Dict[int, int]:
    """Map reachable states to ids in breadth-first order, symbols tried in ascending order."""
    order = {initial: 0}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for t in transitions[q]:
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    return order


def quotient(
    transitions: Sequence[Sequence[int]],
    labels: Sequence[Hashable],
    initial: int,
) -> Tuple[List[Tuple[int, ...]], List[Hashable], int]:
    """Minimal, reachable, canonically numbered automaton equivalent to the input.

    Returns (transitions, labels, initial) with initial always 0.
    """
    block = refine_partition(transitions, labels)
    representative: Dict[int, int] = {}
    for q, b in enumerate(block):
        representative.setdefault(b, q)
    block_rows = {b: tuple(block[t] for t in transitions[q]) for b, q in representative.items()}
    order = bfs_numbering(block_rows, block[initial])
    rows: List[Tuple[int, ...]] = [()] * len(order)
    out: List[Hashable] = [None] * len(order)
    for b, new_id in order.items():
        rows[new_id] = tuple(order[t] for t in block_rows[b])
        out[new_id] = labels[representative[b]]
    return rows, out, 0
