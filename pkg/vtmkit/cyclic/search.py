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

"""Depth-first search for cyclic squarefree k-uniform morphisms."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from vtmkit.cyclic.morphisms import CyclicUniformMorphism, as_morphism, is_squarefree_morphism
from vtmkit.exceptions import DomainError, SearchLimitError
from vtmkit.words import ends_with_square

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**7
EXHAUSTIVE_MAX_K = 13


class SearchMode(str, Enum):
    FIRST = "first"
    EXHAUSTIVE = "exhaustive"


class SearchStatus(str, Enum):
    FOUND = "found"
    # exhaustive mode only: the whole tree holds no solution
    NONE = "none"
    BUDGET_EXHAUSTED = "budget_exhausted"
    NOT_FOUND = "not_found"


@dataclass
class SearchOutcome:
    k: int
    mode: SearchMode
    status: SearchStatus
    morphisms: List[CyclicUniformMorphism] = field(default_factory=list)
    nodes: int = 0

    @property
    def first(self) -> Optional[CyclicUniformMorphism]:
        return self.morphisms[0] if self.morphisms else None


@dataclass
class _SubtreeResult:
    found: List[Tuple[int, ...]]
    nodes: int
    exhausted: bool


def adjacent_images_squarefree(image0: Sequence[int]) -> bool:
    """True if h(0)h(1) and h(0)h(2) are squarefree.

    h(i+1)h(j+1) is the rotation of h(i)h(j), so these two cover every pair
    of distinct letters. image0 itself must already be squarefree; only
    squares crossing into the second image are looked for.
    """
    for shift in (1, 2):
        letters = list(image0)
        for a in image0:
            letters.append((a + shift) % 3)
            if ends_with_square(letters):
                return False
    return True


class _Walker:
    def __init__(self, k: int, first_only: bool, budget: Optional[int]):
        self.k = k
        self.first_only = first_only
        self.budget = budget
        self.nodes = 0
        self.exhausted = False
        self.found: List[Tuple[int, ...]] = []

    def walk(self, word: List[int]) -> bool:
        """Visit the subtree below word; True means stop the whole search."""
        if self.budget is not None and self.nodes >= self.budget:
            self.exhausted = True
            return True
        self.nodes += 1
        if len(word) == self.k:
            if adjacent_images_squarefree(word) and is_squarefree_morphism(
                as_morphism(CyclicUniformMorphism(tuple(word)))
            ):
                self.found.append(tuple(word))
                return self.first_only
            return False
        for letter in (0, 1, 2):
            word.append(letter)
            stop = not ends_with_square(word) and self.walk(word)
            word.pop()
            if stop:
                return True
        return False


def _search_subtree(k: int, root: Tuple[int, ...], first_only: bool, budget: Optional[int]) -> _SubtreeResult:
    walker = _Walker(k, first_only, budget)
    walker.walk(list(root))
    return _SubtreeResult(walker.found, walker.nodes, walker.exhausted)


def _roots(k: int) -> List[Tuple[int, ...]]:
    # image0 starts with 0, and 00 is a square
    return [(0,)] if k == 1 else [(0, 1), (0, 2)]


def search_cyclic_squarefree(
    k: int,
    mode: SearchMode = SearchMode.FIRST,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
    exhaustive_max_k: int = EXHAUSTIVE_MAX_K,
) -> SearchOutcome:
    """Search image0 in lexicographic order.

    Each subtree below the second letter gets the full node budget, so the
    outcome does not depend on the number of workers. First mode never
    claims nonexistence.
    """
    mode = SearchMode(mode)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if mode == SearchMode.EXHAUSTIVE and k > exhaustive_max_k:
        raise SearchLimitError(f"Exhaustive search is capped at k <= {exhaustive_max_k}, got k={k}")
    first_only = mode == SearchMode.FIRST
    budget = node_budget if first_only else None
    roots = _roots(k)

    results: List[_SubtreeResult] = []
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(roots))) as pool:
            futures = [pool.submit(_search_subtree, k, root, first_only, budget) for root in roots]
            results = [f.result() for f in futures]
    else:
        for root in roots:
            result = _search_subtree(k, root, first_only, budget)
            results.append(result)
            if first_only and (result.found or result.exhausted):
                break

    outcome = SearchOutcome(k=k, mode=mode, status=SearchStatus.NOT_FOUND)
    for result in results:
        outcome.nodes += result.nodes
        if first_only:
            if result.found:
                outcome.status = SearchStatus.FOUND
                outcome.morphisms = [CyclicUniformMorphism(result.found[0])]
                break
            if result.exhausted:
                outcome.status = SearchStatus.BUDGET_EXHAUSTED
                break
        else:
            outcome.morphisms.extend(CyclicUniformMorphism(image0) for image0 in result.found)
    if not first_only:
        outcome.status = SearchStatus.FOUND if outcome.morphisms else SearchStatus.NONE
    logger.debug(f"k={k} {mode.value}: {outcome.status.value} after {outcome.nodes} nodes")
    return outcome
