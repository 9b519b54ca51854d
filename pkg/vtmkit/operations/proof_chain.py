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
Walk the odd / even / power-of-two case analysis for a single k.

Odd k needs a 0u0 or 2u2 factor of length k+1 occurring at a multiple of k.
For even k = 2^a k' with k' >= 3 odd, the odd witness i for k' is moved to
2^a i using the doubling property of the automaton. Powers of two read
v_k = v_2k = 2 straight off the automaton.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from vtmkit.dfao import DFAO, decompose_even, load_vtm_dfao, run
from vtmkit.exceptions import DomainError
from vtmkit.words import Theorem1Evidence, Word, check_theorem1, find_bounded_gap_factor

logger = logging.getLogger(__name__)


@dataclass
class ProofStep:
    description: str
    ok: bool


@dataclass
class ProofWalk:
    k: int
    branch: str
    steps: List[ProofStep] = field(default_factory=list)
    evidence: Optional[Theorem1Evidence] = None

    @property
    def confirmed(self) -> bool:
        return self.evidence is not None and all(step.ok for step in self.steps)

    def add(self, description: str, ok: bool) -> bool:
        self.steps.append(ProofStep(description, ok))
        return ok


def _odd_case(walk: ProofWalk, k: int, prefix: Word) -> Optional[Theorem1Evidence]:
    gap = find_bounded_gap_factor(prefix, k)
    if not walk.add(f"factor 0u0 or 2u2 of length {k + 1} occurs" + (f" at {gap}" if gap is not None else ""),
                    gap is not None):
        return None
    evidence = check_theorem1(k, len(prefix), prefix)
    if evidence is None:
        walk.add(f"no occurrence at a multiple of {k} within {len(prefix)} letters", False)
        return None
    i, _ = evidence.positions
    walk.add(f"occurrence at i={i}, i = 0 mod {k}, letter {evidence.letter}", True)
    return evidence


def proof_walk(k: int, prefix: Word, dfao: Optional[DFAO] = None) -> ProofWalk:
    """Follow the branch of the case analysis that applies to k.

    The prefix serves the odd searches; automaton facts use dfao (the
    packaged vtm automaton by default). An unconfirmed walk is inconclusive.
    """
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    dfao = dfao or load_vtm_dfao()
    a, odd = decompose_even(k)

    if a == 0:
        walk = ProofWalk(k, "odd")
        walk.evidence = _odd_case(walk, k, prefix)
        return walk

    if odd == 1:
        walk = ProofWalk(k, "power-of-two")
        here, there = run(dfao, k), run(dfao, 2 * k)
        if walk.add(f"v_{k} = {here} and v_{2 * k} = {there} read from the automaton", here == there == 2):
            walk.evidence = Theorem1Evidence(k=k, n=1, letter=2)
        return walk

    walk = ProofWalk(k, "even")
    walk.add(f"k = 2^{a} * {odd}", True)
    base = _odd_case(walk, odd, prefix)
    if base is None:
        return walk
    i, j = base.positions
    scale = 1 << a
    moved = (run(dfao, scale * i), run(dfao, scale * j))
    if walk.add(f"v_{scale * i} = {moved[0]} and v_{scale * j} = {moved[1]} after doubling {a} times",
                moved == (base.letter, base.letter)):
        walk.evidence = Theorem1Evidence(k=k, n=base.n, letter=base.letter)
    logger.debug(f"k={k}: {walk.branch} branch, confirmed={walk.confirmed}")
    return walk
