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
Reconstruct a base-2 DFAO from a sequence by exploring its kernel.

Digits are read most-significant first, so after reading e digits whose
value is r the rest of the input only ever lands on indices 2^l * r + j with
0 <= j < 2^l. A kernel element (e, r) therefore stands for that block family,
listed level by level:

    v[r], v[2r], v[2r+1], v[4r], ..., v[4r+3], v[8r], ...

Reading bit b moves (e, r) to (e+1, 2r+b). Two elements whose families agree
on the first compare_len terms are merged. Bounded comparison alone could
merge elements that differ later, so the resulting automaton is checked
against the sequence on every n < verify_len before it is returned.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

import numpy as np
from importlib_resources import files

from vtmkit.dfao.automaton import DFAO, minimize_dfao, run_many
from vtmkit.exceptions import DomainError, KernelVerificationError, PreconditionError
from vtmkit.words.word import thue_morse_prefix, vtm_prefix

logger = logging.getLogger(__name__)

# Returns the first N letters of a sequence as an integer array.
SequenceOracle = Callable[[int], np.ndarray]

DEFAULT_COMPARE_LEN = 1 << 12
DEFAULT_VERIFY_LEN = 1 << 20
DEFAULT_MAX_STATES = 1 << 12


@dataclass(frozen=True)
class KernelElement:
    """e digits read, with value r."""

    e: int
    r: int

    def __post_init__(self) -> None:
        if self.e < 0 or not 0 <= self.r < (1 << self.e) or (self.e == 0 and self.r != 0):
            raise DomainError(f"Invalid kernel element (e={self.e}, r={self.r})")

    def child(self, bit: int) -> "KernelElement":
        return KernelElement(self.e + 1, 2 * self.r + bit)

    def indices(self, count: int) -> np.ndarray:
        """The first count indices of the block family, level by level."""
        parts: List[np.ndarray] = []
        remaining, level = count, 0
        while remaining > 0:
            width = min(1 << level, remaining)
            parts.append((self.r << level) + np.arange(width, dtype=np.int64))
            remaining -= width
            level += 1
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


class _Prefix:
    """Grows a prefix of the oracle on demand, doubling each time."""

    def __init__(self, oracle: SequenceOracle, initial: int) -> None:
        self.oracle = oracle
        self.letters = np.asarray(oracle(max(initial, 1)), dtype=np.int64)

    def take(self, indices: np.ndarray) -> np.ndarray:
        need = int(indices.max()) + 1 if indices.size else 0
        if need > self.letters.size:
            size = self.letters.size
            while size < need:
                size *= 2
            self.letters = np.asarray(self.oracle(size), dtype=np.int64)
            if self.letters.size < need:
                raise PreconditionError(f"Sequence oracle returned {self.letters.size} letters, need {need}")
        return self.letters[indices]


def kernel_dfao(
    seq: SequenceOracle,
    compare_len: int = DEFAULT_COMPARE_LEN,
    verify_len: int = DEFAULT_VERIFY_LEN,
    max_states: int = DEFAULT_MAX_STATES,
) -> DFAO:
    """Breadth-first kernel exploration from (0, 0), then minimization and verification."""
    if compare_len < 1 or verify_len < 1:
        raise DomainError("compare_len and verify_len must be positive")
    prefix = _Prefix(seq, max(verify_len, compare_len))

    root = KernelElement(0, 0)
    ids: Dict[bytes, int] = {}
    elements: List[KernelElement] = []

    def state_of(element: KernelElement) -> Tuple[int, bool]:
        key = prefix.take(element.indices(compare_len)).tobytes()
        if key in ids:
            return ids[key], False
        if len(ids) >= max_states:
            raise PreconditionError(
                f"More than {max_states} kernel classes at compare_len={compare_len}; "
                "the sequence does not look 2-automatic"
            )
        ids[key] = len(elements)
        elements.append(element)
        return ids[key], True

    state_of(root)
    rows: List[Tuple[int, int]] = []
    queue = deque([0])
    while queue:
        q = queue.popleft()
        element = elements[q]
        row = []
        for bit in (0, 1):
            target, fresh = state_of(element.child(bit))
            if fresh:
                queue.append(target)
            row.append(target)
        rows.append((row[0], row[1]))

    outputs = [int(prefix.take(np.array([el.r]))[0]) for el in elements]
    raw = DFAO.from_rows(rows, outputs)
    dfao = minimize_dfao(raw)
    logger.info(f"Kernel exploration found {raw.state_count} classes, {dfao.state_count} after minimization")

    verify_dfao(dfao, prefix.take(np.arange(verify_len, dtype=np.int64)))
    return dfao


def verify_dfao(dfao: DFAO, letters: np.ndarray) -> None:
    """Raise KernelVerificationError at the first n where run(dfao, n) != letters[n]."""
    produced = run_many(dfao, np.arange(letters.size, dtype=np.int64))
    mismatch = np.flatnonzero(produced != letters)
    if mismatch.size:
        i = int(mismatch[0])
        raise KernelVerificationError(i, int(letters[i]), int(produced[i]))
    logger.debug(f"DFAO verified against {letters.size} terms")


def vtm_oracle(length: int) -> np.ndarray:
    return vtm_prefix(length).letters


def thue_morse_oracle(length: int) -> np.ndarray:
    return thue_morse_prefix(length).letters


def build_vtm_dfao(compare_len: int = DEFAULT_COMPARE_LEN, verify_len: int = DEFAULT_VERIFY_LEN) -> DFAO:
    """Rebuild the vtm DFAO from morphic generation."""
    return kernel_dfao(vtm_oracle, compare_len=compare_len, verify_len=verify_len)


VTM_DFAO_RESOURCE = "vtm.dfao"


def golden_vtm_text() -> str:
    return files("vtmkit.data").joinpath(VTM_DFAO_RESOURCE).read_text()


@lru_cache(maxsize=1)
def load_vtm_dfao() -> DFAO:
    """The packaged golden vtm DFAO."""
    return DFAO.from_text(golden_vtm_text(), source=f"vtmkit.data/{VTM_DFAO_RESOURCE}")
