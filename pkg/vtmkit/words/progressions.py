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
Arithmetic-progression subsequences and factor-occurrence statistics.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set

import numpy as np

from vtmkit.exceptions import DomainError
from vtmkit.words.word import Word, vtm_prefix

logger = logging.getLogger(__name__)

REPEATABLE_LETTERS = (0, 2)


@dataclass(frozen=True)
class Theorem1Evidence:
    """v_{kn} = v_{k(n+1)} = letter, with letter in {0, 2}."""

    k: int
    n: int
    letter: int

    def __post_init__(self) -> None:
        if self.k < 2 or self.n < 0 or self.letter not in REPEATABLE_LETTERS:
            raise DomainError(f"Invalid progression square evidence {self}")

    @property
    def positions(self) -> tuple:
        return (self.k * self.n, self.k * (self.n + 1))

    def holds_in(self, w: Word) -> bool:
        i, j = self.positions
        return j < len(w) and w[i] == self.letter and w[j] == self.letter


def subsequence_ap(w: Word, k: int, offset: int = 0) -> Word:
    """The word whose n-th letter is w[offset + k*n]."""
    if k < 1:
        raise DomainError(f"Progression step must be >= 1, got {k}")
    if offset < 0:
        raise DomainError(f"Progression offset must be >= 0, got {offset}")
    return Word(w.letters[offset::k], w.alphabet_size)


def _first_repeat(letters: np.ndarray) -> Optional[int]:
    """Least n with letters[n] == letters[n+1] in {0, 2}."""
    if letters.size < 2:
        return None
    head = letters[:-1]
    mask = (head == letters[1:]) & np.isin(head, REPEATABLE_LETTERS)
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def check_theorem1(k: int, prefix_len: int, prefix: Optional[Word] = None) -> Optional[Theorem1Evidence]:
    """Look for 00 or 22 in (v_{kn}) inside the first prefix_len letters of vtm.

    None means inconclusive at this prefix length, not a counterexample.
    """
    if k < 2:
        raise DomainError(f"k must be at least 2, got {k}")
    if prefix_len < k + 1:
        raise DomainError(f"A prefix of {prefix_len} letters holds fewer than two terms of (v_{{{k}n}})")
    if prefix is None:
        prefix = vtm_prefix(prefix_len)
    elif len(prefix) < prefix_len:
        raise DomainError(f"Supplied prefix has {len(prefix)} letters, need {prefix_len}")

    terms = prefix.letters[:prefix_len:k]
    n = _first_repeat(terms)
    if n is None:
        logger.debug(f"No 00/22 in (v_{{{k}n}}) within {prefix_len} letters")
        return None
    return Theorem1Evidence(k=k, n=n, letter=int(terms[n]))


def occurrence_positions(w: Word, factor: Word) -> np.ndarray:
    """Every i with w[i:i+|factor|] == factor, ascending."""
    m, n = len(factor), len(w)
    if m == 0:
        raise DomainError("Factor must be nonempty")
    if m > n:
        return np.zeros(0, dtype=np.int64)
    span = n - m + 1
    mask = np.ones(span, dtype=bool)
    for j, letter in enumerate(factor):
        mask &= w.letters[j:j + span] == letter
    return np.flatnonzero(mask)


def occurrence_residues(w: Word, factor: Word, k: int) -> Set[int]:
    """{ i mod k : factor occurs in w at position i }."""
    if k < 1:
        raise DomainError(f"Modulus must be >= 1, got {k}")
    positions = occurrence_positions(w, factor)
    return set(np.unique(positions % k).tolist())


def find_bounded_gap_factor(w: Word, k: int) -> Optional[int]:
    """Least i with w[i] = w[i+k] in {0, 2}: an occurrence of 0u0 or 2u2 with |u| = k-1."""
    if k < 1:
        raise DomainError(f"Gap must be >= 1, got {k}")
    s = w.letters
    if s.size <= k:
        return None
    head = s[:-k]
    mask = (head == s[k:]) & np.isin(head, REPEATABLE_LETTERS)
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def distinct_factors(w: Word, length: int) -> List[Word]:
    """The distinct factors of w of the given length, in lexicographic order."""
    if length < 1:
        raise DomainError(f"Factor length must be >= 1, got {length}")
    n = len(w)
    if length > n:
        return []
    base = w.alphabet_size
    span = n - length + 1
    codes = np.zeros(span, dtype=np.int64)
    for j in range(length):
        codes = codes * base + w.letters[j:j + span]
    factors = []
    for code in np.unique(codes).tolist():
        digits = []
        for _ in range(length):
            code, digit = divmod(code, base)
            digits.append(digit)
        factors.append(Word(digits[::-1], base))
    return factors
