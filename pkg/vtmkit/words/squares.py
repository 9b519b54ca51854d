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
Square detection.

Two scanners share one contract: return the square xx with the smallest
starting position, ties broken by the smallest period.

* ``naive`` walks every period and tracks runs of w[i] == w[i+p]; it is
  quadratic and serves as the reference oracle.
* ``main-lorentz`` splits the word recursively and, at each split point,
  finds every square crossing it from longest-common-extension queries.
  Extensions come from suffix arrays of the word and of its reverse with a
  sparse-table minimum over the LCP array, so one level of the recursion is
  a handful of vectorised numpy passes and the whole scan is O(n log n).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from vtmkit.exceptions import DomainError
from vtmkit.words.word import Word, _ragged_offsets

logger = logging.getLogger(__name__)

NAIVE_CUTOFF = 128
METHODS = ("auto", "main-lorentz", "naive")


@dataclass(frozen=True, order=True)
class SquareWitness:
    """Occurrence of a square: word[position:position+period] repeated once."""

    position: int
    period: int

    def __post_init__(self) -> None:
        if self.period < 1 or self.position < 0:
            raise DomainError(f"Invalid square witness {self}")

    @property
    def end(self) -> int:
        return self.position + 2 * self.period

    def holds_in(self, w: Word) -> bool:
        if self.end > len(w):
            return False
        first = w.letters[self.position:self.position + self.period]
        second = w.letters[self.position + self.period:self.end]
        return bool(np.array_equal(first, second))


def find_square_naive(w: Word, first_only: bool = False) -> Optional[SquareWitness]:
    """Reference scanner: for each period p, look for p consecutive matches w[i] == w[i+p]."""
    s = w.letters.tolist()
    n = len(s)
    best: Optional[Tuple[int, int]] = None
    for p in range(1, n // 2 + 1):
        limit = n - 2 * p if best is None else min(n - 2 * p, best[0] - 1)
        run = 0
        for j in range(0, limit + p):
            if s[j] == s[j + p]:
                run += 1
                if run >= p:
                    start = j - p + 1
                    if best is None or start < best[0]:
                        best = (start, p)
                    break
            else:
                run = 0
        if best is not None and (first_only or best[0] == 0):
            break
    return SquareWitness(*best) if best is not None else None


def _suffix_array(s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Prefix-doubling suffix array; returns (sa, rank)."""
    n = s.size
    # ranks stay below n so rank * (n + 1) + second + 1 is injective
    rank = np.unique(s, return_inverse=True)[1].astype(np.int64).reshape(-1)
    sa = np.argsort(rank, kind="stable")
    k = 1
    while n > 1:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[:n - k] = rank[k:]
        key = rank * (n + 1) + (second + 1)
        sa = np.argsort(key, kind="stable")
        sorted_key = key[sa]
        boundary = np.empty(n, dtype=bool)
        boundary[0] = True
        boundary[1:] = sorted_key[1:] != sorted_key[:-1]
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.cumsum(boundary) - 1
        if rank[sa[-1]] == n - 1:
            break
        k <<= 1
    return sa, rank


def _lcp_array(s: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai: lcp[r] = common prefix length of suffixes sa[r-1] and sa[r]."""
    text = s.tolist()
    sa_list = sa.tolist()
    rank_list = rank.tolist()
    n = len(text)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank_list[i]
        if r == 0:
            h = 0
            continue
        j = sa_list[r - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int32)


class _CommonExtension:
    """Longest common extension queries on a fixed letter array."""

    def __init__(self, s: np.ndarray) -> None:
        self.n = n = int(s.size)
        sa, self.rank = _suffix_array(s)
        lcp = _lcp_array(s, sa, self.rank)
        levels = max(1, n.bit_length())
        table = np.full((levels, max(n, 1)), np.iinfo(np.int32).max, dtype=np.int32)
        table[0, :n] = lcp
        for j in range(1, levels):
            half = 1 << (j - 1)
            width = n - (1 << j) + 1
            if width <= 0:
                break
            table[j, :width] = np.minimum(table[j - 1, :width], table[j - 1, half:half + width])
        self.table = table

    def extend(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Length of the longest common prefix of s[a:] and s[b:], elementwise, for a != b."""
        out = np.zeros(a.shape, dtype=np.int64)
        valid = (a < self.n) & (b < self.n)
        if not valid.any():
            return out
        ra = self.rank[a[valid]]
        rb = self.rank[b[valid]]
        lo = np.minimum(ra, rb)
        hi = np.maximum(ra, rb)
        level = np.frexp((hi - lo).astype(np.float64))[1] - 1
        left = self.table[level, lo + 1]
        right = self.table[level, hi - (1 << level) + 1]
        out[valid] = np.minimum(left, right)
        return out


def _pick(best: Optional[Tuple[int, int]], starts: np.ndarray, periods: np.ndarray) -> Optional[Tuple[int, int]]:
    if starts.size == 0:
        return best
    order = np.lexsort((periods, starts))
    candidate = (int(starts[order[0]]), int(periods[order[0]]))
    if best is None or candidate < best:
        return candidate
    return best


def find_square_main_lorentz(w: Word, first_only: bool = False) -> Optional[SquareWitness]:
    """Divide-and-conquer square finder with vectorised cross-border checks."""
    s = w.letters
    n = len(w)
    if n < 2:
        return None
    forward = _CommonExtension(s)
    backward = _CommonExtension(s[::-1].copy())

    best: Optional[Tuple[int, int]] = None
    lo = np.array([0], dtype=np.int64)
    hi = np.array([n], dtype=np.int64)
    level = 0
    while lo.size:
        mid = (lo + hi) // 2

        # Squares w[i:i+2p] with i < mid <= i+p: anchor the pair (mid, mid+p).
        counts = hi - mid
        mids = np.repeat(mid, counts)
        periods = _ragged_offsets(counts) + 1
        ahead = forward.extend(mids, mids + periods)
        behind = backward.extend(n - mids, n - mids - periods)
        first = np.maximum(mids - behind, mids - periods)
        last = np.minimum(mids - 1, mids + ahead - periods)
        hit = first <= last
        best = _pick(best, first[hit], periods[hit])

        # Squares with i+p < mid < i+2p: anchor the pair (mid-p, mid).
        counts = mid - lo
        mids = np.repeat(mid, counts)
        periods = _ragged_offsets(counts) + 1
        anchor = mids - periods
        ahead = forward.extend(anchor, mids)
        behind = backward.extend(n - anchor, n - mids)
        first = np.maximum(anchor - behind, mids - 2 * periods + 1)
        last = np.minimum(anchor - 1, mids - 2 * periods + ahead)
        hit = first <= last
        best = _pick(best, first[hit], periods[hit])

        if best is not None and first_only:
            break

        child_lo = np.concatenate([lo, mid])
        child_hi = np.concatenate([mid, hi])
        keep = child_hi - child_lo >= 2
        lo, hi = child_lo[keep], child_hi[keep]
        level += 1

    logger.debug(f"Main-Lorentz scan of {n} letters finished after {level} levels, witness={best}")
    return SquareWitness(*best) if best is not None else None


def find_square(w: Word, method: str = "auto", first_only: bool = False) -> Optional[SquareWitness]:
    """Return the square with minimal position (then minimal period), or None.

    With first_only=True any witness may be returned; use it for yes/no questions.
    """
    if method not in METHODS:
        raise DomainError(f"Unknown square-finding method {method!r}; expected one of {METHODS}")
    if method == "naive" or (method == "auto" and len(w) <= NAIVE_CUTOFF):
        return find_square_naive(w, first_only=first_only)
    return find_square_main_lorentz(w, first_only=first_only)


def is_squarefree(w: Word, method: str = "auto") -> bool:
    return find_square(w, method=method, first_only=True) is None


def squarefree_words(max_len: int, alphabet_size: int = 3, min_len: int = 1) -> List[Word]:
    """All squarefree words with min_len <= length <= max_len, in length-then-lexicographic order."""
    by_length: List[List[List[int]]] = [[[]]]
    for length in range(1, max_len + 1):
        layer = []
        for prefix in by_length[-1]:
            for letter in range(alphabet_size):
                candidate = prefix + [letter]
                if not ends_with_square(candidate):
                    layer.append(candidate)
        by_length.append(layer)
    return [
        Word(letters, alphabet_size)
        for length in range(max(min_len, 0), max_len + 1)
        for letters in by_length[length]
        if length >= 1 or min_len == 0
    ]


def ends_with_square(letters: List[int]) -> bool:
    """True if some square is a suffix of letters."""
    n = len(letters)
    for p in range(1, n // 2 + 1):
        if letters[n - p:] == letters[n - 2 * p:n - p]:
            return True
    return False
