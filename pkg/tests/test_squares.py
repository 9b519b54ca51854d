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
Tests for square detection: the Main-Lorentz scanner against the naive one.
"""

import numpy as np
import pytest

from vtmkit.exceptions import DomainError
from vtmkit.words import (
    SquareWitness,
    Word,
    find_square,
    find_square_naive,
    is_squarefree,
    squarefree_words,
    vtm_prefix,
)
from vtmkit.words.squares import ends_with_square, find_square_main_lorentz


class TestFindSquare:
    """Known witnesses."""

    @pytest.mark.parametrize("method", ["naive", "main-lorentz"])
    def test_known_witnesses(self, method):
        cases = {
            "00": (0, 1),
            "0101": (0, 2),
            "1001": (1, 1),
            "010010": (0, 3),
            "12": None,
            "": None,
            "0": None,
            "0120210121": None,
        }
        for text, expected in cases.items():
            witness = find_square(Word.from_string(text), method=method)
            assert (None if witness is None else (witness.position, witness.period)) == expected, text

    def test_minimal_position_beats_minimal_period(self):
        witness = find_square(Word.from_string("0120121"), method="main-lorentz")
        assert witness == SquareWitness(0, 3)

    def test_witness_holds(self):
        w = Word.from_string("21012012")
        witness = find_square(w)
        assert witness is not None
        assert witness.holds_in(w)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            find_square(Word.from_string("00"), method="suffix-tree")

    def test_invalid_witness(self):
        with pytest.raises(DomainError):
            SquareWitness(0, 0)


class TestScannersAgree:
    """The divide-and-conquer scanner must return the naive scanner's witness."""

    @pytest.mark.parametrize("alphabet_size", [2, 3, 4])
    def test_random_words(self, alphabet_size):
        rng = np.random.default_rng(alphabet_size)
        for _ in range(1000):
            n = int(rng.integers(1, 201))
            w = Word(rng.integers(0, alphabet_size, size=n), alphabet_size)
            assert find_square_main_lorentz(w) == find_square_naive(w), w

    def test_random_ternary_words_up_to_300_letters(self):
        rng = np.random.default_rng(7)
        for _ in range(400):
            n = int(rng.integers(1, 300))
            w = Word(rng.integers(0, 3, size=n), 3)
            assert find_square_main_lorentz(w) == find_square_naive(w), w

    @pytest.mark.parametrize("n", [1, 2, 10, 100, 1000, 3000])
    def test_vtm_prefixes(self, n):
        w = vtm_prefix(n)
        assert find_square_main_lorentz(w) is None
        assert find_square_naive(w) is None

    @pytest.mark.slow
    def test_vtm_prefix_of_ten_thousand_letters(self):
        w = vtm_prefix(10**4)
        assert find_square_main_lorentz(w) == find_square_naive(w) is None

    def test_squarefree_word_with_one_defect(self):
        base = vtm_prefix(2000).letters.copy()
        for position in (0, 1, 517, 1998):
            letters = base.copy()
            letters[position + 1] = letters[position]
            w = Word(letters, 3)
            assert find_square_main_lorentz(w) == find_square_naive(w)

    def test_large_alphabet(self):
        w = Word(list(range(50)) + list(range(20, 50)), 50)
        assert find_square(w, method="main-lorentz") == SquareWitness(20, 30)


class TestSquarefree:
    """Squarefreeness of vtm prefixes and small word lists."""

    def test_vtm_prefix_is_squarefree(self):
        assert is_squarefree(vtm_prefix(10**5))

    @pytest.mark.slow
    def test_vtm_million_letters(self):
        assert is_squarefree(vtm_prefix(10**6))

    def test_squarefree_word_counts(self):
        counts = [len([w for w in squarefree_words(8) if len(w) == n]) for n in range(1, 9)]
        assert counts == [3, 6, 12, 18, 30, 42, 60, 78]

    def test_ends_with_square(self):
        assert ends_with_square([0, 1, 2, 1, 2])
        assert not ends_with_square([0, 1, 2, 0, 2])
