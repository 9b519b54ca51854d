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
Tests for cyclic uniform morphisms, their search and the embedding.
"""

import itertools
from unittest.mock import patch

import numpy as np
import pytest

from vtmkit.cyclic import (
    CyclicUniformMorphism,
    SearchMode,
    SearchStatus,
    adjacent_images_squarefree,
    as_morphism,
    certify,
    embed,
    is_squarefree_morphism,
    search_cyclic_squarefree,
    sigma,
    squarefree_on_short_words,
)
from vtmkit.exceptions import (
    ArtifactFormatError,
    CriterionDisagreementError,
    DomainError,
    PreconditionError,
    SearchLimitError,
)
from vtmkit.words import Morphism, Word, is_squarefree, squarefree_words, subsequence_ap, vtm_prefix

# 0 -> 0121021201210, 1 -> 1202102012021, 2 -> 2010210120102
LEECH = CyclicUniformMorphism.from_string("0121021201210")


def _brute_force(k):
    """Every image0 passing the finite criterion, in lexicographic order."""
    found = []
    for tail in itertools.product((0, 1, 2), repeat=k - 1):
        candidate = CyclicUniformMorphism((0,) + tail)
        if is_squarefree_morphism(as_morphism(candidate)):
            found.append(candidate)
    return found


# ---------------------------------------------------------------------------
# The morphism type
# ---------------------------------------------------------------------------

class TestCyclicUniformMorphism:
    """Test construction, images and the text form."""

    def test_sigma(self):
        w = Word.from_string("0121")
        assert sigma(w).to_string() == "1202"
        assert sigma(w, 2).to_string() == "2010"
        assert sigma(w, 3) == w

    def test_sigma_rejects_larger_alphabet(self):
        with pytest.raises(DomainError):
            sigma(Word([3], 4))

    def test_images_are_rotations(self):
        assert LEECH.k == 13
        assert LEECH.image(1).to_string() == "1202102012021"
        assert LEECH.image(2).to_string() == "2010210120102"
        m = as_morphism(LEECH)
        assert m.is_uniform()
        assert [img[0] for img in m.images] == [0, 1, 2]

    @pytest.mark.parametrize("text", ["", "102", "013"])
    def test_invalid_image0(self, text):
        with pytest.raises(DomainError):
            CyclicUniformMorphism.from_string(text)

    def test_text_form(self):
        text = LEECH.to_text(certified=True)
        assert text == "k 13\nimage0 0121021201210\ncertified yes\n"
        assert CyclicUniformMorphism.from_text(text) == (LEECH, True)

    def test_text_form_length_mismatch(self):
        with pytest.raises(ArtifactFormatError):
            CyclicUniformMorphism.from_text("k 4\nimage0 012\ncertified no\n")

    def test_text_form_missing_field(self):
        with pytest.raises(ArtifactFormatError):
            CyclicUniformMorphism.from_text("k 3\nimage0 012\n")


# ---------------------------------------------------------------------------
# Squarefreeness tests
# ---------------------------------------------------------------------------

class TestSquarefreeMorphism:
    """Test the finite criterion, the oracle and certification."""

    def test_identity_is_squarefree(self):
        certificate = certify(CyclicUniformMorphism.from_string("0"))
        assert certificate.certified

    def test_rotation_images_012_are_not_squarefree(self):
        # h(01) = 012120 contains 1212
        certificate = certify(CyclicUniformMorphism.from_string("012"))
        assert not certificate.certified
        assert not certificate.criterion and not certificate.oracle

    def test_leech_morphism_is_certified(self):
        assert certify(LEECH).certified

    def test_non_uniform_morphism_rejected(self):
        vtm = Morphism.from_images([[0, 1, 2], [0, 2], [1]])
        with pytest.raises(DomainError):
            is_squarefree_morphism(vtm)

    @pytest.mark.parametrize("k", [5, 11, 23])
    def test_criterion_agrees_with_oracle_on_random_candidates(self, k):
        rng = np.random.default_rng(k)
        for _ in range(500):
            image0 = (0,) + tuple(int(x) for x in rng.integers(0, 3, size=k - 1))
            m = as_morphism(CyclicUniformMorphism(image0))
            assert is_squarefree_morphism(m) == squarefree_on_short_words(m), image0

    def test_criterion_agrees_with_oracle_on_squarefree_images(self):
        # candidates whose image0 is itself squarefree survive the first test word
        for w in squarefree_words(11, min_len=11):
            if w[0] != 0:
                continue
            m = as_morphism(CyclicUniformMorphism(tuple(w)))
            assert is_squarefree_morphism(m) == squarefree_on_short_words(m), w

    def test_disagreement_is_loud(self):
        with patch("vtmkit.cyclic.morphisms.squarefree_on_short_words", return_value=False):
            with pytest.raises(CriterionDisagreementError) as excinfo:
                certify(LEECH)
        assert excinfo.value.image0 == "0121021201210"
        assert excinfo.value.criterion is True


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

class TestSearch:
    """Test the depth-first search."""

    def test_adjacent_images(self):
        # h(01) = 012120 contains 1212
        assert not adjacent_images_squarefree((0, 1, 2))
        assert adjacent_images_squarefree(LEECH.image0)
        assert adjacent_images_squarefree((0,))

    def test_adjacent_images_only_prune_non_squarefree_candidates(self):
        for w in squarefree_words(9, min_len=9):
            if w[0] != 0:
                continue
            if not adjacent_images_squarefree(tuple(w)):
                assert not is_squarefree_morphism(as_morphism(CyclicUniformMorphism(tuple(w)))), w

    def test_k1_is_the_identity(self):
        outcome = search_cyclic_squarefree(1)
        assert outcome.status == SearchStatus.FOUND
        assert outcome.first == CyclicUniformMorphism((0,))

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6, 7])
    def test_exhaustive_matches_brute_force(self, k):
        outcome = search_cyclic_squarefree(k, SearchMode.EXHAUSTIVE)
        expected = _brute_force(k)
        assert outcome.morphisms == expected
        assert outcome.status == (SearchStatus.FOUND if expected else SearchStatus.NONE)

    def test_exhaustive_k13_contains_leech(self):
        outcome = search_cyclic_squarefree(13, "exhaustive")
        assert outcome.status == SearchStatus.FOUND
        assert LEECH in outcome.morphisms
        assert outcome.morphisms == sorted(outcome.morphisms, key=lambda m: m.image0)
        assert all(certify(m).certified for m in outcome.morphisms)

    def test_first_is_lexicographically_least(self):
        first = search_cyclic_squarefree(13).first
        exhaustive = search_cyclic_squarefree(13, SearchMode.EXHAUSTIVE)
        assert first == exhaustive.first

    def test_workers_do_not_change_the_result(self):
        assert search_cyclic_squarefree(13, workers=2).first == search_cyclic_squarefree(13, workers=1).first

    def test_budget_exhausted_is_not_a_nonexistence_claim(self):
        outcome = search_cyclic_squarefree(13, node_budget=5)
        assert outcome.status == SearchStatus.BUDGET_EXHAUSTED
        assert outcome.morphisms == []

    def test_exhaustive_cap(self):
        with pytest.raises(SearchLimitError):
            search_cyclic_squarefree(14, SearchMode.EXHAUSTIVE)

    def test_k_must_be_positive(self):
        with pytest.raises(DomainError):
            search_cyclic_squarefree(0)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [23, 24, 25])
    def test_large_k_found_and_certified(self, k):
        outcome = search_cyclic_squarefree(k)
        assert outcome.status == SearchStatus.FOUND
        morphism = outcome.first
        assert morphism.k == k
        assert [morphism.image(i)[0] for i in range(3)] == [0, 1, 2]
        assert certify(morphism).certified


# ---------------------------------------------------------------------------
# Embedding
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module", params=["k13", "k23"])
def certified_morphism(request):
    if request.param == "k13":
        return LEECH
    return search_cyclic_squarefree(23).first


class TestEmbed:
    """v = h(w) is squarefree and carries w along the progression kn."""

    def test_identity_embedding(self):
        w = vtm_prefix(50)
        assert embed(w, CyclicUniformMorphism((0,))) == w

    def test_vtm_prefix_with_leech(self):
        w = vtm_prefix(100)
        v = embed(w, LEECH)
        assert len(v) == 1300
        assert is_squarefree(v)
        assert np.array_equal(subsequence_ap(v, 13).letters, w.letters)

    def test_every_squarefree_word_up_to_twelve_letters(self, certified_morphism):
        certificate = certify(certified_morphism)
        assert certificate.certified
        k = certified_morphism.k
        for w in squarefree_words(12):
            v = embed(w, certified_morphism, certificate)
            assert is_squarefree(v), w
            assert np.array_equal(subsequence_ap(v, k).letters, w.letters), w

    def test_word_with_square_rejected(self):
        with pytest.raises(PreconditionError):
            embed(Word.from_string("0120120"), LEECH)

    def test_non_ternary_word_rejected(self):
        with pytest.raises(PreconditionError):
            embed(Word([0, 3], 4), LEECH)

    def test_uncertified_morphism_rejected(self):
        with pytest.raises(PreconditionError):
            embed(vtm_prefix(10), CyclicUniformMorphism.from_string("012"))

    @pytest.mark.slow
    def test_ten_thousand_letters_with_k23(self):
        c = search_cyclic_squarefree(23).first
        w = vtm_prefix(10**4)
        v = embed(w, c)
        assert is_squarefree(v)
        assert np.array_equal(subsequence_ap(v, 23).letters, w.letters)
