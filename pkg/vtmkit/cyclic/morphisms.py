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

"""Cyclic uniform ternary morphisms and squarefreeness certificates."""

import logging
from functools import lru_cache
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Tuple, Union

import numpy as np

from vtmkit.exceptions import ArtifactFormatError, CriterionDisagreementError, DomainError
from vtmkit.words import Morphism, Word, apply_morphism, is_squarefree, squarefree_words

logger = logging.getLogger(__name__)

CRITERION_LENGTH = 3
ORACLE_LENGTH = 8


def sigma(w: Word, power: int = 1) -> Word:
    """Apply the rotation 0 -> 1 -> 2 -> 0 to every letter, power times."""
    letters = w.letters
    if letters.size and int(letters.max()) > 2:
        raise DomainError(f"sigma acts on ternary words, found letter {int(letters.max())}")
    return Word((letters.astype(np.int64) + power) % 3, 3)


@dataclass(frozen=True)
class CyclicUniformMorphism:
    """h(i) = sigma^i(image0), every image of length k."""

    image0: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.image0:
            raise DomainError("image0 must be non-empty")
        if any(letter not in (0, 1, 2) for letter in self.image0):
            raise DomainError(f"image0 must be ternary, got {self.image0}")
        if self.image0[0] != 0:
            raise DomainError("image0 must begin with 0")

    @classmethod
    def from_string(cls, text: str) -> "CyclicUniformMorphism":
        text = text.strip()
        if not text.isdigit():
            raise DomainError(f"image0 must be a digit string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def k(self) -> int:
        return len(self.image0)

    def image(self, letter: int) -> Word:
        return sigma(Word(self.image0, 3), letter)

    def to_string(self) -> str:
        return "".join(str(letter) for letter in self.image0)

    def to_text(self, certified: bool) -> str:
        return f"k {self.k}\nimage0 {self.to_string()}\ncertified {'yes' if certified else 'no'}\n"

    @classmethod
    def from_text(cls, text: str, source: Union[str, Path] = "<text>") -> Tuple["CyclicUniformMorphism", bool]:
        fields = {}
        for line in text.splitlines():
            parts = line.split()
            if len(parts) == 2:
                fields[parts[0]] = parts[1]
            elif parts and not parts[0].startswith("#"):
                raise ArtifactFormatError(source, f"bad line {line!r}")
        missing = {"k", "image0", "certified"} - set(fields)
        if missing:
            raise ArtifactFormatError(source, f"missing fields {sorted(missing)}")
        if fields["certified"] not in ("yes", "no"):
            raise ArtifactFormatError(source, "certified must be 'yes' or 'no'")
        try:
            morphism = cls.from_string(fields["image0"])
        except DomainError as e:
            raise ArtifactFormatError(source, str(e))
        if str(morphism.k) != fields["k"]:
            raise ArtifactFormatError(source, f"k is {fields['k']} but image0 has length {morphism.k}")
        return morphism, fields["certified"] == "yes"


def as_morphism(c: CyclicUniformMorphism) -> Morphism:
    return Morphism(3, tuple(c.image(letter) for letter in range(3)))


def _check_uniform_ternary(m: Morphism) -> None:
    if m.alphabet_size != 3:
        raise DomainError(f"Expected a ternary morphism, alphabet size is {m.alphabet_size}")
    if not m.is_uniform():
        raise DomainError(f"Expected a uniform morphism, image lengths are {m.lengths.tolist()}")


def _squarefree_on(m: Morphism, words: Sequence[Word]) -> bool:
    for w in words:
        if not is_squarefree(apply_morphism(m, w)):
            logger.debug(f"Image of {w.to_string()} under {m.to_spec()} contains a square")
            return False
    return True


@lru_cache(maxsize=None)
def _test_words(max_len: int) -> Tuple[Word, ...]:
    return tuple(squarefree_words(max_len, 3))


def is_squarefree_morphism(m: Morphism) -> bool:
    """Finite test for uniform ternary morphisms: images of squarefree words of length <= 3 are squarefree."""
    _check_uniform_ternary(m)
    return _squarefree_on(m, _test_words(CRITERION_LENGTH))


def squarefree_on_short_words(m: Morphism, max_len: int = ORACLE_LENGTH) -> bool:
    """Exhaustive check over every squarefree word up to max_len letters."""
    _check_uniform_ternary(m)
    return _squarefree_on(m, _test_words(max_len))


@dataclass(frozen=True)
class Certificate:
    morphism: CyclicUniformMorphism
    criterion: bool
    oracle: bool

    @property
    def certified(self) -> bool:
        return self.criterion and self.oracle


def certify(c: CyclicUniformMorphism) -> Certificate:
    """Run both tests; they must agree."""
    m = as_morphism(c)
    criterion = is_squarefree_morphism(m)
    oracle = squarefree_on_short_words(m)
    if criterion != oracle:
        raise CriterionDisagreementError(c.to_string(), criterion, oracle)
    return Certificate(c, criterion, oracle)


def read_morphism(path: Union[str, Path]) -> Tuple[CyclicUniformMorphism, bool]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Morphism file not found: {path}")
    return CyclicUniformMorphism.from_text(path.read_text(), source=path)
