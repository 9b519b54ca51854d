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
Finite words and morphisms over small integer-coded alphabets.

Letters are stored as a read-only numpy uint8 array so that million-letter
prefixes can be generated, sliced and scanned without Python-level loops.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from vtmkit.exceptions import DomainError, PreconditionError

logger = logging.getLogger(__name__)

MAX_ALPHABET = 256


def _is_decimal(text: str) -> bool:
    # str.isdigit alone also accepts non-ASCII digits such as "٣"
    return text.isascii() and text.isdigit()


class Word:
    """An immutable finite word over the alphabet {0, ..., alphabet_size - 1}."""

    __slots__ = ("_letters", "_alphabet_size")

    def __init__(self, letters: Union[Iterable[int], np.ndarray] = (), alphabet_size: int = 3) -> None:
        if not 1 <= alphabet_size <= MAX_ALPHABET:
            raise DomainError(f"Alphabet size must be between 1 and {MAX_ALPHABET}, got {alphabet_size}")
        raw = np.asarray(letters if isinstance(letters, np.ndarray) else list(letters))
        if raw.ndim != 1:
            raise DomainError("A word is a one-dimensional sequence of letters")
        if raw.size:
            if not np.issubdtype(raw.dtype, np.integer):
                raise DomainError(f"Letters must be integer codes, got dtype {raw.dtype}")
            low, high = int(raw.min()), int(raw.max())
            if low < 0 or high >= alphabet_size:
                bad = low if low < 0 else high
                raise DomainError(f"Letter {bad} is outside the alphabet of size {alphabet_size}")
        arr = raw.astype(np.uint8, copy=True)
        arr.setflags(write=False)
        self._letters = arr
        self._alphabet_size = alphabet_size

    @classmethod
    def from_string(cls, text: str, alphabet_size: Optional[int] = None) -> "Word":
        """Decode a digit string, one character per letter."""
        text = text.strip()
        if text and not _is_decimal(text):
            raise DomainError(f"Word text must consist of decimal digits: {text[:20]!r}")
        arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
        if alphabet_size is None:
            alphabet_size = max(3, int(arr.max()) + 1) if arr.size else 3
        return cls(arr, alphabet_size)

    @classmethod
    def from_symbols(cls, text: str) -> "Word":
        """Code arbitrary characters by order of first appearance ("tartar" -> 012012)."""
        codes: dict = {}
        letters = [codes.setdefault(ch, len(codes)) for ch in text]
        return cls(letters, max(1, len(codes)))

    @property
    def letters(self) -> np.ndarray:
        return self._letters

    @property
    def alphabet_size(self) -> int:
        return self._alphabet_size

    def to_string(self) -> str:
        if self._alphabet_size > 10:
            raise DomainError("Only alphabets of size <= 10 have a digit-string form")
        return (self._letters + ord("0")).tobytes().decode("ascii")

    def startswith(self, other: "Word") -> bool:
        n = len(other)
        return n <= len(self) and bool(np.array_equal(self._letters[:n], other.letters))

    def __len__(self) -> int:
        return int(self._letters.size)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self._letters[index], self._alphabet_size)
        return int(self._letters[index])

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters.tolist())

    def __add__(self, other: "Word") -> "Word":
        size = max(self._alphabet_size, other.alphabet_size)
        return Word(np.concatenate([self._letters, other.letters]), size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._alphabet_size == other.alphabet_size and bool(np.array_equal(self._letters, other.letters))

    def __hash__(self) -> int:
        return hash((self._alphabet_size, self._letters.tobytes()))

    def __repr__(self) -> str:
        body = self.to_string() if self._alphabet_size <= 10 else str(self._letters.tolist())
        if len(body) > 40:
            body = body[:40] + "..."
        return f"Word({body!r}, alphabet_size={self._alphabet_size}, len={len(self)})"


def _ragged_offsets(counts: np.ndarray) -> np.ndarray:
    """For counts [2, 3] return [0, 1, 0, 1, 2]."""
    total = int(counts.sum())
    starts = np.cumsum(counts) - counts
    return np.arange(total, dtype=np.int64) - np.repeat(starts, counts)


@dataclass(frozen=True)
class Morphism:
    """A morphism given by one image per letter, all over the same alphabet."""

    alphabet_size: int
    images: Tuple[Word, ...]
    _flat: np.ndarray = field(init=False, repr=False, compare=False)
    _starts: np.ndarray = field(init=False, repr=False, compare=False)
    _lengths: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.alphabet_size:
            raise DomainError(
                f"Morphism needs exactly {self.alphabet_size} images, got {len(self.images)}"
            )
        for letter, image in enumerate(self.images):
            if image.alphabet_size != self.alphabet_size:
                raise DomainError(
                    f"Image of {letter} is over an alphabet of size {image.alphabet_size}, "
                    f"expected {self.alphabet_size}"
                )
        lengths = np.array([len(img) for img in self.images], dtype=np.int64)
        flat = np.concatenate([img.letters for img in self.images]) if self.images else np.zeros(0, np.uint8)
        object.__setattr__(self, "_lengths", lengths)
        object.__setattr__(self, "_starts", np.cumsum(lengths) - lengths)
        object.__setattr__(self, "_flat", flat.astype(np.uint8))

    @classmethod
    def from_images(cls, images: Sequence[Iterable[int]], alphabet_size: Optional[int] = None) -> "Morphism":
        size = alphabet_size if alphabet_size is not None else len(images)
        return cls(size, tuple(Word(img, size) for img in images))

    @property
    def lengths(self) -> np.ndarray:
        return self._lengths

    def is_uniform(self) -> bool:
        return bool(self._lengths.size) and bool((self._lengths == self._lengths[0]).all())

    def prolongable_at(self, letter: int) -> bool:
        if not 0 <= letter < self.alphabet_size:
            return False
        image = self.images[letter]
        return len(image) >= 2 and image[0] == letter

    def to_spec(self) -> str:
        return ",".join(f"{a}:{img.to_string()}" for a, img in enumerate(self.images))


def parse_morphism(spec: str, alphabet_size: Optional[int] = None) -> Morphism:
    """Parse "0:012,1:02,2:1" into a Morphism.

    Letters without an entry are rejected; the alphabet defaults to the
    number of entries.
    """
    entries = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        letter, sep, image = part.partition(":")
        if not sep or not _is_decimal(letter.strip()) or (image.strip() and not _is_decimal(image.strip())):
            raise DomainError(f"Bad morphism entry {part!r}; expected LETTER:DIGITS")
        entries[int(letter)] = [int(ch) for ch in image.strip()]
    if not entries:
        raise DomainError("Empty morphism specification")
    size = alphabet_size if alphabet_size is not None else len(entries)
    missing = [a for a in range(size) if a not in entries]
    if missing or max(entries) >= size:
        raise DomainError(f"Morphism specification must give images for letters 0..{size - 1}")
    return Morphism.from_images([entries[a] for a in range(size)], size)


VTM_MORPHISM = Morphism.from_images([[0, 1, 2], [0, 2], [1]])
THUE_MORSE_MORPHISM = Morphism.from_images([[0, 1], [1, 0]])


def apply_morphism(m: Morphism, w: Word) -> Word:
    """Concatenate the images of the letters of w, in order."""
    letters = w.letters
    if letters.size and int(letters.max()) >= m.alphabet_size:
        raise DomainError(
            f"Letter {int(letters.max())} is outside the morphism's alphabet of size {m.alphabet_size}"
        )
    counts = m.lengths[letters]
    idx = np.repeat(m._starts[letters], counts) + _ragged_offsets(counts)
    return Word(m._flat[idx], m.alphabet_size)


def fixed_point_prefix(m: Morphism, seed: int, min_len: int) -> Word:
    """Return exactly min_len letters of the fixed point of m starting with seed."""
    if not m.prolongable_at(seed):
        raise PreconditionError(f"Morphism is not prolongable at letter {seed}")
    if min_len < 0:
        raise DomainError(f"Prefix length must be non-negative, got {min_len}")

    w = Word([seed], m.alphabet_size)
    while len(w) < min_len:
        # Only the letters whose images reach min_len need expanding.
        cum = np.cumsum(m.lengths[w.letters])
        needed = int(np.searchsorted(cum, min_len)) + 1
        grown = apply_morphism(m, w[:needed])
        if len(grown) <= len(w):
            raise PreconditionError(f"Fixed point of the morphism at {seed} is finite (length {len(w)})")
        w = grown
    logger.debug(f"Generated fixed-point prefix of length {min_len} from seed {seed}")
    return w[:min_len]


def vtm_prefix(length: int) -> Word:
    """The first letters of vtm, the fixed point of 0->012, 1->02, 2->1."""
    return fixed_point_prefix(VTM_MORPHISM, 0, length)


def thue_morse_prefix(length: int) -> Word:
    """Thue-Morse by parity of the binary digit sum."""
    n = np.arange(length, dtype=np.int64)
    parity = np.zeros(length, dtype=np.uint8)
    while n.any():
        parity ^= (n & 1).astype(np.uint8)
        n >>= 1
    return Word(parity, 2)
