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

"""Reading and writing the toolkit's text artifacts."""

import logging
from pathlib import Path
from typing import Tuple, Union

from vtmkit.cyclic import CyclicUniformMorphism, read_morphism
from vtmkit.dfao import DFAO, read_dfao
from vtmkit.exceptions import ArtifactFormatError, DomainError
from vtmkit.logic import TrackAutomaton
from vtmkit.words import Word

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class ArtifactService:
    """Digit-string words, DFAO files, morphism files, automata and DOT output."""

    def __init__(self, verbose: bool = False) -> None:
        self.verbose = verbose

    def _write(self, path: PathLike, text: str) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        if self.verbose:
            logger.debug(f"Wrote {path}")
        return path

    def read_word(self, path: PathLike) -> Word:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Word file not found: {path}")
        text = "".join(path.read_text(encoding='utf-8').split())
        try:
            return Word.from_string(text)
        except DomainError as e:
            raise ArtifactFormatError(path, str(e))

    def write_word(self, path: PathLike, word: Word) -> Path:
        return self._write(path, word.to_string() + "\n")

    def read_dfao(self, path: PathLike) -> DFAO:
        return read_dfao(path)

    def write_dfao(self, path: PathLike, dfao: DFAO) -> Path:
        return self._write(path, dfao.to_text())

    def read_morphism(self, path: PathLike) -> Tuple[CyclicUniformMorphism, bool]:
        return read_morphism(path)

    def write_morphism(self, path: PathLike, morphism: CyclicUniformMorphism, certified: bool) -> Path:
        return self._write(path, morphism.to_text(certified))

    def write_automaton(self, path: PathLike, automaton: TrackAutomaton) -> Path:
        return self._write(path, automaton.to_text())

    def write_dot(self, path: PathLike, dot: str) -> Path:
        return self._write(path, dot)
