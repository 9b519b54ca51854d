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

"""On-disk memo of vtm prefixes, one .npy file per length."""

import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

import numpy as np

from vtmkit.words import Word, vtm_prefix

logger = logging.getLogger(__name__)

MIN_CACHED_LENGTH = 1 << 16


class PrefixCache:
    """Cache of vtm prefixes keyed by length; writes are atomic renames.

    Prefixes shorter than min_length are cheap to rebuild and never stored.
    """

    def __init__(
        self,
        cache_dir: Optional[Union[str, Path]],
        verbose: bool = False,
        min_length: int = MIN_CACHED_LENGTH,
    ) -> None:
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.verbose = verbose
        self.min_length = min_length

    def path_for(self, length: int) -> Optional[Path]:
        if self.cache_dir is None or length < self.min_length:
            return None
        return self.cache_dir / f"vtm-{length}.npy"

    def vtm_prefix(self, length: int) -> Word:
        path = self.path_for(length)
        if path is not None and path.exists():
            try:
                letters = np.load(path, allow_pickle=False)
                if letters.shape == (length,):
                    if self.verbose:
                        logger.debug(f"Loaded vtm prefix of length {length} from {path}")
                    return Word(letters, 3)
                logger.warning(f"Cached prefix {path} has shape {letters.shape}; regenerating")
            except (OSError, ValueError) as e:
                logger.warning(f"Unreadable cached prefix {path}: {e}; regenerating")

        word = vtm_prefix(length)
        if path is not None:
            self._store(path, word)
        return word

    def _store(self, path: Path, word: Word) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as f:
                    np.save(f, word.letters, allow_pickle=False)
                os.replace(tmp, path)
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise
        except OSError as e:
            logger.warning(f"Could not cache vtm prefix at {path}: {e}")
            return
        if self.verbose:
            logger.debug(f"Cached vtm prefix of length {len(word)} at {path}")
