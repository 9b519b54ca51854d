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
Generate runtime for vtmkit.

Produces fixed-point prefixes, of vtm through the on-disk cache or of any
prolongable morphism given on the command line.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from vtmkit.exceptions import DomainError
from vtmkit.services import ArtifactService, PrefixCache, ToolkitConfig
from vtmkit.utils import timed
from vtmkit.words import fixed_point_prefix, parse_morphism

logger = logging.getLogger(__name__)


class GenerateRuntime:
    """Runtime for the generate command."""

    def __init__(self, config: Optional[ToolkitConfig] = None, verbose: bool = False) -> None:
        self.config = config or ToolkitConfig()
        self.verbose = verbose
        self.cache = PrefixCache(self.config.cache_dir, verbose=verbose)
        self.artifacts = ArtifactService(verbose=verbose)

    def generate(
        self,
        length: int,
        morphism: Optional[str] = None,
        seed: int = 0,
        out: Optional[Path] = None,
    ) -> Dict[str, Any]:
        """
        Generate a fixed-point prefix.

        Args:
            length: Number of letters
            morphism: Spec such as "0:01,1:10"; vtm when omitted
            seed: Letter the fixed point starts from
            out: Optional file for the digit string

        Returns:
            Dict with the word, its length, the output path and timings
        """
        if length < 0:
            raise DomainError(f"Length must be non-negative, got {length}")
        if morphism is None and seed != 0:
            raise DomainError(f"vtm is the fixed point starting with 0; start letter {seed} needs --morphism")
        timings: Dict[str, float] = {}
        with timed(timings, "generate"):
            if morphism is None:
                word = self.cache.vtm_prefix(length)
            else:
                word = fixed_point_prefix(parse_morphism(morphism), seed, length)
        if self.verbose:
            logger.info(f"Generated {len(word)} letters in {timings['generate']} ms")

        path = str(self.artifacts.write_word(out, word)) if out else None
        return {"word": word, "length": len(word), "path": path, "timings_ms": timings}
