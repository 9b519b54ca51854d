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
Morphism runtime for vtmkit.

Searches for cyclic squarefree k-uniform morphisms and embeds squarefree
words with a certified one, checking the result before reporting success.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np

from vtmkit.cyclic import SearchMode, SearchStatus, certify, embed, search_cyclic_squarefree
from vtmkit.exceptions import PreconditionError
from vtmkit.models import Outcome, RunReport
from vtmkit.services import ArtifactService, ToolkitConfig
from vtmkit.utils import timed
from vtmkit.words import is_squarefree, subsequence_ap

logger = logging.getLogger(__name__)


class MorphismRuntime:
    """Runtime for the morphism command."""

    def __init__(self, config: Optional[ToolkitConfig] = None, verbose: bool = False) -> None:
        self.config = config or ToolkitConfig()
        self.verbose = verbose
        self.artifacts = ArtifactService(verbose=verbose)

    def search(self, k: int, exhaustive: bool = False, out: Optional[Path] = None) -> RunReport:
        """
        Search for cyclic squarefree k-uniform morphisms.

        Args:
            k: Image length
            exhaustive: List every solution instead of the first one
            out: Where to write the first morphism found

        Returns:
            RunReport: confirmed when a certified morphism exists, refuted
            only when an exhaustive search finds none
        """
        timings: Dict[str, float] = {}
        mode = SearchMode.EXHAUSTIVE if exhaustive else SearchMode.FIRST
        if self.verbose:
            logger.info(f"Searching k={k} in {mode.value} mode")
        with timed(timings, "search"):
            outcome = search_cyclic_squarefree(
                k,
                mode=mode,
                node_budget=self.config.search_node_budget,
                workers=self.config.workers,
                exhaustive_max_k=self.config.exhaustive_max_k,
            )
        with timed(timings, "certify"):
            certificates = [certify(m) for m in outcome.morphisms]

        entries = [
            {"image0": c.morphism.to_string(), "criterion": c.criterion, "oracle": c.oracle}
            for c in certificates
        ]
        evidence: Dict[str, Any] = {"status": outcome.status.value, "nodes": outcome.nodes}
        if certificates and out:
            first = certificates[0]
            evidence["morphism_path"] = str(self.artifacts.write_morphism(out, first.morphism, first.certified))

        if outcome.status == SearchStatus.FOUND and all(c.certified for c in certificates):
            result, summary = Outcome.CONFIRMED, f"{len(certificates)} certified morphism(s), first {entries[0]['image0']}"
        elif outcome.status == SearchStatus.NONE:
            result, summary = Outcome.REFUTED, f"no cyclic squarefree {k}-uniform morphism exists"
        else:
            result, summary = Outcome.INCONCLUSIVE, f"search ended with status {outcome.status.value}"
        return RunReport(
            command="morphism --search",
            parameters={"k": k, "mode": mode.value, "node_budget": self.config.search_node_budget},
            outcome=result,
            falsifiable=exhaustive,
            summary=summary,
            evidence=evidence,
            entries=entries,
            timings_ms=timings,
        )

    def embed(self, word_path: Path, morphism_path: Path, out: Optional[Path] = None) -> RunReport:
        """
        Embed a squarefree word as the progression v_{kn} of a longer squarefree word.

        The result is verified for squarefreeness and for the progression
        identity before it is written.
        """
        timings: Dict[str, float] = {}
        w = self.artifacts.read_word(word_path)
        morphism, _ = self.artifacts.read_morphism(morphism_path)
        with timed(timings, "certify"):
            certificate = certify(morphism)
        if not certificate.certified:
            raise PreconditionError(f"Morphism in {morphism_path} is not squarefree; refusing to embed")
        with timed(timings, "embed"):
            v = embed(w, morphism, certificate)
        with timed(timings, "verify"):
            squarefree = is_squarefree(v)
            identity = bool(np.array_equal(subsequence_ap(v, morphism.k, 0).letters, w.letters))
        if not (squarefree and identity):
            raise PreconditionError(
                f"Embedding check failed: squarefree={squarefree}, progression identity={identity}"
            )

        evidence: Dict[str, Any] = {"length": len(v), "squarefree": squarefree, "progression_identity": identity}
        if out:
            evidence["word_path"] = str(self.artifacts.write_word(out, v))
        return RunReport(
            command="morphism --embed",
            parameters={"word": str(word_path), "morphism": str(morphism_path), "k": morphism.k},
            outcome=Outcome.CONFIRMED,
            summary=f"embedded {len(w)} letters into a squarefree word of {len(v)} letters",
            evidence=evidence,
            timings_ms=timings,
        )
