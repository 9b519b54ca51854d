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
Check runtime for vtmkit.

Each check returns a RunReport. Claims about the whole infinite word can
only be confirmed or left inconclusive by a finite scan; squarefreeness of
a given file and facts about the packaged automaton can also be refuted.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional

from vtmkit.dfao import check_doubling, check_power_of_two, load_vtm_dfao
from vtmkit.exceptions import DomainError
from vtmkit.models import Outcome, RunReport
from vtmkit.operations import proof_walk
from vtmkit.services import PrefixCache, ToolkitConfig
from vtmkit.utils import timed
from vtmkit.words import Word, check_theorem1, find_square, occurrence_residues

logger = logging.getLogger(__name__)


class CheckRuntime:
    """Runtime for the check command."""

    def __init__(self, config: Optional[ToolkitConfig] = None, verbose: bool = False) -> None:
        self.config = config or ToolkitConfig()
        self.verbose = verbose
        self.cache = PrefixCache(self.config.cache_dir, verbose=verbose)

    def _prefix(self, length: int, timings: Dict[str, float]) -> Word:
        with timed(timings, "prefix"):
            return self.cache.vtm_prefix(length)

    def _fan_out(self, func, items: List[Any]) -> List[Any]:
        if self.config.workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                return list(pool.map(func, items))
        return [func(item) for item in items]

    def check_squarefree(self, word: Word, source: str = "<word>", method: str = "auto") -> RunReport:
        timings: Dict[str, float] = {}
        with timed(timings, "scan"):
            witness = find_square(word, method=method)
        params = {"source": source, "length": len(word), "method": method}
        if witness is None:
            return RunReport(
                command="check --squarefree", parameters=params, outcome=Outcome.CONFIRMED, falsifiable=True,
                summary=f"{len(word)} letters, no square", timings_ms=timings,
            )
        square = word[witness.position:witness.end].to_string()
        return RunReport(
            command="check --squarefree", parameters=params, outcome=Outcome.REFUTED, falsifiable=True,
            summary=f"square {square} at position {witness.position}",
            evidence={"position": witness.position, "period": witness.period, "square": square},
            timings_ms=timings,
        )

    def check_theorem1(self, k_from: int, k_to: int, prefix_len: Optional[int] = None) -> RunReport:
        if k_from < 2 or k_to < k_from:
            raise DomainError(f"k range must satisfy 2 <= A <= B, got {k_from}..{k_to}")
        prefix_len = prefix_len or self.config.default_prefix
        timings: Dict[str, float] = {}
        prefix = self._prefix(prefix_len, timings)
        if self.verbose:
            logger.info(f"Scanning k={k_from}..{k_to} in a prefix of {prefix_len} letters")

        def scan(k: int) -> Dict[str, Any]:
            evidence = check_theorem1(k, prefix_len, prefix)
            if evidence is None:
                return {"k": k, "status": "inconclusive"}
            return {"k": k, "status": "confirmed", "n": evidence.n, "letter": evidence.letter}

        with timed(timings, "scan"):
            entries = self._fan_out(scan, list(range(k_from, k_to + 1)))
        open_ks = [e["k"] for e in entries if e["status"] != "confirmed"]
        return RunReport(
            command="check --theorem1",
            parameters={"k_range": f"{k_from}..{k_to}", "prefix": prefix_len},
            outcome=Outcome.INCONCLUSIVE if open_ks else Outcome.CONFIRMED,
            summary=f"{len(entries) - len(open_ks)} of {len(entries)} k confirmed",
            evidence={"inconclusive": open_ks},
            entries=entries,
            timings_ms=timings,
        )

    def check_residues(self, k: int, factor: Word, prefix_len: Optional[int] = None) -> RunReport:
        prefix_len = prefix_len or self.config.residue_prefix
        timings: Dict[str, float] = {}
        prefix = self._prefix(prefix_len, timings)
        with timed(timings, "scan"):
            residues = sorted(occurrence_residues(prefix, factor, k))
        missing = sorted(set(range(k)) - set(residues))
        return RunReport(
            command="check --residues",
            parameters={"k": k, "factor": factor.to_string(), "prefix": prefix_len},
            outcome=Outcome.INCONCLUSIVE if missing else Outcome.CONFIRMED,
            summary=f"residues {residues}" + (f", missing {missing}" if missing else ""),
            evidence={"residues": residues, "missing": missing},
            timings_ms=timings,
        )

    def check_doubling(self, bound: int, max_exp: int) -> RunReport:
        timings: Dict[str, float] = {}
        dfao = load_vtm_dfao()
        with timed(timings, "doubling"):
            doubling = check_doubling(dfao, bound)
        with timed(timings, "powers"):
            powers = check_power_of_two(dfao, max_exp)
        return RunReport(
            command="check --doubling",
            parameters={"bound": bound, "max_exp": max_exp},
            outcome=Outcome.CONFIRMED if doubling and powers else Outcome.REFUTED,
            falsifiable=True,
            summary=f"doubling {'holds' if doubling else 'fails'}, v_(2^l) = 2 {'holds' if powers else 'fails'}",
            evidence={"doubling": doubling, "power_of_two": powers},
            timings_ms=timings,
        )

    def check_proof(self, k_from: int, k_to: int, prefix_len: Optional[int] = None) -> RunReport:
        if k_from < 2 or k_to < k_from:
            raise DomainError(f"k range must satisfy 2 <= A <= B, got {k_from}..{k_to}")
        prefix_len = prefix_len or self.config.default_prefix
        timings: Dict[str, float] = {}
        prefix = self._prefix(prefix_len, timings)
        dfao = load_vtm_dfao()

        def walk(k: int) -> Dict[str, Any]:
            result = proof_walk(k, prefix, dfao)
            return {
                "k": k,
                "branch": result.branch,
                "status": "confirmed" if result.confirmed else "inconclusive",
                "steps": "; ".join(step.description for step in result.steps),
            }

        with timed(timings, "walk"):
            entries = self._fan_out(walk, list(range(k_from, k_to + 1)))
        open_ks = [e["k"] for e in entries if e["status"] != "confirmed"]
        return RunReport(
            command="check --proof",
            parameters={"k_range": f"{k_from}..{k_to}", "prefix": prefix_len},
            outcome=Outcome.INCONCLUSIVE if open_ks else Outcome.CONFIRMED,
            summary=f"{len(entries) - len(open_ks)} of {len(entries)} k confirmed by case analysis",
            evidence={"inconclusive": open_ks},
            entries=entries,
            timings_ms=timings,
        )
