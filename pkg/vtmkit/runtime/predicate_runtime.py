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
Predicate runtime for vtmkit.

Parses and compiles a predicate, then decides it (closed formulas), tests
membership of an assignment, or enumerates accepted assignments. The
decision procedure is exact, so a false answer is a refutation.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from vtmkit.exceptions import ArityError
from vtmkit.logic import PredicateCompiler, decide, default_sequences, enumerate_accepted, membership, parse_predicate
from vtmkit.logic.ast import free_variables
from vtmkit.models import Outcome, RunReport
from vtmkit.services import ArtifactService, ToolkitConfig
from vtmkit.utils import timed

logger = logging.getLogger(__name__)


class PredicateRuntime:
    """Runtime for the predicate command."""

    def __init__(self, config: Optional[ToolkitConfig] = None, verbose: bool = False) -> None:
        self.config = config or ToolkitConfig()
        self.verbose = verbose
        self.artifacts = ArtifactService(verbose=verbose)

    def load_sequences(self, sequence_files: Optional[Mapping[str, Path]] = None):
        sequences = default_sequences()
        for name, path in (sequence_files or {}).items():
            sequences[name] = self.artifacts.read_dfao(path)
        return sequences

    def evaluate(
        self,
        formula: str,
        sequence_files: Optional[Mapping[str, Path]] = None,
        member: Optional[Dict[str, int]] = None,
        enumerate_limit: Optional[int] = None,
        out: Optional[Path] = None,
        dot: Optional[Path] = None,
    ) -> RunReport:
        """
        Compile a predicate and answer one question about it.

        Args:
            formula: Predicate text
            sequence_files: Extra sequences by name (VTM is always registered)
            member: Assignment to test, one value per free variable
            enumerate_limit: Number of accepted assignments to list
            out: Where to write the automaton text
            dot: Where to write the automaton as DOT

        Returns:
            RunReport whose outcome is confirmed for true, refuted for false
        """
        timings: Dict[str, float] = {}
        with timed(timings, "parse"):
            ast = parse_predicate(formula)
        compiler = PredicateCompiler(self.load_sequences(sequence_files), self.config.state_ceiling, self.verbose)
        with timed(timings, "compile"):
            automaton = compiler.compile(ast)

        params: Dict[str, Any] = {"formula": formula, "free": sorted(free_variables(ast))}
        evidence: Dict[str, Any] = {"states": automaton.state_count, "tracks": list(automaton.tracks)}
        if out:
            evidence["automaton_path"] = str(self.artifacts.write_automaton(out, automaton))
        if dot:
            evidence["dot_path"] = str(self.artifacts.write_dot(dot, automaton.to_dot()))

        entries = []
        if member is not None:
            params["member"] = dict(member)
            with timed(timings, "query"):
                truth = membership(automaton, member)
            summary = f"{_assignment(member)} is {'accepted' if truth else 'rejected'}"
        elif enumerate_limit is not None:
            params["enumerate"] = enumerate_limit
            with timed(timings, "query"):
                entries = enumerate_accepted(automaton, enumerate_limit)
            truth = bool(entries)
            summary = f"{len(entries)} accepted assignment(s): " + ", ".join(_assignment(e) for e in entries)
        elif not automaton.tracks:
            truth = decide(automaton)
            summary = "true" if truth else "false"
        else:
            raise ArityError(
                f"Formula has free variables {list(automaton.tracks)}; pass an assignment or an enumeration limit"
            )
        if self.verbose:
            logger.info(f"Predicate answered: {summary}")

        return RunReport(
            command="predicate --eval",
            parameters=params,
            outcome=Outcome.CONFIRMED if truth else Outcome.REFUTED,
            falsifiable=True,
            summary=summary,
            evidence=evidence,
            entries=entries,
            timings_ms=timings,
        )


def _assignment(values: Mapping[str, int]) -> str:
    return ",".join(f"{name}={value}" for name, value in sorted(values.items())) or "()"
