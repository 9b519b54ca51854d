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
DFAO runtime for vtmkit.

Rebuilds the vtm automaton from its 2-kernel, compares it with a golden
file and checks leading-zero invariance.
"""

import logging
from pathlib import Path
from typing import Dict, Optional

from vtmkit.dfao import build_vtm_dfao, golden_vtm_text, leading_zero_invariant
from vtmkit.models import Outcome, RunReport
from vtmkit.services import ArtifactService, ToolkitConfig
from vtmkit.utils import timed

logger = logging.getLogger(__name__)

INVARIANCE_LIMIT = 1 << 14
MAX_PADDING = 4


class DfaoRuntime:
    """Runtime for the dfao command."""

    def __init__(self, config: Optional[ToolkitConfig] = None, verbose: bool = False) -> None:
        self.config = config or ToolkitConfig()
        self.verbose = verbose
        self.artifacts = ArtifactService(verbose=verbose)

    def build(
        self,
        out: Optional[Path] = None,
        golden: Optional[Path] = None,
        dot: Optional[Path] = None,
    ) -> RunReport:
        """
        Rebuild the vtm DFAO and compare it with a golden text file.

        Args:
            out: Where to write the rebuilt automaton
            golden: Golden file; the packaged vtm.dfao when omitted
            dot: Where to write a DOT rendering
        """
        timings: Dict[str, float] = {}
        with timed(timings, "kernel"):
            dfao = build_vtm_dfao(self.config.kernel_compare_len, self.config.kernel_verify_len)
        text = dfao.to_text()
        expected = Path(golden).read_text(encoding='utf-8') if golden else golden_vtm_text()
        matches = text == expected
        with timed(timings, "leading_zeros"):
            invariant = leading_zero_invariant(dfao, INVARIANCE_LIMIT, MAX_PADDING)
        if self.verbose:
            logger.info(f"Rebuilt DFAO has {dfao.state_count} states; golden match: {matches}")

        evidence: Dict[str, object] = {"states": dfao.state_count, "golden_match": matches,
                                       "leading_zero_invariant": invariant}
        if out:
            evidence["dfao_path"] = str(self.artifacts.write_dfao(out, dfao))
        if dot:
            evidence["dot_path"] = str(self.artifacts.write_dot(dot, dfao.to_dot("vtm")))
        return RunReport(
            command="dfao --build",
            parameters={
                "compare_len": self.config.kernel_compare_len,
                "verify_len": self.config.kernel_verify_len,
                "golden": str(golden) if golden else "packaged",
            },
            outcome=Outcome.CONFIRMED if matches and invariant else Outcome.REFUTED,
            falsifiable=True,
            summary=f"{dfao.state_count}-state DFAO, verified on n < {self.config.kernel_verify_len}",
            evidence=evidence,
            timings_ms=timings,
        )
