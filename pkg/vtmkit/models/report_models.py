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
Report model returned by every runtime and rendered by the CLI.
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class Outcome(str, Enum):
    CONFIRMED = "confirmed"
    INCONCLUSIVE = "inconclusive"
    REFUTED = "refuted"
    ERROR = "error"


EXIT_CODES = {
    Outcome.CONFIRMED: 0,
    Outcome.INCONCLUSIVE: 1,
    Outcome.REFUTED: 1,
    Outcome.ERROR: 2,
}


class RunReport(BaseModel):
    """Pydantic model for a command's result."""

    command: str = Field(..., description="Command line echo, e.g. 'check --theorem1'")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Effective parameters")
    outcome: Outcome = Field(..., description="confirmed, inconclusive, refuted or error")
    falsifiable: bool = Field(False, description="Whether a finite computation can refute the claim")
    summary: Optional[str] = Field(None, description="One-line human-readable result")
    evidence: Dict[str, Any] = Field(default_factory=dict, description="Witnesses and artifact paths")
    entries: List[Dict[str, Any]] = Field(default_factory=list, description="Per-item results, e.g. per k")
    timings_ms: Dict[str, float] = Field(default_factory=dict, description="Phase timings in milliseconds")

    @model_validator(mode='after')
    def validate_refutable(self) -> "RunReport":
        if self.outcome == Outcome.REFUTED and not self.falsifiable:
            raise ValueError(f"'{self.command}' checks a claim that a finite scan cannot refute")
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        data = self.model_dump(mode='json')
        if not include_timings:
            data.pop('timings_ms', None)
        return data

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True)

    def to_text(self, include_timings: bool = True) -> str:
        lines = [f"command: {self.command}", f"outcome: {self.outcome.value}"]
        if self.summary:
            lines.append(f"summary: {self.summary}")
        for key in sorted(self.parameters):
            lines.append(f"param {key}: {self.parameters[key]}")
        for key in sorted(self.evidence):
            lines.append(f"evidence {key}: {self.evidence[key]}")
        for entry in self.entries:
            lines.append("entry " + " ".join(f"{k}={v}" for k, v in entry.items()))
        if include_timings:
            for phase, ms in self.timings_ms.items():
                lines.append(f"time {phase}: {ms:.1f} ms")
        return "\n".join(lines) + "\n"
