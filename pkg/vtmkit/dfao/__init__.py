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
Base-2 DFAO engine: evaluation, kernel reconstruction, minimization and the
doubling facts the progression case analysis reads off the vtm automaton.
"""

from .automaton import (
    DFAO,
    binary_digits,
    dfao_isomorphic,
    leading_zero_invariant,
    minimize_dfao,
    read_dfao,
    run,
    run_digits,
    run_many,
)
from .kernel import (
    KernelElement,
    build_vtm_dfao,
    golden_vtm_text,
    kernel_dfao,
    load_vtm_dfao,
    thue_morse_oracle,
    verify_dfao,
    vtm_oracle,
)
from .properties import check_doubling, check_power_of_two, decompose_even

__all__ = [
    "DFAO",
    "KernelElement",
    "binary_digits",
    "run",
    "run_digits",
    "run_many",
    "minimize_dfao",
    "dfao_isomorphic",
    "leading_zero_invariant",
    "read_dfao",
    "kernel_dfao",
    "verify_dfao",
    "build_vtm_dfao",
    "load_vtm_dfao",
    "golden_vtm_text",
    "vtm_oracle",
    "thue_morse_oracle",
    "check_doubling",
    "check_power_of_two",
    "decompose_even",
]
