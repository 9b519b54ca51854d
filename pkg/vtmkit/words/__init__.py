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
Finite-word machinery: morphic generation, square detection and
arithmetic-progression statistics.
"""

from .progressions import (
    Theorem1Evidence,
    check_theorem1,
    distinct_factors,
    find_bounded_gap_factor,
    occurrence_positions,
    occurrence_residues,
    subsequence_ap,
)
from .squares import SquareWitness, ends_with_square, find_square, find_square_naive, is_squarefree, squarefree_words
from .word import (
    THUE_MORSE_MORPHISM,
    VTM_MORPHISM,
    Morphism,
    Word,
    apply_morphism,
    fixed_point_prefix,
    parse_morphism,
    thue_morse_prefix,
    vtm_prefix,
)

__all__ = [
    "Word",
    "Morphism",
    "VTM_MORPHISM",
    "THUE_MORSE_MORPHISM",
    "apply_morphism",
    "fixed_point_prefix",
    "parse_morphism",
    "vtm_prefix",
    "thue_morse_prefix",
    "SquareWitness",
    "find_square",
    "find_square_naive",
    "is_squarefree",
    "squarefree_words",
    "ends_with_square",
    "Theorem1Evidence",
    "check_theorem1",
    "subsequence_ap",
    "occurrence_positions",
    "occurrence_residues",
    "find_bounded_gap_factor",
    "distinct_factors",
]
