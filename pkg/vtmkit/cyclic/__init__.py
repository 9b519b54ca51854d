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

"""Cyclic squarefree uniform morphisms: search, certification and embedding."""

from .embed import embed
from .morphisms import (
    CRITERION_LENGTH,
    ORACLE_LENGTH,
    Certificate,
    CyclicUniformMorphism,
    as_morphism,
    certify,
    is_squarefree_morphism,
    read_morphism,
    sigma,
    squarefree_on_short_words,
)
from .search import (
    DEFAULT_NODE_BUDGET,
    EXHAUSTIVE_MAX_K,
    SearchMode,
    SearchOutcome,
    SearchStatus,
    adjacent_images_squarefree,
    search_cyclic_squarefree,
)

__all__ = [
    "CRITERION_LENGTH",
    "ORACLE_LENGTH",
    "Certificate",
    "CyclicUniformMorphism",
    "as_morphism",
    "certify",
    "embed",
    "is_squarefree_morphism",
    "read_morphism",
    "sigma",
    "squarefree_on_short_words",
    "DEFAULT_NODE_BUDGET",
    "EXHAUSTIVE_MAX_K",
    "SearchMode",
    "SearchOutcome",
    "SearchStatus",
    "adjacent_images_squarefree",
    "search_cyclic_squarefree",
]
