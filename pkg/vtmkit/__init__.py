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
vtmkit - squarefree words, 2-automatic sequences and arithmetic progressions in vtm.
"""

__version__ = "0.1.0"

from .cli.main import app
from .runtime.check_runtime import CheckRuntime
from .runtime.dfao_runtime import DfaoRuntime
from .runtime.generate_runtime import GenerateRuntime
from .runtime.morphism_runtime import MorphismRuntime
from .runtime.predicate_runtime import PredicateRuntime

__all__ = [
    "app",
    "CheckRuntime",
    "DfaoRuntime",
    "GenerateRuntime",
    "MorphismRuntime",
    "PredicateRuntime",
]
