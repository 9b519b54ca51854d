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
First-order predicates over base-2 automatic sequences, decided by
compiling them to multi-track automata.
"""

from .ast import Add, Binary, Comparison, Const, Formula, Not, Quantifier, SequenceAtom, Var, free_variables
from .automaton import (
    DEFAULT_STATE_CEILING,
    TrackAutomaton,
    complement,
    constant_automaton,
    is_padding_closed,
    isomorphic,
    minimize,
    product,
    project,
    read_automaton,
)
from .compiler import PredicateCompiler, atom_automaton, combine, compile_predicate, default_sequences
from .parser import PredicateParser, parse_predicate
from .queries import decide, enumerate_accepted, membership, membership_many

SAME_FIRST_LAST = "Ei (VTM[i]=@0 & VTM[i+k]=@0)|(VTM[i]=@2 & VTM[i+k]=@2)"

__all__ = [
    "Add",
    "Binary",
    "Comparison",
    "Const",
    "Formula",
    "Not",
    "Quantifier",
    "SequenceAtom",
    "Var",
    "free_variables",
    "TrackAutomaton",
    "DEFAULT_STATE_CEILING",
    "complement",
    "constant_automaton",
    "is_padding_closed",
    "isomorphic",
    "minimize",
    "product",
    "project",
    "read_automaton",
    "PredicateCompiler",
    "PredicateParser",
    "atom_automaton",
    "combine",
    "compile_predicate",
    "default_sequences",
    "parse_predicate",
    "decide",
    "enumerate_accepted",
    "membership",
    "membership_many",
    "SAME_FIRST_LAST",
]
