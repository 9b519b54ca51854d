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
Compile predicates to minimal multi-track automata.

Sums inside atoms are flattened into fresh variables named `_t0`, `_t1`, ...
(never valid in the surface syntax), each tied to its summands by an
addition atom and projected away once the atom is assembled.
"""

import logging
from typing import Dict, List, Mapping, Optional, Tuple, Union

from vtmkit.dfao import DFAO, load_vtm_dfao, run
from vtmkit.exceptions import CompileError
from vtmkit.logic import constructions
from vtmkit.logic.ast import Binary, Comparison, Const, Formula, Not, Quantifier, SequenceAtom, Term, Var, summands
from vtmkit.logic.automaton import (
    DEFAULT_STATE_CEILING,
    TrackAutomaton,
    complement,
    constant_automaton,
    is_padding_closed,
    product,
    project,
)
from vtmkit.logic.parser import parse_predicate

logger = logging.getLogger(__name__)

Operand = Union[str, int]

SWAPPED = {">": "<", ">=": "<="}


def default_sequences() -> Dict[str, DFAO]:
    return {"VTM": load_vtm_dfao()}


class PredicateCompiler:
    """Bottom-up compiler from predicate trees to canonical automata."""

    def __init__(
        self,
        sequences: Optional[Mapping[str, DFAO]] = None,
        state_ceiling: int = DEFAULT_STATE_CEILING,
        verbose: bool = False,
    ):
        self.sequences = dict(sequences) if sequences is not None else default_sequences()
        self.state_ceiling = state_ceiling
        self.verbose = verbose
        self._fresh = 0

    def compile(self, predicate: Union[str, Formula]) -> TrackAutomaton:
        node = parse_predicate(predicate) if isinstance(predicate, str) else predicate
        self._fresh = 0
        result = self._compile(node)
        if self.verbose:
            logger.info(f"Compiled to {result.state_count} states over tracks {list(result.tracks)}")
        return result

    def atom_automaton(self, atom: Union[Comparison, SequenceAtom]) -> TrackAutomaton:
        if isinstance(atom, SequenceAtom):
            return self._checked(self._sequence(atom), atom)
        return self._checked(self._comparison(atom), atom)

    def _compile(self, node: Formula) -> TrackAutomaton:
        if isinstance(node, (Comparison, SequenceAtom)):
            return self.atom_automaton(node)
        if isinstance(node, Not):
            result = complement(self._compile(node.body))
        elif isinstance(node, Binary):
            left = self._compile(node.left)
            right = self._compile(node.right)
            result = product(left, right, node.op, self.state_ceiling, str(node))
        elif isinstance(node, Quantifier):
            result = self._quantify(node)
        else:
            raise CompileError(f"Unsupported node {node!r}")
        return self._checked(result, node)

    def _quantify(self, node: Quantifier) -> TrackAutomaton:
        body = self._compile(node.body)
        if node.variable not in body.tracks:
            return body
        context = str(node)
        if node.kind == "E":
            return project(body, node.variable, self.state_ceiling, context)
        return complement(project(complement(body), node.variable, self.state_ceiling, context))

    def _checked(self, a: TrackAutomaton, node: Formula) -> TrackAutomaton:
        if not is_padding_closed(a):
            raise CompileError(f"Automaton for {node} changes its answer under leading zeros")
        logger.debug(f"{node}: {a.state_count} states over {list(a.tracks)}")
        return a

    def _fresh_variable(self) -> str:
        name = f"_t{self._fresh}"
        self._fresh += 1
        return name

    def _operand(self, term: Term) -> Tuple[Operand, List[TrackAutomaton], List[str]]:
        """Reduce a term to one variable or constant plus the atoms defining any fresh variables."""
        parts = summands(term)
        total = sum(p.value for p in parts if isinstance(p, Const))
        names: List[str] = [p.name for p in parts if isinstance(p, Var)]
        if not names:
            return total, [], []
        if total == 0 and len(names) == 1:
            return names[0], [], []
        atoms: List[TrackAutomaton] = []
        fresh: List[str] = []
        if total:
            c = self._fresh_variable()
            atoms.append(constructions.constant(c, total))
            fresh.append(c)
            names.append(c)
        acc = names[0]
        for name in names[1:]:
            t = self._fresh_variable()
            atoms.append(constructions.addition(acc, name, t))
            fresh.append(t)
            acc = t
        return acc, atoms, fresh

    def _variable(self, operand: Operand, atoms: List[TrackAutomaton], fresh: List[str]) -> str:
        if isinstance(operand, str):
            return operand
        c = self._fresh_variable()
        atoms.append(constructions.constant(c, operand))
        fresh.append(c)
        return c

    def _assemble(self, core: TrackAutomaton, atoms: List[TrackAutomaton], fresh: List[str], context: str):
        result = core
        for atom in atoms:
            result = product(result, atom, "&", self.state_ceiling, context)
        for name in reversed(fresh):
            if name in result.tracks:
                result = project(result, name, self.state_ceiling, context)
        return result

    def _comparison(self, atom: Comparison) -> TrackAutomaton:
        op, left_term, right_term = atom.op, atom.left, atom.right
        if op in SWAPPED:
            op, left_term, right_term = SWAPPED[op], right_term, left_term
        if op == "!=":
            return complement(self._comparison(Comparison("=", left_term, right_term)))
        left, atoms, fresh = self._operand(left_term)
        right, more_atoms, more_fresh = self._operand(right_term)
        atoms += more_atoms
        fresh += more_fresh
        if isinstance(left, int) and isinstance(right, int):
            truth = {"=": left == right, "<": left < right, "<=": left <= right}[op]
            return constant_automaton(truth)
        if op == "=":
            if isinstance(right, int):
                core = constructions.constant(str(left), right)
            elif isinstance(left, int):
                core = constructions.constant(right, left)
            else:
                core = constructions.equality(left, right)
        else:
            x = self._variable(left, atoms, fresh)
            y = self._variable(right, atoms, fresh)
            core = constructions.less_than(x, y, strict=(op == "<"))
        return self._assemble(core, atoms, fresh, str(atom))

    def _sequence(self, atom: SequenceAtom) -> TrackAutomaton:
        dfao = self.sequences.get(atom.sequence)
        if dfao is None:
            known = ", ".join(sorted(self.sequences)) or "none"
            raise CompileError(f"Unknown sequence {atom.sequence!r} (registered: {known})")
        if atom.letter not in dfao.letters:
            raise CompileError(f"Letter {atom.letter} is not an output of {atom.sequence} (outputs {list(dfao.letters)})")
        index, atoms, fresh = self._operand(atom.index)
        if isinstance(index, int):
            return constant_automaton(run(dfao, index) == atom.letter)
        core = constructions.sequence_atom(index, dfao, atom.letter)
        if not is_padding_closed(core):
            raise CompileError(f"Sequence {atom.sequence} depends on leading zeros; it cannot be used in predicates")
        return self._assemble(core, atoms, fresh, str(atom))


def compile_predicate(
    predicate: Union[str, Formula],
    sequences: Optional[Mapping[str, DFAO]] = None,
    state_ceiling: int = DEFAULT_STATE_CEILING,
) -> TrackAutomaton:
    return PredicateCompiler(sequences, state_ceiling).compile(predicate)


def atom_automaton(atom: Union[Comparison, SequenceAtom], sequences: Optional[Mapping[str, DFAO]] = None):
    return PredicateCompiler(sequences).atom_automaton(atom)


def combine(op: str, a: TrackAutomaton, b: Optional[TrackAutomaton] = None, state_ceiling: int = DEFAULT_STATE_CEILING):
    """Boolean connective on compiled automata; 'not' takes one operand."""
    if op in ("not", "~"):
        return complement(a)
    if b is None:
        raise CompileError(f"Operator {op!r} needs two automata")
    symbol = {"and": "&", "or": "|", "implies": "=>", "iff": "<=>"}.get(op, op)
    return product(a, b, symbol, state_ceiling)
