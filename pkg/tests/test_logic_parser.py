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
Tests for the predicate parser.
"""

import pytest

from vtmkit.exceptions import PredicateSyntaxError
from vtmkit.logic import SAME_FIRST_LAST, parse_predicate
from vtmkit.logic.ast import (
    Add,
    Binary,
    Comparison,
    Const,
    Not,
    Quantifier,
    SequenceAtom,
    Var,
    bound_variables,
    free_variables,
    sequence_names,
)


class TestParse:
    """Well-formed predicates."""

    def test_sequence_atom_under_quantifier(self):
        assert parse_predicate("Ei VTM[i]=@0") == Quantifier("E", "i", SequenceAtom("VTM", Var("i"), 0))

    def test_comparison_with_sum(self):
        node = parse_predicate("x+1 <= y")
        assert node == Comparison("<=", Add(Var("x"), Const(1)), Var("y"))

    def test_and_binds_tighter_than_or(self):
        node = parse_predicate("x=0 | y=0 & z=0")
        assert isinstance(node, Binary) and node.op == "|"
        assert isinstance(node.right, Binary) and node.right.op == "&"

    def test_implication_is_right_associative(self):
        node = parse_predicate("a=0 => b=0 => c=0")
        assert node.op == "=>"
        assert node.left == Comparison("=", Var("a"), Const(0))
        assert isinstance(node.right, Binary) and node.right.op == "=>"

    def test_quantifier_list(self):
        node = parse_predicate("Ax,y x+y=y+x")
        assert isinstance(node, Quantifier) and node.kind == "A" and node.variable == "x"
        assert isinstance(node.body, Quantifier) and node.body.variable == "y"

    def test_quantifier_body_extends_right(self):
        node = parse_predicate(SAME_FIRST_LAST)
        assert isinstance(node, Quantifier)
        assert isinstance(node.body, Binary) and node.body.op == "|"
        assert free_variables(node) == frozenset({"k"})
        assert bound_variables(node) == frozenset({"i"})
        assert sequence_names(node) == frozenset({"VTM"})

    def test_negation(self):
        assert parse_predicate("~x<y") == Not(Comparison("<", Var("x"), Var("y")))

    def test_whitespace_is_insignificant(self):
        assert parse_predicate("Ei(VTM[i+k]=@2)") == parse_predicate(" E i ( VTM [ i + k ] = @ 2 ) ")

    def test_str_reparses(self):
        node = parse_predicate("Ei (i<k & VTM[i]=@1) | ~(k=3)")
        assert parse_predicate(str(node)) == node


class TestSyntaxErrors:
    """Malformed predicates report a position."""

    @pytest.mark.parametrize(
        "text,position",
        [
            ("x <", 3),
            ("x < y)", 5),
            ("x ? y", 2),
            ("VTM[i]=0", 7),
            ("Ei", 2),
            ("(x=1", 4),
        ],
    )
    def test_error_position(self, text, position):
        with pytest.raises(PredicateSyntaxError) as excinfo:
            parse_predicate(text)
        assert excinfo.value.position == position
        assert excinfo.value.text == text

    def test_rebinding_rejected(self):
        with pytest.raises(PredicateSyntaxError) as excinfo:
            parse_predicate("Ex Ex x=0")
        assert excinfo.value.position == 4

    def test_sibling_quantifiers_may_reuse_a_name(self):
        node = parse_predicate("(Ex x=0) & (Ex x=1)")
        assert bound_variables(node) == frozenset({"x"})
