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
Tests for predicate compilation and the queries on compiled automata.

Each oracle formula is compared with a numpy expression over every
assignment below a small bound.
"""

import numpy as np
import pytest

from vtmkit.dfao import DFAO, load_vtm_dfao
from vtmkit.exceptions import ArityError, CompileError, StateCeilingError
from vtmkit.logic import (
    SAME_FIRST_LAST,
    PredicateCompiler,
    TrackAutomaton,
    combine,
    compile_predicate,
    complement,
    decide,
    enumerate_accepted,
    is_padding_closed,
    isomorphic,
    membership,
    membership_many,
    parse_predicate,
    read_automaton,
)
from vtmkit.logic.automaton import product, project
from vtmkit.logic.constructions import addition, constant, less_than
from vtmkit.words import find_bounded_gap_factor, vtm_prefix

V = vtm_prefix(1024).letters.astype(np.int64)

ONE_VARIABLE = [
    ("x=5", lambda x: x == 5),
    ("x!=0", lambda x: x != 0),
    ("Ey x=y+y", lambda x: x % 2 == 0),
    ("Ey x=y+y+1", lambda x: x % 2 == 1),
    ("Ey x=y+y+y", lambda x: x % 3 == 0),
    ("Ay x<=y", lambda x: x == 0),
    ("Ey (y<x & y+y=x)", lambda x: (x > 0) & (x % 2 == 0)),
    ("Ey x+y=7", lambda x: x <= 7),
    ("x+3>10", lambda x: x > 7),
    ("VTM[x]=@0", lambda x: V[x] == 0),
    ("VTM[x+1]=@2", lambda x: V[x + 1] == 2),
    ("VTM[x]=@1 | VTM[x]=@2", lambda x: V[x] != 0),
    ("Ey (VTM[y]=@1 & x=y+y)", lambda x: (x % 2 == 0) & (V[x // 2] == 1)),
    ("VTM[x]=@0 => VTM[x+x]=@0", lambda x: (V[x] != 0) | (V[2 * x] == 0)),
]

TWO_VARIABLES = [
    ("x=y", lambda x, y: x == y),
    ("x<y", lambda x, y: x < y),
    ("x<=y", lambda x, y: x <= y),
    ("x>y", lambda x, y: x > y),
    ("x>=y", lambda x, y: x >= y),
    ("x!=y", lambda x, y: x != y),
    ("~(x=y)", lambda x, y: x != y),
    ("x<y | y<x", lambda x, y: x != y),
    ("x<y <=> y>x", lambda x, y: np.ones_like(x, dtype=bool)),
    ("x+x=y", lambda x, y: 2 * x == y),
    ("x+2=y", lambda x, y: x + 2 == y),
    ("Ez x+y=z", lambda x, y: np.ones_like(x, dtype=bool)),
    ("VTM[x]=@0 & VTM[y]=@0", lambda x, y: (V[x] == 0) & (V[y] == 0)),
    ("VTM[x+y]=@2", lambda x, y: V[x + y] == 2),
]

THREE_VARIABLES = [
    ("x+y=z", lambda x, y, z: x + y == z),
    ("x<y & y<z", lambda x, y, z: (x < y) & (y < z)),
    ("x=y => y=z", lambda x, y, z: (x != y) | (y == z)),
    ("x+y+1=z", lambda x, y, z: x + y + 1 == z),
    ("Ew (x<w & w<z) & y<z", lambda x, y, z: (z - x >= 2) & (y < z)),
    ("Ew (w<x & w+y=z)", lambda x, y, z: (y <= z) & (z - y < x)),
]


def _grid(count, bound):
    return [axis.ravel() for axis in np.meshgrid(*([np.arange(bound)] * count), indexing="ij")]


# ---------------------------------------------------------------------------
# Oracle comparisons
# ---------------------------------------------------------------------------

class TestOracleFormulas:
    """Compiled automata agree with direct evaluation."""

    @pytest.mark.parametrize("formula,oracle", ONE_VARIABLE)
    def test_one_variable(self, formula, oracle):
        a = compile_predicate(formula)
        assert a.tracks == ("x",)
        (x,) = _grid(1, 1 << 7)
        assert np.array_equal(membership_many(a, {"x": x}), oracle(x)), formula

    @pytest.mark.parametrize("formula,oracle", TWO_VARIABLES)
    def test_two_variables(self, formula, oracle):
        a = compile_predicate(formula)
        x, y = _grid(2, 1 << 7)
        assert np.array_equal(membership_many(a, {"x": x, "y": y}), oracle(x, y)), formula

    @pytest.mark.parametrize("formula,oracle", THREE_VARIABLES)
    def test_three_variables(self, formula, oracle):
        a = compile_predicate(formula)
        x, y, z = _grid(3, 1 << 7)
        assert np.array_equal(membership_many(a, {"x": x, "y": y, "z": z}), oracle(x, y, z)), formula

    def test_membership_matches_membership_many(self):
        a = compile_predicate("Ey (VTM[y]=@1 & x=y+y)")
        for x in range(64):
            assert membership(a, {"x": x}) == bool(membership_many(a, {"x": [x]})[0])

    def test_every_automaton_is_padding_closed(self):
        for formula, _ in ONE_VARIABLE + TWO_VARIABLES + THREE_VARIABLES:
            assert is_padding_closed(compile_predicate(formula)), formula


# ---------------------------------------------------------------------------
# The gap predicate
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def same_first_last():
    return compile_predicate(SAME_FIRST_LAST)


class TestSameFirstLast:
    """0u0 or 2u2 factors with |u| = k-1."""

    def test_tracks(self, same_first_last):
        assert same_first_last.tracks == ("k",)

    def test_matches_brute_force(self, same_first_last):
        prefix = vtm_prefix(10**5)
        expected = np.array([k == 0 or find_bounded_gap_factor(prefix, k) is not None for k in range(1 << 7)])
        assert np.array_equal(membership_many(same_first_last, {"k": np.arange(1 << 7)}), expected)

    def test_membership(self, same_first_last):
        assert membership(same_first_last, {"k": 5})
        assert not membership(same_first_last, {"k": 1})

    def test_enumerate(self, same_first_last):
        found = [entry["k"] for entry in enumerate_accepted(same_first_last, 10)]
        assert found == [0, 2, 3, 4, 5, 6, 7, 8, 9, 10]

    def test_every_k_except_one(self):
        assert decide(compile_predicate(f"Ak (k!=1 <=> ({SAME_FIRST_LAST}))"))


# ---------------------------------------------------------------------------
# Closed formulas and queries
# ---------------------------------------------------------------------------

class TestDecide:
    """Closed formulas."""

    @pytest.mark.parametrize(
        "formula,expected",
        [
            ("Ei VTM[i]=@1", True),
            ("Ei VTM[i]=@1 & VTM[i+1]=@1", False),
            ("Ei VTM[i]=@0 & VTM[i+1]=@0", False),
            ("Ei VTM[i]=@0 & VTM[i+1]=@1 & VTM[i+2]=@0", False),
            ("Ai Ej j>i & VTM[j]=@2", True),
            ("Ai VTM[i]=@0 => VTM[i+i]=@0", True),
            ("Ai,j i+j=j+i", True),
            ("Ax Ey y=x+1", True),
            ("Ex Ay y<=x", False),
            ("3+4=7", True),
            ("2<1", False),
        ],
    )
    def test_decide(self, formula, expected):
        assert decide(compile_predicate(formula)) is expected

    def test_decide_needs_closed_formula(self):
        with pytest.raises(ArityError):
            decide(compile_predicate("x<y"))

    def test_membership_needs_every_track(self):
        with pytest.raises(ArityError):
            membership(compile_predicate("x<y"), {"x": 1})

    def test_enumerate_pairs_in_shortlex_order(self):
        found = enumerate_accepted(compile_predicate("x+1=y"), 4)
        assert found == [{"x": 0, "y": 1}, {"x": 1, "y": 2}, {"x": 2, "y": 3}, {"x": 3, "y": 4}]

    def test_enumerate_stops_on_finite_language(self):
        assert enumerate_accepted(compile_predicate("x<3"), 10) == [{"x": 0}, {"x": 1}, {"x": 2}]

    def test_enumerate_closed_formula(self):
        assert enumerate_accepted(compile_predicate("Ei VTM[i]=@1"), 5) == [{}]
        assert enumerate_accepted(compile_predicate("2<1"), 5) == []


class TestAutomatonAlgebra:
    """Canonical forms and boolean combinations."""

    def test_double_negation_is_isomorphic(self):
        assert isomorphic(compile_predicate("~~(x<y)"), compile_predicate("x<y"))

    def test_complement_is_an_involution(self):
        a = compile_predicate("Ey x=y+y")
        assert complement(complement(a)) == a

    def test_canonical_form_is_unique(self):
        assert compile_predicate("x<y") == compile_predicate("y>x")
        assert compile_predicate("x<=y") == compile_predicate("x<y | x=y")

    def test_combine(self):
        even = compile_predicate("Ey x=y+y")
        small = compile_predicate("x<8")
        both = combine("and", even, small)
        assert [entry["x"] for entry in enumerate_accepted(both, 10)] == [0, 2, 4, 6]
        assert combine("not", even) == complement(even)
        with pytest.raises(CompileError):
            combine("or", even)

    def test_addition_automaton_has_two_live_states(self):
        a = addition("x", "y", "z")
        assert a.tracks == ("x", "y", "z")
        assert a.state_count == 3

    def test_project_constant_offset(self):
        a = project(product(addition("x", "_c", "z"), constant("_c", 7), "&"), "_c")
        assert membership(a, {"x": 0, "z": 7})
        assert not membership(a, {"x": 1, "z": 7})

    def test_less_than(self):
        strict = less_than("x", "y", strict=True)
        assert membership(strict, {"x": 2, "y": 5})
        assert not membership(strict, {"x": 5, "y": 5})
        assert membership(less_than("x", "y", strict=False), {"x": 5, "y": 5})

    def test_text_round_trip(self, tmp_path):
        a = compile_predicate("x+y=z")
        path = tmp_path / "add.aut"
        path.write_text(a.to_text())
        assert read_automaton(path) == a
        assert TrackAutomaton.from_text(a.to_text()) == a

    def test_dot_rendering(self):
        dot = compile_predicate("x<y").to_dot("lt")
        assert dot.startswith("digraph lt {")
        assert 'label="tracks: x,y"' in dot


class TestCompileErrors:
    """Errors raised while compiling."""

    def test_unknown_sequence(self):
        with pytest.raises(CompileError):
            compile_predicate("Ei FOO[i]=@0")

    def test_letter_outside_outputs(self):
        with pytest.raises(CompileError):
            compile_predicate("Ei VTM[i]=@3")

    def test_state_ceiling(self):
        with pytest.raises(StateCeilingError) as excinfo:
            compile_predicate("x+y=z", state_ceiling=1)
        assert excinfo.value.ceiling == 1

    def test_leading_zero_sensitive_sequence_rejected(self):
        # output changes after a leading 0
        odd = DFAO.from_rows([(1, 1), (1, 1)], [0, 1])
        with pytest.raises(CompileError):
            compile_predicate("Ei S[i]=@1", sequences={"S": odd})

    def test_registered_sequence(self):
        tm = DFAO.from_rows([(0, 1), (1, 0)], [0, 1])
        compiler = PredicateCompiler({"VTM": load_vtm_dfao(), "TM": tm})
        a = compiler.compile("TM[x]=@1")
        x = np.arange(64)
        parity = np.array([bin(n).count("1") % 2 for n in range(64)])
        assert np.array_equal(membership_many(a, {"x": x}), parity == 1)

    def test_compile_accepts_parsed_tree(self):
        tree = parse_predicate("x<y")
        assert PredicateCompiler().compile(tree) == compile_predicate("x<y")
