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
Unit tests for the command runtimes.

Tests cover:
- Outcome mapping (confirmed / inconclusive / refuted)
- Artifact output
- Parallel fan-out giving the same entries
- Error handling
"""

import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from vtmkit.cyclic import CyclicUniformMorphism
from vtmkit.exceptions import ArityError, DomainError, PreconditionError
from vtmkit.logic import SAME_FIRST_LAST
from vtmkit.models import Outcome
from vtmkit.runtime import CheckRuntime, DfaoRuntime, GenerateRuntime, MorphismRuntime, PredicateRuntime
from vtmkit.services import ToolkitConfig
from vtmkit.words import Word, vtm_prefix

LEECH = "0121021201210"


class RuntimeTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        self.config = ToolkitConfig(cache_dir=str(self.tmp / "cache"), default_prefix=10**5, residue_prefix=10**5)

    def tearDown(self):
        self._tmp.cleanup()


class TestGenerateRuntime(RuntimeTestCase):
    """Test word generation."""

    def test_vtm_prefix(self):
        result = GenerateRuntime(self.config).generate(15)
        self.assertEqual(result["word"].to_string(), "012021012102012")
        self.assertIsNone(result["path"])
        self.assertIn("generate", result["timings_ms"])

    def test_custom_morphism_to_file(self):
        out = self.tmp / "tm.txt"
        result = GenerateRuntime(self.config, verbose=True).generate(8, morphism="0:01,1:10", out=out)
        self.assertEqual(out.read_text(), "01101001\n")
        self.assertEqual(result["path"], str(out))

    def test_negative_length(self):
        with self.assertRaises(ValueError):
            GenerateRuntime(self.config).generate(-1)

    def test_start_letter_needs_a_morphism(self):
        with self.assertRaises(DomainError):
            GenerateRuntime(self.config).generate(10, seed=1)

    def test_start_letter_with_morphism(self):
        result = GenerateRuntime(self.config).generate(8, morphism="0:01,1:10", seed=1)
        self.assertEqual(result["word"].to_string(), "10010110")


class TestCheckRuntime(RuntimeTestCase):
    """Test the check runtime."""

    def test_squarefree_confirmed(self):
        report = CheckRuntime(self.config).check_squarefree(vtm_prefix(5000))
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertTrue(report.falsifiable)

    def test_squarefree_refuted_with_witness(self):
        report = CheckRuntime(self.config).check_squarefree(Word.from_string("0120121"))
        self.assertEqual(report.outcome, Outcome.REFUTED)
        self.assertEqual(report.evidence, {"position": 0, "period": 3, "square": "012012"})

    def test_theorem1_confirmed(self):
        report = CheckRuntime(self.config).check_theorem1(2, 100)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(len(report.entries), 99)
        self.assertEqual(report.entries[0], {"k": 2, "status": "confirmed", "n": 1, "letter": 2})

    @patch("vtmkit.runtime.check_runtime.check_theorem1", return_value=None)
    def test_theorem1_never_refuted(self, mock_check):
        report = CheckRuntime(self.config).check_theorem1(2, 5)
        self.assertEqual(report.outcome, Outcome.INCONCLUSIVE)
        self.assertEqual(report.evidence["inconclusive"], [2, 3, 4, 5])
        self.assertEqual(mock_check.call_count, 4)

    def test_theorem1_bad_range(self):
        with self.assertRaises(ValueError):
            CheckRuntime(self.config).check_theorem1(5, 2)

    def test_parallel_fan_out_matches_serial(self):
        serial = CheckRuntime(self.config).check_theorem1(2, 60)
        parallel = CheckRuntime(self.config.model_copy(update={"workers": 4})).check_theorem1(2, 60)
        self.assertEqual(serial.entries, parallel.entries)

    def test_residues(self):
        report = CheckRuntime(self.config).check_residues(3, Word.from_string("0"))
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(report.evidence["residues"], [0, 1, 2])

    def test_residues_missing_is_inconclusive(self):
        report = CheckRuntime(self.config).check_residues(5, Word.from_string("010"))
        self.assertEqual(report.outcome, Outcome.INCONCLUSIVE)
        self.assertEqual(report.evidence["missing"], [0, 1, 2, 3, 4])

    def test_doubling(self):
        report = CheckRuntime(self.config).check_doubling(1 << 14, 30)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(report.evidence, {"doubling": True, "power_of_two": True})

    def test_proof(self):
        report = CheckRuntime(self.config).check_proof(2, 40)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        branches = {entry["k"]: entry["branch"] for entry in report.entries}
        self.assertEqual(branches[9], "odd")
        self.assertEqual(branches[16], "power-of-two")
        self.assertEqual(branches[12], "even")


class TestDfaoRuntime(RuntimeTestCase):
    """Test the DFAO rebuild."""

    def test_rebuild_matches_packaged_golden(self):
        config = self.config.model_copy(update={"kernel_compare_len": 1 << 10, "kernel_verify_len": 1 << 16})
        out = self.tmp / "vtm.dfao"
        dot = self.tmp / "vtm.dot"
        report = DfaoRuntime(config).build(out=out, dot=dot)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(report.evidence["states"], 4)
        self.assertTrue(out.read_text().startswith("states 4 initial 0"))
        self.assertTrue(dot.read_text().startswith("digraph vtm"))

    def test_mismatching_golden_is_refuted(self):
        config = self.config.model_copy(update={"kernel_compare_len": 1 << 10, "kernel_verify_len": 1 << 16})
        golden = self.tmp / "other.dfao"
        golden.write_text("states 1 initial 0\n0 0 0 0\n")
        report = DfaoRuntime(config).build(golden=golden)
        self.assertEqual(report.outcome, Outcome.REFUTED)
        self.assertFalse(report.evidence["golden_match"])


class TestPredicateRuntime(RuntimeTestCase):
    """Test predicate evaluation."""

    def test_closed_formula(self):
        report = PredicateRuntime(self.config).evaluate("Ei VTM[i]=@1")
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(report.summary, "true")

    def test_false_formula_is_refuted(self):
        report = PredicateRuntime(self.config).evaluate("Ei VTM[i]=@2 & VTM[i+1]=@2")
        self.assertEqual(report.outcome, Outcome.REFUTED)

    def test_membership(self):
        runtime = PredicateRuntime(self.config)
        self.assertEqual(runtime.evaluate(SAME_FIRST_LAST, member={"k": 5}).outcome, Outcome.CONFIRMED)
        self.assertEqual(runtime.evaluate(SAME_FIRST_LAST, member={"k": 1}).outcome, Outcome.REFUTED)

    def test_enumerate_and_write_automaton(self):
        out = self.tmp / "gap.aut"
        report = PredicateRuntime(self.config).evaluate(SAME_FIRST_LAST, enumerate_limit=3, out=out)
        self.assertEqual(report.entries, [{"k": 0}, {"k": 2}, {"k": 3}])
        self.assertTrue(out.read_text().startswith("tracks k"))

    def test_free_variables_need_a_query(self):
        with self.assertRaises(ArityError):
            PredicateRuntime(self.config).evaluate("x<y")

    def test_registered_sequence_file(self):
        tm = self.tmp / "tm.dfao"
        tm.write_text("states 2 initial 0\n0 0 0 1\n1 1 1 0\n")
        report = PredicateRuntime(self.config).evaluate("Ei TM[i]=@1 & TM[i+1]=@1", sequence_files={"TM": tm})
        self.assertEqual(report.outcome, Outcome.CONFIRMED)


class TestMorphismRuntime(RuntimeTestCase):
    """Test morphism search and embedding."""

    def test_search_writes_certified_morphism(self):
        out = self.tmp / "k1.morphism"
        report = MorphismRuntime(self.config).search(1, out=out)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(out.read_text(), "k 1\nimage0 0\ncertified yes\n")

    def test_exhaustive_none_is_refuted(self):
        report = MorphismRuntime(self.config).search(3, exhaustive=True)
        self.assertEqual(report.outcome, Outcome.REFUTED)
        self.assertTrue(report.falsifiable)
        self.assertEqual(report.evidence["status"], "none")

    def test_budget_exhausted_is_inconclusive(self):
        config = self.config.model_copy(update={"search_node_budget": 3})
        report = MorphismRuntime(config).search(13)
        self.assertEqual(report.outcome, Outcome.INCONCLUSIVE)
        self.assertEqual(report.evidence["status"], "budget_exhausted")

    def test_embed(self):
        word = self.tmp / "w.txt"
        word.write_text(vtm_prefix(100).to_string())
        morphism = self.tmp / "h.morphism"
        morphism.write_text(CyclicUniformMorphism.from_string(LEECH).to_text(True))
        out = self.tmp / "v.txt"
        report = MorphismRuntime(self.config).embed(word, morphism, out=out)
        self.assertEqual(report.outcome, Outcome.CONFIRMED)
        self.assertEqual(report.evidence["length"], 1300)
        self.assertTrue(report.evidence["progression_identity"])
        self.assertEqual(len(out.read_text().strip()), 1300)

    def test_embed_refuses_uncertified_morphism(self):
        word = self.tmp / "w.txt"
        word.write_text("0120")
        morphism = self.tmp / "h.morphism"
        # the file claims a certificate the morphism does not have
        morphism.write_text("k 3\nimage0 012\ncertified yes\n")
        with self.assertRaises(PreconditionError):
            MorphismRuntime(self.config).embed(word, morphism)


if __name__ == "__main__":
    unittest.main()
