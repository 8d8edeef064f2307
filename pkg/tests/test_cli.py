from dbrglib.cli import run
from dbrglib.network import make_subdivision, make_complete_graph, make_complete_bipartite, make_petersen, make_path
from dbrglib.biregular import subdivided_complete_array, complete_bipartite_array
from contextlib import redirect_stdout, redirect_stderr
from typing import Dict, Any, List, Tuple
import tempfile
import unittest
import json
import io
import os

class TestCli(unittest.TestCase):
    """ Unit tests for the command line frontend """

    def setUp(self) -> None:
        self.directory: tempfile.TemporaryDirectory = tempfile.TemporaryDirectory()
        self.files: Dict[str, str] = {
            "s_k4.json": subdivided_complete_array(3).to_json_string(),
            "kb_2_3.json": complete_bipartite_array(3, 2).to_json_string(),
            "infeasible.json": json.dumps({"k0": 2, "k1": 2, "D0": 2, "D1": 2, "c0": [1, 1], "c1": [1, 1]}),
            "broken.json": "{\"k0\": 2,",
            "s_k4.edges": make_subdivision(make_complete_graph(4)).to_edge_list(),
            "kb_2_3.edges": make_complete_bipartite(2, 3).to_edge_list(),
            "petersen.edges": make_petersen().to_edge_list(),
            "path3.json": make_path(3).to_json_string(),
            "kb_2_3.equilibrium.json": json.dumps({"q0": ["0", "4/3", "5/3"], "q1": ["0", "2", "5/2"], "m0": [1, 3, 1], "m1": [1, 2, 2]}),
        }
        for name, content in self.files.items():
            with open(self.path(name), "w", encoding = "utf-8") as file:
                file.write(content)

    def tearDown(self) -> None:
        self.directory.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.directory.name, name)

    def invoke(self, *argv: str) -> Tuple[int, str, str]:
        """ Runs the command line and captures its exit code, output and errors """

        stdout: io.StringIO = io.StringIO()
        stderr: io.StringIO = io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(stderr):
            code: int = run(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def test_validate(self):
        """ Tests the exit codes of a feasible and an infeasible array """

        code, output, _ = self.invoke("validate", "--array", self.path("s_k4.json"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output), {"passed": True, "failures": []})

        code, output, _ = self.invoke("validate", "--array", self.path("infeasible.json"))
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(output)["passed"])

    def test_derive(self):
        """ Tests the counts of the subdivided K_4 """

        code, output, _ = self.invoke("derive", "--array", self.path("s_k4.json"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["n"], 10)

    def test_check_m_array(self):
        """ Tests that the subdivided K_4 fails the array inequality """

        code, output, _ = self.invoke("check-m", "--array", self.path("s_k4.json"))
        report: Dict[str, Any] = json.loads(output)

        self.assertEqual(code, 1)
        self.assertFalse(report["m_property"]["verdict"])
        self.assertEqual(report["m_property"]["method"], "array-inequality")
        self.assertFalse(report["necessary_condition"])

    def test_check_m_graph(self):
        """ Tests the general M-property test on K_{2,3} """

        code, output, _ = self.invoke("check-m", "--graph", self.path("kb_2_3.edges"))
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(output)["m_property"]["verdict"])
        self.assertTrue(json.loads(output)["equilibrium_array_test"]["verdict"])

    def test_green_array(self):
        """ Tests the group inverse entries of K_{2,3} from its array """

        code, output, _ = self.invoke("green", "--array", self.path("kb_2_3.json"), "--side", "0")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["entries"], ["17/75", "-1/25", "-8/75"])

    def test_green_graph_with_decimals(self):
        """ Tests the group inverse of a network file with the display-only decimal columns """

        code, output, _ = self.invoke("green", "--graph", self.path("path3.json"), "--decimal", "4")
        report: Dict[str, Any] = json.loads(output)

        self.assertEqual(code, 0)
        self.assertEqual(report["vertices"], ["0", "1", "2"])
        self.assertEqual(report["entries"][0][0], "5/9")
        self.assertEqual(report["entries_decimal"][0][0], "0.5556")

    def test_resist(self):
        """ Tests the resistances of a pair, of a distance and of every pair as CSV """

        code, output, _ = self.invoke("resist", "--graph", self.path("kb_2_3.edges"), "--pair", "u0", "w0")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["resistances"], [{"x": "u0", "y": "w0", "resistance": "2/3"}])

        code, output, _ = self.invoke("resist", "--array", self.path("kb_2_3.json"), "--side", "0", "--distance", "1")
        self.assertEqual(json.loads(output)["resistances"], [{"distance": 1, "resistance": "2/3"}])

        code, output, _ = self.invoke("resist", "--graph", self.path("path3.json"), "--format", "csv")
        self.assertEqual(output.splitlines(), [",0,1,2", "0,0,1,2", "1,1,0,1", "2,2,1,0"])

    def test_equil(self):
        """ Tests the equilibrium measure of one vertex and the equilibrium arrays of an array """

        code, output, _ = self.invoke("equil", "--graph", self.path("path3.json"), "--vertex", "0")
        measures: List[Dict[str, Any]] = json.loads(output)["measures"]
        self.assertEqual(code, 0)
        self.assertEqual(measures[0]["measure"]["capacity"], "5")
        self.assertEqual(measures[0]["array"]["levels"], ["0", "2", "3"])

        code, output, _ = self.invoke("equil", "--array", self.path("kb_2_3.json"))
        report: Dict[str, Any] = json.loads(output)
        self.assertEqual(report["equilibrium"], {"q0": ["0", "4/3", "5/3"], "q1": ["0", "2", "5/2"]})
        self.assertEqual(report["capacities"], ["17/3", "9"])
        self.assertTrue(report["cross_relation"])

    def test_classify_and_recover(self):
        """ Tests the case of an array and the recovery of an array """

        code, output, _ = self.invoke("classify", "--array", self.path("s_k4.json"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["case"], "QSD_D3D4")

        code, output, _ = self.invoke("recover", "--equilibrium", self.path("kb_2_3.equilibrium.json"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output), complete_bipartite_array(3, 2).to_dict())

    def test_detect_and_verify(self):
        """ Tests the recognition and the oracle comparison of the subdivided K_4 """

        code, output, _ = self.invoke("detect", "--graph", self.path("s_k4.edges"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["array"], subdivided_complete_array(3).to_dict())

        code, output, _ = self.invoke("verify", "--graph", self.path("s_k4.edges"), "--threads", "2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)["summary"], "all 100 entries match")

        code, output, _ = self.invoke("detect", "--graph", self.path("petersen.edges"))
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(output)["summary"], "not distance-biregular")

    def test_search_to_file(self):
        """ Tests that the search writes JSON lines to the output file """

        target: str = self.path("arrays.jsonl")
        code, output, _ = self.invoke("search", "--max-k", "3", "--max-d", "4", "--max-n", "12", "--out", target)
        self.assertEqual(code, 0)
        self.assertEqual(output, "")

        with open(target, "r", encoding = "utf-8") as file:
            lines: List[Dict[str, Any]] = [json.loads(line) for line in file.read().splitlines()]
        self.assertGreater(len(lines), 0)
        self.assertEqual(lines[0]["case"], "Digon")
        self.assertEqual([line["n"] for line in lines], sorted(line["n"] for line in lines))

    def test_qsd(self):
        """ Tests the design condition for one parameter set and for a range """

        code, output, _ = self.invoke("qsd", "--r", "4", "--k", "3", "--lambda", "1", "--y", "1")
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(output)["condition"])

        code, output, _ = self.invoke("qsd", "--range", "6")
        self.assertEqual(code, 0)
        self.assertTrue(all("condition" in json.loads(line) for line in output.splitlines()))

        code, _, errors = self.invoke("qsd", "--r", "4", "--k", "3", "--lambda", "1", "--y", "2")
        self.assertEqual(code, 2)
        self.assertTrue(errors.startswith("dbrglib: error:"))

    def test_input_errors(self):
        """ Tests that every kind of bad input gives exit code 2 and a one line diagnostic """

        for argv in [
            ("validate", "--array", self.path("missing.json")),
            ("validate", "--array", self.path("broken.json")),
            ("green", "--array", self.path("kb_2_3.json")),
            ("verify", "--graph", self.path("kb_2_3.json")),
        ]:
            code, output, errors = self.invoke(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(output, "")
            self.assertTrue(errors.startswith("dbrglib: error:"), errors)

        code, _, _ = self.invoke("unknown-verb")
        self.assertEqual(code, 2)
        code, _, _ = self.invoke("derive", "--array", self.path("s_k4.json"), "--no-such-flag")
        self.assertEqual(code, 2)

    def test_malformed_input_files(self):
        """ Tests that undecodable edge lists and malformed recovery documents give exit code 2 """

        with open(self.path("binary.edges"), "wb") as file:
            file.write(b"\xff\xfe a b\n")
        documents: Dict[str, Any] = {
            "letters.json": {"q0": ["0", "4/3", "5/3"], "q1": ["0", "2", "5/2"], "m0": ["x"], "m1": [1, 2, 2]},
            "nested.json": {"q0": ["0", "4/3", "5/3"], "q1": ["0", "2", "5/2"], "m0": [[1], 3, 1], "m1": [1, 2, 2]},
            "listed.json": [1, 2, 3],
        }
        for name, document in documents.items():
            with open(self.path(name), "w", encoding = "utf-8") as file:
                json.dump(document, file)

        for argv in [
            ("detect", "--graph", self.path("binary.edges")),
            ("green", "--graph", self.path("binary.edges")),
            ("recover", "--equilibrium", self.path("letters.json")),
            ("recover", "--equilibrium", self.path("nested.json")),
            ("recover", "--equilibrium", self.path("listed.json")),
        ]:
            code, output, errors = self.invoke(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(output, "")
            self.assertTrue(errors.startswith("dbrglib: error:"), errors)

    def test_output_is_deterministic(self):
        """ Tests that identical invocations give byte-identical output whatever the thread count """

        _, first, _ = self.invoke("green", "--graph", self.path("s_k4.edges"))
        _, second, _ = self.invoke("green", "--graph", self.path("s_k4.edges"), "--threads", "4")
        self.assertEqual(first, second)
