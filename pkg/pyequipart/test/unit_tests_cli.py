import os.path
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)) + (os.path.sep + "..") * 2)

import contextlib
import importlib.util
import io
import json
import tempfile
import unittest

import numpy as np

from pyequipart.cli import main
from pyequipart.common.equipart_io import config_from_json, dumps, load_json, measure_from_dict, measure_to_dict
from pyequipart.measures import GaussianMixtureMeasure, GridDensityMeasure, PointCloudMeasure


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class JsonUnitTestCase(unittest.TestCase):
    ############################################################
    def test_load_json(self):
        ############################################################
        self.assertEqual(load_json("[1, 2]"), [1, 2])
        with self.assertRaises(ValueError) as cm:
            load_json('{"type": "points",\n "points": [1, 2')
        self.assertIn("line 2", str(cm.exception))
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "m.json")
            with open(path, "w") as f:
                f.write('{"type": "points", "points": [[0, 0], [1, 1]]}')
            self.assertEqual(load_json(path)["type"], "points")
        self.assertTrue(dumps({"b": 1, "a": 2}).startswith('{\n  "a": 2'))
        self.assertRaises(ValueError, dumps, {"a": float("nan")})

    ############################################################
    def test_measures(self):
        ############################################################
        measures = [
            PointCloudMeasure([[0.0, 1.0], [2.0, 3.0]], [1.0, 2.0]),
            GridDensityMeasure([0, 0], [1, 2], (2, 3), np.arange(6.0)),
            GaussianMixtureMeasure([[0.0, 0.0, 1.0]], 0.5),
        ]
        U = np.array([[1.0, 0.3, -0.5], [0.2, -1.0, 0.4]])
        for m in measures[:2]:
            again = measure_from_dict(json.loads(dumps(measure_to_dict(m))))
            self.assertTrue(np.allclose(again._orthant_masses(U), m._orthant_masses(U)))
        self.assertEqual(measure_from_dict(measure_to_dict(measures[2])).dim, 3)
        self.assertRaises(ValueError, measure_from_dict, {"type": "points", "dim": 3, "points": [[0.0, 1.0]]})
        self.assertRaises(ValueError, measure_from_dict, {"type": "sphere"})
        self.assertRaises(ValueError, measure_from_dict, [1, 2])

    ############################################################
    def test_config_from_json(self):
        ############################################################
        a = config_from_json({"dim": 2, "u": [[1, 0, 0], [0, 1, 0]]})
        b = config_from_json([{"a": [1, 0], "c": 0}, {"a": [0, 1], "c": 0}])
        c = config_from_json({"hyperplanes": [{"a": [1, 0], "c": 0}, {"a": [0, 1], "c": 0}]})
        self.assertLess(a.distance(b), 1e-12)
        self.assertLess(b.distance(c), 1e-12)


class CliUnitTestCase(unittest.TestCase):
    gaussians = json.dumps(
        {"type": "gaussians", "dim": 2, "means": [[1, 0], [-1, 0.5], [0, -1]], "sigmas": [0.5, 0.7, 0.4]}
    )

    ############################################################
    def test_swcheck(self):
        ############################################################
        code, out, _ = run("swcheck")
        self.assertEqual(code, 0)
        self.assertIn("result = (1, 1)", out)
        code, out, _ = run("swcheck", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["result"], [1, 1])

    ############################################################
    def test_graycode(self):
        ############################################################
        code, out, _ = run("graycode", "classify", "--n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "1 equivalence class")
        code, out, _ = run("graycode", "classify", "--n", "4", "--format", "json")
        self.assertEqual(len(json.loads(out)["classes"]), 1)
        code, out, _ = run("graycode", "enumerate", "--n", "3")
        self.assertEqual(len(json.loads(out)["cycles"]), 12)
        code, out, _ = run("graycode", "reversal")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["holds"])

    ############################################################
    def test_input_errors(self):
        ############################################################
        code, _, err = run("solve2d", '{"type": "points", ')
        self.assertEqual(code, 1)
        self.assertIn("Malformed JSON", err)
        self.assertEqual(run("frobnicate")[0], 1)
        self.assertEqual(run("graycode", "classify", "--format", "svg")[0], 1)
        asymmetric = json.dumps({"type": "gaussians", "dim": 4, "means": [[1, 2, 3, 4], [0, 1, 0, 1]], "sigmas": 0.5})
        code, _, err = run("solve4d", asymmetric, "--symmetry", "plane")
        self.assertEqual(code, 1)
        self.assertIn("not invariant", err)
        self.assertEqual(run("solve4d", asymmetric, "--symmetry", "mirror3")[0], 1)
        seeded = run("solve4d", asymmetric, "--symmetry", "plane", "--seed", "5")
        self.assertEqual(seeded[0], 1)
        self.assertEqual(run("solve4d", asymmetric, "--symmetry", "plane", "--seed", "5"), seeded)

    ############################################################
    def test_solve2d(self):
        ############################################################
        code, out, _ = run("solve2d", self.gaussians)
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertEqual(result["status"], "converged")
        self.assertEqual(len(result["u"]), 2)

    ############################################################
    @unittest.skipIf(importlib.util.find_spec("matplotlib") is None, "matplotlib not found")
    def test_svg(self):
        ############################################################
        code, out, _ = run("solve2d", self.gaussians, "--format", "svg")
        self.assertEqual(code, 0)
        self.assertIn("<svg", out)
        code, out, _ = run("curve", "trace", "--phases", "2", "--format", "svg")
        self.assertEqual(code, 0)
        self.assertIn("<svg", out)

    ############################################################
    def test_output_file(self):
        ############################################################
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "trace.json")
            code, out, _ = run("curve", "trace", "--phases", "2", "-o", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path) as f:
                result = json.load(f)
        self.assertEqual(result["phases"], 2)
        self.assertEqual(len(result["solutions"]), 2)
        self.assertEqual(len(result["solutions"][0]["u"]), 4)

    ############################################################
    def test_curve_check(self):
        ############################################################
        code, out, _ = run("curve", "check", "--samples", "500", "--seed", "7")
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertLessEqual(result["max_intersections"], 4)
        self.assertEqual(result["violations"], 0)
        self.assertEqual(run("curve", "check", "--samples", "500", "--seed", "7")[1], out)


if __name__ == "__main__":
    """
    run tests
    """
    unittest.main()
