"""CLI integration tests.

usage: test_cli.py BINARY SCHEMA {behavior|schema}
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = None
SCHEMA = None


def run(*args):
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def run_json(*args):
    code, out, err = run(*args, "--format", "json")
    if code != 0:
        raise AssertionError(f"{args}: exit {code}: {err}")
    return json.loads(out)


def first(report):
    return report["results"][0]


class Behavior(unittest.TestCase):
    def test_exact_small(self):
        self.assertEqual(first(run_json("exact", "--n", "1", "--alpha", "3"))["Z"], "1")
        r = first(run_json("exact", "--n", "2", "--alpha", "3", "--brute-force"))
        self.assertEqual(r["Z"], "5")
        self.assertEqual(r["check"], "MATCH")
        code, out, _ = run("exact", "--n", "2", "--alpha", "3", "--brute-force")
        self.assertEqual(code, 0)
        self.assertIn("MATCH", out)

    def test_configuration_counts(self):
        for n, count in [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)]:
            r = first(run_json("exact", "--n", str(n), "--alpha", "7/2", "--brute-force"))
            self.assertEqual(r["configurations"], count)
            self.assertEqual(r["check"], "MATCH")

    def test_equilibrium_tau_zero(self):
        r = first(run_json("equilibrium", "--tau", "0", "--t", "1"))
        self.assertEqual(r["b"], "4")
        self.assertEqual(r["l"], "-2")
        self.assertLess(abs(float(r["v"]) - 7 / 6), 1e-15)

    def test_specfn_j_at_zero(self):
        r = first(run_json("specfn", "--fn", "J", "--z", "0"))
        self.assertTrue(r["value"].startswith("0.3068528194"))
        self.assertEqual(r["branch"], "series_small")

    def test_constant_c(self):
        r = first(run_json("constant-c", "--tol", "1e-9"))
        self.assertLess(abs(float(r["c"]) - 0.4616571210), 1e-8)
        self.assertLessEqual(float(r["error_bound"]), 1e-9)

    def test_compare_decay(self):
        rep = run_json("compare", "--alpha-from-t", "1", "--n", "10,20")
        rows = rep["results"]
        self.assertEqual([row["N"] for row in rows], [10, 20])
        self.assertEqual(rows[1]["alpha"], "20")
        ratio = float(rows[1]["residual_ds"]) / float(rows[0]["residual_ds"])
        self.assertTrue(0.3 <= ratio <= 0.7, ratio)

    def test_usage_errors_exit_2(self):
        for args in [
            ("compare", "--alpha", "3", "--n"),
            ("compare", "--alpha", "3"),
            ("exact", "--n", "3", "--alpha", "3.5"),
            ("exact", "--n", "3", "--alpha", "1"),
            ("exact", "--n", "6", "--alpha", "3", "--brute-force"),
            ("equilibrium", "--tau", "1", "--t", "1"),
            ("specfn", "--fn", "nope", "--z", "1"),
            ("--precision-bits", "32", "specfn", "--fn", "I", "--z", "1"),
            ("--format", "xml", "specfn", "--fn", "I", "--z", "1"),
            ("constant-c", "--tol", "0.5"),
            ("bogus",),
            (),
        ]:
            code, out, err = run(*args)
            self.assertEqual(code, 2, f"{args}: {err}")
            self.assertTrue(err.strip(), args)

    def test_nonconvergence_exit_3(self):
        code, _, err = run("equilibrium", "--tau", "0.5", "--t", "0.01", "--max-iter", "2")
        self.assertEqual(code, 3, err)

    def test_help_exit_0(self):
        code, out, _ = run("--help")
        self.assertEqual(code, 0)
        self.assertIn("compare", out)

    def test_csv_rfc4180(self):
        p = subprocess.run([BINARY, "identities", "--tol", "1e-6", "--format", "csv"], capture_output=True, timeout=600)
        self.assertEqual(p.returncode, 0)
        raw = p.stdout.decode("utf-8")
        self.assertEqual(raw.count("\r\n"), raw.count("\n"))
        rows = list(csv.reader(io.StringIO(raw, newline="")))
        self.assertEqual(rows[0][:4], ["command", "precision_bits", "digits", "tol"])
        self.assertEqual(rows[0][4:], ["name", "lhs", "rhs", "residual", "error_bound"])
        names = [r[4] for r in rows[1:]]
        self.assertIn("c0 = c", names)
        self.assertIn("c1 (rescaled)", names)
        self.assertTrue(all(len(r) == len(rows[0]) for r in rows))

    def test_deterministic(self):
        args = ("equilibrium", "--tau", "0.5", "--t", "1", "--format", "json")
        self.assertEqual(run(*args)[1], run(*args)[1])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            code, out, _ = run("specfn", "--fn", "I", "--z", "1", "--format", "json", "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as f:
                self.assertEqual(json.load(f)["command"], "specfn")

    def test_precision_metadata(self):
        rep = run_json("--precision-bits", "64", "specfn", "--fn", "zeta", "--z", "2")
        self.assertEqual(rep["precision_bits"], 64)
        self.assertLessEqual(rep["digits"], 19)
        self.assertTrue(first(rep)["value"].startswith("1.6449340668"))

    def test_decimal_alpha_flagged(self):
        rep = run_json("asymptotic", "--n", "10", "--alpha", "2.5")
        self.assertFalse(rep["inputs"]["alpha_exact"])
        self.assertTrue(rep["notes"])
        self.assertEqual(first(rep)["F"], "1.75")


class Schema(unittest.TestCase):
    def test_every_command_validates(self):
        import jsonschema

        with open(SCHEMA, encoding="utf-8") as f:
            schema = json.load(f)
        validator = jsonschema.Draft202012Validator(schema)
        for args in [
            ("exact", "--n", "4", "--alpha", "3", "--brute-force"),
            ("exact", "--n", "30", "--alpha", "7/2"),
            ("asymptotic", "--n", "10", "--alpha", "3"),
            ("asymptotic", "--n", "10", "--alpha", "2.5"),
            ("compare", "--alpha", "3", "--n", "4,9"),
            ("compare", "--alpha", "3", "--n", "5"),
            ("constant-c", "--tol", "1e-9"),
            ("identities", "--tol", "1e-6"),
            ("equilibrium", "--tau", "0.5", "--t", "1"),
            ("equilibrium", "--tau", "0", "--t", "1"),
            ("double-scaling", "--t", "0,0.5"),
            ("specfn", "--fn", "I", "--z", "100"),
            ("specfn", "--fn", "k", "--z", "0.5"),
        ]:
            rep = run_json(*args)
            errors = sorted(validator.iter_errors(rep), key=str)
            self.assertFalse(errors, f"{args}: {[e.message for e in errors]}")
        # a report missing its precision metadata is rejected
        bad = run_json("specfn", "--fn", "I", "--z", "1")
        del bad["precision_bits"]
        self.assertTrue(list(validator.iter_errors(bad)))


if __name__ == "__main__":
    BINARY, SCHEMA, which = sys.argv[1], sys.argv[2], sys.argv[3]
    suite = unittest.defaultTestLoader.loadTestsFromTestCase(Behavior if which == "behavior" else Schema)
    result = unittest.TextTestRunner(verbosity=2).run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)
