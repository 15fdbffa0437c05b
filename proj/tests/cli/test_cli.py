import csv
import io
import json
import os
import subprocess
import sys
import unittest

ZETA = None


def run(*args, env=None):
    proc = subprocess.run([ZETA, *args], capture_output=True, text=True, env=env, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def records(*args):
    code, out, err = run(*args, "--format", "json")
    if code != 0:
        raise AssertionError(f"exit {code}: {err}")
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class Examples(unittest.TestCase):
    def test_su2_special_exact_zero(self):
        (r,) = records("su2", "special", "--m", "2", "--theta", "1.0")
        self.assertEqual(r["value"], "0/1")
        self.assertEqual(r["error"], "exact")

    def test_padic_limit(self):
        (r,) = records("padic", "limit", "--family", "sl2cong", "--m", "3")
        self.assertEqual(r["value"], {"var": "s", "num": [2, 1], "den": [-1, 1]})

    def test_polylog_closed(self):
        (r,) = records("polylog", "closed", "--m", "2")
        self.assertEqual(r["value"]["num"], [0, 1, 1])
        self.assertEqual(r["value"]["den"], [1, -3, 3, -1])

    def test_padic_eval_numeric(self):
        (r,) = records("padic", "eval", "--family", "su3cong", "--m", "1", "--s", "-1", "--p", "2")
        self.assertEqual(r["value"], "-128/31")

    def test_su3_lemma(self):
        rs = records("su3", "lemma", "--n", "2")
        self.assertTrue(all(r.get("equal") for r in rs))

    def test_finite_exact(self):
        (r,) = records("finite", "eval", "--group", "s3", "--s", "-2")
        self.assertEqual(r["value"], "6/1")


class ExitCodes(unittest.TestCase):
    def test_usage(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("su2", "eval", "--bogus", "1")[0], 2)
        self.assertEqual(run("su2", "eval", "--s", "2", "--theta", "1", "--precision", "20")[0], 2)

    def test_domain_and_pole(self):
        self.assertEqual(run("su2", "eval", "--s", "2", "--theta", "4")[0], 3)
        self.assertEqual(run("su3", "eval", "--s", "0.6666666666666666")[0], 3)
        self.assertEqual(run("padic", "eval", "--family", "sl3cong", "--m", "1", "--s", "0", "--p", "3")[0], 3)

    def test_errors_go_to_stderr(self):
        code, out, err = run("su2", "eval", "--s", "2", "--theta", "4")
        self.assertEqual(out, "")
        self.assertTrue(err.strip())


class Formats(unittest.TestCase):
    def test_text_matches_json(self):
        args = ["su2", "eval", "--s", "2.5", "--theta", "0.7", "--precision", "8"]
        (r,) = records(*args)
        _, text, _ = run(*args)
        self.assertIn(f"= {r['value']['re']:.8g}", text)

    def test_json_round_trip_exact(self):
        code, out, _ = run("padic", "eval", "--family", "sl2zp", "--s", "0", "--format", "json")
        self.assertEqual(code, 0)
        line = out.strip()
        self.assertEqual(json.dumps(json.loads(line), separators=(",", ":"), ensure_ascii=False), line)

    def test_csv(self):
        code, out, _ = run("su2", "eval", "--s", "2", "--theta-pi", "1/2", "--format", "csv")
        self.assertEqual(code, 0)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0][:2], ["query", "value_re"])
        self.assertEqual(len(rows), 2)

    def test_precision_env(self):
        env = dict(os.environ, ZETA_PRECISION="6")
        _, a, _ = run("su2", "eval", "--s", "2.5", "--theta", "0.7", "--format", "json", env=env)
        _, b, _ = run("su2", "eval", "--s", "2.5", "--theta", "0.7", "--format", "json", "--precision", "12", env=env)
        self.assertLess(len(str(json.loads(a)["value"]["re"])), len(str(json.loads(b)["value"]["re"])))


class Verify(unittest.TestCase):
    def test_su3_suite_passes(self):
        self.assertEqual(run("verify", "--suite", "su3")[0], 0)

    def test_deterministic(self):
        def report():
            _, out, _ = run("verify", "--suite", "padic", "--format", "json")
            return [{k: v for k, v in json.loads(l).items() if k != "ms"} for l in out.splitlines()]

        self.assertEqual(report(), report())

    def test_padic_only_known_failure(self):
        code, out, _ = run("verify", "--suite", "padic", "--format", "json")
        self.assertEqual(code, 1)
        failed = [r["name"] for r in map(json.loads, out.splitlines()) if r.get("pass") is False]
        self.assertEqual(len(failed), 1)
        self.assertIn("witness", failed[0])


if __name__ == "__main__":
    ZETA = sys.argv.pop(1)
    unittest.main(verbosity=2)
