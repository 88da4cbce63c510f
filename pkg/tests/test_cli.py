import json
import unittest
from pathlib import Path
from unittest.mock import patch

from click.testing import CliRunner

from asdescent.cli import main
from asdescent.errors import NotAUnit

KILL_ONE_OVER_T = """\
{
  "format": "asdescent-cert/1",
  "base_field": {
    "p": 2,
    "k": 1,
    "modulus": [
      0,
      1
    ]
  },
  "degree": 2,
  "tower": [
    "1 / t^3"
  ],
  "tracked_places": [
    {
      "place": "t",
      "layers": [
        {
          "s": 3,
          "a": 1,
          "b": 2
        }
      ]
    }
  ],
  "entries": [
    {
      "a": "1 / t",
      "N": 1,
      "h": "t*x1 + t",
      "g": "t^2*x1 + t^2",
      "valuations": {
        "t": 1
      }
    }
  ]
}
"""


class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(main, list(args))

    def test_kill(self):
        result = self.invoke("kill", "--p", "2", "--a", "1/t", "--place", "t")
        self.assertEqual(result.exit_code, 0, result.output)
        document = json.loads(result.stdout)
        self.assertEqual(document["format"], "asdescent-cert/1")
        self.assertEqual(document["degree"], 2)
        self.assertEqual(document["tower"], ["1 / t^3"])
        self.assertEqual(document["entries"][0]["h"], "t*x1 + t")

    def test_kill_golden_output(self):
        with self.runner.isolated_filesystem():
            result = self.invoke(
                "kill", "--p", "2", "--a", "1/t", "--place", "t", "-o", "cert.json"
            )
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(Path("cert.json").read_bytes(), KILL_ONE_OVER_T.encode())
            self.assertEqual(self.invoke("verify", "cert.json").exit_code, 0)
        result = self.invoke("kill", "--p", "2", "--a", "1/t", "--place", "t")
        self.assertEqual(result.stdout, KILL_ONE_OVER_T)

    def test_kill_multi(self):
        result = self.invoke(
            "kill-multi", "--p", "2", "--a", "1/t + 1/(t+1)", "--places", "t", "--places", "t - 1"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("\"t - 1\"", result.output)

    def test_parse_error(self):
        result = self.invoke("kill", "--p", "2", "--a", "t +", "--place", "t")
        self.assertEqual(result.exit_code, 2)

    def test_unsupported_field(self):
        result = self.invoke("kill", "--p", "11", "--a", "1/t", "--place", "t")
        self.assertEqual(result.exit_code, 2)

    def test_classify(self):
        result = self.invoke("classify", "--p", "2", "--f", "t", "--place", "t")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('"case": "Split"', result.output)

    def test_normal_form(self):
        result = self.invoke("normal-form", "--p", "2", "--a", "1/t^2 + 1/t", "--place", "t")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn('"extendable": false', result.output)

    def test_verify(self):
        with self.runner.isolated_filesystem():
            result = self.invoke(
                "kill", "--p", "2", "--a", "1/t", "--place", "t", "-o", "cert.json"
            )
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(self.invoke("verify", "cert.json").exit_code, 0)

            document = json.loads(Path("cert.json").read_text())
            document["entries"][0]["h"] = "t*x1 + t + 1"
            Path("tampered.json").write_text(json.dumps(document))
            self.assertEqual(self.invoke("verify", "tampered.json").exit_code, 1)

            Path("garbage.json").write_text("not json")
            self.assertEqual(self.invoke("verify", "garbage.json").exit_code, 1)

    def test_cover(self):
        torsor = {
            "base_field": {"p": 2},
            "components": [{"r": 1, "N": 1, "cocycles": ["1/t + t"]}],
            "places": ["t", "inf"],
        }
        with self.runner.isolated_filesystem():
            Path("torsor.json").write_text(json.dumps(torsor))
            result = self.invoke(
                "cover",
                "--torsor", "torsor.json",
                "--boundary", "t",
                "--boundary", "inf",
                "--samples", "irr:t^2 + t + 1",
                "-o", "plan.json",
            )
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(self.invoke("verify", "plan.json").exit_code, 0)

    def test_selftest(self):
        result = self.invoke("selftest", "--samples", "2", "--seed", "1")
        self.assertEqual(result.exit_code, 0, result.output)

    def test_verify_maps_library_errors(self):
        with self.runner.isolated_filesystem():
            result = self.invoke(
                "kill", "--p", "2", "--a", "1/t", "--place", "t", "-o", "cert.json"
            )
            self.assertEqual(result.exit_code, 0, result.output)
            with patch("asdescent.cli.verify_certificate", side_effect=NotAUnit("t^-1")):
                result = self.invoke("verify", "cert.json")
        self.assertEqual(result.exit_code, 3)
        self.assertIsInstance(result.exception, SystemExit)
        self.assertIn("error: t^-1", result.output)
