#!/usr/bin/env python3
# Copyright 2026 The Qasida Authors. All Rights Reserved.
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

"""End-to-end checks of the qasida command-line tool and HTTP server.

Usage: cli_test.py <qasida binary> <analyze schema> <test data dir>
"""

import json
import os
import socket
import subprocess
import sys
import tempfile
import time
import unittest
import urllib.error
import urllib.request

import jsonschema

CLI, SCHEMA, DATA = sys.argv[1:4]

TAWEEL = "فَعُوْلُنْ مَفَاعِيْلُنْ فَعُوْلُنْ مَفَاعِلُنْ"
CANONICAL = f"{TAWEEL} # {TAWEEL}\n"
ONE_FLIP = f"فَعُوْلْنْ مَفَاعِيْلُنْ فَعُوْلُنْ مَفَاعِلُنْ # {TAWEEL}\n"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=60)


def poem(pid, baits, meter=None):
    p = {"id": pid, "poet": "t", "baits": baits}
    if meter is not None:
        p["meter"] = meter
    return p


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        with open(SCHEMA, encoding="utf-8") as f:
            self.schema = json.load(f)

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def write(self, name, text):
        with open(self.path(name), "w", encoding="utf-8") as f:
            f.write(text)
        return self.path(name)

    def write_jsonl(self, name, poems):
        return self.write(name, "".join(json.dumps(p, ensure_ascii=False) + "\n" for p in poems))

    def test_analyze_canonical_json(self):
        r = run("analyze", self.write("p.txt", CANONICAL), "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        out = json.loads(r.stdout)
        jsonschema.validate(out, self.schema)
        self.assertEqual(out["meter"]["name"], "Taweel")
        for h in out["hemistiches"]:
            self.assertEqual(h["similarity"], 1.0)
            self.assertEqual(h["ops"], [])

    def test_analyze_stdin_matches_file(self):
        a = run("analyze", "-", stdin=CANONICAL)
        b = run("analyze", self.write("p.txt", CANONICAL))
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)

    def test_analyze_text_marks_the_flip(self):
        r = run("analyze", self.write("p.txt", ONE_FLIP), "--text")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("meter: Taweel", r.stdout)
        self.assertEqual(r.stdout.count("[~1]"), 1)
        self.assertNotIn("[+", r.stdout)
        self.assertNotIn("[-]", r.stdout)
        self.assertIn("correction: 110[~1]0", r.stdout)

    def test_analyze_one_flip_validates(self):
        r = run("analyze", self.write("p.txt", ONE_FLIP))
        out = json.loads(r.stdout)
        jsonschema.validate(out, self.schema)
        self.assertEqual(out["hemistiches"][0]["ops"], [{"kind": "flip", "pos": 3, "bit": "1"}])

    def test_analyze_undiacritized_is_domain_error(self):
        r = run("analyze", self.write("p.txt", "قفا نبك من ذكرى # حبيب ومنزل\n"))
        self.assertEqual(r.returncode, 2)
        self.assertIn("IncompleteDiacritization", r.stderr)
        self.assertEqual(json.loads(r.stdout)["error"]["code"], "IncompleteDiacritization")

    def test_analyze_meter_hint(self):
        r = run("analyze", self.write("p.txt", CANONICAL), "--meter", "4")
        self.assertEqual(json.loads(r.stdout)["meter"]["index"], 4)
        self.assertEqual(run("analyze", self.path("p.txt"), "--meter", "16").returncode, 2)

    def test_scan(self):
        r = run("scan", "-", stdin=TAWEEL)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["pattern"], "11010110101011010110110")

    def test_usage_and_io_errors(self):
        self.assertEqual(run().returncode, 1)
        self.assertEqual(run("analyze").returncode, 1)
        self.assertEqual(run("nonsense").returncode, 1)
        self.assertEqual(run("analyze", self.path("missing.txt")).returncode, 3)
        self.assertEqual(run("analyze", self.write("p.txt", CANONICAL), "--db", self.path("none.json")).returncode, 3)

    def test_clean_reports_odd_verses(self):
        src = self.write_jsonl("in.jsonl", [
            poem("ok", [[TAWEEL, TAWEEL]], 0),
            poem("odd", [[TAWEEL, TAWEEL], [TAWEEL]]),
        ])
        r = run("clean", src, self.path("out.jsonl"))
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(r.stdout)
        self.assertEqual(report["removed"]["odd_verses"], 1)
        self.assertEqual(report["kept"], 1)
        with open(self.path("out.jsonl"), encoding="utf-8") as f:
            self.assertEqual([json.loads(l)["id"] for l in f], ["ok"])
        self.assertEqual(run("clean", self.write("bad.jsonl", "{\n"), self.path("o")).returncode, 2)

    def test_eval_der_identical(self):
        gold = self.write("g.txt", "قِفَا نَبْكِ\nمِنْ ذِكْرَى حَبِيبٍ\n")
        r = run("eval-der", gold, gold)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout, "DER 0.00\nWER 0.00\nDER* 0.00\nWER* 0.00\n")
        pred = self.write("p.txt", "قِفَا نَبْكِ\nمِنْ ذِكْرُ حَبِيبٍ\n")
        self.assertEqual(run("eval-der", gold, pred).returncode, 2)

    def test_db_validate(self):
        seed = os.path.join(os.path.dirname(os.path.abspath(DATA)), os.pardir, "data", "meters.json")
        r = run("db-validate", seed)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["meters"], 16)
        self.assertEqual(run("db-validate", self.write("m.json", "[]")).returncode, 2)

    def test_vocab_encode_pipeline(self):
        src = self.write_jsonl("in.jsonl", [poem("a", [[TAWEEL, TAWEEL]], 0), poem("b", [[TAWEEL, TAWEEL]], 4)])
        r = run("vocab", src, self.path("vocab.txt"))
        self.assertEqual(r.returncode, 0, r.stderr)
        r = run("encode", src, self.path("enc.txt"), "--vocab", self.path("vocab.txt"))
        self.assertEqual(r.returncode, 0, r.stderr)
        report = json.loads(r.stdout)
        self.assertEqual(report["encoded"], 1)
        self.assertEqual(report["excluded"][0]["id"], "b")
        with open(self.path("enc.txt"), encoding="utf-8") as f:
            self.assertTrue(f.read().startswith("<|meter_0|> ن <|theme_17|>\n<|psep|><|bsep|>"))

    def test_augment_is_seeded(self):
        src = self.write("v.txt", "".join(f"{TAWEEL} # {i}\n" for i in range(40)))
        a = run("augment", src, "-", "--seed", "5", "--dropout-rate", "0.2")
        b = run("augment", src, "-", "--seed", "5", "--dropout-rate", "0.2")
        c = run("augment", src, "-", "--seed", "6", "--dropout-rate", "0.2")
        self.assertEqual(a.returncode, 0, a.stderr)
        self.assertEqual(a.stdout, b.stdout)
        self.assertNotEqual(a.stdout, c.stdout)
        self.assertEqual(run("augment", self.write("n.txt", "no separator\n"), "-").returncode, 2)

    def test_eval_rhythm(self):
        src = self.write_jsonl("in.jsonl", [poem("a", [[TAWEEL, TAWEEL]], 0), poem("b", [[TAWEEL, TAWEEL]], 4)])
        r = run("eval-rhythm", src, "--csv", self.path("c.csv"))
        self.assertEqual(r.returncode, 0, r.stderr)
        rep = json.loads(r.stdout)
        self.assertEqual(rep["accuracy"], 50.0)
        self.assertLessEqual(rep["top3"], rep["top5"])
        with open(self.path("c.csv"), encoding="utf-8") as f:
            self.assertTrue(f.readline().startswith("gold\\pred,Taweel,"))


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


class ServerTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.port = free_port()
        env = dict(os.environ, QASIDA_PORT=str(cls.port))
        cls.proc = subprocess.Popen([CLI, "serve"], env=env, stderr=subprocess.DEVNULL)
        cls.base = f"http://127.0.0.1:{cls.port}"
        for _ in range(100):
            try:
                urllib.request.urlopen(cls.base + "/v1/health", timeout=1)
                return
            except OSError:
                time.sleep(0.05)
        raise RuntimeError("server did not start")

    @classmethod
    def tearDownClass(cls):
        cls.proc.terminate()
        cls.proc.wait(timeout=10)

    def request(self, path, body=None):
        data = None if body is None else body.encode("utf-8")
        req = urllib.request.Request(self.base + path, data=data, method="GET" if body is None else "POST")
        try:
            with urllib.request.urlopen(req, timeout=10) as resp:
                return resp.status, resp.read().decode("utf-8")
        except urllib.error.HTTPError as e:
            return e.code, e.read().decode("utf-8")

    def test_meters(self):
        status, body = self.request("/v1/meters")
        self.assertEqual(status, 200)
        self.assertEqual(len(json.loads(body)), 16)

    def test_analyze_matches_cli_bytes(self):
        status, body = self.request("/v1/analyze", json.dumps({"text": CANONICAL}))
        self.assertEqual(status, 200)
        with open(SCHEMA, encoding="utf-8") as f:
            jsonschema.validate(json.loads(body), json.load(f))
        cli = run("analyze", "-", "--json", stdin=CANONICAL)
        self.assertEqual(body, cli.stdout)

    def test_error_statuses(self):
        self.assertEqual(self.request("/v1/analyze", "{")[0], 400)
        self.assertEqual(self.request("/v1/analyze", json.dumps({"text": "قفا نبك # من"}))[0], 422)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
