import json
import os
import subprocess

import pytest

CLI = os.environ.get("TRIMOMENTS_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="TRIMOMENTS_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_moment_json():
    out = run("moment", "--k", "1", "--n", "2", "--json")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["passed"] is True
    assert report["data"]["phi"] == "2/3"


def test_shorthand_word():
    out = run("moment", "--word", "(T^2 T*^2)^2", "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["data"]["phi"] == "2/15"


def test_exit_codes():
    assert run("verify", "--max-nk", "6").returncode == 0
    assert run("moment", "--word", "T**").returncode == 2
    assert run("moment").returncode == 2
    assert run("bogus").returncode == 2
    assert run("identity", "--n", "5", "--k", "2").returncode == 2
    assert run("volume", "--k", "1", "--n", "2", "--method", "nope").returncode == 2
    mismatch = run("randmat", "--word", "T T* T T*", "--dim", "1", "--samples", "2000")
    assert mismatch.returncode == 1
    assert "FAIL" in mismatch.stdout
    assert run("--help").returncode == 0


def test_enumerate_text():
    out = run("enumerate", "--word", "T T T* T*")
    assert out.returncode == 0
    assert "{(1,4),(2,3)}" in out.stdout
