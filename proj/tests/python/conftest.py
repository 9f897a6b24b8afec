import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("UECSM_BIN", str(ROOT / "build" / "uecsm"))
    if not pathlib.Path(exe).exists():
        pytest.skip("uecsm binary not built")

    def run(*args):
        proc = subprocess.run([exe, *map(str, args)], capture_output=True, text=True, timeout=120)
        return proc.returncode, proc.stdout

    return run


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "docs" / "uecsm-output.schema.json").read_text())
