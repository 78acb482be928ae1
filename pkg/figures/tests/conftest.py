import subprocess
import sys

import pytest


def run_gadbounds(*args):
    """The producing package is driven only through its command line."""
    proc = subprocess.run(
        [sys.executable, "-m", "gadbounds", *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def tables_dir(tmp_path_factory):
    base = tmp_path_factory.mktemp("tables")
    run_gadbounds("sweep", "--state", "D", "--output", str(base / "sweep_d.csv"))
    run_gadbounds("sweep", "--state", "V", "--output", str(base / "sweep_v.csv"))
    run_gadbounds(
        "experiment",
        "--state",
        "D",
        "--shots",
        "3000",
        "--resamples",
        "25",
        "--seed",
        "11",
        "--output",
        str(base / "exp_d.csv"),
    )
    run_gadbounds(
        "experiment",
        "--state",
        "V",
        "--shots",
        "3000",
        "--resamples",
        "25",
        "--seed",
        "12",
        "--output",
        str(base / "exp_v.csv"),
    )
    run_gadbounds("asymptotic", "--output", str(base / "asymptotic.csv"))
    return base
