"""Run the CLI golden cases in fresh interpreters."""

import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def cases():
    return json.loads((GOLDEN / "cases.json").read_text())


def run_case(case) -> str:
    proc = subprocess.run(
        [sys.executable, "-m", "vecconn", *case["args"]],
        cwd=GOLDEN,
        capture_output=True,
        text=True,
        timeout=300,
    )
    return f"exit: {proc.returncode}\n--- stdout\n{proc.stdout}--- stderr\n{proc.stderr}"


def expected(case) -> str:
    return (GOLDEN / f"{case['name']}.out").read_text()


if __name__ == "__main__":
    # regenerate the expected outputs
    for case in cases():
        (GOLDEN / f"{case['name']}.out").write_text(run_case(case))
        print("wrote", case["name"])
