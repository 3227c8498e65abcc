"""The problem-file format and the command-line tools.

Writes a problem JSON, then drives the fit / eval / verify subcommands the
way a shell script would.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

with tempfile.TemporaryDirectory() as tmp:
    problem = Path(tmp) / "problem.json"
    problem.write_text(json.dumps({
        "nodes": [-1.0, 0.0, 1.0],
        "m": 1,
        "derivatives": [[1.0, -2.0], [0.0, 0.0], [1.0, 2.0]],  # x^2 data
        "label": "parabola",
    }, indent=2))

    def cli(*args):
        result = subprocess.run(
            [sys.executable, "-m", "osculant.cli", *args],
            capture_output=True, text=True,
        )
        print(f"$ osculant {' '.join(args)}".replace(str(problem), "problem.json"))
        print(result.stdout, end="")
        if result.stderr:
            print(result.stderr, end="")
        print(f"(exit {result.returncode})\n")
        return result

    cli("fit", str(problem))
    cli("eval", str(problem), "--from", "-1", "--to", "1", "--points", "5",
        "--method", "both")
    cli("eval", str(problem), "--at", "0.5", "--deriv", "1")
    cli("verify", str(problem))
