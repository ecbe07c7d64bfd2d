"""Documented CLI invocations with golden stdout under tests/golden/.

Each case: name, argv, optional argv whose stdout feeds stdin, expected exit.
Run this file directly to rewrite the golden files.
"""

import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"


def _in(name):
    return str(INPUTS / name)


GEN_Q3 = ["gen", "--family", "hypercube", "--param", "3"]
GEN_C5 = ["gen", "--family", "cycle", "--param", "5"]

CASES = [
    ("gen_hypercube_3", GEN_Q3, None, 0),
    ("wiener_q3_cut", ["wiener", "-", "--method", "cut", "--no-timing"], GEN_Q3, 0),
    ("wiener_c5_cut", ["wiener", "-", "--method", "cut", "--no-timing"], GEN_C5, 2),
    ("wiener_c5_auto", ["wiener", "-", "--method", "auto", "--no-timing"], GEN_C5, 0),
    ("wiener_c5_auto_json", ["wiener", "-", "--json", "--no-timing"], GEN_C5, 0),
    ("theta_c6", ["theta", _in("c6.txt")], None, 0),
    ("theta_k2", ["theta", _in("k2.txt")], None, 0),
    ("theta_p4", ["theta", _in("p4.txt")], None, 0),
    ("check_q4", ["check", _in("q4.txt")], None, 0),
    ("check_k23", ["check", _in("k23.txt")], None, 1),
    ("check_malformed", ["check", _in("malformed.txt")], None, 2),
    ("verify_c6_antipodal", ["verify", _in("c6.txt"), _in("c6_antipodal.txt"), "--scale", "1"], None, 0),
    ("verify_c5_family", ["verify", _in("c5.txt"), _in("c5_family.txt"), "--scale", "2", "--check-iii"], None, 0),
    ("verify_c6_missing", ["verify", _in("c6.txt"), _in("c6_missing.txt")], None, 2),
    ("verify_c6_adjacent", ["verify", _in("c6.txt"), _in("c6_adjacent.txt")], None, 1),
]


def run_cli(argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "cutwiener", *argv],
        input=stdin,
        capture_output=True,
        text=True,
        check=False,
    )


def run_case(argv, feed):
    stdin = run_cli(feed).stdout if feed else None
    return run_cli(argv, stdin)


def regenerate():
    for name, argv, feed, _ in CASES:
        proc = run_case(argv, feed)
        (GOLDEN / f"{name}.out").write_text(proc.stdout)
        err = GOLDEN / f"{name}.err"
        if proc.stderr:
            err.write_text(proc.stderr)
        elif err.exists():
            err.unlink()


if __name__ == "__main__":
    regenerate()
