"""Benchmark: compiled enumeration kernel vs the pure-Python twin.

Runs the same Fincke-Pohst workloads in two subprocesses (LATREFL_PURE=1
forces the fallback) and prints a small table.  Usage:

    python3 benchmarks/bench_enum.py
"""
from __future__ import annotations

import json
import os
import subprocess
import sys

_WORK = r"""
import json, time
from latrefl import enumlib
from latrefl.lattice import make_standard, parse_spec, LatticeVector
from latrefl import vinberg

results = {"backend": enumlib.BACKEND}

t = time.time()
n = len(enumlib.enumerate_norm(make_standard("E8"), 8))
results["E8 norm-8 vectors"] = {"count": n, "seconds": round(time.time() - t, 3)}

t = time.time()
n = len(enumlib.enumerate_norm(make_standard("D", 12), 4))
results["D12 norm-4 vectors"] = {"count": n, "seconds": round(time.time() - t, 3)}

t = time.time()
run = vinberg.run_vinberg(parse_spec("E8+U"),
                          LatticeVector(parse_spec("E8+U"), (0,)*8 + (1, -1)))
results["E8+U Vinberg"] = {"roots": len(run.accepted),
                           "seconds": round(time.time() - t, 3)}

print(json.dumps(results))
"""


def run_one(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["LATREFL_PURE"] = "1"
    else:
        env.pop("LATREFL_PURE", None)
    out = subprocess.run([sys.executable, "-c", _WORK], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    compiled = run_one(pure=False)
    pure = run_one(pure=True)
    print(f"{'workload':28s}  {compiled['backend']:>8s}  {pure['backend']:>8s}  speedup")
    for key in compiled:
        if key == "backend":
            continue
        c, p = compiled[key]["seconds"], pure[key]["seconds"]
        ratio = p / c if c else float("inf")
        print(f"{key:28s}  {c:8.3f}  {p:8.3f}  {ratio:6.1f}x")
        for field in compiled[key]:
            if field != "seconds" and compiled[key][field] != pure[key][field]:
                raise SystemExit(f"backend disagreement on {key}: "
                                 f"{compiled[key]} vs {pure[key]}")


if __name__ == "__main__":
    main()
