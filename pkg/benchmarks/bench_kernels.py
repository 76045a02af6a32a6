"""Compare the numba kernels with the pure-Python fallback.

Each backend runs in its own interpreter because ``MBDOM_JIT`` is read at
import time.  Kernel load/compile time is reported separately from the
solves.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --quick --json
"""

import argparse
import json
import os
import subprocess
import sys
import time

INSTANCES = [
    ("Cycle", {"n": 4}, "gamma_MBT"),
    ("Fkl", {"k": 2, "l": 2}, "gamma_MBT'"),
    ("Gl", {"l": 2}, "gamma_MBT'"),
    ("H2l", {"l": 3}, "gamma_MBT'"),
    ("Fkl", {"k": 2, "l": 3}, "gamma_MBT'"),
    ("G2l", {"l": 4}, "gamma_MBT"),
    ("Gkn", {"k": 3, "n": 4}, "gamma_MBT"),
    ("Gl", {"l": 3}, "gamma_MBT'"),
]
QUICK = 5

WORKER = r"""
import json, sys, time
t0 = time.perf_counter()
from mbdom import _kernels
from mbdom.constructions import construct
from mbdom.props import SPECS
from mbdom.solver import solve_value
_kernels.warm_up()
load = time.perf_counter() - t0
rows = []
for family, params, q in json.loads(sys.argv[1]):
    g = construct(family, **params).graph
    best = None
    for _ in range(int(sys.argv[2])):
        r = solve_value(g, SPECS[q])
        best = r.stats.elapsed if best is None else min(best, r.stats.elapsed)
    rows.append({"instance": f"{family}{params}", "quantity": q, "n": g.n, "value": str(r.value),
                 "nodes": r.stats.nodes, "secs": best})
print(json.dumps({"jit": _kernels.USE_JIT, "load_secs": load, "rows": rows}))
"""


def run_backend(jit, instances, repeats):
    env = dict(os.environ, MBDOM_JIT="1" if jit else "0")
    proc = subprocess.run([sys.executable, "-c", WORKER, json.dumps(instances), str(repeats)],
                          env=env, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.exit(proc.stderr)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="only the small instances")
    ap.add_argument("--repeats", type=int, default=3, help="best of N per instance")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    instances = INSTANCES[:QUICK] if args.quick else INSTANCES
    t0 = time.perf_counter()
    jit = run_backend(True, instances, args.repeats)
    py = run_backend(False, instances, args.repeats)
    for a, b in zip(jit["rows"], py["rows"]):
        if (a["value"], a["nodes"]) != (b["value"], b["nodes"]):
            sys.exit(f"backends disagree on {a['instance']}: {a} vs {b}")

    if args.json:
        print(json.dumps({"jit": jit, "python": py}, indent=2))
        return
    print(f"kernel load: numba {jit['load_secs']:.2f} s, python {py['load_secs']:.2f} s")
    print(f"{'instance':<24} {'quantity':<11} {'n':>3} {'value':>5} {'nodes':>8} {'numba ms':>10} {'python ms':>11} {'speedup':>8}")
    for a, b in zip(jit["rows"], py["rows"]):
        speed = b["secs"] / a["secs"] if a["secs"] > 0 else float("inf")
        print(f"{a['instance']:<24} {a['quantity']:<11} {a['n']:>3} {a['value']:>5} {a['nodes']:>8} "
              f"{a['secs'] * 1e3:>10.3f} {b['secs'] * 1e3:>11.1f} {speed:>7.0f}x")
    print(f"total wall time {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
