"""Compare the compiled and pure-Python kernel backends.

Each backend runs in its own interpreter because the choice is made at import
time.  Both runs must return identical answers; the table shows the best of
``--repeat`` wall times per workload.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    from petminor import families
    from petminor.claims import threshold_samples
    from petminor.minors import has_minor, has_subgraph
    from petminor.sampling import make_rng, random_graph

    pet = families.petersen()
    rng = make_rng(7)
    # 12-vertex hosts skip the 10-vertex Petersen fast path
    dense12 = [random_graph(rng, 12, 50) for _ in range(40)]
    sparse = threshold_samples(16, 16, 20, seed=7)

    return {
        "subgraph_n12": lambda: [has_subgraph(g, pet) is not None for g in dense12],
        "threshold_minor_n16": lambda: [has_minor(g, pet) is not None for g in sparse],
        "dominant_k5_3": lambda: [has_minor(families.dominant_k5_family(3), pet) is None],
        "join_k5_empty_14": lambda: [has_minor(families.join_k5_empty(14), pet) is None],
        "apex_icosahedron": lambda: [has_minor(families.apex_icosahedron(), pet) is None],
    }


def _worker(repeat: int) -> None:
    from petminor.kernels import BACKEND

    out = {"backend": BACKEND, "results": {}}
    for name, fn in _workloads().items():
        best, answer = float("inf"), None
        for _ in range(repeat):
            t0 = time.perf_counter()
            answer = fn()
            best = min(best, time.perf_counter() - t0)
        out["results"][name] = {"seconds": best, "answer": answer}
    json.dump(out, sys.stdout)


def _run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("PETMINOR_PURE", None)
    if pure:
        env["PETMINOR_PURE"] = "1"
    proc = subprocess.run(
        [sys.executable, __file__, "--worker", "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", help="also write the raw timings here")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        _worker(args.repeat)
        return 0

    fast = _run(False, args.repeat)
    slow = _run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not importable; both columns are the Python backend")
    mismatched = []
    print(f"{'workload':22s} {fast['backend']:>10s} {'python':>10s} {'speedup':>8s}")
    for name, r in fast["results"].items():
        p = slow["results"][name]
        if r["answer"] != p["answer"]:
            mismatched.append(name)
        print(f"{name:22s} {r['seconds']:10.3f} {p['seconds']:10.3f} {p['seconds'] / r['seconds']:7.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"compiled": fast, "python": slow}, fh, indent=2, sort_keys=True)
    if mismatched:
        print("answers differ between backends:", ", ".join(mismatched))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
