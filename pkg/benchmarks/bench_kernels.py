"""Time the numba kernels against the pure-numpy fallback.

Each path runs in its own interpreter because RICCI4_DISABLE_JIT is read at
import time.  First-call (compile) time is reported separately from the
steady-state median.

    python3 benchmarks/bench_kernels.py [--repeat 7] [--calls 2000] [--json]
"""
import argparse
import json
import os
import statistics
import subprocess
import sys
import time


def _timed(fn, repeat):
    t0 = time.perf_counter()
    fn()
    first = time.perf_counter() - t0
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return {"first": first, "median": statistics.median(runs)}


def worker(repeat, calls):
    import numpy as np
    from ricci4 import kernels
    from ricci4.diagonalization import frame_constants
    from ricci4.flow import FlowProblem, integrate
    from ricci4.lie_algebra import GeometrySpec

    c = np.ascontiguousarray(frame_constants(GeometrySpec("A7"), (0.3, 0.2, 0.1, 0.4, 0.5, 0.6)).c)
    g = np.array([1.0, 2.0, 3.0, 4.0])

    def ricci():
        for _ in range(calls):
            kernels.ricci_onb(c, g)

    def sectional():
        for _ in range(calls):
            kernels.sectional_matrix(c, g)

    flows = [FlowProblem.build(GeometrySpec("A8"), (1, 2, 3, 4), t_end=1e4),
             FlowProblem.build(GeometrySpec("A6"), (1, 2, 3, 4), t_end=1e4),
             FlowProblem.build(GeometrySpec("A10"), (1, 2, 3, 1), t_end=10.0)]

    def flow():
        for p in flows:
            integrate(p)

    out = {"jit": kernels.USE_JIT,
           f"ricci_onb x{calls}": _timed(ricci, repeat),
           f"sectional_matrix x{calls}": _timed(sectional, repeat),
           "integrate A8, A6, A10": _timed(flow, max(1, repeat // 2))}
    print(json.dumps(out))


def run_path(disable, repeat, calls):
    env = dict(os.environ, RICCI4_DISABLE_JIT="1" if disable else "0")
    res = subprocess.run([sys.executable, __file__, "--worker", "--repeat", str(repeat),
                          "--calls", str(calls)], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=7)
    p.add_argument("--calls", type=int, default=2000)
    p.add_argument("--json", action="store_true")
    p.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = p.parse_args(argv)
    if args.worker:
        worker(args.repeat, args.calls)
        return 0
    fast = run_path(False, args.repeat, args.calls)
    slow = run_path(True, args.repeat, args.calls)
    if args.json:
        print(json.dumps({"numba": fast, "numpy": slow}, indent=2))
        return 0
    print(f"{'benchmark':<28} {'numba first':>12} {'numba med':>11} {'numpy med':>11} {'speedup':>8}")
    for key in fast:
        if key == "jit":
            continue
        f, s = fast[key], slow[key]
        print(f"{key:<28} {f['first']:>11.4f}s {f['median']:>10.4f}s {s['median']:>10.4f}s "
              f"{s['median'] / f['median']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
