"""Compare the pure-Python and compiled term-dict kernels.

Runs the same workloads through both backend modules directly, then an
end-to-end suite in subprocesses with and without MODINVAR_PURE_PY=1.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import time

from modinvar import _kernels_py
from modinvar.gens import context_for_q
from modinvar.groebner import buchberger

try:
    from modinvar import _kernels_cy
except ImportError:
    _kernels_cy = None


def timeit(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_mul(backend, ctx, repeat):
    f = (ctx.u(0) + ctx.d(2) + ctx.u(-1)) ** 6
    g = (ctx.u(1) + ctx.ds(2) + ctx.u(0)) ** 6
    fld = ctx.field
    ft, gt = f.terms, g.terms

    def work():
        backend.mul_terms(ft, gt, fld.p, fld.q, fld.mul_flat, fld.add_flat)

    return timeit(work, repeat)


def bench_normal_form(backend, ctx, gb, repeat):
    R = gb.ring
    fld = ctx.field
    f = (ctx.relation("T1") * ctx.relation("T00") * ctx.w_poly() ** 2
         + ctx.w_poly() ** 5 * ctx.S7var("C0s"))
    ft = f.terms

    def work():
        backend.normal_form_terms(ft, gb.lt_keys, gb.tails, R.n,
                                  R.order_code, R.guard, fld.p, fld.q,
                                  fld.mul_flat, fld.add_flat, fld.neg_flat,
                                  True)

    return timeit(work, repeat)


def bench_end_to_end(env_extra, args):
    env = {**os.environ, **env_extra}
    cmd = [sys.executable, "-m", "modinvar.cli", "products", "--q", "3",
           "--sample", str(5 if args.quick else 60), "--seed", "1"]
    best = None
    for _ in range(2 if args.quick else 3):
        t0 = time.perf_counter()
        out = subprocess.run(cmd, env=env, capture_output=True, text=True)
        dt = time.perf_counter() - t0
        if out.returncode != 0:
            raise SystemExit("benchmark subprocess failed:\n" + out.stderr)
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="smaller workloads for smoke runs")
    args = ap.parse_args()

    if _kernels_cy is None:
        print("compiled backend not built; nothing to compare")
        return

    repeat = 3 if args.quick else 7
    rows = []

    q = 3 if args.quick else 4
    ctx = context_for_q(q)
    t_py = bench_mul(_kernels_py, ctx, repeat)
    t_cy = bench_mul(_kernels_cy, ctx, repeat)
    rows.append(("mul_terms q=%d" % q, t_py, t_cy))

    ctx3 = context_for_q(3)
    gb = buchberger(ctx3.ideal_generators(), bound=40, track=False)
    t_py = bench_normal_form(_kernels_py, ctx3, gb, repeat)
    t_cy = bench_normal_form(_kernels_cy, ctx3, gb, repeat)
    rows.append(("normal_form q=3", t_py, t_cy))

    t_py = bench_end_to_end({"MODINVAR_PURE_PY": "1"}, args)
    t_cy = bench_end_to_end({"MODINVAR_PURE_PY": ""}, args)
    rows.append(("products q=3 (subprocess)", t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print("%-*s  %12s  %12s  %8s" % (width, "workload", "python", "cython",
                                     "speedup"))
    for name, t_py, t_cy in rows:
        print("%-*s  %10.3fms  %10.3fms  %7.2fx"
              % (width, name, t_py * 1e3, t_cy * 1e3, t_py / t_cy))


if __name__ == "__main__":
    main()
