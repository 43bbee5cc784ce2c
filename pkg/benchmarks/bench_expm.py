"""Compare the compiled 4x4 Pade-13 kernel with the numpy fallback.

Usage:
    python benchmarks/bench_expm.py [--n 20000] [--repeat 5] [--seed 0]

Both backends are timed on the same stack of Sp(4,R) algebra elements,
single calls and the batched entry point; scipy.linalg.expm is timed on
single calls as a reference point.
"""
import argparse
import timeit

import numpy as np
import scipy.linalg

from sp4squeeze import _fallback
from sp4squeeze.symplectic import algebra_element

try:
    from sp4squeeze import _kernels
except ImportError:
    _kernels = None


def make_stack(n, seed):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-2.0, 2.0, size=(n, 10))
    return np.array([algebra_element(r[0], r[1:4], r[4:7], r[7:10]) for r in c])


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20000, help="matrices per batch")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    stack = make_stack(args.n, args.seed)
    singles = stack[: min(args.n, 2000)]
    rows = []

    backends = [("fallback", _fallback)]
    if _kernels is not None:
        backends.insert(0, ("compiled", _kernels))
    else:
        print("compiled extension not built; timing the fallback only")

    ref = _fallback.expm_pade_many(stack)
    for name, mod in backends:
        t_many = best_of(lambda: mod.expm_pade_many(stack), args.repeat)
        t_one = best_of(lambda: [mod.expm_pade(m) for m in singles], args.repeat)
        err = float(np.max(np.abs(mod.expm_pade_many(stack) - ref) / np.maximum(np.abs(ref), 1.0)))
        rows.append((name, t_many / len(stack), t_one / len(singles), err))
    t_sp = best_of(lambda: [scipy.linalg.expm(m) for m in singles], args.repeat)
    rows.append(("scipy", float("nan"), t_sp / len(singles), float("nan")))

    print(f"{'backend':<10} {'batched us/mat':>15} {'single us/call':>15} {'max rel diff':>13}")
    for name, many, one, err in rows:
        many_s = "-" if np.isnan(many) else f"{many * 1e6:.2f}"
        err_s = "-" if np.isnan(err) else f"{err:.1e}"
        print(f"{name:<10} {many_s:>15} {one * 1e6:>15.2f} {err_s:>13}")
    if _kernels is not None:
        print(f"batched speedup compiled/fallback: {rows[1][1] / rows[0][1]:.1f}x")
        print(f"single-call speedup compiled/fallback: {rows[1][2] / rows[0][2]:.1f}x")


if __name__ == "__main__":
    main()
