"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel over the same deterministic workload with both backends and
prints per-kernel wall times plus the speedup.  Also times one end-to-end
campaign per backend, since solver-level work mixes kernel calls with
Python-level surgery.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time
from random import Random

from certigraph import Campaign, ExhaustiveSource, run_campaign
from certigraph._kernels import get_backend

import certigraph._kernels as kernels_pkg


def _workload(seed: int = 42, graphs: int = 300):
    rng = Random(seed)
    out = []
    for _ in range(graphs):
        n = rng.randint(8, 14)
        us, vs, cols = [], [], []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.45:
                    us.append(u)
                    vs.append(v)
                    cols.append(rng.randrange(3))
        out.append((n, us, vs, cols))
    return out


def _time_kernel(backend, name, work, repeat):
    fn = getattr(backend, name)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for n, us, vs, cols in work:
            if name in ("find_alternating_cycle", "cut_color_vertex", "mono_arcs"):
                fn(n, us, vs, cols)
            elif name == "count_perfect_matchings":
                fn(n, us, vs, 0)
            else:
                fn(n, us, vs)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    pure = get_backend("pure")
    try:
        fast = get_backend("fast")
    except ImportError:
        print("compiled backend not built; run pip install -e . --no-build-isolation")
        return 1

    work = _workload()
    names = (
        "component_labels",
        "bridge_mask",
        "count_perfect_matchings",
        "first_perfect_matching",
        "find_alternating_cycle",
        "cut_color_vertex",
        "mono_arcs",
    )
    print(f"{'kernel':<26}{'pure (s)':>10}{'fast (s)':>10}{'speedup':>9}")
    for name in names:
        tp = _time_kernel(pure, name, work, args.repeat)
        tf = _time_kernel(fast, name, work, args.repeat)
        print(f"{name:<26}{tp:>10.3f}{tf:>10.3f}{tp / tf:>8.1f}x")

    # End to end: the full n=6 matching campaign under each backend.  The
    # dispatch module looks functions up by attribute on every call, so
    # rebinding them swaps the backend for all callers.
    names_saved = {name: getattr(kernels_pkg, name) for name in names}
    for label, backend in (("pure", pure), ("fast", fast)):
        for name in names:
            setattr(kernels_pkg, name, getattr(backend, name))
        try:
            t0 = time.perf_counter()
            rep = run_campaign(Campaign(mode="kotzig", source=ExhaustiveSource(6)))
            dt = time.perf_counter() - t0
        finally:
            for name, fn in names_saved.items():
                setattr(kernels_pkg, name, fn)
        print(f"campaign kotzig n=6 [{label}]: {dt:.2f}s, "
              f"violations={len(rep.violations)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
