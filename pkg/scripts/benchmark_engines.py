#!/usr/bin/env python3
"""Timing table for the exact engines on the named instances.

Useful as a quick performance-regression check after touching the
pathfinder, certificate, or saturation code:

    python3 scripts/benchmark_engines.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from detourlab import (
    SearchSpec,
    canonical_cert,
    coxeter,
    detour_order,
    enumerate_graphs,
    flower_snark,
    girth,
    is_detour_saturated,
    is_hypohamiltonian,
    is_maximally_nonhamiltonian,
    petersen,
    pr,
)


def timed(repeat, fn, *args):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    instances = [
        ("petersen", petersen().graph),
        ("pr", pr().graph),
        ("flower-snark-7", flower_snark(7).graph),
        ("flower-snark-9", flower_snark(9).graph),
        ("coxeter", coxeter().graph),
    ]
    print(f"{'instance':<16} {'engine':<26} {'result':<12} {'seconds':>9}")
    for name, g in instances:
        for engine, fn in [
            ("girth", lambda h: girth(h).value),
            ("detour_order", lambda h: detour_order(h).tau),
            ("canonical_cert", lambda h: len(canonical_cert(h).data)),
            ("is_detour_saturated", lambda h: is_detour_saturated(h).verdict),
            ("is_hypohamiltonian", lambda h: is_hypohamiltonian(h).verdict),
            ("is_max_nonhamiltonian", lambda h: is_maximally_nonhamiltonian(h).verdict),
        ]:
            value, secs = timed(args.repeat, fn, g)
            print(f"{name:<16} {engine:<26} {str(value):<12} {secs:>9.3f}")

    t0 = time.perf_counter()
    count = sum(1 for _ in enumerate_graphs(SearchSpec(order_max=9, triangle_free=True)))
    print(
        f"{'generator':<16} {'triangle-free to 9':<26} {count:<12} "
        f"{time.perf_counter() - t0:>9.3f}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
