#!/usr/bin/env python3
"""Sweep the detour-saturation search over a range of configurations.

Each configuration gets its own checkpoint and hits file under the
output directory, so an interrupted sweep resumes where it stopped:

    python3 scripts/search_sweep.py --out runs/ --order-max 12 \
        --constraints none,triangle-free,girth4 --budget 3600

Prints one summary row per configuration when the sweep finishes.
"""

from __future__ import annotations

import argparse
import os
import time
from dataclasses import dataclass

from detourlab import SearchSpec, search_detour_saturated


@dataclass(frozen=True)
class SweepEntry:
    label: str
    spec: SearchSpec


CONSTRAINTS = {
    "none": dict(),
    "triangle-free": dict(triangle_free=True),
    "girth4": dict(triangle_free=True, girth_exact=4),
    "girth5": dict(triangle_free=True, girth_exact=5),
}


def build_entries(args) -> list[SweepEntry]:
    entries = []
    for key in args.constraints.split(","):
        key = key.strip()
        if key not in CONSTRAINTS:
            raise SystemExit(
                f"unknown constraint {key!r}; choose from {', '.join(CONSTRAINTS)}"
            )
        label = f"{key}-to-{args.order_max}"
        entries.append(
            SweepEntry(
                label,
                SearchSpec(
                    order_max=args.order_max,
                    order_min=args.order_min,
                    threads=args.threads,
                    budget=args.budget,
                    checkpoint_path=os.path.join(args.out, label + ".ckpt"),
                    hits_jsonl=os.path.join(args.out, label + ".hits.jsonl"),
                    **CONSTRAINTS[key],
                ),
            )
        )
    return entries


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", required=True, help="directory for checkpoints and hits")
    ap.add_argument("--order-min", type=int, default=1)
    ap.add_argument("--order-max", type=int, default=12)
    ap.add_argument(
        "--constraints",
        default="none,triangle-free,girth4",
        help=f"comma list from: {', '.join(CONSTRAINTS)}",
    )
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    ap.add_argument(
        "--budget", type=float, default=None,
        help="wall-clock seconds per configuration (resume by rerunning)",
    )
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    rows = []
    for entry in build_entries(args):
        t0 = time.perf_counter()
        outcome = search_detour_saturated(entry.spec)
        rows.append(
            (
                entry.label,
                "done" if outcome.completed else "paused",
                sum(outcome.candidates_by_order.values()),
                len(outcome.hits),
                time.perf_counter() - t0,
            )
        )
        for hit in outcome.hits:
            print(
                f"[{entry.label}] hit: order={hit.order} size={hit.size} "
                f"girth={hit.girth} tau={hit.tau} {hit.graph6}"
            )

    print(f"\n{'configuration':<24} {'state':<8} {'candidates':>12} {'hits':>6} {'seconds':>9}")
    for label, state, cands, hits, secs in rows:
        print(f"{label:<24} {state:<8} {cands:>12} {hits:>6} {secs:>9.1f}")
    if any(state == "paused" for _, state, *_ in rows):
        print("\npaused configurations resume from their checkpoints on rerun")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
