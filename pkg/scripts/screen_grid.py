#!/usr/bin/env python3
"""Sweep the realizability screen over a grid of code parameters.

Prints one row per (length, distance) pair with the verdict for the
requested doubly-evenness, the matched witness if any, and the rule
that ended the trace. Lengths and distances run over even values only;
odd ones are trivially infeasible.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import polycodes as pc


@dataclass(frozen=True)
class GridConfig:
    max_length: int
    max_distance: int
    doubly_even: bool
    hide_infeasible: bool


def sweep(config: GridConfig) -> None:
    print(f"{'l':>4} {'d':>4} {'verdict':16} {'witness':10} last rule")
    for l in range(2, config.max_length + 1, 2):
        for d in range(2, min(config.max_distance, l) + 1, 2):
            v = pc.realizability_screen(l, d, config.doubly_even)
            if config.hide_infeasible and v.status == "Infeasible":
                continue
            witness = v.witness.text() if v.witness else "-"
            print(f"{l:>4} {d:>4} {v.status:16} {witness:10} {v.trace[-1].rule}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=48)
    parser.add_argument("--max-distance", type=int, default=12)
    parser.add_argument(
        "--doubly-even", action="store_true", help="screen for doubly-even codes"
    )
    parser.add_argument(
        "--hide-infeasible", action="store_true", help="print only open or witnessed rows"
    )
    args = parser.parse_args()
    sweep(
        GridConfig(
            max_length=args.max_length,
            max_distance=args.max_distance,
            doubly_even=args.doubly_even,
            hide_infeasible=args.hide_infeasible,
        )
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
