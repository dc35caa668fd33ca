#!/usr/bin/env python3
"""Sweep randomized corank-1 germs and verify the Marar-Mond identities,
the parity constraint, and the Le-Greuel cross-check on each accepted
draw.

Usage: python3 scripts/random_identity_sweep.py [--count N] [--seed S]
"""

import argparse
import random
import sys
import time

from mapgerm.config import AnalysisConfig
from mapgerm.errors import ColengthUndecided
from mapgerm.invariants import invariant_report
from mapgerm.sampling import random_corank1_germ


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50, help="accepted germs to check")
    ap.add_argument("--seed", type=int, default=20260825)
    ap.add_argument("--ceiling", type=int, default=24)
    args = ap.parse_args(argv)

    cfg = AnalysisConfig(truncation_ceiling=args.ceiling)
    rng = random.Random(args.seed)
    accepted = 0
    attempts = 0
    failures = 0
    start = time.monotonic()
    while accepted < args.count and attempts < 10 * args.count:
        attempts += 1
        g = random_corank1_germ(rng)
        try:
            report = invariant_report(g, cfg, with_m0=False)
        except ColengthUndecided:
            continue
        if not report.finitely_determined_proxy:
            continue
        accepted += 1
        C, T, mu_d2, mu_t, mu_q, mu_i, chi, _ = report.value_tuple()
        ok = (
            report.consistent
            and mu_d2 == mu_t + 6 * T
            and mu_d2 == 2 * mu_q + C + 6 * T - 1
            and mu_i == C - 1 + T + mu_q
            and chi == C + T + mu_q
        )
        status = "ok" if ok else "FAIL"
        if not ok:
            failures += 1
        print(
            f"{status}  f = {g.components}  "
            f"(C, T, mu_D2, mu_D2~, mu_q, mu_image, chi) = "
            f"({C}, {T}, {mu_d2}, {mu_t}, {mu_q}, {mu_i}, {chi})"
        )
    elapsed = time.monotonic() - start
    print(
        f"\n{accepted} accepted / {attempts} draws, {failures} failures, "
        f"{elapsed:.1f}s"
    )
    return 1 if failures or accepted < args.count else 0


if __name__ == "__main__":
    sys.exit(main())
