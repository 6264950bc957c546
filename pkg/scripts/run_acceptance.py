#!/usr/bin/env python3
"""Run every acceptance suite and print one pass/fail line per criterion.

Usage: python3 scripts/run_acceptance.py [--seed N] [--only NAME]
"""

import argparse
import sys

from ppmod.suites import CRITERIA_ORDER, SUITES


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", choices=CRITERIA_ORDER)
    args = ap.parse_args()
    names = [args.only] if args.only else CRITERIA_ORDER
    ok = True
    total = 0.0
    for name in names:
        res = SUITES[name](args.seed)
        ok = ok and res.passed
        total += res.seconds
        print(res.summary())
        for line in res.lines:
            print(f"    {line}")
    print(f"{'PASS' if ok else 'FAIL'}\ttotal\t{total:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
