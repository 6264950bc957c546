#!/usr/bin/env python3
"""Survey the classification label tables across tower parameters.

For each (horizon N, height n) this prints every canonical label within
the dimension cap, its flattened dimension, and the hom bound from the top
bimodule, then decomposes a batch of seeded random quotients and reports
the label census.
"""

import argparse
import random
from collections import Counter

from ppmod.catalog import random_quotient_of_free
from ppmod.fields import GF
from ppmod.tower import build_tower, classify, construct_label, verify_hom_bounds


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-N", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--dim-cap", type=int, default=8)
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    field = GF(2)
    for N in range(2, args.max_N + 1):
        for n in range(args.max_n + 1):
            tower = build_tower(N, n, field)
            ok, rows = verify_hom_bounds(tower, args.dim_cap)
            print(f"== tower horizon {N}, height {n} "
                  f"(algebra dim {tower.top.dim}), hom bounds "
                  f"{'ok' if ok else 'VIOLATED'}")
            for lab, d, h in rows:
                print(f"  {lab}\tdim {d}\thom {h}")
            rng = random.Random(args.seed)
            census: Counter = Counter()
            for _ in range(args.samples):
                m = random_quotient_of_free(tower.top, rng.choice([1, 2]),
                                            rng, dim_cap=args.dim_cap)
                for lab, mult in classify(tower, m):
                    census[str(lab)] += mult
            print(f"  label census over {args.samples} random quotients:")
            for lab, count in sorted(census.items()):
                print(f"    {lab}\t{count}")


if __name__ == "__main__":
    main()
