#!/usr/bin/env python3
"""Print the strictly descending chain between the two generator types of
the double-arrow projectives, with separating preprojectives, then run the
interval probe that certifies the embedding is not short."""

import argparse

from ppmod.algebra import kronecker_algebra
from ppmod.catalog import kronecker_preprojective, kronecker_step_formula
from ppmod.fields import GF
from ppmod.modules import hom_space
from ppmod.ppformula import PpPair, pp_type_generator_of_element
from ppmod.ppsyntax import format_formula
from ppmod.probes import interval_probe


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=4)
    ap.add_argument("--budget", type=int, default=3)
    ap.add_argument("--max-dim", type=int, default=9)
    args = ap.parse_args()
    alg = kronecker_algebra(GF(2))
    pres = []
    i = 0
    while 2 * i + 1 <= args.max_dim:
        pres.append(kronecker_preprojective(alg, i))
        i += 1
    chain = [kronecker_step_formula(alg, t) for t in range(args.steps)]
    print("descending chain (each formula strictly below the previous):")
    for t, phi in enumerate(chain):
        print(f"  chi_{t} = {format_formula(phi)}")
        if t:
            hi, lo = chain[t - 1], chain[t]
            sep = next(p for p in pres
                       if hi.evaluate(p) != lo.evaluate(p))
            print(f"        strict: separated by {sep.label} (dim {sep.dim})")
    emb = next(h for h in hom_space(pres[0], pres[1]) if h.is_injective())
    one = GF(2).one()
    pair = PpPair(upper=pp_type_generator_of_element(pres[0], (one,)),
                  lower=pp_type_generator_of_element(pres[1], emb((one,))))
    rep = interval_probe(pair, pres, budget=args.budget)
    print()
    print(rep.to_text())


if __name__ == "__main__":
    main()
