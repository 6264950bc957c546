"""Independent brute-force oracles used to cross-check the fast paths.

These deliberately avoid the kernel-and-project route of
PpFormula.evaluate: membership is decided by enumerating witness tuples.
Over GF(2) the enumeration walks the witness space in Gray-code order so
each step is a single packed XOR.
"""

from __future__ import annotations

import itertools

from .linalg import Subspace
from .modules import Module
from .ppformula import PpFormula


def brute_eval_f2(phi: PpFormula, module: Module) -> set[int]:
    """All x-tuples (packed bit vectors) satisfying the formula, found by
    enumerating every witness tuple y."""
    if module.algebra.field.p != 2:
        raise ValueError("packed oracle is GF(2) only")
    if module.algebra is not phi.effective_algebra:
        raise ValueError("module on the wrong side or algebra")
    d = module.dim
    n, l, m = phi.n, phi.l, phi.m
    if d == 0:
        return {0}
    if m == 0:
        return set(range(1 << (n * d)))
    # delta[t]: packed effect on all equations of toggling variable coord t
    deltas = []
    for v in range(n + l):
        acts = [module.act(phi.hmat[v][e]) for e in range(m)]
        for r in range(d):
            acc = 0
            for e in range(m):
                row = acts[e].data[r]
                for c in range(d):
                    if row[c]:
                        acc |= 1 << (e * d + c)
            deltas.append(acc)
    xdim, ydim = n * d, l * d
    found = set()
    for x in range(1 << xdim):
        base = 0
        xb = x
        while xb:
            low = xb & -xb
            base ^= deltas[low.bit_length() - 1]
            xb ^= low
        if base == 0:
            found.add(x)
            continue
        cur = base
        hit = False
        for i in range(1, 1 << ydim):
            t = (i & -i).bit_length() - 1
            cur ^= deltas[xdim + t]
            if cur == 0:
                hit = True
                break
        if hit:
            found.add(x)
    return found


def subspace_int_set(s: Subspace) -> set[int]:
    """All vectors of a GF(2) subspace, packed as ints."""
    rows = []
    for r in s.basis.data:
        acc = 0
        for j, x in enumerate(r):
            if x:
                acc |= 1 << j
        rows.append(acc)
    out = set()
    for bits in range(1 << len(rows)):
        v = 0
        b = bits
        i = 0
        while b:
            if b & 1:
                v ^= rows[i]
            b >>= 1
            i += 1
        out.add(v)
    return out


def brute_eval_slow(phi: PpFormula, module: Module) -> set[tuple]:
    """Field-generic witness enumeration (small finite cases only)."""
    f = module.algebra.field
    d = module.dim
    n, l, m = phi.n, phi.l, phi.m
    els = list(f.elements())
    out = set()
    for xs in itertools.product(els, repeat=n * d):
        xt = [xs[i * d:(i + 1) * d] for i in range(n)]
        ok = False
        for ys in itertools.product(els, repeat=l * d):
            yt = [ys[i * d:(i + 1) * d] for i in range(l)]
            good = True
            for e in range(m):
                acc = [f.zero()] * d
                for v in range(n + l):
                    vec = xt[v] if v < n else yt[v - n]
                    img = module.apply(vec, phi.hmat[v][e])
                    acc = [f.add(a, b) for a, b in zip(acc, img)]
                if any(a != f.zero() for a in acc):
                    good = False
                    break
            if good:
                ok = True
                break
        if ok:
            out.add(tuple(xs))
    return out
