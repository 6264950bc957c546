"""Versioned catalog of concrete modules used as test universes.

Universal claims in this package are always checked against an explicit,
reproducible list of modules; this module is that list.  Bump
CATALOG_VERSION when the universes change.
"""

from __future__ import annotations

import itertools
import random

from .algebra import FDAlgebra
from .linalg import Matrix
from .modules import Module, direct_sum, free_module, quotient_module, _module_span

CATALOG_VERSION = "1"


# -- modules over k[x]/(x^N) -------------------------------------------


def dvr_chain_module(alg: FDAlgebra, j: int) -> Module:
    """V/m^j over k[x]/(x^N): x acts as the nilpotent shift of order j."""
    N = alg.dim
    if not (1 <= j <= N):
        raise ValueError(f"chain length {j} outside 1..{N}")
    f = alg.field
    shift = Matrix.from_rows(
        f, [[f.one() if c == r + 1 else f.zero() for c in range(j)]
            for r in range(j)])
    action = []
    power = Matrix.identity(f, j)
    for i in range(N):
        action.append(power)
        power = power * shift
    return Module(alg, j, action, label=f"V/m^{j}", check=False)


def dvr_universe(alg: FDAlgebra, dim_cap: int) -> list[Module]:
    """All modules over k[x]/(x^N) of dimension <= dim_cap, up to iso:
    direct sums of chain modules, one per partition with parts <= N."""
    N = alg.dim
    chains = {j: dvr_chain_module(alg, j) for j in range(1, N + 1)}
    out = []
    for total in range(1, dim_cap + 1):
        for part in _partitions(total, min(N, total)):
            mods = [chains[p] for p in part]
            if len(mods) == 1:
                out.append(mods[0])
            else:
                s, _, _ = direct_sum(mods, label="+".join(m.label for m in mods))
                out.append(s)
    return out


def _partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


# -- Kronecker representations -------------------------------------------


def kronecker_rep(alg: FDAlgebra, d1: int, d2: int, amat, bmat,
                  label: str = "") -> Module:
    """Right module from representation data: two d1 x d2 matrices for the
    arrows of 1 => 2, vertex-1 coordinates first."""
    f = alg.field
    d = d1 + d2
    z = Matrix.zero(f, d, d)

    def block(mat11=None, mat22=None, mat12=None):
        data = [[f.zero()] * d for _ in range(d)]
        if mat11 is not None:
            for r in range(d1):
                for c in range(d1):
                    data[r][c] = mat11.data[r][c]
        if mat22 is not None:
            for r in range(d2):
                for c in range(d2):
                    data[d1 + r][d1 + c] = mat22.data[r][c]
        if mat12 is not None:
            for r in range(d1):
                for c in range(d2):
                    data[r][d1 + c] = mat12.data[r][c]
        return Matrix(f, d, d, data)

    amat = amat if isinstance(amat, Matrix) else Matrix.from_int_rows(f, amat)
    bmat = bmat if isinstance(bmat, Matrix) else Matrix.from_int_rows(f, bmat)
    if amat.rows != d1 or amat.cols != d2 or bmat.rows != d1 or bmat.cols != d2:
        raise ValueError("arrow matrices must be d1 x d2")
    action = [z] * alg.dim
    lab = {name: i for i, name in enumerate(alg.labels)}
    action[lab["e1"]] = block(mat11=Matrix.identity(f, d1))
    action[lab["e2"]] = block(mat22=Matrix.identity(f, d2))
    action[lab["a"]] = block(mat12=amat)
    action[lab["b"]] = block(mat12=bmat)
    return Module(alg, d, action, label=label, check=False)


def kronecker_preprojective(alg: FDAlgebra, i: int) -> Module:
    """Preprojective of dimension vector (i, i+1); PP(0) and PP(1) are the
    indecomposable projectives at vertices 2 and 1."""
    f = alg.field
    a = [[f.one() if c == r else f.zero() for c in range(i + 1)] for r in range(i)]
    b = [[f.one() if c == r + 1 else f.zero() for c in range(i + 1)] for r in range(i)]
    return kronecker_rep(alg, i, i + 1, Matrix.from_rows(f, a) if i else Matrix(f, 0, i + 1, []),
                         Matrix.from_rows(f, b) if i else Matrix(f, 0, i + 1, []),
                         label=f"PP({i})")


def kronecker_preinjective(alg: FDAlgebra, i: int) -> Module:
    """Preinjective of dimension vector (i+1, i)."""
    f = alg.field
    a = [[f.one() if c == r else f.zero() for c in range(i)] for r in range(i + 1)]
    b = [[f.one() if c == r - 1 else f.zero() for c in range(i)] for r in range(i + 1)]
    return kronecker_rep(alg, i + 1, i,
                         Matrix.from_rows(f, a), Matrix.from_rows(f, b),
                         label=f"PI({i})")


def kronecker_regular(alg: FDAlgebra, lam, n: int) -> Module:
    """Regular module of quasi-length n in the tube at lam (a field element
    or the string 'inf')."""
    f = alg.field
    ident = Matrix.identity(f, n)
    shift = Matrix.from_rows(
        f, [[f.one() if c == r + 1 else f.zero() for c in range(n)] for r in range(n)])
    if lam == "inf":
        return kronecker_rep(alg, n, n, shift, ident, label=f"R(inf)[{n}]")
    jordan = shift + ident.scale(lam)
    return kronecker_rep(alg, n, n, ident, jordan, label=f"R({lam})[{n}]")


def kronecker_indecomposables(alg: FDAlgebra, dim_cap: int) -> list[Module]:
    f = alg.field
    out = []
    i = 0
    while 2 * i + 1 <= dim_cap:
        out.append(kronecker_preprojective(alg, i))
        out.append(kronecker_preinjective(alg, i))
        i += 1
    lams = list(f.elements()) if f.p is not None else [f.of(0), f.of(1)]
    n = 1
    while 2 * n <= dim_cap:
        for lam in lams:
            out.append(kronecker_regular(alg, lam, n))
        out.append(kronecker_regular(alg, "inf", n))
        n += 1
    return out


def kronecker_universe(alg: FDAlgebra, dim_cap: int) -> list[Module]:
    """All Kronecker modules of dimension <= dim_cap up to iso (multisets of
    indecomposables)."""
    indecs = kronecker_indecomposables(alg, dim_cap)
    out = []
    for size in range(1, dim_cap + 1):
        seen = set()
        for combo in itertools.combinations_with_replacement(range(len(indecs)), size):
            mods = [indecs[i] for i in combo]
            if sum(m.dim for m in mods) > dim_cap:
                continue
            key = tuple(sorted(combo))
            if key in seen:
                continue
            seen.add(key)
            if len(mods) == 1:
                out.append(mods[0])
            else:
                s, _, _ = direct_sum(mods, label="+".join(m.label for m in mods))
                out.append(s)
    # dedupe by construction key only; multiset enumeration is already unique
    uniq = {}
    for m in out:
        uniq.setdefault(m.label, m)
    return list(uniq.values())


# -- random modules ----------------------------------------------------------


def kronecker_step_formula(alg: FDAlgebra, t: int):
    """The t-th member of the strictly descending chain between e2 | x and
    the b-divisibility formula on the Kronecker algebra:

        t = 0:  e2 | x
        t >= 1: (exists y1..yt: x = y1 a, y1 b = y2 a, ..., ) + (b | x)
    """
    from .ppformula import PpFormula, divisibility, pp_sum
    if t == 0:
        return divisibility(alg, alg.el_from_label("e2"))
    z = alg.zero_el()
    a = alg.el_from_label("a")
    b = alg.el_from_label("b")
    rows = [[z] * t for _ in range(1 + t)]
    rows[0][0] = alg.unit            # x appears in the first condition
    rows[1][0] = alg.neg_el(a)       # x - y1 a = 0
    for i in range(2, t + 1):
        rows[i - 1][i - 1] = b       # y_{i-1} b
        rows[i][i - 1] = alg.neg_el(a)
    theta = PpFormula(alg, "right", 1, t, rows)
    return pp_sum(theta, divisibility(alg, b))


def random_quotient_of_free(alg: FDAlgebra, rank: int, rng: random.Random,
                            dim_cap: int, min_dim: int = 1) -> Module:
    """Seeded random quotient of A^rank with dimension in [min_dim, dim_cap]."""
    f = alg.field
    free = free_module(alg, rank)
    pool = list(f.elements()) if f.p is not None else [f.of(v) for v in (-1, 0, 1)]
    for _ in range(200):
        nvec = rng.randint(1, max(1, free.dim // 2))
        vecs = [[rng.choice(pool) for _ in range(free.dim)] for _ in range(nvec)]
        sub = _module_span(free, vecs)
        d = free.dim - sub.dim
        if min_dim <= d <= dim_cap:
            q, _ = quotient_module(free, sub, check=False)
            q.label = f"rand(d={d})"
            return q
    raise RuntimeError("could not sample a quotient within the dimension bounds")
