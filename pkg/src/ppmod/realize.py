"""Concrete realization of the ray-tube ladder inside a tower module
category, with every defining square verified exactly.

Stage objects are M_j = F0^n(V/m^j) and P^l_j = F0^{n-l} F1^l (V/m^j); the
vertical embeddings are the canonical F0 -> F1 maps, the horizontal maps
come from the chain inclusions and quotients of the valuation ring.  The
rim maps f_j: P^n_{j+1} -> M_j are completed from the cokernel of the
first stage and are uniquely determined by their two defining equations.

The single-ray translation quiver Q(1; n) realizes onto this ladder:
mu-arrows to the horizontal embeddings, level lambdas to the vertical
embeddings, rim lambdas to the f-maps; normalize-then-realize equals
compose-then-realize on every path (mesh relations hold exactly).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import dvr_chain_module
from .decompose import decompose
from .errors import HorizonExceeded, SquareFailed
from .linalg import Matrix
from .modules import Module, ModuleMap, direct_sum, iso_test
from .tower import (TowerRing, build_tower, f0, f0_map, f1, f1_map,
                    left_projectives, natural_embedding)
from .tube import Arrow, TranslationQuiver, ZERO


def chain_inclusion(alg, j: int) -> ModuleMap:
    """V/m^j -> V/m^{j+1}, the image being the maximal submodule."""
    f = alg.field
    src = dvr_chain_module(alg, j)
    tgt = dvr_chain_module(alg, j + 1)
    data = [[f.one() if c == r + 1 else f.zero() for c in range(j + 1)]
            for r in range(j)]
    return ModuleMap(src, tgt, Matrix(f, j, j + 1, data), check=True)


def chain_quotient(alg, j: int) -> ModuleMap:
    """V/m^{j+1} -> V/m^j, killing the socle of the source."""
    f = alg.field
    src = dvr_chain_module(alg, j + 1)
    tgt = dvr_chain_module(alg, j)
    data = [[f.one() if c == r else f.zero() for c in range(j)]
            for r in range(j + 1)]
    return ModuleMap(src, tgt, Matrix(f, j + 1, j, data), check=True)


def verify_pushout_pullback(top: ModuleMap, left: ModuleMap,
                            right: ModuleMap, bottom: ModuleMap) -> dict:
    """Exactness of 0 -> A -> B (+) C -> D -> 0 for the square

            A --top--> B
            |          |
          left       right
            v          v
            C -bottom-> D

    Returns rank diagnostics; the square is a pushout and a pullback iff
    all three exactness conditions hold."""
    a = top.source
    if left.source is not a and left.source.dim != a.dim:
        raise ValueError("square corners disagree")
    commutes = (top.mat * right.mat) == (left.mat * bottom.mat)
    f = top.mat.field
    first = top.mat.hstack(left.mat)                    # A -> B (+) C
    second = right.mat.vstack(-bottom.mat)              # B (+) C -> D
    inj = first.rank() == a.dim
    surj = second.rank() == right.target.dim
    middle = (top.target.dim + left.target.dim) == \
        a.dim + right.target.dim
    composite_zero = (first * second).is_zero()
    return {
        "commutes": commutes,
        "composite_zero": composite_zero,
        "left_exact": inj,
        "right_exact": surj,
        "middle_exact": middle,
        "is_pullback": commutes and composite_zero and inj and middle and surj,
        "is_pushout": commutes and composite_zero and surj and middle and inj,
        "bicartesian": commutes and composite_zero and inj and surj and middle,
    }


def is_bicartesian(top, left, right, bottom) -> bool:
    return verify_pushout_pullback(top, left, right, bottom)["bicartesian"]


@dataclass
class RealizedTube:
    """Ladder of stage modules and maps in a tower, all squares verified."""

    tower: TowerRing
    stages: int
    M: dict = field(default_factory=dict)        # j -> Module
    P: dict = field(default_factory=dict)        # (l, j) -> Module
    psi: dict = field(default_factory=dict)      # j -> M_j -> M_{j+1}
    phi: dict = field(default_factory=dict)      # j -> M_{j+1} -> M_j
    psibar: dict = field(default_factory=dict)   # (l, j) -> P^l_j -> P^l_{j+1}
    alpha: dict = field(default_factory=dict)    # (l, j) -> level embedding
    fmaps: dict = field(default_factory=dict)    # j -> P^n_{j+1} -> M_j
    checked_squares: list = field(default_factory=list)

    def object(self, l: int, j: int) -> Module:
        return self.M[j] if l == 0 else self.P[(l, j)]

    def horizontal(self, l: int, j: int) -> ModuleMap:
        return self.psi[j] if l == 0 else self.psibar[(l, j)]

    def realize_arrow(self, q: TranslationQuiver, a: Arrow) -> ModuleMap:
        """Arrows of the single-ray quiver Q(1; n) as ladder maps."""
        n = self.tower.height
        if q.m != 1 or q.ray_lengths != (n,):
            raise ValueError("the realization covers Q(1; n) for the tower height n")
        if a.kind == "mu":
            return self.horizontal(a.k, a.j)
        if a.k < n:
            return self.alpha[(a.k + 1, a.j)]
        return self.fmaps[a.j - 1]

    def realize_normal_path(self, q: TranslationQuiver, np) -> ModuleMap:
        from .tube import normal_path_arrows
        if np == ZERO:
            raise ValueError("zero has no single realization; compare is_zero")
        arrows = normal_path_arrows(q, np)
        src = self.object(np.start[1], np.start[2])
        out = ModuleMap(src, src, Matrix.identity(self.tower.field, src.dim),
                        check=False)
        for a in arrows:
            out = out.then(self.realize_arrow(q, a))
        return out.scale(self.tower.field.of(np.coeff))


def realize_in_tower(tower: TowerRing, stages: int) -> RealizedTube:
    """Build the ladder up to the given stage and verify every defining
    square as a pushout and pullback; needs stages + 1 < horizon headroom
    (stage modules use chain length stages + 1)."""
    if stages < 1:
        raise ValueError("need at least one stage")
    if stages >= tower.N:
        raise HorizonExceeded(
            f"stages {stages} need chain modules beyond the horizon {tower.N}")
    n = tower.height
    alg0 = tower.algebras[0]
    rt = RealizedTube(tower, stages)

    def lift_f0(mod_map, from_level):
        out = mod_map
        for lvl in range(from_level + 1, n + 1):
            out = f0_map(tower, lvl, out)
        return out

    for j in range(1, stages + 2):
        base = dvr_chain_module(alg0, j)
        m = base
        for lvl in range(1, n + 1):
            m = f0(tower, lvl, m)
        m.label = f"M{j}"
        rt.M[j] = m
        for l in range(1, n + 1):
            p = base
            for lvl in range(1, l + 1):
                p = f1(tower, lvl, p)
            for lvl in range(l + 1, n + 1):
                p = f0(tower, lvl, p)
            p.label = f"P^{l}_{j}"
            rt.P[(l, j)] = p

    for j in range(1, stages + 1):
        inc = chain_inclusion(alg0, j)
        quo = chain_quotient(alg0, j)
        psi = inc
        phi = quo
        for lvl in range(1, n + 1):
            psi = f0_map(tower, lvl, psi)
            phi = f0_map(tower, lvl, phi)
        rt.psi[j] = _rehome(psi, rt.M[j], rt.M[j + 1])
        rt.phi[j] = _rehome(phi, rt.M[j + 1], rt.M[j])
        for l in range(1, n + 1):
            pb = inc
            for lvl in range(1, l + 1):
                pb = f1_map(tower, lvl, pb)
            for lvl in range(l + 1, n + 1):
                pb = f0_map(tower, lvl, pb)
            rt.psibar[(l, j)] = _rehome(pb, rt.P[(l, j)], rt.P[(l, j + 1)])

    for j in range(1, stages + 2):
        base = dvr_chain_module(alg0, j)
        for l in range(1, n + 1):
            inner = base
            for lvl in range(1, l):
                inner = f1(tower, lvl, inner)
            eta = natural_embedding(tower, l, inner)
            up = eta
            for lvl in range(l + 1, n + 1):
                up = f0_map(tower, lvl, up)
            src = rt.M[j] if l == 1 else rt.P[(l - 1, j)]
            rt.alpha[(l, j)] = _rehome(up, src, rt.P[(l, j)])

    _complete_f_maps(rt)
    _verify_squares(rt)
    return rt


def _rehome(mod_map: ModuleMap, src: Module, tgt: Module) -> ModuleMap:
    """Reattach a map to the cached copies of its endpoints (same data)."""
    if mod_map.source.dim != src.dim or mod_map.target.dim != tgt.dim:
        raise ValueError("map endpoints disagree with the cached modules")
    return ModuleMap(src, tgt, mod_map.mat, check=True)


def _complete_f_maps(rt: RealizedTube):
    """Solve for the rim maps f_j: P^n_{j+1} -> M_j from
    f_j o psibar^n_j = psi_{j-1} o f_{j-1}  (f_0 := 0 against M_0 = 0)
    and  f_j o (alpha chain at stage j+1) = phi_j."""
    tower, n = rt.tower, rt.tower.height
    f = tower.field
    if n == 0:
        for j in range(1, rt.stages + 1):
            rt.fmaps[j] = rt.phi[j]
        return
    for j in range(1, rt.stages + 1):
        pnj1 = rt.P[(n, j + 1)]
        chain = rt.alpha[(1, j + 1)]
        for l in range(2, n + 1):
            chain = chain.then(rt.alpha[(l, j + 1)])
        constraints = [(chain.mat, rt.phi[j].mat)]
        if j >= 2:
            prev = rt.fmaps[j - 1]
            constraints.append((rt.psibar[(n, j)].mat,
                                prev.mat * rt.psi[j - 1].mat))
        else:
            constraints.append((rt.psibar[(n, j)].mat,
                                Matrix.zero(f, rt.P[(n, j)].dim, rt.M[j].dim)))
        stacked = constraints[0][0].vstack(constraints[1][0])
        rhs = constraints[0][1].vstack(constraints[1][1])
        sol = stacked.solve_right(rhs)
        if sol is None:
            raise SquareFailed(f"f[{j}]", "rim completion system inconsistent")
        rt.fmaps[j] = ModuleMap(pnj1, rt.M[j], sol, check=True)


def _verify_squares(rt: RealizedTube):
    tower, n, J = rt.tower, rt.tower.height, rt.stages

    def check(name, top, left, right, bottom):
        res = verify_pushout_pullback(top, left, right, bottom)
        rt.checked_squares.append((name, res["bicartesian"]))
        if not res["bicartesian"]:
            raise SquareFailed(name, str(res))

    # the degenerate base square (zero corner): exactness of the first stage
    if not rt.psi[1].is_injective():
        raise SquareFailed("tube[1]", "first stage map not injective")
    if not rt.phi[1].is_surjective() or \
            not (rt.psi[1].mat * rt.phi[1].mat).is_zero() or \
            rt.M[2].dim != 2 * rt.M[1].dim:
        raise SquareFailed("tube[1]", "base sequence not exact")
    rt.checked_squares.append(("tube[1]", True))
    for j in range(1, J):
        check(f"tube[{j + 1}]",
              rt.phi[j], rt.psi[j + 1], rt.psi[j], rt.phi[j + 1])

    # ladder squares at every depth
    for l in range(1, n + 1):
        for j in range(1, J + 1):
            check(f"ladder[{l},{j}]",
                  rt.horizontal(l - 1, j), rt.alpha[(l, j)],
                  rt.alpha[(l, j + 1)], rt.psibar[(l, j)])

    # rim squares (pushout direction suffices per the completion, but the
    # realization satisfies the full bicartesian property)
    for j in range(2, J + 1):
        check(f"rim[{j}]",
              rt.psibar[(n, j)] if n >= 1 else rt.psi[j],
              rt.fmaps[j - 1], rt.fmaps[j], rt.psi[j - 1])

    # cokernel of the first stage map is the first stage object
    cok_ok = rt.phi[1].is_surjective() and \
        (rt.psi[1].mat * rt.phi[1].mat).is_zero() and \
        rt.M[2].dim - rt.M[1].dim == rt.M[1].dim
    if not cok_ok:
        raise SquareFailed("coker[psi_1]", "cokernel is not the stage-1 object")
    rt.checked_squares.append(("coker[psi_1]", True))


# -- the stage bimodule and its projectivity ----------------------------------


def stage_bimodule(rt: RealizedTube):
    """The stage-J surrogate of the limit bimodule: X = M_J (+) P^1_1 (+)
    ... (+) P^n_1 with its left action of the height-n tower built at
    horizon J, returned as (left tower, module over its opposite algebra,
    underlying A-module, left action matrices)."""
    tower, n, J = rt.tower, rt.tower.height, rt.stages
    f = tower.field
    left_tower = build_tower(J, n, f)

    comps = [rt.M[J]] + [rt.P[(l, 1)] for l in range(1, n + 1)]
    x_mod, injs, projs = direct_sum(comps, label="stage_bimodule")

    # x acts on the M_J component as multiplication by the uniformizer
    # (stages < N guarantees N >= 2, so the x coordinate exists)
    shift = dvr_chain_module(tower.algebras[0], J).action[1]
    xmult = ModuleMap(rt.M[J], rt.M[J], shift, check=True)

    # u_1: M_J -> M_1 along the quotients, then into P^1
    u1 = ModuleMap(rt.M[J], rt.M[J], Matrix.identity(f, rt.M[J].dim),
                   check=False)
    for j in range(J - 1, 0, -1):
        u1 = u1.then(rt.phi[j])

    # recursive left actions: lam[s] for each basis element of the left tower
    lam: dict[int, Matrix] = {}
    dims = [rt.M[J].dim] + [rt.P[(l, 1)].dim for l in range(1, n + 1)]
    offs = [sum(dims[:i]) for i in range(len(dims))]
    total = sum(dims)

    def embed_block(mat: Matrix, bi: int, bj: int) -> Matrix:
        data = [[f.zero()] * total for _ in range(total)]
        for r in range(mat.rows):
            for c in range(mat.cols):
                data[offs[bi] + r][offs[bj] + c] = mat.data[r][c]
        return Matrix(f, total, total, data)

    # level 0: powers of x on the first block
    b0 = left_tower.algebras[0]
    power = Matrix.identity(f, rt.M[J].dim)
    for t in range(b0.dim):
        lam[t] = embed_block(power, 0, 0)
        power = power * xmult.mat

    # Delta_0: the bimodule generator goes to beta_1 = alpha^1 o u_1
    if n >= 1:
        beta1 = u1.then(rt.alpha[(1, 1)])
        deltas: list[list[Matrix]] = [[beta1.mat]]  # level 0 basis maps X_0 -> P^1

    done = b0.dim
    for lvl in range(1, n + 1):
        blvl = left_tower.algebras[lvl]
        l_bim = left_tower.bimodules[lvl - 1]
        sub_total = offs[lvl] + dims[lvl]
        # bimodule basis elements act through Delta_{lvl-1}
        for t in range(l_bim.dim):
            dm = deltas[lvl - 1][t]
            data = [[f.zero()] * total for _ in range(total)]
            for r in range(dm.rows):
                for c in range(dm.cols):
                    data[r][offs[lvl] + c] = dm.data[r][c]
            lam[done + t] = Matrix(f, total, total, data)
        # the extension idempotent projects onto the new block
        proj = embed_block(Matrix.identity(f, dims[lvl]), lvl, lvl)
        lam[done + l_bim.dim] = proj
        done += l_bim.dim + 1
        if lvl < n:
            nxt_alpha = rt.alpha[(lvl + 1, 1)]
            new_deltas = []
            # basis of L_lvl in flatten order: [hom slot | lower bimodule]
            idmap = nxt_alpha.mat  # P^lvl -> P^{lvl+1}
            first = Matrix.zero(f, offs[lvl] + dims[lvl], rt.P[(lvl + 1, 1)].dim)
            d = [list(r) for r in first.data]
            for r in range(dims[lvl]):
                for c in range(rt.P[(lvl + 1, 1)].dim):
                    d[offs[lvl] + r][c] = idmap.data[r][c]
            new_deltas.append(Matrix(f, offs[lvl] + dims[lvl],
                                     rt.P[(lvl + 1, 1)].dim, d))
            for t in range(l_bim.dim):
                comp = deltas[lvl - 1][t] * nxt_alpha.mat
                pad = [[f.zero()] * rt.P[(lvl + 1, 1)].dim
                       for _ in range(offs[lvl] + dims[lvl])]
                for r in range(comp.rows):
                    for c in range(comp.cols):
                        pad[r][c] = comp.data[r][c]
                new_deltas.append(Matrix(f, offs[lvl] + dims[lvl],
                                         rt.P[(lvl + 1, 1)].dim, pad))
            deltas.append(new_deltas)

    top = left_tower.top
    if done != top.dim:
        raise AssertionError("left action construction out of sync")
    # fix the unit: lam matrices are per basis element; validity checked by
    # the module constructor over the opposite algebra
    action = [lam[t] for t in range(top.dim)]
    left_mod = Module(top.op, total, action, label="stage_bimodule_left",
                      check=True)
    # bimodule condition: every left action matrix is a right-module map
    for t in range(top.dim):
        ModuleMap(x_mod, x_mod, action[t], check=True)
    # ring embedding: the left action matrices are linearly independent
    rows = [[x for r in mat.data for x in r] for mat in action]
    if Matrix.from_rows(f, rows).rank() != top.dim:
        raise AssertionError("left tower does not embed into the endomorphisms")
    return left_tower, left_mod, x_mod


def verify_bimodule_idempotents(rt: RealizedTube) -> dict:
    """Check that the stage bimodule decomposes as projective left modules
    with the dimension-difference multiplicities."""
    tower, n, J = rt.tower, rt.tower.height, rt.stages
    left_tower, left_mod, _ = stage_bimodule(rt)
    dims = [rt.M[1].dim] + [rt.P[(l, 1)].dim for l in range(1, n + 1)]
    expected = [dims[0]] + [dims[i] - dims[i - 1] for i in range(1, n + 1)]
    projs = left_projectives(left_tower)
    d = decompose(left_mod)
    found: dict[str, int] = {name: 0 for name, _ in projs}
    for rep, mult, _ in d.classes:
        matched = None
        for name, p in projs:
            if rep.module.dim == p.dim and iso_test(rep.module, p) is not None:
                matched = name
                break
        if matched is None:
            return {"ok": False, "reason": "non-projective summand",
                    "expected": expected, "found": found}
        found[matched] += mult
    names = ["c"] + [f"e{i}" for i in range(1, n + 1)]
    got = [found.get(nm, 0) for nm in names]
    return {"ok": got == expected, "expected": expected, "found": got,
            "projectives": names}
