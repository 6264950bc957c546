"""Iterated one-point extensions of the truncated valuation ring.

The tower R_0 = k[x]/(x^N), R_{i+1} = triangular extension of R_i by the
bimodule L_i (L_0 the unique simple, L_{i+1} its image under the second
embedding functor).  Modules over R_{i+1} are equivalent to triples
(M_0, M_1, Gamma) with Gamma: M_0 -> Hom(L_i, M_1); both forms are kept,
with a verified round trip.  The classifier identifies every finitely
presented module by a label in the grammar

    T(n)  |  F0^a F1^b Ind(j)  |  F0^a F1^b T(m)

with exponent sums matching the tower height; the empirical redundancy
T(0) = Ind(1) is canonicalized away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FDAlgebra, truncated_dvr
from .catalog import dvr_chain_module
from .decompose import decompose
from .errors import HorizonExceeded, UnclassifiedSummand
from .fields import Field
from .linalg import Matrix, Subspace
from .modules import (Module, ModuleMap, hom_space, iso_test,
                      regular_module, submodule, _module_span)


def one_point_extension(base: FDAlgebra, bimodule: Module,
                        eps_label: str) -> FDAlgebra:
    """The triangular matrix ring (base 0 / bimodule k)."""
    f = base.field
    r, s = base.dim, bimodule.dim
    dim = r + s + 1
    z = f.zero()

    def vec(part, coords):
        v = [z] * dim
        if part == "r":
            for i, c in enumerate(coords):
                v[i] = c
        elif part == "l":
            for i, c in enumerate(coords):
                v[r + i] = c
        else:
            v[r + s] = coords
        return tuple(v)

    zero = (z,) * dim
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < r and j < r:
                row.append(vec("r", base.table[i][j]))
            elif r <= i < r + s and j < r:
                li = [z] * s
                li[i - r] = f.one()
                img = bimodule.apply(li, base.basis_el(j))
                row.append(vec("l", img))
            elif i == r + s and r <= j < r + s:
                lj = [z] * s
                lj[j - r] = f.one()
                row.append(vec("l", lj))
            elif i == r + s and j == r + s:
                row.append(vec("e", f.one()))
            else:
                row.append(zero)
        table.append(tuple(row))
    labels = list(base.labels) + \
        [f"{bimodule.label or 'l'}~{i}" for i in range(s)] + [eps_label]
    unit = list(base.unit) + [z] * s
    unit.append(f.one())
    return FDAlgebra(f, labels, table, unit,
                     name=f"{base.name}[{bimodule.label}]")


class TowerRing:
    """The chain R_0 .. R_n with bimodules, simples and idempotents."""

    def __init__(self, N: int, height: int, field: Field):
        if N < 1 or height < 0:
            raise ValueError("need horizon N >= 1 and height >= 0")
        self.N = N
        self.height = height
        self.field = field
        self.algebras: list[FDAlgebra] = [truncated_dvr(N, field)]
        self.bimodules: list[Module] = [dvr_chain_module(self.algebras[0], 1)]
        self.bimodules[0].label = "L0"
        for i in range(height):
            alg = one_point_extension(self.algebras[i], self.bimodules[i],
                                      eps_label=f"eps{i + 1}")
            self.algebras.append(alg)
            nxt = f1(self, i + 1, self.bimodules[i])
            nxt.label = f"L{i + 1}"
            self.bimodules.append(nxt)
        self._check_shape()
        self._label_cache: dict = {}

    def _check_shape(self):
        for i, l in enumerate(self.bimodules):
            if l.dim != i + 1:
                raise AssertionError("bimodule dimension drifted")
        n = self.height
        if self.top.dim != self.N + n * (n + 3) // 2:
            raise AssertionError("tower dimension formula violated")
        for lvl in range(1, n + 1):
            alg = self.algebras[lvl]
            ids = [self.c_idem(lvl)] + [self.e_idem(lvl, i)
                                        for i in range(1, lvl + 1)]
            total = alg.zero_el()
            for v in ids:
                total = alg.add_el(total, v)
            if total != alg.unit:
                raise AssertionError("idempotents do not sum to the unit")
            for i, u in enumerate(ids):
                for j, v in enumerate(ids):
                    prod = alg.mul_el(u, v)
                    want = u if i == j else alg.zero_el()
                    if prod != want:
                        raise AssertionError("idempotents not orthogonal")

    @property
    def top(self) -> FDAlgebra:
        return self.algebras[self.height]

    def embed_el(self, el, from_level: int, to_level: int):
        """Coordinate embedding R_i -> R_j along the tower inclusions."""
        v = tuple(el)
        for lvl in range(from_level, to_level):
            v = v + (self.field.zero(),) * (self.algebras[lvl + 1].dim -
                                            self.algebras[lvl].dim)
        return v

    def c_idem(self, level: int):
        """The idempotent cutting out the valuation-ring corner."""
        return self.embed_el(self.algebras[0].unit, 0, level)

    def e_idem(self, level: int, i: int):
        """The i-th extension idempotent (1 <= i <= level)."""
        if not (1 <= i <= level):
            raise ValueError("extension idempotent index out of range")
        alg_i = self.algebras[i]
        z = self.field.zero()
        v = [z] * alg_i.dim
        v[alg_i.dim - 1] = self.field.one()
        return self.embed_el(tuple(v), i, level)


def build_tower(N: int, height: int, field: Field) -> TowerRing:
    return TowerRing(N, height, field)


# -- triples -------------------------------------------------------------


@dataclass
class Triple:
    """(M_0, M_1, Gamma) over R_level; gamma[r] is the matrix of the map
    the r-th basis vector of M_0 is sent to in Hom(L_{level-1}, M_1)."""

    tower: TowerRing
    level: int
    m0: int
    m1: Module
    gamma: list[Matrix]

    def __post_init__(self):
        if not (1 <= self.level <= self.tower.height):
            raise ValueError("triple level out of range")
        l_mod = self.tower.bimodules[self.level - 1]
        for g in self.gamma:
            ModuleMap(l_mod, self.m1, g)  # validates the intertwining
        if len(self.gamma) != self.m0:
            raise ValueError("need one hom per basis vector of M_0")

    def flatten(self) -> Module:
        """The module over R_level on coordinates [M_0 | M_1]."""
        tower, lvl = self.tower, self.level
        alg = tower.algebras[lvl]
        base = tower.algebras[lvl - 1]
        l_dim = tower.bimodules[lvl - 1].dim
        f = tower.field
        d = self.m0 + self.m1.dim
        action = []
        for bidx in range(alg.dim):
            data = [[f.zero()] * d for _ in range(d)]
            if bidx < base.dim:
                a = self.m1.action[bidx]
                for r in range(self.m1.dim):
                    for c in range(self.m1.dim):
                        data[self.m0 + r][self.m0 + c] = a.data[r][c]
            elif bidx < base.dim + l_dim:
                j = bidx - base.dim
                for r in range(self.m0):
                    row = self.gamma[r].data[j]
                    for c in range(self.m1.dim):
                        data[r][self.m0 + c] = row[c]
            else:
                for r in range(self.m0):
                    data[r][r] = f.one()
            action.append(Matrix(f, d, d, data))
        return Module(alg, d, action, check=False)

    @staticmethod
    def from_module(tower: TowerRing, level: int, x: Module) -> "Triple":
        """Recover the triple from any module over R_level."""
        alg = tower.algebras[level]
        base = tower.algebras[level - 1]
        l_dim = tower.bimodules[level - 1].dim
        if x.algebra is not alg:
            raise ValueError("module is not over the expected tower level")
        f = tower.field
        eps = [f.zero()] * alg.dim
        eps[alg.dim - 1] = f.one()
        e_mat = x.act(tuple(eps))
        s0 = Subspace.from_matrix(x.dim, e_mat.row_space())
        one_minus = x.act(alg.unit) - e_mat
        s1 = Subspace.from_matrix(x.dim, one_minus.row_space())
        m1_action = []
        b1 = s1.basis
        pivots = [next(j for j, v in enumerate(row) if v != f.zero())
                  for row in b1.data]
        for bidx in range(base.dim):
            big = x.act(tower.embed_el(base.basis_el(bidx), level - 1, level))
            img = b1 * big
            m1_action.append(img.take_cols(pivots))
        m1 = Module(base, s1.dim, m1_action, check=False)
        gamma = []
        for r in range(s0.dim):
            v = Matrix.from_rows(f, [list(s0.basis.data[r])])
            rows = []
            for j in range(l_dim):
                el = [f.zero()] * alg.dim
                el[base.dim + j] = f.one()
                img = (v * x.act(tuple(el))).data[0]
                rows.append([img[p] for p in pivots])
            gamma.append(Matrix(f, l_dim, s1.dim, rows))
        return Triple(tower, level, s0.dim, m1, gamma)


# -- the three functors ------------------------------------------------------


def f0(tower: TowerRing, level: int, m: Module) -> Module:
    """(0, M, 0): the first full and faithful embedding, one level up."""
    if not (1 <= level <= tower.height):
        raise ValueError("level out of range")
    if m.algebra is not tower.algebras[level - 1]:
        raise ValueError("module is not one level below")
    alg = tower.algebras[level]
    base = tower.algebras[level - 1]
    f = tower.field
    z = Matrix.zero(f, m.dim, m.dim)
    action = []
    for bidx in range(alg.dim):
        if bidx < base.dim:
            action.append(m.action[bidx])
        else:
            action.append(z)
    out = Module(alg, m.dim, action, check=False)
    out.label = f"F0({m.label})" if m.label else ""
    return out


def f1(tower: TowerRing, level: int, m: Module) -> Module:
    """(Hom(L, M), M, id): the second full and faithful embedding."""
    if not (1 <= level <= tower.height):
        raise ValueError("level out of range")
    if m.algebra is not tower.algebras[level - 1]:
        raise ValueError("module is not one level below")
    l_mod = tower.bimodules[level - 1]
    homs = hom_space(l_mod, m)
    tri = Triple(tower, level, len(homs), m, [h.mat for h in homs])
    out = tri.flatten()
    out.label = f"F1({m.label})" if m.label else ""
    return out


def f0_map(tower: TowerRing, level: int, fmap: ModuleMap) -> ModuleMap:
    return ModuleMap(f0(tower, level, fmap.source),
                     f0(tower, level, fmap.target), fmap.mat, check=False)


def f1_map(tower: TowerRing, level: int, fmap: ModuleMap) -> ModuleMap:
    """Block action on (Hom(L, X), X): post-composition on the hom part."""
    l_mod = tower.bimodules[level - 1]
    f = tower.field
    hx = hom_space(l_mod, fmap.source)
    hy = hom_space(l_mod, fmap.target)
    # express h . f over the target hom basis; when the target hom space
    # vanishes every composite is zero and the hom block is empty
    if hy:
        basis_rows = [[x for r in h.mat.data for x in r] for h in hy]
        basis_mat = Matrix.from_rows(f, basis_rows)
    coeff_rows = []
    for h in hx:
        if not hy:
            comp = h.mat * fmap.mat
            if not comp.is_zero():
                raise ValueError("nonzero composite outside the hom space")
            coeff_rows.append([])
            continue
        comp = h.mat * fmap.mat
        vec = Matrix.from_rows(f, [[x for r in comp.data for x in r]])
        sol = basis_mat.solve_left(vec)
        if sol is None:
            raise ValueError("composition left the hom space span")
        coeff_rows.append(list(sol.data[0]))
    sx = f1(tower, level, fmap.source)
    sy = f1(tower, level, fmap.target)
    dx, dy = sx.dim, sy.dim
    data = [[f.zero()] * dy for _ in range(dx)]
    for r in range(len(hx)):
        for c in range(len(hy)):
            data[r][c] = coeff_rows[r][c]
    for r in range(fmap.source.dim):
        for c in range(fmap.target.dim):
            data[len(hx) + r][len(hy) + c] = fmap.mat.data[r][c]
    return ModuleMap(sx, sy, Matrix(f, dx, dy, data), check=False)


def forget(tower: TowerRing, level: int, x: Module) -> Module:
    """The underlying module one level down."""
    return Triple.from_module(tower, level, x).m1


def natural_embedding(tower: TowerRing, level: int, m: Module) -> ModuleMap:
    """The canonical embedding (0, id): F0 M -> F1 M."""
    src = f0(tower, level, m)
    tgt = f1(tower, level, m)
    f = tower.field
    h = tgt.dim - m.dim
    data = [[f.zero()] * tgt.dim for _ in range(m.dim)]
    for r in range(m.dim):
        data[r][h + r] = f.one()
    return ModuleMap(src, tgt, Matrix(f, m.dim, tgt.dim, data), check=True)


def t_module(tower: TowerRing, m: int) -> Module:
    """The simple concentrated at the extension vertex of level m; at level
    0 this is the valuation simple (the grammar's T(0) = Ind(1))."""
    if m == 0:
        return dvr_chain_module(tower.algebras[0], 1)
    alg = tower.algebras[m]
    f = tower.field
    one = Matrix.identity(f, 1)
    z = Matrix.zero(f, 1, 1)
    action = [z] * alg.dim
    action[alg.dim - 1] = one
    # the unit acts as identity because unit = unit_base + eps
    mod = Module(alg, 1, action, check=True)
    mod.label = f"T({m})"
    return mod


# -- labels and classification -------------------------------------------------


@dataclass(frozen=True)
class FpLabel:
    """Classification label: F0^a F1^b applied to Ind(j) or T(m)."""

    a: int
    b: int
    base: tuple  # ("Ind", j) or ("T", m)

    def __str__(self):
        kind, idx = self.base
        if kind == "T" and self.a == 0 and self.b == 0:
            return f"T({idx})"
        return f"F0^{self.a} F1^{self.b} {kind}({idx})"

    @property
    def base_level(self) -> int:
        return self.base[1] if self.base[0] == "T" else 0


def canonical_label(lab: FpLabel) -> FpLabel:
    """Apply the empirical redundancy table: T(0) is the valuation simple."""
    if lab.base == ("T", 0):
        return FpLabel(lab.a, lab.b, ("Ind", 1))
    return lab


def construct_label(tower: TowerRing, lab: FpLabel) -> Module:
    """Build the module a label denotes, with caching."""
    key = (lab.a, lab.b, lab.base)
    hit = tower._label_cache.get(key)
    if hit is not None:
        return hit
    kind, idx = lab.base
    if kind == "Ind":
        if not (1 <= idx <= tower.N):
            raise HorizonExceeded(f"Ind({idx}) outside horizon {tower.N}")
        m = dvr_chain_module(tower.algebras[0], idx)
        level = 0
    else:
        m = t_module(tower, idx)
        level = idx
    for _ in range(lab.b):
        level += 1
        m = f1(tower, level, m)
    for _ in range(lab.a):
        level += 1
        m = f0(tower, level, m)
    if level != tower.height:
        raise ValueError("label exponents do not reach the tower height")
    m.label = str(lab)
    tower._label_cache[key] = m
    return m


def all_labels(tower: TowerRing, dim_cap: int | None = None,
               canonical_only: bool = True) -> list[FpLabel]:
    """Every label at the tower height, optionally canonical and capped."""
    n = tower.height
    out = []
    for a in range(n + 1):
        b = n - a
        for j in range(1, tower.N + 1):
            out.append(FpLabel(a, b, ("Ind", j)))
    for m in range(n + 1):
        for a in range(n - m + 1):
            b = n - m - a
            out.append(FpLabel(a, b, ("T", m)))
    if canonical_only:
        seen = {}
        for lab in out:
            c = canonical_label(lab)
            seen[str(c)] = c
        out = list(seen.values())
    if dim_cap is not None:
        out = [lab for lab in out
               if construct_label(tower, lab).dim <= dim_cap]
    return sorted(out, key=str)


def identify_indecomposable(tower: TowerRing, level: int,
                            u: Module) -> FpLabel:
    """Label of an indecomposable module at the given level."""
    if level == 0:
        j = u.dim
        if not (1 <= j <= tower.N) or \
                iso_test(u, dvr_chain_module(tower.algebras[0], j)) is None:
            raise UnclassifiedSummand(u, "level-0 summand not a chain module")
        return FpLabel(0, 0, ("Ind", j))
    tri = Triple.from_module(tower, level, u)
    if tri.m1.dim == 0:
        if tri.m0 == 1:
            return FpLabel(0, 0, ("T", level))
        raise UnclassifiedSummand(u, "extension part not simple")
    if tri.m0 == 0:
        inner = identify_indecomposable(tower, level - 1, tri.m1)
        return canonical_label(FpLabel(inner.a + 1, inner.b, inner.base))
    rebuilt = f1(tower, level, tri.m1)
    if u.dim != rebuilt.dim or iso_test(u, rebuilt) is None:
        raise UnclassifiedSummand(u, "not isomorphic to the F1 of its core")
    inner = identify_indecomposable(tower, level - 1, tri.m1)
    if inner.a != 0:
        raise UnclassifiedSummand(u, "F1 wraps an F0 layer; impossible shape")
    return canonical_label(FpLabel(0, inner.b + 1, inner.base))


def classify(tower: TowerRing, x: Module, level: int | None = None,
             seed: int = 0) -> list[tuple[FpLabel, int]]:
    """Classification of any module at the tower height (or a stated level)
    as a multiset of labels, sorted by label text."""
    lvl = tower.height if level is None else level
    counts: dict[str, tuple[FpLabel, int]] = {}
    for rep, mult, _ in decompose(x, seed).classes:
        lab = identify_indecomposable(tower, lvl, rep.module)
        key = str(lab)
        if key in counts:
            counts[key] = (lab, counts[key][1] + mult)
        else:
            counts[key] = (lab, mult)
    return [counts[k] for k in sorted(counts)]


def verify_hom_bounds(tower: TowerRing, dim_cap: int):
    """Construct every label of flattened dimension <= cap and check
    dim Hom(L_n, -) <= 1; returns (all_ok, rows)."""
    n = tower.height
    l_top = tower.bimodules[n]
    rows = []
    ok = True
    for lab in all_labels(tower, dim_cap=dim_cap):
        m = construct_label(tower, lab)
        d = len(hom_space(l_top, m))
        rows.append((str(lab), m.dim, d))
        if d > 1:
            ok = False
    return ok, rows


def redundancy_table(tower: TowerRing, dim_cap: int = 12) -> dict[str, str]:
    """Empirical identification table among raw labels: maps the text of a
    non-canonical label to the canonical one it is isomorphic to.  Verifies
    that canonical labels are pairwise non-isomorphic."""
    raw = all_labels(tower, canonical_only=False)
    mods = [(lab, construct_label(tower, canonical_label(lab))) for lab in raw
            if construct_label(tower, canonical_label(lab)).dim <= dim_cap]
    table: dict[str, str] = {}
    canon: list[tuple[FpLabel, Module]] = []
    for lab, m in mods:
        clab = canonical_label(lab)
        if str(clab) != str(lab):
            table[str(lab)] = str(clab)
        if not any(str(c[0]) == str(clab) for c in canon):
            canon.append((clab, m))
    for i in range(len(canon)):
        for j in range(i + 1, len(canon)):
            mi, mj = canon[i][1], canon[j][1]
            if mi.dim == mj.dim and iso_test(mi, mj) is not None:
                raise AssertionError(
                    f"canonical labels {canon[i][0]} and {canon[j][0]} "
                    f"are isomorphic; grammar redundancy discovered")
    return table


def left_projectives(tower: TowerRing) -> list[tuple[str, Module]]:
    """The indecomposable projective left modules (as right modules over the
    opposite algebra), one per tower idempotent."""
    alg = tower.top
    op_reg = regular_module(alg.op)
    out = []
    names = [("c", tower.c_idem(tower.height))] + \
        [(f"e{i}", tower.e_idem(tower.height, i))
         for i in range(1, tower.height + 1)]
    for name, idem in names:
        span = _module_span(op_reg, [list(idem)])
        sub, _ = submodule(op_reg, span, check=False)
        sub.label = f"P[{name}]"
        out.append((name, sub))
    return out
