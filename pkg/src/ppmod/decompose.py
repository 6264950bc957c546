"""Krull-Schmidt decomposition and the radical of the module category.

Splitting uses Fitting decompositions of endomorphisms (stabilized power,
then M = ker f^d (+) im f^d).  A leaf is accepted as indecomposable only
with a certificate that End(M) is local:

* finite fields, small End: every element of End(M) is enumerated and shown
  to be nilpotent or invertible (equivalent to locality for
  finite-dimensional algebras, since a nontrivial idempotent is neither);
* rationals: the radical is computed from the trace form (valid in
  characteristic 0) and End/rad is certified a division ring, factoring a
  primitive element's minimal polynomial when End/rad has dimension > 1.

Split candidates beyond the enumerable range are drawn from the hom basis,
pairwise sums/products and a seeded random sample; on the universes in
scope a decomposable module always yields a candidate.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .linalg import Matrix, Subspace, subspace_meet, subspace_sum
from .modules import (Module, ModuleMap, hom_space, identity_map,
                      iso_test, submodule)

_ENUM_LIMIT = 1 << 14


@dataclass
class Summand:
    module: Module
    inject: ModuleMap      # module -> parent
    project: ModuleMap     # parent -> module
    end_dim: int
    end_rad_dim: int

    @property
    def idempotent(self) -> ModuleMap:
        return self.project.then(self.inject)


@dataclass
class Decomposition:
    module: Module
    summands: list[Summand]
    # grouped up to isomorphism: list of (representative Summand, multiplicity,
    # indices into summands)
    classes: list[tuple[Summand, int, list[int]]] = field(default_factory=list)

    def idempotents(self) -> list[ModuleMap]:
        return [s.idempotent for s in self.summands]

    def multiplicities(self) -> list[tuple[Module, int]]:
        return [(rep.module, mult) for rep, mult, _ in self.classes]


def _power_stable(f: Matrix, dim: int) -> Matrix:
    g = f
    k = 1
    while k < max(dim, 1):
        g = g * g
        k *= 2
    return g


def _fitting_split(m: Module, f: ModuleMap):
    """(kernel part, image part) of the stabilized power, or None if f is
    nilpotent or invertible."""
    g = _power_stable(f.mat, m.dim)
    img = Subspace.from_matrix(m.dim, g.row_space())
    if img.dim == 0 or img.dim == m.dim:
        return None
    ker = Subspace(m.dim, g.left_kernel())
    if ker.dim + img.dim != m.dim or subspace_meet(ker, img).dim != 0:
        return None  # power not yet stable; caller retries with higher power
    return ker, img


def _split_by_subspaces(m: Module, parts: list[Subspace]):
    """Split M along complementary invariant subspaces; returns
    [(submodule, inj, proj)] with proj . inj = id."""
    f = m.algebra.field
    stacked = parts[0].basis
    for p in parts[1:]:
        stacked = stacked.vstack(p.basis)
    inv = stacked.inverse()
    out = []
    off = 0
    for p in parts:
        sub, inj = submodule(m, p, check=False)
        proj_mat = inv.take_cols(range(off, off + p.dim))
        out.append((sub, inj, ModuleMap(m, sub, proj_mat, check=False)))
        off += p.dim
    return out


def _el_is_nilpotent(mat: Matrix, dim: int) -> bool:
    return _power_stable(mat, dim).is_zero()


def _end_certify_local_finite(m: Module, basis: list[ModuleMap]):
    """Enumerate End(M) over a finite field.  Returns (True, rad_dim) when
    local, or (False, splitter) with a non-nilpotent non-invertible element."""
    f = m.algebra.field
    els = list(f.elements())
    nilpotent_rows = []
    count_nilpotent = 0
    for combo in itertools.product(els, repeat=len(basis)):
        mat = Matrix.zero(f, m.dim, m.dim)
        for c, h in zip(combo, basis):
            if c != f.zero():
                mat = mat + h.mat.scale(c)
        if mat.rank() == m.dim:
            continue
        if _el_is_nilpotent(mat, m.dim):
            count_nilpotent += 1
            nilpotent_rows.append(list(combo))
            continue
        return False, ModuleMap(m, m, mat, check=False)
    rad = Matrix.from_rows(f, nilpotent_rows).row_space() if nilpotent_rows \
        else Matrix(f, 0, len(basis), [])
    # non-invertibles must form a linear subspace for a local ring
    if f.p is not None and f.p ** rad.rows != count_nilpotent:
        raise RuntimeError("endomorphism nilpotents do not form a subspace")
    return True, rad.rows


def _end_radical_dickson(basis: list[ModuleMap]) -> list[list]:
    """Radical of End over QQ via the trace form (characteristic 0)."""
    f = basis[0].mat.field
    n = len(basis)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = basis[i].mat * basis[j].mat
            row.append(sum((prod.data[t][t] for t in range(prod.rows)), f.zero()))
        gram.append(row)
    return Matrix.from_rows(f, gram).right_kernel().data


def _min_poly_coeffs(mat: Matrix, f) -> list:
    """Coefficients c_0..c_d of the minimal polynomial (sum c_i t^i = 0)."""
    powers = [Matrix.identity(f, mat.rows)]
    while True:
        rows = [[x for r in p.data for x in r] for p in powers]
        mrows = Matrix.from_rows(f, rows)
        if mrows.rank() < len(powers):
            break
        powers.append(powers[-1] * mat)
    rel = mrows.left_kernel().data[0]
    return list(rel)


def _eval_poly_coeffs(coeffs, mat: Matrix, f) -> Matrix:
    out = Matrix.zero(f, mat.rows, mat.rows)
    power = Matrix.identity(f, mat.rows)
    for c in coeffs:
        if c != f.zero():
            out = out + power.scale(c)
        power = power * mat
    return out


def _end_certify_local_rational(m: Module, basis: list[ModuleMap]):
    """Certify End(M) local over QQ, or produce a splitting idempotent.

    The radical comes from the trace form (valid in characteristic 0 on the
    faithful representation M); End/rad is certified a field by exhibiting a
    primitive element with irreducible minimal polynomial of full degree.
    """
    f = m.algebra.field
    rad_dim = len(_end_radical_dickson(basis))
    top_dim = len(basis) - rad_dim
    if top_dim == 1:
        return True, rad_dim
    from fractions import Fraction
    from sympy import Poly, Rational, Symbol, div, invert
    t = Symbol("t")
    rng = random.Random(7)
    for attempt in range(60):
        coeffs = [f.of(rng.randint(-3, 3)) for _ in range(len(basis))]
        mat = Matrix.zero(f, m.dim, m.dim)
        for c, h in zip(coeffs, basis):
            mat = mat + h.mat.scale(c)
        rel = _min_poly_coeffs(mat, f)
        poly = Poly([Rational(str(c)) for c in reversed(rel)], t)
        factors = poly.factor_list()[1]
        if len(factors) == 1 and factors[0][1] == 1 \
                and factors[0][0].degree() == top_dim:
            return True, rad_dim
        if len(factors) > 1:
            # CRT idempotent: e = rest * (rest^{-1} mod g1), so e = 1 mod g1
            # and e = 0 mod rest; nontrivial idempotent of QQ[mat]
            g1 = factors[0][0] ** factors[0][1]
            rest = div(poly, g1, t)[0]
            try:
                u = invert(rest.as_expr(), g1.as_expr(), t)
            except Exception:
                continue
            e_poly = div(Poly(rest.as_expr() * u, t), poly, t)[1]
            ecoeffs = [f.of(0) + Fraction(str(c))
                       for c in reversed(e_poly.all_coeffs())]
            emat = _eval_poly_coeffs(ecoeffs, mat, f)
            if not emat.is_zero() and emat != Matrix.identity(f, m.dim):
                return False, ModuleMap(m, m, emat, check=False)
    raise RuntimeError("cannot certify local endomorphism ring over QQ")


def _find_splitter(m: Module, basis: list[ModuleMap], rng: random.Random):
    """A Fitting split, searching basis elements, sums, products, then a
    seeded random sample."""
    candidates: list[ModuleMap] = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            candidates.append(basis[i] + basis[j])
    for i in range(len(basis)):
        for j in range(len(basis)):
            if i != j:
                candidates.append(ModuleMap(
                    m, m, basis[i].mat * basis[j].mat, check=False))
    f = m.algebra.field
    pool = list(f.elements()) if f.p is not None else [f.of(v) for v in (-2, -1, 0, 1, 2)]
    for _ in range(512):
        mat = Matrix.zero(f, m.dim, m.dim)
        for h in basis:
            mat = mat + h.mat.scale(rng.choice(pool))
        candidates.append(ModuleMap(m, m, mat, check=False))
    for cand in candidates:
        split = _fitting_split(m, cand)
        if split is not None:
            return split
    return None


def _split_indecomposable(m: Module, rng: random.Random):
    """[(module, inj, proj, end_dim, end_rad_dim)] of indecomposables."""
    if m.dim == 0:
        return []
    ends = hom_space(m, m)
    f = m.algebra.field
    if len(ends) == 1:
        return [(m, identity_map(m), identity_map(m), 1, 0)]
    enumerable = f.p is not None and f.p ** len(ends) <= _ENUM_LIMIT
    if enumerable:
        ok, info = _end_certify_local_finite(m, ends)
        if ok:
            return [(m, identity_map(m), identity_map(m), len(ends), info)]
        split = _fitting_split(m, info)
    else:
        if f.p is None:
            ok, info = _end_certify_local_rational(m, ends)
            if ok:
                return [(m, identity_map(m), identity_map(m), len(ends), info)]
            split = _fitting_split(m, info)
        else:
            split = _find_splitter(m, ends, rng)
            if split is None:
                raise RuntimeError(
                    "no splitting endomorphism found and End too large to "
                    "certify; not expected on the supported universes")
    if split is None:
        raise RuntimeError("splitter produced no Fitting decomposition")
    parts = _split_by_subspaces(m, list(split))
    out = []
    for sub, inj, proj in parts:
        for (u, inj2, proj2, ed, erd) in _split_indecomposable(sub, rng):
            out.append((u, inj2.then(inj), proj.then(proj2), ed, erd))
    return out


def decompose(m: Module, seed: int = 0) -> Decomposition:
    """Indecomposable summands with inclusions, projections, splitting
    idempotents and multiplicities.  Deterministic for a fixed seed."""
    rng = random.Random(seed)
    raw = _split_indecomposable(m, rng)
    summands = [Summand(u, inj, proj, ed, erd) for u, inj, proj, ed, erd in raw]
    decomp = Decomposition(m, summands)
    classes: list[tuple[Summand, int, list[int]]] = []
    for i, s in enumerate(summands):
        placed = False
        for ci, (rep, mult, idx) in enumerate(classes):
            if s.module.dim == rep.module.dim and \
                    iso_test(s.module, rep.module) is not None:
                classes[ci] = (rep, mult + 1, idx + [i])
                placed = True
                break
        if not placed:
            classes.append((s, 1, [i]))
    decomp.classes = classes
    return decomp


def is_indecomposable(m: Module) -> bool:
    if m.dim == 0:
        return False
    return len(decompose(m).summands) == 1


# -- the radical of the category -------------------------------------------


def hom_subspace(m: Module, n: Module) -> Subspace:
    """Hom(M, N) as a subspace of the vectorized map space k^{dM.dN}."""
    basis = hom_space(m, n)
    amb = m.dim * n.dim
    f = m.algebra.field
    if not basis:
        return Subspace.zero(f, amb)
    rows = [[x for r in h.mat.data for x in r] for h in basis]
    return Subspace.from_matrix(amb, Matrix.from_rows(f, rows))


def _rad_of_local_end(m: Module) -> list[Matrix]:
    """Basis of rad End(M) for M with certified local End (finite field:
    the nilpotents; QQ: the trace-form radical)."""
    ends = hom_space(m, m)
    f = m.algebra.field
    if len(ends) == 1:
        return []
    if f.p is not None:
        if f.p ** len(ends) > _ENUM_LIMIT:
            raise RuntimeError("End too large to enumerate")
        rows = []
        for combo in itertools.product(list(f.elements()), repeat=len(ends)):
            mat = Matrix.zero(f, m.dim, m.dim)
            for c, h in zip(combo, ends):
                if c != f.zero():
                    mat = mat + h.mat.scale(c)
            if mat.rank() < m.dim:
                if not _el_is_nilpotent(mat, m.dim):
                    raise ValueError("End(M) is not local")
                rows.append([x for r in mat.data for x in r])
        if not rows:
            return []
        basis = Matrix.from_rows(f, rows).row_space()
        return [Matrix(f, m.dim, m.dim,
                       [v[i * m.dim:(i + 1) * m.dim] for i in range(m.dim)])
                for v in basis.data]
    combos = _end_radical_dickson(ends)
    out = []
    for row in combos:
        mat = Matrix.zero(f, m.dim, m.dim)
        for c, h in zip(row, ends):
            mat = mat + h.mat.scale(c)
        out.append(mat)
    return out


def radical_subspace(m: Module, n: Module, seed: int = 0) -> Subspace:
    """rad(M, N) as a subspace of vectorized Hom(M, N), assembled blockwise
    from the decompositions: the full hom space between non-isomorphic
    indecomposables, the maximal ideal of End between isomorphic ones."""
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    f = m.algebra.field
    amb = m.dim * n.dim
    dm = decompose(m, seed)
    dn = decompose(n, seed)
    rows: list[list] = []
    for sm in dm.summands:
        for sn in dn.summands:
            u, v = sm.module, sn.module
            iso = iso_test(u, v) if u.dim == v.dim else None
            if iso is None:
                block = [h.mat for h in hom_space(u, v)]
            else:
                block = [r * iso.mat for r in _rad_of_local_end(u)]
            for bm in block:
                full = sm.project.mat * bm * sn.inject.mat
                rows.append([x for r in full.data for x in r])
    if not rows:
        return Subspace.zero(f, amb)
    return Subspace.from_matrix(amb, Matrix.from_rows(f, rows))


def compose_subspaces(m: Module, c: Module, n: Module,
                      left: Subspace, right: Subspace) -> Subspace:
    """Span of {g . f} for f in a subspace of Hom(M,C), g in Hom(C,N)."""
    f = m.algebra.field
    amb = m.dim * n.dim
    rows = []
    for fr in left.basis.data:
        fm = Matrix(f, m.dim, c.dim,
                    [fr[i * c.dim:(i + 1) * c.dim] for i in range(m.dim)])
        for gr in right.basis.data:
            gm = Matrix(f, c.dim, n.dim,
                        [gr[i * n.dim:(i + 1) * n.dim] for i in range(c.dim)])
            prod = fm * gm
            rows.append([x for r in prod.data for x in r])
    if not rows:
        return Subspace.zero(f, amb)
    return Subspace.from_matrix(amb, Matrix.from_rows(f, rows))


class RadicalCalculus:
    """rad^t over a declared finite universe of intermediate objects."""

    def __init__(self, universe: list[Module], seed: int = 0):
        if not universe:
            raise ValueError("universe must be non-empty")
        self.seed = seed
        mids: list[Module] = []
        for m in universe:
            for rep, _, _ in decompose(m, seed).classes:
                if not any(rep.module.dim == u.dim and
                           iso_test(rep.module, u) is not None for u in mids):
                    mids.append(rep.module)
        self.intermediates = mids
        self._rad_cache: dict = {}
        self._pow_cache: dict = {}

    def rad(self, m: Module, n: Module) -> Subspace:
        key = (m.serial, n.serial)
        if key not in self._rad_cache:
            self._rad_cache[key] = radical_subspace(m, n, self.seed)
        return self._rad_cache[key]

    def rad_power(self, m: Module, n: Module, t: int) -> Subspace:
        """rad^t(M, N), composing through the universe's indecomposables."""
        if t < 1:
            raise ValueError("t must be >= 1")
        if t == 1:
            return self.rad(m, n)
        key = (m.serial, n.serial, t)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        f = m.algebra.field
        total = Subspace.zero(f, m.dim * n.dim)
        for c in self.intermediates:
            left = self.rad_power(m, c, t - 1)
            right = self.rad(c, n)
            total = subspace_sum(total, compose_subspaces(m, c, n, left, right))
        self._pow_cache[key] = total
        return total

    def stabilization_exponent(self, m: Module, n: Module,
                               t_max: int = 12) -> int | None:
        """Least t with rad^t = rad^{t+1} on the universe, or None."""
        prev = self.rad_power(m, n, 1)
        for t in range(1, t_max):
            cur = self.rad_power(m, n, t + 1)
            if cur == prev:
                return t
            prev = cur
        return None


def radical_power(m: Module, n: Module, t: int, universe: list[Module],
                  seed: int = 0) -> Subspace:
    return RadicalCalculus(universe, seed).rad_power(m, n, t)
