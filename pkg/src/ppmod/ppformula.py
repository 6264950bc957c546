"""The pp-formula calculus: evaluation, lattice operations, duality,
free realizations, implication and pp-type generators.

A right formula in n free and l bound variables with m conditions is
"exists y: (x, y) H = 0" for an (n+l) x m matrix H over the algebra.  A
left formula is "exists y: H (x; y) = 0" with H of shape m x (n+l); it is
*stored* transposed, i.e. also as (n+l) x m with rows indexed by variables,
and it evaluates on left modules (= right modules over the opposite
algebra).  With this storage a single code path serves both sides: block
assembly for sum/meet/duality never multiplies two algebra entries, so the
opposite multiplication never enters.

Equivalence of formulas is always decided semantically, by implication in
both directions through free realizations; nothing is ever compared
syntactically.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from .algebra import FDAlgebra
from .linalg import Matrix, Subspace
from .modules import (Module, Presentation, presentation_from_relations,
                      presentation_of)

RIGHT = "right"
LEFT = "left"

_counter = itertools.count()
_cache_lock = threading.Lock()


class PpFormula:
    """Immutable pp formula; entries of hmat are algebra coordinate vectors."""

    __slots__ = ("algebra", "side", "n", "l", "hmat", "serial",
                 "_realization", "_eval_cache")

    def __init__(self, algebra: FDAlgebra, side: str, n: int, l: int, hmat):
        if side not in (RIGHT, LEFT):
            raise ValueError("side must be 'right' or 'left'")
        self.algebra = algebra
        self.side = side
        self.n = n
        self.l = l
        self.hmat = tuple(tuple(tuple(e) for e in row) for row in hmat)
        if len(self.hmat) != n + l:
            raise ValueError("formula matrix must have n+l variable rows")
        widths = {len(r) for r in self.hmat}
        if len(widths) > 1:
            raise ValueError("ragged formula matrix")
        for row in self.hmat:
            for e in row:
                if len(e) != algebra.dim:
                    raise ValueError("entry is not an algebra coordinate vector")
        self.serial = next(_counter)
        self._realization = None
        self._eval_cache: dict = {}

    @property
    def m(self) -> int:
        return len(self.hmat[0]) if self.hmat else 0

    @property
    def effective_algebra(self) -> FDAlgebra:
        """The algebra its evaluation modules live over (A, or A.op for left)."""
        return self.algebra if self.side == RIGHT else self.algebra.op

    def __repr__(self):
        return f"PpFormula({self.side}, n={self.n}, l={self.l}, m={self.m})"

    # -- evaluation ---------------------------------------------------

    def evaluate(self, module: Module) -> Subspace:
        """phi(M) as a subspace of k^{n.dim(M)} (x-tuples, coordinates
        concatenated component by component)."""
        if module.algebra is not self.effective_algebra:
            raise ValueError("module is on the wrong side or algebra")
        with _cache_lock:
            hit = self._eval_cache.get(module.serial)
        if hit is not None:
            return hit
        f = self.algebra.field
        d = module.dim
        nvars = self.n + self.l
        if d == 0:
            result = Subspace.zero(f, 0)
        elif self.m == 0:
            result = Subspace.full(f, self.n * d)
        else:
            blocks = [[module.act(self.hmat[v][e]) for e in range(self.m)]
                      for v in range(nvars)]
            data = []
            for v in range(nvars):
                for r in range(d):
                    row = []
                    for e in range(self.m):
                        row.extend(blocks[v][e].data[r])
                    data.append(row)
            big = Matrix(f, nvars * d, self.m * d, data)
            sols = big.left_kernel()
            proj = sols.take_cols(range(self.n * d))
            result = Subspace.from_matrix(self.n * d, proj)
        with _cache_lock:
            self._eval_cache[module.serial] = result
        return result

    # -- free realization and implication ------------------------------

    def free_realization(self) -> "FreeRealization":
        """A finitely presented module and tuple whose pp-type this formula
        generates: the quotient of the free module on all n+l variables by
        the columns of the formula matrix."""
        if self._realization is not None:
            return self._realization
        alg = self.effective_algebra
        relations = []
        for e in range(self.m):
            relations.append(tuple(self.hmat[v][e] for v in range(self.n + self.l)))
        pres = presentation_from_relations(alg, self.n + self.l, relations)
        tup = tuple(pres.generator(i) for i in range(self.n))
        fr = FreeRealization(self, pres.module, tup, pres)
        self._realization = fr
        return fr

    def implies(self, other: "PpFormula") -> bool:
        """phi <= psi in the pp lattice, decided on the free realization."""
        _check_compatible(self, other)
        fr = self.free_realization()
        target = other.evaluate(fr.module)
        return target.contains_vector(fr.tuple_vector())

    def equivalent(self, other: "PpFormula") -> bool:
        return self.implies(other) and other.implies(self)


@dataclass(frozen=True)
class FreeRealization:
    formula: PpFormula
    module: Module
    tuple: tuple
    presentation: Presentation

    def tuple_vector(self):
        out = []
        for comp in self.tuple:
            out.extend(comp)
        return tuple(out)


@dataclass(frozen=True)
class PpPair:
    """phi / psi with psi <= phi (so psi(M) <= phi(M) everywhere)."""

    upper: PpFormula
    lower: PpFormula

    def __post_init__(self):
        _check_compatible(self.upper, self.lower)
        if not self.lower.implies(self.upper):
            raise ValueError("lower formula does not imply upper formula")


def _check_compatible(a: PpFormula, b: PpFormula):
    if a.algebra is not b.algebra:
        raise ValueError("formulas over different algebras")
    if a.side != b.side:
        raise ValueError("formulas on different sides")
    if a.n != b.n:
        raise ValueError("formulas with different free arities")


# -- basic constructors -----------------------------------------------------


def tautology(alg: FDAlgebra, n: int = 1, side: str = RIGHT) -> PpFormula:
    return PpFormula(alg, side, n, 0, [[] for _ in range(n)])


def bottom(alg: FDAlgebra, n: int = 1, side: str = RIGHT) -> PpFormula:
    """x_i = 0 for all i."""
    rows = []
    for i in range(n):
        rows.append([alg.unit if j == i else alg.zero_el() for j in range(n)])
    return PpFormula(alg, side, n, 0, rows)


def divisibility(alg: FDAlgebra, a, side: str = RIGHT) -> PpFormula:
    """a | x: exists y with x = y a (right) / x = a y (left)."""
    a = tuple(a)
    return PpFormula(alg, side, 1, 1, [[alg.unit], [alg.neg_el(a)]])


def annihilator(alg: FDAlgebra, a, side: str = RIGHT) -> PpFormula:
    """x a = 0 (right) / a x = 0 (left)."""
    a = tuple(a)
    return PpFormula(alg, side, 1, 0, [[a]])


# -- lattice operations ------------------------------------------------------


def pp_sum(phi: PpFormula, psi: PpFormula) -> PpFormula:
    """The join: (phi + psi)(x) = exists u, v: x = u + v, phi(u), psi(v)."""
    _check_compatible(phi, psi)
    alg, side, n = phi.algebra, phi.side, phi.n
    z, u = alg.zero_el(), alg.unit
    nu = alg.neg_el(u)
    lphi, lpsi, mphi, mpsi = phi.l, psi.l, phi.m, psi.m
    nvars = n + (2 * n + lphi + lpsi)
    ncols = n + mphi + mpsi
    rows = [[z] * ncols for _ in range(nvars)]
    # variable layout: x (n) | u (n) | v (n) | y_phi | y_psi
    for i in range(n):
        rows[i][i] = u                       # x_i
        rows[n + i][i] = nu                  # -u_i
        rows[2 * n + i][i] = nu              # -v_i
    for v in range(n):
        for e in range(mphi):
            rows[n + v][n + e] = phi.hmat[v][e]
        for e in range(mpsi):
            rows[2 * n + v][n + mphi + e] = psi.hmat[v][e]
    for v in range(lphi):
        for e in range(mphi):
            rows[3 * n + v][n + e] = phi.hmat[n + v][e]
    for v in range(lpsi):
        for e in range(mpsi):
            rows[3 * n + lphi + v][n + mphi + e] = psi.hmat[n + v][e]
    return PpFormula(alg, side, n, 2 * n + lphi + lpsi, rows)


def pp_meet(phi: PpFormula, psi: PpFormula) -> PpFormula:
    """The meet: phi(x) and psi(x), bound variables concatenated."""
    _check_compatible(phi, psi)
    alg, side, n = phi.algebra, phi.side, phi.n
    z = alg.zero_el()
    lphi, lpsi, mphi, mpsi = phi.l, psi.l, phi.m, psi.m
    nvars = n + lphi + lpsi
    ncols = mphi + mpsi
    rows = [[z] * ncols for _ in range(nvars)]
    for v in range(n):
        for e in range(mphi):
            rows[v][e] = phi.hmat[v][e]
        for e in range(mpsi):
            rows[v][mphi + e] = psi.hmat[v][e]
    for v in range(lphi):
        for e in range(mphi):
            rows[n + v][e] = phi.hmat[n + v][e]
    for v in range(lpsi):
        for e in range(mpsi):
            rows[n + lphi + v][mphi + e] = psi.hmat[n + v][e]
    return PpFormula(alg, side, n, lphi + lpsi, rows)


# -- elementary duality -------------------------------------------------------


def dual(phi: PpFormula) -> PpFormula:
    """The matrix-level anti-isomorphism between the right and left pp
    lattices.  In stored (variables-as-rows) coordinates the same block
    construction serves both directions:

        D [H' over x; H'' over y]  =  [I 0 ; H'^T H''^T]

    with n free rows kept, m new bound rows, and n+l conditions."""
    alg, n, l, m = phi.algebra, phi.n, phi.l, phi.m
    z, u = alg.zero_el(), alg.unit
    rows = [[z] * (n + l) for _ in range(n + m)]
    for i in range(n):
        rows[i][i] = u
    for j in range(m):
        for v in range(n + l):
            rows[n + j][v] = phi.hmat[v][j]
    return PpFormula(alg, LEFT if phi.side == RIGHT else RIGHT, n, m, rows)


# -- pp-type generators --------------------------------------------------------


def pp_type_generator(pres: Presentation, tup, side: str = RIGHT) -> PpFormula:
    """The generator of the pp-type of a tuple in a presented module:
    exists y (x = y A and y H = 0), where A expresses the tuple over the
    generators and H is the relation matrix.

    For a left-side generator pass a presentation over the opposite algebra
    and side=LEFT; the stored layout is identical."""
    alg_eff = pres.algebra
    nominal = alg_eff if side == RIGHT else alg_eff.op
    n = len(tup)
    s = pres.ngens
    exprs = []
    for comp in tup:
        coeffs = pres.express(comp)
        if coeffs is None:
            raise ValueError("tuple is not expressible over the generators")
        exprs.append(coeffs)
    z = alg_eff.zero_el()
    u = alg_eff.unit
    mrel = len(pres.relations)
    ncols = n + mrel
    rows = [[z] * ncols for _ in range(n + s)]
    for i in range(n):
        rows[i][i] = u
    for g in range(s):
        for i in range(n):
            rows[n + g][i] = alg_eff.neg_el(exprs[i][g])
        for e, rel in enumerate(pres.relations):
            rows[n + g][n + e] = rel[g]
    return PpFormula(nominal, side, n, s, rows)


def pp_type_generator_of_element(module: Module, vec, side: str = RIGHT,
                                 _pres_cache: dict = {}) -> PpFormula:
    """Generator of the pp-type of a single element of a module (the
    module's presentation is computed once and cached on its serial)."""
    pres = _pres_cache.get(module.serial)
    if pres is None:
        pres = presentation_of(module)
        _pres_cache[module.serial] = pres
    return pp_type_generator(pres, (tuple(vec),), side=side)
