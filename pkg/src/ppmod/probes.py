"""Bounded interval probes for the shortness analysis of embeddings.

Given a pp-pair psi <= phi, the probe searches the interval [psi, phi] for
strictly descending chains built from phi ^ (theta + psi), where the
generator formulas theta are pp-type generators of images of homomorphisms
between universe modules.  All comparisons happen on evaluation vectors
over the universe, so every strict step automatically carries a certifying
module.  The probe is deliberately a semi-decision procedure: verdicts are
NOT_SHORT_WITNESS (a chain longer than the budget), SHORT_WITHIN_BOUND
(closure reached with short chains) or INCONCLUSIVE.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Subspace, subspace_leq, subspace_meet, subspace_sum
from .modules import Module, hom_space, module_generators
from .ppformula import PpFormula, PpPair, pp_type_generator_of_element

SHORT_WITHIN_BOUND = "SHORT_WITHIN_BOUND"
NOT_SHORT_WITNESS = "NOT_SHORT_WITNESS"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class ProbeReport:
    verdict: str
    budget: int
    chain: list[str]                 # expressions, descending
    certificates: list[str]          # separating module label per strict step
    lattice_size: int
    complete: bool
    rounds_used: int

    def to_text(self) -> str:
        lines = [f"verdict\t{self.verdict}",
                 f"budget\t{self.budget}",
                 f"chain_length\t{len(self.chain) - 1 if self.chain else 0}",
                 f"lattice_size\t{self.lattice_size}",
                 f"closure_complete\t{self.complete}",
                 f"rounds\t{self.rounds_used}"]
        for i, expr in enumerate(self.chain):
            lines.append(f"chain[{i}]\t{expr}")
        for i, cert in enumerate(self.certificates):
            lines.append(f"separated_by[{i}]\t{cert}")
        return "\n".join(lines) + "\n"


class _Vec:
    """Evaluation vector of a formula over the universe, with provenance."""

    __slots__ = ("parts", "expr")

    def __init__(self, parts: tuple[Subspace, ...], expr: str):
        self.parts = parts
        self.expr = expr

    def key(self):
        return tuple(p.key() for p in self.parts)

    def leq(self, other: "_Vec") -> bool:
        return all(subspace_leq(a, b) for a, b in zip(self.parts, other.parts))

    def eq(self, other: "_Vec") -> bool:
        return self.key() == other.key()

    def total_dim(self) -> int:
        return sum(p.dim for p in self.parts)


def _vec_sum(a: _Vec, b: _Vec, expr: str) -> _Vec:
    return _Vec(tuple(subspace_sum(x, y) for x, y in zip(a.parts, b.parts)), expr)


def _vec_meet(a: _Vec, b: _Vec, expr: str) -> _Vec:
    return _Vec(tuple(subspace_meet(x, y) for x, y in zip(a.parts, b.parts)), expr)


def theta_pool(universe: list[Module]) -> list[tuple[str, PpFormula]]:
    """Generator formulas: pp-type generators of f(g) for every hom basis
    element f between universe modules and every module generator g of the
    source.  Sorted by target dimension, then construction order."""
    out = []
    for ai, a in enumerate(universe):
        gens = module_generators(a)
        for bi, b in enumerate(universe):
            homs = hom_space(a, b)
            for hi, h in enumerate(homs):
                for gi, g in enumerate(gens):
                    img = h(g)
                    name = f"gen[{_label(b)}<-{_label(a)}:h{hi}g{gi}]"
                    out.append((b.dim, ai, bi, hi, gi, name,
                                pp_type_generator_of_element(b, img)))
    out.sort(key=lambda t: t[:5])
    return [(name, f) for *_, name, f in out]


def _label(m: Module) -> str:
    return m.label or f"M{m.serial}"


def interval_probe(pair: PpPair, universe: list[Module], budget: int,
                   max_rounds: int = 3,
                   pool: list[tuple[str, PpFormula]] | None = None) -> ProbeReport:
    """Probe the interval [lower, upper] of a pp-pair over a universe."""
    phi, psi = pair.upper, pair.lower
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if pool is None:
        pool = theta_pool(universe)
    phi_vec = _Vec(tuple(phi.evaluate(m) for m in universe), "phi")
    psi_vec = _Vec(tuple(psi.evaluate(m) for m in universe), "psi")

    seen: dict = {}

    def add(v: _Vec) -> bool:
        k = v.key()
        if k in seen:
            return False
        seen[k] = v
        return True

    add(phi_vec)
    add(psi_vec)
    for name, theta in pool:
        tv = _Vec(tuple(theta.evaluate(m) for m in universe), name)
        chi = _vec_meet(phi_vec, _vec_sum(tv, psi_vec, f"({name} + psi)"),
                        f"phi ^ ({name} + psi)")
        add(chi)

    complete = False
    rounds = 0
    for rounds in range(1, max_rounds + 1):
        items = list(seen.values())
        grew = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                s = _vec_sum(items[i], items[j],
                             f"({items[i].expr}) + ({items[j].expr})")
                w = _vec_meet(items[i], items[j],
                              f"({items[i].expr}) ^ ({items[j].expr})")
                if add(s):
                    grew = True
                if add(w):
                    grew = True
        if _longest_chain(list(seen.values()))[1] >= budget:
            break
        if not grew:
            complete = True
            break

    vecs = list(seen.values())
    chain, steps = _longest_chain(vecs)
    if steps >= budget:
        verdict = NOT_SHORT_WITNESS
    elif complete:
        verdict = SHORT_WITHIN_BOUND
    else:
        verdict = INCONCLUSIVE
    certs = []
    for hi, lo in zip(chain, chain[1:]):
        sep = next(i for i, (a, b) in enumerate(zip(hi.parts, lo.parts))
                   if a.key() != b.key())
        certs.append(_label(universe[sep]))
    return ProbeReport(
        verdict=verdict, budget=budget,
        chain=[v.expr for v in chain], certificates=certs,
        lattice_size=len(vecs), complete=complete, rounds_used=rounds)


def _longest_chain(vecs: list[_Vec]) -> tuple[list[_Vec], int]:
    """Longest strictly descending chain (top first) and its step count."""
    order = sorted(range(len(vecs)), key=lambda i: vecs[i].total_dim())
    best = [1] * len(vecs)
    pred = [-1] * len(vecs)
    for pos, i in enumerate(order):
        for jpos in range(pos):
            j = order[jpos]
            if vecs[j].total_dim() < vecs[i].total_dim() and \
                    vecs[j].leq(vecs[i]) and not vecs[i].leq(vecs[j]):
                if best[j] + 1 > best[i]:
                    best[i] = best[j] + 1
                    pred[i] = j
    top = max(range(len(vecs)), key=lambda i: best[i]) if vecs else -1
    chain = []
    cur = top
    while cur != -1:
        chain.append(vecs[cur])
        cur = pred[cur]
    return chain, len(chain) - 1 if chain else 0


def probe_embedding(fmap, universe: list[Module], budget: int,
                    max_rounds: int = 3) -> list[ProbeReport]:
    """Shortness probes for an embedding f: one report per module generator
    g of the source, comparing the pp-type of g with that of f(g)."""
    if not fmap.is_injective():
        raise ValueError("probe_embedding expects an embedding")
    src, tgt = fmap.source, fmap.target
    out = []
    for g in module_generators(src):
        upper = pp_type_generator_of_element(src, g)
        lower = pp_type_generator_of_element(tgt, fmap(g))
        out.append(interval_probe(PpPair(upper=upper, lower=lower),
                                  universe, budget, max_rounds))
    return out
