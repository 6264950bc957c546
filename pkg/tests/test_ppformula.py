import itertools

import pytest

from ppmod.fields import GF
from ppmod.algebra import truncated_dvr
from ppmod.linalg import subspace_leq, subspace_meet, subspace_sum
from ppmod.modules import k_dual, presentation_of, hom_space
from ppmod.catalog import dvr_chain_module, dvr_universe, kronecker_preprojective
from ppmod.oracles import brute_eval_f2, subspace_int_set
from ppmod.ppformula import (LEFT, RIGHT, PpFormula, PpPair, annihilator,
                             bottom, divisibility, dual, pp_meet, pp_sum,
                             pp_type_generator, pp_type_generator_of_element,
                             tautology)

F2 = GF(2)


@pytest.fixture(scope="module")
def d2():
    return truncated_dvr(2, F2)


@pytest.fixture(scope="module")
def d3():
    return truncated_dvr(3, F2)


def x_el(alg):
    return alg.el_from_label("x")


def test_eval_tautology_is_everything(d2):
    m = dvr_chain_module(d2, 2)
    t = tautology(d2)
    assert t.evaluate(m).dim == m.dim


def test_eval_annihilator_derived(d2):
    # oracle: enumerate all 4 elements of the regular module of k[x]/(x^2)
    m = dvr_chain_module(d2, 2)
    phi = annihilator(d2, x_el(d2))
    expected = brute_eval_f2(phi, m)
    got = phi.evaluate(m)
    assert subspace_int_set(got) == expected
    assert got.dim == 1  # span of the socle element


def test_eval_divisibility_derived(d2):
    # oracle: enumerate witnesses y
    m = dvr_chain_module(d2, 2)
    phi = divisibility(d2, x_el(d2))
    expected = brute_eval_f2(phi, m)
    got = phi.evaluate(m)
    assert subspace_int_set(got) == expected
    assert got.dim == 1


def test_divisibility_of_unit_is_tautology(d2):
    phi = divisibility(d2, d2.unit)
    t = tautology(d2)
    assert phi.implies(t) and t.implies(phi)


def test_annihilator_of_zero_is_tautology(d2):
    phi = annihilator(d2, d2.zero_el())
    t = tautology(d2)
    assert phi.implies(t) and t.implies(phi)


def test_div_implies_ann_at_truncation(d2):
    # x^2 = 0 forces x | m -> m x = 0, on every module of dim <= 3
    div = divisibility(d2, x_el(d2))
    ann = annihilator(d2, x_el(d2))
    assert div.implies(ann)
    assert not ann.implies(div)
    for m in dvr_universe(d2, 3):
        assert subspace_leq(div.evaluate(m), ann.evaluate(m))


def test_sum_meet_match_subspace_lattice(d3):
    div_x = divisibility(d3, x_el(d3))
    ann_x = annihilator(d3, x_el(d3))
    s = pp_sum(div_x, ann_x)
    w = pp_meet(div_x, ann_x)
    for m in dvr_universe(d3, 4):
        ed, ea = div_x.evaluate(m), ann_x.evaluate(m)
        assert s.evaluate(m) == subspace_sum(ed, ea)
        assert w.evaluate(m) == subspace_meet(ed, ea)


def test_sum_meet_idempotent_up_to_equivalence(d3):
    phi = divisibility(d3, x_el(d3))
    assert pp_sum(phi, phi).equivalent(phi)
    assert pp_meet(phi, phi).equivalent(phi)
    assert pp_meet(phi, tautology(d3)).equivalent(phi)


def test_implies_soundness_on_universe(d3):
    formulas = [tautology(d3), bottom(d3), divisibility(d3, x_el(d3)),
                annihilator(d3, x_el(d3)),
                divisibility(d3, d3.el_from_label("x^2")),
                annihilator(d3, d3.el_from_label("x^2"))]
    universe = dvr_universe(d3, 4)
    for phi, psi in itertools.product(formulas, repeat=2):
        if phi.implies(psi):
            for m in universe:
                assert subspace_leq(phi.evaluate(m), psi.evaluate(m))


def test_endomorphism_invariance(d3):
    # pp-definable subgroups are stable under every endomorphism
    from ppmod.linalg import Matrix, Subspace
    phi = pp_sum(divisibility(d3, x_el(d3)), annihilator(d3, d3.el_from_label("x^2")))
    for m in dvr_universe(d3, 4):
        val = phi.evaluate(m)
        for f in hom_space(m, m):
            img = Subspace.from_matrix(m.dim, val.basis * f.mat)
            assert subspace_leq(img, val)


def test_free_realization_of_divisibility(d2):
    phi = divisibility(d2, x_el(d2))
    fr = phi.free_realization()
    # the realization is k[x]/(x^2) with distinguished element x
    assert fr.module.dim == 2
    gen = pp_type_generator_of_element(fr.module, fr.tuple[0])
    assert gen.equivalent(phi)


def test_free_realization_of_bottom(d2):
    phi = bottom(d2)
    fr = phi.free_realization()
    assert all(c == F2.zero() for c in fr.tuple_vector())
    assert phi.implies(annihilator(d2, x_el(d2)))  # bottom implies everything
    assert phi.implies(divisibility(d2, x_el(d2)))


def test_free_realization_of_tautology_is_free(d2):
    phi = tautology(d2)
    fr = phi.free_realization()
    assert fr.module.dim == d2.dim  # the free module of rank 1


def test_pp_type_generator_of_regular_generator(d2):
    # generator tuple of the cyclic free module: formula equivalent to x H = 0
    m = dvr_chain_module(d2, 2)
    pres = presentation_of(m)
    g = pres.generator(0)
    gen = pp_type_generator(pres, (g,))
    assert gen.equivalent(tautology(d2))


def test_pp_type_generator_examples(d2):
    m = dvr_chain_module(d2, 2)
    # the element x generates the same pp-type as x | x1
    socle = (F2.zero(), F2.one())
    gen = pp_type_generator_of_element(m, socle)
    assert gen.equivalent(divisibility(d2, x_el(d2)))
    # the generator of V/m has pp-type x1 x = 0
    v1 = dvr_chain_module(d2, 1)
    gen1 = pp_type_generator_of_element(v1, (F2.one(),))
    assert gen1.equivalent(annihilator(d2, x_el(d2)))


def test_pp_pair_validation(d2):
    div = divisibility(d2, x_el(d2))
    ann = annihilator(d2, x_el(d2))
    PpPair(upper=ann, lower=div)  # div <= ann holds
    with pytest.raises(ValueError):
        PpPair(upper=div, lower=ann)


# -- duality ------------------------------------------------------------------


def test_dual_swaps_div_and_ann(d3):
    for lab in ("x", "x^2"):
        a = d3.el_from_label(lab)
        d_ann = dual(annihilator(d3, a))
        assert d_ann.side == LEFT
        assert d_ann.equivalent(divisibility(d3, a, side=LEFT))
        d_div = dual(divisibility(d3, a))
        assert d_div.equivalent(annihilator(d3, a, side=LEFT))


def test_dual_of_tautology_is_bottom(d2):
    d_t = dual(tautology(d2))
    assert d_t.equivalent(bottom(d2, side=LEFT))
    d_b = dual(bottom(d2))
    assert d_b.equivalent(tautology(d2, side=LEFT))


def test_double_dual_is_identity_up_to_equivalence(d3):
    phi = divisibility(d3, x_el(d3))
    dd = dual(dual(phi))
    assert dd.side == RIGHT
    assert dd.equivalent(phi)


def test_dual_antitone_on_implication(d3):
    div = divisibility(d3, x_el(d3))
    ann = annihilator(d3, d3.el_from_label("x^2"))
    assert div.implies(ann)
    assert dual(ann).implies(dual(div))


def test_dual_exchanges_sum_and_meet(d3):
    phi = divisibility(d3, x_el(d3))
    psi = annihilator(d3, x_el(d3))
    assert dual(pp_sum(phi, psi)).equivalent(pp_meet(dual(phi), dual(psi)))
    assert dual(pp_meet(phi, psi)).equivalent(pp_sum(dual(phi), dual(psi)))


def test_annihilator_dimension_identity(d3):
    # dim phi(M) + dim (D phi)(M*) = n dim M, cross-checked against the
    # enumeration oracle first
    mods = dvr_universe(d3, 3)
    forms = [divisibility(d3, x_el(d3)), annihilator(d3, x_el(d3)),
             pp_sum(divisibility(d3, d3.el_from_label("x^2")),
                    annihilator(d3, x_el(d3)))]
    for phi in forms:
        dphi = dual(phi)
        for m in mods:
            val = phi.evaluate(m)
            assert subspace_int_set(val) == brute_eval_f2(phi, m)
            dval = dphi.evaluate(k_dual(m))
            assert subspace_int_set(dval) == brute_eval_f2(dphi, k_dual(m))
            assert val.dim + dval.dim == phi.n * m.dim


def test_kdual_inclusion_reversal(d3):
    # if phi(M) <= psi(M) then D psi(M*) <= D phi(M*)
    forms = [divisibility(d3, x_el(d3)), annihilator(d3, x_el(d3)),
             tautology(d3), bottom(d3),
             divisibility(d3, d3.el_from_label("x^2"))]
    for m in dvr_universe(d3, 3):
        md = k_dual(m)
        for phi, psi in itertools.product(forms, repeat=2):
            if subspace_leq(phi.evaluate(m), psi.evaluate(m)):
                assert subspace_leq(dual(psi).evaluate(md),
                                    dual(phi).evaluate(md))


def test_pp_type_generator_generates(d3):
    # the generator of the pp-type of a is satisfied by a and implies every
    # corpus formula that a satisfies
    import random
    rng = random.Random(9)
    corpus = [tautology(d3), bottom(d3), divisibility(d3, x_el(d3)),
              annihilator(d3, x_el(d3)),
              divisibility(d3, d3.el_from_label("x^2")),
              annihilator(d3, d3.el_from_label("x^2"))]
    for m in dvr_universe(d3, 4):
        for _ in range(3):
            a = tuple(rng.randint(0, 1) for _ in range(m.dim))
            gen = pp_type_generator_of_element(m, a)
            assert gen.evaluate(m).contains_vector(list(a))
            for psi in corpus:
                if psi.evaluate(m).contains_vector(list(a)):
                    assert gen.implies(psi)


def test_two_variable_formula_against_oracle(d2):
    # n = 2: x1 x = 0 and x | x2, jointly
    x = x_el(d2)
    phi = PpFormula(d2, RIGHT, 2, 1,
                    [[x, d2.zero_el()],
                     [d2.zero_el(), d2.unit],
                     [d2.zero_el(), d2.neg_el(x)]])
    for m in dvr_universe(d2, 3):
        assert subspace_int_set(phi.evaluate(m)) == brute_eval_f2(phi, m)


def test_kronecker_divisibility_projectives(kron):
    # pp-type of the generator image under each irreducible embedding
    p2 = kronecker_preprojective(kron, 0)
    p1 = kronecker_preprojective(kron, 1)
    e2 = kron.el_from_label("e2")
    div_a = divisibility(kron, kron.el_from_label("a"))
    div_e2 = divisibility(kron, e2)
    gen = pp_type_generator_of_element(p2, (F2.one(),))
    assert gen.equivalent(div_e2)
    # image of the generator under the a-embedding: coordinate layout of
    # PP(1) is (vertex-1 | vertex-2, vertex-2) with a hitting the first
    # vertex-2 coordinate
    gen_img = pp_type_generator_of_element(p1, (0, 1, 0))
    assert gen_img.equivalent(div_a)
