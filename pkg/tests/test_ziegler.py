import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ppmod.ziegler import (PointSet, ZieglerPoint, adic, canonical_word,
                           closure, family_iii_raw_count, fin_len,
                           infinite_point_count, is_closed, parse_point,
                           parse_point_set, point_closure, point_from_word,
                           points, prufer, qpoint, random_point_set, tpoint)


@st.composite
def point_sets(draw, height=None):
    n = height if height is not None else draw(st.integers(0, 3))
    pool = sorted(points(n).others)
    pts = draw(st.lists(st.sampled_from(pool), max_size=5))
    nfin = draw(st.integers(0, 3))
    for _ in range(nfin):
        p = draw(st.integers(0, n))
        pts.append(fin_len(n, p, n - p, draw(st.integers(1, 9))))
    cof = []
    exc = {}
    if draw(st.booleans()):
        p = draw(st.integers(0, n))
        cof.append((p, n - p))
        exc[(p, n - p)] = frozenset(draw(st.sets(st.integers(1, 6),
                                                 max_size=2)))
    return PointSet.make(n, pts, cofinite_prefixes=cof, excluded=exc)


def test_spectrum_at_height_zero():
    full = points(0)
    assert full.has_infinite_family((0, 0))
    others = {str(p) for p in full.others}
    assert others == {"Prufer", "Adic", "Q"}


def test_spectrum_at_height_one():
    full = points(1)
    infinite = {str(p) for p in full.others if not p.finite_length}
    assert infinite == {"F0 Prufer", "F1 Prufer", "F0 Adic", "F0 Q"}
    assert infinite_point_count(1) == 4
    # families (iii): T-points plus the canonicalized T(0) row
    assert family_iii_raw_count(1) == 3
    t_points = {str(p) for p in full.others if p.kind == "T"}
    assert t_points == {"T(1)"}


def test_adic_prefix_canonicalizes():
    pt = point_from_word(2, ["F1", "F0"], "Adic")
    assert str(pt) == "F0 F0 Adic"
    # the outer F1.F0 pair rewrites: F1 F0 F1 -> F0 F0 F1
    assert canonical_word(["F1", "F0", "F1"]) == (2, 1)
    # F1 F1 F0 -> F1 F0 F0 -> F0 F0 F0
    assert canonical_word(["F1", "F1", "F0"]) == (3, 0)


def test_t0_identifies_with_first_chain_point():
    pt = tpoint(2, 1, 1, 0)
    assert pt.kind == "FinLen" and pt.idx == 1


def test_closure_of_infinite_family_at_zero():
    s = PointSet.make(0, [], cofinite_prefixes=[(0, 0)])
    c = closure(s)
    for pt in (prufer(0, 0, 0), adic(0), qpoint(0)):
        assert c.contains(pt)


def test_closure_of_prufer():
    s = PointSet.make(0, [prufer(0, 0, 0)])
    c = closure(s)
    assert c.contains(qpoint(0))
    assert str(c) == "{Prufer, Q}"


def test_closure_of_empty_is_empty():
    s = PointSet.empty(2)
    assert closure(s) == s


def test_point_closures():
    pc = point_closure(prufer(1, 1, 0))
    assert str(pc) == "{F0 Prufer, F0 Q}"
    assert point_closure(fin_len(1, 0, 1, 2)).contains(fin_len(1, 0, 1, 2))
    assert len(list(point_closure(fin_len(1, 0, 1, 2)).iter_known_points())) == 1
    assert not is_closed(PointSet.make(1, [adic(1)]))
    assert is_closed(PointSet.make(1, [adic(1), qpoint(1)]))
    assert is_closed(point_closure(tpoint(2, 0, 1, 1)))


def test_closure_operator_properties():
    rng = random.Random(42)
    for _ in range(150):
        n = rng.randint(0, 3)
        s = random_point_set(n, rng)
        t = random_point_set(n, rng)
        c = closure(s)
        assert s.issubset(c)                       # extensive
        assert closure(c) == c                     # idempotent
        u = s.union(t)
        assert closure(s).issubset(closure(u))     # monotone
        # closed sets are stable under union and intersection
        cu = closure(s).union(closure(t))
        assert is_closed(cu)
        ci = closure(s).intersection(closure(t))
        assert is_closed(ci)


def test_set_algebra_with_cofinite_families():
    a = PointSet.make(1, [fin_len(1, 1, 0, 3)], cofinite_prefixes=[(0, 1)])
    b = PointSet.make(1, [fin_len(1, 0, 1, 5)],
                      cofinite_prefixes=[(1, 0)], excluded={(1, 0): {3}})
    u = a.union(b)
    assert u.contains(fin_len(1, 1, 0, 3))
    assert u.has_infinite_family((0, 1)) and u.has_infinite_family((1, 0))
    i = a.intersection(b)
    assert i.contains(fin_len(1, 0, 1, 5))
    assert not i.contains(fin_len(1, 1, 0, 3))


def test_subset_with_families():
    small = PointSet.make(1, [fin_len(1, 0, 1, 2)])
    big = PointSet.make(1, [], cofinite_prefixes=[(0, 1)])
    assert small.issubset(big)
    assert not big.issubset(small)
    withheld = PointSet.make(1, [], cofinite_prefixes=[(0, 1)],
                             excluded={(0, 1): {2}})
    assert not small.issubset(withheld)


def test_parse_and_print_roundtrip():
    s = parse_point_set(1, "F0 Prufer, F0 Q")
    assert str(s) == "{F0 Prufer, F0 Q}"
    pt = parse_point(2, "F0 F1 T(0)")  # canonicalizes to FinLen(1)
    assert str(pt) == "F0 F1 FinLen(1)"
    fam = parse_point_set(0, "FinLen(*)")
    assert fam.has_infinite_family((0, 0))


def test_full_spectrum_is_closed():
    for n in range(3):
        assert is_closed(points(n))


@settings(max_examples=80, deadline=None)
@given(point_sets(height=2), point_sets(height=2))
def test_closure_laws_hypothesis(s, t):
    c = closure(s)
    assert s.issubset(c)
    assert closure(c) == c
    assert closure(s).issubset(closure(s.union(t)))
    assert is_closed(closure(s).union(closure(t)))
    assert is_closed(closure(s).intersection(closure(t)))


def test_family_iii_pre_canonical_count():
    # triples p + l + m = n, before canonicalizing the m = 0 row
    for n in range(5):
        triples = [(p, l, m)
                   for m in range(n + 1)
                   for p in range(n - m + 1)
                   for l in [n - m - p]]
        assert len(triples) == family_iii_raw_count(n)
        assert family_iii_raw_count(n) == (n + 1) * (n + 2) // 2
