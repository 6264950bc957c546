"""Symbolic Ziegler spectra of the extension towers.

Points are labels, never concrete modules: a {F0, F1}-word prefix applied
to a base point of the valuation-ring spectrum (finite-length points, the
injective-hull point 'Prufer', the completion point 'Adic', the fraction
field point 'Q'), or a simple extension point T(m).  Identifications are
canonicalized eagerly: any prefix in front of Adic or Q collapses to the
pure-F0 word, a word F1.F0 rewrites to F0.F0, and T(0) is the first
finite-length point.

Point sets carry per-prefix cofinite flags so that "infinitely many
finite-length points" is finitely representable; the closure operator is
the least fixpoint of the two quoted closure rules applied inside every
embedded copy of the base spectrum.  The closed-set criterion is treated
as an if-and-only-if rule; reports carry this assumption in their header.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

CLOSURE_ASSUMPTION = (
    "# closure semantics: the inductive closed-set criterion is applied as "
    "an if-and-only-if fixpoint rule")

FINLEN, PRUFER, ADIC, QPOINT, TPOINT = "FinLen", "Prufer", "Adic", "Q", "T"


@dataclass(frozen=True, order=True)
class ZieglerPoint:
    height: int
    kind: str
    p: int          # F0 exponent (outermost)
    l: int          # F1 exponent (innermost)
    idx: int        # chain length for FinLen, extension level for T, else 0

    def __str__(self):
        prefix = "F0 " * self.p + "F1 " * self.l
        if self.kind == FINLEN:
            return f"{prefix}FinLen({self.idx})"
        if self.kind == TPOINT:
            return f"{prefix}T({self.idx})"
        return f"{prefix}{self.kind}"

    @property
    def finite_length(self) -> bool:
        return self.kind in (FINLEN, TPOINT)


def canonical_word(word) -> tuple[int, int]:
    """Canonical (p, l) of an {F0, F1}-word: rewriting the identification
    'F1 outside F0' to 'F0 outside F0' pushes every F0 outward."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] == "F1" and w[i + 1] == "F0":
                w[i] = "F0"
                changed = True
    return w.count("F0"), w.count("F1")


def fin_len(height: int, p: int, l: int, j: int) -> ZieglerPoint:
    if p + l != height or p < 0 or l < 0 or j < 1:
        raise ValueError("bad finite-length point parameters")
    return ZieglerPoint(height, FINLEN, p, l, j)


def prufer(height: int, p: int, l: int) -> ZieglerPoint:
    if p + l != height or p < 0 or l < 0:
        raise ValueError("bad prefix")
    return ZieglerPoint(height, PRUFER, p, l, 0)


def adic(height: int, p: int | None = None, l: int = 0) -> ZieglerPoint:
    # every prefix of the completion point canonicalizes to pure F0
    return ZieglerPoint(height, ADIC, height, 0, 0)


def qpoint(height: int, p: int | None = None, l: int = 0) -> ZieglerPoint:
    return ZieglerPoint(height, QPOINT, height, 0, 0)


def tpoint(height: int, p: int, l: int, m: int) -> ZieglerPoint:
    if p + l + m != height or min(p, l, m) < 0:
        raise ValueError("bad extension point parameters")
    if m == 0:
        # the empirical identification: T(0) is the length-one chain point
        return fin_len(height, p, l, 1)
    return ZieglerPoint(height, TPOINT, p, l, m)


def point_from_word(height: int, word, base: str, idx: int = 0) -> ZieglerPoint:
    """Build a point from an arbitrary prefix word, canonicalizing."""
    if len(word) + (idx if base == TPOINT else 0) != height:
        raise ValueError("prefix length does not match the height")
    p, l = canonical_word(word)
    if base == FINLEN:
        return fin_len(height, p, l, idx)
    if base == PRUFER:
        return prufer(height, p, l)
    if base == ADIC:
        return adic(height)
    if base == QPOINT:
        return qpoint(height)
    if base == TPOINT:
        return tpoint(height, p, l, idx)
    raise ValueError(f"unknown base point {base}")


# -- point sets with cofinite finite-length families -------------------------


@dataclass(frozen=True)
class PointSet:
    """Finite set of points plus cofinite flags per finite-length family.

    families maps a prefix (p, l) to ("finite", js) or ("cofinite",
    excluded); explicit FinLen points always live inside their family entry,
    never in `others`."""

    height: int
    others: frozenset
    families: tuple  # sorted tuple of ((p, l), mode, frozenset)

    @staticmethod
    def make(height: int, points=(), cofinite_prefixes=(),
             excluded=None) -> "PointSet":
        others = set()
        fams: dict = {}
        for pt in points:
            if pt.height != height:
                raise ValueError("point height mismatch")
            if pt.kind == FINLEN:
                key = (pt.p, pt.l)
                mode, data = fams.get(key, ("finite", frozenset()))
                if mode == "finite":
                    fams[key] = ("finite", data | {pt.idx})
                else:
                    fams[key] = ("cofinite", data - {pt.idx})
            else:
                others.add(pt)
        excluded = excluded or {}
        for pref in cofinite_prefixes:
            p, l = pref
            if p + l != height:
                raise ValueError("cofinite family prefix has wrong length")
            exc = frozenset(excluded.get(pref, ()))
            prev = fams.get(pref)
            if prev and prev[0] == "finite":
                exc = exc - prev[1]
            fams[pref] = ("cofinite", exc)
        clean = tuple(sorted((k, m, frozenset(d)) for k, (m, d) in
                             fams.items() if not (m == "finite" and not d)))
        return PointSet(height, frozenset(others), clean)

    @staticmethod
    def empty(height: int) -> "PointSet":
        return PointSet.make(height)

    def family(self, pref) -> tuple:
        for k, m, d in self.families:
            if k == pref:
                return (m, d)
        return ("finite", frozenset())

    def contains(self, pt: ZieglerPoint) -> bool:
        if pt.kind != FINLEN:
            return pt in self.others
        mode, data = self.family((pt.p, pt.l))
        return pt.idx in data if mode == "finite" else pt.idx not in data

    def has_infinite_family(self, pref) -> bool:
        return self.family(pref)[0] == "cofinite"

    def issubset(self, other: "PointSet") -> bool:
        if self.height != other.height:
            raise ValueError("height mismatch")
        if not self.others <= other.others:
            return False
        prefixes = {k for k, _, _ in self.families} | \
            {k for k, _, _ in other.families}
        for pref in prefixes:
            am, ad = self.family(pref)
            bm, bd = other.family(pref)
            if am == "finite" and bm == "finite" and not ad <= bd:
                return False
            if am == "finite" and bm == "cofinite" and ad & bd:
                return False
            if am == "cofinite" and bm == "finite":
                return False
            if am == "cofinite" and bm == "cofinite" and not bd <= ad:
                return False
        return True

    def union(self, other: "PointSet") -> "PointSet":
        if self.height != other.height:
            raise ValueError("height mismatch")
        fams = {}
        prefixes = {k for k, _, _ in self.families} | \
            {k for k, _, _ in other.families}
        for pref in prefixes:
            am, ad = self.family(pref)
            bm, bd = other.family(pref)
            if am == "finite" and bm == "finite":
                fams[pref] = ("finite", ad | bd)
            elif am == "cofinite" and bm == "cofinite":
                fams[pref] = ("cofinite", ad & bd)
            elif am == "cofinite":
                fams[pref] = ("cofinite", ad - bd)
            else:
                fams[pref] = ("cofinite", bd - ad)
        clean = tuple(sorted((k, m, frozenset(d)) for k, (m, d) in fams.items()
                             if not (m == "finite" and not d)))
        return PointSet(self.height, self.others | other.others, clean)

    def intersection(self, other: "PointSet") -> "PointSet":
        if self.height != other.height:
            raise ValueError("height mismatch")
        fams = {}
        prefixes = {k for k, _, _ in self.families} | \
            {k for k, _, _ in other.families}
        for pref in prefixes:
            am, ad = self.family(pref)
            bm, bd = other.family(pref)
            if am == "finite" and bm == "finite":
                fams[pref] = ("finite", ad & bd)
            elif am == "cofinite" and bm == "cofinite":
                fams[pref] = ("cofinite", ad | bd)
            elif am == "cofinite":
                fams[pref] = ("finite", bd - ad)
            else:
                fams[pref] = ("finite", ad - bd)
        clean = tuple(sorted((k, m, frozenset(d)) for k, (m, d) in fams.items()
                             if not (m == "finite" and not d)))
        return PointSet(self.height, self.others & other.others, clean)

    def with_points(self, pts) -> "PointSet":
        extra = PointSet.make(self.height, pts)
        return self.union(extra)

    def iter_known_points(self):
        """Explicit points (cofinite families are reported separately)."""
        for pt in sorted(self.others):
            yield pt
        for (p, l), mode, data in self.families:
            if mode == "finite":
                for j in sorted(data):
                    yield fin_len(self.height, p, l, j)

    def __str__(self):
        parts = []
        for (p, l), mode, data in sorted(self.families):
            prefix = "F0 " * p + "F1 " * l
            if mode == "cofinite":
                if data:
                    ex = ",".join(str(j) for j in sorted(data))
                    parts.append(f"{prefix}FinLen(* minus {{{ex}}})")
                else:
                    parts.append(f"{prefix}FinLen(*)")
            else:
                for j in sorted(data):
                    parts.append(f"{prefix}FinLen({j})")
        parts.extend(str(pt) for pt in sorted(self.others))
        return "{" + ", ".join(sorted(parts)) + "}"


# -- the spectrum and the closure operator ------------------------------------


def points(height: int) -> PointSet:
    """The full spectrum: every finite-length family (cofinitely), the
    injective-hull point of every prefix, the completion and fraction-field
    points, and the canonical extension points."""
    if height < 0:
        raise ValueError("height must be >= 0")
    pts = []
    prefixes = [(p, height - p) for p in range(height + 1)]
    for p, l in prefixes:
        pts.append(prufer(height, p, l))
    pts.append(adic(height))
    pts.append(qpoint(height))
    for m in range(1, height + 1):
        for p in range(height - m + 1):
            pts.append(tpoint(height, p, height - m - p, m))
    return PointSet.make(height, pts, cofinite_prefixes=prefixes)


def family_iii_raw_count(height: int) -> int:
    """Number of (p, l, m) triples with p + l + m = height, before the
    redundancy canonicalization."""
    return (height + 1) * (height + 2) // 2


def infinite_point_count(height: int) -> int:
    """Injective-hull points per prefix plus the two canonical ones."""
    full = points(height)
    return len([pt for pt in full.others if not pt.finite_length])


def closure(s: PointSet) -> PointSet:
    """Least fixpoint of the two closure rules inside every embedded copy:
    an infinite finite-length family forces its hull point, the completion
    and the fraction field; a hull or completion point forces the fraction
    field.  Extension points are closed."""
    n = s.height
    cur = s
    while True:
        add = []
        for (p, l), mode, _ in cur.families:
            if mode == "cofinite":
                add.extend([prufer(n, p, l), adic(n), qpoint(n)])
        for pt in cur.others:
            if pt.kind in (PRUFER, ADIC):
                add.append(qpoint(n))
        nxt = cur.with_points(add)
        if nxt == cur:
            return cur
        cur = nxt


def is_closed(s: PointSet) -> bool:
    return closure(s) == s


def point_closure(pt: ZieglerPoint) -> PointSet:
    return closure(PointSet.make(pt.height, [pt]))


def random_point_set(height: int, rng: random.Random,
                     max_points: int = 6) -> PointSet:
    """Seeded random point set for property tests."""
    pool = list(points(height).others)
    pts = rng.sample(pool, k=min(len(pool), rng.randint(0, max_points)))
    for _ in range(rng.randint(0, 3)):
        p = rng.randint(0, height)
        l = height - p
        pts.append(fin_len(height, p, l, rng.randint(1, 9)))
    cof = []
    exc = {}
    if rng.random() < 0.4:
        p = rng.randint(0, height)
        pref = (p, height - p)
        cof.append(pref)
        exc[pref] = frozenset(rng.sample(range(1, 8), k=rng.randint(0, 2)))
    return PointSet.make(height, pts, cofinite_prefixes=cof, excluded=exc)


# -- textual syntax ------------------------------------------------------------


def parse_point(height: int, text: str) -> ZieglerPoint:
    toks = text.replace(",", " ").split()
    word = []
    while toks and toks[0] in ("F0", "F1"):
        word.append(toks.pop(0))
    if len(toks) != 1:
        raise ValueError(f"cannot parse point {text!r}")
    base = toks[0]
    if base.startswith("FinLen(") and base.endswith(")"):
        return point_from_word(height, word, FINLEN, int(base[7:-1]))
    if base.startswith("T(") and base.endswith(")"):
        return point_from_word(height, word, TPOINT, int(base[2:-1]))
    if base in (PRUFER, ADIC, QPOINT):
        return point_from_word(height, word, base)
    raise ValueError(f"unknown point base {base!r}")


def parse_point_set(height: int, text: str) -> PointSet:
    text = text.strip().strip("{}")
    pts = []
    cof = []
    exc = {}
    for chunk in [c.strip() for c in text.split(",") if c.strip()]:
        if chunk.endswith("FinLen(*)"):
            word = chunk[: -len("FinLen(*)")].split()
            p, l = canonical_word(word)
            cof.append((p, l))
        else:
            pts.append(parse_point(height, chunk))
    return PointSet.make(height, pts, cofinite_prefixes=cof, excluded=exc)
