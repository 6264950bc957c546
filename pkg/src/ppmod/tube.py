"""Ray-tube translation quivers and mesh-relation path normalization.

The quiver Q(m; n_0..n_{m-1}) has vertices S(i, k, j) for 0 <= i < m (read
mod m), 0 <= k <= n_i, and stages j >= 1 capped by a horizon.  Arrows are

    mu(i,k,j):  S(i,k,j)   -> S(i,k,j+1)
    lam(i,k,j): S(i,k,j)   -> S(i,k+1,j)        for k < n_i
    lam(i,n_i,j): S(i,n_i,j) -> S(i+1,0,j-1)    for j >= 2  (rim descent)

Mesh rewriting orients the relations so that lambda segments precede mu
segments (diagram order); every nonzero path normalizes to a coefficient
with a lambda-walk followed by a mu-climb, and both walks are uniquely
determined by their lengths, so the normal form is canonical.

The rim relation is implemented in its type-correct form

    lam(i,n_i,j+1) o mu(i,n_i,j)  =  mu(i+1,0,j-1) o lam(i,n_i,j)   (j >= 2)

derived from the almost split sequence at the rim (the printed index
pattern of the source text is not composable as stated; normalization
would flag any path on which another orientation disagrees, and the
confluence suite checks order independence exhaustively).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

Vertex = tuple  # (i, k, j)


@dataclass(frozen=True)
class Arrow:
    kind: str  # "mu" | "lam"
    i: int
    k: int
    j: int

    def __str__(self):
        return f"{self.kind}({self.i},{self.k})[{self.j}]"


ZERO = "ZERO"


class TranslationQuiver:
    """Q(m; n_0..n_{m-1}) truncated at stage horizon J >= 2."""

    def __init__(self, m: int, ray_lengths, horizon: int):
        if m < 1:
            raise ValueError("need at least one ray")
        if horizon < 2:
            raise ValueError("horizon must be >= 2")
        self.m = m
        self.ray_lengths = tuple(int(x) for x in ray_lengths)
        if len(self.ray_lengths) != m or any(x < 0 for x in self.ray_lengths):
            raise ValueError("need one nonnegative ray length per ray")
        self.horizon = horizon

    def n_of(self, i: int) -> int:
        return self.ray_lengths[i % self.m]

    def vertices(self) -> list[Vertex]:
        out = []
        for i in range(self.m):
            for k in range(self.n_of(i) + 1):
                for j in range(1, self.horizon + 1):
                    out.append((i, k, j))
        return out

    def is_vertex(self, v: Vertex) -> bool:
        i, k, j = v
        return 0 <= i < self.m and 0 <= k <= self.n_of(i) and \
            1 <= j <= self.horizon

    def source(self, a: Arrow) -> Vertex:
        return (a.i % self.m, a.k, a.j)

    def target(self, a: Arrow) -> Vertex:
        i = a.i % self.m
        if a.kind == "mu":
            return (i, a.k, a.j + 1)
        if a.k < self.n_of(i):
            return (i, a.k + 1, a.j)
        return ((i + 1) % self.m, 0, a.j - 1)

    def valid_arrow(self, a: Arrow) -> bool:
        if a.kind not in ("mu", "lam"):
            return False
        src = self.source(a)
        if not self.is_vertex(src):
            return False
        if a.kind == "lam" and a.k == self.n_of(a.i) and a.j < 2:
            return False
        return self.is_vertex(self.target(a))

    def arrows(self) -> list[Arrow]:
        out = []
        for (i, k, j) in self.vertices():
            mu = Arrow("mu", i, k, j)
            if self.valid_arrow(mu):
                out.append(mu)
            lam = Arrow("lam", i, k, j)
            if self.valid_arrow(lam):
                out.append(lam)
        return out

    def out_lam(self, v: Vertex) -> Arrow | None:
        a = Arrow("lam", v[0], v[1], v[2])
        return a if self.valid_arrow(a) else None

    def out_mu(self, v: Vertex) -> Arrow | None:
        a = Arrow("mu", v[0], v[1], v[2])
        return a if self.valid_arrow(a) else None

    def dot(self) -> str:
        """Graphviz export; mesh relations annotate the mu-arrows."""
        lines = ["digraph raytube {", '  rankdir="BT";']
        for v in self.vertices():
            lines.append(f'  "S{v}" [shape=plaintext];')
        for a in self.arrows():
            s, t = self.source(a), self.target(a)
            attrs = [f'label="{a}"']
            if a.kind == "mu":
                rel = _mesh_rhs(self, a)
                if rel == ZERO:
                    attrs.append('comment="lam o mu = 0"')
                elif rel is not None:
                    attrs.append(f'comment="lam o mu = {rel[1]} o {rel[0]}"')
            lines.append(f'  "S{s}" -> "S{t}" [{", ".join(attrs)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ray_tube(m: int, ray_lengths, horizon: int) -> TranslationQuiver:
    return TranslationQuiver(m, ray_lengths, horizon)


def parse_tube_descriptor(text: str) -> TranslationQuiver:
    """Parse 'tube m=2 n=[1,0] horizon=6' (the leading word is optional)."""
    kv = {}
    for p in text.split():
        if "=" in p:
            key, val = p.split("=", 1)
            kv[key.strip()] = val.strip()
    if "m" not in kv or "n" not in kv or "horizon" not in kv:
        raise ValueError("tube descriptor needs m=, n=[...], horizon=")
    m = int(kv["m"])
    nstr = kv["n"].strip("[]")
    lengths = [int(x) for x in nstr.split(",") if x != ""]
    return TranslationQuiver(m, lengths, int(kv["horizon"]))


# -- formal paths and normalization -----------------------------------------


@dataclass(frozen=True)
class FormalPath:
    """A scalar coefficient and a composable arrow word in diagram order
    (first applied first)."""

    coeff: int
    start: Vertex
    arrows: tuple[Arrow, ...]

    def __str__(self):
        if not self.arrows:
            return f"{self.coeff}.id@S{self.start}"
        word = ";".join(str(a) for a in self.arrows)
        return f"{self.coeff}.[{word}]"


@dataclass(frozen=True)
class NormalPath:
    """Canonical form: a lambda-walk of lam_steps followed by a mu-climb of
    mu_steps (both walks are uniquely determined by the source)."""

    coeff: int
    start: Vertex
    lam_steps: int
    mu_steps: int

    def __str__(self):
        return (f"{self.coeff}.lam^{self.lam_steps}"
                f".mu^{self.mu_steps}@S{self.start}")


def path_of(q: TranslationQuiver, arrows, coeff: int = 1) -> FormalPath:
    arrows = tuple(arrows)
    if not arrows:
        raise ValueError("use identity_path for empty words")
    for a, b in zip(arrows, arrows[1:]):
        if q.target(a) != q.source(b):
            raise ValueError(f"non-composable at {a} ; {b}")
    for a in arrows:
        if not q.valid_arrow(a):
            raise ValueError(f"invalid arrow {a}")
    return FormalPath(coeff, q.source(arrows[0]), arrows)


def identity_path(q: TranslationQuiver, v: Vertex, coeff: int = 1) -> FormalPath:
    if not q.is_vertex(v):
        raise ValueError("not a vertex")
    return FormalPath(coeff, v, ())


def _mesh_rhs(q: TranslationQuiver, mu: Arrow):
    """Rewrite of [mu ; lam-at-target] in diagram order: the pair
    (lam', mu') it equals, or ZERO at the rim base."""
    i, k, j = mu.i % q.m, mu.k, mu.j
    if k < q.n_of(i):
        return (Arrow("lam", i, k, j), Arrow("mu", i, k + 1, j))
    if j == 1:
        return ZERO
    return (Arrow("lam", i, k, j), Arrow("mu", (i + 1) % q.m, 0, j - 1))


def normalize_path(q: TranslationQuiver, p: FormalPath,
                   strategy: str = "leftmost", seed: int = 0):
    """Rewrite to the canonical NormalPath (or ZERO) using the mesh rules;
    the strategy picks which redex to contract so confluence is testable."""
    rng = random.Random(seed)
    word = list(p.arrows)
    while True:
        redexes = [t for t in range(len(word) - 1)
                   if word[t].kind == "mu" and word[t + 1].kind == "lam"]
        if not redexes:
            break
        if strategy == "leftmost":
            t = redexes[0]
        elif strategy == "rightmost":
            t = redexes[-1]
        elif strategy == "random":
            t = rng.choice(redexes)
        else:
            raise ValueError("unknown strategy")
        rhs = _mesh_rhs(q, word[t])
        if rhs == ZERO:
            return ZERO
        word[t], word[t + 1] = rhs
    nlam = sum(1 for a in word if a.kind == "lam")
    nmu = len(word) - nlam
    return NormalPath(p.coeff, p.start, nlam, nmu)


def normal_path_target(q: TranslationQuiver, np: NormalPath) -> Vertex:
    v = np.start
    for _ in range(np.lam_steps):
        a = q.out_lam(v)
        if a is None:
            raise ValueError("normal path leaves the quiver (lambda walk)")
        v = q.target(a)
    for _ in range(np.mu_steps):
        a = q.out_mu(v)
        if a is None:
            raise ValueError("normal path leaves the quiver (mu climb)")
        v = q.target(a)
    return v


def normal_path_arrows(q: TranslationQuiver, np: NormalPath) -> list[Arrow]:
    out = []
    v = np.start
    for _ in range(np.lam_steps):
        a = q.out_lam(v)
        out.append(a)
        v = q.target(a)
    for _ in range(np.mu_steps):
        a = q.out_mu(v)
        out.append(a)
        v = q.target(a)
    return out


def all_paths_from(q: TranslationQuiver, v: Vertex, max_len: int):
    """All composable arrow words from v up to the given length."""
    frontier = [((), v)]
    for _ in range(max_len):
        nxt = []
        for word, end in frontier:
            for a in (q.out_mu(end), q.out_lam(end)):
                if a is not None:
                    yield word + (a,)
                    nxt.append((word + (a,), q.target(a)))
        frontier = nxt


def hom_dimension(q: TranslationQuiver, source: Vertex, target: Vertex) -> int:
    """Number of distinct normal paths source -> target (the dimension of
    the path space modulo the mesh relations)."""
    if not (q.is_vertex(source) and q.is_vertex(target)):
        raise ValueError("vertex outside the horizon")
    count = 0
    v = source
    steps = 0
    while True:
        # climb with mu from v: stages ascend one at a time
        if v[:2] == target[:2] and target[2] >= v[2] and \
                target[2] <= q.horizon:
            count += 1
        a = q.out_lam(v)
        if a is None:
            break
        v = q.target(a)
        steps += 1
        if steps > 4 * q.m * (max(q.ray_lengths) + 2) * q.horizon:
            raise RuntimeError("lambda walk failed to terminate")
    return count


# -- the generalized ladder attached to a tube (symbolic) ---------------------


@dataclass
class SymbolicTube:
    """Objects and maps of the pushout ladder attached to a ray tube:
    direct sums of vertices with matrices of normal paths (None = zero
    entry).  Blocks on rays with exhausted depth are zero; the support
    flags record which blocks exist."""

    quiver: TranslationQuiver

    def stage_objects(self, j: int) -> list[Vertex]:
        return [(i, 0, j) for i in range(self.quiver.m)]

    def p_objects(self, l: int, j: int = 1) -> list[Vertex | None]:
        return [(i, l, j) if l <= self.quiver.n_of(i) else None
                for i in range(self.quiver.m)]

    def _stage_check(self, j: int, top: int):
        if not (1 <= j and top <= self.quiver.horizon):
            raise ValueError("stage outside the quiver horizon")

    def psi_matrix(self, j: int):
        """Diagonal matrix of stage embeddings mu(i,0)[j]."""
        self._stage_check(j, j + 1)
        m = self.quiver.m
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            out[i][i] = NormalPath(1, (i, 0, j), 0, 1)
        return out

    def phi_matrix(self, j: int):
        """Rim descent from stage j+1 to stage j: the full lambda-chain of
        ray i sits in row i, column (i+1) mod m."""
        self._stage_check(j, j + 1)
        m = self.quiver.m
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            out[i][(i + 1) % m] = NormalPath(1, (i, 0, j + 1),
                                             self.quiver.n_of(i) + 1, 0)
        return out

    def alpha_matrix(self, l: int, j: int = 1):
        """Diagonal block embedding into the depth-l objects; zero on rays
        with n_i < l."""
        self._stage_check(j, j)
        m = self.quiver.m
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            if l <= self.quiver.n_of(i):
                out[i][i] = NormalPath(1, (i, l - 1, j), 1, 0)
        return out

    def psibar_matrix(self, l: int, j: int):
        """Diagonal stage embedding at depth l (zero on exhausted rays)."""
        self._stage_check(j, j + 1)
        m = self.quiver.m
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            if l <= self.quiver.n_of(i):
                out[i][i] = NormalPath(1, (i, l, j), 0, 1)
        return out

    def rim_matrix(self, j: int):
        """The completed rim maps from the deepest objects at stage j+1
        back to the stage-j objects: a single boundary descent on every ray
        of maximal depth."""
        self._stage_check(j, j + 1)
        m = self.quiver.m
        n = max(self.quiver.ray_lengths)
        out = [[None] * m for _ in range(m)]
        for i in range(m):
            if self.quiver.n_of(i) == n:
                out[i][(i + 1) % m] = NormalPath(1, (i, n, j + 1), 1, 0)
        return out

    def compose(self, first, second):
        """Matrix composition (first then second) with path normalization;
        entries must stay single paths (true for the ladder shapes)."""
        q = self.quiver
        m = self.quiver.m
        out = [[None] * m for _ in range(m)]
        for s in range(m):
            for t in range(m):
                acc = None
                for mid in range(m):
                    a, b = first[s][mid], second[mid][t]
                    if a is None or b is None:
                        continue
                    if normal_path_target(q, a) != b.start:
                        raise ValueError("non-composable ladder entries")
                    word = normal_path_arrows(q, a) + normal_path_arrows(q, b)
                    if not word:
                        comp = NormalPath(a.coeff * b.coeff, a.start, 0, 0)
                    else:
                        comp = normalize_path(
                            q, FormalPath(a.coeff * b.coeff, a.start,
                                          tuple(word)))
                    if comp == ZERO:
                        continue
                    if acc is not None:
                        raise ValueError("ladder composition left the "
                                         "single-path regime")
                    acc = comp
                out[s][t] = acc
        return out


def build_generalized_tube(q: TranslationQuiver) -> SymbolicTube:
    return SymbolicTube(q)
