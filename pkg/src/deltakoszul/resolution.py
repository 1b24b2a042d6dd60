"""Minimal graded projective resolutions of the trivial module ``A_0``.

Modules are left ``A``-modules given degree by degree. Every basis vector
lies in a single vertex component ``e_v M``; arrows act through explicit
matrices. Syzygies are stored as submodules of the previous free module in
rref coordinates, so every table is deterministic.

Internal degrees never exceed the algebra cap. A step is certified only
when the syzygy it covers is known in every degree where it can be
nonzero; otherwise :class:`HorizonExceeded` is raised.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import GradedQuotientAlgebra
from .errors import HorizonExceeded
from .linalg import Echelon, Solver, mat_vec, nullspace


class GradedModule:
    """Interface shared by the trivial, free and sub-modules."""

    algebra: GradedQuotientAlgebra
    min_degree = 0
    # None when the module may be nonzero in every degree up to the cap
    max_degree = None

    @property
    def field(self):
        return self.algebra.field

    @property
    def cap(self):
        return self.algebra.cap

    def degrees(self):
        hi = self.cap if self.max_degree is None else min(self.cap, self.max_degree)
        return range(self.min_degree, hi + 1)

    @property
    def complete(self) -> bool:
        """True iff every degree where the module can be nonzero is within the cap."""
        return self.max_degree is not None and self.max_degree <= self.cap

    def dim(self, t):
        raise NotImplementedError

    def vertices(self, t):
        raise NotImplementedError

    def act(self, arrow, t, vec):
        raise NotImplementedError

    def act_path(self, path, t, vec):
        """Left multiplication by a path (rightmost arrow acts first)."""
        idx = {a.id: i for i, a in enumerate(self.algebra.quiver.arrows)}
        for a in reversed(path.arrows):
            vec = self.act(idx[a], t, vec)
            t += 1
        return vec

    def total_dim(self):
        return sum(self.dim(t) for t in self.degrees())


class TrivialModule(GradedModule):
    def __init__(self, A: GradedQuotientAlgebra):
        self.algebra = A
        self.max_degree = 0

    def dim(self, t):
        return len(self.algebra.quiver.vertices) if t == 0 else 0

    def vertices(self, t):
        return list(self.algebra.quiver.vertices) if t == 0 else []

    def act(self, arrow, t, vec):
        return [0] * self.dim(t + 1)


def trivial_module(A: GradedQuotientAlgebra) -> TrivialModule:
    return TrivialModule(A)


class FreeModule(GradedModule):
    """``⊕_g A e_{v_g}[d_g]``; basis ``(g, k)`` for normal path ``k`` of ``A e_{v_g}``."""

    def __init__(self, A: GradedQuotientAlgebra, generators):
        self.algebra = A
        self.generators = tuple(generators)
        if self.generators:
            self.min_degree = min(d for _, d in self.generators)
            if A.is_finite:
                self.max_degree = max(d for _, d in self.generators) + A.top_degree
            else:
                self.max_degree = None
        else:
            self.min_degree = 0
            self.max_degree = -1
        self._basis = {}

    def basis(self, t):
        """List of ``(generator index, index into A.basis[t - d_g])``."""
        if t not in self._basis:
            A = self.algebra
            if t > self.cap and not (self.max_degree is not None and t > self.max_degree):
                raise HorizonExceeded(f"internal degree {t} exceeds cap {self.cap}", suggested_cap=t)
            out = []
            for g, (v, d) in enumerate(self.generators):
                if t - d < 0:
                    continue
                for k, p in enumerate(A.basis_paths(t - d)):
                    if p.source == v:
                        out.append((g, k))
            self._basis[t] = (out, {b: i for i, b in enumerate(out)})
        return self._basis[t][0]

    def position(self, t, g, k):
        self.basis(t)
        return self._basis[t][1][(g, k)]

    def dim(self, t):
        return len(self.basis(t))

    def vertices(self, t):
        A = self.algebra
        return [A.basis[t - self.generators[g][1]][k].target for g, k in self.basis(t)]

    def generator_position(self, g):
        """Position of the generator ``(g, e_{v_g})`` in degree ``d_g``."""
        v, d = self.generators[g]
        return self.position(d, g, self.algebra.quiver.vertex_index(v))

    def act(self, arrow, t, vec):
        A = self.algebra
        F = self.field
        out = [0] * self.dim(t + 1)
        for (g, k), c in zip(self.basis(t), vec):
            if not c:
                continue
            s = t - self.generators[g][1]
            if s >= len(A.left):
                continue
            col = A.left[s][arrow][k]
            if col is None:
                continue
            for i, a in enumerate(col):
                if a:
                    pos = self.position(t + 1, g, i)
                    out[pos] = F.norm(out[pos] + c * a)
        return out

    def element(self, t, g, path):
        """The basis vector ``path * generator_g`` in degree ``t``."""
        A = self.algebra
        d = self.generators[g][1]
        v = [0] * self.dim(t)
        coords = A.normal_form(t - d, path)
        for i, a in enumerate(coords):
            if a:
                v[self.position(t, g, i)] = a
        return v


class Submodule(GradedModule):
    """A graded submodule of ``ambient`` with rref bases per degree."""

    def __init__(self, ambient: GradedModule, rows: dict, max_degree=None):
        self.algebra = ambient.algebra
        self.ambient = ambient
        self.rows = rows
        nonzero = [t for t, r in rows.items() if r]
        self.min_degree = min(nonzero) if nonzero else 0
        self.max_degree = max_degree
        self._pivots = {
            t: [next(i for i, a in enumerate(row) if a) for row in r] for t, r in rows.items()
        }

    def dim(self, t):
        if t in self.rows:
            return len(self.rows[t])
        if t > self.cap and not (self.max_degree is not None and t > self.max_degree):
            raise HorizonExceeded(f"internal degree {t} exceeds cap {self.cap}", suggested_cap=t)
        return 0

    def vertices(self, t):
        amb = self.ambient.vertices(t)
        return [amb[p] for p in self._pivots.get(t, [])]

    def embed(self, t, vec):
        return mat_vec(self.field, self.rows.get(t, []), vec, self.ambient.dim(t))

    def coordinates(self, t, ambient_vec):
        return [ambient_vec[p] for p in self._pivots.get(t, [])]

    def act(self, arrow, t, vec):
        w = self.ambient.act(arrow, t, self.embed(t, vec))
        return self.coordinates(t + 1, w)


@dataclass(frozen=True)
class Generator:
    vertex: str
    degree: int
    image: tuple  # coordinates in the covered module, degree ``degree``


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _require_complete(M: GradedModule, step=None):
    if M.max_degree is not None and M.max_degree > M.cap:
        raise HorizonExceeded(
            f"step {step}: the module to cover reaches internal degree {M.max_degree}"
            f" beyond cap {M.cap}",
            step=step,
            suggested_cap=M.max_degree,
        )


def top_generators(M: GradedModule, step=None):
    """Basis vectors of ``M`` spanning a complement of ``rad(A) M``, degree by degree."""
    _require_complete(M, step)
    F = M.field
    arrows = range(len(M.algebra.quiver.arrows))
    gens = []
    for t in M.degrees():
        n = M.dim(t)
        if n == 0:
            continue
        E = Echelon(F, n)
        if t - 1 >= M.min_degree:
            for k in range(M.dim(t - 1)):
                e = _unit(M.dim(t - 1), k)
                for a in arrows:
                    E.add(M.act(a, t - 1, e))
        if len(E) == n:
            continue
        verts = M.vertices(t)
        for i in range(n):
            e = _unit(n, i)
            if E.add(e):
                gens.append(Generator(verts[i], t, tuple(e)))
    if M.max_degree is None and gens:
        hi = max(g.degree for g in gens)
        if hi + 1 > M.cap:
            raise HorizonExceeded(
                f"step {step}: generator in degree {hi} leaves no room to certify the next top",
                step=step,
                suggested_cap=hi + 1,
            )
    return gens


def top(M: GradedModule):
    """Multiset ``{(vertex, degree): multiplicity}`` of the top of ``M``."""
    return Counter((g.vertex, g.degree) for g in top_generators(M))


@dataclass
class FreeCover:
    generators: tuple  # Generator records, in order
    module: FreeModule

    def table(self):
        return Counter((g.vertex, g.degree) for g in self.generators)


def _cover_columns(M: GradedModule, P: FreeModule, gens, t):
    """Images in ``M_t`` of the basis of ``P_t`` under the covering map."""
    A = M.algebra
    cols = []
    for g, k in P.basis(t):
        d = gens[g].degree
        path = A.basis[t - d][k]
        cols.append(M.act_path(path, d, list(gens[g].image)))
    return cols


def projective_cover(M: GradedModule, step=None):
    """Minimal free cover ``P -> M`` and its kernel as a submodule of ``P``."""
    gens = top_generators(M, step)
    P = FreeModule(M.algebra, [(g.vertex, g.degree) for g in gens])
    cover = FreeCover(tuple(gens), P)
    F = M.field
    rows = {}
    maps = {}
    for t in P.degrees():
        cols = _cover_columns(M, P, gens, t)
        maps[t] = cols
        rows[t] = nullspace(F, cols, M.dim(t))
    kernel = Submodule(P, rows, max_degree=P.max_degree)
    cover.maps = maps
    return cover, kernel


@dataclass
class ResolutionStep:
    n: int
    cover: FreeCover
    # degree -> images of the basis of P_n in P_{n-1} (in A_0 for n = 0)
    differential: dict
    kernel: Submodule
    horizon: int

    @property
    def module(self) -> FreeModule:
        return self.cover.module

    @property
    def generators(self):
        return self.cover.module.generators

    def table(self):
        """``{(vertex, degree): multiplicity}``."""
        return Counter(self.generators)

    def degrees(self):
        return sorted({d for _, d in self.generators})


@dataclass
class Resolution:
    algebra: GradedQuotientAlgebra
    steps: list = field(default_factory=list)
    _solvers: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, n) -> ResolutionStep:
        return self.steps[n]

    def free(self, n) -> FreeModule:
        return self.steps[n].module

    def tables(self):
        return [s.table() for s in self.steps]

    def solver(self, n, t, reverse=False) -> Solver:
        """Cached solver for ``d_n`` in internal degree ``t``."""
        key = (n, t, reverse)
        if key not in self._solvers:
            P = self.free(n - 1)
            cols = self.steps[n].differential.get(t)
            if cols is None:
                # degree outside the stored range
                cols = [[0] * P.dim(t) for _ in range(self.free(n).dim(t))]
            self._solvers[key] = Solver(self.algebra.field, cols, P.dim(t), reverse=reverse)
        return self._solvers[key]


def minimal_resolution(A: GradedQuotientAlgebra, steps: int) -> Resolution:
    """Compute ``P_0, ..., P_steps`` of the minimal resolution of ``A_0``."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    R = Resolution(A)
    M = trivial_module(A)
    for n in range(steps + 1):
        cover, kernel = projective_cover(M, step=n)
        if isinstance(M, Submodule):
            diff = {t: [M.embed(t, c) for c in cols] for t, cols in cover.maps.items()}
        else:
            diff = dict(cover.maps)
        horizon = min(A.cap, cover.module.max_degree) if cover.module.max_degree is not None else A.cap
        R.steps.append(ResolutionStep(n, cover, diff, kernel, horizon))
        M = kernel
    return R


def euler_check(R: Resolution):
    """Alternating dimension sums per internal degree.

    Returns ``[(degree, alternating sum, expected, ok), ...]`` over the
    degrees where every step that can contribute has been computed.
    """
    A = R.algebra
    last = R.steps[-1]
    if last.generators:
        hi = min(A.cap, min(d for _, d in last.generators))
    else:
        hi = A.cap
    nverts = len(A.quiver.vertices)
    out = []
    for j in range(hi + 1):
        total = 0
        for s in R.steps:
            P = s.module
            if P.max_degree is not None and j > P.max_degree:
                continue
            if j < P.min_degree:
                continue
            total += (-1) ** s.n * P.dim(j)
        expected = nverts if j == 0 else 0
        out.append((j, total, expected, total == expected))
    return out


def check_minimality(R: Resolution) -> bool:
    """No generator of ``P_n`` maps onto a generator coordinate of ``P_{n-1}``."""
    for s in R.steps[1:]:
        prev = R.free(s.n - 1)
        for g, (v, d) in enumerate(s.generators):
            pos = s.module.generator_position(g)
            image = s.differential[d][pos]
            for h, (_, dh) in enumerate(prev.generators):
                if dh == d and image[prev.generator_position(h)]:
                    return False
    return True


def check_complex(R: Resolution) -> bool:
    """``d_{n-1} d_n = 0`` (and ``ε d_1 = 0``) in every stored degree."""
    F = R.algebra.field
    for s in R.steps[1:]:
        below = R.steps[s.n - 1]
        for t, cols in s.differential.items():
            if t not in below.differential:
                continue
            lower = below.differential[t]
            dim = len(lower[0]) if lower else 0
            for col in cols:
                if any(mat_vec(F, lower, col, dim)):
                    return False
    return True
