"""Ext groups of ``A_0``, Yoneda products by chain-map lifting, and generation degrees.

For a minimal resolution every map ``P_n -> A_0`` is a cocycle and no
coboundaries exist, so ``Ext^n`` has the basis dual to the generators of
``P_n``. A product ``ξ·η`` with ``ξ`` in degree ``n`` is ``ξ ∘ η_n`` where
``η_n: P_{n+m} -> P_n`` is the ``n``-th map of a chain lift of ``η``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import HorizonExceeded
from .linalg import Echelon


@dataclass(frozen=True)
class ExtClass:
    n: int
    coords: tuple  # one coefficient per generator of P_n

    def internal_degrees(self, R):
        gens = R.free(self.n).generators
        return sorted({-gens[g][1] for g, c in enumerate(self.coords) if c})

    def is_zero(self):
        return not any(self.coords)


def ext_basis(R, n):
    k = len(R.free(n).generators)
    out = []
    for g in range(k):
        c = [0] * k
        c[g] = 1
        out.append(ExtClass(n, tuple(c)))
    return out


def ext_groups(R):
    """``[(n, dim Ext^n, Counter{internal degree: multiplicity}), ...]``."""
    out = []
    for s in R.steps:
        degs = Counter(-d for _, d in s.generators)
        out.append((s.n, len(s.generators), degs))
    return out


@dataclass
class ChainLift:
    cls: ExtClass
    # maps[k][h] = {internal degree: vector in P_k} for generator h of P_{m+k}
    maps: list = field(default_factory=list)

    @property
    def range(self):
        return len(self.maps) - 1


def _require_steps(R, top):
    if top >= len(R.steps):
        raise HorizonExceeded(
            f"needs resolution step {top}, only {len(R.steps) - 1} computed", step=top
        )


def _combine(F, acc, t, vec):
    if t in acc:
        acc[t] = [F.norm(a + b) for a, b in zip(acc[t], vec)]
    else:
        acc[t] = list(vec)


def lift_class(R, xi: ExtClass, range_: int, reverse: bool = False) -> ChainLift:
    """Lift ``xi: P_m -> A_0`` to ``η_k: P_{m+k} -> P_k`` for ``k <= range_``."""
    m = xi.n
    _require_steps(R, m + range_)
    A = R.algebra
    F = A.field
    Pm = R.free(m)
    P0 = R.free(0)
    eta0 = []
    for h, (v, _) in enumerate(Pm.generators):
        c = xi.coords[h]
        if c:
            vec = [0] * P0.dim(0)
            vec[P0.generator_position(A.quiver.vertex_index(v))] = F.norm(c)
            eta0.append({0: vec})
        else:
            eta0.append({})
    lift = ChainLift(xi, [eta0])
    for k in range(1, range_ + 1):
        src = R.free(m + k)
        mid = R.free(m + k - 1)
        below = R.free(k - 1)
        diff = R.steps[m + k].differential
        prev = lift.maps[k - 1]
        level = []
        for h, (_, dh) in enumerate(src.generators):
            image = diff[dh][src.generator_position(h)]
            y = {}
            for (g, j), c in zip(mid.basis(dh), image):
                if not c or not prev[g]:
                    continue
                path = A.basis[dh - mid.generators[g][1]][j]
                for t, vec in prev[g].items():
                    w = below.act_path(path, t, vec)
                    _combine(F, y, t + path.length, [F.norm(c * a) for a in w])
            out = {}
            for t, vec in y.items():
                if not any(vec):
                    continue
                x = R.solver(k, t, reverse).solve(vec)
                if x is None:
                    raise ArithmeticError(f"no lift at k={k}, degree {t}")
                out[t] = x
            level.append(out)
        lift.maps.append(level)
    return lift


def compose_with(R, xi: ExtClass, eta_n, target_n: int) -> ExtClass:
    """``ξ ∘ η_n`` for the level ``η_n: P_{target_n} -> P_{ξ.n}``."""
    F = R.algebra.field
    P = R.free(xi.n)
    coords = []
    for h_map in eta_n:
        val = 0
        for g, c in enumerate(xi.coords):
            if not c:
                continue
            d = P.generators[g][1]
            vec = h_map.get(d)
            if vec is not None:
                val += c * vec[P.generator_position(g)]
        coords.append(F.norm(val))
    return ExtClass(target_n, tuple(coords))


def yoneda_product(xi: ExtClass, eta: ExtClass, R, lift: ChainLift | None = None, reverse=False) -> ExtClass:
    """``ξ·η``: ``ξ`` composed with the ``deg ξ``-th lift of ``η``."""
    n, m = xi.n, eta.n
    if lift is None or lift.range < n:
        lift = lift_class(R, eta, n, reverse)
    return compose_with(R, xi, lift.maps[n], n + m)


class ExtAlgebra:
    """Structure constants of ``E(A)`` on the generator-dual bases up to ``n_max``."""

    def __init__(self, R, n_max: int, reverse: bool = False):
        _require_steps(R, n_max)
        self.R = R
        self.n_max = n_max
        self.reverse = reverse
        self.field = R.algebra.field
        self._lifts = {}
        self._table = {}

    def dim(self, n):
        return len(self.R.free(n).generators)

    def basis(self, n):
        return ext_basis(self.R, n)

    def _lift(self, m, h):
        key = (m, h)
        if key not in self._lifts:
            self._lifts[key] = lift_class(
                self.R, ext_basis(self.R, m)[h], self.n_max - m, self.reverse
            )
        return self._lifts[key]

    def basis_products(self, a, b):
        """``{(g, h): coords of ε_g·ε_h}`` for ``g`` in ``Ext^a``, ``h`` in ``Ext^b``."""
        if a + b > self.n_max:
            raise HorizonExceeded(f"product degree {a + b} beyond n_max {self.n_max}")
        key = (a, b)
        if key not in self._table:
            out = {}
            for h in range(self.dim(b)):
                level = self._lift(b, h).maps[a]
                for g, xi in enumerate(ext_basis(self.R, a)):
                    out[(g, h)] = compose_with(self.R, xi, level, a + b).coords
            self._table[key] = out
        return self._table[key]

    def product(self, xi: ExtClass, eta: ExtClass) -> ExtClass:
        F = self.field
        table = self.basis_products(xi.n, eta.n)
        acc = [0] * self.dim(xi.n + eta.n)
        for g, a in enumerate(xi.coords):
            if not a:
                continue
            for h, b in enumerate(eta.coords):
                if not b:
                    continue
                for i, c in enumerate(table[(g, h)]):
                    if c:
                        acc[i] += a * b * c
        return ExtClass(xi.n + eta.n, tuple(F.norm(x) for x in acc))

    def product_span(self, a, b):
        """rref basis of ``Ext^a · Ext^b`` inside ``Ext^{a+b}``."""
        E = Echelon(self.field, self.dim(a + b))
        for v in self.basis_products(a, b).values():
            E.add(v)
        return E.basis()

    def decomposables(self, n):
        """rref basis of the span of all products of lower positive degrees in ``Ext^n``."""
        E = Echelon(self.field, self.dim(n))
        for a in range(1, n):
            for v in self.basis_products(a, n - a).values():
                E.add(v)
        return E.basis()

    def power_span(self, i, base=1):
        """rref basis of ``(Ext^base)^i``, computed by right multiplication."""
        if i == 0:
            return [list(c.coords) for c in ext_basis(self.R, 0)]
        current = [list(c.coords) for c in ext_basis(self.R, base)]
        deg = base
        for _ in range(i - 1):
            E = Echelon(self.field, self.dim(deg + base))
            for v in current:
                left = ExtClass(deg, tuple(v))
                for e in ext_basis(self.R, base):
                    E.add(self.product(left, e).coords)
            current = E.basis()
            deg += base
        return current


@dataclass
class DegreeSummary:
    n: int
    dim: int
    internal_degrees: dict
    decomposable_dim: int
    minimal_generator: bool


@dataclass
class YonedaSummary:
    degrees: list
    pair_spans: dict  # (a, b) -> dim Ext^a · Ext^b
    orientation: str = "ξ·η = ξ ∘ η_{deg ξ} (compose with the lift of the right factor)"

    @property
    def generator_degrees(self):
        return [d.n for d in self.degrees if d.minimal_generator]

    @property
    def positive_generator_degrees(self):
        return [n for n in self.generator_degrees if n > 0]


def minimal_generator_degrees(R, n_max: int, reverse: bool = False) -> YonedaSummary:
    E = ExtAlgebra(R, n_max, reverse)
    rows = []
    pairs = {}
    for n in range(n_max + 1):
        dim = E.dim(n)
        if n == 0:
            dec = 0
        else:
            dec = len(E.decomposables(n))
            for a in range(1, n):
                pairs[(a, n - a)] = len(E.product_span(a, n - a))
        internal = Counter(-d for _, d in R.free(n).generators)
        rows.append(DegreeSummary(n, dim, dict(internal), dec, dec < dim))
    summary = YonedaSummary(rows, pairs)
    summary.algebra = E
    return summary


def degree_obstruction(delta, a: int, b: int) -> bool:
    """True iff ``δ(a) + δ(b) == δ(a+b)``; False forces ``Ext^a · Ext^b = 0``."""
    vals = delta.values if hasattr(delta, "values") else delta
    return vals[a] + vals[b] == vals[a + b]

