"""The graded quotient ``A = kQ/I`` computed degree by degree up to a cap.

``I_j`` is spanned by the length-``j`` relations together with ``a*I_{j-1}``
and ``I_{j-1}*a`` over all arrows ``a``. Reducing ``I_j`` to rref over the
ordered paths of length ``j`` makes the pivot paths the leading terms; the
remaining paths form the normal-monomial basis of ``A_j``. Leading terms of
a two-sided ideal are closed under multiplication, so subpaths of normal
monomials are normal.
"""
from __future__ import annotations

from .errors import CapTooSmall, HorizonExceeded, ValidationError
from .field import QQ, Field
from .linalg import Echelon, rank
from .quiver import Path, Quiver, enumerate_paths, validate_relations


class GradedQuotientAlgebra:
    def __init__(self, quiver: Quiver, relations, cap: int, field: Field = QQ):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.cap = cap
        self.field = field
        self.paths = []
        self.basis = []
        self.nf = []
        self.left = []
        self.top_degree = None

    # ---- degree queries -------------------------------------------------
    @property
    def is_finite(self) -> bool:
        """True once some positive degree within the cap is known to vanish."""
        return self.top_degree is not None

    def _check(self, j):
        if j < 0:
            return False
        if j > self.cap:
            if self.is_finite:
                return False
            raise HorizonExceeded(
                f"degree {j} exceeds the algebra cap {self.cap}", suggested_cap=j
            )
        return True

    def dim(self, j: int) -> int:
        return len(self.basis[j]) if self._check(j) else 0

    def basis_paths(self, j: int):
        return self.basis[j] if self._check(j) else []

    def dims_by_source(self, j: int):
        """``{vertex: dim A_j e_v}``."""
        out = {v: 0 for v in self.quiver.vertices}
        for p in self.basis_paths(j):
            out[p.source] += 1
        return out

    def normal_form(self, j: int, path: Path):
        """Coordinates of a length-``j`` path in the basis of ``A_j``."""
        if not self._check(j):
            return []
        return list(self.nf[j][path])

    def left_action(self, arrow: int, j: int, vec):
        """Left multiplication by arrow number ``arrow``: ``A_j -> A_{j+1}``."""
        F = self.field
        n = self.dim(j + 1)
        out = [0] * n
        cols = self.left[j][arrow] if j < len(self.left) else None
        if cols is None:
            return out
        for c, col in zip(vec, cols):
            if c and col is not None:
                for i, a in enumerate(col):
                    if a:
                        out[i] += c * a
        return [F.norm(a) for a in out]

    def hilbert_function(self):
        return [len(b) for b in self.basis]

    # ---- invariant checks ------------------------------------------------
    def check_generation(self) -> bool:
        """``A_1 * A_j == A_{j+1}`` for every ``j+1 <= cap``."""
        F = self.field
        for j in range(self.cap):
            n = self.dim(j + 1)
            if n == 0:
                continue
            images = []
            for ai in range(len(self.quiver.arrows)):
                for k in range(self.dim(j)):
                    e = [0] * self.dim(j)
                    e[k] = 1
                    images.append(self.left_action(ai, j, e))
            if rank(F, images, n) != n:
                return False
        return True


def _left_mult(arrow, p: Path):
    if arrow.source != p.target:
        return None
    return Path((arrow.id,) + p.arrows, p.source, arrow.target)


def _right_mult(p: Path, arrow):
    if p.source != arrow.target:
        return None
    return Path(p.arrows + (arrow.id,), arrow.source, p.target)


def build_quotient(quiver: Quiver, relations, degree_cap: int, field: Field = QQ) -> GradedQuotientAlgebra:
    if degree_cap < 0:
        raise CapTooSmall("degree cap must be non-negative")
    relations = list(relations)
    report = validate_relations(quiver, relations)
    if any(d == 0 for d in report.degrees):
        raise ValidationError("relations of length 0 would remove vertices")
    F = field
    A = GradedQuotientAlgebra(quiver, relations, degree_cap, field)
    ideal_prev = []  # basis of I_{j-1} as {path: coeff}
    for j in range(degree_cap + 1):
        if A.top_degree is not None:
            A.paths.append([])
            A.basis.append([])
            A.nf.append({})
            continue
        paths = enumerate_paths(quiver, j)
        index = {p: i for i, p in enumerate(paths)}
        n = len(paths)
        E = Echelon(F, n)

        def add(terms):
            v = [0] * n
            for p, c in terms:
                v[index[p]] = F.norm(v[index[p]] + c)
            E.add(v)

        for rel, deg in zip(relations, report.degrees):
            if deg == j:
                add([(p, F(c)) for p, c in rel.terms])
        for elem in ideal_prev:
            for arrow in quiver.arrows:
                add([(q, c) for q, c in ((_left_mult(arrow, p), c) for p, c in elem.items()) if q])
                add([(q, c) for q, c in ((_right_mult(p, arrow), c) for p, c in elem.items()) if q])
        rows = E.rows
        pivots = {p for p, _, _ in rows}
        basis_idx = [i for i in range(n) if i not in pivots]
        pos = {i: k for k, i in enumerate(basis_idx)}
        nf = {}
        for i in basis_idx:
            v = [0] * len(basis_idx)
            v[pos[i]] = F.one
            nf[paths[i]] = v
        for p, row, _ in rows:
            nf[paths[p]] = [F.norm(-row[i]) for i in basis_idx]
        A.paths.append(paths)
        A.basis.append([paths[i] for i in basis_idx])
        A.nf.append(nf)
        ideal_prev = [{paths[i]: a for i, a in enumerate(row) if a} for _, row, _ in rows]
        if j > 0 and not basis_idx:
            A.top_degree = j - 1
    for j in range(degree_cap):
        per_arrow = []
        for arrow in quiver.arrows:
            cols = []
            for b in A.basis[j]:
                q = _left_mult(arrow, b)
                if q is None or j + 1 > degree_cap or not A.basis[j + 1]:
                    cols.append(None)
                else:
                    cols.append(A.nf[j + 1][q])
            per_arrow.append(cols)
        A.left.append(per_arrow)
    return A


def hilbert_function(A: GradedQuotientAlgebra):
    return A.hilbert_function()
