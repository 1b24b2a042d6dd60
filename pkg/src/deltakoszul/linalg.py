"""Dense exact linear algebra over a :class:`~deltakoszul.field.Field`.

Vectors are lists of field elements. Everything uses leftmost-pivot
elimination so results depend only on the input order.
"""
from __future__ import annotations

from .field import Field


def is_zero(v) -> bool:
    return not any(v)


def mat_vec(F: Field, columns, coeffs, dim: int):
    """Combine ``columns`` (vectors of length ``dim``) with ``coeffs``."""
    out = [0] * dim
    for c, col in zip(coeffs, columns):
        if c == 0:
            continue
        for i, a in enumerate(col):
            if a:
                out[i] += c * a
    return [F.norm(a) for a in out]


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Rows stay fully reduced against each other, so a vector is reduced in a
    single pass. With ``track=True`` each row remembers which combination of
    the inserted vectors produced it.
    """

    def __init__(self, F: Field, dim: int, track: bool = False):
        self.F = F
        self.dim = dim
        self.track = track
        self.rows = []  # (pivot, row, combination)
        self.inserted = 0

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return [p for p, _, _ in self.rows]

    def reduce(self, v):
        """Residual of ``v`` modulo the span and the coefficients used."""
        F = self.F
        v = [F.norm(a) for a in v]
        used = []
        for p, row, comb in self.rows:
            c = v[p]
            if c:
                used.append((c, comb))
                v = [F.norm(a - c * b) for a, b in zip(v, row)]
        return v, used

    def contains(self, v) -> bool:
        return is_zero(self.reduce(v)[0])

    def add(self, v) -> bool:
        """Insert ``v``; return True iff it enlarged the span."""
        F = self.F
        idx = self.inserted
        self.inserted += 1
        v, used = self.reduce(v)
        comb = None
        if self.track:
            comb = {idx: F.one}
            for c, other in used:
                for k, a in other.items():
                    comb[k] = F.norm(comb.get(k, 0) - c * a)
        p = next((i for i, a in enumerate(v) if a), None)
        if p is None:
            return False
        inv = F.inv(v[p])
        v = [F.norm(a * inv) for a in v]
        if comb is not None:
            comb = {k: F.norm(a * inv) for k, a in comb.items() if a}
        new_rows = []
        for q, row, c2 in self.rows:
            c = row[p]
            if c:
                row = [F.norm(a - c * b) for a, b in zip(row, v)]
                if comb is not None:
                    c2 = dict(c2)
                    for k, a in comb.items():
                        c2[k] = F.norm(c2.get(k, 0) - c * a)
            new_rows.append((q, row, c2))
        new_rows.append((p, v, comb))
        new_rows.sort(key=lambda t: t[0])
        self.rows = new_rows
        return True

    def basis(self):
        return [list(row) for _, row, _ in self.rows]


def rref(F: Field, vectors, dim: int):
    """Reduced row echelon basis of ``span(vectors)`` and its pivot columns."""
    E = Echelon(F, dim)
    for v in vectors:
        E.add(v)
    return E.basis(), E.pivots


def rank(F: Field, vectors, dim: int) -> int:
    E = Echelon(F, dim)
    for v in vectors:
        E.add(v)
    return len(E)


def nullspace(F: Field, columns, dim: int):
    """Basis (in rref) of ``{x : sum_j x_j columns[j] = 0}``.

    ``columns`` are the images of the source basis vectors, each of length
    ``dim``.
    """
    n = len(columns)
    E = Echelon(F, dim, track=True)
    kernel = []
    for j, col in enumerate(columns):
        v, used = E.reduce(col)
        if is_zero(v):
            x = [0] * n
            x[j] = F.one
            for c, comb in used:
                for k, a in comb.items():
                    x[k] = F.norm(x[k] - c * a)
            kernel.append(x)
            E.inserted += 1
        else:
            E.add(col)
    return rref(F, kernel, n)[0]


class Solver:
    """Solve ``sum_j x_j columns[j] = y`` for many right-hand sides.

    ``reverse=True`` eliminates columns in the opposite order, which picks a
    different particular solution when the system is underdetermined.
    """

    def __init__(self, F: Field, columns, dim: int, reverse: bool = False):
        self.F = F
        self.n = len(columns)
        self.dim = dim
        order = list(range(self.n))
        if reverse:
            order.reverse()
        self.order = order
        self.E = Echelon(F, dim, track=True)
        for j in order:
            self.E.add(columns[j])

    def solve(self, y):
        F = self.F
        v, used = self.E.reduce(y)
        if not is_zero(v):
            return None
        x = [0] * self.n
        for c, comb in used:
            for k, a in comb.items():
                j = self.order[k]
                x[j] = F.norm(x[j] + c * a)
        return x
