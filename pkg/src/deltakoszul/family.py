"""Witness algebras for each N0 and their expected resolution shapes.

``A(N0)`` lives on the zigzag quiver ``1 ⇄ 2 ⇄ ... ⇄ N0`` with
``a_i: i -> i+1`` and ``b_i: i+1 -> i``, modulo
``a_i*b_i - b_{i+1}*a_{i+1}``, ``a_{i+1}*a_i`` and ``b_i*b_{i+1}``.
"""
from __future__ import annotations

from collections import Counter

from .delta import closed_form_delta
from .errors import BadD, BadN0
from .quiver import Quiver, Relation


def build_family_algebra(n0: int):
    if n0 < 3:
        raise BadN0(f"A(N0) needs N0 >= 3, got {n0}; use the Koszul or d-Koszul witnesses")
    vertices = [str(i) for i in range(1, n0 + 1)]
    arrows = []
    for i in range(1, n0):
        arrows.append((f"a{i}", str(i), str(i + 1)))
        arrows.append((f"b{i}", str(i + 1), str(i)))
    Q = Quiver(vertices, arrows)
    rels = []
    for i in range(1, n0 - 1):
        rels.append(Relation.of((1, Q.path(f"a{i}", f"b{i}")), (-1, Q.path(f"b{i+1}", f"a{i+1}"))))
        rels.append(Relation.of((1, Q.path(f"a{i+1}", f"a{i}"))))
        rels.append(Relation.of((1, Q.path(f"b{i}", f"b{i+1}"))))
    return Q, rels


def _one_loop(power: int):
    Q = Quiver(["v"], [("a", "v", "v")])
    return Q, [Relation.of((1, Q.path(*["a"] * power)))]


def build_koszul_example():
    """``k[x]/(x^2)`` on the one-loop quiver."""
    return _one_loop(2)


def build_d_koszul_example(d: int):
    """``k[x]/(x^d)`` on the one-loop quiver."""
    if d < 2:
        raise BadD(f"d must be at least 2, got {d}")
    return _one_loop(d)


def bracket_depth(n0: int, k: int) -> int:
    """Number of nested ``(P_{m+1} ⊕ ... ⊕ P_{N0-m})`` brackets at position ``k`` of a period."""
    if k == 0:
        return 0
    return min(k, n0 - 1 - k)


def expected_resolution_shape(n0: int, n: int) -> Counter:
    """Generator table ``{(vertex, degree): multiplicity}`` of ``P_n`` for ``A(N0)``.

    Position ``k = n mod N0`` carries ``A`` plus ``bracket_depth(N0, k)``
    brackets; a bracket ``(P_a ⊕ ... ⊕ P_b)`` is empty when ``a > b``.
    """
    if n0 < 3:
        raise BadN0("expected shapes are defined for N0 >= 3")
    if n < 0:
        raise ValueError("n must be non-negative")
    degree = closed_form_delta(n0, n)
    mult = Counter({str(v): 1 for v in range(1, n0 + 1)})
    for m in range(1, bracket_depth(n0, n % n0) + 1):
        for v in range(m + 1, n0 - m + 1):
            mult[str(v)] += 1
    return Counter({(v, degree): c for v, c in mult.items()})


def recommended_cap(n0: int, steps: int) -> int:
    return -(-steps * (n0 + 1) // n0) + 2
