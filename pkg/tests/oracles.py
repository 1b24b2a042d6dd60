"""Independent oracles built on sympy.

Nothing here calls the package's elimination, quotient or resolution code.
Presentations are plain data: ``vertices``, ``arrows = [(id, src, tgt)]`` and
``relations = [[(coeff, (arrow ids in written order)), ...], ...]`` with
function-style composition (rightmost arrow first).
"""
from __future__ import annotations

from itertools import product

import sympy


def paths_of_length(vertices, arrows, j):
    """All paths as ``(written arrow tuple, source, target)``."""
    if j == 0:
        return [((), v, v) for v in vertices]
    out = []
    for word in product(arrows, repeat=j):
        ok = all(word[i + 1][2] == word[i][1] for i in range(j - 1))
        if ok:
            out.append((tuple(a[0] for a in word), word[-1][1], word[0][2]))
    return out


def _ideal_vectors(vertices, arrows, relations, j):
    amap = {a[0]: a for a in arrows}

    def ends(word):
        return amap[word[-1]][1], amap[word[0]][2]

    vectors = []
    for rel in relations:
        L = len(rel[0][1])
        if L > j:
            continue
        s, t = ends(rel[0][1])
        for a in range(j - L + 1):
            b = j - L - a
            for left in paths_of_length(vertices, arrows, a):
                if left[1] != t:
                    continue
                for right in paths_of_length(vertices, arrows, b):
                    if right[2] != s:
                        continue
                    vectors.append({left[0] + w + right[0]: c for c, w in rel})
    return vectors


def hilbert_blocks(vertices, arrows, relations, j):
    """``{(target, source): dim e_target A_j e_source}`` by brute force."""
    paths = paths_of_length(vertices, arrows, j)
    vecs = _ideal_vectors(vertices, arrows, relations, j)
    out = {}
    for w in vertices:
        for v in vertices:
            block = [p[0] for p in paths if p[1] == v and p[2] == w]
            if not block:
                out[(w, v)] = 0
                continue
            rows = [[vec.get(p, 0) for p in block] for vec in vecs if any(p in vec for p in block)]
            r = sympy.Matrix(rows).rank() if rows else 0
            out[(w, v)] = len(block) - r
    return out


def hilbert_function(vertices, arrows, relations, cap):
    return [sum(hilbert_blocks(vertices, arrows, relations, j).values()) for j in range(cap + 1)]


def predicted_tables(vertices, arrows, relations, top, steps):
    """Generator tables forced by the graded Euler identity ``P(t) H(t) = I``.

    ``H(t)`` is the vertex-indexed Hilbert matrix of ``A`` (nonzero up to
    degree ``top``). When every ``P_n`` is generated in one degree and those
    degrees are distinct, the coefficient of ``t^j`` in ``H(t)^{-1}`` is
    ``(-1)^n`` times the multiplicity matrix of the step living in degree
    ``j``. Returns ``[(degree, {vertex: multiplicity}), ...]`` for the first
    ``steps + 1`` nonzero coefficients.
    """
    n = len(vertices)
    H = []
    for j in range(top + 1):
        blocks = hilbert_blocks(vertices, arrows, relations, j)
        H.append(sympy.Matrix(n, n, lambda a, b: blocks[(vertices[a], vertices[b])]))
    C = [sympy.eye(n)]
    tables = [(0, {v: 1 for v in vertices})]
    j = 0
    while len(tables) < steps + 1:
        j += 1
        acc = sympy.zeros(n, n)
        for i in range(1, min(j, top) + 1):
            acc += H[i] * C[j - i]
        Cj = -acc
        C.append(Cj)
        if Cj.is_zero_matrix:
            continue
        sign = (-1) ** len(tables)
        mult = {}
        for a, v in enumerate(vertices):
            total = sum(sign * Cj[a, b] for b in range(n))
            entries = [sign * Cj[a, b] for b in range(n)]
            if any(e < 0 for e in entries):
                raise AssertionError(f"degree {j}: mixed signs, oracle assumptions fail")
            if total:
                mult[v] = total
        tables.append((j, mult))
    return tables


def quadratic_dual_relations(vertices, arrows, relations):
    """Basis of the orthogonal complement of the quadratic relations, per block."""
    paths = paths_of_length(vertices, arrows, 2)
    quad = [r for r in relations if len(r[0][1]) == 2]
    out = []
    for w in vertices:
        for v in vertices:
            block = [p[0] for p in paths if p[1] == v and p[2] == w]
            if not block:
                continue
            rows = []
            for rel in quad:
                d = {word: c for c, word in rel}
                if any(p in d for p in block):
                    rows.append([d.get(p, 0) for p in block])
            if rows:
                null = sympy.Matrix(rows).nullspace()
            else:
                null = [sympy.eye(len(block))[:, i] for i in range(len(block))]
            for vec in null:
                out.append([(vec[i], block[i]) for i in range(len(block)) if vec[i] != 0])
    return out


def zigzag_presentation(n0):
    vertices = [str(i) for i in range(1, n0 + 1)]
    arrows = []
    for i in range(1, n0):
        arrows.append((f"a{i}", str(i), str(i + 1)))
        arrows.append((f"b{i}", str(i + 1), str(i)))
    rels = []
    for i in range(1, n0 - 1):
        rels.append([(1, (f"a{i}", f"b{i}")), (-1, (f"b{i+1}", f"a{i+1}"))])
        rels.append([(1, (f"a{i+1}", f"a{i}"))])
        rels.append([(1, (f"b{i}", f"b{i+1}"))])
    return vertices, arrows, rels
