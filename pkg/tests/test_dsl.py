from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltakoszul.dsl import (
    AlgebraFile,
    AlgebraSyntaxError,
    SemanticError,
    format_algebra,
    load_algebra,
    parse_algebra,
)
from deltakoszul.errors import NonHomogeneous, ValidationError
from deltakoszul.family import build_family_algebra
from deltakoszul.field import PrimeField, QQ
from deltakoszul.quiver import Quiver, Relation, enumerate_paths


def test_family_fixture_matches_builder(fixtures_dir):
    doc = load_algebra(fixtures_dir / "a3.alg")
    Q, rels = build_family_algebra(3)
    assert doc == AlgebraFile(Q, rels, QQ)


@pytest.mark.parametrize("name", ["a3.alg", "a4.alg", "koszul.alg", "x3.alg", "two_loop.alg"])
def test_fixtures_round_trip(fixtures_dir, name):
    doc = load_algebra(fixtures_dir / name)
    assert parse_algebra(format_algebra(doc)) == doc


def test_headers_and_coefficients():
    doc = parse_algebra(
        "field: prime 7\ncap: 5\nvertices: x, y\narrows:\n  p: x -> y\n  q: x -> y\n"
        "relations:\n  2/3*p - q  # comment\n"
    )
    assert doc.field == PrimeField(7) and doc.cap == 5
    (rel,) = doc.relations
    assert sorted(c for _, c in rel.terms) == [Fraction(-1), Fraction(2, 3)]


def test_left_composition_reverses_products():
    text = "vertices: 1 2 3\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\nrelations:\n"
    right = parse_algebra(text + "  b*a\n")
    left = parse_algebra("compose: left\n" + text + "  a*b\n")
    assert right.relations == left.relations
    with pytest.raises(SemanticError):
        parse_algebra(text + "  a*b\n")


def test_empty_relations_allowed():
    doc = parse_algebra("vertices: v\narrows:\n  a: v -> v\nrelations:\n")
    assert doc.relations == []


@pytest.mark.parametrize(
    "text, message",
    [
        ("vertices: v\narrows:\n  a: v -> w\n", "unknown vertex"),
        ("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a*c\n", "unknown arrow"),
        ("vertices: v v\n", "duplicate vertex"),
        ("vertices: v\narrows:\n  a: v -> v\n  a: v -> v\n", "duplicate arrow"),
    ],
)
def test_semantic_errors(text, message):
    with pytest.raises(SemanticError) as info:
        parse_algebra(text)
    assert message in str(info.value)
    assert isinstance(info.value, ValidationError)


def test_mixed_length_relation_rejected():
    with pytest.raises(NonHomogeneous):
        parse_algebra("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a*a - a\n")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("vertices: v\narrows:\n  a v -> v\n", 3, 5),
        ("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a a\n", 5, 5),
        ("vertices: v\narrows:\n  a: v -> v\nrelations:\n  2 a\n", 5, 5),
        ("compose: sideways\n", 1, 10),
        ("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a*\n", 5, 5),
        ("  a: v -> v\n", 1, 3),
        ("vertices: v\narrows:\n  a: v -> v\nrelations:\n  1/0*a\n", 5, 5),
    ],
)
def test_syntax_error_positions(text, line, column):
    with pytest.raises(AlgebraSyntaxError) as info:
        parse_algebra(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_environment_field_fallback(monkeypatch):
    monkeypatch.setenv("DELTAKOSZUL_FIELD", "prime 5")
    doc = parse_algebra("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a*a\n")
    assert doc.field == PrimeField(5)
    monkeypatch.delenv("DELTAKOSZUL_FIELD")
    assert parse_algebra("vertices: v\n").field == QQ


@st.composite
def documents(draw):
    nv = draw(st.integers(1, 3))
    vertices = [f"v{i}" for i in range(nv)]
    arrows = [
        (f"x{i}", draw(st.sampled_from(vertices)), draw(st.sampled_from(vertices)))
        for i in range(draw(st.integers(1, 4)))
    ]
    Q = Quiver(vertices, arrows)
    length = draw(st.integers(1, 3))
    paths = enumerate_paths(Q, length)
    rels = []
    for _ in range(draw(st.integers(0, 3))):
        if not paths:
            break
        p = draw(st.sampled_from(paths))
        parallel = [q for q in paths if (q.source, q.target) == (p.source, p.target)]
        q = draw(st.sampled_from(parallel))
        c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 4)))
        rel = Relation.of((1, p), (c, q))
        if rel.terms:
            rels.append(rel)
    compose = draw(st.sampled_from(["right", "left"]))
    cap = draw(st.none() | st.integers(0, 9))
    return AlgebraFile(Q, rels, QQ, compose, cap)


@settings(max_examples=60, deadline=None)
@given(documents())
def test_format_parse_round_trip(doc):
    assert parse_algebra(format_algebra(doc, comments=["generated"])) == doc
