"""Quivers, paths and homogeneous relations.

Composition is function-style: in a written product ``p*q`` the path ``q``
is traversed first. A :class:`Path` stores its arrows in written order, so
``Path(("a2", "a1"), ...)`` means ``a1`` then ``a2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonHomogeneous, NonParallel, UnknownSymbol, ValidationError


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "arrows", tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex id")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate arrow id")
        if set(ids) & set(self.vertices):
            raise ValidationError("arrow ids must differ from vertex ids")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise UnknownSymbol(f"arrow {a.id} has an undeclared endpoint")

    @property
    def arrow_map(self):
        return {a.id: a for a in self.arrows}

    def vertex_index(self, v) -> int:
        return self.vertices.index(v)

    def arrow_index(self, a) -> int:
        return [x.id for x in self.arrows].index(a)

    def idempotent(self, v) -> "Path":
        if v not in self.vertices:
            raise UnknownSymbol(f"unknown vertex {v!r}")
        return Path((), v, v)

    def path(self, *arrow_ids) -> "Path":
        """Written product of arrows, e.g. ``Q.path("b1", "a1")`` for b1*a1."""
        amap = self.arrow_map
        for x in arrow_ids:
            if x not in amap:
                raise UnknownSymbol(f"unknown arrow {x!r}")
        if not arrow_ids:
            raise ValueError("use idempotent() for length-0 paths")
        for left, right in zip(arrow_ids, arrow_ids[1:]):
            if amap[right].target != amap[left].source:
                raise ValidationError(f"{left}*{right} is not composable")
        return Path(tuple(arrow_ids), amap[arrow_ids[-1]].source, amap[arrow_ids[0]].target)


@dataclass(frozen=True)
class Path:
    arrows: tuple
    source: str
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self):
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"


@dataclass(frozen=True)
class Relation:
    """A formal combination ``sum c_i p_i`` of paths with rational coefficients."""

    terms: tuple = field(default=())

    def __post_init__(self):
        merged = {}
        for p, c in self.terms:
            merged[p] = merged.get(p, 0) + Fraction(c)
        terms = tuple((p, c) for p, c in merged.items() if c != 0)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *pairs):
        """``Relation.of((1, p), (-1, q))``."""
        return cls(tuple((p, c) for c, p in pairs))

    @property
    def paths(self):
        return [p for p, _ in self.terms]

    @property
    def degree(self):
        lengths = {p.length for p in self.paths}
        return lengths.pop() if len(lengths) == 1 else None

    def __str__(self):
        out = []
        for p, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(p) if mag == 1 else f"{mag}*{p}"
            out.append((sign, body))
        if not out:
            return "0"
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def _order_key(quiver: Quiver, path: Path):
    if path.length == 0:
        return (0, (quiver.vertex_index(path.source),))
    idx = {a.id: i for i, a in enumerate(quiver.arrows)}
    return (path.length, tuple(idx[a] for a in path.arrows))


def enumerate_paths(quiver: Quiver, degree: int):
    """All paths of length ``degree``, ordered by arrow declaration index."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return [Path((), v, v) for v in quiver.vertices]
    paths = [Path((a.id,), a.source, a.target) for a in quiver.arrows]
    for _ in range(degree - 1):
        paths = [
            Path((a.id,) + p.arrows, p.source, a.target)
            for p in paths
            for a in quiver.arrows
            if a.source == p.target
        ]
    return sorted(paths, key=lambda p: _order_key(quiver, p))


def reverse_relation(quiver: Quiver, rel: Relation) -> Relation:
    """Re-read a relation written in left-to-right (diagrammatic) order."""
    amap = quiver.arrow_map
    terms = []
    for p, c in rel.terms:
        if p.length == 0:
            terms.append((p, c))
        else:
            rev = tuple(reversed(p.arrows))
            terms.append((Path(rev, amap[rev[-1]].source, amap[rev[0]].target), c))
    return Relation(tuple(terms))


@dataclass
class ValidationReport:
    valid: bool
    degrees: list
    message: str = ""


def _check_path(quiver: Quiver, p: Path, compose: str):
    amap = quiver.arrow_map
    arrows = p.arrows if compose == "right" else tuple(reversed(p.arrows))
    for x in arrows:
        if x not in amap:
            raise UnknownSymbol(f"unknown arrow {x!r}")
    for left, right in zip(arrows, arrows[1:]):
        if amap[right].target != amap[left].source:
            return None
    if not arrows:
        return (p.source, p.source)
    return (amap[arrows[-1]].source, amap[arrows[0]].target)


def validate_relations(quiver: Quiver, relations, compose: str = "right") -> ValidationReport:
    """Check that each relation is homogeneous and parallel.

    ``compose="left"`` reads the stored arrow sequences diagrammatically
    instead; relations that are parallel under one convention are usually
    not under the other.
    """
    if compose not in ("right", "left"):
        raise ValueError("compose must be 'right' or 'left'")
    degrees = []
    for rel in relations:
        if not rel.terms:
            degrees.append(None)
            continue
        if rel.degree is None:
            raise NonHomogeneous(f"relation {rel} mixes path lengths")
        ends = set()
        for p in rel.paths:
            e = _check_path(quiver, p, compose)
            if e is None:
                raise NonParallel(f"relation {rel}: {p} is not a path under compose={compose}")
            ends.add(e)
        if len(ends) != 1:
            raise NonParallel(f"relation {rel} has terms with different endpoints")
        degrees.append(rel.degree)
    return ValidationReport(True, degrees)
