"""Text format for algebra presentations.

Grammar (one item per line, ``#`` starts a comment)::

    file      := { header | arrow | relation }
    header    := "field:" ("rational" | "prime" [INT])
               | "compose:" ("right" | "left")
               | "cap:" INT
               | "vertices:" IDENT { [","] IDENT }
               | "arrows:" | "relations:"
    arrow     := IDENT ":" IDENT "->" IDENT          (inside arrows:)
    relation  := [sign] term { sign term }            (inside relations:)
    term      := [coeff "*"] IDENT { "*" IDENT }
    coeff     := INT [ "/" INT ]
    sign      := "+" | "-"

With ``compose: right`` (the default) ``x*y`` means ``y`` first, then ``x``;
``compose: left`` reads products left to right.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DeltaKoszulError, ValidationError
from .field import QQ, Field, default_field, field_from_spec
from .quiver import Path, Quiver, Relation, UnknownSymbol, validate_relations


class AlgebraSyntaxError(DeltaKoszulError):
    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        got = f", found {found!r}" if found else ""
        super().__init__(f"line {line}, column {column}: expected {expected}{got}")


class SemanticError(ValidationError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass
class AlgebraFile:
    quiver: Quiver
    relations: list
    field: Field = QQ
    compose: str = "right"
    cap: int | None = None

    def __eq__(self, other):
        if not isinstance(other, AlgebraFile):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and list(self.relations) == list(other.relations)
            and self.field == other.field
            and self.compose == other.compose
            and self.cap == other.cap
        )


_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[*+\-/:,]))"
)


def _tokens(text: str, lineno: int, offset: int = 0):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = offset + pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise AlgebraSyntaxError(lineno, col, "a token", text[pos:].strip()[:1])
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, toks, lineno, eol_col):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.eol_col = eol_col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, kind=None, value=None, expected=None):
        tok = self.peek()
        if tok is None:
            raise AlgebraSyntaxError(self.lineno, self.eol_col, expected or value or kind, "end of line")
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise AlgebraSyntaxError(self.lineno, tok[2], expected or value or kind, tok[1])
        self.i += 1
        return tok

    def done(self):
        return self.i >= len(self.toks)

    def expect_end(self):
        tok = self.peek()
        if tok is not None:
            raise AlgebraSyntaxError(self.lineno, tok[2], "end of line", tok[1])


def _parse_relation(cur: _Cursor):
    """Return ``[(coeff, [arrow ids as written], column), ...]``."""
    terms = []
    sign = 1
    first = True
    while True:
        tok = cur.peek()
        if tok is not None and tok[1] in "+-" and tok[0] == "op":
            cur.next()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            cur.next(value="'+' or '-'")
        tok = cur.peek()
        if tok is None:
            cur.next(expected="a term")
        col = tok[2]
        coeff = Fraction(1)
        if tok[0] == "num":
            cur.next()
            coeff = Fraction(int(tok[1]))
            if cur.peek() is not None and cur.peek()[1] == "/":
                cur.next()
                den = cur.next(kind="num", expected="denominator")
                if int(den[1]) == 0:
                    raise AlgebraSyntaxError(cur.lineno, den[2], "nonzero denominator", den[1])
                coeff /= int(den[1])
            cur.next(value="*", expected="'*' after coefficient")
        arrows = [cur.next(kind="ident", expected="arrow name")[1]]
        while cur.peek() is not None and cur.peek()[1] == "*":
            cur.next()
            arrows.append(cur.next(kind="ident", expected="arrow name")[1])
        terms.append((sign * coeff, arrows, col))
        first = False
        if cur.done():
            return terms


def parse_algebra(text: str, field: Field | None = None) -> AlgebraFile:
    """Parse a presentation; ``field`` is the fallback when no header is given."""
    fld = None
    compose = "right"
    cap = None
    vertices = []
    arrows = []
    raw_relations = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        eol = len(line.rstrip()) + 1
        m = re.match(r"\s*(field|compose|cap|vertices|arrows|relations)\s*:", line)
        if m:
            key = m.group(1)
            rest = line[m.end():]
            cur = _Cursor(_tokens(rest, lineno, m.end()), lineno, eol)
            if key == "field":
                try:
                    fld = field_from_spec(rest.strip())
                except ValueError:
                    raise AlgebraSyntaxError(lineno, m.end() + 1, "'rational' or 'prime [p]'", rest.strip())
            elif key == "compose":
                tok = cur.next(kind="ident", expected="'right' or 'left'")
                if tok[1] not in ("right", "left"):
                    raise AlgebraSyntaxError(lineno, tok[2], "'right' or 'left'", tok[1])
                cur.expect_end()
                compose = tok[1]
            elif key == "cap":
                cap = int(cur.next(kind="num", expected="integer cap")[1])
                cur.expect_end()
            elif key == "vertices":
                while not cur.done():
                    tok = cur.peek()
                    if tok[1] == ",":
                        cur.next()
                        continue
                    if tok[0] not in ("ident", "num"):
                        raise AlgebraSyntaxError(lineno, tok[2], "vertex name", tok[1])
                    cur.next()
                    vertices.append((tok[1], lineno))
                section = None
            else:
                cur.expect_end()
                section = key
            continue
        cur = _Cursor(_tokens(line, lineno), lineno, eol)
        if section == "arrows":
            name = cur.next(kind="ident", expected="arrow name")[1]
            cur.next(value=":", expected="':'")
            src = cur.next(expected="source vertex")
            if src[0] not in ("ident", "num"):
                raise AlgebraSyntaxError(lineno, src[2], "source vertex", src[1])
            cur.next(kind="arrow", expected="'->'")
            tgt = cur.next(expected="target vertex")
            if tgt[0] not in ("ident", "num"):
                raise AlgebraSyntaxError(lineno, tgt[2], "target vertex", tgt[1])
            cur.expect_end()
            arrows.append((name, src[1], tgt[1], lineno))
        elif section == "relations":
            raw_relations.append((_parse_relation(cur), lineno))
        else:
            tok = cur.peek()
            raise AlgebraSyntaxError(lineno, tok[2], "a header such as 'arrows:' or 'relations:'", tok[1])

    names = [v for v, _ in vertices]
    for v, ln in vertices:
        if names.count(v) > 1:
            raise SemanticError(ln, f"duplicate vertex {v!r}")
    seen = set()
    for name, src, tgt, ln in arrows:
        if name in seen:
            raise SemanticError(ln, f"duplicate arrow {name!r}")
        seen.add(name)
        if name in names:
            raise SemanticError(ln, f"arrow {name!r} clashes with a vertex name")
        for v in (src, tgt):
            if v not in names:
                raise SemanticError(ln, f"unknown vertex {v!r}")
    quiver = Quiver(names, [(n, s, t) for n, s, t, _ in arrows])
    amap = quiver.arrow_map
    relations = []
    for terms, ln in raw_relations:
        rel_terms = []
        for coeff, written, _ in terms:
            for a in written:
                if a not in amap:
                    raise SemanticError(ln, f"unknown arrow {a!r}")
            internal = written if compose == "right" else list(reversed(written))
            for left, right in zip(internal, internal[1:]):
                if amap[right].target != amap[left].source:
                    raise SemanticError(ln, f"{'*'.join(written)} is not composable (compose: {compose})")
            path = Path(tuple(internal), amap[internal[-1]].source, amap[internal[0]].target)
            rel_terms.append((path, coeff))
        relations.append(Relation(tuple(rel_terms)))
    validate_relations(quiver, relations)
    if fld is None:
        fld = field if field is not None else default_field()
    return AlgebraFile(quiver, relations, fld, compose, cap)


def _format_term(path: Path, coeff: Fraction, compose: str):
    arrows = path.arrows if compose == "right" else tuple(reversed(path.arrows))
    body = "*".join(arrows)
    mag = abs(coeff)
    if mag != 1:
        body = f"{mag}*{body}"
    return ("-" if coeff < 0 else "+"), body


def format_algebra(doc: AlgebraFile, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"field: {doc.field.spec()}")
    lines.append(f"compose: {doc.compose}")
    if doc.cap is not None:
        lines.append(f"cap: {doc.cap}")
    lines.append("vertices: " + " ".join(doc.quiver.vertices))
    lines.append("arrows:")
    for a in doc.quiver.arrows:
        lines.append(f"  {a.id}: {a.source} -> {a.target}")
    lines.append("relations:")
    for rel in doc.relations:
        if not rel.terms:
            continue
        parts = [_format_term(p, c, doc.compose) for p, c in rel.terms]
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        lines.append(f"  {text}")
    return "\n".join(lines) + "\n"


def load_algebra(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


__all__ = [
    "AlgebraFile",
    "AlgebraSyntaxError",
    "SemanticError",
    "UnknownSymbol",
    "format_algebra",
    "load_algebra",
    "parse_algebra",
]
