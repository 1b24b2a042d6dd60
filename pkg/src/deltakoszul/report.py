"""Structured results and their JSON encoding."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from importlib import resources

CONVENTIONS = [
    "products are composed function-style: in p*q the path q acts first",
    "P_v denotes the indecomposable projective A*e_v; A = sum of all P_v",
    "a generator (v, j, m) means m copies of P_v with generators in internal degree j",
    "Ext^n classes are dual to the generators of P_n; internal degree = -(generator degree)",
    "Yoneda product: xi*eta = xi composed with the deg(xi)-th lift of eta",
]


@dataclass
class ReportDocument:
    command: str
    algebra: dict | None = None
    hilbert_function: list | None = None
    resolution: list | None = None
    delta: dict | None = None
    good_map: dict | None = None
    classification: str | None = None
    checks: dict | None = None
    ext: list | None = None
    products: list | None = None
    generation: list | None = None
    minimal_generator_degrees: list | None = None
    growth: list | None = None
    conventions: list = field(default_factory=lambda: list(CONVENTIONS))

    def to_dict(self):
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    text = resources.files("deltakoszul").joinpath("schema/report.schema.json").read_text("utf-8")
    return json.loads(text)


def validate_report(data) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` breaks the schema."""
    import jsonschema

    if isinstance(data, ReportDocument):
        data = data.to_dict()
    jsonschema.validate(data, load_schema())


def generator_rows(table) -> list:
    """Bracket-free ``[{vertex, degree, multiplicity}]`` rows of a generator table."""
    return [
        {"vertex": v, "degree": d, "multiplicity": m}
        for (v, d), m in sorted(table.items(), key=lambda kv: (kv[0][1], str(kv[0][0])))
    ]
