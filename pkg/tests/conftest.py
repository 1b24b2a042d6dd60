import pathlib

import pytest

from deltakoszul.algebra import build_quotient
from deltakoszul.family import (
    build_d_koszul_example,
    build_family_algebra,
    build_koszul_example,
    recommended_cap,
)
from deltakoszul.field import QQ
from deltakoszul.resolution import minimal_resolution

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

ACCEPTANCE_RESULTS = {}


def as_oracle_data(quiver, relations):
    """Plain-data presentation for tests/oracles.py."""
    vertices = list(quiver.vertices)
    arrows = [(a.id, a.source, a.target) for a in quiver.arrows]
    rels = [[(c, p.arrows) for p, c in r.terms] for r in relations]
    return vertices, arrows, rels


def family_resolution(n0, steps, field=QQ, cap=None):
    Q, rels = build_family_algebra(n0)
    A = build_quotient(Q, rels, cap if cap is not None else recommended_cap(n0, steps), field)
    return minimal_resolution(A, steps)


def one_loop_resolution(power, steps, field=QQ):
    Q, rels = build_koszul_example() if power == 2 else build_d_koszul_example(power)
    A = build_quotient(Q, rels, steps * power // 2 + power + 2, field)
    return minimal_resolution(A, steps)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
