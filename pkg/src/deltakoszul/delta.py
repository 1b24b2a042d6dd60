"""The resolution map δ, good-map checks and the closed-form δ functions."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadD, BadN0, InsufficientRange, MissingD

DELTA_KOSZUL = "δ-Koszul"
DETERMINED_UNKNOWN = "δ-resolution determined (goodness unknown)"
NOT_DETERMINED = "not resolution-determined"


@dataclass(frozen=True)
class DeltaMap:
    values: tuple  # δ(n) or None for a multi-degree step
    intervals: tuple  # (min, max) generator degree per step; None if P_n = 0

    @property
    def single_degree(self):
        return tuple(v is not None for v in self.values)

    @property
    def n_max(self):
        return len(self.values) - 1

    @property
    def defined(self) -> bool:
        return all(self.single_degree)

    @property
    def strictly_increasing(self) -> bool:
        vals = self.values
        return self.defined and all(a < b for a, b in zip(vals, vals[1:]))

    @property
    def resolution_determined(self) -> bool:
        """Every computed step is generated in one degree and δ increases."""
        return self.strictly_increasing

    def first_multi_degree_step(self):
        for n, v in enumerate(self.values):
            if v is None:
                return n
        return None

    def __getitem__(self, n):
        return self.values[n]

    @classmethod
    def from_values(cls, values):
        values = tuple(values)
        return cls(values, tuple((v, v) for v in values))


def extract_delta(R) -> DeltaMap:
    values, intervals = [], []
    for step in R.steps:
        degs = step.degrees()
        if not degs:
            values.append(None)
            intervals.append(None)
            continue
        intervals.append((degs[0], degs[-1]))
        values.append(degs[0] if len(degs) == 1 else None)
    return DeltaMap(tuple(values), tuple(intervals))


@dataclass(frozen=True)
class GoodMapReport:
    is_good: bool
    n0: int | None
    failure: str | None
    checked_through: int  # largest i at which the axioms were tested
    delta_n0: int | None = None


def is_good_map(delta, n0_hint: int | None = None) -> GoodMapReport:
    """Test the good-map axioms on the available range of ``delta``.

    Without a hint, N0 is the least ``i >= 1`` with ``δ(i) != i``; a map that
    is the identity on the whole range is reported good with N0 = 1.
    """
    vals = delta.values if isinstance(delta, DeltaMap) else tuple(delta)
    n_max = len(vals) - 1
    if any(v is None for v in vals):
        return GoodMapReport(False, None, "δ undefined at a multi-degree step", -1)
    if n0_hint is not None:
        n0 = n0_hint
        if n0 < 1:
            raise ValueError("N0 must be positive")
    else:
        n0 = next((i for i in range(1, n_max + 1) if vals[i] != i), None)
        if n0 is None:
            n0 = 1
    if n_max < n0:
        raise InsufficientRange(f"δ known through {n_max} only; N0 = {n0} needs δ({n0})")
    for i in range(n0):
        if vals[i] != i:
            return GoodMapReport(False, n0, f"δ({i}) = {vals[i]} but should equal {i}", i, vals[n0])
    if n0 >= 3 and vals[n0] != n0 + 1:
        return GoodMapReport(
            False, n0, f"δ({n0}) = {vals[n0]} but N0 >= 3 forces δ(N0) = N0+1", n0, vals[n0]
        )
    for i in range(n0, n_max + 1):
        want = vals[i - n0] + vals[n0]
        if vals[i] != want:
            return GoodMapReport(
                False, n0, f"δ({i}) = {vals[i]} but δ({i - n0}) + δ({n0}) = {want}", i, vals[n0]
            )
    return GoodMapReport(True, n0, None, n_max, vals[n0])


def closed_form_delta(n0: int, i: int, d: int | None = None) -> int:
    """δ for the witness algebras: Koszul (N0=1), d-Koszul (N0=2), A(N0)."""
    if n0 < 1:
        raise BadN0("N0 must be at least 1")
    if i < 0:
        raise ValueError("i must be non-negative")
    if n0 == 1:
        return i
    if n0 == 2:
        if d is None:
            raise MissingD("N0 = 2 needs the d-Koszul parameter d")
        if d < 2:
            raise BadD("d must be at least 2")
        return i * d // 2 if i % 2 == 0 else (i - 1) * d // 2 + 1
    r = i % n0
    return (i - r) * (n0 + 1) // n0 + r


def classify(report: GoodMapReport, resolution_determined: bool) -> str:
    """Apply the good-δ rule: good δ plus a determined resolution means δ-Koszul."""
    if not resolution_determined:
        return NOT_DETERMINED
    if report.is_good:
        return DELTA_KOSZUL
    return DETERMINED_UNKNOWN
