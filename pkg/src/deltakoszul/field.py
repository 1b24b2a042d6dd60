"""Exact ground fields: the rationals and prime fields F_p.

Elements are plain Python numbers. Rationals use ``int`` whenever the value
is integral and ``fractions.Fraction`` otherwise; F_p elements are ints in
``range(p)``. Linear algebra routines call :meth:`Field.norm` after every
arithmetic step so both representations share one code path.
"""
from __future__ import annotations

import os
from fractions import Fraction

DEFAULT_PRIME = 32003
FIELD_ENV_VAR = "DELTAKOSZUL_FIELD"


class Field:
    characteristic = 0
    zero = 0
    one = 1

    def norm(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.norm(x)


class Rationals(Field):
    characteristic = 0

    def norm(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.norm(Fraction(1, 1) / x)

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        elif isinstance(x, float):
            raise TypeError("floats are not exact field elements")
        return self.norm(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def spec(self):
        return "rational"


class PrimeField(Field):
    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * self.inv(x.denominator) % self.p
        if isinstance(x, float):
            raise TypeError("floats are not exact field elements")
        return int(x) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def spec(self):
        return f"prime {self.p}"


QQ = Rationals()


def field_from_spec(text: str | None) -> Field:
    """Parse ``rational`` / ``prime`` / ``prime 7`` / ``prime:7``."""
    if text is None:
        return QQ
    words = text.replace(":", " ").split()
    if not words or words[0] in ("rational", "QQ", "Q"):
        if len(words) > 1:
            raise ValueError(f"bad field spec {text!r}")
        return QQ
    if words[0] == "prime":
        if len(words) == 1:
            return PrimeField(DEFAULT_PRIME)
        if len(words) == 2 and words[1].isdigit():
            return PrimeField(int(words[1]))
    raise ValueError(f"bad field spec {text!r}")


def default_field() -> Field:
    return field_from_spec(os.environ.get(FIELD_ENV_VAR))
