"""Sparse exact-coefficient polynomials in one variable with parity tracking.

Coefficients are Fractions; floats appear only at evaluation time.  The
incomplete families populate exponents only on arithmetic lattices, so the
term map stays small even when degrees get large.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .numkernel import as_rational

PARITY_EVEN = "even"
PARITY_ODD = "odd"
PARITY_NONE = "none"


def _parity_of(terms: dict) -> str:
    if all(e % 2 == 0 for e in terms):
        return PARITY_EVEN
    if all(e % 2 == 1 for e in terms):
        return PARITY_ODD
    return PARITY_NONE


@dataclass(frozen=True)
class SparseSymPoly:
    """Exponent -> coefficient map with a derived parity tag.

    Instances are immutable values; all operations return new polynomials.
    The zero polynomial has no terms, parity "even", and degree -1.
    """

    terms: dict = field(default_factory=dict)
    parity: str = PARITY_EVEN

    @classmethod
    def from_terms(cls, terms) -> "SparseSymPoly":
        clean = {}
        for e, c in dict(terms).items():
            c = as_rational(c)
            if c != 0:
                if e < 0:
                    raise ValueError("negative exponent")
                clean[int(e)] = c
        return cls(clean, _parity_of(clean))

    @classmethod
    def zero(cls) -> "SparseSymPoly":
        return cls({}, PARITY_EVEN)

    @classmethod
    def one(cls) -> "SparseSymPoly":
        return cls.from_terms({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "SparseSymPoly":
        return cls.from_terms({exponent: coeff})

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[self.degree]

    def coefficient(self, exponent: int) -> Fraction:
        return self.terms.get(exponent, Fraction(0))

    def eval(self, x: float) -> float:
        return math.fsum(float(c) * x**e for e, c in self.terms.items())

    def eval_exact(self, x) -> Fraction:
        x = as_rational(x)
        out = Fraction(0)
        for e, c in self.terms.items():
            out += c * x**e
        return out

    def derivative(self, order: int = 1) -> "SparseSymPoly":
        p = self
        for _ in range(order):
            p = SparseSymPoly.from_terms(
                {e - 1: c * e for e, c in p.terms.items() if e > 0}
            )
        return p

    def __add__(self, other: "SparseSymPoly") -> "SparseSymPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return SparseSymPoly.from_terms(out)

    def __sub__(self, other: "SparseSymPoly") -> "SparseSymPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "SparseSymPoly") -> "SparseSymPoly":
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return SparseSymPoly.from_terms(out)

    def scale(self, factor) -> "SparseSymPoly":
        factor = as_rational(factor)
        if factor == 0:
            return SparseSymPoly.zero()
        return SparseSymPoly.from_terms({e: c * factor for e, c in self.terms.items()})

    def compose_power(self, inner_exponent: int, prefactor_exponent: int = 0) -> "SparseSymPoly":
        """Return x**prefactor_exponent * self(x**inner_exponent)."""
        if inner_exponent < 1:
            raise ValueError("inner exponent must be positive")
        if prefactor_exponent < 0:
            raise ValueError("prefactor exponent must be nonnegative")
        return SparseSymPoly.from_terms(
            {prefactor_exponent + inner_exponent * e: c for e, c in self.terms.items()}
        )

    def monic(self) -> "SparseSymPoly":
        lead = self.leading_coefficient()
        if lead == 0:
            raise ZeroDivisionError("cannot normalize the zero polynomial")
        return self.scale(1 / lead)

    def to_json_dict(self) -> dict:
        return {
            "parity": self.parity,
            "terms": [
                {"exp": e, "num": str(self.terms[e].numerator), "den": str(self.terms[e].denominator)}
                for e in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SparseSymPoly":
        terms = {
            int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]
        }
        poly = cls.from_terms(terms)
        if data.get("parity") not in (None, poly.parity):
            raise ValueError(
                f"declared parity {data['parity']!r} does not match terms ({poly.parity})"
            )
        return poly
