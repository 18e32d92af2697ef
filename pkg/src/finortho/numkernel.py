"""Exact rational arithmetic and gamma-family special functions.

Everything in this module is a pure function on immutable values.  Rational
numbers are plain ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator), re-exported here as :data:`Rational`.  Quantities built
from gamma functions that overflow double precision are carried as
:class:`LogScaled` values (sign plus natural log of the magnitude).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PoleError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, floats, and strings like "-51", "1/2", "-0.5".

    Decimal strings are read exactly ("-0.5" becomes -1/2); floats convert via
    their exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def gen_binomial(a, k: int) -> Fraction:
    """Generalized binomial coefficient: (1/k!) * a*(a-1)*...*(a-k+1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = as_rational(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial a*(a+1)*...*(a+k-1), with empty product 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


@dataclass(frozen=True)
class LogScaled:
    """A real number stored as sign and natural log of its absolute value.

    ``sign`` is -1, 0 or +1; ``log_abs`` is ignored when sign is 0.
    Multiplication composes signs and adds logs, so products of huge gamma
    factors never overflow.
    """

    sign: int
    log_abs: float = 0.0

    @classmethod
    def from_rational(cls, value) -> "LogScaled":
        value = as_rational(value)
        if value == 0:
            return cls(0, 0.0)
        sign = 1 if value > 0 else -1
        # math.log accepts arbitrarily large ints, so huge fractions are safe
        return cls(sign, math.log(abs(value.numerator)) - math.log(value.denominator))

    @classmethod
    def from_float(cls, value: float) -> "LogScaled":
        if value == 0.0:
            return cls(0, 0.0)
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    def __mul__(self, other: "LogScaled") -> "LogScaled":
        if self.sign == 0 or other.sign == 0:
            return LogScaled(0, 0.0)
        return LogScaled(self.sign * other.sign, self.log_abs + other.log_abs)

    def __truediv__(self, other: "LogScaled") -> "LogScaled":
        if other.sign == 0:
            raise ZeroDivisionError("division by LogScaled zero")
        if self.sign == 0:
            return LogScaled(0, 0.0)
        return LogScaled(self.sign * other.sign, self.log_abs - other.log_abs)

    def __neg__(self) -> "LogScaled":
        return LogScaled(-self.sign, self.log_abs)

    def to_float(self) -> float:
        """Convert to a plain float; overflows gracefully to +-inf."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > 709.0:
            return math.inf * self.sign
        return self.sign * math.exp(self.log_abs)

    @property
    def log10(self) -> float:
        return self.log_abs / math.log(10.0)

    def rel_diff(self, other) -> float:
        """Relative difference |self/other - 1|, robust for huge magnitudes.

        ``other`` may be a LogScaled, a float, or a Fraction.  Returns inf for
        sign mismatches against a nonzero reference.
        """
        if not isinstance(other, LogScaled):
            other = LogScaled.from_float(float(other))
        if other.sign == 0:
            return 0.0 if self.sign == 0 else math.inf
        if self.sign == 0:
            return 1.0
        if self.sign != other.sign:
            return math.inf
        return abs(math.expm1(self.log_abs - other.log_abs))


def _gamma_sign(x: float) -> int:
    # sign of Gamma(x) for non-pole x: positive on (0, inf), alternating on
    # the negative axis interval by interval
    if x > 0:
        return 1
    return -1 if math.floor(x) % 2 else 1


def real_factorial(z) -> LogScaled:
    """Gamma(z+1) as a LogScaled value; z may be a float or a Fraction.

    Raises PoleError when z+1 is a nonpositive integer.  Negative non-integer
    arguments are fine (math.lgamma handles them through reflection).
    """
    if isinstance(z, (Fraction, int)):
        arg = as_rational(z) + 1
        if arg <= 0 and arg.denominator == 1:
            raise PoleError(f"factorial pole at z = {z}")
        arg_f = float(arg)
    else:
        arg_f = float(z) + 1.0
        if arg_f <= 0 and arg_f == math.floor(arg_f):
            raise PoleError(f"factorial pole at z = {z}")
    return LogScaled(_gamma_sign(arg_f), math.lgamma(arg_f))


# Lanczos approximation, g = 7, 9 coefficients.  Good to ~1e-13 relative over
# the strip needed here; accuracy is pinned down by the tests against mpmath.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def complex_gamma(z: complex) -> complex:
    """Gamma function for complex arguments via the Lanczos series."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc
