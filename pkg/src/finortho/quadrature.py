"""High-accuracy quadrature and closed-form moment oracles.

Two double-exponential (tanh-sinh family) transformations cover every weight
in scope:

* ``x = exp(pi/2 * sinh t)`` maps the real line onto (0, inf).  Algebraic
  behavior at either endpoint, and the essential-but-vanishing factor
  exp(-x**(-2m)) at 0, are all flattened into doubly-exponential decay in t.
* ``theta = pi/2 * tanh(pi/2 * sinh t)`` maps onto (-pi/2, pi/2) and absorbs
  the cos(theta)**e endpoint singularities of the angular norm integrals.

Node sets are fixed per level (level L uses step h = 2**-L), so every result
is reproducible; refinement stops when two consecutive levels agree to the
requested tolerance.  The environment variable FINORTHO_MAX_QUAD_LEVEL
(default 12) caps the refinement level.

Integrands are evaluated at nodes spanning roughly x in [1e-277, 1e+277];
steep factors should be written in log form (e.g. ``exp(-1/x - 5*log(x))``)
so they underflow to 0 instead of raising OverflowError.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DivergenceError, NonConvergenceError
from .numkernel import LogScaled, as_rational, complex_gamma

_HALF_PI = math.pi / 2.0
_T_HALFLINE = 6.7  # exp(pi/2 * sinh 6.7) ~ 3e277, the edge of double range
DEFAULT_TOL = 1e-12
_FIRST_LEVEL = 3


def max_quad_level() -> int:
    return int(os.environ.get("FINORTHO_MAX_QUAD_LEVEL", "12"))


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    level: int


@lru_cache(maxsize=32)
def halfline_nodes(level: int):
    """Nodes for (0, inf): arrays (x, log_x, w), ordered from small x to large."""
    h = 2.0**-level
    k = np.arange(-math.ceil(_T_HALFLINE / h), math.ceil(_T_HALFLINE / h) + 1)
    t = k * h
    u = _HALF_PI * np.sinh(t)
    x = np.exp(u)
    w = h * _HALF_PI * np.cosh(t) * x
    return x, u, w


@lru_cache(maxsize=32)
def _halfline_nodes_list(level: int):
    x, u, w = halfline_nodes(level)
    return x.tolist(), w.tolist()


def _converge(level_sum, tol: float, what: str) -> QuadResult:
    """Run level_sum(level) -> (S, L1, tail) until two levels agree."""
    top = max_quad_level()
    prev = None
    for level in range(_FIRST_LEVEL, top + 1):
        s, l1, tail = level_sum(level)
        if prev is not None:
            err = abs(s - prev)
            scale = max(l1, 5e-324)
            if err <= tol * scale:
                if tail > max(tol * scale, 1e-280):
                    raise NonConvergenceError(
                        f"{what}: integrand tail unresolved at the node range edge"
                    )
                return QuadResult(s, err, level)
        prev = s
    raise NonConvergenceError(f"{what}: levels still disagree at level {top}")


def integrate_halfline_detail(f, tol: float = DEFAULT_TOL) -> QuadResult:
    def level_sum(level):
        xs, ws = _halfline_nodes_list(level)
        contrib = [w * f(x) for x, w in zip(xs, ws)]
        return (
            math.fsum(contrib),
            math.fsum(map(abs, contrib)),
            max(abs(contrib[0]), abs(contrib[-1])),
        )

    return _converge(level_sum, tol, "integrate_halfline")


def integrate_halfline(f, tol: float = DEFAULT_TOL) -> float:
    """Integral of f over (0, inf) with relative accuracy ~tol."""
    return integrate_halfline_detail(f, tol).value


def integrate_line_even(f, tol: float = DEFAULT_TOL) -> float:
    """Integral of an even function over the whole line: 2x its half-line part."""
    return 2.0 * integrate_halfline(f, tol)


# ---------------------------------------------------------------------------
# (-pi/2, pi/2) rule


def _theta_t_max(endpoint_exponent: float) -> float:
    # node contributions decay like exp(-pi*(1+e)*sinh t); push sinh(T) far
    # enough that the discarded tail is below double precision
    decay = 1.0 + endpoint_exponent
    if decay <= 0.0:
        raise DivergenceError("endpoint exponent must exceed -1")
    return math.asinh(min(max(850.0 / (math.pi * decay), 260.0), 7000.0))


@lru_cache(maxsize=64)
def theta_nodes(level: int, endpoint_exponent: float = 0.0):
    """Nodes for (-pi/2, pi/2): lists (theta, cos_theta, log_cos, log_w).

    cos_theta is computed from the stable complement 1 - |tanh u|, so nodes
    exponentially close to the endpoints keep full relative accuracy;
    log_cos and log_w stay finite even where the plain values underflow.
    """
    h = 2.0**-level
    t_max = _theta_t_max(endpoint_exponent)
    ks = range(-math.ceil(t_max / h), math.ceil(t_max / h) + 1)
    log_h = math.log(h)
    out_theta, out_cos, out_logcos, out_logw = [], [], [], []
    for k in ks:
        t = k * h
        u = _HALF_PI * math.sinh(t)
        au = abs(u)
        # delta = 1 - |tanh u|, exact in the tails
        log1p_e = math.log1p(math.exp(-2.0 * au))
        log_delta = math.log(2.0) - 2.0 * au - log1p_e
        tanh_u = math.tanh(u)
        theta = _HALF_PI * tanh_u
        half_pi_delta = _HALF_PI * math.exp(log_delta)
        if half_pi_delta < 1e-8:
            cos_t = half_pi_delta  # sin(x) = x to double precision here
            log_cos = math.log(_HALF_PI) + log_delta
        else:
            cos_t = math.sin(half_pi_delta)
            log_cos = math.log(cos_t)
        # log of h * (pi/2)**2 * cosh(t) / cosh(u)**2
        log_cosh_u = au + log1p_e - math.log(2.0)
        log_w = log_h + 2.0 * math.log(_HALF_PI) + math.log(math.cosh(t)) - 2.0 * log_cosh_u
        out_theta.append(theta)
        out_cos.append(cos_t)
        out_logcos.append(log_cos)
        out_logw.append(log_w)
    return out_theta, out_cos, out_logcos, out_logw


def integrate_theta(f, tol: float = DEFAULT_TOL, endpoint_exponent: float = 0.0) -> float:
    """Integral of f(theta, cos_theta) over (-pi/2, pi/2).

    ``endpoint_exponent`` is the algebraic decay power of f in cos(theta)
    near the endpoints (0 for bounded integrands); it only widens the node
    range, never changes the rule.
    """

    def level_sum(level):
        thetas, coss, _, logws = theta_nodes(level, endpoint_exponent)
        contrib = [
            f(th, c) * math.exp(lw) if lw > -745.0 else 0.0
            for th, c, lw in zip(thetas, coss, logws)
        ]
        return (
            math.fsum(contrib),
            math.fsum(map(abs, contrib)),
            max(abs(contrib[0]), abs(contrib[-1])),
        )

    return _converge(level_sum, tol, "integrate_theta").value


def theta_integral(expnt: float, q: float, tol: float = DEFAULT_TOL) -> float:
    """Integral of cos(theta)**expnt * exp(q*theta) over (-pi/2, pi/2).

    Requires expnt > -1; the endpoint singularity is handled entirely in log
    space so arbitrarily singular-but-integrable exponents stay accurate.
    """
    expnt = float(expnt)
    q = float(q)
    if expnt <= -1.0:
        raise DivergenceError(f"cos power {expnt} is not integrable")

    def level_sum(level):
        thetas, _, logcs, logws = theta_nodes(level, expnt)
        contrib = []
        for th, lc, lw in zip(thetas, logcs, logws):
            ex = expnt * lc + q * th + lw
            contrib.append(math.exp(ex) if ex > -745.0 else 0.0)
        s = math.fsum(contrib)
        return s, s, max(contrib[0], contrib[-1])

    return _converge(level_sum, tol, "theta_integral").value


def cauchy_cos_moment(r: int, s: float) -> float:
    """Closed form for the integral of cos(t)**r * exp(s*t) over (-pi/2, pi/2).

    Valid for integer r >= 0; the two gamma factors in the denominator are
    conjugates, so the value is real.
    """
    if r < 0 or r != int(r):
        raise ValueError("r must be a nonnegative integer")
    g = complex_gamma(1.0 + complex(r, s) / 2.0)
    return math.pi * 2.0**-r * math.factorial(int(r)) / abs(g) ** 2


# ---------------------------------------------------------------------------
# closed-form moment oracles for the two symmetric weights


def moment_jacobi_type(j: int, a, b, m: int) -> LogScaled:
    """Moment of |x|**(2a) * (1+x**(2m))**b * x**j over the whole line (j even).

    Equals (1/m) * B(e, -b-e) with e = (2a+j+1)/(2m), by substituting
    t = x**(2m); diverges outside 0 < e < -b.
    """
    a, b = as_rational(a), as_rational(b)
    if j % 2:
        raise ValueError("odd moments vanish by symmetry; handled by callers")
    e = (2 * a + j + 1) / (2 * m)
    if not (0 < e < -b):
        raise DivergenceError(f"jacobi-type moment diverges: exponent {e}, b={b}")
    log_beta = (
        math.lgamma(float(e)) + math.lgamma(float(-b - e)) - math.lgamma(float(-b))
    )
    return LogScaled(1, log_beta - math.log(m))


def moment_bessel_type(j: int, a, m: int) -> LogScaled:
    """Moment of |x|**(2a) * exp(-x**(-2m)) * x**j over the whole line (j even).

    Equals (1/m) * Gamma(-(2a+j+1)/(2m)); diverges unless 2a+j+1 < 0.
    """
    a = as_rational(a)
    if j % 2:
        raise ValueError("odd moments vanish by symmetry; handled by callers")
    if 2 * a + j + 1 >= 0:
        raise DivergenceError(f"bessel-type moment diverges for 2a+j+1 = {2*a+j+1}")
    arg = -(2 * a + j + 1) / (2 * m)
    return LogScaled(1, math.lgamma(float(arg)) - math.log(m))
