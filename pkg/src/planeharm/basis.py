"""Normalized radial functions and plane harmonics on R+ x [-pi, pi].

A spin label (j, m) with |m| <= j and j - m integer addresses the radial
function

    calL_j^m(y) = sqrt((j+m)!/(j-m)!) y^(-m) e^(-y/2) L_{j+m}^(-2m)(y)

and the plane harmonic calZ_j^m(y, phi) = e^(i m phi) calL_j^m(y).  Labels are
stored doubled (two_j = 2j, two_m = 2m) so half-integers stay exact.  For
m > 0 the negative superscript is eliminated through the reflection identity,
which cancels the y^(-m) prefactor analytically and exposes the sign

    calL_j^m = (-1)^(2m) calL_j^(-m),

so both signs of m share one evaluation path
    calL_j^m(y) = s_m sqrt((j-|m|)!/(j+|m|)!) y^|m| e^(-y/2) L_{j-|m|}^(2|m|)(y)
with s_m = -1 exactly when m is a positive half-odd-integer and +1 otherwise.

Half-integer-j harmonics are antiperiodic in phi (functions on the double
cover); the two parity sectors are never mixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, SectorMixingError
from .laguerre import LaguerreIndex, laguerre_deriv, laguerre_eval

__all__ = [
    "SpinIndex",
    "PlanePoint",
    "spin_to_index",
    "index_to_spin",
    "calL",
    "calL_deriv",
    "calZ",
    "ode_residual",
    "sector_labels",
]


@dataclass(frozen=True)
class SpinIndex:
    """Doubled spin labels (two_j, two_m) with |m| <= j and matching parity."""

    two_j: int
    two_m: int

    def __post_init__(self):
        if not isinstance(self.two_j, int) or not isinstance(self.two_m, int):
            raise DomainError("SpinIndex fields must be Python ints")
        if self.two_j < 0:
            raise DomainError(f"need j >= 0, got two_j={self.two_j}")
        if abs(self.two_m) > self.two_j:
            raise DomainError(
                f"need |m| <= j, got two_j={self.two_j}, two_m={self.two_m}"
            )
        if (self.two_j - self.two_m) % 2:
            raise DomainError(
                f"j - m must be an integer, got two_j={self.two_j}, two_m={self.two_m}"
            )

    @classmethod
    def from_jm(cls, j, m) -> "SpinIndex":
        j = Fraction(j)
        m = Fraction(m)
        if (2 * j).denominator != 1 or (2 * m).denominator != 1:
            raise DomainError(f"j and m must be half-integers, got j={j}, m={m}")
        return cls(int(2 * j), int(2 * m))

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.two_m, 2)

    @property
    def sector(self) -> str:
        """"int" for integer j, "half" for half-odd-integer j."""
        return "half" if self.two_j % 2 else "int"


@dataclass(frozen=True)
class PlanePoint:
    """A point of the half-plane, y >= 0 and phi in [-pi, pi]."""

    y: float
    phi: float

    def __post_init__(self):
        if not self.y >= 0.0:
            raise DomainError(f"need y >= 0, got y={self.y}")
        if not (-math.pi <= self.phi <= math.pi):
            raise DomainError(f"need phi in [-pi, pi], got phi={self.phi}")


def sector_labels(sector: str, j_max) -> list[SpinIndex]:
    """All labels of one parity sector with j <= j_max, sorted by (j, m)."""
    if sector not in ("int", "half"):
        raise DomainError(f"sector must be 'int' or 'half', got {sector!r}")
    two_j_max = int(2 * Fraction(j_max))
    start = 0 if sector == "int" else 1
    out = []
    for two_j in range(start, two_j_max + 1, 2):
        for two_m in range(-two_j, two_j + 1, 2):
            out.append(SpinIndex(two_j, two_m))
    return out


def spin_to_index(s: SpinIndex) -> LaguerreIndex:
    """(j, m) -> (n, alpha) = (j + m, -2m)."""
    return LaguerreIndex((s.two_j + s.two_m) // 2, -s.two_m)


def index_to_spin(idx: LaguerreIndex) -> SpinIndex:
    """(n, alpha) -> (j, m) = (n + alpha/2, -alpha/2).

    Defined exactly when the result is a valid spin label, which requires
    2n + alpha >= |alpha| on top of n >= 0.
    """
    two_j = 2 * idx.n + idx.alpha
    two_m = -idx.alpha
    if two_j < 0 or abs(two_m) > two_j:
        raise DomainError(
            f"(n={idx.n}, alpha={idx.alpha}) has no spin label: |m| <= j fails"
        )
    return SpinIndex(two_j, two_m)


def _radial_parts(s: SpinIndex):
    """Shared pieces of the single evaluation path.

    Returns (sign, prefactor, half_power, degree, superscript) where the
    radial function is sign * prefactor * y**half_power * e^(-y/2) *
    L_degree^(superscript)(y).
    """
    abs2m = abs(s.two_m)
    k = (s.two_j - abs2m) // 2
    a = abs2m
    # sqrt((j-|m|)! / (j+|m|)!) through log-gamma; k and k+a are plain ints.
    pref = math.exp(0.5 * (math.lgamma(k + 1) - math.lgamma(k + a + 1)))
    sign = -1.0 if (s.two_m > 0 and s.two_m % 2) else 1.0
    return sign, pref, 0.5 * abs2m, k, a


def calL(s: SpinIndex, y):
    """Normalized radial function calL_j^m at y >= 0.

    Orthonormal on the half-line at fixed m:
    integral(0..inf) calL_j^m calL_j'^m dy = delta_{j j'}.
    """
    y = np.asarray(y, dtype=float)
    if np.any(y < 0):
        raise DomainError("calL needs y >= 0")
    sign, pref, b, k, a = _radial_parts(s)
    val = sign * pref * y**b * np.exp(-0.5 * y) * laguerre_eval(k, a, y)
    return val if val.ndim else float(val)


def calL_deriv(s: SpinIndex, y, order: int = 1):
    """First or second y-derivative of calL_j^m, in closed form, for y > 0."""
    if order not in (0, 1, 2):
        raise DomainError(f"order must be 0, 1, or 2, got {order}")
    if order == 0:
        return calL(s, y)
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("calL_deriv needs y > 0")
    sign, pref, b, k, a = _radial_parts(s)
    P = laguerre_eval(k, a, y)
    dP = laguerre_deriv(k, a, y, 1)
    if order == 1:
        inner = y**b * (dP - 0.5 * P)
        if b:
            inner = inner + b * y ** (b - 1) * P
    else:
        ddP = laguerre_deriv(k, a, y, 2)
        inner = y**b * (ddP - dP + 0.25 * P)
        if b:
            inner = inner + b * y ** (b - 1) * (2.0 * dP - P)
            inner = inner + b * (b - 1) * y ** (b - 2) * P
    val = sign * pref * np.exp(-0.5 * y) * inner
    return val if val.ndim else float(val)


def calZ(s: SpinIndex, point) -> complex:
    """Plane harmonic calZ_j^m = e^(i m phi) calL_j^m(y).

    ``point`` is a PlanePoint or a (y, phi) pair; y may be an ndarray with a
    scalar phi, in which case an ndarray is returned.  Half-integer m gives
    the antiperiodic (double cover) phase.
    """
    if isinstance(point, PlanePoint):
        y, phi = point.y, point.phi
    else:
        y, phi = point
    m = 0.5 * s.two_m
    val = calL(s, y) * np.exp(1j * m * np.asarray(phi, dtype=float))
    return val if getattr(val, "ndim", 0) else complex(val)


def ode_residual(s: SpinIndex, y):
    """Defect of the radial differential equation at y > 0.

    Evaluates [y d2/dy2 + d/dy - m^2/y - y/4 + j + 1/2] calL_j^m, which is
    identically zero in exact arithmetic.
    """
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("ode_residual needs y > 0")
    j = 0.5 * s.two_j
    m = 0.5 * s.two_m
    f = calL(s, y)
    df = calL_deriv(s, y, 1)
    ddf = calL_deriv(s, y, 2)
    val = y * ddf + df - (m * m / y) * f - 0.25 * y * f + (j + 0.5) * f
    return val if val.ndim else float(val)


def require_same_sector(a: SpinIndex, b: SpinIndex) -> None:
    if a.sector != b.sector:
        raise SectorMixingError(
            f"labels {a} and {b} live in different parity sectors"
        )
