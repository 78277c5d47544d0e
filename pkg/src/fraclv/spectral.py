"""Closed-form eigenvalues of 3x3 Jacobians via the characteristic cubic.

The monic characteristic polynomial L(w) = w^3 + a w^2 + b w + c is built from
trace, principal minors and determinant; its roots come from the depressed
cubic w = y - a/3 with

    p = b - a^2/3,  q = 2a^3/27 - a b/3 + c,  delta = q^2/4 + p^3/27.

delta > 0: one real root plus a conjugate pair (Cardano, with the stable
cube-root pairing u, v = -p/(3u) to avoid cancellation); |delta| within a
relative tolerance of zero: repeated real roots; delta < 0: three distinct
real roots by the trigonometric method.  Eigenvalues are reported sorted by
(real, imaginary), complex pairs exactly conjugate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "BRANCH_ONE_REAL_PAIR",
    "BRANCH_REPEATED",
    "BRANCH_THREE_REAL",
    "REPEATED_TOLERANCE_FACTOR",
    "CubicAnalysis",
    "CubicCoefficients",
    "Spectrum",
    "characteristic_cubic",
    "cubic_analysis",
    "cubic_roots",
    "cubic_value",
    "eigenvalues",
    "routh_hurwitz_cubic",
]

BRANCH_ONE_REAL_PAIR = "one-real-pair"
BRANCH_REPEATED = "repeated"
BRANCH_THREE_REAL = "three-real"

# The repeated-root branch fires when |delta| is within rounding of zero.
# p and q are differences of much larger intermediates, so delta's rounding
# floor is eps * (|q|*S_q + p^2*S_p) with S_* the summand magnitudes, not
# eps * max(q^2, |p|^3).  The factor keeps ~50x headroom above that floor for
# exact double roots while staying small enough that collapsing a barely
# split pair cannot breach the 1e-9 residual budget; genuinely split roots
# land in the adjacent branches, which are stable for tiny delta.
REPEATED_TOLERANCE_FACTOR = 64.0


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic L(w) = w^3 + a w^2 + b w + c."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class CubicAnalysis:
    p: float
    q: float
    delta: float
    branch: str


@dataclass(frozen=True)
class Spectrum:
    """Exactly three eigenvalues, sorted by (real, imaginary)."""

    eigenvalues: tuple[complex, complex, complex]
    analysis: CubicAnalysis

    @property
    def max_real(self) -> float:
        return max(w.real for w in self.eigenvalues)


def characteristic_cubic(matrix: Sequence[Sequence[float]]) -> CubicCoefficients:
    """a = -trace, b = sum of principal 2x2 minors, c = -det."""
    m = np.asarray(matrix, dtype=float)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
    a = -(m[0, 0] + m[1, 1] + m[2, 2])
    b = (
        (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        + (m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0])
        + (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    )
    det = (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )
    return CubicCoefficients(a=float(a), b=float(b), c=float(-det))


def cubic_analysis(coeffs: CubicCoefficients) -> CubicAnalysis:
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    delta = q * q / 4.0 + p ** 3 / 27.0
    scale_p = max(abs(b), a * a / 3.0)
    scale_q = max(2.0 * abs(a) ** 3 / 27.0, abs(a * b) / 3.0, abs(c))
    eps = np.finfo(float).eps
    tol = REPEATED_TOLERANCE_FACTOR * eps * (abs(q) * scale_q + p * p * scale_p)
    if abs(delta) <= tol:
        branch = BRANCH_REPEATED
    elif delta > 0.0:
        branch = BRANCH_ONE_REAL_PAIR
    else:
        branch = BRANCH_THREE_REAL
    return CubicAnalysis(p=p, q=q, delta=delta, branch=branch)


def cubic_value(coeffs: CubicCoefficients, w: complex) -> complex:
    """Evaluate L(w) by Horner's rule (residual checks)."""
    return ((w + coeffs.a) * w + coeffs.b) * w + coeffs.c


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def cubic_roots(coeffs: CubicCoefficients) -> Spectrum:
    analysis = cubic_analysis(coeffs)
    p, q = analysis.p, analysis.q
    shift = -coeffs.a / 3.0

    if analysis.branch == BRANCH_REPEATED:
        m = _cbrt(q / 2.0)
        roots = [complex(-2.0 * m + shift), complex(m + shift), complex(m + shift)]
    elif analysis.branch == BRANCH_ONE_REAL_PAIR:
        sq = math.sqrt(analysis.delta)
        # pick the non-cancelling cube-root argument; the partner root follows
        # from u*v = -p/3
        if q <= 0.0:
            u = _cbrt(-q / 2.0 + sq)
        else:
            u = _cbrt(-q / 2.0 - sq)
        v = -p / (3.0 * u)
        y1 = u + v
        re = -y1 / 2.0 + shift
        im = math.sqrt(max(3.0 * y1 * y1 + 4.0 * p, 0.0)) / 2.0
        roots = [complex(y1 + shift), complex(re, -im), complex(re, im)]
    else:
        r = math.sqrt(-p / 3.0)
        arg = 3.0 * math.sqrt(3.0) * q / (2.0 * (-p) ** 1.5)
        phi = math.asin(min(1.0, max(-1.0, arg))) / 3.0
        roots = [
            complex(2.0 * r * math.sin(phi) + shift),
            complex(-2.0 * r * math.sin(phi + math.pi / 3.0) + shift),
            complex(2.0 * r * math.cos(phi + math.pi / 6.0) + shift),
        ]

    roots.sort(key=lambda w: (w.real, w.imag))
    return Spectrum(eigenvalues=tuple(roots), analysis=analysis)


def eigenvalues(matrix: Sequence[Sequence[float]]) -> Spectrum:
    return cubic_roots(characteristic_cubic(matrix))


def routh_hurwitz_cubic(coeffs: CubicCoefficients) -> bool:
    """True iff every root of the monic cubic has negative real part."""
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    return a > 0.0 and c > 0.0 and a * b > c
