"""Curvature of diagonal left-invariant metrics.

Frame indices in the public functions are 1-based (``Y_1 .. Y_4``) to match
the usual labelling of the geometries; arrays returned are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .lie_algebra import StructureConstants

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@dataclass(frozen=True)
class DiagonalMetric:
    """Coefficients (A, B, C, D) of a metric diagonal in the frame Y_1..Y_4."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in "abcd":
            v = float(getattr(self, name))
            if not (np.isfinite(v) and v > 0.0):
                raise ValueError(f"metric coefficient {name.upper()} must be positive, got {v}")
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, values: Sequence[float]) -> "DiagonalMetric":
        vals = [float(v) for v in values]
        if len(vals) != 4:
            raise ValueError("a diagonal metric needs exactly four coefficients")
        return cls(*vals)

    @property
    def values(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def scaled(self, s: float) -> "DiagonalMetric":
        return DiagonalMetric.of(s * self.values)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))


@dataclass(frozen=True)
class CurvatureReport:
    ric_onb: np.ndarray     # Ricci on the orthonormal frame Y_i / sqrt(g_i)
    ric_frame: np.ndarray   # Ricci evaluated on Y_i themselves
    sectional: np.ndarray   # K(Y_i, Y_j) for PAIRS order
    scalar: float


def _as_metric(g) -> np.ndarray:
    vals = g.values if isinstance(g, DiagonalMetric) else np.asarray(g, dtype=float)
    if vals.shape != (4,):
        raise ValueError("expected four metric coefficients")
    if not np.all(vals > 0.0):
        raise ValueError("metric coefficients must be positive")
    return vals


def _constants(C) -> np.ndarray:
    return np.ascontiguousarray(C.c if isinstance(C, StructureConstants) else C, dtype=float)


def _check_index(i: int) -> int:
    if not (isinstance(i, (int, np.integer)) and 1 <= i <= 4):
        raise IndexError(f"frame index must be in 1..4, got {i!r}")
    return int(i) - 1


def ricci_tensor(C, g) -> CurvatureReport:
    """Ricci tensor from the unimodular Ricci formula, plus sectional/scalar data.

    ``C`` is a :class:`StructureConstants` or a product-geometry model
    (anything with ``ricci_onb(g)`` / ``sectional_matrix(g)`` methods).
    """
    vals = _as_metric(g)
    if hasattr(C, "ricci_onb"):
        ric = C.ricci_onb(vals)
        sec = C.sectional_matrix(vals)
    else:
        c = _constants(C)
        ric = kernels.ricci_onb(c, vals)
        sec = kernels.sectional_matrix(c, vals)
    root = np.sqrt(vals)
    return CurvatureReport(
        ric_onb=ric,
        ric_frame=ric * np.outer(root, root),
        sectional=np.array([sec[i - 1, j - 1] for i, j in PAIRS]),
        scalar=float(np.trace(ric)),
    )


def ricci_quadratic(C, g, w: Sequence[float]) -> float:
    """Ric(W, W) for W = sum w_i Ybar_i, evaluated term by term from the formula.

    Independent of the matrix assembly in the kernel; used for the
    polarization checks.
    """
    vals = _as_metric(g)
    c = _constants(C)
    s = np.sqrt(vals)
    b = c * s[:, None, None] / (s[None, :, None] * s[None, None, :])
    w = np.asarray(w, dtype=float)
    ad_w = np.einsum("a,kai->ki", w, b)           # [W, Ybar_i] = ad_w[:, i]
    term1 = -0.5 * np.sum(ad_w ** 2)
    term2 = -0.5 * np.trace(ad_w @ ad_w)
    term3 = 0.25 * np.sum(np.einsum("aij,a->ij", b, w) ** 2)
    return float(term1 + term2 + term3)


def u_operator(C, g, i: int, j: int) -> np.ndarray:
    """Components on Y_1..Y_4 of U(Y_i, Y_j), where
    2<U(X,Y),Z> = <[Z,X],Y> + <X,[Z,Y]> for every Z."""
    p, q = _check_index(i), _check_index(j)
    vals = _as_metric(g)
    c = _constants(C)
    return (c[q, :, p] * vals[q] + c[p, :, q] * vals[p]) / (2.0 * vals)


def sectional_curvature(C, g, i: int, j: int) -> float:
    """K(Y_i, Y_j): the curvature-formula numerator divided by |Y_i|^2 |Y_j|^2."""
    p, q = _check_index(i), _check_index(j)
    if p == q:
        raise ValueError("sectional curvature needs two distinct frame vectors")
    vals = _as_metric(g)
    if hasattr(C, "sectional_matrix"):
        return float(C.sectional_matrix(vals)[p, q])
    return float(kernels.sectional_matrix(_constants(C), vals)[p, q])


def scalar_curvature(C, g) -> float:
    return ricci_tensor(C, g).scalar


def curvature_norm(C, g) -> float:
    """max |K(Y_i, Y_j)| over the six frame planes (proxy for |Rm|)."""
    vals = _as_metric(g)
    if hasattr(C, "sectional_matrix"):
        sec = C.sectional_matrix(vals)
    else:
        sec = kernels.sectional_matrix(_constants(C), vals)
    return float(max(abs(sec[i - 1, j - 1]) for i, j in PAIRS))
