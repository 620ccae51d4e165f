"""Structure constants of the 4-dimensional unimodular Lie algebras.

Indices are 0-based in code: ``c[k, i, j]`` is the coefficient of ``X_{k+1}``
in ``[X_{i+1}, X_{j+1}]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

A_CLASSES = tuple(f"A{i}" for i in range(1, 11))
B_CLASSES = tuple(f"B{i}" for i in range(1, 11))
ALL_CLASSES = A_CLASSES + B_CLASSES

# number of radii each product geometry takes
B_RADII = {"B1": 1, "B2": 1, "B3": 1, "B4": 2, "B5": 2, "B6": 2,
           "B7": 1, "B8": 1, "B9": 1, "B10": 1}

ADMISSIBILITY_TOL = 1e-10


class SpecError(ValueError):
    """Invalid geometry specification or class parameters."""


@dataclass(frozen=True)
class StructureConstants:
    """Dense 4x4x4 tensor ``c[k, i, j]`` with ``[X_i, X_j] = c[k, i, j] X_k``."""

    c: np.ndarray

    def __post_init__(self):
        arr = np.array(self.c, dtype=float)
        if arr.shape != (4, 4, 4):
            raise ValueError(f"structure constants must have shape (4, 4, 4), got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "c", arr)

    @classmethod
    def from_brackets(cls, brackets: dict) -> "StructureConstants":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices, i < j implied antisymmetric."""
        c = np.zeros((4, 4, 4))
        for (i, j), rhs in brackets.items():
            for k, v in rhs.items():
                c[k - 1, i - 1, j - 1] += v
                c[k - 1, j - 1, i - 1] -= v
        return cls(c)

    def bracket(self, x: Sequence[float], y: Sequence[float]) -> np.ndarray:
        return np.einsum("kij,i,j->k", self.c, np.asarray(x, float), np.asarray(y, float))

    def antisymmetry_residual(self) -> float:
        return float(np.max(np.abs(self.c + self.c.transpose(0, 2, 1))))

    def unimodularity_residual(self) -> float:
        # trace of ad_{X_i} is sum_k c[k, i, k]
        return float(np.max(np.abs(np.einsum("kik->i", self.c))))

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return bool(np.array_equal(self.c, other.c))

    def __hash__(self):
        return hash(self.c.tobytes())


@dataclass(frozen=True)
class CubicRoots:
    """Log-roots of x^3 - m x^2 + n x - 1 ordered alpha > beta > gamma."""

    alpha: float
    beta: float
    gamma: float

    @property
    def k(self) -> float:
        return self.beta / self.alpha

    @property
    def roots(self) -> np.ndarray:
        return np.exp([self.alpha, self.beta, self.gamma])


@dataclass(frozen=True)
class GeometrySpec:
    """A geometry class plus whatever parameters that class needs.

    ``cls`` is one of A1..A10, B1..B10.  ``k`` is used by A2 and A3, ``mn`` by
    the Sol^4_{m,n} case of A2 (``k`` is then derived), ``radii`` by the
    product geometries.  ``delta`` is fixed by the class (-1 for A9, +1 for A10).
    """

    cls: str
    k: Optional[float] = None
    mn: Optional[tuple] = None
    radii: Optional[tuple] = None
    delta: Optional[int] = field(default=None)

    def __post_init__(self):
        cls = self.cls.upper() if isinstance(self.cls, str) else self.cls
        if cls not in ALL_CLASSES:
            raise SpecError(f"unknown geometry class {self.cls!r}")
        object.__setattr__(self, "cls", cls)

        if cls == "A2" and self.mn is not None:
            m, n = (int(v) for v in self.mn)
            roots = solve_sol_mn(m, n)
            if self.k is not None and abs(self.k - roots.k) > 1e-9:
                raise SpecError("k conflicts with the value implied by (m, n)")
            object.__setattr__(self, "mn", (m, n))
            object.__setattr__(self, "k", roots.k)
        elif self.mn is not None:
            raise SpecError(f"(m, n) only applies to A2, not {cls}")

        if cls in ("A2", "A3"):
            if self.k is None:
                raise SpecError(f"{cls} requires the parameter k")
            k = float(self.k)
            if not np.isfinite(k):
                raise SpecError("k must be finite")
            if cls == "A2" and k < -0.5:
                raise SpecError("A2 requires k >= -1/2 (swap X_2 and X_3 otherwise)")
            object.__setattr__(self, "k", k)
        elif self.k is not None:
            raise SpecError(f"k does not apply to {cls}")

        if cls in B_CLASSES:
            if self.radii is None:
                raise SpecError(f"{cls} requires {B_RADII[cls]} radius/radii")
            radii = tuple(float(r) for r in self.radii)
            if len(radii) != B_RADII[cls]:
                raise SpecError(f"{cls} takes {B_RADII[cls]} radii, got {len(radii)}")
            if any(not r > 0 for r in radii):
                raise SpecError("radii must be positive")
            object.__setattr__(self, "radii", radii)
        elif self.radii is not None:
            raise SpecError(f"radii do not apply to {cls}")

        fixed = {"A9": -1, "A10": 1}.get(cls)
        if fixed is not None:
            if self.delta is not None and int(self.delta) != fixed:
                raise SpecError(f"{cls} has delta = {fixed}")
            object.__setattr__(self, "delta", fixed)
        elif self.delta is not None:
            raise SpecError(f"delta does not apply to {cls}")

    @property
    def is_lie_group(self) -> bool:
        return self.cls in A_CLASSES


def solve_sol_mn(m: int, n: int) -> CubicRoots:
    """Log-roots for Sol^4_{m,n}: the roots of x^3 - m x^2 + n x - 1.

    The roots are assigned largest-first, so ``alpha > 0`` and
    ``k = beta/alpha`` lands in (-1/2, 1).
    """
    if m == n:
        raise SpecError("Sol^4_{m,n} requires m != n")
    # discriminant of x^3 + b x^2 + c x + d with b=-m, c=n, d=-1
    b, c, d = -float(m), float(n), -1.0
    disc = 18 * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2 - 4 * c ** 3 - 27 * d ** 2
    if disc <= ADMISSIBILITY_TOL:
        raise SpecError(f"x^3 - {m}x^2 + {n}x - 1 lacks three distinct real roots")
    roots = np.roots([1.0, b, c, d])
    if np.max(np.abs(roots.imag)) > 1e-9:
        raise SpecError("cubic has complex roots")
    roots = np.sort(roots.real)[::-1]
    if roots[-1] <= ADMISSIBILITY_TOL:
        raise SpecError("cubic has a non-positive root")
    # polish each root with Newton steps on the cubic
    for _ in range(3):
        p = ((roots - m) * roots + n) * roots - 1.0
        dp = (3 * roots - 2 * m) * roots + n
        roots = roots - p / dp
    logs = np.log(roots)
    # the product of roots is 1, so the logs sum to zero; push rounding into gamma
    alpha, beta = float(logs[0]), float(logs[1])
    return CubicRoots(alpha, beta, -alpha - beta)


def admissible_mn(limit: int = 20, start: int = 2) -> list:
    """All (m, n) with start <= m, n <= limit giving three distinct positive roots."""
    found = []
    for m in range(start, limit + 1):
        for n in range(start, limit + 1):
            try:
                solve_sol_mn(m, n)
            except SpecError:
                continue
            found.append((m, n))
    return found


def _catalog(cls: str, k: Optional[float]) -> dict:
    if cls == "A1":
        return {}
    if cls == "A2":
        return {(1, 4): {1: 1.0}, (2, 4): {2: k}, (3, 4): {3: -(k + 1.0)}}
    if cls == "A3":
        return {(1, 4): {1: k, 2: 1.0}, (2, 4): {1: -1.0, 2: k}, (3, 4): {3: -2.0 * k}}
    if cls == "A4":
        return {(1, 4): {2: 1.0}}
    if cls == "A5":
        return {(1, 4): {1: -0.5, 2: 1.0}, (2, 4): {2: -0.5}, (3, 4): {3: 1.0}}
    if cls == "A6":
        return {(1, 4): {2: 1.0}, (2, 4): {3: 1.0}}
    if cls == "A7":
        return {(2, 3): {4: 1.0}, (3, 1): {2: 1.0}, (1, 2): {3: -1.0}}
    if cls == "A8":
        return {(2, 3): {4: -1.0}, (3, 1): {2: 1.0}, (1, 2): {3: 1.0}}
    if cls == "A9":
        return {(2, 3): {1: 1.0}, (3, 1): {2: 1.0}, (1, 2): {3: -1.0}}
    if cls == "A10":
        return {(2, 3): {1: 1.0}, (3, 1): {2: 1.0}, (1, 2): {3: 1.0}}
    raise SpecError(f"{cls} has no Lie-group chart (product geometry)")


def build_structure_constants(spec: GeometrySpec) -> StructureConstants:
    """Canonical-basis structure constants for an A class."""
    if not spec.is_lie_group:
        raise SpecError(f"{spec.cls} has no Lie-group chart (product geometry)")
    return StructureConstants.from_brackets(_catalog(spec.cls, spec.k))


def transform_basis(C: StructureConstants, L) -> StructureConstants:
    """Structure constants in the frame ``Y_i = sum_k L[i, k] X_k``.

    ``L`` may be a :class:`~ricci4.diagonalization.FrameTransform` or a bare
    4x4 array; row ``i`` holds the X-coefficients of ``Y_i``.
    """
    mat = np.asarray(getattr(L, "matrix", L), dtype=float)
    if mat.shape != (4, 4):
        raise ValueError("frame transform must be 4x4")
    if abs(np.linalg.det(mat)) <= 1e-12:
        raise np.linalg.LinAlgError("frame transform is singular")
    inv = np.linalg.inv(mat)
    # [Y_i, Y_j] = L_ik L_jl c^m_kl X_m and X_m = (L^-1)_mn Y_n
    return StructureConstants(np.einsum("ik,jl,mkl,mn->nij", mat, mat, C.c, inv))


def jacobi_residual(C) -> float:
    """Max-norm residual of the Jacobi identity over all index quadruples."""
    c = np.asarray(getattr(C, "c", C), dtype=float)
    cyc = (np.einsum("kij,mkl->ijlm", c, c)
           + np.einsum("kjl,mki->ijlm", c, c)
           + np.einsum("kli,mkj->ijlm", c, c))
    return float(np.max(np.abs(cyc)))
