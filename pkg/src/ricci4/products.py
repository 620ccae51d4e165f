"""Product geometries B1..B10 (non-trivial isotropy).

Each geometry is a product of Einstein factors.  A factor whose unit metric
satisfies Ric = mu * g evolves under Ricci flow as R^2 - 2 mu t, so every
factor coefficient is linear in time.  Flat factors keep coefficient 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lie_algebra import GeometrySpec, SpecError


@dataclass(frozen=True)
class Factor:
    name: str
    dim: int
    einstein: float          # mu with Ric(g_unit) = mu g_unit
    sectional: tuple         # frame-plane curvatures of the unit metric, row-major (dim x dim)
    radius: float = 1.0      # flat factors are pinned to 1


def _space_form(name: str, n: int, kappa: float, radius: float) -> Factor:
    sec = tuple(tuple(0.0 if i == j else kappa for j in range(n)) for i in range(n))
    return Factor(name, n, (n - 1) * kappa, sec, radius)


def _flat(n: int) -> Factor:
    return Factor(f"R^{n}" if n > 1 else "R", n, 0.0,
                  tuple(tuple(0.0 for _ in range(n)) for _ in range(n)))


def _kahler(name: str, sign: float, radius: float) -> Factor:
    # unitary frame (e1, Je1, e2, Je2): holomorphic planes carry 2, mixed planes 1/2,
    # normalised so that Ric = 3 g on the unit metric
    hol = {(0, 1), (2, 3)}
    sec = tuple(tuple(0.0 if i == j else sign * (2.0 if (min(i, j), max(i, j)) in hol else 0.5)
                      for j in range(4)) for i in range(4))
    return Factor(name, 4, 3.0 * sign, sec, radius)


def _factors(spec: GeometrySpec) -> tuple:
    r = spec.radii
    table = {
        "B1": lambda: (_space_form("H^3", 3, -1.0, r[0]), _flat(1)),
        "B2": lambda: (_space_form("S^2", 2, 1.0, r[0]), _flat(2)),
        "B3": lambda: (_space_form("H^2", 2, -1.0, r[0]), _flat(2)),
        "B4": lambda: (_space_form("S^2", 2, 1.0, r[0]), _space_form("S^2", 2, 1.0, r[1])),
        "B5": lambda: (_space_form("S^2", 2, 1.0, r[0]), _space_form("H^2", 2, -1.0, r[1])),
        "B6": lambda: (_space_form("H^2", 2, -1.0, r[0]), _space_form("H^2", 2, -1.0, r[1])),
        "B7": lambda: (_kahler("CP^2", 1.0, r[0]),),
        "B8": lambda: (_kahler("CH^2", -1.0, r[0]),),
        "B9": lambda: (_space_form("S^4", 4, 1.0, r[0]),),
        "B10": lambda: (_space_form("H^4", 4, -1.0, r[0]),),
    }
    if spec.cls not in table:
        raise SpecError(f"{spec.cls} is not a product geometry")
    return table[spec.cls]()


@dataclass(frozen=True)
class ProductModel:
    """Diagonal chart of a product geometry: four frame directions, grouped by factor."""

    spec: GeometrySpec
    factors: tuple
    slots: tuple             # factor index of each of the four directions
    mu: np.ndarray           # Einstein constant seen by each direction
    kappa: np.ndarray        # unit-metric plane curvatures, 4x4

    @classmethod
    def for_spec(cls, spec: GeometrySpec) -> "ProductModel":
        factors = _factors(spec)
        slots = []
        kappa = np.zeros((4, 4))
        start = 0
        for idx, f in enumerate(factors):
            for i in range(f.dim):
                slots.append(idx)
                for j in range(f.dim):
                    kappa[start + i, start + j] = f.sectional[i][j]
            start += f.dim
        mu = np.array([factors[s].einstein for s in slots])
        for arr in (mu, kappa):
            arr.setflags(write=False)
        return cls(spec, factors, tuple(slots), mu, kappa)

    def initial_coefficients(self) -> tuple:
        return tuple(f.radius ** 2 if f.einstein != 0.0 else 1.0 for f in self.factors)

    def expand(self, coeffs) -> np.ndarray:
        """Per-factor coefficients -> the four diagonal entries."""
        coeffs = tuple(coeffs)
        return np.array([coeffs[s] for s in self.slots], dtype=float)

    def initial_metric(self) -> np.ndarray:
        return self.expand(self.initial_coefficients())

    def validity(self) -> tuple:
        lo, hi = -np.inf, np.inf
        for f in self.factors:
            if f.einstein > 0:
                hi = min(hi, f.radius ** 2 / (2.0 * f.einstein))
            elif f.einstein < 0:
                lo = max(lo, f.radius ** 2 / (2.0 * f.einstein))
        return lo, hi

    # curvature of the product, in the orthonormal frame
    def ricci_onb(self, g) -> np.ndarray:
        return np.diag(self.mu / np.asarray(g, dtype=float))

    def sectional_matrix(self, g) -> np.ndarray:
        return self.kappa / np.asarray(g, dtype=float)[:, None]


def product_flow(spec: GeometrySpec, t: float) -> tuple:
    """Factor coefficients of the Ricci flow of a product geometry at time t."""
    model = ProductModel.for_spec(spec)
    lo, hi = model.validity()
    if not (lo < t < hi):
        raise ValueError(f"t = {t} outside the existence interval ({lo}, {hi}) of {spec.cls}")
    out = []
    for f in model.factors:
        out.append(1.0 if f.einstein == 0.0 else f.radius ** 2 - 2.0 * f.einstein * t)
    return tuple(out)
