"""Frame templates, off-diagonal Ricci components and the diagonal-family conditions.

For each A class a frame ``Y_i = sum_k L[i, k] X_k`` with free entries
``a_1..a_6`` (``a_1..a_3`` for A9/A10) diagonalizes a given initial metric.
Whether the Ricci flow stays diagonal in that frame depends on a few
combinations of the ``a_i`` (read off the transformed brackets) and, for some
branches, on equalities among the initial coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .lie_algebra import (GeometrySpec, SpecError, StructureConstants,
                          build_structure_constants, transform_basis)

PARAM_TOL = 1e-12      # equality tolerance on bracket combinations
LAMBDA_RTOL = 1e-9     # relative tolerance on coefficient equalities
OFFDIAG_ZERO = 1e-12

_N_PARAMS = {"A2": 6, "A3": 6, "A4": 6, "A5": 6, "A6": 6, "A7": 6, "A8": 6, "A9": 3, "A10": 3}

# (row, col) of a_1..a_n in each template; the diagonal is 1 and everything else 0
_SLOTS = {
    "A2": ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)),
    "A3": ((1, 2), (0, 1), (0, 2), (3, 0), (3, 1), (3, 2)),
    "A4": ((2, 1), (0, 1), (0, 2), (3, 0), (3, 1), (3, 2)),
    "A7": ((2, 3), (1, 2), (1, 3), (0, 1), (0, 2), (0, 3)),
    "A9": ((3, 0), (3, 1), (3, 2)),
}
_SLOTS["A5"] = _SLOTS["A6"] = _SLOTS["A3"]
_SLOTS["A8"] = _SLOTS["A7"]
_SLOTS["A10"] = _SLOTS["A9"]


def _cls_of(spec) -> str:
    return spec.cls if isinstance(spec, GeometrySpec) else str(spec).upper()


@dataclass(frozen=True)
class FrameTransform:
    """Matrix with rows holding the X-coefficients of Y_1..Y_4."""

    cls: str
    params: tuple
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)


def lambda_template(cls, a: Optional[Sequence[float]] = None) -> FrameTransform:
    """The class's frame template with ``a_1..a_n`` substituted.

    Missing trailing parameters are taken to be zero.
    """
    name = _cls_of(cls)
    if name not in _SLOTS:
        raise SpecError(f"{name} has no frame template")
    n = _N_PARAMS[name]
    vals = [] if a is None else [float(v) for v in a]
    if len(vals) > n:
        raise SpecError(f"{name} takes at most {n} frame parameters, got {len(vals)}")
    vals += [0.0] * (n - len(vals))
    mat = np.eye(4)
    for v, (r, c) in zip(vals, _SLOTS[name]):
        mat[r, c] = v
    return FrameTransform(name, tuple(vals), mat)


def frame_constants(spec: GeometrySpec, a: Optional[Sequence[float]] = None) -> StructureConstants:
    """Structure constants of the class in the frame Y given by ``a``."""
    base = build_structure_constants(spec)
    if spec.cls == "A1":
        if a is not None and any(float(v) != 0.0 for v in a):
            raise SpecError("A1 has no frame template")
        return base
    return transform_basis(base, lambda_template(spec.cls, a))


def _pairs(m: np.ndarray) -> np.ndarray:
    return np.array([m[i, j] for i in range(4) for j in range(i + 1, 4)])


def offdiag_ricci(spec: GeometrySpec, a, lam) -> np.ndarray:
    """Ric(Ybar_i, Ybar_j) for i < j in the order 12, 13, 14, 23, 24, 34."""
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4,) or not np.all(lam > 0):
        raise ValueError("lambda must be four positive numbers")
    c = frame_constants(spec, a).c
    return _pairs(kernels.ricci_onb(np.ascontiguousarray(c), lam))


def bracket_parameters(spec: GeometrySpec, a) -> dict:
    """The combinations (alpha, beta, gamma, ...) of frame parameters that appear
    in the transformed brackets, read off the constants themselves."""
    cls = spec.cls
    c = frame_constants(spec, a).c
    if cls == "A2":
        return {"alpha": c[0, 1, 3], "beta": c[1, 2, 3], "gamma": c[0, 2, 3]}
    if cls == "A3":
        return {"alpha": c[1, 1, 3] - spec.k, "beta": c[2, 0, 3], "gamma": c[2, 1, 3]}
    if cls == "A4":
        return {}
    if cls == "A5":
        return {"alpha": c[2, 1, 3], "beta": c[2, 0, 3]}
    if cls == "A6":
        return {"alpha": c[2, 0, 3]}
    if cls == "A7":
        return {"alpha": -c[2, 2, 0], "beta": c[3, 2, 0], "gamma": c[3, 0, 1]}
    if cls == "A8":
        return {"alpha": c[2, 2, 0], "beta": c[3, 2, 0], "gamma": c[3, 0, 1]}
    if cls in ("A9", "A10"):
        t = lambda_template(cls, a)
        return {f"a{i + 1}": v for i, v in enumerate(t.params)}
    raise SpecError(f"{cls} has no frame template")


@dataclass(frozen=True)
class FamilyVerdict:
    diagonal_preserved: bool
    branch: str
    conditions_checked: tuple       # ((name, satisfied), ...)
    alpha: Optional[float] = None   # carried by P6.ii


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= LAMBDA_RTOL * max(abs(x), abs(y))


def _zero(x: float) -> bool:
    return abs(x) <= PARAM_TOL


def family_condition(spec: GeometrySpec, a, lam) -> FamilyVerdict:
    """Decide which diagonal-family branch (a, lambda) falls in and whether it holds."""
    if not isinstance(spec, GeometrySpec):
        spec = GeometrySpec(_cls_of(spec))
    cls = spec.cls
    lam = [float(v) for v in lam]
    if cls == "A1" or not spec.is_lie_group:
        raise SpecError(f"{cls} has no frame template")
    p = bracket_parameters(spec, a)
    conds = []
    alpha = None

    if cls == "A2":
        if _zero(spec.k - 1.0):
            branch, need = "P1.ii", ("beta", "gamma")
        else:
            branch, need = "P1.i", ("alpha", "beta", "gamma")
        conds = [(f"{n}=0", _zero(p[n])) for n in need]
    elif cls in ("A3", "A5", "A6", "A8"):
        branch = {"A3": "P2", "A5": "P4", "A6": "P5", "A8": "P7"}[cls]
        conds = [(f"{n}=0", _zero(v)) for n, v in p.items()]
    elif cls == "A4":
        branch = "P3"
    elif cls == "A7":
        alpha = float(p["alpha"])
        conds = [("beta=0", _zero(p["beta"])), ("gamma=0", _zero(p["gamma"]))]
        if _zero(alpha):
            branch = "P6.i"
            conds.append(("alpha=0", True))
        else:
            branch = "P6.ii"
            conds.append(("|alpha|<1", abs(alpha) < 1.0))
            conds.append(("lambda2=(1-alpha^2)lambda3", _close(lam[1], (1.0 - alpha ** 2) * lam[2])))
    elif cls == "A9":
        if _close(lam[0], lam[1]):
            branch = "P8.ii"
            conds = [("lambda1=lambda2", True), ("a1=0", _zero(p["a1"])), ("a2=0", _zero(p["a2"]))]
        else:
            branch = "P8.i"
            conds = [(f"a{i}=0", _zero(p[f"a{i}"])) for i in (1, 2, 3)]
    else:  # A10
        eq = {(i, j): _close(lam[i], lam[j]) for i in range(3) for j in range(i + 1, 3)}
        n_eq = sum(eq.values())
        if n_eq == 3:
            branch = "P9.iii"
            conds = [("lambda1=lambda2=lambda3", True)]
        elif n_eq == 1:
            branch = "P9.ii"
            (j, k), = [key for key, v in eq.items() if v]
            conds = [(f"lambda{j + 1}=lambda{k + 1}", True),
                     (f"a{j + 1}=0", _zero(p[f"a{j + 1}"])),
                     (f"a{k + 1}=0", _zero(p[f"a{k + 1}"]))]
        else:
            # n_eq == 2 cannot happen for an equivalence relation within tolerance
            # except in degenerate near-ties; treat as all distinct
            branch = "P9.i"
            conds = [(f"a{i}=0", _zero(p[f"a{i}"])) for i in (1, 2, 3)]

    ok = all(s for _, s in conds)
    return FamilyVerdict(ok, branch, tuple(conds), alpha)


def _constraint(branch: str, alpha: Optional[float]):
    """Quantity that must stay zero along the flow for branches with a
    coefficient relation, as a function of the (n, 4) metric array."""
    if branch == "P6.ii":
        return lambda g: -g[:, 1] + (1.0 - alpha ** 2) * g[:, 2]
    if branch == "P8.ii":
        return lambda g: g[:, 0] - g[:, 1]
    if branch == "P9.iii":
        return lambda g: np.maximum(np.abs(g[:, 0] - g[:, 1]), np.abs(g[:, 0] - g[:, 2]))
    return None


@dataclass(frozen=True)
class PreservationReport:
    max_offdiag: float
    initial_offdiag: float
    flowed: bool
    constraint_drift: Optional[float]
    verdict: FamilyVerdict


def verify_preservation(spec: GeometrySpec, a, lam, T: float = 100.0, tol: float = 1e-9,
                        opts=None) -> PreservationReport:
    """Flow the full diagonal system and track the largest off-diagonal Ricci entry.

    If the off-diagonal Ricci is already above ``tol`` at t=0 the flow is not
    attempted and the initial magnitude is reported.
    """
    from .flow import FlowProblem, IntegrateOptions, integrate

    verdict = family_condition(spec, a, lam)
    off0 = float(np.max(np.abs(offdiag_ricci(spec, a, lam))))
    if off0 > tol:
        return PreservationReport(off0, off0, False, None, verdict)

    problem = FlowProblem.build(spec, lam, t_end=T, a=a, family=verdict.branch)
    base = opts or IntegrateOptions()
    traj = integrate(problem, base.replace(offdiag_tol=np.inf))
    c = np.ascontiguousarray(problem.constants.c)
    worst = 0.0
    for g in traj.metric:
        worst = max(worst, float(np.max(np.abs(_pairs(kernels.ricci_onb(c, g))))))
    drift = None
    h = _constraint(verdict.branch, verdict.alpha)
    if h is not None:
        drift = float(np.max(np.abs(h(traj.metric))))
    return PreservationReport(worst, off0, True, drift, verdict)


__all__ = ["FrameTransform", "FamilyVerdict", "PreservationReport", "lambda_template",
           "frame_constants", "offdiag_ricci", "bracket_parameters", "family_condition",
           "verify_preservation"]
