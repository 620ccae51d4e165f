"""Exact, implicit and envelope solutions of the diagonal Ricci flow.

These are the reference solutions against which the numeric integrator is
checked.  Each function takes the initial coefficients ``lam`` (lambda_1..4)
in the diagonalizing frame and returns plain floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from .curvature import DiagonalMetric
from .lie_algebra import GeometrySpec, SpecError
from .products import ProductModel, product_flow

LAMBDA_RTOL = 1e-9
IMPLICIT_TOL = 1e-12


def _lam(lam) -> np.ndarray:
    arr = np.asarray(lam, dtype=float)
    if arr.shape != (4,) or not np.all(arr > 0):
        raise ValueError("lambda must be four positive numbers")
    return arr


def _close(x, y) -> bool:
    return abs(x - y) <= LAMBDA_RTOL * max(abs(x), abs(y))


@dataclass(frozen=True)
class SolutionForm:
    kind: str                 # exact | implicit | envelope | numeric_only
    validity: tuple           # (t_lo, t_hi)


@dataclass(frozen=True)
class DerivedConstants:
    """Integration constants fixed by the initial data of one family."""

    family: str
    lam: tuple
    E0: Optional[float] = None
    F0: Optional[float] = None
    k1: Optional[float] = None
    k2: Optional[float] = None
    k3: Optional[float] = None
    k4: Optional[float] = None
    k5: Optional[float] = None
    alpha: Optional[float] = None
    a3: Optional[float] = None

    @classmethod
    def from_initial(cls, family: str, lam, alpha: Optional[float] = None,
                     a3: Optional[float] = None) -> "DerivedConstants":
        l1, l2, l3, l4 = _lam(lam)
        lt = (l1, l2, l3, l4)
        if family == "A6":
            return cls(family, lt, E0=l2 / (l1 * l4), F0=l3 / (l2 * l4))
        if family == "A5":
            return cls(family, lt, k1=3.0 * (1.0 + l1 / l2), k2=l1 * l4 / l2)
        if family == "P6.i":
            return cls(family, lt, k3=0.5 * l1 * abs(l2 - l3) / np.sqrt(l2 * l3))
        if family == "P7":
            k4 = l1 * (l2 + l3) / np.sqrt(l2 * l3)
            # k4 >= 2 lambda1 by AM-GM; allow round-off when lambda2 = lambda3
            if l1 > 0.5 * k4 * (1.0 + 1e-12):
                raise SpecError("initial A exceeds k4/2")
            k4 = max(k4, 2.0 * l1)
            k5 = 0.5 * k4 * np.arctanh(2.0 * l1 / k4) - l1 if l1 < 0.5 * k4 else np.inf
            return cls(family, lt, k4=k4, k5=k5)
        if family == "P6.ii":
            if alpha is None or not abs(alpha) < 1.0:
                raise SpecError("the P6.ii family needs |alpha| < 1")
            return cls(family, lt, alpha=float(alpha))
        if family == "P8.ii":
            return cls(family, lt, a3=0.0 if a3 is None else float(a3))
        return cls(family, lt)


def _family_key(spec: GeometrySpec, family: Optional[str]) -> str:
    """Collapse (class, branch) to the key used by the solution tables."""
    cls = spec.cls
    if cls == "A7":
        return family or "P6.i"
    if cls == "A8":
        return "P7"
    if cls == "A9":
        return family or "P8.i"
    if cls == "A10":
        return family or "P9.i"
    return cls


def solution_form(spec: GeometrySpec, family: Optional[str], lam) -> SolutionForm:
    if not spec.is_lie_group:
        return SolutionForm("exact", ProductModel.for_spec(spec).validity())
    key = _family_key(spec, family)
    l = _lam(lam)
    if key in ("A1", "A2", "A4", "A6", "P6.ii"):
        return SolutionForm("exact", (0.0, np.inf))
    if key == "A3":
        return SolutionForm("exact" if _close(l[0], l[1]) else "envelope", (0.0, np.inf))
    if key in ("A5", "P8.ii"):
        return SolutionForm("envelope", (0.0, np.inf))
    if key in ("P6.i", "P7"):
        return SolutionForm("implicit", (0.0, np.inf))
    if key == "P9.iii":
        return SolutionForm("exact", (0.0, l[0]))
    return SolutionForm("numeric_only", (0.0, np.inf))


# --------------------------------------------------------------------------
# implicit relations
# --------------------------------------------------------------------------

def implicit_residual(family: str, consts: DerivedConstants, A: float, t: float) -> float:
    """Residual of the implicit relation for A, relative to max(1, |A|)."""
    l1 = consts.lam[0]
    if family == "P6.i":
        k3 = consts.k3
        if k3 == 0.0:
            r = A - (4.0 * t + l1)
        else:
            r = (A - l1) - k3 * (np.arctan(A / k3) - np.arctan(l1 / k3)) - 4.0 * t
    elif family == "P7":
        # tanh form of the relation; well conditioned as A -> k4/2
        k4 = consts.k4
        with np.errstate(divide="ignore"):
            x0 = np.arctanh(min(2.0 * l1 / k4, 1.0))
        r = A - 0.5 * k4 * np.tanh(x0 + 2.0 * (A - l1 + 4.0 * t) / k4)
    else:
        raise SpecError(f"no implicit relation for {family}")
    return float(abs(r) / max(1.0, abs(A)))


def implicit_A(family: str, consts: DerivedConstants, t: float) -> float:
    """Solve the monotone implicit relation for A(t) by bracketed root finding."""
    if t < 0:
        raise ValueError("implicit solutions are defined for t >= 0")
    l1 = consts.lam[0]
    if family == "P6.i":
        k3 = consts.k3
        if k3 == 0.0:
            return l1 + 4.0 * t
        c = np.arctan(l1 / k3)

        def f(A):
            return (A - l1) - k3 * (np.arctan(A / k3) - c) - 4.0 * t
        lo, hi = l1, l1 + 4.0 * t + k3 * np.pi / 2.0
    elif family == "P7":
        k4 = consts.k4
        half = 0.5 * k4
        if l1 >= half:
            return half
        x0 = np.arctanh(l1 / half)

        def f(A):
            return A - half * np.tanh(x0 + (A - l1 + 4.0 * t) / half)
        lo, hi = l1, half
    else:
        raise SpecError(f"no implicit relation for {family}")
    if t == 0.0:
        return float(l1)
    # f is increasing in A; a non-negative value at the lower end means the
    # root sits there to within round-off (tiny t)
    flo, fhi = f(lo), f(hi)
    if flo >= 0.0:
        return float(lo)
    if fhi <= 0.0:
        return float(hi)
    A = brentq(f, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
    if implicit_residual(family, consts, A, t) > IMPLICIT_TOL:
        raise ArithmeticError(f"implicit solve for {family} stalled at residual "
                              f"{implicit_residual(family, consts, A, t):.3e}")
    return float(A)


# --------------------------------------------------------------------------
# reconstruction of the remaining components
# --------------------------------------------------------------------------

def _D_decay(lam, t) -> float:
    l1, l2, l3, l4 = lam
    return l4 * (1.0 + 3.0 * l4 * t / (l2 * l3)) ** (-1.0 / 3.0)


def dependent_components(family: str, consts: DerivedConstants, A: Optional[float], t: float) -> dict:
    """Remaining coefficients from the conserved quantities of the family.

    For P6.i and P7 the driving component is ``A``; for P6.ii everything is
    explicit and ``A`` is ignored.
    """
    l1, l2, l3, l4 = consts.lam
    if family == "P6.ii":
        s = 1.0 - consts.alpha ** 2
        B = (l2 ** 3 + 3.0 * s * l2 * l4 * t) ** (1.0 / 3.0)
        return {"A": l1 + 4.0 * t, "B": B, "C": B / s, "D": l2 * l4 / B}
    if family not in ("P6.i", "P7"):
        raise SpecError(f"no reconstruction for {family}")
    D = _D_decay(consts.lam, t)
    P = l2 * l3 * l4 ** 2            # BCD^2
    p = P / D ** 2                   # BC
    if family == "P6.i":
        s = l1 * l4 * (l2 - l3) / (A * D)      # B - C
        disc = s * s + 4.0 * p
        if disc < 0:
            raise ArithmeticError("negative discriminant reconstructing B, C")
        B = 0.5 * (s + np.sqrt(disc))
        C = B - s
    else:
        S = l1 * l4 * (l2 + l3) / (A * D)      # B + C
        half = 0.5 * consts.k4
        # (B - C)^2 = 4 BC (k4/2 - A)(k4/2 + A) / A^2; the gap k4/2 - A is
        # taken from the tanh form so it keeps full precision as A -> k4/2
        with np.errstate(divide="ignore"):
            x = np.arctanh(min(l1 / half, 1.0)) + (A - l1 + 4.0 * t) / half
        e = np.exp(-2.0 * x)
        gap = 2.0 * half * e / (1.0 + e)
        if gap < 0 or A > half * (1.0 + 1e-12):
            raise ArithmeticError("negative discriminant reconstructing B, C")
        r = 2.0 * np.sqrt(p * gap * (half + A)) / A
        hi, lo = 0.5 * (S + r), 0.5 * (S - r)
        # the ordering of B and C is fixed by the initial data
        B, C = (hi, lo) if l2 >= l3 else (lo, hi)
    return {"A": float(A), "B": float(B), "C": float(C), "D": float(D)}


# --------------------------------------------------------------------------
# exact solutions
# --------------------------------------------------------------------------

def exact_metric(spec: GeometrySpec, family: Optional[str], lam, t: float,
                 alpha: Optional[float] = None) -> DiagonalMetric:
    """Closed-form metric at time t (implicit families go through implicit_A)."""
    key = _family_key(spec, family)
    if not spec.is_lie_group:
        model = ProductModel.for_spec(spec)
        return DiagonalMetric.of(model.expand(product_flow(spec, t)))
    l1, l2, l3, l4 = _lam(lam)
    if t < 0:
        raise ValueError("closed forms are evaluated for t >= 0")
    if key == "A1":
        vals = (l1, l2, l3, l4)
    elif key == "A2":
        k = spec.k
        vals = (l1, l2, l3, l4 + 4.0 * (k * k + k + 1.0) * t)
    elif key == "A3":
        if not _close(l1, l2):
            raise SpecError("A3 has an exact solution only when lambda1 = lambda2")
        vals = (l1, l2, l3, l4 + 12.0 * spec.k ** 2 * t)
    elif key == "A4":
        A = (l1 ** 3 + 3.0 * l1 ** 2 * l2 * t / l4) ** (1.0 / 3.0)
        vals = (A, l1 * l2 / A, l3, l4 * A / l1)
    elif key == "A6":
        E0, F0 = l2 / (l1 * l4), l3 / (l2 * l4)
        e, f = 3.0 * E0 * t + 1.0, 3.0 * F0 * t + 1.0
        vals = (l1 * e ** (1 / 3), l2 * e ** (-1 / 3) * f ** (1 / 3), l3 * f ** (-1 / 3),
                l4 * e ** (1 / 3) * f ** (1 / 3))
    elif key in ("P6.i", "P7"):
        consts = DerivedConstants.from_initial(key, (l1, l2, l3, l4))
        A = implicit_A(key, consts, t)
        d = dependent_components(key, consts, A, t)
        vals = (d["A"], d["B"], d["C"], d["D"])
    elif key == "P6.ii":
        consts = DerivedConstants.from_initial(key, (l1, l2, l3, l4), alpha=alpha)
        d = dependent_components(key, consts, None, t)
        vals = (d["A"], d["B"], d["C"], d["D"])
    elif key == "P9.iii":
        if not (_close(l1, l2) and _close(l1, l3)):
            raise SpecError("the P9.iii solution needs lambda1 = lambda2 = lambda3")
        if not t < l1:
            raise ValueError(f"t = {t} is past the singular time {l1}")
        vals = (l1 - t, l1 - t, l1 - t, l4)
    else:
        raise SpecError(f"{spec.cls} ({family}) has no exact solution")
    return DiagonalMetric.of(vals)


def exact_D(spec: GeometrySpec, family: Optional[str], lam, t: float,
            a3: Optional[float] = None) -> float:
    """The single explicit component of families that are otherwise implicit or bounded."""
    key = _family_key(spec, family)
    l = _lam(lam)
    if key in ("P6.i", "P7"):
        return float(_D_decay(l, t))
    if key == "P8.ii":
        return float(4.0 * (a3 or 0.0) ** 2 * t + l[3])
    return float(exact_metric(spec, family, lam, t).d)


# --------------------------------------------------------------------------
# envelopes
# --------------------------------------------------------------------------

def envelope(family: str, lam, t: float, k: Optional[float] = None,
             a3: Optional[float] = None, printed: bool = True) -> dict:
    """Lower and upper bounds per component, ``{name: (lower, upper)}``.

    ``family`` is ``"A3_unequal"``, ``"A5"`` or ``"A9ii"``.  For A9ii the D
    entry follows the printed linear law when ``printed`` is true; with
    ``printed=False`` it is the value implied by the Ricci formula on the
    A = B family (D constant).
    """
    l1, l2, l3, l4 = _lam(lam)
    if t < 0:
        raise ValueError("envelopes are stated for t >= 0")
    if family == "A3_unequal":
        if k is None:
            raise SpecError("A3 bounds need k")
        r = max(l1 / l2, l2 / l1)
        return {"D": (l4 + 12.0 * k * k * t, l4 + (12.0 * k * k + r) * t)}
    if family == "A5":
        k1 = 3.0 * (1.0 + l1 / l2)
        k2 = l1 * l4 / l2
        k3 = l1 * k2 ** (-1.0 / k1)
        a_hi = k3 * (k1 * t + k2) ** (1.0 / k1)
        a_lo = l1 * np.sqrt(2.0 * l2 / (3.0 * l1 + l2)
                            * np.log1p((3.0 * l1 + l2) * t / (l1 * l4)) + 1.0)
        return {
            "A": (a_lo, a_hi),
            "B": (l1 * l2 / a_hi, l1 * l2 / a_lo),
            "C": (l3, l3),
            "D": (3.0 * t + l4, (3.0 + l2 / l1) * t + l4),
        }
    if family == "A9ii":
        ab = (2.0 * t + l1, (2.0 + l3 / l1) * t + l1)
        d = 4.0 * (a3 or 0.0) ** 2 * t + l4 if printed else l4
        return {"A": ab, "B": ab, "C": (2.0 * l1 * l3 / (2.0 * l1 + l3), l3), "D": (d, d)}
    raise SpecError(f"no envelope for {family!r}")
