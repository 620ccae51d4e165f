"""Hand-transcribed curvature formulas for the A classes, used as test fixtures.

Nothing here goes through the structure-constant pipeline: every entry is
the symbolic expression written out in terms of the metric coefficients, the
class parameter ``k`` and the frame parameters.  The suites in
:mod:`ricci4.verify` and the test-suite compare these against
:func:`ricci4.curvature.ricci_tensor` and friends.

Where a transcribed expression is known to disagree with the pipeline, the
entry carries the corrected expression as well, under ``corrected``.

Index order for off-diagonal entries is always 12, 13, 14, 23, 24, 34.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

OFF_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

sqrt = np.sqrt


# --------------------------------------------------------------------------
# diagonal Ricci in the canonical frame (orthonormalised), per class
# --------------------------------------------------------------------------

def _ric_A2(A, B, C, D, k):
    return (0.0, 0.0, 0.0, -2.0 * (k * k + k + 1.0) / D)


def _ric_A3(A, B, C, D, k):
    e = (A * A - B * B) / (2 * A * B * D)
    return (e, -e, 0.0, -((A - B) ** 2 + 12 * k * k * A * B) / (2 * A * B * D))


def _ric_A4(A, B, C, D, k):
    e = B / (2 * A * D)
    return (-e, e, 0.0, -e)


def _ric_A5(A, B, C, D, k):
    e = B / (2 * A * D)
    return (-e, e, 0.0, -0.5 * (3 / D + B / (A * D)))


def _ric_A6(A, B, C, D, k):
    return (-B / (2 * A * D), 0.5 * (B / (A * D) - C / (B * D)), C / (2 * B * D),
            -0.5 * (B / (A * D) + C / (B * D)))


def _ric_A7(A, B, C, D, k):
    return (-0.5 * (B / (A * C) + C / (A * B) + 2 / A),
            -0.5 * (C / (A * B) + D / (B * C) - B / (A * C)),
            -0.5 * (B / (A * C) + D / (B * C) - C / (A * B)),
            0.5 * D / (B * C))


def _ric_A8(A, B, C, D, k):
    return (0.5 * (2 / A - C / (A * B) - B / (A * C)),
            0.5 * (B / (A * C) - C / (A * B) - D / (B * C)),
            0.5 * (C / (A * B) - B / (A * C) - D / (B * C)),
            0.5 * D / (B * C))


RICCI_DIAG = {"A2": _ric_A2, "A3": _ric_A3, "A4": _ric_A4, "A5": _ric_A5,
              "A6": _ric_A6, "A7": _ric_A7, "A8": _ric_A8}


def ricci_A7ii(A, B, C, D, alpha):
    """Diagonal Ricci and the printed w_2 w_3 coefficient of Ric(W, W) for A7 in
    the frame with a_2 = alpha, for arbitrary B, C (no coefficient relation).

    The printed coefficient equals the tensor entry Ric(Ybar_2, Ybar_3); the
    cross coefficient of the quadratic form Ric(W, W) is twice that.
    """
    s = 1.0 - alpha ** 2
    diag = (-(B * B + 2 * (1 + alpha ** 2) * B * C + s * s * C * C) / (2 * A * B * C),
            (-A * D + B * B - s * s * C * C) / (2 * A * B * C),
            (-A * D - B * B + s * s * C * C) / (2 * A * B * C),
            D / (2 * B * C))
    w23 = alpha * (-B + s * C) / (A * sqrt(B * C))
    return diag, w23


# --------------------------------------------------------------------------
# off-diagonal Ricci in the frame Y, per family branch
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OffDiagFixture:
    cls: str
    branch_label: str
    params: Callable            # (a, k) -> dict of alpha/beta/gamma as printed
    formula: Callable           # (p, lam, k) -> 6 values
    corrected_params: Optional[Callable] = None
    note: str = ""


def _p1(a, k):
    a1, a2, a3 = a[0], a[1], a[2]
    return {"alpha": (1 - k) * a1, "beta": (1 + 2 * k) * a3,
            "gamma": (k + 2) * a2 - (1 + 2 * k) * a1 * a3}


def _f1(p, lam, k):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    l1, l2, l3, l4 = lam
    return (
        (be * ga * l2 + (k - 1) * al * l3) * sqrt(l1) / (2 * sqrt(l2) * l3 * l4),
        -(2 + k) * ga * sqrt(l1) / (2 * sqrt(l3) * l4),
        0.0,
        -(al * ga * l1 + (1 + 2 * k) * be * l2) / (2 * sqrt(l2 * l3) * l4),
        0.0,
        0.0,
    )


def _p2(a, k):
    a1, a2, a3 = a[0], a[1], a[2]
    return {"alpha": a2, "beta": a2 * a3 - a1 * a2 ** 2 - a1 - 3 * k * a3,
            "gamma": a3 - 3 * k * a1 - a1 * a2}


def _f2(p, lam, k):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    l1, l2, l3, l4 = lam
    return (
        -(2 * al * l1 + 2 * al * (1 + al ** 2) * l2 + be * ga * l3) / (2 * sqrt(l1 * l2) * l4),
        -(ga * l1 + (al - 3 * k) * be * l2) * sqrt(l3) / (2 * sqrt(l1) * l2 * l4),
        0.0,
        ((al + 3 * k) * ga * l1 + (1 + al ** 2) * be * l2) * sqrt(l3) / (2 * l1 * sqrt(l2) * l4),
        0.0,
        0.0,
    )


def _p3(a, k):
    return {}


def _f3(p, lam, k):
    return (0.0,) * 6


def _p4(a, k):
    return {"alpha": 1.5 * a[0], "beta": 1.5 * (a[2] - a[0])}


def _p4_corrected(a, k):
    return {"alpha": 1.5 * a[0], "beta": 1.5 * a[2] - a[0]}


def _f4(p, lam, k):
    al, be = p["alpha"], p["beta"]
    l1, l2, l3, l4 = lam
    return (
        -al * be * l3 / (2 * sqrt(l1 * l2) * l4),
        -3 * be * sqrt(l3) / (4 * sqrt(l1) * l4),
        0.0,
        (-3 * al * l1 + 2 * be * l2) * sqrt(l3) / (4 * l1 * sqrt(l2) * l4),
        0.0,
        0.0,
    )


def _p5(a, k):
    return {"alpha": a[1] - a[0]}


def _f5(p, lam, k):
    al = p["alpha"]
    l1, l2, l3, l4 = lam
    return (-al * l3 / (2 * sqrt(l1 * l2) * l4), 0.0, 0.0,
            al * sqrt(l2 * l3) / (2 * l1 * l4), 0.0, 0.0)


def _p6(a, k):
    a1, a2, a3, a4, a5 = a[:5]
    return {"alpha": a2, "beta": a1 * a2 - a3 - a4,
            "gamma": a1 - a1 * a2 ** 2 + a2 * a3 + a2 * a4 - a5}


def _f6(p, lam, k):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    l1, l2, l3, l4 = lam
    return (
        be * l4 / (2 * sqrt(l1 * l2) * l3),
        ga * l4 / (2 * sqrt(l1 * l3) * l2),
        0.0,
        (-2 * al * l2 + 2 * al * (1 - al ** 2) * l3 + be * ga * l4) / (2 * l1 * sqrt(l2 * l3)),
        (be * l2 - al * ga * l3) * sqrt(l4) / (2 * l1 * sqrt(l2) * l3),
        (-al * be * l2 + (al ** 2 - 1) * ga * l3) * sqrt(l4) / (2 * l1 * l2 * sqrt(l3)),
    )


def _p7(a, k):
    a1, a2, a3, a4, a5 = a[:5]
    return {"alpha": -a2, "beta": a1 * a2 - a3 + a4,
            "gamma": -a1 - a1 * a2 ** 2 + a2 * a3 - a2 * a4 + a5}


def _f7(p, lam, k):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    l1, l2, l3, l4 = lam
    return (
        -be * l4 / (2 * sqrt(l1 * l2) * l3),
        -ga * l4 / (2 * sqrt(l1 * l3) * l2),
        0.0,
        (2 * al * l2 + 2 * al * (1 + al ** 2) * l3 + be * ga * l4) / (2 * l1 * sqrt(l2 * l3)),
        (be * l2 + al * ga * l3) * sqrt(l4) / (2 * l1 * sqrt(l2) * l3),
        (al * be * l2 + (1 + al ** 2) * ga * l3) * sqrt(l4) / (2 * l1 * l2 * sqrt(l3)),
    )


def _p89(a, k):
    return {"a1": a[0], "a2": a[1], "a3": a[2]}


def eq15(delta, a, lam):
    """Diagonal and off-diagonal Ricci of A9 (delta=-1) / A10 (delta=+1) in the frame Y."""
    a1, a2, a3 = a
    l1, l2, l3, l4 = lam
    den = 2 * l1 * l2 * l3 * l4
    diag = (
        ((l1 ** 2 - l3 ** 2) * l2 * a2 ** 2 + (l1 ** 2 - l2 ** 2) * l3 * a3 ** 2
         + (l1 ** 2 - (l2 - delta * l3) ** 2) * l4) / den,
        ((l2 ** 2 - l3 ** 2) * l1 * a1 ** 2 + (l2 ** 2 - l1 ** 2) * l3 * a3 ** 2
         + (l2 ** 2 - (l1 - delta * l3) ** 2) * l4) / den,
        ((l3 ** 2 - l2 ** 2) * l1 * a1 ** 2 + (l3 ** 2 - l1 ** 2) * l2 * a2 ** 2
         + (l3 ** 2 - (l1 - l2) ** 2) * l4) / den,
        -((l2 - delta * l3) ** 2 * l1 * a1 ** 2 + (l1 - delta * l3) ** 2 * l2 * a2 ** 2
          + (l1 - l2) ** 2 * l3 * a3 ** 2) / den,
    )
    off = (
        (l3 ** 2 - l1 * l2) * a1 * a2 / (2 * l3 * l4 * sqrt(l1 * l2)),
        (l2 ** 2 - delta * l1 * l3) * a1 * a3 / (2 * l2 * l4 * sqrt(l1 * l3)),
        -(l2 - delta * l3) ** 2 * a1 / (2 * l2 * l3 * sqrt(l1 * l4)),
        (l1 ** 2 - delta * l2 * l3) * a2 * a3 / (2 * l1 * l4 * sqrt(l2 * l3)),
        -(l1 - delta * l3) ** 2 * a2 / (2 * l1 * l3 * sqrt(l2 * l4)),
        -(l1 - l2) ** 2 * a3 / (2 * l1 * l2 * sqrt(l3 * l4)),
    )
    return diag, off


def _f8(p, lam, k):
    return eq15(-1, (p["a1"], p["a2"], p["a3"]), lam)[1]


def _f9(p, lam, k):
    return eq15(1, (p["a1"], p["a2"], p["a3"]), lam)[1]


OFFDIAG = {
    "A2": OffDiagFixture("A2", "P1", _p1, _f1),
    "A3": OffDiagFixture("A3", "P2", _p2, _f2),
    "A4": OffDiagFixture("A4", "P3", _p3, _f3),
    "A5": OffDiagFixture("A5", "P4", _p4, _f4, _p4_corrected,
                         "printed beta = 3/2 (a3 - a1); the brackets give beta = 3/2 a3 - a1"),
    "A6": OffDiagFixture("A6", "P5", _p5, _f5),
    "A7": OffDiagFixture("A7", "P6", _p6, _f6),
    "A8": OffDiagFixture("A8", "P7", _p7, _f7),
    "A9": OffDiagFixture("A9", "P8", _p89, _f8),
    "A10": OffDiagFixture("A10", "P9", _p89, _f9),
}


def general_offdiag(delta, a, b, c, lam, corrected=False):
    """Off-diagonal Ricci for the nine-parameter family of the A9/A10 general family:
    [Y_1,Y_4] = a.Y, [Y_2,Y_4] = b.Y, [Y_3,Y_4] = c.Y on top of the 3-D brackets.

    As printed, the 12 entry carries a_2 (a_2 - b_2) lambda_2 lambda_3; the
    curvature formula gives a_2 (a_1 - b_2).  ``corrected=True`` uses the latter.
    """
    a1, a2, a3 = a
    b1, b2, b3 = b
    c1, c2, c3 = c
    l1, l2, l3, l4 = lam
    m = a1 if corrected else a2
    return (
        (c1 * c2 * l1 * l2 + b1 * (b2 - a1) * l1 * l3 + a2 * (m - b2) * l2 * l3 - a3 * b3 * l3 ** 2)
        / (2 * sqrt(l1) * sqrt(l2) * l3 * l4),
        (-c1 * (2 * a1 + b2) * l1 * l2 + b1 * b3 * l1 * l3 - a2 * c2 * l2 ** 2
         + a3 * (2 * a1 + b2) * l2 * l3) / (2 * sqrt(l1) * l2 * sqrt(l3) * l4),
        -(l2 - delta * l3) * (c2 * l2 + b3 * l3) / (2 * sqrt(l1) * l2 * l3 * sqrt(l4)),
        (-b1 * c1 * l1 ** 2 - c2 * (a1 + 2 * b2) * l1 * l2 + b3 * (a1 + 2 * b2) * l1 * l3
         + a2 * a3 * l2 * l3) / (2 * l1 * sqrt(l2) * sqrt(l3) * l4),
        (l1 - delta * l3) * (c1 * l1 + a3 * l3) / (2 * l1 * sqrt(l2) * l3 * sqrt(l4)),
        -(l1 - l2) * (b1 * l1 + a2 * l2) / (2 * l1 * l2 * sqrt(l3) * sqrt(l4)),
    )


def general_constants(delta, a, b, c) -> np.ndarray:
    """Dense c[k, i, j] for the general bracket family (0-based)."""
    t = np.zeros((4, 4, 4))

    def put(i, j, vec):
        for kk, v in enumerate(vec):
            t[kk, i, j] += v
            t[kk, j, i] -= v

    put(1, 2, (1.0, 0.0, 0.0, 0.0))
    put(2, 0, (0.0, 1.0, 0.0, 0.0))
    put(0, 1, (0.0, 0.0, float(delta), 0.0))
    put(0, 3, (*a, 0.0))
    put(1, 3, (*b, 0.0))
    put(2, 3, (*c, 0.0))
    return t


# --------------------------------------------------------------------------
# sectional curvature tables
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SectionalFixture:
    name: str
    cls: str
    table: Callable                  # (g, k, extra) -> dict {(i, j): K}
    frame: Optional[Callable] = None  # extra -> frame parameters a
    constrain: Optional[Callable] = None  # (g, extra) -> g satisfying the family relation
    corrected: dict = field(default_factory=dict)  # (i, j) -> corrected expression
    note: str = ""


def _k_A2(g, k, x):
    A, B, C, D = g
    return {(1, 2): -k / D, (1, 3): (k + 1) / D, (2, 3): k * (k + 1) / D,
            (1, 4): -1 / D, (2, 4): -k * k / D, (3, 4): -(k + 1) ** 2 / D}


def _k_A3(g, k, x):
    A, B, C, D = g
    r, s = A / B, B / A
    return {(1, 2): (r + s - 2 - 4 * k * k) / (4 * D), (1, 3): 2 * k * k / D,
            (2, 3): 2 * k * k / D, (1, 4): (r - 3 * s + 2 - 4 * k * k) / (4 * D),
            (2, 4): (-3 * r + s + 2 - 4 * k * k) / D, (3, 4): -4 * k * k / D}


def _k_A3_24(g, k, x):
    A, B, C, D = g
    return (-3 * A / B + B / A + 2 - 4 * k * k) / (4 * D)


def _k_A4(g, k, x):
    A, B, C, D = g
    e = B / (4 * A * D)
    return {(1, 2): e, (2, 4): e, (1, 4): -3 * e, (1, 3): 0.0, (2, 3): 0.0, (3, 4): 0.0}


def _k_A5(g, k, x):
    A, B, C, D = g
    s = B / A
    return {(1, 2): (-1 + s) / (4 * D), (1, 3): 1 / (2 * D), (2, 3): 1 / (2 * D),
            (1, 4): -(1 + 3 * s) / (4 * D), (2, 4): (-1 + s) / (4 * D), (3, 4): -1 / D}


def _k_A6(g, k, x):
    A, B, C, D = g
    s, r = B / A, C / B
    return {(1, 2): s / (4 * D), (1, 3): 0.0, (2, 3): r / (4 * D),
            (1, 4): -3 * s / (4 * D), (2, 4): (s - 3 * r) / (4 * D), (3, 4): r / (4 * D)}


def _k_A7i(g, k, x):
    A, B, C, D = g
    r = B / C
    return {(1, 2): (r - 3 / r - 2) / (4 * A), (1, 3): (1 / r - 3 * r - 2) / (4 * A),
            (1, 4): 0.0, (2, 3): -3 * D / (4 * B * C) + (r + 1 / r + 2) / (4 * A),
            (2, 4): D / (4 * B * C), (3, 4): D / (4 * B * C)}


def _k_A7ii(g, k, alpha):
    A, B, C, D = g
    return {(1, 2): -1 / A, (1, 3): -1 / A, (2, 3): -3 * D / (4 * B * C) + 1 / A,
            (1, 4): 0.0, (2, 4): D / (4 * B * C), (3, 4): D / (4 * B * C)}


def _k_A8(g, k, x):
    A, B, C, D = g
    r = B / C
    return {(1, 2): (r - 3 / r + 2) / (4 * A), (1, 3): (-3 * r + 1 / r + 2) / (4 * A),
            (2, 3): -3 * D / (4 * B * C) + (r + 1 / r - 2) / (4 * A), (1, 4): 0.0,
            (2, 4): D / (4 * B * C), (3, 4): D / (4 * B * C)}


def _k_A9ii(g, k, a3):
    A, B, C, D = g
    return {(1, 2): -(4 + 3 * C / A) / (4 * A), (1, 3): C / (4 * A * A),
            (2, 3): C / (4 * A * A), (1, 4): 0.0, (2, 4): 0.0, (3, 4): 0.0}


def _fix_B(g, alpha):
    A, B, C, D = g
    return (A, (1 - alpha ** 2) * C, C, D)


def _fix_AB(g, a3):
    A, B, C, D = g
    return (A, A, C, D)


SECTIONAL = {
    "A2": SectionalFixture("A2", "A2", _k_A2),
    "A3": SectionalFixture("A3", "A3", _k_A3, corrected={(2, 4): _k_A3_24},
                           note="K(X2,X4): printed denominator D, the curvature formula gives 4D"),
    "A4": SectionalFixture("A4", "A4", _k_A4),
    "A5": SectionalFixture("A5", "A5", _k_A5),
    "A6": SectionalFixture("A6", "A6", _k_A6),
    "A7i": SectionalFixture("A7i", "A7", _k_A7i),
    "A7ii": SectionalFixture("A7ii", "A7", _k_A7ii, frame=lambda al: (0.0, al),
                             constrain=_fix_B),
    "A8": SectionalFixture("A8", "A8", _k_A8),
    "A9ii": SectionalFixture("A9ii", "A9", _k_A9ii, frame=lambda a3: (0.0, 0.0, a3),
                             constrain=_fix_AB),
}


# --------------------------------------------------------------------------
# U operator (a few printed entries)
# --------------------------------------------------------------------------

def u_entries(cls, g, k=None):
    """{(i, j): 4-vector} of printed U(X_i, X_j) values on the frame."""
    A, B, C, D = g
    z = np.zeros(4)

    def vec(**kw):
        v = z.copy()
        for key, val in kw.items():
            v[int(key[1]) - 1] = val
        return v

    if cls == "A4":
        return {(1, 2): vec(x4=-B / (2 * D)), (2, 4): vec(x1=B / (2 * A))}
    if cls == "A6":
        return {(1, 2): vec(x4=-B / (2 * D)), (2, 3): vec(x4=-C / (2 * D)),
                (2, 4): vec(x1=B / (2 * A)), (3, 4): vec(x2=C / (2 * B))}
    if cls == "A7":
        return {(1, 2): vec(x3=B / (2 * C)), (1, 3): vec(x2=C / (2 * B)),
                (2, 3): vec(x1=-(B + C) / (2 * A)), (2, 4): vec(x3=-D / (2 * C)),
                (3, 4): vec(x2=D / (2 * B))}
    if cls == "A3":
        return {(1, 1): vec(x4=-k * A / D), (2, 2): vec(x4=-k * B / D),
                (3, 3): vec(x4=2 * k * C / D), (1, 2): vec(x4=(A - B) / (2 * D)),
                (1, 4): vec(x1=k / 2, x2=-A / (2 * B)), (2, 4): vec(x1=B / (2 * A), x2=k / 2),
                (3, 4): vec(x3=-k)}
    raise KeyError(cls)


# --------------------------------------------------------------------------
# Ricci flow ODE systems as printed
# --------------------------------------------------------------------------

def ode(name, g, k=None, extra=None):
    """(dA, dB, dC, dD)/dt as written for each family."""
    A, B, C, D = g
    if name == "A2":
        return (0.0, 0.0, 0.0, 4 * (k * k + k + 1))
    if name == "A3":
        return (-(A * A - B * B) / (B * D), -(B * B - A * A) / (A * D), 0.0,
                ((A - B) ** 2 + 12 * k * k * A * B) / (A * B))
    if name == "A4":
        return (B / D, -B * B / (A * D), 0.0, B / A)
    if name == "A5":
        return (B / D, -B * B / (A * D), 0.0, 3 + B / A)
    if name == "A6":
        return (B / D, (A * C - B * B) / (A * D), -C * C / (B * D), B / A + C / B)
    if name == "A7i":
        return (B / C + C / B + 2, C / A + D / C - B * B / (A * C),
                B / A + D / B - C * C / (A * B), -D * D / (B * C))
    if name == "A7ii":
        s = 1 - extra ** 2
        return ((B * B + 2 * (1 + extra ** 2) * B * C + s * s * C * C) / (B * C),
                (A * D - B * B + s * s * C * C) / (A * C),
                (A * D + B * B - s * s * C * C) / (A * B),
                -D * D / (B * C))
    if name == "A8":
        return (C / B + B / C - 2, -B * B / (A * C) + C / A + D / C,
                -C * C / (A * B) + B / A + D / B, -D * D / (B * C))
    if name == "A9i":
        return (((B + C) ** 2 - A * A) / (B * C), ((A + C) ** 2 - B * B) / (A * C),
                ((A - B) ** 2 - C * C) / (A * B), 0.0)
    if name == "A9ii":
        a3 = extra
        return (((B + C) ** 2 - A * A) / (B * C) + (B * B - A * A) / (B * D) * a3 ** 2,
                ((A + C) ** 2 - B * B) / (A * C) + (A * A - B * B) / (A * D) * a3 ** 2,
                ((A - B) ** 2 - C * C) / (A * B),
                (A + B) ** 2 / (A * B) * a3 ** 2)
    if name == "A10i":
        return (((B - C) ** 2 - A * A) / (B * C), ((A - C) ** 2 - B * B) / (A * C),
                ((A - B) ** 2 - C * C) / (A * B), 0.0)
    if name == "A10ii":
        a1 = extra
        return (((B - C) ** 2 - A * A) / (B * C),
                ((A - C) ** 2 - B * B) / (A * C) - (B * B - C * C) / (C * D) * a1 ** 2,
                ((A - B) ** 2 - C * C) / (A * B) + (B * B - C * C) / (B * D) * a1 ** 2,
                -(B - C) ** 2 / (B * C) * a1 ** 2)
    if name == "A10iii":
        a1, a2, a3 = extra
        return (
            -((A * A - C * C) * B * a2 ** 2 + (A * A - B * B) * C * a3 ** 2
              + (A * A - (B - C) ** 2) * D) / (B * C * D),
            -((B * B - C * C) * A * a1 ** 2 + (B * B - A * A) * C * a3 ** 2
              + (B * B - (A - C) ** 2) * D) / (A * C * D),
            -((C * C - B * B) * A * a1 ** 2 + (C * C - A * A) * B * a2 ** 2
              + (C * C - (A - B) ** 2) * D) / (A * B * D),
            ((B - C) ** 2 * A * a1 ** 2 + (A - C) ** 2 * B * a2 ** 2
             + (A - B) ** 2 * C * a3 ** 2) / (A * B * C),
        )
    raise KeyError(name)


# (class, frame parameters from extra, k needed) for each ODE entry
ODE_SETUP = {
    "A2": ("A2", None), "A3": ("A3", None), "A4": ("A4", None), "A5": ("A5", None),
    "A6": ("A6", None), "A7i": ("A7", None), "A7ii": ("A7", lambda al: (0.0, al)),
    "A8": ("A8", None), "A9i": ("A9", None), "A9ii": ("A9", lambda a3: (0.0, 0.0, a3)),
    "A10i": ("A10", None), "A10ii": ("A10", lambda a1: (a1, 0.0, 0.0)),
    "A10iii": ("A10", lambda a: tuple(a)),
}
