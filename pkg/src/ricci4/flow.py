"""Ricci flow of diagonal metrics: right-hand side, integration, monitors, diagnostics.

The integrator works on ``u_i = ln g_i``.  In these variables the Ricci flow
reads ``du_i/dt = -2 ric_ii`` with ``ric`` taken in the orthonormal frame, so
the coefficients can never cross zero and every monomial conserved quantity
(``AB``, ``BCD^2``, ``A/(CD)``, volume, ...) is a linear invariant that the
Runge-Kutta scheme preserves up to round-off.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .curvature import DiagonalMetric
from .lie_algebra import GeometrySpec, SpecError, StructureConstants
from .products import ProductModel, product_flow  # noqa: F401  (re-export)

OFFDIAG_TOL = 1e-9

TERMINATIONS = ("reached_t_end", "blowup_detected", "step_underflow")


class FlowError(RuntimeError):
    """Integration could not be completed."""

    def __init__(self, message: str, trajectory: "Optional[FlowTrajectory]" = None):
        super().__init__(message)
        self.trajectory = trajectory


class OffDiagonalRicci(FlowError):
    """The Ricci tensor is not diagonal in the frame: the diagonal ODE reduction does not apply."""


class StepUnderflowError(FlowError):
    """Step size collapsed without the curvature blowing up."""


# --------------------------------------------------------------------------
# problems and options
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FlowProblem:
    spec: GeometrySpec
    constants: object               # StructureConstants or ProductModel
    initial: DiagonalMetric
    normalized: bool = False
    t_end: float = 1.0
    family: Optional[str] = None
    frame_params: tuple = ()

    def __post_init__(self):
        if not (np.isfinite(self.t_end) and self.t_end > 0):
            raise SpecError("t_end must be positive")
        if not isinstance(self.initial, DiagonalMetric):
            object.__setattr__(self, "initial", DiagonalMetric.of(self.initial))
        if self.family is not None:
            from .catalog import branches
            if self.family not in branches(self.spec.cls):
                raise SpecError(f"branch {self.family!r} does not belong to {self.spec.cls}")
        if self.spec.is_lie_group != isinstance(self.constants, StructureConstants):
            raise SpecError("constants do not match the geometry class")

    @classmethod
    def build(cls, spec: GeometrySpec, lam: Optional[Sequence[float]] = None, *, t_end: float,
              a: Optional[Sequence[float]] = None, family: Optional[str] = None,
              normalized: bool = False) -> "FlowProblem":
        """Assemble a problem from class data; infers the branch when not given."""
        if spec.is_lie_group:
            from .diagonalization import family_condition, frame_constants
            if lam is None:
                raise SpecError("initial coefficients are required for Lie-group classes")
            constants = frame_constants(spec, a)
            if family is None and spec.cls != "A1":
                family = family_condition(spec, a, lam).branch
            params = tuple(float(v) for v in (a or ()))
        else:
            if a:
                raise SpecError("frame parameters do not apply to product geometries")
            constants = ProductModel.for_spec(spec)
            if lam is None:
                lam = constants.initial_metric()
            family = family or "product"
            params = ()
        return cls(spec, constants, DiagonalMetric.of(lam), normalized, float(t_end), family, params)

    def kernel_args(self) -> tuple:
        if isinstance(self.constants, StructureConstants):
            return (kernels.KIND_LIE, np.ascontiguousarray(self.constants.c),
                    np.zeros(4), np.zeros((4, 4)))
        m = self.constants
        return (kernels.KIND_PRODUCT, np.zeros((4, 4, 4)),
                np.ascontiguousarray(m.mu, dtype=float), np.ascontiguousarray(m.kappa, dtype=float))


@dataclass(frozen=True)
class IntegrateOptions:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: Optional[float] = None       # default t_end / 100
    sample_stride: int = 1
    sample_times: tuple = ()
    offdiag_tol: float = OFFDIAG_TOL
    max_steps: int = 5_000_000

    def replace(self, **kw) -> "IntegrateOptions":
        return dataclasses.replace(self, **kw)


# --------------------------------------------------------------------------
# monitors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Monitor:
    name: str
    fn: Callable

    def __call__(self, g: np.ndarray):
        g = np.asarray(g, dtype=float)
        a, b, c, d = (g[..., i] for i in range(4))
        return self.fn(a, b, c, d)


_MON = {
    "A": lambda a, b, c, d: a,
    "B": lambda a, b, c, d: b,
    "C": lambda a, b, c, d: c,
    "D": lambda a, b, c, d: d,
    "AB": lambda a, b, c, d: a * b,
    "A/D": lambda a, b, c, d: a / d,
    "ABC": lambda a, b, c, d: a * b * c,
    "A/(CD)": lambda a, b, c, d: a / (c * d),
    "BCD^2": lambda a, b, c, d: b * c * d ** 2,
    "AD(B-C)": lambda a, b, c, d: a * d * (b - c),
    "AD(B+C)": lambda a, b, c, d: a * d * (b + c),
    "BD": lambda a, b, c, d: b * d,
    "C/B": lambda a, b, c, d: c / b,
}

_SETS = {
    "A1": ("A", "B", "C", "D"),
    "A2": ("A", "B", "C"),
    "A3": ("AB",),
    "A4": ("AB", "A/D"),
    "A5": ("AB", "C"),
    "A6": ("ABC", "A/(CD)"),
    "P6.i": ("BCD^2", "AD(B-C)"),
    "P6.ii": ("BD", "C/B"),
    "A8": ("BCD^2", "AD(B+C)"),
}


def monitors_for(spec: GeometrySpec, family: Optional[str] = None) -> tuple:
    """Conserved quantities of the unnormalized flow for a class/branch."""
    cls = spec.cls
    if cls == "A7":
        key = family or "P6.i"
        if key not in _SETS:
            raise SpecError(f"unknown A7 branch {family!r}")
    else:
        if family is not None:
            from .catalog import branches
            if family not in branches(cls):
                raise SpecError(f"branch {family!r} does not belong to {cls}")
        key = cls
    return tuple(Monitor(n, _MON[n]) for n in _SETS.get(key, ()))


# --------------------------------------------------------------------------
# right-hand side
# --------------------------------------------------------------------------

def rhs(C, g, normalized: bool = False) -> np.ndarray:
    """(dA/dt, dB/dt, dC/dt, dD/dt) for a metric diagonal in the frame of ``C``."""
    vals = g.values if isinstance(g, DiagonalMetric) else np.asarray(g, dtype=float)
    if vals.shape != (4,) or not np.all(vals > 0):
        raise ValueError("metric coefficients must be four positive numbers")
    if isinstance(C, ProductModel):
        kind, c, mu = kernels.KIND_PRODUCT, np.zeros((4, 4, 4)), np.ascontiguousarray(C.mu)
    else:
        kind = kernels.KIND_LIE
        c = np.ascontiguousarray(getattr(C, "c", C), dtype=float)
        mu = np.zeros(4)
    du, off = kernels.log_rates(kind, c, mu, np.log(vals), bool(normalized))
    if off > OFFDIAG_TOL:
        raise OffDiagonalRicci(f"off-diagonal Ricci {off:.3e} exceeds {OFFDIAG_TOL:g}")
    return du * vals


# --------------------------------------------------------------------------
# trajectories
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FlowTrajectory:
    times: np.ndarray
    metric: np.ndarray                  # (n, 4)
    curvature_norm: np.ndarray
    scalar: np.ndarray
    monitors: dict                      # name -> (n,) series
    termination: str
    T_est: Optional[float] = None
    problem: Optional[FlowProblem] = field(default=None, compare=False)
    options: Optional[IntegrateOptions] = field(default=None, compare=False)
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for arr in (self.times, self.metric, self.curvature_norm, self.scalar, *self.monitors.values()):
            arr.setflags(write=False)

    def __len__(self):
        return self.times.shape[0]

    @property
    def columns(self) -> list:
        return ["t", "A", "B", "C", "D", "K_max", "scalar"] + [f"mon:{n}" for n in self.monitors]

    @property
    def samples(self) -> np.ndarray:
        cols = [self.times, *self.metric.T, self.curvature_norm, self.scalar, *self.monitors.values()]
        return np.column_stack(cols)

    def monitor_drift(self) -> dict:
        """Per monitor: relative drift, or absolute drift when the reference is zero."""
        out = {}
        for name, series in self.monitors.items():
            ref = series[0]
            dev = float(np.max(np.abs(series - ref)))
            out[name] = dev / abs(ref) if ref != 0.0 else dev
        return out


def _curvature_series(kind, c, mu, kap, metric):
    n = metric.shape[0]
    knorm = np.empty(n)
    scal = np.empty(n)
    for i in range(n):
        g = metric[i]
        knorm[i] = kernels.curvature_norm_kernel(kind, c, kap, g)
        scal[i] = np.trace(kernels.ricci_model(kind, c, mu, g))
    return knorm, scal


def blowup_time(times: np.ndarray, knorm: np.ndarray, last: int = 10) -> Optional[float]:
    """Extrapolate 1/curvature_norm linearly to zero over the last samples."""
    if times.shape[0] < 3:
        return None
    t = times[-last:]
    y = 1.0 / knorm[-last:]
    slope, icpt = np.polyfit(t, y, 1)
    if not slope < 0:
        return None
    return float(-icpt / slope)


def integrate(problem: FlowProblem, opts: Optional[IntegrateOptions] = None) -> FlowTrajectory:
    """Adaptive Dormand-Prince 5(4) integration of the (normalized) Ricci flow."""
    opts = opts or IntegrateOptions()
    kind, c, mu, kap = problem.kernel_args()
    t_end = float(problem.t_end)
    max_step = float(opts.max_step) if opts.max_step is not None else t_end / 100.0
    out_times = np.array(sorted(float(s) for s in opts.sample_times if 0.0 < s < t_end))
    k_blowup = 1.0 / (10.0 * opts.rel_tol)
    u0 = np.log(problem.initial.values)

    ts, us, status, info = kernels.solve_dp45(
        kind, c, mu, kap, u0, t_end, bool(problem.normalized), float(opts.rel_tol),
        float(opts.abs_tol), max_step, int(opts.sample_stride), out_times, k_blowup,
        float(opts.offdiag_tol), int(opts.max_steps))
    ts = np.array(ts)
    metric = np.exp(np.array(us))
    knorm, scal = _curvature_series(kind, c, mu, kap, metric)
    mons = {m.name: np.asarray(m(metric), dtype=float)
            for m in (monitors_for(problem.spec, problem.family) if not problem.normalized else ())}
    stats = {"accepted": int(info[0]), "rejected": int(info[1]), "t_stop": float(info[2]),
             "max_offdiag": float(info[3]), "k_stop": float(info[4]), "k_initial": float(info[5])}

    def make(term, T=None):
        return FlowTrajectory(ts, metric, knorm, scal, mons, term, T, problem, opts, stats)

    if status == kernels.STATUS_REACHED:
        return make("reached_t_end")
    if status == kernels.STATUS_BLOWUP:
        return make("blowup_detected", blowup_time(ts, knorm))
    if status == kernels.STATUS_UNDERFLOW:
        k0 = max(stats["k_initial"], np.finfo(float).tiny)
        if stats["k_stop"] > 1e6 * k0:
            return make("blowup_detected", blowup_time(ts, knorm))
        raise StepUnderflowError(
            f"step size underflow at t={stats['t_stop']:.6g} without curvature blowup",
            make("step_underflow"))
    if status == kernels.STATUS_OFFDIAG:
        raise OffDiagonalRicci(
            f"off-diagonal Ricci {stats['max_offdiag']:.3e} at t={stats['t_stop']:.6g}: "
            "the metric leaves the diagonal family", make("step_underflow"))
    raise FlowError(f"step budget of {opts.max_steps} exhausted at t={stats['t_stop']:.6g}",
                    make("step_underflow"))


# --------------------------------------------------------------------------
# diagnostics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Singularity:
    kind: str                       # TypeI | TypeIII | immortal_flat | inconclusive
    T_est: Optional[float] = None
    variation: Optional[float] = None


def _variation(x: np.ndarray) -> float:
    hi = float(np.max(x))
    return float((hi - np.min(x)) / hi) if hi > 0 else np.inf


def classify_singularity(traj: FlowTrajectory, window: float = 10.0,
                         max_variation: float = 0.2) -> Singularity:
    """Type I / Type III / flat classification from the tail of a trajectory."""
    if len(traj) < 50:
        raise ValueError(f"classification needs at least 50 samples, got {len(traj)}")
    abs_tol = traj.options.abs_tol if traj.options is not None else 1e-12
    if float(np.max(traj.curvature_norm)) < abs_tol:
        return Singularity("immortal_flat")

    if traj.termination == "blowup_detected" and traj.T_est is not None:
        tau = traj.T_est - traj.times
        keep = tau > 0
        tau, k = tau[keep], traj.curvature_norm[keep]
        if tau.size < 3:
            return Singularity("inconclusive", traj.T_est)
        sel = tau <= window * tau[-1]
        if np.count_nonzero(sel) < 3:
            return Singularity("inconclusive", traj.T_est)
        var = _variation(tau[sel] * k[sel])
        return Singularity("TypeI" if var < max_variation else "inconclusive", traj.T_est, var)

    if traj.termination == "reached_t_end":
        t_end = traj.times[-1]
        sel = traj.times >= t_end / window
        if np.count_nonzero(sel) < 3:
            return Singularity("inconclusive")
        var = _variation(traj.times[sel] * traj.curvature_norm[sel])
        return Singularity("TypeIII" if var < max_variation else "inconclusive", None, var)
    return Singularity("inconclusive", traj.T_est)


@dataclass(frozen=True)
class Profile:
    exponents: np.ndarray               # growth exponents of A, B, C, D
    residuals: np.ndarray               # RMS log-residuals of the component fits
    curvature_exponent: Optional[float]  # None for flat metrics
    curvature_residual: Optional[float]
    window: tuple


def _loglog(t: np.ndarray, y: np.ndarray) -> tuple:
    x = np.log(t)
    z = np.log(y)
    slope, icpt = np.polyfit(x, z, 1)
    res = z - (slope * x + icpt)
    return float(slope), float(np.sqrt(np.mean(res ** 2)))


def asymptotic_profile(traj: FlowTrajectory, window: float = 10.0, min_time: float = 1e3) -> Profile:
    """Power-law exponents of each component and of the curvature over the last decade."""
    if traj.termination != "reached_t_end":
        raise ValueError("asymptotic profile needs an immortal trajectory")
    t_end = float(traj.times[-1])
    if t_end < min_time:
        raise ValueError(f"final time {t_end:g} is below {min_time:g}")
    sel = traj.times >= t_end / window
    t = traj.times[sel]
    fits = [_loglog(t, traj.metric[sel, i]) for i in range(4)]
    k = traj.curvature_norm[sel]
    abs_tol = traj.options.abs_tol if traj.options is not None else 1e-12
    if np.all(k < abs_tol):
        kexp = kres = None
    else:
        kexp, kres = _loglog(t, k)
    return Profile(np.array([f[0] for f in fits]), np.array([f[1] for f in fits]),
                   kexp, kres, (t_end / window, t_end))
