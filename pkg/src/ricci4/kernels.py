"""Numeric inner loops: Ricci / sectional curvature and the Dormand-Prince stepper.

Every hot routine exists twice: an explicit-loop version that numba compiles,
and a vectorised numpy version used when JIT is disabled.  The public names
(``ricci_onb``, ``sectional_matrix``, ``solve_dp45``...) are bound to one or the
other at import time, see :mod:`ricci4._jit`.

Conventions: ``c[k, i, j]`` are structure constants, ``[Y_i, Y_j] = c[k, i, j] Y_k``;
``g`` holds the four diagonal metric coefficients on the frame ``Y``.
"""
import numpy as np

from ._jit import USE_JIT, njit

KIND_LIE = 0
KIND_PRODUCT = 1

STATUS_REACHED = 0
STATUS_BLOWUP = 1
STATUS_UNDERFLOW = 2
STATUS_OFFDIAG = 3
STATUS_MAXSTEPS = 4


# --------------------------------------------------------------------------
# curvature, loop versions (numba targets)
# --------------------------------------------------------------------------

def _ricci_onb_loops(c, g):
    b = np.empty((4, 4, 4))
    for k in range(4):
        for i in range(4):
            for j in range(4):
                b[k, i, j] = c[k, i, j] * np.sqrt(g[k] / (g[i] * g[j]))
    ric = np.empty((4, 4))
    for p in range(4):
        for q in range(p, 4):
            s1 = 0.0
            s2 = 0.0
            s3 = 0.0
            for i in range(4):
                for k in range(4):
                    s1 += b[k, p, i] * b[k, q, i]
                    s2 += b[k, p, i] * b[i, q, k]
                    s3 += b[p, i, k] * b[q, i, k]
            v = -0.5 * s1 - 0.5 * s2 + 0.25 * s3
            ric[p, q] = v
            ric[q, p] = v
    return ric


def _sectional_pair_loops(c, g, i, j):
    # -3/4|[X,Y]|^2 - 1/2<[X,[X,Y]],Y> - 1/2<[Y,[Y,X]],X> + |U(X,Y)|^2 - <U(X,X),U(Y,Y)>
    t1 = 0.0
    t2 = 0.0
    t3 = 0.0
    uu = 0.0
    dot = 0.0
    for k in range(4):
        v = c[k, i, j]
        t1 += g[k] * v * v
        t2 += v * c[j, i, k]
        t3 -= v * c[i, j, k]
    t2 *= g[j]
    t3 *= g[i]
    for m in range(4):
        u = (c[j, m, i] * g[j] + c[i, m, j] * g[i]) / (2.0 * g[m])
        uu += g[m] * u * u
        dot += g[m] * (c[i, m, i] * g[i] / g[m]) * (c[j, m, j] * g[j] / g[m])
    num = -0.75 * t1 - 0.5 * t2 - 0.5 * t3 + uu - dot
    return num / (g[i] * g[j])


sectional_pair = njit(_sectional_pair_loops)


def _sectional_matrix_loops(c, g):
    out = np.zeros((4, 4))
    for i in range(4):
        for j in range(i + 1, 4):
            v = sectional_pair(c, g, i, j)
            out[i, j] = v
            out[j, i] = v
    return out


# --------------------------------------------------------------------------
# curvature, numpy versions (fallback)
# --------------------------------------------------------------------------

def _ricci_onb_numpy(c, g):
    s = np.sqrt(g)
    b = c * s[:, None, None] / (s[None, :, None] * s[None, None, :])
    t1 = np.einsum("kai,kbi->ab", b, b)
    t2 = np.einsum("kai,ibk->ab", b, b)
    t3 = np.einsum("aij,bij->ab", b, b)
    r = -0.5 * t1 - 0.5 * t2 + 0.25 * t3
    return 0.5 * (r + r.T)


def _sectional_matrix_numpy(c, g):
    t1 = np.einsum("k,kij->ij", g, c * c)
    t2 = np.einsum("kij,jik->ij", c, c) * g[None, :]
    t3 = -np.einsum("kij,ijk->ij", c, c) * g[:, None]
    # U(Y_i, Y_j) components, indexed [m, i, j]
    u = (np.einsum("jmi->mij", c) * g[None, None, :]
         + np.einsum("imj->mij", c) * g[None, :, None]) / (2.0 * g[:, None, None])
    uu = np.einsum("m,mij->ij", g, u * u)
    uii = np.einsum("imi->mi", c) * g[None, :] / g[:, None]
    dot = np.einsum("m,mi,mj->ij", g, uii, uii)
    k = (-0.75 * t1 - 0.5 * t2 - 0.5 * t3 + uu - dot) / np.outer(g, g)
    np.fill_diagonal(k, 0.0)
    return 0.5 * (k + k.T)


if USE_JIT:
    ricci_onb = njit(_ricci_onb_loops)
    sectional_matrix = njit(_sectional_matrix_loops)
else:
    ricci_onb = _ricci_onb_numpy
    sectional_matrix = _sectional_matrix_numpy


# --------------------------------------------------------------------------
# flow right-hand side in log variables u_i = ln g_i
# --------------------------------------------------------------------------

def _ricci_model(kind, c, mu, g):
    if kind == KIND_LIE:
        return ricci_onb(c, g)
    ric = np.zeros((4, 4))
    for i in range(4):
        ric[i, i] = mu[i] / g[i]
    return ric


def _log_rates(kind, c, mu, u, normalized):
    """du/dt and the scaled off-diagonal Ricci magnitude at state u."""
    g = np.exp(u)
    ric = ricci_model(kind, c, mu, g)
    r = ric[0, 0] + ric[1, 1] + ric[2, 2] + ric[3, 3]
    du = np.empty(4)
    scale = 1.0
    for i in range(4):
        du[i] = -2.0 * ric[i, i]
        if normalized:
            du[i] += 0.5 * r
        if abs(ric[i, i]) > scale:
            scale = abs(ric[i, i])
    off = 0.0
    for p in range(4):
        for q in range(p + 1, 4):
            if abs(ric[p, q]) > off:
                off = abs(ric[p, q])
    return du, off / scale


def _curvature_norm(kind, c, kap, g):
    best = 0.0
    if kind == KIND_LIE:
        k = sectional_matrix(c, g)
        for i in range(4):
            for j in range(i + 1, 4):
                if abs(k[i, j]) > best:
                    best = abs(k[i, j])
    else:
        for i in range(4):
            for j in range(i + 1, 4):
                v = abs(kap[i, j] / g[i])
                if v > best:
                    best = v
    return best


ricci_model = njit(_ricci_model)
log_rates = njit(_log_rates)
curvature_norm_kernel = njit(_curvature_norm)


# --------------------------------------------------------------------------
# Dormand-Prince 5(4) with PI step-size control
# --------------------------------------------------------------------------

_C2, _C3, _C4, _C5 = 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0
_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0,
                                49.0 / 176.0, -5103.0 / 18656.0)
_A71, _A73, _A74, _A75, _A76 = (35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0,
                                -2187.0 / 6784.0, 11.0 / 84.0)
_E1, _E3, _E4, _E5, _E6, _E7 = (71.0 / 57600.0, -71.0 / 16695.0, 71.0 / 1920.0,
                                -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0)

_SAFE = 0.9
_FACMIN = 0.2
_FACMAX = 10.0
_BETA = 0.04
_EXPO = 0.2 - 0.75 * _BETA


def _err_norm(err, u, unew, rtol, atol):
    s = 0.0
    for i in range(4):
        # error in u is relative error in g; atol is an absolute floor on g
        sc = rtol + atol * np.exp(-max(u[i], unew[i]))
        s += (err[i] / sc) ** 2
    return np.sqrt(s / 4.0)


def _grow(ts, us, n):
    cap = 2 * ts.shape[0]
    ts2 = np.empty(cap)
    us2 = np.empty((cap, 4))
    ts2[:n] = ts[:n]
    us2[:n, :] = us[:n, :]
    return ts2, us2


def _solve_dp45(kind, c, mu, kap, u0, t_end, normalized, rtol, atol, max_step,
                stride, out_times, k_blowup, offdiag_tol, max_steps):
    """Integrate du/dt from t=0 to t_end.

    Returns (ts, us, status, info) where info = [accepted, rejected, t_stop,
    last_offdiag, k_at_stop, k_initial].
    """
    ts = np.empty(1024)
    us = np.empty((1024, 4))
    n = 0
    info = np.zeros(6)

    t = 0.0
    u = u0.copy()
    ts[0] = t
    us[0, :] = u
    n = 1

    f0, off = log_rates(kind, c, mu, u, normalized)
    g = np.exp(u)
    k0 = curvature_norm_kernel(kind, c, kap, g)
    info[5] = k0
    info[4] = k0
    if off > offdiag_tol:
        info[3] = off
        return ts[:n], us[:n], STATUS_OFFDIAG, info

    # initial step (Hairer-Norsett-Wanner heuristic on scaled quantities)
    d1 = 0.0
    for i in range(4):
        sc = rtol + atol * np.exp(-u[i])
        d1 += (f0[i] / sc) ** 2
    d1 = np.sqrt(d1 / 4.0)
    if d1 <= 1e-5:
        h0 = 1e-6 * max(1.0, t_end)
    else:
        h0 = 0.01 / d1
    h0 = min(h0, max_step, t_end)
    f1, _ = log_rates(kind, c, mu, u + h0 * f0, normalized)
    d2 = 0.0
    for i in range(4):
        sc = rtol + atol * np.exp(-u[i])
        d2 += ((f1[i] - f0[i]) / sc) ** 2
    d2 = np.sqrt(d2 / 4.0) / h0
    dm = max(d1, d2)
    if dm <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / dm) ** 0.2
    h = min(100.0 * h0, h1, max_step, t_end)

    eps = 2.220446049250313e-16
    facold = 1e-4
    accepted = 0
    rejected = 0
    p = 0
    n_out = out_times.shape[0]
    while p < n_out and out_times[p] <= 0.0:
        p += 1
    status = STATUS_REACHED
    last = False
    k_now = k0
    since_sample = 0

    while True:
        if accepted + rejected >= max_steps:
            status = STATUS_MAXSTEPS
            break
        # land exactly on requested output times and on t_end
        target = t_end
        if p < n_out and out_times[p] < target:
            target = out_times[p]
        landing = False
        h_free = h
        if t + h >= target * (1.0 - 4.0 * eps):
            h = target - t
            landing = True
        if not landing and h <= 10.0 * eps * max(abs(t), 1e-300):
            status = STATUS_UNDERFLOW
            break

        k2, _ = log_rates(kind, c, mu, u + h * (_A21 * f0), normalized)
        k3, _ = log_rates(kind, c, mu, u + h * (_A31 * f0 + _A32 * k2), normalized)
        k4, _ = log_rates(kind, c, mu, u + h * (_A41 * f0 + _A42 * k2 + _A43 * k3), normalized)
        k5, _ = log_rates(kind, c, mu, u + h * (_A51 * f0 + _A52 * k2 + _A53 * k3
                                                  + _A54 * k4), normalized)
        k6, _ = log_rates(kind, c, mu, u + h * (_A61 * f0 + _A62 * k2 + _A63 * k3
                                                  + _A64 * k4 + _A65 * k5), normalized)
        unew = u + h * (_A71 * f0 + _A73 * k3 + _A74 * k4 + _A75 * k5 + _A76 * k6)
        k7, off = log_rates(kind, c, mu, unew, normalized)
        err = h * (_E1 * f0 + _E3 * k3 + _E4 * k4 + _E5 * k5 + _E6 * k6 + _E7 * k7)
        en = err_norm(err, u, unew, rtol, atol)

        if not np.isfinite(en):
            h *= _FACMIN
            rejected += 1
            continue

        fac11 = en ** _EXPO if en > 0.0 else 0.0
        if en <= 1.0:
            fac = fac11 / facold ** _BETA
            fac = max(1.0 / _FACMAX, min(1.0 / _FACMIN, fac / _SAFE))
            hnew = h / fac
            if landing:
                # a truncated step says nothing about the admissible step size
                hnew = max(hnew, h_free)
            facold = max(en, 1e-4)
            accepted += 1
            t = target if landing else t + h
            u = unew
            f0 = k7
            g = np.exp(u)
            k_now = curvature_norm_kernel(kind, c, kap, g)
            info[3] = max(info[3], off)

            reached_out = landing and p < n_out and t >= out_times[p]
            while p < n_out and out_times[p] <= t:
                p += 1
            last = t >= t_end
            since_sample += 1
            record = reached_out or last or (stride > 0 and since_sample >= stride)
            if off > offdiag_tol:
                record = True
            if k_now > k_blowup:
                record = True
            if record:
                if n >= ts.shape[0]:
                    ts, us = grow(ts, us, n)
                ts[n] = t
                us[n, :] = u
                n += 1
                since_sample = 0
            if off > offdiag_tol:
                status = STATUS_OFFDIAG
                break
            if k_now > k_blowup:
                status = STATUS_BLOWUP
                break
            if last:
                status = STATUS_REACHED
                break
            h = min(hnew, max_step)
        else:
            h = h / min(1.0 / _FACMIN, fac11 / _SAFE)
            rejected += 1

    if status == STATUS_UNDERFLOW or status == STATUS_MAXSTEPS:
        if ts[n - 1] < t:
            if n >= ts.shape[0]:
                ts, us = grow(ts, us, n)
            ts[n] = t
            us[n, :] = u
            n += 1
    info[0] = accepted
    info[1] = rejected
    info[2] = t
    info[4] = k_now
    return ts[:n], us[:n], status, info


err_norm = njit(_err_norm)
grow = njit(_grow)
solve_dp45 = njit(_solve_dp45)

