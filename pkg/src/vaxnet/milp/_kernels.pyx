# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled simplex pivot kernels (contract of ``_kernels_py``)."""

import numpy as np

cimport numpy as cnp

BACKEND = "cython"

NB_LOWER = 0
NB_UPPER = 1
BASIC = 2
NB_FREE = 3

cdef double INF = float("inf")


def apply_eta_chain(double[::1] w, int[::1] eta_rows, double[:, ::1] eta_mat, int count):
    cdef Py_ssize_t t, i, r, m = w.shape[0]
    cdef double wr
    for t in range(count):
        r = eta_rows[t]
        wr = w[r]
        if wr != 0.0:
            for i in range(m):
                w[i] = w[i] + eta_mat[t, i] * wr
            w[r] = w[r] - wr
    return np.asarray(w)


def apply_eta_chain_transposed(double[::1] y, int[::1] eta_rows, double[:, ::1] eta_mat, int count):
    cdef Py_ssize_t t, i, m = y.shape[0]
    cdef double acc
    for t in range(count - 1, -1, -1):
        acc = 0.0
        for i in range(m):
            acc += y[i] * eta_mat[t, i]
        y[eta_rows[t]] = acc
    return np.asarray(y)


def choose_entering(double[::1] d, signed char[::1] vstat, double dual_tol, bint bland):
    cdef Py_ssize_t j, n = d.shape[0]
    cdef Py_ssize_t best = -1
    cdef double score, best_score = -1.0
    cdef signed char s
    for j in range(n):
        s = vstat[j]
        if s == 0 and d[j] < -dual_tol:
            score = -d[j]
        elif s == 1 and d[j] > dual_tol:
            score = d[j]
        elif s == 3 and (d[j] > dual_tol or d[j] < -dual_tol):
            score = d[j] if d[j] > 0 else -d[j]
        else:
            continue
        if bland:
            return j
        if score > best_score:
            best_score = score
            best = j
    return best


def ratio_test(double[::1] xB, double[::1] loB, double[::1] upB, double[::1] w,
               double sigma, double bound_range, double feas_tol, double piv_tol,
               bint phase1):
    cdef Py_ssize_t i, m = xB.shape[0]
    cdef double rho, t, t_min = INF, window, aw, best_aw
    cdef double t_pos
    cdef int ev, ev_pos
    cdef Py_ssize_t pos

    for i in range(m):
        if w[i] > piv_tol or w[i] < -piv_tol:
            rho = -sigma * w[i]
            t = INF
            if phase1 and xB[i] < loB[i] - feas_tol:
                if rho > 0:
                    t = (loB[i] - xB[i]) / rho
            elif phase1 and xB[i] > upB[i] + feas_tol:
                if rho < 0:
                    t = (xB[i] - upB[i]) / (-rho)
            else:
                if rho < 0 and loB[i] > -INF:
                    t = (xB[i] - loB[i]) / (-rho)
                elif rho > 0 and upB[i] < INF:
                    t = (upB[i] - xB[i]) / rho
            if t < 0.0:
                t = 0.0
            if t < t_min:
                t_min = t

    if bound_range <= t_min:
        if bound_range == INF:
            return INF, -1, -1
        return bound_range, -1, 0

    window = t_min + 1e-10 * (1.0 + t_min)
    pos = -1
    best_aw = -1.0
    for i in range(m):
        if w[i] > piv_tol or w[i] < -piv_tol:
            rho = -sigma * w[i]
            t = INF
            ev = 0
            if phase1 and xB[i] < loB[i] - feas_tol:
                if rho > 0:
                    t = (loB[i] - xB[i]) / rho
                    ev = 1
            elif phase1 and xB[i] > upB[i] + feas_tol:
                if rho < 0:
                    t = (xB[i] - upB[i]) / (-rho)
                    ev = 2
            else:
                if rho < 0 and loB[i] > -INF:
                    t = (xB[i] - loB[i]) / (-rho)
                    ev = 1
                elif rho > 0 and upB[i] < INF:
                    t = (upB[i] - xB[i]) / rho
                    ev = 2
            if t < 0.0:
                t = 0.0
            if ev != 0 and t <= window:
                aw = w[i] if w[i] > 0 else -w[i]
                if aw > best_aw:
                    best_aw = aw
                    pos = i
                    if t < t_min:
                        t_min = t

    # pos found among tied candidates; recompute its exact ratio
    rho = -sigma * w[pos]
    t_pos = 0.0
    ev_pos = 1
    if phase1 and xB[pos] < loB[pos] - feas_tol:
        t_pos = (loB[pos] - xB[pos]) / rho
        ev_pos = 1
    elif phase1 and xB[pos] > upB[pos] + feas_tol:
        t_pos = (xB[pos] - upB[pos]) / (-rho)
        ev_pos = 2
    elif rho < 0:
        t_pos = (xB[pos] - loB[pos]) / (-rho)
        ev_pos = 1
    else:
        t_pos = (upB[pos] - xB[pos]) / rho
        ev_pos = 2
    if t_pos < 0.0:
        t_pos = 0.0
    return t_pos, pos, ev_pos


def infeasibility(double[::1] xB, double[::1] loB, double[::1] upB, double feas_tol):
    cdef Py_ssize_t i, m = xB.shape[0]
    cdef double v, total = 0.0
    for i in range(m):
        v = 0.0
        if xB[i] < loB[i]:
            v = loB[i] - xB[i]
        elif xB[i] > upB[i]:
            v = xB[i] - upB[i]
        if v > feas_tol:
            total += v
    return total


def phase1_costs(double[::1] xB, double[::1] loB, double[::1] upB, double feas_tol):
    cdef Py_ssize_t i, m = xB.shape[0]
    out = np.zeros(m)
    cdef double[::1] c = out
    for i in range(m):
        if xB[i] < loB[i] - feas_tol:
            c[i] = -1.0
        elif xB[i] > upB[i] + feas_tol:
            c[i] = 1.0
    return out
