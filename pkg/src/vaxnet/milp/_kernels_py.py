"""Numpy implementation of the simplex pivot kernels.

Same contract as the compiled module ``vaxnet.milp._kernels``; selection
between the two happens in :mod:`vaxnet.milp.kernels`.  Status codes for
variables: 0 nonbasic at lower, 1 nonbasic at upper, 2 basic, 3 nonbasic
free (value 0).
"""

import numpy as np

BACKEND = "python"

NB_LOWER = 0
NB_UPPER = 1
BASIC = 2
NB_FREE = 3


def apply_eta_chain(w, eta_rows, eta_mat, count):
    """Apply eta transformations E_1 .. E_count (oldest first) to ``w`` in place."""
    for t in range(count):
        r = eta_rows[t]
        wr = w[r]
        if wr != 0.0:
            w += eta_mat[t] * wr
            w[r] -= wr
    return w


def apply_eta_chain_transposed(y, eta_rows, eta_mat, count):
    """Apply transposed etas E_count .. E_1 (newest first) to ``y`` in place."""
    for t in range(count - 1, -1, -1):
        y[eta_rows[t]] = float(np.dot(y, eta_mat[t]))
    return y


def choose_entering(d, vstat, dual_tol, bland):
    """Index of the entering column, or -1 if the current point is optimal.

    Dantzig rule: largest reduced-cost violation; ties and the Bland
    fallback both resolve to the lowest column index.
    """
    at_lower = (vstat == NB_LOWER) & (d < -dual_tol)
    at_upper = (vstat == NB_UPPER) & (d > dual_tol)
    free = (vstat == NB_FREE) & (np.abs(d) > dual_tol)
    eligible = at_lower | at_upper | free
    if not eligible.any():
        return -1
    if bland:
        return int(np.argmax(eligible))
    score = np.where(eligible, np.abs(d), -1.0)
    return int(np.argmax(score))


def ratio_test(xB, loB, upB, w, sigma, bound_range, feas_tol, piv_tol, phase1):
    """Bounded-variable ratio test with stop-at-first-breakpoint semantics.

    The entering variable moves by ``t >= 0`` with direction ``sigma``;
    basic values change at rates ``-sigma * w``.  In phase 1 a basic
    variable outside its bounds blocks only when it reaches the violated
    bound (where it becomes feasible and leaves the basis).

    Returns ``(t, pos, event)`` where event is 1 (leave at lower),
    2 (leave at upper), 0 (entering bound flip, pos == -1) or
    -1 (unbounded ray).
    """
    rho = -sigma * w
    m = xB.shape[0]
    usable = np.abs(w) > piv_tol

    t_cand = np.full(m, np.inf)
    ev_cand = np.zeros(m, dtype=np.int8)

    below = phase1 & (xB < loB - feas_tol)
    above = phase1 & (xB > upB + feas_tol)
    inside = ~(below | above)

    # Feasible basics: block at the bound they move toward.
    dec = usable & inside & (rho < 0) & np.isfinite(loB)
    t_cand[dec] = (xB[dec] - loB[dec]) / (-rho[dec])
    ev_cand[dec] = 1
    inc = usable & inside & (rho > 0) & np.isfinite(upB)
    t_cand[inc] = (upB[inc] - xB[inc]) / rho[inc]
    ev_cand[inc] = 2

    if phase1:
        # Infeasible basics block when they reach the violated bound.
        heal_lo = usable & below & (rho > 0)
        t_cand[heal_lo] = (loB[heal_lo] - xB[heal_lo]) / rho[heal_lo]
        ev_cand[heal_lo] = 1
        heal_up = usable & above & (rho < 0)
        t_cand[heal_up] = (xB[heal_up] - upB[heal_up]) / (-rho[heal_up])
        ev_cand[heal_up] = 2

    np.maximum(t_cand, 0.0, out=t_cand)
    t_min = t_cand.min() if m else np.inf

    if bound_range <= t_min:
        if np.isinf(bound_range):
            return np.inf, -1, -1
        return float(bound_range), -1, 0

    # Among near-minimal ratios prefer the largest pivot magnitude
    # (deterministic light Harris test; ties resolve to the lowest row).
    window = t_min + 1e-10 * (1.0 + t_min)
    tied = t_cand <= window
    aw = np.where(tied, np.abs(w), -1.0)
    pos = int(np.argmax(aw))
    return float(t_cand[pos]), pos, int(ev_cand[pos])


def infeasibility(xB, loB, upB, feas_tol):
    """Total bound violation of the basic variables beyond tolerance."""
    lo_v = np.maximum(loB - xB, 0.0)
    up_v = np.maximum(xB - upB, 0.0)
    v = lo_v + up_v
    v[v <= feas_tol] = 0.0
    return float(v.sum())


def phase1_costs(xB, loB, upB, feas_tol):
    """Gradient of the infeasibility sum with respect to basic values."""
    c = np.zeros(xB.shape[0])
    c[xB < loB - feas_tol] = -1.0
    c[xB > upB + feas_tol] = 1.0
    return c
