# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled impulse-polygon propagation kernel.

Kick-then-drift with the acceleration evaluated at the pre-kick position:

    v' = v - (m / r^3) * p * dt
    p' = p + v' * dt

The arithmetic here must stay operation-for-operation identical to the
pure-Python fallback in _propagate_py so both backends produce bitwise
matching trajectories.
"""

from libc.math cimport sqrt

import numpy as np


def propagate_kernel(double x, double y, double vx, double vy,
                     double m, double dt, long steps, long record_every,
                     double collision_radius):
    """Run the impulse polygon; record the initial state and every
    record_every-th step.  Returns (t, x, y, vx, vy, collided_step) with
    collided_step = -1 on a clean run; on collision the arrays are truncated
    to the samples recorded before the offending step.
    """
    cdef long n_rec = steps // record_every + 1
    t_arr = np.empty(n_rec, dtype=np.float64)
    x_arr = np.empty(n_rec, dtype=np.float64)
    y_arr = np.empty(n_rec, dtype=np.float64)
    vx_arr = np.empty(n_rec, dtype=np.float64)
    vy_arr = np.empty(n_rec, dtype=np.float64)
    cdef double[::1] tv = t_arr
    cdef double[::1] xv = x_arr
    cdef double[::1] yv = y_arr
    cdef double[::1] vxv = vx_arr
    cdef double[::1] vyv = vy_arr

    cdef double t = 0.0
    cdef double r2, r, f
    cdef long k, idx = 1

    tv[0] = 0.0
    xv[0] = x
    yv[0] = y
    vxv[0] = vx
    vyv[0] = vy

    for k in range(1, steps + 1):
        r2 = x * x + y * y
        r = sqrt(r2)
        if r < collision_radius:
            return (t_arr[:idx], x_arr[:idx], y_arr[:idx],
                    vx_arr[:idx], vy_arr[:idx], k)
        f = m / (r2 * r) * dt
        vx = vx - f * x
        vy = vy - f * y
        x = x + vx * dt
        y = y + vy * dt
        t = t + dt
        if k % record_every == 0:
            tv[idx] = t
            xv[idx] = x
            yv[idx] = y
            vxv[idx] = vx
            vyv[idx] = vy
            idx += 1

    return (t_arr[:idx], x_arr[:idx], y_arr[:idx], vx_arr[:idx], vy_arr[:idx], -1)
