"""Pure-Python impulse-polygon propagation kernel.

Fallback for environments without the compiled extension.  The arithmetic is
operation-for-operation identical to _propagate_cy.pyx so both backends
produce bitwise matching trajectories.
"""

from math import sqrt

import numpy as np


def propagate_kernel(x, y, vx, vy, m, dt, steps, record_every, collision_radius):
    """See _propagate_cy.propagate_kernel."""
    n_rec = steps // record_every + 1
    t_arr = np.empty(n_rec)
    x_arr = np.empty(n_rec)
    y_arr = np.empty(n_rec)
    vx_arr = np.empty(n_rec)
    vy_arr = np.empty(n_rec)

    t = 0.0
    idx = 1
    t_arr[0] = 0.0
    x_arr[0] = x
    y_arr[0] = y
    vx_arr[0] = vx
    vy_arr[0] = vy

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
            t_arr[idx] = t
            x_arr[idx] = x
            y_arr[idx] = y
            vx_arr[idx] = vx
            vy_arr[idx] = vy
            idx += 1

    return (t_arr[:idx], x_arr[:idx], y_arr[:idx], vx_arr[:idx], vy_arr[:idx], -1)
