"""Numba-jitted implementations of the hot numerical kernels.

Loop structure mirrors ``_kernels_numpy`` exactly; see that module for the
definitions.  Compiled lazily on first call, cached on disk.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def rk4_amplitude(omega2, delta_c, lam, xi, nu, ce0, n_steps, h):
    a = 1j * delta_c - 0.5 * lam
    c = np.empty(n_steps + 1, dtype=np.complex128)
    b = np.empty(n_steps + 1, dtype=np.complex128)
    c[0] = ce0
    b[0] = 0.0
    cj = ce0 + 0.0j
    bj = 0.0 + 0.0j
    for j in range(n_steps):
        t = j * h
        ph1 = np.exp(1j * xi * np.sin(nu * t))
        ph2 = np.exp(1j * xi * np.sin(nu * (t + 0.5 * h)))
        ph3 = np.exp(1j * xi * np.sin(nu * (t + h)))

        k1c = -omega2 * ph1 * bj
        k1b = a * bj + cj / ph1

        c2 = cj + 0.5 * h * k1c
        b2 = bj + 0.5 * h * k1b
        k2c = -omega2 * ph2 * b2
        k2b = a * b2 + c2 / ph2

        c3 = cj + 0.5 * h * k2c
        b3 = bj + 0.5 * h * k2b
        k3c = -omega2 * ph2 * b3
        k3b = a * b3 + c3 / ph2

        c4 = cj + h * k3c
        b4 = bj + h * k3b
        k4c = -omega2 * ph3 * b4
        k4b = a * b4 + c4 / ph3

        cj = cj + (h / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        bj = bj + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        c[j + 1] = cj
        b[j + 1] = bj
    return c, b


@njit(cache=True)
def rk4_sensitivity(omega2, delta_c, lam, xi, nu, ce0, n_steps, h):
    a = 1j * delta_c - 0.5 * lam
    c = np.empty(n_steps + 1, dtype=np.complex128)
    b = np.empty(n_steps + 1, dtype=np.complex128)
    dc = np.empty(n_steps + 1, dtype=np.complex128)
    db = np.empty(n_steps + 1, dtype=np.complex128)
    c[0] = ce0
    b[0] = 0.0
    dc[0] = 0.0
    db[0] = 0.0
    cj = ce0 + 0.0j
    bj = 0.0 + 0.0j
    dcj = 0.0 + 0.0j
    dbj = 0.0 + 0.0j
    for j in range(n_steps):
        t = j * h
        ph1 = np.exp(1j * xi * np.sin(nu * t))
        ph2 = np.exp(1j * xi * np.sin(nu * (t + 0.5 * h)))
        ph3 = np.exp(1j * xi * np.sin(nu * (t + h)))

        k1c = -omega2 * ph1 * bj
        k1b = a * bj + cj / ph1
        k1dc = -omega2 * ph1 * dbj
        k1db = a * dbj + 1j * bj + dcj / ph1

        c2 = cj + 0.5 * h * k1c
        b2 = bj + 0.5 * h * k1b
        dc2 = dcj + 0.5 * h * k1dc
        db2 = dbj + 0.5 * h * k1db
        k2c = -omega2 * ph2 * b2
        k2b = a * b2 + c2 / ph2
        k2dc = -omega2 * ph2 * db2
        k2db = a * db2 + 1j * b2 + dc2 / ph2

        c3 = cj + 0.5 * h * k2c
        b3 = bj + 0.5 * h * k2b
        dc3 = dcj + 0.5 * h * k2dc
        db3 = dbj + 0.5 * h * k2db
        k3c = -omega2 * ph2 * b3
        k3b = a * b3 + c3 / ph2
        k3dc = -omega2 * ph2 * db3
        k3db = a * db3 + 1j * b3 + dc3 / ph2

        c4 = cj + h * k3c
        b4 = bj + h * k3b
        dc4 = dcj + h * k3dc
        db4 = dbj + h * k3db
        k4c = -omega2 * ph3 * b4
        k4b = a * b4 + c4 / ph3
        k4dc = -omega2 * ph3 * db4
        k4db = a * db4 + 1j * b4 + dc4 / ph3

        cj = cj + (h / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        bj = bj + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        dcj = dcj + (h / 6.0) * (k1dc + 2.0 * k2dc + 2.0 * k3dc + k4dc)
        dbj = dbj + (h / 6.0) * (k1db + 2.0 * k2db + 2.0 * k3db + k4db)
        c[j + 1] = cj
        b[j + 1] = bj
        dc[j + 1] = dcj
        db[j + 1] = dbj
    return c, b, dc, db


@njit(cache=True)
def volterra_direct(omega2, delta_c, lam, xi, nu, ce0, n_steps, h):
    a = 1j * delta_c - 0.5 * lam
    tau = np.arange(n_steps + 1) * h
    snu = np.sin(nu * tau)
    c = np.empty(n_steps + 1, dtype=np.complex128)
    c[0] = ce0
    for j in range(1, n_steps + 1):
        m = j - 1
        if m == 0:
            f0 = 0.0 + 0.0j
        else:
            s = 0.0 + 0.0j
            for i in range(m + 1):
                k = np.exp(a * (tau[m] - tau[i]) + 1j * xi * (snu[m] - snu[i]))
                if i == 0 or i == m:
                    s += 0.5 * c[i] * k
                else:
                    s += c[i] * k
            f0 = -omega2 * h * s
        cp = c[m] + h * f0
        s = 0.0 + 0.0j
        for i in range(j):
            k = np.exp(a * (tau[j] - tau[i]) + 1j * xi * (snu[j] - snu[i]))
            if i == 0:
                s += 0.5 * c[i] * k
            else:
                s += c[i] * k
        s += 0.5 * cp
        f1 = -omega2 * h * s
        c[j] = c[m] + 0.5 * h * (f0 + f1)
    return c


@njit(cache=True)
def kernel_quadrature(omega, fw, omega0, h, n_s):
    nw = fw.shape[0]
    nom = omega.shape[0]
    kout = np.empty((nw, n_s + 1), dtype=np.complex128)
    ph = np.ones(nom, dtype=np.complex128)
    step = np.exp(1j * (omega0 - omega) * h)
    for j in range(n_s + 1):
        for w in range(nw):
            acc = 0.0 + 0.0j
            for k in range(nom):
                acc += fw[w, k] * ph[k]
            kout[w, j] = acc
        for k in range(nom):
            ph[k] *= step[k]
    return kout


@njit(cache=True)
def history_coeffs(kern, u, h):
    n = u.shape[0] - 1
    uc = np.conj(u)
    g = np.empty(n + 1, dtype=np.complex128)
    g[0] = 0.0
    for j in range(1, n + 1):
        s = 0.0 + 0.0j
        for i in range(j + 1):
            term = uc[i] * kern[j - i]
            if i == 0 or i == j:
                s += 0.5 * term
            else:
                s += term
        g[j] = h * u[j] * s
    return g
