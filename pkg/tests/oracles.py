"""Independent brute-force oracles written straight from the definitions.

They use complex floats and explicit loops over points, sharing nothing with
the library except the index convention (x_n is the least significant bit).
"""
from __future__ import annotations

import cmath
from itertools import product

import numpy as np


def bits(t: int, n: int) -> list[int]:
    return [(t >> (n - 1 - j)) & 1 for j in range(n)]


def zeta(order: int, e: int = 1) -> complex:
    return cmath.exp(2j * cmath.pi * e / order)


def lam(x: list[int], blocks) -> complex:
    """prod_s alpha_s^{wt(x_{R_s})} with alpha_s = zeta_{order_s}."""
    out = 1
    for idx, order in blocks:
        out *= zeta(order, sum(x[j] for j in idx))
    return out


def mu_power(x: list[int], z: list[int], blocks) -> complex:
    out = 1
    for idx, order in blocks:
        out *= zeta(order, 2 * sum(x[j] * z[j] for j in idx))
    return out


def root_hadamard(values, n: int, k: int, blocks) -> np.ndarray:
    q = 1 << k
    out = np.zeros(1 << n, dtype=complex)
    for u in range(1 << n):
        ub = bits(u, n)
        s = 0
        for t in range(1 << n):
            x = bits(t, n)
            sign = (-1) ** sum(a * b for a, b in zip(ub, x))
            s += zeta(q, int(values[t])) * sign * lam(x, blocks)
        out[u] = s
    return out


def root_crosscorrelation(F, G, n: int, k: int, blocks, z: int) -> complex:
    """sum_x zeta^{F(x+z) - G(x)} prod_s mu_s^{x_R . z_R}"""
    q = 1 << k
    zb = bits(z, n)
    s = 0
    for t in range(1 << n):
        x = bits(t, n)
        s += zeta(q, int(F[t ^ z]) - int(G[t])) * mu_power(x, zb, blocks)
    return s


def kernel_matrix(n: int, blocks) -> np.ndarray:
    """M[u, x] = (-1)^{u.x} lambda(x), for vectorised float oracles."""
    M = np.zeros((1 << n, 1 << n), dtype=complex)
    for u in range(1 << n):
        for t in range(1 << n):
            x = bits(t, n)
            M[u, t] = (-1) ** sum(a * b for a, b in zip(bits(u, n), x)) * lam(x, blocks)
    return M


def anf_eval(monomials, x: list[int]) -> int:
    """monomials: iterable of tuples of 1-based variable indices."""
    return sum(all(x[v - 1] for v in mon) for mon in monomials) % 2


def aperiodic(a, b, k: int) -> int:
    return sum(a[i] * b[i + k] for i in range(len(a) - k))


def periodic(a, b, k: int) -> int:
    N = len(a)
    return sum(a[i] * b[(i + k) % N] for i in range(N))


def negaperiodic(a, b, k: int) -> int:
    N = len(a)
    return sum(a[i] * b[(i + k) % N] * (-1) ** ((i + k) // N) for i in range(N))


def bipolar(N: int):
    return list(product((1, -1), repeat=N))
