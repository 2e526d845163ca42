"""Shared oracles and random-input helpers, independent of the implementation
paths they check."""

import numpy as np

from cl33.blades import BLADE_COUNT, SQUARES


def naive_blade_product(a, b, squares=SQUARES):
    """Sorted-list oracle: concatenate factor lists, bubble-sort counting
    swaps, collapse equal adjacent factors into their squares."""
    factors = [i for i in range(6) if a >> i & 1] + [i for i in range(6) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            if factors[i] > factors[i + 1]:
                factors[i], factors[i + 1] = factors[i + 1], factors[i]
                sign = -sign
                changed = True
    reduced = []
    i = 0
    while i < len(factors):
        if i + 1 < len(factors) and factors[i] == factors[i + 1]:
            sign *= squares[factors[i]]
            i += 2
        else:
            reduced.append(factors[i])
            i += 1
    mask = 0
    for f in reduced:
        mask |= 1 << f
    return sign, mask


def naive_geometric_product(x, y):
    """Coefficient-level double loop over the blade oracle."""
    out = np.zeros(BLADE_COUNT)
    for a in range(BLADE_COUNT):
        if x[a] == 0.0:
            continue
        for b in range(BLADE_COUNT):
            if y[b] == 0.0:
                continue
            sign, mask = naive_blade_product(a, b)
            out[mask] += sign * x[a] * y[b]
    return out


def rand_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def rand_orthonormal(rng):
    a = rand_unit(rng)
    b = rng.normal(size=3)
    b -= (b @ a) * a
    return a, b / np.linalg.norm(b)


def householder(n):
    n = np.asarray(n, dtype=float)
    return np.eye(3) - 2.0 * np.outer(n, n)


def perspective_oracle_matrix(e, n, c):
    """Homogeneous 4x4 of projection from the eye at e onto the plane
    x . n = c, acting on (w, p); image of (1, p) normalizes to the
    line-plane intersection."""
    e = np.asarray(e, dtype=float)
    n = np.asarray(n, dtype=float)
    a = c - n @ e
    m = np.zeros((4, 4))
    m[0, 0] = -(n @ e)
    m[0, 1:] = n
    m[1:, 0] = -a * e - (n @ e) * e
    m[1:, 1:] = a * np.eye(3) + np.outer(e, n)
    return m


def pseudo_perspective_oracle_matrix(n):
    n = np.asarray(n, dtype=float)
    m = np.eye(4)
    m[0, 1:] = n
    return m
