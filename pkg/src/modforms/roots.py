"""Simultaneous polynomial root finding by Aberth-Ehrlich iteration.

Deterministic seeding keeps runs reproducible; no external polynomial
library is involved.
"""

from __future__ import annotations

import cmath
import random
from fractions import Fraction

from .polys import RatPoly


def _to_complex(c) -> complex:
    if isinstance(c, Fraction):
        return complex(c.numerator / c.denominator)
    return complex(c)


def aberth_roots(
    coeffs,
    seed: int = 0,
    tol: float = 1e-13,
    max_iter: int = 500,
) -> list[complex]:
    """All complex roots of a polynomial given by ascending coefficients."""
    cs = [_to_complex(c) for c in coeffs]
    while cs and abs(cs[-1]) == 0:
        cs.pop()
    n = len(cs) - 1
    if n < 1:
        raise ValueError("degree >= 1 required")
    lead = cs[-1]
    cs = [c / lead for c in cs]
    deriv = [i * c for i, c in enumerate(cs)][1:]

    def val(z: complex, poly) -> complex:
        acc = 0j
        for c in reversed(poly):
            acc = acc * z + c
        return acc

    # Fujiwara root bound keeps the start circle close to the actual roots
    radius = 2.0 * max(abs(cs[n - k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius, 0.5)
    rng = random.Random(seed)
    zs = [
        radius * cmath.exp(2j * cmath.pi * (i + 0.35 + 0.01 * rng.random()) / n)
        for i in range(n)
    ]
    for _ in range(max_iter):
        moved = 0.0
        new = list(zs)
        for i, z in enumerate(zs):
            pz = val(z, cs)
            dz = val(z, deriv)
            if dz == 0:
                new[i] = z + (0.01 + 0.01j)
                moved = max(moved, 1.0)
                continue
            w = pz / dz
            s = 0j
            for j, other in enumerate(zs):
                if j != i and z != other:
                    s += 1.0 / (z - other)
            denom = 1.0 - w * s
            corr = w / denom if denom != 0 else w
            new[i] = z - corr
            moved = max(moved, abs(corr) / max(1.0, abs(z)))
        zs = new
        if moved < tol:
            break
    return sorted(zs, key=lambda z: (round(z.real, 10), round(z.imag, 10)))


def real_roots(poly: RatPoly, imag_tol: float = 1e-8) -> list[float]:
    """Real roots of a rational polynomial, ascending (float precision)."""
    roots = aberth_roots(poly.coeffs)
    scale = max(1.0, max(abs(z) for z in roots))
    return sorted(z.real for z in roots if abs(z.imag) <= imag_tol * scale)
