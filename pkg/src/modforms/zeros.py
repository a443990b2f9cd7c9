"""Zeros of weight-12n Eisenstein series on the unit-circle arc of the
fundamental domain, and the algebraicity of the j-values there.

The exact side expands E_{12n} in the monomials E_12^(n-l) Delta^l by
iterated constant-term extraction; the numeric side locates arc zeros via
the real-valued rotation exp(ik theta/2) E_k(exp(i theta)) and matches the
j-values against the roots of the associated monic rational polynomial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .forms import delta, eisenstein_level1
from .identities import J_SHIFT
from .polys import RatPoly
from .qseries import QSeries
from .roots import aberth_roots

ARC_LOW = math.pi / 3
ARC_HIGH = math.pi / 2


@dataclass(frozen=True)
class MonomialExpansion:
    """E_{12n} = sum_l a_l E_12^(n-l) Delta^l with a_0 = 1 and all a_l in Q."""

    n: int
    coeffs: tuple[Fraction, ...]

    def as_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}


def expand_E12n(n: int, prec: int | None = None) -> MonomialExpansion:
    """Iterated constant-term extraction of the monomial coefficients.

    At step l+1 the accumulated residual is divided by Delta^(l+1) (a
    valuation shift plus a unit inversion) and the constant term is read off.
    The residual is asserted to vanish to the working precision.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if prec is None:
        prec = 4 * n + 20
    if prec < n + 2:
        raise ValueError(f"prec must be at least {n + 2}")
    e12 = eisenstein_level1(12, prec).series
    dl = delta(prec).series
    unit_inv = dl.shift(-1).inverse()  # (Delta/q)^(-1)
    e12_pows = [QSeries.constant(e12.field, 1, prec)]
    for _ in range(n):
        e12_pows.append(e12_pows[-1] * e12)
    residual = eisenstein_level1(12 * n, prec).series - e12_pows[n]
    coeffs = [Fraction(1)]
    dl_pow = QSeries.constant(dl.field, 1, prec)
    unit_inv_pow = QSeries.constant(dl.field, 1, prec)
    for l in range(1, n + 1):
        dl_pow = dl_pow * dl
        unit_inv_pow = unit_inv_pow * unit_inv
        quotient = residual.shift(-l) * unit_inv_pow
        a_l = quotient.coeff(0)
        coeffs.append(a_l)
        if a_l != 0:
            residual = residual - (e12_pows[n - l] * dl_pow).scale(a_l)
    if not residual.is_zero():
        raise ArithmeticError("monomial expansion residual is nonzero")
    return MonomialExpansion(n, tuple(coeffs))


def algebraic_poly(expansion: MonomialExpansion) -> RatPoly:
    """P(x) = sum_l a_l x^(n-l): monic of degree n; its roots are the values
    E_12/Delta at the arc zeros."""
    return RatPoly(list(reversed(expansion.coeffs)))


# ---------------------------------------------------------------------------
# High-precision evaluation on the arc
# ---------------------------------------------------------------------------


def _zeta_upper(s: int) -> float:
    """Cheap upper bound for zeta(s), s >= 2."""
    return 1.0 + 2.0**-s + 2.0 ** (1 - s) / (s - 1)


def eval_series_at(
    series: QSeries,
    z: complex,
    weight: int,
    coeff_bound: float | None = None,
    dps: int = 40,
):
    """Evaluate sum a_n exp(2 pi i n z) with a reported tail bound.

    The region is restricted to Im(z) >= 0.85 so that |q| <= 0.00482 and the
    tail is controlled; coeff_bound is A with |a_n| <= A n^(weight-1) (for
    the level-1 Eisenstein series A = |a_1| zeta(weight-1) works).
    """
    with mpmath.workdps(dps):
        z = mpmath.mpc(z)
        if z.imag < 0.85:
            raise ValueError("evaluation restricted to Im(z) >= 0.85")
        q = mpmath.exp(2j * mpmath.pi * z)
        r = abs(q)
        P = series.prec
        if mpmath.mpf(r) ** P > mpmath.mpf("1e-30"):
            raise ValueError(f"precision {P} too small: |q|^prec must be below 1e-30")
        if coeff_bound is None:
            e = weight - 1
            coeff_bound = 1.0
            for n in range(1, P):
                c = series.coeff(n)
                mag = abs(c.numerator) / c.denominator / max(n, 1) ** e
                coeff_bound = max(coeff_bound, mag * 1.0001)
        acc = mpmath.mpc(0)
        for c in reversed(series.coeffs):
            acc = acc * q + mpmath.mpf(c.numerator) / c.denominator
        e = weight - 1
        ratio = float(r) * math.exp(e / P)
        if ratio >= 0.5:
            raise ValueError("tail ratio bound fails; increase the precision")
        tail = float(mpmath.mpf(coeff_bound) * mpmath.mpf(P) ** e * r**P / (1 - ratio))
        return acc, tail


def _eisenstein_value(k: int, z, prec: int, dps: int):
    series = eisenstein_level1(k, prec).series
    a1 = series.coeff(1)
    bound = abs(a1.numerator) / a1.denominator * _zeta_upper(k - 1)
    return eval_series_at(series, z, k, coeff_bound=bound, dps=dps)


def jvalue_at(z, prec: int = 80, dps: int = 40):
    """j(z) = E_4(z)^3 / Delta(z) with Delta recovered from E_4 and E_6."""
    with mpmath.workdps(dps):
        e4, _ = _eisenstein_value(4, z, prec, dps)
        e6, _ = _eisenstein_value(6, z, prec, dps)
        dlt = (e4**3 - e6**2) / 1728
        return e4**3 / dlt


@dataclass(frozen=True)
class ArcZero:
    theta: float
    residual: float

    def as_json(self) -> dict:
        return {"theta": f"{self.theta:.15f}", "residual": f"{self.residual:.3e}"}


def arc_function(k: int, prec: int | None = None, dps: int = 40):
    """theta -> exp(ik theta/2) E_k(exp(i theta)), real on the arc."""
    if prec is None:
        prec = max(k + 10, 40)
    series = eisenstein_level1(k, prec).series
    a1 = series.coeff(1)
    bound = abs(a1.numerator) / a1.denominator * _zeta_upper(k - 1)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in series.coeffs]
        rmax = mpmath.exp(-2 * mpmath.pi * mpmath.sin(mpmath.mpf(ARC_LOW)))
        e = k - 1
        ratio = float(rmax) * math.exp(e / prec)
        assert ratio < 0.5
        tail = float(mpmath.mpf(bound) * mpmath.mpf(prec) ** e * rmax**prec / (1 - ratio))

    def f(theta):
        with mpmath.workdps(dps):
            theta = mpmath.mpf(theta)
            q = mpmath.exp(2j * mpmath.pi * mpmath.exp(1j * theta))
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * q + c
            rotated = mpmath.exp(0.5j * k * theta) * acc
            assert abs(rotated.imag) <= tail + mpmath.mpf("1e-25") * (1 + abs(rotated))
            return rotated.real

    f.tail_bound = tail
    return f


def find_arc_zeros(
    k: int,
    tol: float = 1e-12,
    samples: int = 2048,
    dps: int = 40,
) -> list[ArcZero]:
    """Zeros of E_k on the arc, from sign changes of the rotated real form
    plus bisection; k must be a multiple of 12."""
    if k % 12:
        raise ValueError("arc-zero search is defined for weights divisible by 12")
    f = arc_function(k, dps=dps)
    with mpmath.workdps(dps):
        lo, hi = mpmath.mpf(ARC_LOW), mpmath.mpf(ARC_HIGH)
        step = (hi - lo) / samples
        grid = [lo + i * step for i in range(samples + 1)]
        values = [f(t) for t in grid]
        zeros: list[ArcZero] = []
        for i in range(samples):
            a, b = grid[i], grid[i + 1]
            fa, fb = values[i], values[i + 1]
            if fa == 0:
                zeros.append(ArcZero(float(a), 0.0))
                continue
            if fa * fb < 0:
                while b - a > tol:
                    mid = (a + b) / 2
                    fm = f(mid)
                    if fm == 0:
                        a = b = mid
                        break
                    if fa * fm < 0:
                        b, fb = mid, fm
                    else:
                        a, fa = mid, fm
                theta = (a + b) / 2
                zeros.append(ArcZero(float(theta), float(abs(f(theta)))))
        return zeros


@dataclass
class JAlgebraicityReport:
    n: int
    expansion: MonomialExpansion
    zeros: list[ArcZero]
    j_values: list[complex]
    poly_roots_shifted: list[complex]
    max_pair_distance: float
    status: str
    tol: float

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "coeffs": [str(c) for c in self.expansion.coeffs],
            "zeros": [z.as_json() for z in self.zeros],
            "j_values": [f"{v.real:.12e}{v.imag:+.3e}j" for v in self.j_values],
            "poly_roots_shifted": [f"{v.real:.12e}{v.imag:+.3e}j" for v in self.poly_roots_shifted],
            "max_pair_distance": f"{self.max_pair_distance:.3e}",
            "status": self.status,
            "tol": f"{self.tol:.1e}",
        }


def _best_pairing(xs: list[complex], ys: list[complex]) -> float:
    """Minimum over pairings of the maximum pointwise distance (brute force)."""
    best = math.inf
    assert len(xs) == len(ys)
    for per in itertools.permutations(range(len(ys))):
        worst = max(abs(x - ys[j]) for x, j in zip(xs, per))
        best = min(best, worst)
    return best


def jvalue_algebraicity_check(
    n: int,
    tol_match: float = 1e-8,
    tol_zero: float = 1e-12,
    samples: int = 2048,
    seed: int = 0,
    dps: int = 40,
) -> JAlgebraicityReport:
    """Match the j-values at the arc zeros of E_{12n} against the roots of the
    exact monomial polynomial shifted by 432000/691."""
    expansion = expand_E12n(n)
    poly = algebraic_poly(expansion)
    zeros = find_arc_zeros(12 * n, tol=tol_zero, samples=samples, dps=dps)
    with mpmath.workdps(dps):
        jvals = []
        for z in zeros:
            zz = mpmath.exp(1j * mpmath.mpf(z.theta))
            jvals.append(complex(jvalue_at(zz, dps=dps)))
    shift = float(J_SHIFT)  # 432000/691, the exact j-shift constant
    roots = [complex(r) + shift for r in aberth_roots(poly.coeffs, seed=seed)]
    if len(zeros) != n or len(roots) != n:
        return JAlgebraicityReport(
            n, expansion, zeros, jvals, roots, math.inf, "failed", tol_match
        )
    dist = _best_pairing(jvals, roots)
    status = "verified" if dist <= tol_match else "failed"
    return JAlgebraicityReport(n, expansion, zeros, jvals, roots, dist, status, tol_match)
