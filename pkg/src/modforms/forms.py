"""Concrete modular forms: level-1 Eisenstein series, the discriminant form,
the j-function, echelonized bases, and level-N Eisenstein series with
characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import sigma
from .dirichlet import (
    DirichletCharacter,
    bernoulli_number,
    compositum_field,
    gen_bernoulli,
    induce,
    sigma_gen,
    trivial_character,
)
from .numfield import QQ, embed_cyclotomic
from .qseries import QSeries


@dataclass(frozen=True)
class ModularForm:
    weight: int
    level: int
    character: DirichletCharacter
    series: QSeries
    label: str

    def coeff(self, n: int):
        return self.series.coeff(n)

    @property
    def prec(self) -> int:
        return self.series.prec

    def as_json(self) -> dict:
        return {
            "weight": self.weight,
            "level": self.level,
            "character": self.character.as_json(),
            "label": self.label,
            "series": self.series.as_json(),
        }


def dim_Mk(k: int) -> int:
    """Dimension of the weight-k forms for the full modular group."""
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def dim_Sk(k: int) -> int:
    """Dimension of the weight-k cusp subspace."""
    if k < 4:
        return 0
    return max(dim_Mk(k) - 1, 0)


def eisenstein_level1(k: int, prec: int) -> ModularForm:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, exact rational coefficients."""
    if k % 2 or k < 4:
        raise ValueError("level-1 Eisenstein series need even weight k >= 4")
    factor = Fraction(-2 * k) / bernoulli_number(k)
    coeffs = [Fraction(1)] + [factor * sigma(k - 1, n) for n in range(1, prec)]
    return ModularForm(k, 1, trivial_character(1), QSeries(QQ, coeffs), f"E{k}")


def _int_series_mul(a: list[int], b: list[int], prec: int) -> list[int]:
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, y in enumerate(b[: prec - i]):
                if y:
                    out[i + j] += x * y
    return out


def delta(prec: int) -> ModularForm:
    """The discriminant cusp form q prod (1 - q^n)^24, by exact expansion."""
    if prec < 1:
        raise ValueError("prec must be positive")
    eta = [0] * max(prec, 1)
    eta[0] = 1
    for n in range(1, prec):
        for i in range(prec - 1, n - 1, -1):
            eta[i] -= eta[i - n]
    power = [1]
    base = eta
    e = 24
    while e:
        if e & 1:
            power = _int_series_mul(power, base, prec)
        base = _int_series_mul(base, base, prec)
        e >>= 1
    coeffs = [0] + power[: prec - 1]
    return ModularForm(12, 1, trivial_character(1), QSeries(QQ, coeffs, prec), "Delta")


def jfunction(prec: int) -> QSeries:
    """The series of j*q = E_4^3 / (Delta/q); consumers shift the exponent by one."""
    if prec < 2:
        raise ValueError("prec must be at least 2")
    e4 = eisenstein_level1(4, prec).series
    delta_over_q = delta(prec + 1).series.shift(-1)
    return (e4**3) * delta_over_q.inverse()


@dataclass(frozen=True)
class SpaceBasis:
    weight: int
    cusp_only: bool
    forms: tuple[ModularForm, ...]
    prec: int

    @property
    def dim(self) -> int:
        return len(self.forms)


def miller_basis(k: int, prec: int | None = None, cusp_only: bool = False) -> SpaceBasis:
    """Echelonized monomial basis of the weight-k space (or its cusp subspace).

    Monomials E_4^a E_6^b Delta^c with 4a + 6b + 12c = k and b in {0, 1} span;
    Gaussian elimination on the leading coefficients puts form i at valuation
    i with unit leading coefficient.
    """
    if k % 2 or k < 0 or k == 2:
        raise ValueError("weight must be 0 or an even integer >= 4")
    d = dim_Mk(k)
    if prec is None:
        prec = 10 * d + 10
    if prec <= d:
        raise ValueError(f"prec must exceed the dimension {d} to echelonize")
    if k == 0:
        one = ModularForm(0, 1, trivial_character(1), QSeries(QQ, [1], prec), "M0.0")
        return SpaceBasis(0, cusp_only, () if cusp_only else (one,), prec)
    e4 = eisenstein_level1(4, prec).series
    e6 = eisenstein_level1(6, prec).series
    dl = delta(prec).series
    rows = []
    dpow = QSeries.constant(QQ, 1, prec)
    for j in range(d):
        w = k - 12 * j
        b = 1 if w % 4 == 2 else 0
        a = (w - 6 * b) // 4
        rows.append((e4**a) * (e6**b) * dpow if (a or b) else dpow)
        dpow = dpow * dl
    for c in range(d):
        piv = rows[c].coeff(c)
        assert piv != 0
        if piv != 1:
            rows[c] = rows[c].scale(1 / piv)
        for r in range(d):
            if r != c:
                f = rows[r].coeff(c)
                if f != 0:
                    rows[r] = rows[r] - rows[c].scale(f)
    start = 1 if cusp_only else 0
    tag = "S" if cusp_only else "M"
    forms = tuple(
        ModularForm(k, 1, trivial_character(1), rows[j], f"{tag}{k}.{j}")
        for j in range(start, d)
    )
    return SpaceBasis(k, cusp_only, forms, prec)


def eisenstein_levelN(
    psi: DirichletCharacter,
    phi: DirichletCharacter,
    t: int,
    k: int,
    prec: int,
) -> ModularForm:
    """Eisenstein series for a pair of primitive characters, dilated by t.

    Constant term delta(psi) * (-B_{k,phi}/k); higher coefficients are twice
    the twisted divisor sums, with q^n -> q^(tn) under the dilation.
    """
    if k < 3:
        raise ValueError("weight must be at least 3")
    if t < 1:
        raise ValueError("dilation must be positive")
    if not (psi.is_primitive() and phi.is_primitive()):
        raise ValueError("both characters must be primitive")
    if psi.parity() * phi.parity() != (-1) ** k:
        raise ValueError("parity mismatch: the series vanishes identically")
    field = compositum_field(psi, phi)
    coeffs = [field.zero()] * prec
    if psi.modulus == 1:
        coeffs[0] = embed_cyclotomic(gen_bernoulli(k, phi), field) * Fraction(-1, k)
    for n in range(1, (prec - 1) // t + 1):
        coeffs[t * n] = 2 * sigma_gen(k - 1, psi, phi, n)
    level = t * psi.modulus * phi.modulus
    character = induce(psi, level) * induce(phi, level)
    label = f"Eis[{psi.modulus}.{'.'.join(map(str, psi.exponents))},{phi.modulus}.{'.'.join(map(str, phi.exponents))},{t},{k}]"
    return ModularForm(k, level, character, QSeries(field, coeffs, prec), label)
