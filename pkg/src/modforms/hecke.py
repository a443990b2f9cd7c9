"""Hecke operators on q-expansions: exact matrices on the echelon cusp basis,
characteristic polynomials, and normalized eigenbases over number fields."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors
from .dirichlet import DirichletCharacter
from .forms import dim_Sk, miller_basis
from .linalg import charpoly_rational, invert_rational, kernel_vector, mat_mul
from .numfield import QQ, NumberField
from .polys import RatPoly, poly_irreducible
from .qseries import QSeries


class UnsupportedHeckeField(RuntimeError):
    """Raised when no irreducibility certificate backs the eigenbasis
    construction (or a charpoly is exhibited reducible)."""


def hecke_action(
    series: QSeries,
    m: int,
    k: int,
    chi: DirichletCharacter | None = None,
    prec: int | None = None,
) -> QSeries:
    """Apply T_m to a q-expansion of weight k.

    Coefficientwise: the n-th output is the sum over m1 | gcd(m, n) of
    chi(m1) m1^(k-1) a_{mn/m1^2}, with the usual constant-term rule. The
    input must carry at least m*(prec-1)+1 coefficients.
    """
    if m < 1:
        raise ValueError("operator index must be positive")
    if prec is None:
        prec = (series.prec - 1) // m + 1
    required = m * (prec - 1) + 1
    if series.prec < required:
        raise ValueError(
            f"insufficient precision: T_{m} to {prec} terms needs {required}, have {series.prec}"
        )
    field = series.field

    def chi_val(n: int):
        if chi is None:
            return Fraction(1)
        if field is QQ:
            return chi.rational_value(n)
        return chi.value_in(field, n)

    out = []
    const = field.zero()
    a0 = series.coeff(0)
    if a0 != 0:
        s = field.zero()
        for m1 in divisors(m):
            v = chi_val(m1)
            if v != 0:
                s = s + v * Fraction(m1) ** (k - 1)
        const = a0 * s
    out.append(const)
    for n in range(1, prec):
        s = field.zero()
        for m1 in divisors(math.gcd(m, n)):
            v = chi_val(m1)
            if v == 0:
                continue
            s = s + v * Fraction(m1) ** (k - 1) * series.coeff(m * n // (m1 * m1))
        out.append(s)
    return QSeries(field, out, prec)


@dataclass(frozen=True)
class HeckeMatrix:
    index: int
    weight: int
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def as_json(self) -> dict:
        cp = charpoly(self)
        den, ints = cp.clear_denominators()
        return {
            "index": self.index,
            "weight": self.weight,
            "entries": [[str(x) for x in row] for row in self.entries],
            "charpoly": {"coeffs": ints, "denominator": den},
        }


def hecke_matrix(n: int, k: int, prec: int | None = None) -> HeckeMatrix:
    """Matrix of T_n on the echelon cusp basis of weight k.

    The echelon structure makes coordinates equal to the coefficients at
    q^1..q^dim, so columns are read off directly from the transformed basis.
    """
    d = dim_Sk(k)
    if d < 1:
        raise ValueError(f"weight {k} has no cusp forms")
    need = n * (d + 1) + 2
    basis = miller_basis(k, max(prec or 0, need), cusp_only=True)
    cols = []
    for form in basis.forms:
        image = hecke_action(form.series, n, k, prec=d + 1)
        cols.append([image.coeff(i) for i in range(1, d + 1)])
    entries = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return HeckeMatrix(n, k, entries)


def charpoly(matrix: HeckeMatrix) -> RatPoly:
    """Exact characteristic polynomial det(xI - T_n)."""
    return charpoly_rational([list(row) for row in matrix.entries])


@dataclass(frozen=True)
class Eigenform:
    weight: int
    field: object  # QQ or NumberField
    series: QSeries
    label: str
    hecke_index: int = 2  # index n with a_n equal to the field generator

    def a(self, n: int):
        return self.series.coeff(n)

    @property
    def prec(self) -> int:
        return self.series.prec

    def as_json(self) -> dict:
        if isinstance(self.field, NumberField):
            field_desc = {"modulus": [str(c) for c in self.field.modulus.coeffs]}
        else:
            field_desc = "Q"
        return {
            "weight": self.weight,
            "label": self.label,
            "field": field_desc,
            "series": self.series.as_json(),
        }


def eigenbasis(
    k: int,
    prec: int | None = None,
    hecke_indices: tuple[int, ...] = (2, 3, 5),
) -> list[Eigenform]:
    """Normalized eigenbasis of the weight-k cusp space, as one orbit
    representative over the Hecke field.

    For dim >= 2 this requires an irreducibility certificate for some
    T_n charpoly; the Galois conjugates of the returned form are implicit.
    """
    d = dim_Sk(k)
    if d == 0:
        raise ValueError(f"weight {k} has no cusp forms")
    if prec is None:
        prec = max(3 * d + 5, 12)
    basis = miller_basis(k, max(prec, 3 * d + 5), cusp_only=True)
    if d == 1:
        series = basis.forms[0].series.truncate(prec) if basis.prec > prec else basis.forms[0].series
        return [Eigenform(k, QQ, series, f"S{k}.a")]
    last_cert = None
    for n in hecke_indices:
        matrix = hecke_matrix(n, k)
        cp = charpoly(matrix)
        cert = poly_irreducible(cp)
        if cert.is_irreducible:
            break
        if cert.is_reducible:
            raise UnsupportedHeckeField(
                f"T_{n} charpoly reducible in weight {k}: root {cert.witness_root}"
            )
        last_cert = cert
    else:
        raise UnsupportedHeckeField(
            f"no irreducibility certificate for weight {k} (tried {hecke_indices}); "
            f"last status: {last_cert.status if last_cert else 'none'}"
        )
    field = NumberField(cp, certificate=cert)
    lam = field.gen()
    a = [
        [field.coerce(entry) - (lam if i == j else field.zero()) for j, entry in enumerate(row)]
        for i, row in enumerate(matrix.entries)
    ]
    v = kernel_vector(a, field)
    if v[0] == 0:
        raise ArithmeticError("eigenvector has vanishing first coefficient")
    inv = v[0].inverse()
    v = [inv * x for x in v]
    coeffs = []
    for r in range(prec):
        acc = field.zero()
        for j, form in enumerate(basis.forms):
            c = form.series.coeff(r)
            if c != 0:
                acc = acc + v[j] * c
        coeffs.append(acc)
    g = Eigenform(k, field, QSeries(field, coeffs, prec), f"S{k}.a", hecke_index=n)
    assert g.a(n) == lam
    assert cp.evaluate(lam) == field.zero()
    return [g]


def galois_conjugate(f: Eigenform) -> Eigenform:
    """Coefficientwise nontrivial conjugation; quadratic Hecke fields only."""
    if f.field is QQ:
        return f
    if f.field.degree != 2:
        raise UnsupportedHeckeField("conjugation implemented for degree <= 2 fields")
    series = f.series.map_coefficients(f.field, f.field.conjugate_quadratic)
    return Eigenform(f.weight, f.field, series, f.label + "'", f.hecke_index)


def hecke_matrix_power_basis(n: int, k: int) -> list[list[Fraction]]:
    """Matrix of T_n on the cusp monomial basis {Delta^j E_4^((k-12j)/4)},
    j = 1..dim; requires 4 | k. Entries land in Z, which is asserted."""
    if k % 4:
        raise ValueError("the power basis needs 4 | k")
    d = dim_Sk(k)
    if d < 1:
        raise ValueError(f"weight {k} has no cusp forms")
    from .forms import delta, eisenstein_level1

    prec = n * (d + 1) + 2
    e4 = eisenstein_level1(4, prec).series
    dl = delta(prec).series
    monos = []
    dpow = dl
    for j in range(1, d + 1):
        monos.append(dpow * e4 ** ((k - 12 * j) // 4))
        dpow = dpow * dl
    p = [[monos[j].coeff(i + 1) for j in range(d)] for i in range(d)]
    m = hecke_matrix(n, k)
    result = mat_mul(mat_mul(invert_rational(p), [list(r) for r in m.entries]), p)
    for row in result:
        for x in row:
            if x.denominator != 1:
                raise AssertionError(f"non-integral entry {x} in the power basis")
    return result
