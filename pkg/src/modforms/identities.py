"""Verification engine: exact identity checks between concrete forms, and the
decomposition of eigenform squares against a normalized eigenbasis."""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .arith import sigma, squarefree_kernel
from .forms import delta, dim_Sk, eisenstein_level1
from .hecke import Eigenform, eigenbasis, galois_conjugate
from .linalg import invert_rational
from .numfield import QQ, NumberField, NumberFieldElement
from .polys import discriminant
from .qseries import QSeries

# Reference constants the verification suite reproduces (exact rationals).
RAMANUJAN_FACTOR = Fraction(1008 * 756, 691)
E24_A = Fraction(-(2**14 * 3**8 * 5**4 * 7**4 * 13**2 * 1571), 103 * 691**2 * 2294797)
E24_B = Fraction(-(2**8 * 3**5 * 5**3 * 7**2 * 13**3 * 37), 103 * 691 * 2294797)
E32_A = Fraction(
    -(2**18 * 3**8 * 5**5 * 7**4 * 11 * 13**2 * 17**2 * 4273),
    37 * 683 * 3617**2 * 305065927,
)
E32_B = Fraction(
    -(2**12 * 3**4 * 5**3 * 7**2 * 13 * 17**2 * 23 * 1433),
    37 * 683 * 3617 * 305065927,
)
J_SHIFT = Fraction(432000, 691)

# Reference data for the two quadratic eigenform-square decompositions.
TABLE1_DISCS = {24: 144169, 32: 18295489}
# The q^2-eigenvalue forces 324204/691 in the weight-24 reconstruction; the
# reference table prints 32404/691, which verify_table1 reports as a
# discrepancy (likewise the 24/sqrt(D) coefficient normalization, off by 24^2).
TABLE1_ROW1_CONST = Fraction(324204, 691)
TABLE1_ROW1_CONST_REFERENCE = Fraction(32404, 691)
TABLE1_ROW2_X_SHIFT = Fraction(20532)
TABLE1_ROW2_X_DEN = Fraction(1728)

TABLE2_FIELD_DISCS = {
    24: 144169,
    28: 131 * 139,
    48: 31 * 6093733 * 1675615524399270726046829566281283,
    56: 41132621 * 48033296728783687292737439509259855449806941,
}


@dataclass
class IdentityReport:
    name: str
    status: str  # "verified" | "failed"
    prec: int
    first_failure: int | None = None
    detail: str = ""
    discrepancies: list[dict] = dataclass_field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "prec": self.prec,
            "first_failure": self.first_failure,
            "detail": self.detail,
            "discrepancies": self.discrepancies,
        }


def verify_quadratic_identity(
    name: str,
    h: QSeries,
    f: QSeries,
    g: QSeries,
    a,
    b,
    prec: int | None = None,
) -> IdentityReport:
    """Exact coefficientwise check of h = a f^2 + b f g + g^2."""
    if not (h.field == f.field == g.field):
        raise ValueError("series over different coefficient fields")
    depth = min(h.prec, f.prec, g.prec)
    if prec is not None:
        if prec > depth:
            raise ValueError(f"requested precision {prec} exceeds available {depth}")
        depth = prec
    residual = h - (f * f).scale(a) - (f * g).scale(b) - g * g
    for n in range(depth):
        if residual.coeff(n) != 0:
            return IdentityReport(name, "failed", depth, first_failure=n)
    return IdentityReport(name, "verified", depth)


def verify_ramanujan(prec: int = 200, congruence_range: int = 500) -> IdentityReport:
    """E_12 - E_6^2 = (1008*756/691) Delta exactly, and the induced congruence
    tau(n) = sigma_11(n) mod 691."""
    e12 = eisenstein_level1(12, prec).series
    e6 = eisenstein_level1(6, prec).series
    dl = delta(max(prec, congruence_range + 1)).series
    residual = e12 - e6 * e6 - dl.truncate(prec).scale(RAMANUJAN_FACTOR)
    for n in range(prec):
        if residual.coeff(n) != 0:
            return IdentityReport("ramanujan", "failed", prec, first_failure=n)
    for n in range(1, congruence_range + 1):
        tau = dl.coeff(n)
        assert tau.denominator == 1
        if (tau.numerator - sigma(11, n)) % 691:
            return IdentityReport(
                "ramanujan", "failed", prec, first_failure=n, detail="congruence break"
            )
    return IdentityReport(
        "ramanujan",
        "verified",
        prec,
        detail=f"identity to {prec} terms; congruence mod 691 for n <= {congruence_range}",
    )


def _solve_product_identity(h: QSeries, f: QSeries, g: QSeries) -> tuple[Fraction, Fraction]:
    """Solve h = a f^2 + b f g + g^2 for (a, b) from the q^1 and q^2 rows,
    assuming f = q + O(q^2) and g = 1 + O(q)."""
    assert f.coeff(0) == 0 and f.coeff(1) == 1 and g.coeff(0) == 1
    fg = f * g
    gg = g * g
    b = (h.coeff(1) - gg.coeff(1)) / fg.coeff(1)
    a = h.coeff(2) - b * fg.coeff(2) - gg.coeff(2)  # (f^2)_2 = 1
    return a, b


def e24_constants(prec: int = 80) -> tuple[Fraction, Fraction]:
    f = delta(prec).series
    g = eisenstein_level1(12, prec).series
    h = eisenstein_level1(24, prec).series
    return _solve_product_identity(h, f, g)


def verify_e24(prec: int = 80) -> IdentityReport:
    f = delta(prec).series
    g = eisenstein_level1(12, prec).series
    h = eisenstein_level1(24, prec).series
    a, b = _solve_product_identity(h, f, g)
    report = verify_quadratic_identity("e24", h, f, g, a, b)
    report.detail = f"a = {a}, b = {b}"
    if (a, b) != (E24_A, E24_B):
        report.status = "failed"
        report.detail += " (reference constants not reproduced)"
    return report


def e32_constants(prec: int = 80) -> tuple[Fraction, Fraction]:
    f = (eisenstein_level1(4, prec).series) * delta(prec).series
    g = eisenstein_level1(16, prec).series
    h = eisenstein_level1(32, prec).series
    return _solve_product_identity(h, f, g)


def verify_e32(prec: int = 80) -> IdentityReport:
    f = (eisenstein_level1(4, prec).series) * delta(prec).series
    g = eisenstein_level1(16, prec).series
    h = eisenstein_level1(32, prec).series
    a, b = _solve_product_identity(h, f, g)
    report = verify_quadratic_identity("e32", h, f, g, a, b)
    report.detail = f"a = {a}, b = {b}"
    if (a, b) != (E32_A, E32_B):
        report.status = "failed"
        report.detail += " (reference constants not reproduced)"
    return report


# ---------------------------------------------------------------------------
# Eigenform-square decompositions
# ---------------------------------------------------------------------------
#
# With g one eigenform over K = Q[x]/(T) and its conjugates implicit, the
# decomposition series = sum_i c_i g_i collapses to a linear system over the
# base field F1 of the input series: writing c in L = F1[x]/(T), the
# coefficient rows become Tr(c * a_n(g)) = a_n(series), and the system matrix
# M[n][j] = Tr(x^j a_n(g)) is rational. M factors as (a_n(g_i)) times an
# invertible Vandermonde in the roots of T, so det M != 0 certifies the
# nonsingularity of the eigenvalue matrix itself. The i-th coefficient is
# c_i = sigma_i(c); the number of vanishing ones equals deg gcd(c(x), T(x))
# over F1.


def _fp_trim(a: list) -> list:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _fp_mul(a: list, b: list, field) -> list:
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _fp_trim(out)


def _fp_divmod(a: list, b: list, field) -> tuple[list, list]:
    rem = list(a)
    d = len(b) - 1
    inv = field.one() / b[-1]
    if len(rem) <= d:
        return [], _fp_trim(rem)
    quot = [field.zero()] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c * inv
        quot[i - d] = f
        for j, y in enumerate(b):
            rem[i - d + j] = rem[i - d + j] - f * y
    return _fp_trim(quot), _fp_trim(rem)


def _fp_gcd(a: list, b: list, field) -> list:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_divmod(a, b, field)[1]
    if a:
        inv = field.one() / a[-1]
        a = [inv * c for c in a]
    return a


@dataclass
class EigenDecomposition:
    source: str
    weight: int
    base_field: object
    hecke_field: object
    coords: tuple  # c over the base field, in the power basis of the Hecke field
    dim: int
    vanishing_count: int
    verified_prec: int
    trace_matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def all_nonzero(self) -> bool:
        return self.vanishing_count == 0

    def conjugate_pair(self) -> tuple[NumberFieldElement, NumberFieldElement]:
        """Explicit (c_1, c_2) for a quadratic Hecke field over base Q."""
        if self.base_field is not QQ or not isinstance(self.hecke_field, NumberField):
            raise ValueError("explicit coefficients need a rational base field")
        if self.hecke_field.degree != 2:
            raise ValueError("explicit listing implemented for quadratic fields")
        c = self.hecke_field.element(self.coords)
        return c, self.hecke_field.conjugate_quadratic(c)

    def as_json(self) -> dict:
        if isinstance(self.hecke_field, NumberField):
            field_desc = {"modulus": [str(c) for c in self.hecke_field.modulus.coeffs]}
        else:
            field_desc = "Q"
        return {
            "source": self.source,
            "weight": self.weight,
            "hecke_field": field_desc,
            "coords": [
                [str(x) for x in c.coords] if isinstance(c, NumberFieldElement) else str(c)
                for c in self.coords
            ],
            "dim": self.dim,
            "vanishing_count": self.vanishing_count,
            "verified_prec": self.verified_prec,
        }


def decompose_in_eigenbasis(
    series: QSeries,
    weight: int,
    prec: int | None = None,
    source: str = "",
) -> EigenDecomposition:
    """Decompose a cusp expansion against the normalized eigenbasis of the
    given weight; exact in the base field of the input."""
    d2 = dim_Sk(weight)
    if d2 == 0:
        raise ValueError(f"weight {weight} has no cusp forms")
    if prec is None:
        prec = min(series.prec, max(3 * d2 + 5, 20))
    if series.prec < prec:
        raise ValueError(f"series precision {series.prec} below requested {prec}")
    if prec <= d2:
        raise ValueError(f"need more than {d2} coefficients to decompose and verify")
    g = eigenbasis(weight, prec=prec)[0]
    base = series.field

    if g.field is QQ:
        c = series.coeff(1)
        for n in range(prec):
            if not c * g.a(n) == series.coeff(n):
                raise ArithmeticError(f"decomposition fails at coefficient {n}")
        return EigenDecomposition(
            source, weight, base, QQ, (c,), 1, 1 if c == 0 else 0, prec, ((Fraction(1),),)
        )

    K = g.field
    gen_pows = [K.one()]
    for _ in range(1, d2):
        gen_pows.append(gen_pows[-1] * K.gen())
    matrix = [
        [K.trace(g.a(n + 1) * gen_pows[j]) for j in range(d2)] for n in range(d2)
    ]
    try:
        minv = invert_rational(matrix)
    except ValueError:
        raise ArithmeticError(
            "valence-formula violation: eigenvalue coefficient matrix is singular"
        ) from None
    rhs = [series.coeff(n + 1) for n in range(d2)]
    coords = []
    for j in range(d2):
        acc = base.zero()
        for n in range(d2):
            x = minv[j][n]
            if x != 0:
                acc = acc + rhs[n] * x
        coords.append(acc)

    traces = K.power_traces()
    t_base = [base.coerce(c) for c in K.modulus.coeffs]
    c_poly = _fp_trim(list(coords))
    for n in range(prec):
        an = g.a(n)
        an_base = _fp_trim([base.coerce(x) for x in an.coords])
        prod, rem = (
            _fp_divmod(_fp_mul(c_poly, an_base, base), t_base, base)
            if c_poly and an_base
            else ([], [])
        )
        tr = base.zero()
        for i, w in enumerate(rem):
            if w != 0:
                tr = tr + w * traces[i]
        if tr != series.coeff(n):
            raise ArithmeticError(f"decomposition fails at coefficient {n}")
    gg = _fp_gcd(c_poly, t_base, base) if c_poly else t_base
    vanishing = len(gg) - 1 if gg else d2
    return EigenDecomposition(
        source,
        weight,
        base,
        K,
        tuple(coords),
        d2,
        vanishing,
        prec,
        tuple(tuple(row) for row in matrix),
    )


def decompose_square(f: Eigenform, prec: int | None = None) -> EigenDecomposition:
    """Decompose f^2 against the eigenbasis of weight 2k."""
    fsq = f.series * f.series
    return decompose_in_eigenbasis(fsq, 2 * f.weight, prec=prec, source=f"({f.label})^2")


@dataclass
class NonvanishingReport:
    weight: int
    square_weight: int
    dim: int
    all_nonzero: bool
    vanishing_count: int
    entries: list[tuple[int, str | None, bool]]  # (index, exact value when available, is_zero)
    decomposition: EigenDecomposition

    def as_json(self) -> dict:
        return {
            "weight": self.weight,
            "square_weight": self.square_weight,
            "dim": self.dim,
            "all_nonzero": self.all_nonzero,
            "vanishing_count": self.vanishing_count,
            "entries": [
                {"index": i, "value": v, "is_zero": z} for i, v, z in self.entries
            ],
        }


def nonvanishing_report(k: int, prec: int | None = None) -> NonvanishingReport:
    """Exact zero/nonzero status of the coefficients of f^2 against the
    eigenbasis of weight 2k, for f the weight-k eigenform.

    A nonzero coefficient certifies a nonzero inner product against that
    eigenform: distinct eigenforms are orthogonal with positive norms, so the
    projection cannot vanish while the coefficient does not.
    """
    d2 = dim_Sk(2 * k)
    depth = max(3 * d2 + 5, prec or 20)
    f = eigenbasis(k, prec=depth)[0]
    dec = decompose_square(f, prec=min(depth, prec or depth))
    entries: list[tuple[int, str | None, bool]] = []
    if (
        dec.base_field is QQ
        and isinstance(dec.hecke_field, NumberField)
        and dec.hecke_field.degree == 2
    ):
        c1, c2 = dec.conjugate_pair()
        entries.append((1, str(list(map(str, c1.coords))), c1.is_zero()))
        entries.append((2, str(list(map(str, c2.coords))), c2.is_zero()))
    elif dec.dim == 1:
        entries.append((1, str(dec.coords[0]), dec.coords[0] == 0))
    else:
        # per-index values live in conjugate embeddings; only the exact count
        # of vanishing ones is listed
        for i in range(1, dec.dim + 1):
            entries.append((i, None, False if dec.vanishing_count == 0 else True))
    return NonvanishingReport(
        k, 2 * k, dec.dim, dec.all_nonzero, dec.vanishing_count, entries, dec
    )


# ---------------------------------------------------------------------------
# The two quadratic eigenform-square rows
# ---------------------------------------------------------------------------


def _sqrt_of_disc_part(K: NumberField) -> tuple[NumberFieldElement, int]:
    """For quadratic K = Q[x]/(x^2 - s x - c), return (sqrt(D), D) with D the
    squarefree part of the discriminant; positive at the larger real root."""
    assert K.degree == 2
    s = -K.modulus.coeffs[1]
    disc = discriminant(K.modulus)
    assert disc.denominator == 1
    split = squarefree_kernel(disc.numerator)
    if not split.complete:
        raise ArithmeticError("could not certify the squarefree part of the discriminant")
    d, fsq = split.squarefree, split.square_root
    root = (2 * K.gen() - s) * Fraction(1, fsq)
    assert root * root == d
    return root, d


def verify_table1(prec: int = 30) -> IdentityReport:
    """Reconstruct both quadratic eigenform-square decomposition rows from the
    computed eigenbases and check the reference values.

    Two reference entries are not reproducible and are reported as verified
    discrepancies: the weight-24 series constant (digit dropped) and the
    overall coefficient normalization (off by 24^2 from the a_1 = 1
    convention used here).
    """
    discrepancies: list[dict] = []

    def check_row(k: int, reference_series) -> tuple[bool, str]:
        f = eigenbasis(k, prec=prec + 2)[0]
        dec = decompose_square(f, prec=prec)
        K = dec.hecke_field
        root, d = _sqrt_of_disc_part(K)
        if d != TABLE1_DISCS[2 * k]:
            return False, f"discriminant part {d} != {TABLE1_DISCS[2 * k]}"
        g = eigenbasis(2 * k, prec=prec)[0]
        recon = reference_series(K, root)
        for n in range(min(prec, recon.prec, g.prec)):
            if recon.coeff(n) != g.a(n):
                return False, f"series reconstruction differs at q^{n}"
        sigma_g = galois_conjugate(g)
        recon_conj = reference_series(K, -root)
        for n in range(min(prec, recon_conj.prec, sigma_g.prec)):
            if recon_conj.coeff(n) != sigma_g.a(n):
                return False, f"conjugate reconstruction differs at q^{n}"
        c1, c2 = dec.conjugate_pair()
        if not (c1 + c2).is_zero():
            return False, "coefficients are not antisymmetric"
        if c1 * (24 * root) != K.one():
            return False, "coefficient magnitude differs from 1/(24 sqrt(D))"
        reference_c = 24 * root * Fraction(1, d)  # 24/sqrt(D)
        factor = reference_c / c1
        discrepancies.append(
            {
                "entry": f"row(k={k}).coefficient",
                "reference": f"24/sqrt({d})",
                "computed": f"1/(24*sqrt({d}))",
                "exact_ratio": str(factor.as_rational()),
            }
        )
        return True, f"c_1 = 1/(24*sqrt({d})), c_2 = -c_1"

    def row1_series(K: NumberField, root: NumberFieldElement) -> QSeries:
        e12 = eisenstein_level1(12, prec).series.coerce_into(K)
        dl = delta(prec).series.coerce_into(K)
        const = 12 * root + K.coerce(TABLE1_ROW1_CONST)
        return e12 * dl + (dl * dl).scale(const)

    def row2_series(K: NumberField, root: NumberFieldElement) -> QSeries:
        e4 = eisenstein_level1(4, prec).series.coerce_into(K)
        e6 = eisenstein_level1(6, prec).series.coerce_into(K)
        dl = delta(prec).series.coerce_into(K)
        x = (12 * root + K.coerce(TABLE1_ROW2_X_SHIFT)) * (1 / TABLE1_ROW2_X_DEN)
        return dl * ((e4**5).scale(x) + (e4**2 * e6**2).scale(K.one() - x))

    ok1, detail1 = check_row(12, row1_series)
    discrepancies.append(
        {
            "entry": "row(k=12).series_constant",
            "reference": str(TABLE1_ROW1_CONST_REFERENCE),
            "computed": str(TABLE1_ROW1_CONST),
            "note": "forced by the q^2 eigenvalue of the reconstructed eigenform",
        }
    )
    ok2, detail2 = check_row(16, row2_series)
    status = "verified" if ok1 and ok2 else "failed"
    return IdentityReport(
        "table1",
        status,
        prec,
        detail=f"row1: {detail1}; row2: {detail2}",
        discrepancies=discrepancies,
    )


def verify_all(prec: int = 100) -> list[IdentityReport]:
    return [
        verify_ramanujan(min(prec, 200), congruence_range=500),
        verify_e24(min(prec, 80)),
        verify_e32(min(prec, 80)),
        verify_table1(30),
    ]
