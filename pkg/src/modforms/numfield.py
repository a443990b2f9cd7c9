"""Number fields Q[x]/(m) with exact element arithmetic, traces, and the
Dedekind index-divisor test."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .polys import (
    IrreducibilityCertificate,
    RatPoly,
    _pdivmod,
    _pgcd,
    _ptrim,
    cyclotomic_polynomial,
    poly_irreducible,
    poly_xgcd,
    radical_mod_p,
)


class RationalField:
    """Field adapter for Q, backed by fractions.Fraction."""

    degree = 1

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, NumberFieldElement):
            return x.as_rational()
        return Fraction(x)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class NumberField:
    """Q[x]/(modulus) for a monic irreducible modulus over Q."""

    def __init__(
        self,
        modulus: RatPoly,
        certificate: IrreducibilityCertificate | None = None,
        assume_irreducible: bool = False,
    ):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic():
            raise ValueError("modulus must be monic")
        if not assume_irreducible:
            if certificate is None:
                certificate = poly_irreducible(modulus)
            if not certificate.is_irreducible:
                raise ValueError(f"modulus not certified irreducible: {certificate.status}")
        self.modulus = modulus
        self.certificate = certificate
        self.degree = modulus.degree
        self.zeta_order: int | None = None  # set by cyclotomic_field
        d = self.degree
        # coordinates of x^j for j = d .. 2d-2, used to reduce products
        self._xpow = []
        if d > 1:
            cur = [-c for c in modulus.coeffs[:-1]]  # x^d
            self._xpow.append(tuple(cur))
            for _ in range(d - 2):
                cur = [Fraction(0)] + cur
                top = cur.pop()
                if top:
                    for i, c in enumerate(modulus.coeffs[:-1]):
                        cur[i] -= top * c
                self._xpow.append(tuple(cur))
        self._traces: tuple[Fraction, ...] | None = None
        self._zeta_pows: dict[int, "NumberFieldElement"] = {}
        self._real_roots: tuple[float, ...] | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"NumberField({self.modulus!r})"

    def element(self, coords: Iterable[Fraction | int]) -> "NumberFieldElement":
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NumberFieldElement(self, tuple(coords))

    def from_poly(self, coeffs: Sequence[Fraction | int]) -> "NumberFieldElement":
        """Reduce an arbitrary polynomial in the generator modulo the modulus."""
        coeffs = [Fraction(c) for c in coeffs]
        d = self.degree
        if d > 1 and len(coeffs) <= 2 * d - 1:
            out = coeffs[:d] + [Fraction(0)] * max(0, d - len(coeffs))
            for j in range(d, len(coeffs)):
                c = coeffs[j]
                if c == 0:
                    continue
                for i, r in enumerate(self._xpow[j - d]):
                    out[i] += c * r
            return NumberFieldElement(self, tuple(out))
        rem = RatPoly(coeffs) % self.modulus
        return self.element(rem.coeffs)

    def zero(self) -> "NumberFieldElement":
        return self.element([])

    def one(self) -> "NumberFieldElement":
        return self.element([1])

    def gen(self) -> "NumberFieldElement":
        if self.degree == 1:
            return self.element([-self.modulus.coeffs[0]])
        return self.element([0, 1])

    def coerce(self, x) -> "NumberFieldElement":
        if isinstance(x, NumberFieldElement):
            if x.parent == self:
                return x
            raise ValueError("element of a different number field")
        return self.element([Fraction(x)])

    def power_traces(self) -> tuple[Fraction, ...]:
        """Traces of 1, x, ..., x^(d-1), by Newton's identities on the modulus."""
        if self._traces is None:
            d = self.degree
            c = self.modulus.coeffs  # monic, ascending
            p = [Fraction(d)]
            for j in range(1, d):
                s = -j * c[d - j]
                for i in range(1, j):
                    s -= c[d - i] * p[j - i]
                p.append(s)
            self._traces = tuple(p)
        return self._traces

    def trace(self, el: "NumberFieldElement") -> Fraction:
        t = self.power_traces()
        return sum((ci * ti for ci, ti in zip(el.coords, t)), Fraction(0))

    def conjugate_quadratic(self, el: "NumberFieldElement") -> "NumberFieldElement":
        """The nontrivial conjugate x -> trace(x) - x, degree-2 fields only."""
        if self.degree != 2:
            raise ValueError("quadratic conjugation needs a degree-2 field")
        s = -self.modulus.coeffs[1]  # sum of the two roots
        a, b = el.coords
        return self.element([a + b * s, -b])

    def zeta_pow(self, j: int) -> "NumberFieldElement":
        if self.zeta_order is None:
            raise ValueError("not a cyclotomic field")
        j %= self.zeta_order
        if j not in self._zeta_pows:
            self._zeta_pows[j] = self.from_poly([0] * j + [1])
        return self._zeta_pows[j]

    def real_roots(self) -> tuple[float, ...]:
        """Real roots of the modulus (floats, ascending); cached."""
        if self._real_roots is None:
            from .roots import real_roots

            self._real_roots = tuple(real_roots(self.modulus))
        return self._real_roots

    def embed_float(self, el: "NumberFieldElement", root: float | None = None) -> float:
        """Evaluate an element at a real root of the modulus (default: largest)."""
        if root is None:
            roots = self.real_roots()
            if not roots:
                raise ValueError("modulus has no real root")
            root = roots[-1]
        acc = 0.0
        for c in reversed(el.coords):
            acc = acc * root + c.numerator / c.denominator
        return acc


class NumberFieldElement:
    """Element of Q[x]/(m) as a rational coordinate vector of length deg(m)."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: NumberField, coords: tuple[Fraction, ...]):
        self.parent = parent
        self.coords = coords

    def _check(self, other: "NumberFieldElement") -> None:
        if self.parent != other.parent:
            raise ValueError("elements of different number fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return NumberFieldElement(
            self.parent, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def _coerced(self, other):
        if isinstance(other, NumberFieldElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent.coerce(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.parent, tuple(a * other for a in self.coords))
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        self._check(other)
        a, b = self.coords, other.coords
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return self.parent.from_poly(prod)

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in a number field")
        g, u, _ = poly_xgcd(RatPoly(self.coords), self.parent.modulus)
        if g.degree != 0:
            raise ArithmeticError("modulus is not irreducible: gcd has positive degree")
        return self.parent.from_poly(u.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.parent.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.parent.modulus.coeffs, self.coords))

    def __repr__(self) -> str:
        return f"NFE{list(self.coords)}"

    def as_json(self) -> dict:
        return {
            "modulus": [str(c) for c in self.parent.modulus.coeffs],
            "coords": [str(c) for c in self.coords],
        }


@lru_cache(maxsize=None)
def cyclotomic_field(m: int) -> NumberField:
    """Q(zeta_m) presented as Q[x]/(Phi_m); irreducibility of Phi_m is classical."""
    field = NumberField(cyclotomic_polynomial(m), assume_irreducible=True)
    field.zeta_order = m
    return field


def embed_cyclotomic(x: NumberFieldElement, target: NumberField) -> NumberFieldElement:
    """Map Q(zeta_m) -> Q(zeta_M) along zeta_m -> zeta_M^(M/m); requires m | M."""
    m = x.parent.zeta_order
    M = target.zeta_order
    if m is None or M is None or M % m:
        raise ValueError("incompatible cyclotomic fields")
    if x.parent == target:
        return x
    step = M // m
    out = target.zero()
    for j, c in enumerate(x.coords):
        if c != 0:
            out = out + target.zeta_pow(j * step) * c
    return out


# ---------------------------------------------------------------------------
# Dedekind's criterion
# ---------------------------------------------------------------------------


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def dedekind_index_test(p: RatPoly, q: int) -> bool:
    """True when the prime q divides the index [O_K : Z[alpha]] for K = Q[x]/(p).

    Dedekind's criterion on the radical/cofactor splitting of p mod q; p must
    be monic with integer coefficients.
    """
    if not p.is_monic() or not p.is_integral():
        raise ValueError("monic integral polynomial required")
    f = [int(c) for c in p.coeffs]
    fbar = _ptrim([c % q for c in f])
    g1 = radical_mod_p(fbar, q)
    h1, rem = _pdivmod(fbar, g1, q)
    assert not rem
    gh = _int_poly_mul(g1, h1)
    gh += [0] * (len(f) - len(gh))
    diff = [a - b for a, b in zip(gh, f)]
    if any(c % q for c in diff):
        raise AssertionError("radical splitting failed to lift")
    fcap = _ptrim([(c // q) % q for c in diff])
    d = _pgcd(_pgcd(fcap, g1, q), h1, q)
    return len(d) > 1
