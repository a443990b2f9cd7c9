"""Exact univariate polynomial arithmetic over Q, with mod-p factor patterns
and one-sided irreducibility certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import divisors, factorize, iter_primes


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class RatPoly:
    """Polynomial over Q as an ascending coefficient tuple, trailing zeros trimmed.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.lead
        if len(rem) <= d:
            return RatPoly([]), RatPoly(rem)
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= q * b
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "RatPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "RatPoly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.lead
        return self if lead == 1 else RatPoly([c / lead for c in self.coeffs])

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def clear_denominators(self) -> tuple[int, list[int]]:
        """Return (d, ints) with d > 0 minimal such that d * self has the given
        integer coefficients."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d, [int(c * d) for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero():
            return "RatPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "RatPoly(" + " + ".join(parts) + ")"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd in Q[x]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended gcd in Q[x]: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = RatPoly([1]), RatPoly([])
    v0, v1 = RatPoly([]), RatPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.lead
    inv = 1 / lead
    return r0 * inv, u0 * inv, v0 * inv


# ---------------------------------------------------------------------------
# Resultants and discriminants (integer Bareiss on the Sylvester matrix)
# ---------------------------------------------------------------------------


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(p: RatPoly, q: RatPoly) -> Fraction:
    """Res(p, q) over Q, via an exact integer Sylvester determinant."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    dp, dq = p.degree, q.degree
    if dp == 0:
        return p.coeffs[0] ** dq
    if dq == 0:
        return q.coeffs[0] ** dp
    ap, pi = p.clear_denominators()
    aq, qi = q.clear_denominators()
    n = dp + dq
    rows = []
    prow = list(reversed(pi))
    qrow = list(reversed(qi))
    for i in range(dq):
        rows.append([0] * i + prow + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qrow + [0] * (n - dq - 1 - i))
    det = bareiss_det(rows)
    return Fraction(det) / (Fraction(ap) ** dq * Fraction(aq) ** dp)


def discriminant(p: RatPoly) -> Fraction:
    """disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lead(p), for degree >= 1."""
    d = p.degree
    if d < 1:
        raise ValueError("discriminant requires degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lead


# ---------------------------------------------------------------------------
# Polynomials modulo a prime (ascending int lists, reduced mod p)
# ---------------------------------------------------------------------------


def _ptrim(a: list[int]) -> list[int]:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def poly_mod_p(p: RatPoly, q: int) -> list[int]:
    """Reduce a rational polynomial mod q; denominators must be units mod q."""
    out = []
    for c in p.coeffs:
        den = c.denominator % q
        if den == 0:
            raise ValueError(f"denominator not invertible mod {q}")
        out.append(c.numerator * pow(den, -1, q) % q)
    return _ptrim(out)


def _pmul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return _ptrim(out)


def _pdivmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError
    rem = a[:]
    d = len(b) - 1
    inv = pow(b[-1], -1, q)
    if len(rem) <= d:
        return [], _ptrim(rem)
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c * inv % q
        quot[i - d] = f
        for j, y in enumerate(b):
            rem[i - d + j] = (rem[i - d + j] - f * y) % q
    return _ptrim(quot), _ptrim(rem)


def _pgcd(a: list[int], b: list[int], q: int) -> list[int]:
    while b:
        a, b = b, _pdivmod(a, b, q)[1]
    if a:
        inv = pow(a[-1], -1, q)
        a = [c * inv % q for c in a]
    return a


def _pderiv(a: list[int], q: int) -> list[int]:
    return _ptrim([i * c % q for i, c in enumerate(a)][1:])


def _ppowmod(base: list[int], e: int, mod: list[int], q: int) -> list[int]:
    result = [1]
    base = _pdivmod(base, mod, q)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, q), mod, q)[1]
        base = _pdivmod(_pmul(base, base, q), mod, q)[1]
        e >>= 1
    return result


def _pth_root(a: list[int], q: int) -> list[int]:
    # valid when a' == 0 in F_q[x]: a(x) = b(x)^q with b read off every q-th slot
    return _ptrim(a[::q])


def radical_mod_p(f: list[int], q: int) -> list[int]:
    """Product of the distinct irreducible factors of f in F_q[x], monic."""
    f = [c % q for c in f]
    f = _ptrim(f)
    if not f:
        raise ValueError("radical of the zero polynomial")
    inv = pow(f[-1], -1, q)
    f = [c * inv % q for c in f]
    if len(f) == 1:
        return [1]
    df = _pderiv(f, q)
    if not df:
        return radical_mod_p(_pth_root(f, q), q)
    c = _pgcd(f, df, q)
    w = _pdivmod(f, c, q)[0]
    r = c
    g = _pgcd(r, w, q)
    while len(g) > 1:
        r = _pdivmod(r, g, q)[0]
        g = _pgcd(r, w, q)
    if len(r) == 1:
        return w
    return _pmul(w, radical_mod_p(_pth_root(r, q), q), q)


def factor_degrees_mod_p(p: RatPoly, q: int) -> list[int]:
    """Degrees of the irreducible factors of p mod q (sorted, with multiplicity
    of distinct factors; requires p squarefree mod q)."""
    if p.degree < 1:
        raise ValueError("degree >= 1 required")
    if p.lead.numerator % q == 0:
        raise ValueError(f"{q} divides the leading coefficient")
    f = poly_mod_p(p, q)
    if len(f) - 1 != p.degree:
        raise ValueError(f"{q} divides the leading coefficient")
    inv = pow(f[-1], -1, q)
    f = [c * inv % q for c in f]
    df = _pderiv(f, q)
    if len(_pgcd(f, df, q)) != 1:
        raise ValueError(f"polynomial is not squarefree mod {q}")
    degrees: list[int] = []
    x = [0, 1]
    frob = x[:]  # x^(q^d) mod f, advanced one Frobenius power per round
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        frob = _ppowmod(frob, q, f, q)
        g = _pgcd([(a - b) % q for a, b in _zip_pad(frob, x)], f, q)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            f = _pdivmod(f, g, q)[0]
            frob = _pdivmod(frob, f, q)[1]
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def _zip_pad(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


# ---------------------------------------------------------------------------
# Irreducibility certificates (one-sided: Unknown is an honest outcome)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityCertificate:
    status: str  # "irreducible" | "reducible" | "unknown"
    witness_prime: int | None = None
    witness_root: Fraction | None = None
    patterns: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"

    @property
    def is_reducible(self) -> bool:
        return self.status == "reducible"


def _rational_square_root(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _divisors_from_factorization(factors: dict[int, int]) -> list[int]:
    out = [1]
    for p, e in factors.items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def _rational_root_candidates(p: RatPoly, cap: int = 10**5) -> list[Fraction] | None:
    """All rational-root candidates of an integer-cleared polynomial, or None
    when the endpoint coefficients do not factor within the cap."""
    _, ints = p.clear_denominators()
    c0, lead = ints[0], ints[-1]
    if c0 == 0:
        return [Fraction(0)]
    f0 = factorize(abs(c0), trial_bound=cap, rho_iterations=0)
    fl = factorize(abs(lead), trial_bound=cap, rho_iterations=0)
    if not (f0.complete and fl.complete):
        return None
    nums = _divisors_from_factorization(f0.factors)
    dens = _divisors_from_factorization(fl.factors)
    if len(nums) * len(dens) > 20_000:
        return None
    cands = set()
    for a in nums:
        for b in dens:
            cands.add(Fraction(a, b))
            cands.add(Fraction(-a, b))
    return sorted(cands)


def _subset_sum_possible(pattern: Sequence[int], d: int) -> bool:
    reachable = 1  # bitset of achievable subset sums
    for x in pattern:
        reachable |= reachable << x
    return bool(reachable >> d & 1)


def poly_irreducible(p: RatPoly, prime_count: int = 20) -> IrreducibilityCertificate:
    """Certificate-based irreducibility test over Q.

    Returns "irreducible" only with a sound witness: a prime where the
    polynomial stays in one piece, or a prime set whose mod-p factor-degree
    patterns rule out every proper factor degree. "reducible" always exhibits
    a rational root or a perfect-square discriminant. Anything else is
    "unknown".
    """
    d = p.degree
    if d < 1:
        raise ValueError("degree >= 1 required")
    if d == 1:
        return IrreducibilityCertificate("irreducible")
    if d == 2:
        disc = p.coeffs[1] ** 2 - 4 * p.coeffs[2] * p.coeffs[0]
        root = _rational_square_root(disc)
        if root is None:
            return IrreducibilityCertificate("irreducible")
        return IrreducibilityCertificate(
            "reducible", witness_root=(-p.coeffs[1] + root) / (2 * p.coeffs[2])
        )
    if p.coeffs[0] == 0:
        return IrreducibilityCertificate("reducible", witness_root=Fraction(0))
    candidates = _rational_root_candidates(p)
    if candidates is not None:
        for r in candidates:
            if p.evaluate(r) == 0:
                return IrreducibilityCertificate("reducible", witness_root=r)
        if d == 3:
            # a reducible cubic over Q must have a rational root
            return IrreducibilityCertificate("irreducible")
    disc_num = discriminant(p).numerator
    if disc_num == 0:
        return IrreducibilityCertificate("unknown")
    lead_num = p.lead.numerator
    patterns: dict[int, tuple[int, ...]] = {}
    for q in iter_primes():
        if len(patterns) >= prime_count:
            break
        if lead_num % q == 0 or disc_num % q == 0:
            continue
        pattern = tuple(factor_degrees_mod_p(p, q))
        patterns[q] = pattern
        if pattern == (d,):
            return IrreducibilityCertificate("irreducible", witness_prime=q, patterns=patterns)
    for deg in range(1, d // 2 + 1):
        if all(_subset_sum_possible(pat, deg) for pat in patterns.values()):
            return IrreducibilityCertificate("unknown", patterns=patterns)
    return IrreducibilityCertificate("irreducible", patterns=patterns)


# ---------------------------------------------------------------------------
# Cyclotomic polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> RatPoly:
    """The m-th cyclotomic polynomial, computed by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("m >= 1 required")
    if m == 1:
        return RatPoly([-1, 1])
    num = RatPoly([-1] + [0] * (m - 1) + [1])
    for d in divisors(m):
        if d < m:
            q, r = divmod(num, cyclotomic_polynomial(d))
            assert r.is_zero()
            num = q
    return num
