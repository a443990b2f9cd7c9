"""Quantitative scans: the Bernoulli-magnitude sandwich, the finiteness region
for the quadratic eigenform equation, irreducibility/symmetric-group evidence,
and Hecke-field discriminant coprimality."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import factorize, iter_primes, quad_field_discriminant, squarefree_kernel
from .dirichlet import (
    DirichletCharacter,
    abs_embed,
    characters_mod,
    gen_bernoulli,
)
from .forms import dim_Sk
from .hecke import charpoly, hecke_matrix
from .numfield import (
    NumberFieldElement,
    cyclotomic_field,
    dedekind_index_test,
    embed_cyclotomic,
)
from .polys import (
    IrreducibilityCertificate,
    RatPoly,
    discriminant,
    factor_degrees_mod_p,
    poly_irreducible,
)

_zeta_cache: dict[int, float] = {}


def zeta_direct(s: int, tol: float = 1e-15) -> float:
    """zeta(s) for integer s >= 3 by direct summation; the integral tail
    estimate M^(1-s)/(s-1) is pushed below tol."""
    if s < 3:
        raise ValueError("s >= 3 required (the bound checks never need less)")
    if s in _zeta_cache:
        return _zeta_cache[s]
    if s > 60:
        val = 1.0 + 2.0**-s  # below double-precision resolution beyond this
    else:
        m = int((tol * (s - 1)) ** (-1.0 / (s - 1))) + 1
        total = 0.0
        chunk = 1 << 20
        for start in range(1, m + 1, chunk):
            stop = min(start + chunk, m + 1)
            block = np.arange(start, stop, dtype=np.float64)
            total += float(np.sum(block ** float(-s)))
        val = total
    _zeta_cache[s] = val
    return val


def bernoulli_lower_bound(k: int, conductor: int) -> float:
    """Lower sandwich bound 2 zeta(2k)/zeta(k) k! (2 pi)^(-k) l^(k-1/2)."""
    return (
        2.0
        * zeta_direct(2 * k)
        / zeta_direct(k)
        * _factorial_over_power(k)
        * conductor ** (k - 0.5)
    )


def bernoulli_upper_bound(k: int, conductor: int) -> float:
    """Upper sandwich bound 2 zeta(k) k! (2 pi)^(-k) l^(k-1/2)."""
    return 2.0 * zeta_direct(k) * _factorial_over_power(k) * conductor ** (k - 0.5)


def _factorial_over_power(k: int) -> float:
    """k! (2 pi)^(-k) without intermediate overflow."""
    return math.exp(math.lgamma(k + 1) - k * math.log(2 * math.pi))


@dataclass(frozen=True)
class BoundCheck:
    k: int
    conductor: int
    holds: bool
    lower: float
    upper: float
    actual: float

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "conductor": self.conductor,
            "holds": self.holds,
            "lower": f"{self.lower:.12e}",
            "upper": f"{self.upper:.12e}",
            "actual": f"{self.actual:.12e}",
        }


def bernoulli_bound_check(k: int, chi: DirichletCharacter) -> BoundCheck:
    """Sandwich verdict for |B_{k,chi}|, primitive parity-matching chi."""
    if k < 3:
        raise ValueError("k >= 3 required")
    if not chi.is_primitive():
        raise ValueError("character must be primitive")
    if chi.parity() != (-1) ** k:
        raise ValueError("parity mismatch: the Bernoulli value vanishes")
    val = abs_embed(gen_bernoulli(k, chi))
    l = chi.conductor()
    lower = bernoulli_lower_bound(k, l)
    upper = bernoulli_upper_bound(k, l)
    # at conductor 1 the upper bound is an exact equality, so comparisons get
    # the stated embedding-error budget
    slack = 1e-11
    holds = lower <= val * (1 + slack) and val * (1 - slack) <= upper
    return BoundCheck(k, l, holds, lower, upper, val)


# ---------------------------------------------------------------------------
# Finiteness scan for h = a f^2 + b f g + g^2
# ---------------------------------------------------------------------------


def alpha_beta(
    k: int, phi: DirichletCharacter
) -> tuple[NumberFieldElement, NumberFieldElement]:
    """Exact leading-coefficient scalars: alpha = -4k/B_{2k,phi^2} and
    beta = -2k/B_{k,phi}, in their cyclotomic value fields."""
    b1 = gen_bernoulli(k, phi)
    if b1.is_zero():
        raise ValueError("vanishing Bernoulli value: parity mismatch for beta")
    beta = Fraction(-2 * k) / b1
    b2 = gen_bernoulli(2 * k, phi**2)
    if b2.is_zero():
        raise ValueError("vanishing Bernoulli value for alpha")
    alpha = Fraction(-4 * k) / b2
    return alpha, beta


def _inv_lower_bound(k: int, conductor: int) -> float:
    """1 / bernoulli_lower_bound in log space (safe for large k)."""
    log_val = (
        math.log(2)
        + math.log(zeta_direct(2 * k))
        - math.log(zeta_direct(k))
        + math.lgamma(k + 1)
        - k * math.log(2 * math.pi)
        + (k - 0.5) * math.log(conductor)
    )
    return 0.0 if log_val > 700 else math.exp(-log_val)


def envelope(k: int, conductor: int = 1) -> float:
    """Upper envelope for |alpha| + 2|beta| from the sandwich lower bounds;
    decreasing in both arguments."""
    return 4 * k * _inv_lower_bound(2 * k, conductor) + 4 * k * _inv_lower_bound(
        k, conductor
    )


def conductor_cutoff(k: int, b_abs: float, cap: int = 10_000) -> int:
    """Largest conductor l with envelope(k, l) >= |b| (0 when none); beyond it
    the magnitude bound alone rules the coefficient equation out."""
    if envelope(k, 1) < b_abs:
        return 0
    l = 1
    while l <= cap and envelope(k, l + 1) >= b_abs:
        l += 1
    if l > cap:
        raise ArithmeticError("conductor cutoff exceeded the hard cap")
    return l


@dataclass(frozen=True)
class ScanCell:
    k: int
    conductor: int
    exponents: tuple[int, ...]
    alpha_abs: float
    beta_abs: float
    satisfies_eq: bool
    excluded_by: str  # "" for candidates inside the cutoff region

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "conductor": self.conductor,
            "character": list(self.exponents),
            "alpha_abs": f"{self.alpha_abs:.12e}",
            "beta_abs": f"{self.beta_abs:.12e}",
            "satisfies_eq": self.satisfies_eq,
            "excluded_by": self.excluded_by,
        }


@dataclass
class FinitenessReport:
    a: Fraction
    b: Fraction
    k_bound: int
    k_enumerated_to: int
    l_max: int
    survivors: list[ScanCell]
    cells: list[ScanCell]
    cutoffs: dict[int, int]  # k -> conductor cutoff actually used
    monotone_from_8: bool
    complete: bool
    notes: str = ""

    def as_json(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "k_bound": self.k_bound,
            "k_enumerated_to": self.k_enumerated_to,
            "l_max": self.l_max,
            "survivors": [c.as_json() for c in self.survivors],
            "cells": [c.as_json() for c in self.cells],
            "cutoffs": {str(k): v for k, v in self.cutoffs.items()},
            "monotone_from_8": self.monotone_from_8,
            "complete": self.complete,
            "notes": self.notes,
        }


def eq12_holds_exactly(b: Fraction, k: int, phi: DirichletCharacter) -> bool:
    """Exact test of the q^1 coefficient relation b + 2 beta = alpha."""
    alpha, beta = alpha_beta(k, phi)
    field = cyclotomic_field(math.lcm(alpha.parent.zeta_order, beta.parent.zeta_order))
    lhs = field.coerce(b) + 2 * embed_cyclotomic(beta, field)
    rhs = embed_cyclotomic(alpha, field)
    return lhs == rhs


def finiteness_scan(
    a: Fraction,
    b: Fraction,
    k_max: int = 60,
    l_max: int = 10,
    k_top: int = 200,
) -> FinitenessReport:
    """Exhibit the finiteness of the coefficient equation b + 2 beta = alpha.

    k_bound is the largest k at which the magnitude envelope still allows a
    solution (monotonicity of the envelope extends the exclusion beyond the
    computed range); below it every primitive character cell inside the
    conductor cutoff is enumerated and the relation is re-checked exactly.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("both coefficients must be nonzero")
    b_abs = abs(float(b))
    envs = {k: envelope(k) for k in range(3, k_top + 1)}
    above = [k for k, v in envs.items() if v >= b_abs]
    k_bound = max(above) if above else 2
    monotone = all(envs[k + 1] < envs[k] for k in range(8, k_top))
    k_enum = min(k_bound, k_max)
    survivors: list[ScanCell] = []
    cells: list[ScanCell] = []
    cutoffs: dict[int, int] = {}
    for k in range(3, k_enum + 1):
        l_star = conductor_cutoff(k, b_abs)
        bound = max(l_max, l_star)
        cutoffs[k] = l_star
        for modulus in range(1, bound + 1):
            for phi in characters_mod(modulus):
                if not phi.is_primitive():
                    continue
                if (phi**2).conductor() != modulus:
                    continue
                if phi.parity() != (-1) ** k:
                    continue
                alpha, beta = alpha_beta(k, phi)
                field = cyclotomic_field(
                    math.lcm(alpha.parent.zeta_order, beta.parent.zeta_order)
                )
                ok = field.coerce(b) + 2 * embed_cyclotomic(beta, field) == embed_cyclotomic(
                    alpha, field
                )
                cell = ScanCell(
                    k,
                    modulus,
                    phi.exponents,
                    abs_embed(alpha),
                    abs_embed(beta),
                    ok,
                    "" if modulus <= l_star else "bound",
                )
                cells.append(cell)
                if ok:
                    if cell.excluded_by:
                        raise ArithmeticError(
                            "exact solution found in the bound-excluded region"
                        )
                    survivors.append(cell)
    complete = k_max >= k_bound and monotone
    notes = "" if complete else "enumeration truncated below the computed k bound"
    return FinitenessReport(
        a, b, k_bound, k_enum, l_max, survivors, cells, cutoffs, monotone, complete, notes
    )


# ---------------------------------------------------------------------------
# Irreducibility and symmetric-group evidence
# ---------------------------------------------------------------------------


@dataclass
class MaedaReport:
    weight: int
    dim: int
    hecke_index: int | None
    charpoly: RatPoly | None
    certificate: IrreducibilityCertificate | None
    poly_disc: Fraction | None
    disc_squarefree: int | None
    disc_square_root: int | None
    disc_factor_complete: bool
    quad_field_disc: int | None
    patterns: dict[int, tuple[int, ...]]
    has_full_cycle: bool
    has_transposition: bool
    has_single_odd_cycle: bool

    @property
    def irreducible(self) -> bool:
        return bool(self.certificate and self.certificate.is_irreducible) or self.dim <= 1

    @property
    def sn_evidence(self) -> bool:
        """Heuristic witness only; never a proof of the Galois group."""
        return self.has_full_cycle and self.has_transposition and self.has_single_odd_cycle

    def as_json(self) -> dict:
        return {
            "weight": self.weight,
            "dim": self.dim,
            "hecke_index": self.hecke_index,
            "charpoly": [str(c) for c in self.charpoly.coeffs] if self.charpoly else None,
            "status": self.certificate.status if self.certificate else "trivial",
            "poly_disc": str(self.poly_disc) if self.poly_disc is not None else None,
            "disc_squarefree": (
                str(self.disc_squarefree) if self.disc_squarefree is not None else None
            ),
            "disc_factor_complete": self.disc_factor_complete,
            "quad_field_disc": self.quad_field_disc,
            "patterns": {str(p): list(pat) for p, pat in self.patterns.items()},
            "sn_evidence": {
                "full_cycle": self.has_full_cycle,
                "transposition": self.has_transposition,
                "single_odd_cycle": self.has_single_odd_cycle,
                "heuristic_sn": self.sn_evidence,
            },
        }


def _collect_patterns(
    poly: RatPoly, count: int
) -> dict[int, tuple[int, ...]]:
    disc_num = discriminant(poly).numerator
    lead_num = poly.lead.numerator
    patterns: dict[int, tuple[int, ...]] = {}
    if disc_num == 0:
        return patterns
    for q in iter_primes():
        if len(patterns) >= count:
            break
        if lead_num % q == 0 or disc_num % q == 0:
            continue
        patterns[q] = tuple(factor_degrees_mod_p(poly, q))
    return patterns


def maeda_check(
    k: int,
    n_list: tuple[int, ...] = (2, 3, 5),
    pattern_primes: int = 30,
) -> MaedaReport:
    """Irreducibility certificate for a Hecke charpoly plus mod-p cycle-type
    evidence for the full symmetric group (one-sided, explicitly heuristic)."""
    d = dim_Sk(k)
    if d < 1:
        raise ValueError(f"weight {k} has no cusp forms")
    if d == 1:
        return MaedaReport(
            k, 1, None, None, None, None, None, None, True, None, {}, True, True, True
        )
    cert = None
    cp = None
    index = None
    for n in n_list:
        cp = charpoly(hecke_matrix(n, k))
        cert = poly_irreducible(cp, prime_count=pattern_primes)
        index = n
        if cert.is_irreducible or cert.is_reducible:
            break
    patterns = _collect_patterns(cp, pattern_primes)
    full_cycle = any(pat == (d,) for pat in patterns.values())
    transposition = any(
        sorted(pat) == [1] * (d - 2) + [2] for pat in patterns.values()
    )
    # a transposition generates the full group when d = 2, so the odd-cycle
    # witness is vacuous there (and unobservable: patterns are (1,1) or (2))
    single_odd = d <= 2 or any(
        sum(1 for x in pat if x > 1) == 1 and max(pat) % 2 == 1 and max(pat) > 1
        for pat in patterns.values()
    )
    disc = discriminant(cp)
    # bounded caps: large higher-degree discriminants come back flagged partial
    split = squarefree_kernel(disc.numerator, trial_bound=10**5, rho_iterations=20_000)
    quad_disc = None
    if d == 2 and split.complete:
        quad_disc = quad_field_discriminant(split.squarefree)
    return MaedaReport(
        k,
        d,
        index,
        cp,
        cert,
        disc,
        split.squarefree if split.complete else None,
        split.square_root if split.complete else None,
        split.complete,
        quad_disc,
        patterns,
        full_cycle,
        transposition,
        single_odd,
    )


# ---------------------------------------------------------------------------
# Hecke-field discriminant coprimality for the weight pairs (k, 2k)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SharedPrimeFinding:
    p: int
    ramified_in_quadratic: bool
    index_divisor_in_double: bool | None
    conclusion: str  # "clear" | "common-ramification" | "unknown"

    def as_json(self) -> dict:
        return {
            "p": self.p,
            "ramified_in_quadratic": self.ramified_in_quadratic,
            "index_divisor_in_double": self.index_divisor_in_double,
            "conclusion": self.conclusion,
        }


@dataclass
class IntersectionReport:
    k: int
    pair: tuple[int, int]
    verdict: str  # "coprime" | "common-ramification" | "unknown"
    quad_field_disc: int | None
    poly_disc_k: Fraction | None
    poly_disc_2k: Fraction | None
    shared: list[SharedPrimeFinding]
    detail: str = ""

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "pair": list(self.pair),
            "verdict": self.verdict,
            "quad_field_disc": self.quad_field_disc,
            "poly_disc_k": str(self.poly_disc_k) if self.poly_disc_k is not None else None,
            "poly_disc_2k": str(self.poly_disc_2k) if self.poly_disc_2k is not None else None,
            "shared_primes": [s.as_json() for s in self.shared],
            "detail": self.detail,
        }


def hecke_field_intersection_check(k: int) -> IntersectionReport:
    """Certify coprimality of the Hecke-field discriminants for (k, 2k).

    Route: gcd of the two charpoly discriminants, trial-division factoring of
    the gcd, exact quadratic field discriminant on the k side, and the
    Dedekind index test on the 2k side for any genuinely shared ramified
    prime. Inconclusive primes are reported as unknown, never passed.
    """
    d1 = dim_Sk(k)
    if d1 == 0:
        raise ValueError(f"weight {k} has no cusp forms")
    if d1 == 1:
        return IntersectionReport(
            k, (k, 2 * k), "coprime", None, None, None, [], detail="rational Hecke field"
        )
    if d1 != 2:
        raise ValueError("the quadratic-side route needs dim 2 in weight k")
    cp1 = charpoly(hecke_matrix(2, k))
    cert1 = poly_irreducible(cp1)
    if not cert1.is_irreducible:
        raise ArithmeticError(f"weight-{k} charpoly not certified irreducible")
    cp2 = charpoly(hecke_matrix(2, 2 * k))
    cert2 = poly_irreducible(cp2)
    if not cert2.is_irreducible:
        raise ArithmeticError(f"weight-{2 * k} charpoly not certified irreducible")
    disc1 = discriminant(cp1)
    disc2 = discriminant(cp2)
    split = squarefree_kernel(disc1.numerator)
    assert split.complete
    quad_disc = quad_field_discriminant(split.squarefree)
    g = math.gcd(abs(disc1.numerator), abs(disc2.numerator))
    fact = factorize(g, trial_bound=10**6, rho_iterations=0)
    findings: list[SharedPrimeFinding] = []
    verdict = "coprime"
    for p in sorted(fact.factors):
        ram1 = quad_disc % p == 0
        if not ram1:
            findings.append(SharedPrimeFinding(p, False, None, "clear"))
            continue
        divides_index = dedekind_index_test(cp2, p)
        if not divides_index:
            # p divides the charpoly discriminant but not the index, so it
            # divides the field discriminant on the 2k side as well
            findings.append(SharedPrimeFinding(p, True, False, "common-ramification"))
            verdict = "common-ramification"
        else:
            findings.append(SharedPrimeFinding(p, True, True, "unknown"))
            if verdict == "coprime":
                verdict = "unknown"
    detail = ""
    if not fact.complete:
        verdict = "unknown"
        detail = f"gcd cofactor {fact.cofactor} not factored by trial division"
    return IntersectionReport(
        k, (k, 2 * k), verdict, quad_disc, disc1, disc2, findings, detail
    )
