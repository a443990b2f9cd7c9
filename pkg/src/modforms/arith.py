"""Integer utilities: primality, bounded factoring, squarefree decomposition."""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_ITERATIONS = 200_000


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a base set that is deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, alive in enumerate(sieve) if alive]


def iter_primes() -> Iterator[int]:
    """Yield primes in increasing order, without an upper bound."""
    yield 2
    n = 3
    while True:
        if is_probable_prime(n):
            yield n
        n += 2


def _pollard_brent(n: int, seed: int = 1, max_iter: int = DEFAULT_RHO_ITERATIONS) -> int | None:
    """Brent-cycle Pollard rho; returns a nontrivial factor or None on cap."""
    if n % 2 == 0:
        return 2
    y, c, m = (seed % (n - 1)) + 1, (seed % (n - 3)) + 1, 128
    g, r, q = 1, 1, 1
    x = ys = y
    count = 0
    while g == 1 and count < max_iter:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            count += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            count += 1
            if count >= max_iter:
                return None
    return g if 1 < g < n else None


class Factorization(NamedTuple):
    factors: dict[int, int]
    cofactor: int  # unfactored remainder, 1 when the factorization is complete

    @property
    def complete(self) -> bool:
        return self.cofactor == 1


def factorize(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_iterations: int = DEFAULT_RHO_ITERATIONS,
) -> Factorization:
    """Factor |n| by trial division then bounded Pollard rho.

    Never guesses: whatever remains unfactored within the caps is reported
    as a composite cofactor.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p <= trial_bound:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    if n == 1:
        return Factorization(factors, 1)
    if n <= trial_bound * trial_bound or is_probable_prime(n):
        # trial division reached sqrt(n), or n certified (probable) prime
        factors[n] = factors.get(n, 0) + 1
        return Factorization(factors, 1)
    stack = [n]
    cofactor = 1
    seed = 1
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = _int_nth_root_exact(m)
        if root is not None:
            base, exp = root
            stack.extend([base] * exp)
            continue
        d = _pollard_brent(m, seed=seed, max_iter=rho_iterations)
        seed += 1
        if d is None:
            cofactor *= m
            continue
        stack.append(d)
        stack.append(m // d)
    return Factorization(factors, cofactor)


def _iroot(n: int, e: int) -> int:
    """Floor of the e-th root of n >= 0, exact integer Newton iteration."""
    if n == 0:
        return 0
    x = 1 << (-(-n.bit_length() // e))
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def _int_nth_root_exact(n: int) -> tuple[int, int] | None:
    """If n = b**e for some e >= 2, return (b, e) with e maximal; else None."""
    for e in range(n.bit_length(), 1, -1):
        b = _iroot(n, e)
        if b > 1 and b**e == n:
            return b, e
    return None


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no divisor list")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(e: int, n: int) -> int:
    """Divisor power sum: sum of d**e over positive divisors d of n."""
    return sum(d**e for d in divisors(n))


class SquarefreeSplit(NamedTuple):
    squarefree: int
    square_root: int  # n == squarefree * square_root**2
    complete: bool  # False when the factoring caps were hit


def squarefree_kernel(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_iterations: int = DEFAULT_RHO_ITERATIONS,
) -> SquarefreeSplit:
    """Split n = s * f**2 with s squarefree and f > 0.

    A partial factorization is flagged via complete=False; the returned pair
    is then only guaranteed to satisfy n == s * f**2, not squarefreeness of s.
    """
    if n == 0:
        raise ValueError("squarefree_kernel(0) is undefined")
    sign = -1 if n < 0 else 1
    fact = factorize(abs(n), trial_bound, rho_iterations)
    s, f = 1, 1
    for p, e in fact.factors.items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    s *= fact.cofactor  # unfactored part carried into s, flagged below
    return SquarefreeSplit(sign * s, f, fact.complete)


def quad_field_discriminant(d: int) -> int:
    """Field discriminant of Q(sqrt(d)) for squarefree d != 0, 1."""
    if d in (0, 1):
        raise ValueError("d must differ from 0 and 1")
    split = squarefree_kernel(d)
    if not split.complete:
        raise ValueError(f"could not certify {d} squarefree within factoring caps")
    if split.square_root != 1:
        raise ValueError(f"{d} is not squarefree (square part {split.square_root}**2)")
    return d if d % 4 == 1 else 4 * d
