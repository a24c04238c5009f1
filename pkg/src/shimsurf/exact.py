"""Exact integer and rational arithmetic kernel.

Everything in this module is pure and deterministic: Kronecker symbols
with the standard conventions at 2 and -1, integer factorization (trial
division, deterministic Miller-Rabin, Brent's rho), square-part
decomposition, and recovery of a rational from a floating-point
approximation by a bounded-denominator sweep.

Rationals are `fractions.Fraction` throughout the package.  Python
integers are unbounded, so no overflow handling is required anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n != 0.

    Fully multiplicative in both arguments, with (a|2) = 0, +1, -1 for
    a even, a = +-1 mod 8, a = +-3 mod 8, and (a|-1) = sign(a).
    """
    if n == 0:
        raise ValueError("kronecker symbol (a|0) is not defined here")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    while n % 2 == 0:
        if a % 2 == 0:
            return 0
        n //= 2
        if a % 8 in (3, 5):
            result = -result
    # n odd and positive: Jacobi symbol.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    # Brent's cycle variant of Pollard rho; n odd composite, not a prime power
    # of a small prime.  Deterministic scan over increment constants.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to factor {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, primes increasing."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < 10_000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.extend((d, m // d))
    return sorted(out.items())


def square_part(n: int) -> tuple[int, int]:
    """Write n >= 1 as squarefree * square with square the largest square divisor."""
    if n < 1:
        raise ValueError(f"square_part needs n >= 1, got {n}")
    squarefree = square = 1
    for p, e in factorize(n):
        if e % 2:
            squarefree *= p
        square *= p ** (e - e % 2)
    return squarefree, square


def is_squarefree(n: int) -> bool:
    return n >= 1 and square_part(n)[0] == n


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*; requires gcd(a, n) = 1."""
    a %= n
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Write p - 1 = q * 2^s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def recognize_rational(x: float, max_den: int, tol: float) -> Fraction | None:
    """Recover x as a fraction with denominator <= max_den.

    Returns the unique fraction r with |x - r| <= tol, provided no other
    fraction with denominator <= max_den lies within 2*tol of x; returns
    None otherwise.  The margin guards against fabricating a wrong value
    from an under-resolved estimate.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    xf = Fraction(x)
    wide = Fraction(tol) * 2
    candidates: set[Fraction] = set()
    for q in range(1, max_den + 1):
        mid = round(x * q)
        for num in (mid - 1, mid, mid + 1):
            r = Fraction(num, q)
            if abs(xf - r) <= wide:
                candidates.add(r)
    if len(candidates) != 1:
        return None
    (r,) = candidates
    return r if abs(xf - r) <= Fraction(tol) else None
