"""Univariate polynomial arithmetic and factorization over F_p.

Polynomials are coefficient tuples in ascending order (coeffs[i] is the
coefficient of x^i) with a nonzero leading coefficient; the zero
polynomial is the empty tuple.  Factorization runs squarefree
decomposition, then distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting with a seeded generator, so results are
reproducible across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact import is_prime

Coeffs = tuple[int, ...]


@dataclass(frozen=True)
class PolyModP:
    """A polynomial over F_p; coeffs ascending, leading coefficient nonzero."""

    p: int
    coeffs: Coeffs

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial gets -1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(terms)


def poly(p: int, coeffs: list[int] | Coeffs) -> PolyModP:
    """Build a PolyModP from ascending coefficients, reducing mod p."""
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return PolyModP(p, tuple(c))


def poly_from_descending(p: int, coeffs: list[int]) -> PolyModP:
    return poly(p, list(reversed(coeffs)))


def _trim(c: list[int]) -> Coeffs:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    n = max(len(a.coeffs), len(b.coeffs))
    c = [0] * n
    for i, x in enumerate(a.coeffs):
        c[i] = x
    for i, x in enumerate(b.coeffs):
        c[i] = (c[i] + x) % p
    return PolyModP(p, _trim(c))


def psub(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    n = max(len(a.coeffs), len(b.coeffs))
    c = [0] * n
    for i, x in enumerate(a.coeffs):
        c[i] = x
    for i, x in enumerate(b.coeffs):
        c[i] = (c[i] - x) % p
    return PolyModP(p, _trim(c))


def pmul(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    if not a.coeffs or not b.coeffs:
        return PolyModP(p, ())
    c = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            c[i + j] = (c[i + j] + x * y) % p
    return PolyModP(p, _trim(c))


def pdivmod(a: PolyModP, b: PolyModP) -> tuple[PolyModP, PolyModP]:
    p = a.p
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lead = b.degree, b.coeffs[-1]
    inv = pow(lead, p - 2, p)
    if len(rem) - 1 < db:
        return PolyModP(p, ()), PolyModP(p, _trim(rem))
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c * inv % p
        quot[i - db] = q
        for j, y in enumerate(b.coeffs):
            rem[i - db + j] = (rem[i - db + j] - q * y) % p
    return PolyModP(p, _trim(quot)), PolyModP(p, _trim(rem))


def pmod(a: PolyModP, b: PolyModP) -> PolyModP:
    return pdivmod(a, b)[1]


def pmonic(a: PolyModP) -> PolyModP:
    if not a.coeffs or a.coeffs[-1] == 1:
        return a
    inv = pow(a.coeffs[-1], a.p - 2, a.p)
    return PolyModP(a.p, tuple(c * inv % a.p for c in a.coeffs))


def pgcd(a: PolyModP, b: PolyModP) -> PolyModP:
    while b.coeffs:
        a, b = b, pmod(a, b)
    return pmonic(a)


def ppow_mod(base: PolyModP, e: int, mod: PolyModP) -> PolyModP:
    result = poly(base.p, [1])
    base = pmod(base, mod)
    while e:
        if e & 1:
            result = pmod(pmul(result, base), mod)
        base = pmod(pmul(base, base), mod)
        e >>= 1
    return result


def pderiv(a: PolyModP) -> PolyModP:
    p = a.p
    c = [i * x % p for i, x in enumerate(a.coeffs)][1:]
    return PolyModP(p, _trim(c))


def _pth_root(a: PolyModP) -> PolyModP:
    # a is a p-th power over F_p, i.e. a(x) = b(x)^p with b built from
    # every p-th coefficient (Frobenius fixes the prime field).
    p = a.p
    return PolyModP(p, _trim(list(a.coeffs[::p])))


def _squarefree_decomposition(f: PolyModP) -> list[tuple[PolyModP, int]]:
    # Returns [(g, m)] with f = prod g^m, the g squarefree and pairwise coprime.
    p = f.p
    out: list[tuple[PolyModP, int]] = []
    d = pderiv(f)
    if not d.coeffs:
        for g, m in _squarefree_decomposition(_pth_root(f)):
            out.append((g, m * p))
        return out
    c = pgcd(f, d)
    w = pdivmod(f, c)[0]
    i = 1
    while w.degree > 0:
        y = pgcd(w, c)
        z = pdivmod(w, y)[0]
        if z.degree > 0:
            out.append((pmonic(z), i))
        w = y
        c = pdivmod(c, y)[0]
        i += 1
    if c.degree > 0:
        for g, m in _squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def _equal_degree_split(f: PolyModP, d: int, rng: random.Random) -> list[PolyModP]:
    # f is a product of distinct irreducibles, all of degree d.
    p = f.p
    if f.degree == d:
        return [f]
    while True:
        u = poly(p, [rng.randrange(p) for _ in range(f.degree)] + [1])
        if p == 2:
            t = u
            acc = u
            for _ in range(d - 1):
                t = pmod(pmul(t, t), f)
                acc = padd(acc, t)
            g = pgcd(acc, f)
        else:
            w = ppow_mod(u, (p**d - 1) // 2, f)
            g = pgcd(psub(w, poly(p, [1])), f)
        if 0 < g.degree < f.degree:
            h = pdivmod(f, g)[0]
            return _equal_degree_split(g, d, rng) + _equal_degree_split(pmonic(h), d, rng)


def _distinct_degree(f: PolyModP, rng: random.Random) -> list[PolyModP]:
    # f monic squarefree; returns its irreducible factors.
    p = f.p
    out: list[PolyModP] = []
    x = poly(p, [0, 1])
    h = x
    d = 0
    rest = f
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            out.append(rest)
            break
        h = ppow_mod(h, p, rest)
        g = pgcd(psub(h, x), rest)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            rest = pmonic(pdivmod(rest, g)[0])
            h = pmod(h, rest)
    return out


def poly_factor_mod_p(f: PolyModP) -> list[tuple[PolyModP, int]]:
    """Factor a monic polynomial over F_p into monic irreducibles.

    Returns (factor, multiplicity) pairs sorted by degree then by the
    ascending coefficient sequence; deterministic because the internal
    randomness is seeded from (p, coefficients).
    """
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    if f.coeffs[-1] != 1:
        raise ValueError("need a monic polynomial")
    seed = f.p
    for c in f.coeffs:
        seed = (seed * 1_000_003 + c) % (1 << 61)
    rng = random.Random(seed)
    out: list[tuple[PolyModP, int]] = []
    for g, m in _squarefree_decomposition(f):
        for irr in _distinct_degree(g, rng):
            out.append((irr, m))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    assert sum(g.degree * m for g, m in out) == f.degree
    return out
