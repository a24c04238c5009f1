"""Real quadratic fields and their primes.

A field is identified by its squarefree radicand d > 1; the fundamental
discriminant is d when d = 1 (mod 4) and 4d otherwise.  Rational primes
split, stay inert, or ramify according to the Kronecker symbol of the
discriminant, and a prime of the field is modelled as the rational prime
below it plus a tag selecting one of the (at most two) primes above.

The module also evaluates the generalized second Bernoulli number of the
field's quadratic character by two independent closed forms that are
checked against each other on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar, Iterator

from .exact import is_prime, is_squarefree, kronecker, sqrt_mod, square_part


class Splitting(Enum):
    """Behaviour of a rational prime in a quadratic extension."""

    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class RationalField:
    """The rational numbers, as the degenerate bottom of the tower."""

    degree: ClassVar[int] = 1
    disc: ClassVar[int] = 1

    def __str__(self) -> str:
        return "Q"


QQ = RationalField()


@dataclass(frozen=True)
class RationalPrime:
    """A rational prime, wrapped to share the interface of field primes."""

    p: int
    field: ClassVar[RationalField] = QQ

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    residue_degree: ClassVar[int] = 1
    ramification_index: ClassVar[int] = 1

    @property
    def norm(self) -> int:
        return self.p

    def conjugate(self) -> "RationalPrime":
        return self

    def is_conjugation_stable(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"prime({self.p})"


@dataclass(frozen=True)
class QuadField:
    """The real quadratic field generated by the square root of d."""

    d: int
    disc: int

    degree: ClassVar[int] = 2

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"

    def splitting(self, p: int) -> Splitting:
        return splitting_type(self, p)

    def bernoulli2(self) -> Fraction:
        return bernoulli2(self.disc)


def quad_field(d: int) -> QuadField:
    """The real quadratic field of squarefree radicand d > 1."""
    if d <= 1:
        raise ValueError(f"radicand must exceed 1, got {d}")
    if not is_squarefree(d):
        raise ValueError(f"radicand must be squarefree, got {d}")
    disc = d if d % 4 == 1 else 4 * d
    return QuadField(d, disc)


def fundamental_discriminant(n: int) -> int:
    """Fundamental discriminant of Q(sqrt(n)) for a nonzero integer n.

    Returns 1 when n is a perfect square (the extension is trivial).
    """
    if n == 0:
        raise ValueError("radicand must be nonzero")
    sign = 1 if n > 0 else -1
    free, _ = square_part(abs(n))
    s = sign * free
    if s == 1:
        return 1
    return s if s % 4 == 1 else 4 * s


def is_fundamental_discriminant(disc: int) -> bool:
    """True when disc is the discriminant of a quadratic field (or 1)."""
    if disc == 1:
        return True
    if disc % 4 == 1:
        return is_squarefree(abs(disc))
    if disc % 4 == 0:
        m = disc // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


def fundamental_discriminants(lo: int, hi: int) -> Iterator[int]:
    """Yield real-quadratic fundamental discriminants in [lo, hi]."""
    for disc in range(max(lo, 5), hi + 1):
        if is_fundamental_discriminant(disc):
            yield disc


def field_from_disc(disc: int) -> QuadField:
    """The real quadratic field with the given fundamental discriminant."""
    if disc <= 1 or not is_fundamental_discriminant(disc):
        raise ValueError(f"{disc} is not a real-quadratic fundamental discriminant")
    d = disc if disc % 4 == 1 else disc // 4
    return quad_field(d)


def splitting_type(field: QuadField, p: int) -> Splitting:
    """How the rational prime p behaves in the field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    symbol = kronecker(field.disc, p)
    if symbol == 1:
        return Splitting.SPLIT
    if symbol == -1:
        return Splitting.INERT
    return Splitting.RAMIFIED


@dataclass(frozen=True)
class QuadPrime:
    """A prime of a real quadratic field, lying over the rational prime p.

    Over a split p there are two primes, distinguished by tag 0 / tag 1;
    the tag picks the square root of d mod p generating the prime (the
    smaller residue is tag 0).  Over an inert or ramified p the tag is 0.
    """

    field: QuadField
    p: int
    splitting: Splitting
    tag: int = 0

    def __post_init__(self) -> None:
        if splitting_type(self.field, self.p) is not self.splitting:
            raise ValueError(
                f"{self.p} is {splitting_type(self.field, self.p).value} "
                f"in {self.field}, not {self.splitting.value}"
            )
        allowed = (0, 1) if self.splitting is Splitting.SPLIT else (0,)
        if self.tag not in allowed:
            raise ValueError(f"tag {self.tag} invalid for a {self.splitting.value} prime")

    @property
    def residue_degree(self) -> int:
        return 2 if self.splitting is Splitting.INERT else 1

    @property
    def ramification_index(self) -> int:
        return 2 if self.splitting is Splitting.RAMIFIED else 1

    @property
    def norm(self) -> int:
        return self.p**self.residue_degree

    def conjugate(self) -> "QuadPrime":
        """The image under the nontrivial automorphism of the field."""
        if self.splitting is Splitting.SPLIT:
            return replace(self, tag=1 - self.tag)
        return self

    def is_conjugation_stable(self) -> bool:
        return self.conjugate() == self

    def __str__(self) -> str:
        suffix = f"#{self.tag}" if self.splitting is Splitting.SPLIT else ""
        return f"prime({self.p}{suffix} in {self.field})"


def primes_above(field: QuadField, p: int) -> list[QuadPrime]:
    """All primes of the field over the rational prime p (one or two)."""
    kind = splitting_type(field, p)
    if kind is Splitting.SPLIT:
        return [QuadPrime(field, p, kind, 0), QuadPrime(field, p, kind, 1)]
    return [QuadPrime(field, p, kind, 0)]


def residue_image_sqrt_d(prime: QuadPrime) -> int:
    """Image of sqrt(d) in the residue field F_p of a degree-one prime.

    For a split odd p the two primes above p correspond to the two square
    roots of d mod p; tag 0 is the smaller root.  Over a split 2 the
    residue is 1.  Inert primes have residue field F_{p^2}, so the image
    is not a rational residue and the call is rejected.
    """
    d, p = prime.field.d, prime.p
    if prime.splitting is Splitting.INERT:
        raise ValueError("inert primes have no rational residue for sqrt(d)")
    if prime.splitting is Splitting.RAMIFIED:
        return 0 if d % p == 0 else 1  # the p = 2, d = 3 (mod 4) case
    if p == 2:
        return 1
    root = sqrt_mod(d % p, p)
    assert root is not None, "split prime must have d a square mod p"
    pair = sorted((root, p - root))
    return pair[prime.tag]


def _bernoulli2_poly(x: Fraction) -> Fraction:
    return x * x - x + Fraction(1, 6)


@lru_cache(maxsize=None)
def bernoulli2(disc: int) -> Fraction:
    """Generalized Bernoulli number B_2 of the quadratic character mod disc.

    Evaluated by two independent closed forms, which are asserted equal:
    disc * sum_a chi(a) B2(a/disc) and (1/disc) * sum_a chi(a) a^2.
    """
    if disc <= 1 or not is_fundamental_discriminant(disc):
        raise ValueError(f"{disc} is not a real-quadratic fundamental discriminant")
    chi = [0] + [kronecker(disc, a) for a in range(1, disc)]
    via_poly = disc * sum(
        (chi[a] * _bernoulli2_poly(Fraction(a, disc)) for a in range(1, disc)),
        start=Fraction(0),
    )
    via_squares = Fraction(sum(chi[a] * a * a for a in range(1, disc)), disc)
    assert via_poly == via_squares, f"Bernoulli cross-check failed at disc {disc}"
    return via_squares
