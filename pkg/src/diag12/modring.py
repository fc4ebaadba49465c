"""Arithmetic in Z_n: residues, factorization, nilradical, units."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, lcm

MAX_MODULUS = 2**63 - 1


class ModulusMismatchError(ValueError):
    pass


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` by trial division, primes increasing."""
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == ((p, 1),)


@dataclass(frozen=True)
class RingSpec:
    """The ring Z_n together with the structural data the rest of the package needs.

    ``radical`` is the product of the distinct primes dividing ``n``; a residue
    is nilpotent exactly when the radical divides it.
    """

    n: int
    factorization: tuple[tuple[int, int], ...] = field(repr=False)
    radical: int = field(repr=False)
    max_exponent: int = field(repr=False)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.n) if gcd(c, self.n) == 1)

    @cached_property
    def nilpotents(self) -> tuple[int, ...]:
        return tuple(range(0, self.n, self.radical))

    def residue(self, value: int) -> Residue:
        return Residue(value, self)

    def __str__(self):
        return f"Z_{self.n}"


@lru_cache(maxsize=None)
def make_ring(n: int) -> RingSpec:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"modulus must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n > MAX_MODULUS:
        raise ValueError(f"modulus {n} exceeds 2**63 - 1")
    factorization = factorize(n)
    radical = 1
    for p, _ in factorization:
        radical *= p
    max_exponent = max((e for _, e in factorization), default=0)
    return RingSpec(n, factorization, radical, max_exponent)


@dataclass(frozen=True)
class Residue:
    """An element of Z_n, stored as its least nonnegative representative."""

    value: int
    ring: RingSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.ring.n)

    @property
    def modulus(self) -> int:
        return self.ring.n

    def _coerce(self, other) -> Residue:
        if isinstance(other, Residue):
            if other.ring.n != self.ring.n:
                raise ModulusMismatchError(
                    f"cannot combine residues mod {self.ring.n} and mod {other.ring.n}"
                )
            return other
        if isinstance(other, int):
            return Residue(other, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value + other.value, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value - other.value, self.ring)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(other.value - self.value, self.ring)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.value * other.value, self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.ring)

    def __pow__(self, k: int):
        if k < 0:
            return Residue(pow(self.inverse().value, -k, self.ring.n), self.ring)
        return Residue(pow(self.value, k, self.ring.n), self.ring)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def inverse(self) -> Residue:
        if not is_unit_residue(self):
            raise ZeroDivisionError(f"{self.value} is not a unit mod {self.ring.n}")
        return Residue(pow(self.value, -1, self.ring.n), self.ring)


def res_add(a: Residue, b: Residue) -> Residue:
    return a + b


def res_mul(a: Residue, b: Residue) -> Residue:
    return a * b


def res_neg(a: Residue) -> Residue:
    return -a


def is_nilpotent_residue(c: Residue) -> bool:
    return c.value % c.ring.radical == 0


def is_unit_residue(c: Residue) -> bool:
    # gcd(0, 1) == 1 covers the zero ring
    return gcd(c.value, c.ring.n) == 1


def unit_group_exponent(ring: RingSpec) -> int:
    """Exponent of the unit group of Z_n (the Carmichael function of n)."""
    e = 1
    for p, k in ring.factorization:
        if p == 2 and k >= 3:
            part = 2 ** (k - 2)
        else:
            part = p ** (k - 1) * (p - 1)
        e = lcm(e, part)
    return e
