"""Units, nilpotents and involutions in Z_n[x1, ..., xm].

A polynomial is a unit exactly when its constant term is a unit mod n and
every other coefficient is nilpotent mod n.  Inversion writes ``f = a + g``
with ``a`` the constant term and ``g`` nilpotent, and sums the finite series

    f^-1 = a^-1 * (1 - g/a + (g/a)^2 - ... + (-1)^k (g/a)^k)

where ``k`` is the nilpotency index of ``g``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .modring import (
    Residue,
    is_nilpotent_residue,
    is_prime,
    is_unit_residue,
    make_ring,
)
from .polyring import Polynomial, poly_add, poly_mul, to_text, format_monomial


class NotAUnitError(ValueError):
    pass


class NonUnitConstantError(NotAUnitError):
    def __init__(self, f: Polynomial):
        self.constant = f.constant_coefficient
        super().__init__(f"constant term {self.constant} is not a unit mod {f.n}")


class NotNilpotentError(NotAUnitError):
    def __init__(self, f: Polynomial, mono, coefficient: int):
        self.monomial = mono
        self.coefficient = coefficient
        super().__init__(
            f"coefficient {coefficient} of {format_monomial(mono)} is not nilpotent mod {f.n}"
        )


def _first_non_nilpotent(f: Polynomial, skip_constant: bool = True):
    radical = f.ring.radical
    zero = (0,) * f.m
    for mono, c in f.sorted_terms():
        if skip_constant and mono == zero:
            continue
        if c % radical:
            return mono, c
    return None


def is_unit_poly(f: Polynomial) -> bool:
    if not is_unit_residue(Residue(f.constant_coefficient, f.ring)):
        return False
    zero = (0,) * f.m
    return all(
        is_nilpotent_residue(Residue(c, f.ring)) for mono, c in f.terms.items() if mono != zero
    )


def nilpotent_part(f: Polynomial) -> Polynomial:
    """``f`` with its constant term removed."""
    zero = (0,) * f.m
    return Polynomial._raw(f.ring, f.m, {mono: c for mono, c in f.terms.items() if mono != zero})


def nilpotency_index(g: Polynomial) -> int:
    """The k with g^k != 0 and g^(k+1) == 0; 0 for the zero polynomial.

    Raises NotNilpotentError if some coefficient of ``g`` (constant included)
    is not nilpotent mod n.
    """
    bad = _first_non_nilpotent(g, skip_constant=False)
    if bad is not None:
        raise NotNilpotentError(g, *bad)
    if g.is_zero():
        return 0
    # radical ** max_exponent == 0 mod n, so g ** max_exponent == 0
    cap = g.ring.max_exponent
    k = 1
    power = g
    while True:
        power = poly_mul(power, g)
        if power.is_zero():
            return k
        k += 1
        if k >= cap:
            raise RuntimeError(f"{to_text(g)} has nonzero power {k}, beyond the bound {cap - 1}")


@dataclass(frozen=True)
class UnitCertificate:
    """A polynomial and its inverse; construction fails unless ``f * inverse == 1``."""

    f: Polynomial
    inverse: Polynomial
    nilpotency_index_used: int

    def __post_init__(self):
        if poly_mul(self.f, self.inverse) != Polynomial.one(self.f.ring, self.f.m):
            raise ValueError(f"{self.inverse} is not an inverse of {self.f}")


def invert_unit(f: Polynomial) -> UnitCertificate:
    n = f.ring.n
    a = f.constant_coefficient
    if not is_unit_residue(Residue(a, f.ring)):
        raise NonUnitConstantError(f)
    bad = _first_non_nilpotent(f)
    if bad is not None:
        raise NotNilpotentError(f, *bad)
    a_inv = pow(a, -1, n)
    g = nilpotent_part(f)
    k = nilpotency_index(g)
    t = g.scale(-a_inv)
    series = Polynomial.one(f.ring, f.m)
    power = series
    for _ in range(k):
        power = poly_mul(power, t)
        series = poly_add(series, power)
    return UnitCertificate(f, series.scale(a_inv), k)


def is_involution(f: Polynomial) -> bool:
    return poly_mul(f, f) == Polynomial.one(f.ring, f.m)


def constant_term_hom(f: Polynomial) -> Residue:
    """Evaluation at the origin, Z_n[x1..xm] -> Z_n."""
    return Residue(f.constant_coefficient, f.ring)


def reduce_mod_prime(f: Polynomial, p: int) -> Polynomial:
    """Coefficientwise reduction Z_n[x1..xm] -> Z_p[x1..xm] for a prime p dividing n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.ring.n % p:
        raise ValueError(f"{p} does not divide {f.ring.n}")
    return f.map_coefficients(make_ring(p))

