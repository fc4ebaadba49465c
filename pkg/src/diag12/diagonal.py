"""Deciders for the diagonal property: ``ab = 1`` implies ``a = b``.

Z_n is decided by scanning its multiplication table, or equivalently by
checking that every unit squares to 1.  Z_n[x1..xm] is decided outright by
the divisors-of-12 criterion, and independently (up to a degree bound) by
enumerating every unit and squaring it.
"""
from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Union

from .modring import Residue, is_unit_residue, make_ring
from .polyring import (
    BudgetExceededError,
    Polynomial,
    enumerate_polynomials,
    enumeration_budget,
    monomials_up_to,
    parse_polynomial,
    poly_mul,
    search_space_size,
    to_text,
)
from .units import is_involution, is_unit_poly

DEFAULT_TABLE_BUDGET = 10**5
SCHEMA_VERSION = 1


class Method(str, enum.Enum):
    TABLE_SCAN = "TABLE_SCAN"
    INVOLUTION_SCAN = "INVOLUTION_SCAN"
    THEOREM = "THEOREM"
    ENUMERATION = "ENUMERATION"


Element = Union[Residue, Polynomial]


def _one(x: Element) -> Element:
    if isinstance(x, Residue):
        return Residue(1, x.ring)
    return Polynomial.one(x.ring, x.m)


def _encode(x: Element):
    return x.value if isinstance(x, Residue) else to_text(x)


@dataclass(frozen=True)
class PairWitness:
    """Two distinct elements whose product is 1."""

    a: Element
    b: Element

    def verify(self) -> bool:
        return self.a * self.b == _one(self.a) and self.a != self.b

    def to_dict(self):
        return {"kind": "pair", "a": _encode(self.a), "b": _encode(self.b)}

    def __str__(self):
        return f"{self.a} * {self.b} = 1"


@dataclass(frozen=True)
class UnitWitness:
    """A unit whose square is not 1."""

    u: Element

    def square(self) -> Element:
        return self.u * self.u

    def verify(self) -> bool:
        if isinstance(self.u, Residue):
            unit = is_unit_residue(self.u)
        else:
            unit = is_unit_poly(self.u)
        return unit and self.square() != _one(self.u)

    def to_dict(self):
        return {"kind": "unit", "u": _encode(self.u), "square": _encode(self.square())}

    def __str__(self):
        return f"{self.u}, whose square is {self.square()}"


Witness = Union[PairWitness, UnitWitness]


@dataclass(frozen=True)
class DiagonalReport:
    """Outcome of one diagonal-property check.

    ``m`` is None for Z_n itself.  A positive ENUMERATION verdict only means
    no counterexample exists up to ``degree_bound``; ``search_bound_note``
    says so in words.
    """

    n: int
    verdict: bool
    method: Method
    m: int | None = None
    degree_bound: int | None = None
    witness: Witness | None = None
    search_bound_note: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if not self.verdict:
            if self.witness is None:
                raise ValueError("negative verdict requires a witness")
            if not self.witness.verify():
                raise ValueError(f"witness does not verify: {self.witness}")
        if (self.method is Method.ENUMERATION) != (self.search_bound_note is not None):
            raise ValueError("search_bound_note is present exactly for ENUMERATION reports")
        if self.method is Method.THEOREM:
            expected = 12 % self.n == 0 if self.is_polynomial else 24 % self.n == 0
            if self.verdict != expected:
                raise ValueError(f"THEOREM verdict for n={self.n} must be {expected}")
        if self.method in (Method.TABLE_SCAN, Method.INVOLUTION_SCAN) and self.is_polynomial:
            raise ValueError(f"{self.method.value} applies to Z_n only")

    @property
    def is_polynomial(self) -> bool:
        return self.m is not None

    @property
    def ring_name(self) -> str:
        if self.m is None:
            return f"Z_{self.n}"
        names = ",".join(f"x{i}" for i in range(1, self.m + 1))
        return f"Z_{self.n}[{names}]"

    def ring_dict(self) -> dict:
        ring = {"n": self.n}
        if self.m is not None:
            ring["m"] = self.m
        if self.degree_bound is not None:
            ring["degree_bound"] = self.degree_bound
        return ring

    def to_dict(self) -> dict:
        doc = {
            "schema": SCHEMA_VERSION,
            "ring": self.ring_dict(),
            "verdict": self.verdict,
            "method": self.method.value,
        }
        if self.witness is not None:
            doc["witness"] = self.witness.to_dict()
        if self.search_bound_note is not None:
            doc["search_bound_note"] = self.search_bound_note
        return doc

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, doc: dict) -> DiagonalReport:
        if doc.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {doc.get('schema')!r}")
        ring = doc["ring"]
        n, m = ring["n"], ring.get("m")

        def decode(value):
            if m is None:
                return Residue(value, make_ring(n))
            return parse_polynomial(value, n, m)

        witness = None
        if "witness" in doc:
            w = doc["witness"]
            if w["kind"] == "pair":
                witness = PairWitness(decode(w["a"]), decode(w["b"]))
            elif w["kind"] == "unit":
                witness = UnitWitness(decode(w["u"]))
            else:
                raise ValueError(f"unknown witness kind {w['kind']!r}")
        return cls(
            n=n,
            verdict=doc["verdict"],
            method=Method(doc["method"]),
            m=m,
            degree_bound=ring.get("degree_bound"),
            witness=witness,
            search_bound_note=doc.get("search_bound_note"),
        )

    @classmethod
    def from_json(cls, text: str) -> DiagonalReport:
        return cls.from_dict(json.loads(text))


def check_table_budget(n: int, budget: int | None):
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    budget = DEFAULT_TABLE_BUDGET if budget is None else budget
    if n > budget:
        raise BudgetExceededError(n, budget, what="table rows")


def diagonal_zn_table(n: int, budget: int | None = None) -> DiagonalReport:
    """Scan the multiplication table of Z_n row by row for an off-diagonal 1."""
    check_table_budget(n, budget)
    ring = make_ring(n)
    one = 1 % n
    for a in range(n):
        for b in range(n):
            if a * b % n == one and a != b:
                witness = PairWitness(Residue(a, ring), Residue(b, ring))
                return DiagonalReport(n, False, Method.TABLE_SCAN, witness=witness)
    return DiagonalReport(n, True, Method.TABLE_SCAN)


def diagonal_zn_involution(n: int, budget: int | None = None) -> DiagonalReport:
    """Check that every unit of Z_n squares to 1; the witness is the smallest one that does not."""
    check_table_budget(n, budget)
    ring = make_ring(n)
    one = 1 % n
    for u in ring.units:
        if u * u % n != one:
            return DiagonalReport(n, False, Method.INVOLUTION_SCAN, witness=UnitWitness(Residue(u, ring)))
    return DiagonalReport(n, True, Method.INVOLUTION_SCAN)


def diagonal_zn_theorem(n: int) -> DiagonalReport:
    """Z_n has the property iff n divides 24; a failing verdict carries the table witness."""
    if 24 % n == 0:
        return DiagonalReport(n, True, Method.THEOREM)
    return DiagonalReport(n, False, Method.THEOREM, witness=diagonal_zn_table(n, budget=n).witness)


def counterexample_unit(n: int, m: int = 1) -> Polynomial:
    """The unit 1 + 2*x1 of Z_8[x..] or 1 + 6*x1 of Z_24[x..], neither of which squares to 1."""
    if n not in (8, 24):
        raise ValueError(f"no counterexample unit is defined for modulus {n} (only 8 and 24)")
    if m < 1:
        raise ValueError("need at least one variable")
    ring = make_ring(n)
    u = Polynomial.one(ring, m) + Polynomial.variable(ring, m, 1).scale(ring.radical)
    assert is_unit_poly(u) and not is_involution(u)
    return u


def lift_constant(c: Residue, m: int) -> Polynomial:
    return Polynomial.constant(c.ring, m, c.value)


def diagonal_poly_theorem(n: int, m: int) -> DiagonalReport:
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if 12 % n == 0:
        return DiagonalReport(n, True, Method.THEOREM, m=m)
    if n in (8, 24):
        witness = UnitWitness(counterexample_unit(n, m))
    else:
        pair = diagonal_zn_table(n, budget=n).witness
        witness = PairWitness(lift_constant(pair.a, m), lift_constant(pair.b, m))
    return DiagonalReport(n, False, Method.THEOREM, m=m, witness=witness)


def unit_candidate_count(n: int, m: int, d: int) -> int:
    ring = make_ring(n)
    slots = len(monomials_up_to(m, d))
    return len(ring.units) * len(ring.nilpotents) ** (slots - 1)


def enumerate_units(
    n: int, m: int, degree_bound: int, budget: int | None = None, exhaustive: bool = False
) -> Iterator[Polynomial]:
    """Every unit of total degree <= ``degree_bound``, in enumeration order.

    The default walks only coefficient vectors whose constant entry is a unit
    and whose other entries are nilpotent; this yields exactly the units that
    a filter over ``enumerate_polynomials`` would, in the same order, while
    visiting far fewer vectors.  ``exhaustive=True`` does the full filter.
    """
    ring = make_ring(n)
    if budget is None:
        budget = enumeration_budget()
    if exhaustive:
        return (f for f in enumerate_polynomials(ring, m, degree_bound, budget) if is_unit_poly(f))
    count = unit_candidate_count(n, m, degree_bound)
    if count > budget:
        raise BudgetExceededError(count, budget, what="unit candidates")
    return _walk_units(ring, m, degree_bound)


def _walk_units(ring, m, d):
    monos = monomials_up_to(m, d)[::-1]
    choices = [ring.units if sum(mono) == 0 else ring.nilpotents for mono in monos]
    for coeffs in itertools.product(*choices):
        f = Polynomial._raw(ring, m, {mono: c for mono, c in zip(monos, coeffs) if c})
        if not is_unit_poly(f):
            raise AssertionError(f"candidate {f} is not a unit")
        yield f


def diagonal_poly_enumerate(
    n: int, m: int, degree_bound: int, budget: int | None = None, exhaustive: bool = False
) -> DiagonalReport:
    """Square every unit of Z_n[x1..xm] up to ``degree_bound``; stop at the first failure."""
    if n < 1 or m < 1 or degree_bound < 0:
        raise ValueError("need n >= 1, m >= 1 and degree_bound >= 0")
    space = search_space_size(n, m, degree_bound)
    checked = 0
    for u in enumerate_units(n, m, degree_bound, budget, exhaustive):
        checked += 1
        if not is_involution(u):
            note = (
                f"counterexample is unit number {checked} in enumeration order "
                f"(total degree <= {degree_bound}, {space} polynomials in range)"
            )
            return DiagonalReport(
                n, False, Method.ENUMERATION, m=m, degree_bound=degree_bound,
                witness=UnitWitness(u), search_bound_note=note,
            )
    note = (
        f"no counterexample up to total degree {degree_bound}: all {checked} units "
        f"among {space} polynomials square to 1; higher degrees not searched"
    )
    return DiagonalReport(
        n, True, Method.ENUMERATION, m=m, degree_bound=degree_bound, search_bound_note=note
    )


def structured_unit(h: Polynomial, r: int) -> Polynomial:
    """``radical * h + r``: the shape 2h + r over Z_4 and 6h + r over Z_12, with r a unit."""
    ring = h.ring
    if ring.n not in (4, 12):
        raise ValueError(f"structured units are defined for n = 4 or 12, not {ring.n}")
    if r % ring.n not in ring.units:
        raise ValueError(f"{r} is not a unit mod {ring.n}")
    return h.scale(ring.radical) + Polynomial.constant(ring, h.m, r)


def random_polynomial(rng: random.Random, n: int, m: int, degree_bound: int) -> Polynomial:
    """Uniform over all polynomials of total degree <= ``degree_bound``."""
    ring = make_ring(n)
    terms = {mono: rng.randrange(n) for mono in monomials_up_to(m, degree_bound)}
    return Polynomial(ring, m, terms)


def structured_unit_generator(n: int, m: int, degree_bound: int, seed=None) -> Iterator[Polynomial]:
    """Endless stream of units ``radical * h + r`` with h uniform and r a uniform unit."""
    ring = make_ring(n)
    if n not in (4, 12):
        raise ValueError(f"structured units are defined for n = 4 or 12, not {n}")
    rng = random.Random(seed)
    while True:
        h = random_polynomial(rng, n, m, degree_bound)
        yield structured_unit(h, rng.choice(ring.units))


def subring_restriction_check(n: int, m: int = 1, budget: int | None = None) -> bool:
    """A failure in Z_n lifts to constant polynomials failing in Z_n[x1..xm]."""
    report = diagonal_zn_table(n, budget)
    if report.verdict:
        return True
    a = lift_constant(report.witness.a, m)
    b = lift_constant(report.witness.b, m)
    return poly_mul(a, b) == Polynomial.one(a.ring, m) and a != b
