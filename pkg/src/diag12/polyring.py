"""Sparse multivariate polynomials over Z_n.

A polynomial is a map from exponent vectors (tuples of length ``m``) to
nonzero residues.  Terms are ordered by graded lexicographic order: total
degree first, then the exponent vector compared lexicographically, so that
``x1 > x2 > ... > xm`` and higher degree always sorts higher.

The text form is ``4*x1^2 + 4*x1 + 1 (mod 8)``: terms in descending order,
coefficients as least nonnegative residues, a coefficient of 1 omitted in
front of a non-constant monomial.
"""
from __future__ import annotations

import itertools
import os
import re
from math import comb
from typing import Iterator, Mapping

from .modring import Residue, RingSpec, make_ring

Monomial = tuple[int, ...]

NEG_INFINITY = float("-inf")

DEFAULT_BUDGET = 10**7
BUDGET_ENV_VAR = "DIAG12_BUDGET"


class ArityMismatchError(ValueError):
    pass


class PolynomialParseError(ValueError):
    pass


class BudgetExceededError(ValueError):
    def __init__(self, count: int, budget: int, what: str = "polynomials"):
        self.count = count
        self.budget = budget
        super().__init__(f"search space of {count} {what} exceeds budget {budget}")


def enumeration_budget() -> int:
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {value!r}") from None
    if budget < 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be nonnegative, got {budget}")
    return budget


def grlex_key(mono: Monomial) -> tuple:
    return (sum(mono), mono)


def monomials_up_to(m: int, d: int) -> list[Monomial]:
    """All monomials in m variables of total degree <= d, ascending grlex."""
    monos = []
    for deg in range(d + 1):
        for c in itertools.combinations_with_replacement(range(m), deg):
            e = [0] * m
            for i in c:
                e[i] += 1
            monos.append(tuple(e))
    monos.sort(key=grlex_key)
    return monos


def _add_exponents(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


class Polynomial:
    """An element of Z_n[x1, ..., xm] in canonical sparse form.

    Values are immutable; every operation returns a fresh polynomial.
    """

    __slots__ = ("ring", "m", "_terms", "_hash")

    def __init__(self, ring: RingSpec | int, m: int, terms: Mapping[Monomial, int] | None = None):
        if isinstance(ring, int):
            ring = make_ring(ring)
        if m < 0:
            raise ValueError(f"variable count must be nonnegative, got {m}")
        n = ring.n
        canon: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != m or any(e < 0 for e in mono):
                raise ArityMismatchError(f"bad exponent vector {mono} for {m} variables")
            c = (canon.get(mono, 0) + int(c)) % n
            if c:
                canon[mono] = c
            else:
                canon.pop(mono, None)
        self._init(ring, m, canon)

    def _init(self, ring, m, terms):
        self.ring = ring
        self.m = m
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, m: int, terms: dict[Monomial, int]) -> Polynomial:
        # caller guarantees terms are already canonical
        p = cls.__new__(cls)
        p._init(ring, m, terms)
        return p

    @classmethod
    def zero(cls, ring, m):
        return cls(ring, m)

    @classmethod
    def one(cls, ring, m):
        return cls.constant(ring, m, 1)

    @classmethod
    def constant(cls, ring, m, c):
        return cls(ring, m, {(0,) * m: int(c)})

    @classmethod
    def variable(cls, ring, m, i):
        """The variable x_i, with i counted from 1."""
        if not 1 <= i <= m:
            raise ValueError(f"variable index {i} out of range 1..{m}")
        e = [0] * m
        e[i - 1] = 1
        return cls(ring, m, {tuple(e): 1})

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, mono: Monomial) -> Residue:
        return Residue(self._terms.get(tuple(mono), 0), self.ring)

    @property
    def constant_coefficient(self) -> int:
        return self._terms.get((0,) * self.m, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        zero = (0,) * self.m
        return all(mono == zero for mono in self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.n == other.ring.n and self.m == other.m and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(self.ring, self.m, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.n, self.m, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: Polynomial):
        if other.ring.n != self.ring.n:
            raise ArityMismatchError(f"ring mismatch: Z_{self.ring.n} vs Z_{other.ring.n}")
        if other.m != self.m:
            raise ArityMismatchError(f"variable count mismatch: {self.m} vs {other.m}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Residue)):
            return Polynomial.constant(self.ring, self.m, int(other))
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return poly_sub(self, other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return poly_sub(other, self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Residue)):
            return self.scale(int(other))
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def scale(self, c: int) -> Polynomial:
        n = self.ring.n
        c %= n
        out = {}
        for mono, a in self._terms.items():
            v = a * c % n
            if v:
                out[mono] = v
        return Polynomial._raw(self.ring, self.m, out)

    def map_coefficients(self, ring: RingSpec) -> Polynomial:
        """Reduce every coefficient into ``ring`` (whose modulus must divide n)."""
        return Polynomial(ring, self.m, self._terms)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r}, m={self.m})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    n = f.ring.n
    out = dict(f._terms)
    for mono, c in g._terms.items():
        v = (out.get(mono, 0) + c) % n
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return Polynomial._raw(f.ring, f.m, out)


def poly_neg(f: Polynomial) -> Polynomial:
    n = f.ring.n
    return Polynomial._raw(f.ring, f.m, {mono: n - c for mono, c in f._terms.items()})


def poly_sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_add(f, poly_neg(g))


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    n = f.ring.n
    acc: dict[Monomial, int] = {}
    get = acc.get
    for ma, ca in f._terms.items():
        for mb, cb in g._terms.items():
            mono = _add_exponents(ma, mb)
            acc[mono] = get(mono, 0) + ca * cb
    out = {}
    for mono, c in acc.items():
        c %= n
        if c:
            out[mono] = c
    return Polynomial._raw(f.ring, f.m, out)


def poly_pow(f: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("negative exponent; use units.invert_unit")
    result = Polynomial.one(f.ring, f.m)
    base = f
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def total_degree(f: Polynomial) -> int | float:
    """Largest total degree of a stored term; ``NEG_INFINITY`` for the zero polynomial."""
    if f.is_zero():
        return NEG_INFINITY
    return max(sum(mono) for mono in f._terms)


def search_space_size(n: int, m: int, d: int) -> int:
    return n ** comb(m + d, d)


def enumerate_polynomials(
    ring: RingSpec | int, m: int, max_total_degree: int, budget: int | None = None
) -> Iterator[Polynomial]:
    """Yield every polynomial of total degree <= ``max_total_degree`` exactly once.

    Coefficient vectors are listed against the monomials in descending grlex
    order (the display order) and the vectors themselves run lexicographically,
    so the stream starts ``0, 1, 2, ...`` and the leading monomial varies slowest.
    Raises BudgetExceededError before yielding anything if the count
    ``n ** C(m + d, d)`` exceeds the budget.
    """
    if isinstance(ring, int):
        ring = make_ring(ring)
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be nonnegative")
    if budget is None:
        budget = enumeration_budget()
    count = search_space_size(ring.n, m, max_total_degree)
    if count > budget:
        raise BudgetExceededError(count, budget)
    return _enumerate(ring, m, max_total_degree)


def _enumerate(ring, m, d):
    monos = monomials_up_to(m, d)[::-1]
    for coeffs in itertools.product(range(ring.n), repeat=len(monos)):
        yield Polynomial._raw(ring, m, {mono: c for mono, c in zip(monos, coeffs) if c})


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(f: Polynomial, with_modulus: bool = True) -> str:
    pieces = []
    for mono, c in f.sorted_terms():
        m_str = format_monomial(mono)
        if not m_str:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(m_str)
        else:
            pieces.append(f"{c}*{m_str}")
    body = " + ".join(pieces) if pieces else "0"
    return f"{body} (mod {f.ring.n})" if with_modulus else body


_MOD_SUFFIX = re.compile(r"\(\s*mod\s+(\d+)\s*\)\s*$")
_FACTOR = re.compile(r"^(?:(\d+)|x(\d+)(?:\^(\d+))?)$")


def parse_polynomial(text: str, n: int | RingSpec | None = None, m: int | None = None) -> Polynomial:
    """Parse the canonical text form (whitespace optional, ``(mod n)`` optional).

    ``m`` defaults to the largest variable index that appears (at least 1).
    A ``(mod n)`` suffix must agree with ``n`` when both are given.
    """
    if isinstance(n, RingSpec):
        n = n.n
    text = text.strip()
    suffix = _MOD_SUFFIX.search(text)
    if suffix:
        stated = int(suffix.group(1))
        if n is not None and stated != n:
            raise PolynomialParseError(f"text says mod {stated} but modulus {n} was given")
        n = stated
        text = text[: suffix.start()].strip()
    if n is None:
        raise PolynomialParseError("no modulus given")
    if not text:
        raise PolynomialParseError("empty polynomial")
    raw_terms = []
    max_var = 0
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise PolynomialParseError(f"empty term in {text!r}")
        coeff = 1
        exps: dict[int, int] = {}
        for factor in term.split("*"):
            factor = factor.strip()
            match = _FACTOR.match(factor)
            if not match:
                raise PolynomialParseError(f"cannot parse factor {factor!r}")
            if match.group(1) is not None:
                coeff *= int(match.group(1))
            else:
                i = int(match.group(2))
                if i < 1:
                    raise PolynomialParseError("variables are numbered from x1")
                e = int(match.group(3)) if match.group(3) is not None else 1
                exps[i] = exps.get(i, 0) + e
                max_var = max(max_var, i)
        raw_terms.append((coeff, exps))
    if m is None:
        m = max(max_var, 1)
    elif max_var > m:
        raise PolynomialParseError(f"variable x{max_var} used but only {m} variables declared")
    terms: dict[Monomial, int] = {}
    for coeff, exps in raw_terms:
        mono = tuple(exps.get(i, 0) for i in range(1, m + 1))
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(make_ring(n), m, terms)

