"""Brute-force oracles, written independently of the package's fast paths.

Polynomials are passed around here as plain dicts {exponent tuple: int}.
"""
import itertools

import sympy


def power_iteration_nilpotent(c, n):
    """Is some power c, c^2, ..., c^n zero mod n?"""
    x = c % n
    for _ in range(n):
        if x == 0:
            return True
        x = x * c % n
    return x == 0


def brute_inverse(c, n):
    """Every b in Z_n with c*b = 1, by scanning."""
    return [b for b in range(n) if (c * b - 1) % n == 0]


def brute_unit_group_exponent(n):
    units = [u for u in range(n) if brute_inverse(u, n)]
    e = 1
    while any((pow(u, e, n) - 1) % n for u in units):
        e += 1
    return e


def sympy_factorization(n):
    return sorted(sympy.factorint(n).items())


def sympy_mul(f_terms, g_terms, m, n):
    """Multiply over Z with sympy, then reduce mod n."""
    xs = sympy.symbols(f"x1:{m + 1}")

    def to_expr(terms):
        return sum(
            (c * sympy.prod([x**e for x, e in zip(xs, mono)]) for mono, c in terms.items()),
            sympy.Integer(0),
        )

    prod = sympy.Poly(sympy.expand(to_expr(f_terms) * to_expr(g_terms)), *xs)
    out = {}
    for mono, c in prod.terms():
        c = int(c) % n
        if c:
            out[tuple(mono)] = c
    return out


def _monomials(m, d):
    out = []
    for exps in itertools.product(range(d + 1), repeat=m):
        if sum(exps) <= d:
            out.append(exps)
    out.sort(key=lambda e: (sum(e), e))
    return out


def _dict_mul(f, g, n):
    out = {}
    for a, ca in f.items():
        for b, cb in g.items():
            mono = tuple(x + y for x, y in zip(a, b))
            out[mono] = (out.get(mono, 0) + ca * cb) % n
    return {k: v for k, v in out.items() if v}


def flat_inverse_search(f, m, n, d):
    """Try every g of total degree <= d; return the first with f*g = 1, else None."""
    monos = _monomials(m, d)
    one = {(0,) * m: 1} if n > 1 else {}
    for coeffs in itertools.product(range(n), repeat=len(monos)):
        g = {mono: c for mono, c in zip(monos, coeffs) if c}
        if _dict_mul(f, g, n) == one:
            return g
    return None


def backtracking_inverse_search(f, m, n, d):
    """Complete search for g with deg g <= d and f*g = 1.

    Coefficients of g are assigned in ascending grlex order.  The product's
    coefficient at a monomial mu only involves g at divisors of mu, all of
    which come no later than mu in that order, so the equation at mu can be
    tested the moment g[mu] is chosen; a branch is abandoned as soon as one
    equation fails.  No branch that could lead to an inverse is ever cut.
    """
    monos = _monomials(m, d)
    zero = (0,) * m
    f_items = list(f.items())

    def product_coeff(mu, g):
        total = 0
        for a, ca in f_items:
            nu = tuple(x - y for x, y in zip(mu, a))
            if min(nu, default=0) < 0:
                continue
            total += ca * g.get(nu, 0)
        return total % n

    def target(mu):
        return 1 % n if mu == zero else 0

    # monomials of f*g beyond the searched range, checked once g is complete
    deg_f = max((sum(a) for a in f), default=0)
    tail = [mu for mu in _monomials(m, d + deg_f) if sum(mu) > d]

    def search(i, g):
        if i == len(monos):
            if all(product_coeff(mu, g) == 0 for mu in tail):
                return dict(g)
            return None
        mu = monos[i]
        for c in range(n):
            g[mu] = c
            if product_coeff(mu, g) == target(mu):
                found = search(i + 1, g)
                if found is not None:
                    return {k: v for k, v in found.items() if v}
        del g[mu]
        return None

    return search(0, {})
