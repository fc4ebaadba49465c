import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diag12.modring import is_unit_residue, make_ring
from diag12.polyring import Polynomial, enumerate_polynomials, parse_polynomial, poly_add, poly_mul, poly_pow, total_degree
from diag12.units import (
    NonUnitConstantError,
    NotNilpotentError,
    UnitCertificate,
    constant_term_hom,
    invert_unit,
    is_involution,
    is_unit_poly,
    nilpotency_index,
    nilpotent_part,
    reduce_mod_prime,
)
from conftest import nilpotent_polynomials, polynomials
from oracles import backtracking_inverse_search, flat_inverse_search

NON_REDUCED = [4, 8, 9, 12, 18, 24, 27]
MODULI = [2, 3, 4, 6, 8, 12, 24]


def P(text, n, m=None):
    return parse_polynomial(text, n, m)


@pytest.mark.parametrize(
    "text, n, expected",
    [("1 + 2*x1", 8, True), ("1 + 3*x1", 8, False), ("5", 12, True), ("6 + 6*x1", 12, False), ("0", 1, True)],
)
def test_is_unit_poly_examples(text, n, expected):
    assert is_unit_poly(P(text, n)) is expected


def test_non_unit_example_has_no_inverse():
    assert backtracking_inverse_search({(0,): 1, (1,): 3}, 1, 8, 6) is None


def test_nilpotent_part():
    assert nilpotent_part(P("1 + 2*x1", 8)) == P("2*x1", 8)
    assert nilpotent_part(P("7", 12)).is_zero()
    assert nilpotent_part(P("5 + 6*x1 + 6*x2^2", 12)) == P("6*x1 + 6*x2^2", 12)


@pytest.mark.parametrize("text, n, k", [("2*x1", 8, 2), ("0", 8, 0), ("6*x1", 12, 1), ("6*x1 + 12*x2", 24, 2), ("4*x1", 8, 1)])
def test_nilpotency_index(text, n, k):
    g = P(text, n, 2)
    assert nilpotency_index(g) == k
    if k:
        assert not poly_pow(g, k).is_zero()
    assert poly_pow(g, k + 1).is_zero()


def test_nilpotency_index_rejects_non_nilpotent():
    with pytest.raises(NotNilpotentError) as info:
        nilpotency_index(P("2*x1^2 + 3*x1", 8))
    assert info.value.coefficient == 3
    assert "coefficient 3 of x1" in str(info.value)


@pytest.mark.parametrize(
    "text, n, inverse, k",
    [
        ("1 + 2*x1", 8, "4*x1^2 + 6*x1 + 1", 2),
        ("5", 12, "5", 0),
        ("1 + 6*x1", 24, "12*x1^2 + 18*x1 + 1", 2),
    ],
)
def test_invert_unit_examples(text, n, inverse, k):
    cert = invert_unit(P(text, n))
    assert cert.inverse == P(inverse, n)
    assert cert.nilpotency_index_used == k
    oracle = backtracking_inverse_search(P(text, n).terms, 1, n, 6)
    assert P(inverse, n).terms == oracle


def test_invert_unit_errors_name_the_failed_condition():
    with pytest.raises(NonUnitConstantError, match="constant term 2 is not a unit mod 8"):
        invert_unit(P("2 + 2*x1", 8))
    with pytest.raises(NotNilpotentError, match="coefficient 3 of x1 is not nilpotent mod 8"):
        invert_unit(P("3*x1 + 1", 8))


def test_certificate_refuses_a_wrong_inverse():
    f = P("1 + 2*x1", 8)
    with pytest.raises(ValueError):
        UnitCertificate(f, P("1 + 6*x1", 8), 1)


def test_zero_ring_conventions():
    f = Polynomial.zero(1, 3)
    assert is_unit_poly(f) and is_involution(f)
    cert = invert_unit(f)
    assert cert.inverse.is_zero() and cert.nilpotency_index_used == 0


@pytest.mark.parametrize(
    "text, n, m, expected",
    [
        ("1 + 2*x1", 8, 1, False),
        ("2*x1*x2 + 1", 4, 2, True),
        ("2*x1*x2 + 3", 4, 2, True),
        ("6*x1 + 5", 12, 1, True),
        ("1 + 6*x1", 24, 1, False),
        ("7", 24, 1, True),
    ],
)
def test_is_involution(text, n, m, expected):
    assert is_involution(P(text, n, m)) is expected


def test_constant_term_hom_examples():
    assert constant_term_hom(P("4*x1^2 + 4*x1 + 1", 8)).value == 1
    assert constant_term_hom(Polynomial.zero(8, 2)).value == 0


def test_reduce_mod_prime_examples():
    assert reduce_mod_prime(P("1 + 2*x1", 8), 2) == Polynomial.one(2, 1)
    assert reduce_mod_prime(P("1 + 6*x1 + 4*x2", 12), 3) == P("1 + x2", 3, 2)
    with pytest.raises(ValueError, match="not prime"):
        reduce_mod_prime(P("x1", 12), 4)
    with pytest.raises(ValueError, match="does not divide"):
        reduce_mod_prime(P("x1", 12), 5)


@given(st.sampled_from([4, 8, 12, 24, 18, 30]), st.integers(1, 3), st.data())
def test_homomorphism_laws(n, m, data):
    f = data.draw(polynomials(n, m))
    g = data.draw(polynomials(n, m))
    one, zero = Polynomial.one(n, m), Polynomial.zero(n, m)
    hom = constant_term_hom
    assert hom(poly_add(f, g)) == hom(f) + hom(g)
    assert hom(poly_mul(f, g)) == hom(f) * hom(g)
    assert hom(one).value == 1 % n and hom(zero).value == 0
    for p in make_ring(n).primes:
        red = lambda h: reduce_mod_prime(h, p)
        assert red(poly_add(f, g)) == poly_add(red(f), red(g))
        assert red(poly_mul(f, g)) == poly_mul(red(f), red(g))
        assert red(one) == Polynomial.one(p, m) and red(zero).is_zero()


@given(st.sampled_from(NON_REDUCED + [6, 10, 30]), st.integers(1, 3), st.data())
def test_unit_plus_nilpotent_is_unit_and_maps_to_units(n, m, data):
    ring = make_ring(n)
    u = Polynomial.constant(ring, m, data.draw(st.sampled_from(ring.units)))
    r = data.draw(nilpotent_polynomials(n, m))
    f = poly_add(u, r)
    assert is_unit_poly(f)
    cert = invert_unit(f)
    assert poly_mul(f, cert.inverse) == Polynomial.one(ring, m)
    assert is_unit_residue(constant_term_hom(f))
    for p in ring.primes:
        image = reduce_mod_prime(f, p)
        assert is_unit_poly(image)
        assert total_degree(image) <= 0


@given(st.sampled_from(NON_REDUCED), st.integers(1, 3), st.data())
def test_nilpotency_bound(n, m, data):
    ring = make_ring(n)
    g = data.draw(nilpotent_polynomials(n, m))
    assert poly_pow(g, ring.max_exponent).is_zero()
    assert nilpotency_index(g) < ring.max_exponent


def test_search_oracles_agree_on_small_rings():
    # the backtracking search is checked against plain exhaustion where that is cheap
    for n in (2, 3, 4, 6):
        d = 2 * (make_ring(n).max_exponent - 1) + 2
        for f in enumerate_polynomials(n, 1, 1):
            flat = flat_inverse_search(f.terms, 1, n, d)
            back = backtracking_inverse_search(f.terms, 1, n, d)
            assert (flat is None) == (back is None), (f, flat, back)
            if back is not None:
                assert poly_mul(f, Polynomial(n, 1, back)) == Polynomial.one(n, 1)


def test_unit_recognition_two_variables_against_oracle():
    for n in (4, 8):
        d = 2 * (make_ring(n).max_exponent - 1) + 1
        for f in enumerate_polynomials(n, 2, 1):
            found = backtracking_inverse_search(f.terms, 2, n, d)
            assert is_unit_poly(f) == (found is not None), f


@pytest.mark.parametrize("n", MODULI)
def test_every_unit_inverts_and_matches_oracle(n):
    d = 2 * (make_ring(n).max_exponent - 1) + 2
    for coeffs in itertools.product(range(n), repeat=2):
        f = Polynomial(n, 1, {(0,): coeffs[0], (1,): coeffs[1]})
        found = backtracking_inverse_search(f.terms, 1, n, d)
        if is_unit_poly(f):
            assert invert_unit(f).inverse.terms == found
        else:
            assert found is None
