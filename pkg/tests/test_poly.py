from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import from_sympy, sympy_gcd_monic, to_sympy
from veronese.poly import (ArityError, NoRoot, NotDivisible, Polynomial, PolynomialRing,
                           divide_exact, dth_root, gcd, grade, rational_root, reduce_fraction,
                           substitute)

R = PolynomialRing(2)
x, y = R.gen(0), R.gen(1)
SYMS = sympy.symbols("a b c")


def polys(nvars=2, max_exp=3, max_terms=4):
    mono = st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars).map(
        lambda es: tuple((i, e) for i, e in enumerate(es) if e))
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(
        lambda t: Polynomial(nvars, t))


nonzero = polys().filter(bool)


def test_divide_exact_example():
    assert divide_exact(x ** 3 * y * 2, x ** 2 * 2) == x * y


def test_divide_exact_reports_remainder():
    with pytest.raises(NotDivisible) as info:
        divide_exact(x ** 2 + 1, x)
    assert info.value.remainder == Polynomial.one(2)


def test_gcd_example():
    g = gcd(x ** 2 * y + x * y ** 2, x * y)
    assert g == x * y
    divide_exact(x ** 2 * y + x * y ** 2, g)


def test_reduce_fraction_example():
    r = reduce_fraction(x * y, x ** 2)
    assert (r.num, r.den) == (y, x)


def test_grade_example():
    R1 = PolynomialRing(2)
    p = x ** 3 + x ** 2 * y + x * y
    parts = grade(p, 3)
    assert parts == [x ** 3 + x ** 2 * y, R1.zero(), x * y]


def test_dth_root_example():
    assert dth_root((x + y) ** 6, 3) == (x + y) ** 2
    with pytest.raises(NoRoot):
        dth_root(x ** 2 + 1, 2)


def test_rational_root():
    assert rational_root(Fraction(4, 9), 2) == Fraction(2, 3)
    assert rational_root(Fraction(-8), 3) == -2
    assert rational_root(Fraction(2), 2) is None
    assert rational_root(Fraction(-1), 2) is None


def test_arity_mismatch():
    with pytest.raises(ArityError):
        x + PolynomialRing(3).gen(0)


def test_format_and_degree():
    p = x ** 2 * 3 - y + Fraction(1, 2)
    assert p.format() == "3*x1^2 - x2 + 1/2"
    assert p.degree() == 2
    assert Polynomial.zero(2).degree() == float("-inf")


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    s = SYMS[:2]
    assert to_sympy(a * b, s) == sympy.expand(to_sympy(a, s) * to_sympy(b, s))


@given(polys(), nonzero)
def test_divide_exact_inverts_multiplication(a, b):
    assert divide_exact(a * b, b) == a


@settings(max_examples=60, deadline=None)
@given(nonzero, nonzero, polys(max_exp=2, max_terms=3).filter(bool))
def test_gcd_matches_sympy(a, b, c):
    p, q = a * c, b * c
    assert gcd(p, q) == sympy_gcd_monic(p, q, SYMS[:2], 2, Polynomial)


@settings(max_examples=40, deadline=None)
@given(polys(nvars=3, max_exp=2, max_terms=3).filter(bool),
       polys(nvars=3, max_exp=2, max_terms=3).filter(bool))
def test_gcd_three_variables(a, b):
    g = gcd(a * b, b * b)
    assert g == sympy_gcd_monic(a * b, b * b, SYMS, 3, Polynomial)


@given(polys(), st.integers(2, 4))
def test_grade_reconstructs(p, d):
    parts = grade(p, d)
    assert sum(parts, Polynomial.zero(2)) == p
    for r, q in enumerate(parts):
        assert all(sum(e for _, e in m) % d == r for m in q.terms)


@given(nonzero, st.integers(2, 3))
def test_dth_root_of_power(p, d):
    r = dth_root(p ** d, d)
    assert r ** d == p ** d


@settings(deadline=None)
@given(polys(), polys(), polys())
def test_substitute_is_a_homomorphism(a, b, c):
    imgs = [b, c]
    assert substitute(a * a, imgs) == substitute(a, imgs) ** 2


def test_sympy_conversion_roundtrip():
    p = x ** 2 * Fraction(3, 2) - y
    assert from_sympy(to_sympy(p, SYMS[:2]), SYMS[:2], 2, Polynomial) == p
