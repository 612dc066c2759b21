import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from veronese.parsing import parse_expression
from veronese.poisson import (DegreeOverflow, PoissonAlgebra, PoissonDerivation,
                              PoissonElement, PoissonFraction, extend_derivation_to_fractions,
                              fraction_bracket, grade_poisson, is_d_homogeneous,
                              poisson_bracket, polynomial_length, weighted_degree)
from veronese.sampling import random_poisson_poly

A = PoissonAlgebra(2, 6)


def el(text, algebra=A):
    return parse_expression(text, algebra)


def test_bracket_of_letters():
    assert poisson_bracket(el("x1"), el("x2")) == el("[x1,x2]")
    assert poisson_bracket(el("x2"), el("x1")) == -el("[x1,x2]")


def test_leibniz_example():
    assert poisson_bracket(el("x1"), el("x1*x2")) == el("x1*[x1,x2]")


@pytest.mark.parametrize("d", [2, 3])
def test_bracket_of_powers(d):
    xi, xj = el("x1"), el("x2")
    got = poisson_bracket(xi ** d, xj ** d)
    assert got == (xi ** (d - 1)) * (xj ** (d - 1)) * poisson_bracket(xi, xj) * (d * d)


def test_degrees():
    f = el("x1*[x1,x2]")
    assert weighted_degree(f) == 3
    assert polynomial_length(f) == 2
    assert is_d_homogeneous(el("x1*x2 + [x1,x2]"), 2, 0)
    with pytest.raises(ValueError):
        weighted_degree(el("0"))


def test_grade_examples():
    parts = grade_poisson(el("x1 + x1*x2"), 2)
    assert parts == [el("x1*x2"), el("x1")]
    assert grade_poisson(el("[x1,x2]"), 2)[0] == el("[x1,x2]")


def test_degree_overflow():
    small = PoissonAlgebra(2, 2)
    with pytest.raises(DegreeOverflow):
        poisson_bracket(el("x1", small), el("[x1,x2]", small))


def test_fraction_bracket_example():
    x1, x2 = el("x1"), el("x2")
    q = fraction_bracket(PoissonFraction(x2, x1), PoissonFraction(x1))
    assert q == PoissonFraction(-el("[x1,x2]"), x1)
    # Leibniz on x2 = (x2/x1) * x1 recovers {x2, x1}
    lhs = fraction_bracket(PoissonFraction(x2), PoissonFraction(x1))
    rhs = q * PoissonFraction(x1)
    assert lhs == rhs


def test_fraction_bracket_trivial_cases():
    a, c = el("x1*x2"), el("x2^2 + x1")
    assert fraction_bracket(PoissonFraction(a), PoissonFraction(c)) == PoissonFraction(
        poisson_bracket(a, c))
    f = PoissonFraction(a, c)
    assert fraction_bracket(f, f).is_zero()


def test_fraction_reduction():
    f = PoissonFraction(el("x1^2*x2"), el("2*x1*x2"))
    assert f.num == el("1/2*x1") and f.den == el("1")


def test_derivation_extension_examples():
    D = PoissonDerivation.from_generators(A, {0: el("x2").poly, 1: el("0").poly})
    S = extend_derivation_to_fractions(D)
    a = el("x1^2")
    assert S(PoissonFraction(a)) == PoissonFraction(D(a))
    b = el("x1 + x2")
    assert S(PoissonFraction(el("1"), b)) == PoissonFraction(-D(b), b * b)


seeds = st.integers(0, 10 ** 9)
A3 = PoissonAlgebra(3, 6)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_jacobi_leibniz(seed):
    rng = random.Random(seed)
    f, g, h = (PoissonElement(A3, random_poisson_poly(rng, A3, max_weight=2))
               for _ in range(3))
    assert not (f.bracket(g).bracket(h) + g.bracket(h).bracket(f) + h.bracket(f).bracket(g))
    assert f.bracket(g * h) == g * f.bracket(h) + f.bracket(g) * h
    assert f.bracket(g) == -g.bracket(f)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(2, 3))
def test_grading_closure(seed, d):
    rng = random.Random(seed)
    f = PoissonElement(A3, random_poisson_poly(rng, A3, max_weight=3))
    g = PoissonElement(A3, random_poisson_poly(rng, A3, max_weight=3))
    pf, pg = grade_poisson(f, d), grade_poisson(g, d)
    assert sum(pf, A3.const(0)) == f
    for i, a in enumerate(pf):
        for j, b in enumerate(pg):
            r = (i + j) % d
            assert is_d_homogeneous(a * b, d, r)
            assert is_d_homogeneous(a.bracket(b), d, r)
