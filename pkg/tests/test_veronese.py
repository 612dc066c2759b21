from math import comb

import pytest

from veronese.parsing import parse_poly
from veronese.poisson import PoissonAlgebra
from veronese.poly import PolynomialRing
from veronese.veronese import (NotGraded, RelationInconsistent, VeroneseDerivation,
                               build_generators, check_relations, restrict)

R2 = PolynomialRing(2)


def P(text, ctx=R2):
    return parse_poly(text, ctx)


def gen_map(gens, table):
    return {y: P(table[gens.name(y)], gens.context) for y in gens}


@pytest.mark.parametrize("n,d", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_generator_count(n, d):
    gens = build_generators(PolynomialRing(n), d)
    assert len(gens) == comb(n + d - 1, d)


def test_generator_listing():
    assert [build_generators(R2, 2).name(y) for y in build_generators(R2, 2)] == [
        "x1^2", "x1*x2", "x2^2"]
    assert [build_generators(PolynomialRing(1), 3).name(y)
            for y in build_generators(PolynomialRing(1), 3)] == ["x1^3"]


def test_poisson_generators():
    A = PoissonAlgebra(2, 4)
    gens = build_generators(A, 2)
    names = {gens.name(y) for y in gens}
    assert {"x1^2", "x1*x2", "x2^2", "[x1,x2]", "x1*[x1,[x1,x2]]"} <= names
    assert "[x1,x2]^2" not in names and "x1^2*x2^2" not in names
    for y in gens:
        assert gens.weight(y) % 2 == 0
        # indecomposable: no proper factorization into two generators
        assert tuple(gens.factor(y)) == (y,)


def test_poisson_generators_need_bound():
    with pytest.raises(ValueError):
        build_generators(PoissonAlgebra(2, 1), 2)


def test_relations_consistent():
    gens = build_generators(R2, 2)
    D = VeroneseDerivation(gens, gen_map(gens, {"x1^2": "2*x1*x2", "x1*x2": "x2^2",
                                                "x2^2": "0"}))
    assert check_relations(D) == 1


def test_relations_inconsistent():
    gens = build_generators(R2, 2)
    D = VeroneseDerivation(gens, gen_map(gens, {"x1^2": "1", "x1*x2": "0", "x2^2": "0"}))
    with pytest.raises(RelationInconsistent) as info:
        check_relations(D)
    assert info.value.witness["lhs"] != info.value.witness["rhs"]


def test_restrict_derivation_example():
    D = restrict(R2, 2, {0: P("x2"), 1: P("0")})
    assert {D.gens.name(y): str(v.format()) for y, v in D.images.items()} == {
        "x1^2": "2*x1*x2", "x1*x2": "x2^2", "x2^2": "0"}


def test_restrict_identity():
    gens = build_generators(R2, 3)
    alpha = restrict(R2, 3, {0: P("x1"), 1: P("x2")}, "automorphism")
    assert all(alpha.images[y] == gens.poly(y) for y in gens)


def test_restrict_rejects_ungraded():
    with pytest.raises(NotGraded):
        restrict(R2, 2, {0: P("x1^2"), 1: P("x2")})


def test_restricted_maps_satisfy_relations():
    R3 = PolynomialRing(3)
    D = restrict(R3, 2, {0: P("x2^3 + x3", R3), 1: P("x1", R3), 2: P("0", R3)})
    assert check_relations(D) > 0
