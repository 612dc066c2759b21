import pytest
from hypothesis import given, strategies as st

from oracles import (commutator, express_in_basis, express_in_basis_dense, lyndon_brute,
                     lyndon_poly, necklace_count, oracle_lie_bracket)
from veronese.lie import (LieBasis, LieElement, bracketing, enumerate_basis, is_lyndon,
                          lie_bracket, lyndon_words, standard_factorization)


def test_small_listings():
    assert [str(e) for e in enumerate_basis(2, 2)] == ["x1", "x2", "[x1,x2]"]
    assert [str(e) for e in enumerate_basis(2, 3)][3:] == ["[x1,[x1,x2]]", "[[x1,x2],x2]"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_duval_matches_brute_force(n):
    words = list(lyndon_words(n, 6))
    for k in range(1, 7):
        assert sorted(w for w in words if len(w) == k) == lyndon_brute(n, k)


@pytest.mark.parametrize("n,k", [(2, 7), (3, 5), (4, 4)])
def test_dimensions(n, k):
    counts = [e.degree for e in enumerate_basis(n, k)]
    assert [counts.count(j) for j in range(1, k + 1)] == [necklace_count(n, j)
                                                          for j in range(1, k + 1)]


def test_standard_factorization():
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
    assert bracketing((1, 1, 2, 1, 2)) == "[x1,[[x1,x2],[x1,x2]]]" or is_lyndon((1, 1, 2, 1, 2))


def test_basis_position():
    B = LieBasis(2, 3)
    assert B.position((1, 2)) == 2
    assert B.position((1, 1, 1, 2)) is None


def test_bracket_examples():
    e12 = LieElement.basis(2, (1, 2))
    x1 = LieElement.gen(2, 1)
    assert lie_bracket(e12, x1) == LieElement(2, {(1, 1, 2): -1})
    got = lie_bracket(e12, LieElement.basis(2, (1, 1, 2)))
    assert got.terms == oracle_lie_bracket((1, 2), (1, 1, 2), 2)


def test_rejects_non_lyndon():
    with pytest.raises(ValueError):
        LieElement(2, {(2, 1): 1})


basis3 = [e.word for e in enumerate_basis(3, 3)]
elements = st.dictionaries(st.sampled_from(basis3), st.integers(-3, 3), max_size=3).map(
    lambda t: LieElement(3, t))


@given(elements, elements, elements)
def test_lie_axioms(a, b, c):
    assert lie_bracket(a, b) == -lie_bracket(b, a)
    assert lie_bracket(a, a) == 0
    assert not (lie_bracket(lie_bracket(a, b), c) + lie_bracket(lie_bracket(b, c), a)
                + lie_bracket(lie_bracket(c, a), b))
    assert lie_bracket(a + b, c) == lie_bracket(a, c) + lie_bracket(b, c)


@given(elements, elements)
def test_bracket_is_graded(a, b):
    br = lie_bracket(a, b)
    assert br.degrees() <= {i + j for i in a.degrees() for j in b.degrees()}


def test_triangular_oracle_matches_dense_solve():
    words = [w for k in (1, 2) for w in lyndon_brute(3, k)]
    for u in words:
        for v in words:
            target = commutator(lyndon_poly(u), lyndon_poly(v))
            k = len(u) + len(v)
            assert express_in_basis(target, 3, k) == express_in_basis_dense(target, 3, k)
