from fractions import Fraction

import pytest

from veronese.lift import (KernelError, check_locally_nilpotent, kernel_scalar,
                           lift_automorphism, lift_derivation, verify_quotient_kernel)
from veronese.parsing import parse_map_file, parse_poly
from veronese.poisson import DegreeOverflow, PoissonAlgebra, PoissonDerivation, PoissonMorphism
from veronese.poly import PolynomialRing
from veronese.veronese import (VeroneseAutomorphism, VeroneseDerivation, build_generators,
                               restrict)

R2 = PolynomialRing(2)


def P(text, ctx=R2):
    return parse_poly(text, ctx)


def by_name(gens, table, cls, inverse=None):
    imgs = {y: P(table[gens.name(y)], gens.context) for y in gens}
    if cls is VeroneseAutomorphism:
        inv = None if inverse is None else {y: P(inverse[gens.name(y)], gens.context)
                                            for y in gens}
        return cls(gens, imgs, inv)
    return cls(gens, imgs)


G2 = build_generators(R2, 2)


def test_lift_euler():
    D = by_name(G2, {"x1^2": "2*x1^2", "x1*x2": "2*x1*x2", "x2^2": "2*x2^2"},
                VeroneseDerivation)
    out = lift_derivation(D)
    assert out.lifted and out.images == {0: P("x1"), 1: P("x2")}


def test_lift_derivation_example():
    D = by_name(G2, {"x1^2": "2*x1*x2", "x1*x2": "x2^2", "x2^2": "0"}, VeroneseDerivation)
    out = lift_derivation(D)
    assert out.images == {0: P("x2"), 1: P("0")}
    assert out.checks["generators_reproduced"] == 3


@pytest.mark.parametrize("d", [2, 3, 4])
def test_single_variable_derivation_not_divisible(d):
    R1 = PolynomialRing(1)
    gens = build_generators(R1, d)
    D = VeroneseDerivation(gens, {next(iter(gens)): P("1", R1)})
    out = lift_derivation(D)
    assert out.reason == "NotDivisible"
    assert out.witness["remainder"] == "1"


def test_inconsistent_derivation():
    D = by_name(G2, {"x1^2": "1", "x1*x2": "0", "x2^2": "0"}, VeroneseDerivation)
    assert lift_derivation(D).reason == "RelationInconsistent"


def test_poisson_derivation_lift():
    # images raise the degree by 2, so the table reaches weight 8 while the
    # generators stop at weight 6
    A = PoissonAlgebra(2, 8)
    S = {0: P("x2", A), 1: P("x1*x2^2 + [x1,x2]*x2 + x2", A)}
    D = restrict(A, 2, S, max_weight=6)
    out = lift_derivation(D)
    assert out.lifted
    full = PoissonDerivation.from_generators(A, S)
    e12 = A.position((1, 2))
    assert out.images[e12] == full.on_basis(e12)
    assert out.checks["bracket_pairs_checked"] > 0
    assert all(A.weights[j] <= 6 for j in out.images)


def test_degree_raising_map_needs_room():
    A = PoissonAlgebra(2, 6)
    S = {0: P("x2", A), 1: P("[x1,x2]*x2", A)}
    with pytest.raises(DegreeOverflow):
        restrict(A, 2, S)


def test_lnd_examples():
    rep = check_locally_nilpotent(R2, {0: P("x2"), 1: P("0")})
    assert rep.nilpotent and rep.indices == {0: 2, 1: 1}
    rep = check_locally_nilpotent(R2, {0: P("x1"), 1: P("x2")})
    assert rep.verdict == "not_nilpotent" and rep.witness["variable"] == "x1"


def test_lnd_cap_exceeded():
    R3 = PolynomialRing(3)
    S = {0: P("x2^7", R3), 1: P("x3^7", R3), 2: P("1", R3)}
    rep = check_locally_nilpotent(R3, S, cap=4)
    assert rep.verdict == "cap_exceeded"
    assert check_locally_nilpotent(R3, S, cap=64).nilpotent


def test_lift_shear_example():
    alpha = by_name(G2, {"x1^2": "x1^2", "x1*x2": "x1*x2 + x1^2",
                         "x2^2": "x2^2 + 2*x1*x2 + x1^2"}, VeroneseAutomorphism)
    out = lift_automorphism(alpha)
    assert out.lifted
    beta = {0: P("x1"), 1: P("x2 + x1")}
    assert kernel_scalar(out.images, beta) in (1, -1)
    assert out.normalization == {"v": 1, "mu": 1, "sign": 1}


def test_identity_lift():
    gens = build_generators(R2, 3)
    alpha = VeroneseAutomorphism(gens, {y: gens.poly(y) for y in gens})
    out = lift_automorphism(alpha)
    assert out.images == {0: P("x1"), 1: P("x2")}
    assert out.normalization["mu"] == 1


def test_scaling_has_no_rational_root():
    alpha = by_name(G2, {"x1^2": "2*x1^2", "x1*x2": "2*x1*x2", "x2^2": "2*x2^2"},
                    VeroneseAutomorphism)
    out = lift_automorphism(alpha)
    assert out.reason == "NoRationalDthRoot"
    assert out.witness["v"] == "2"


def test_scaling_by_square_lifts():
    alpha = by_name(G2, {"x1^2": "4*x1^2", "x1*x2": "4*x1*x2", "x2^2": "4*x2^2"},
                    VeroneseAutomorphism)
    out = lift_automorphism(alpha)
    assert out.images == {0: P("2*x1"), 1: P("2*x2")}
    assert out.normalization["v"] == 4


def test_single_variable_automorphism_rejected():
    mf = parse_map_file("context=poly n=1 d=2\ngen x1^2 -> x1^2 + 1\n")
    out = lift_automorphism(mf.automorphism())
    assert out.reason == "SingleVariable"
    assert "n >= 2" in out.witness["note"]


def test_non_injective():
    alpha = by_name(G2, {"x1^2": "x1^2", "x1*x2": "x1^2", "x2^2": "x1^2"},
                    VeroneseAutomorphism)
    assert lift_automorphism(alpha).reason in ("NotInjectiveOnGenerators",
                                               "RelationInconsistent")


def test_unit_not_constant():
    # multiplicatively consistent but a^2 = x1^2 x2^2 is not a square of a unit times f1^2
    R3 = PolynomialRing(2)
    alpha = by_name(G2, {"x1^2": "x1^2*x2^2", "x1*x2": "x1*x2^3", "x2^2": "x2^4"},
                    VeroneseAutomorphism)
    out = lift_automorphism(alpha)
    assert not out.lifted


def test_kernel_examples():
    fwd = restrict(R2, 2, {0: P("x1"), 1: P("x1 + x2")}, "automorphism")
    fwd.inverse = restrict(R2, 2, {0: P("x1"), 1: P("x2 - x1")}, "automorphism").images
    assert verify_quotient_kernel(fwd) == 1
    assert verify_quotient_kernel(fwd, flip=True) == -1


def test_kernel_of_rotation_is_minus_one_by_default():
    # (x1, x2) -> (-x2, x1) restricts to an involution of A_0, so every lift
    # beta has beta o beta = -id: no sign rule makes the default lambda 1
    rot = restrict(R2, 2, {0: P("-x2"), 1: P("x1")}, "automorphism")
    rot.inverse = rot.images
    assert verify_quotient_kernel(rot) == -1
    assert verify_quotient_kernel(rot, flip=True) == 1


def test_kernel_requires_inverse():
    gens = build_generators(R2, 2)
    alpha = VeroneseAutomorphism(gens, {y: gens.poly(y) for y in gens})
    with pytest.raises(ValueError):
        verify_quotient_kernel(alpha)


def test_sign_flip_rejected_for_odd_d():
    gens = build_generators(R2, 3)
    alpha = VeroneseAutomorphism(gens, {y: gens.poly(y) for y in gens})
    with pytest.raises(ValueError):
        lift_automorphism(alpha, sign=-1)


def test_poisson_automorphism_lift():
    A = PoissonAlgebra(2, 4)
    fwd = {0: P("x1 + x2", A), 1: P("x2", A)}
    inv = {0: P("x1 - x2", A), 1: P("x2", A)}
    alpha = restrict(A, 2, fwd, "automorphism")
    alpha.inverse = restrict(A, 2, inv, "automorphism").images
    out = lift_automorphism(alpha)
    assert out.lifted and out.checks["bracket_pairs_checked"] > 0
    full = PoissonMorphism(A, fwd)
    lam = kernel_scalar(out.images, {j: full.on_basis(j) for j in out.images}, A.weights)
    assert lam in (1, -1)
    assert verify_quotient_kernel(alpha) == 1
    assert verify_quotient_kernel(alpha, flip=True) == -1
