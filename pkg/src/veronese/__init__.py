"""Exact free Lie, free Poisson and polynomial algebras, their degree-d
Veronese subalgebras, and lifting of derivations and automorphisms."""
from .lie import LieBasis, LieElement, enumerate_basis, lie_bracket, lyndon_words
from .lift import (LiftOutcome, LndReport, check_locally_nilpotent, lift_automorphism,
                   lift_derivation, verify_quotient_kernel)
from .parsing import (ParseError, format_poly, make_context, parse_expression,
                      parse_map_file, parse_poly)
from .poisson import (DegreeOverflow, PoissonAlgebra, PoissonDerivation, PoissonElement,
                      PoissonFraction, extend_derivation_to_fractions, fraction_bracket,
                      grade_poisson, poisson_bracket)
from .poly import (NotDivisible, Polynomial, PolynomialRing, divide_exact, dth_root, gcd,
                   grade, reduce_fraction)
from .veronese import (RelationInconsistent, VeroneseAutomorphism, VeroneseDerivation,
                       build_generators, restrict)

__all__ = [name for name in dir() if not name.startswith("_")]
