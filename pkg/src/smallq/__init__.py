"""Exact computations for small quantum groups at roots of unity:
numerology, shuffle-form graded bases, weight modules, ribbon scalars,
and scalar braid monodromy of coloured configuration spaces."""

from .cyclo import (FieldCtx, CycloElem, CycloMatrix, CycloZeroDivision,
                    cyclotomic_polynomial, zeta_rational_power,
                    rank_nullspace, pivot_columns, solve, inverse)
from .cartan import (CartanError, CartanDatum, CartanContext, Weight,
                     weight, validate_cartan, build_context)
from .shuffle import (coproduct_r, shuffle_form, gram_radical,
                      u_minus_basis, multiset_permutations, word_weight)
from .repcat import (WeightModule, verma, simple, tensor, dual,
                     contravariant_gram, trivial_isotypic,
                     conformal_block_dim, lusztig_view, check_relation_a,
                     check_radical_relations, irreducible_certificate)
from .ribbon import (braiding_scalar, braiding_exponent, balance_scalar,
                     balance_exponent, central_charge,
                     central_charge_exponent, strange_formula_check,
                     wzw_compare)
from .braidmono import (ColouredConfig, GroupoidPresentation, MonodromyRep,
                        standard_monodromy, verify_relations,
                        two_point_monodromy, fusion_degeneration_check,
                        factorization_check, tangent_loop_scalar,
                        descent_check, admissible)

__version__ = "0.1.0"
