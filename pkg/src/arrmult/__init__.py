"""Exact multiplier ideals, log canonical thresholds and jumping numbers of
complex hyperplane arrangements with rational equations."""

from .arrangement import (Arrangement, ArrangementError, Flat, Hyperplane, IntersectionLattice, NotCentral,
                          build_lattice, essentialize, family, localize, parse_arrangement)
from .ideal import (Budget, BudgetExceeded, Ideal, flat_power_ideal, groebner, ideal_contains, ideal_equal,
                    ideal_intersect, ideal_member, ideal_power, truncated_intersection, vanishing_order_along)
from .linalg import Subspace, adapted_basis, rref, subspace_contains, subspace_intersect
from .multiplier import (CrossCheckError, FlatPowerIdeal, JumpingReport, candidate_jumping_numbers,
                         codim3_criterion, expand, flat_exponent, generic_oracle, is_jumping_number,
                         jumping_numbers, lct, left_limit_ideal, multiplier_ideal, set_theoretic_jumping,
                         support)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, block_order, parse_polynomial

__version__ = "0.1.0"
