"""Exact computations around Hilbert schemes with bounded regularity."""

from .borel import (
    BorelIdeal,
    MonomialIdeal,
    MultiIndex,
    classify_multiindex,
    enumerate_borel,
    ideal_from_multiindex,
    minimal_generators,
    multiindex_of,
    regularity,
    saturate,
    truncation,
)
from .errors import DomainError, HilbRegError, SizeGuardExceeded
from .hilbert import (
    HilbertContext,
    IntegerPolynomial,
    binomial,
    context,
    gotzmann_number,
    hilbert_function,
    hilbert_polynomial,
    is_admissible,
    macaulay_growth,
)
from .marked import (
    MarkedPolynomial,
    MarkedSet,
    is_marked_basis,
    make_marked_set,
    marked_scheme_equations,
    marked_set_from_subspace,
    multiplicative_span,
    rank_profile,
    reduce,
)
from .pluecker import (
    EquationSet,
    ExteriorElement,
    GrassmannPoint,
    PlueckerPolynomial,
    complement_linear_forms,
    delta,
    equations,
    generator_families,
    membership_test,
    pluecker_coordinates,
    variable_multiply,
)
from .terms import Term, TermList, borel_closure, compare_degrevlex, elevations, is_borel_set, monomial_basis

__version__ = "0.1.0"
