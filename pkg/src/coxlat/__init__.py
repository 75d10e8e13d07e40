"""coxlat: exact star-lattice Coxeter elements and Poincare series.

Builds the root lattices attached to genus-0 graded surface singularities,
computes their Poincare series along two independent routes (quotients of
characteristic polynomials of Coxeter elements, and divisor-degree counts
via Riemann-Roch on a rational curve), and verifies the resulting identities
as exact integer series equalities.
"""

from .errors import (
    CoxlatError,
    GorensteinViolation,
    NegativeDimension,
    NeitherKind,
    NonIntegralCoefficient,
    NotARoot,
    NotAStarLattice,
    NotUnitriangular,
    OrderMismatch,
    RouteMismatch,
    UnknownName,
    ZeroConstantTerm,
)
from .exact import (
    PowerSeries,
    poly_add,
    poly_deg,
    poly_eval,
    poly_mul,
    poly_to_string,
    poly_trim,
    series_equal,
    series_from_poly,
    series_from_rational,
)
from .lattice import (
    Lattice,
    RadicalQuotient,
    asym_form_matrix,
    char_poly,
    coxeter_inverse_matrix,
    coxeter_matrix,
    coxeter_via_form,
    matrix_order,
    quotient_by_radical,
    radical_basis,
    reflection_matrix,
)
from .series import RootedLattice, divisor_degree, hilbert_P, hilbert_Q, poincare_direct
from .star import (
    OrbitInvariants,
    SingularityKind,
    StarLattices,
    build,
    catalog,
    catalog_names,
    decode_star,
    fuchsian_invariants,
    invariants_from_json,
    invariants_from_star,
    kleinian_invariants,
    validate,
)
from .verify import (
    VerificationReport,
    run_suite,
    verify_all,
    verify_identities,
    verify_lattices,
    verify_orbit_formulas,
    verify_orbit_series,
    verify_theorem,
)

__version__ = "0.1.0"
