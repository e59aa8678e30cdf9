"""Arc-analytic classification of Brieskorn polynomials.

Exact computation of the invariants that classify sums of signed pure
powers up to arc-analytic equivalence: virtual Poincare polynomials of
their fibers, realized motivic zeta functions, the sign-recovery
procedure, and the complete pairwise equivalence decision.
"""

from .brieskorn import (
    BrieskornPoly,
    Cause,
    EquivalenceVerdict,
    ParseError,
    classify_pair,
    iter_normalized_singular,
    normalize,
    parse,
)
from .fibers import (
    EmptySum,
    FiberQuery,
    OddPresent,
    TwoPowerForm,
    beta_closed,
    beta_recursive,
    euler_fiber,
    reduce,
)
from .laurent import LaurentPoly, NonDivisibleError
from .recovery import RecoveryError, SignCountRecord, SignRecovery, recover, roundtrip_check
from .tables import TableRecord, iter_table, predicted_class_count
from .zeta import (
    RealizedCoefficient,
    RealizedZeta,
    arc_space_monomial_oracle,
    default_order,
    modified_from_plain,
    modified_zeta,
    monomial_modified_zeta,
    plain_from_modified,
    zeta_equal,
    zeta_from_json,
    zeta_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BrieskornPoly",
    "Cause",
    "EmptySum",
    "EquivalenceVerdict",
    "FiberQuery",
    "LaurentPoly",
    "NonDivisibleError",
    "OddPresent",
    "ParseError",
    "RealizedCoefficient",
    "RealizedZeta",
    "RecoveryError",
    "SignCountRecord",
    "SignRecovery",
    "TableRecord",
    "TwoPowerForm",
    "arc_space_monomial_oracle",
    "beta_closed",
    "beta_recursive",
    "classify_pair",
    "default_order",
    "euler_fiber",
    "iter_normalized_singular",
    "iter_table",
    "modified_from_plain",
    "modified_zeta",
    "monomial_modified_zeta",
    "normalize",
    "parse",
    "plain_from_modified",
    "predicted_class_count",
    "recover",
    "reduce",
    "roundtrip_check",
    "zeta_equal",
    "zeta_from_json",
    "zeta_to_json",
]
