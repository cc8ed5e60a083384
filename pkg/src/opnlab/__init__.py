"""opnlab: necessary-condition toolkit for odd perfect numbers.

Exact rational arithmetic throughout; real constants enter only as
certified rational enclosures, so every verdict and table entry is an
exact statement, not a floating-point approximation.
"""

from .abundancy import (
    AbundancyReport,
    Classification,
    abundancy_report,
    geometric_split_check,
    sigma,
    sigma_minus_one,
    truncated_product,
)
from .bound_tables import (
    BoundTableRow,
    RhoParams,
    find_I,
    generate_table,
    perisastri_bound,
    rho,
    rho_limit,
)
from .constants import (
    DEFAULT_WIDTH,
    Precision,
    Threshold,
    certified_compare,
    pi_enclosure,
    refine,
    threshold_enclosure,
    zeta_enclosure,
)
from .errors import (
    InvalidArgument,
    NonPositiveInterval,
    OpnlabError,
    ParseError,
    PrecisionCapExceeded,
    ResourceLimit,
)
from .exact_arith import (
    Ordering3,
    Rational,
    RatInterval,
    compare,
    interval_div_scalar,
    interval_mul,
    rat_add,
    rat_mul,
)
from .primes import (
    Factorization,
    factorize,
    is_prime,
    nth_prime,
    prime_cap,
    primes_window,
    set_prime_cap,
)
from .screener import (
    Condition,
    EulerForm,
    Mode,
    Outcome,
    ScreenVerdict,
    euler_form_check,
    full_screen,
    perfect_check,
    radical_screen,
    to_euler_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbundancyReport",
    "BoundTableRow",
    "Classification",
    "Condition",
    "DEFAULT_WIDTH",
    "EulerForm",
    "Factorization",
    "InvalidArgument",
    "Mode",
    "NonPositiveInterval",
    "OpnlabError",
    "Ordering3",
    "Outcome",
    "ParseError",
    "Precision",
    "PrecisionCapExceeded",
    "RatInterval",
    "Rational",
    "ResourceLimit",
    "RhoParams",
    "ScreenVerdict",
    "Threshold",
    "abundancy_report",
    "certified_compare",
    "compare",
    "euler_form_check",
    "factorize",
    "find_I",
    "full_screen",
    "generate_table",
    "geometric_split_check",
    "interval_div_scalar",
    "interval_mul",
    "is_prime",
    "nth_prime",
    "perfect_check",
    "perisastri_bound",
    "pi_enclosure",
    "prime_cap",
    "primes_window",
    "radical_screen",
    "rat_add",
    "rat_mul",
    "refine",
    "rho",
    "rho_limit",
    "set_prime_cap",
    "sigma",
    "sigma_minus_one",
    "threshold_enclosure",
    "to_euler_form",
    "truncated_product",
    "zeta_enclosure",
]
