"""eta26: coefficients of the 26th power of the Euler product.

Two independent evaluation paths for p26(n), the coefficient of q^n in
prod(1 - q^m)^26:

  * hecke.p26_cm    -- exact closed form through CM eigenform
                       coefficients at 12n + 13;
  * series.p26_oracle -- brute-force q-series expansion.

Their agreement is the package's central invariant.  classify decides
which vanishing/nonvanishing conditions apply to an index, props batch-
verifies divisibility and nonvanishing claims over prime ranges, and cli
exposes everything with machine-readable output.
"""

from .arith import Factorization, factorize, is_prime, ord_p, primes_below
from .classify import (
    ConditionProfile,
    ScanSummary,
    VanishingReport,
    apply_theorems,
    check_25n_plus_1,
    check_49n_plus_3,
    profile,
    scan,
)
from .errors import (
    BudgetError,
    ConsistencyError,
    Eta26Error,
    FactoringBudgetError,
    SeriesBudgetError,
)
from .hecke import (
    P26_DENOMINATOR,
    AlgInt3,
    CoeffBundle,
    coeff_bundle,
    p26_cm,
    t1_prime,
    t2_prime,
    t_prime_power,
)
from .props import PropReport, run_all
from .quadrep import EisRep, GaussRep, one_three_squares, two_squares
from .series import (
    PowerSeries,
    eta_power_series,
    jacobi_series,
    p26_oracle,
    pentagonal_series,
    write_coefficient_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AlgInt3",
    "BudgetError",
    "CoeffBundle",
    "ConditionProfile",
    "ConsistencyError",
    "EisRep",
    "Eta26Error",
    "Factorization",
    "FactoringBudgetError",
    "GaussRep",
    "P26_DENOMINATOR",
    "PowerSeries",
    "PropReport",
    "ScanSummary",
    "SeriesBudgetError",
    "VanishingReport",
    "apply_theorems",
    "check_25n_plus_1",
    "check_49n_plus_3",
    "coeff_bundle",
    "eta_power_series",
    "factorize",
    "is_prime",
    "jacobi_series",
    "one_three_squares",
    "ord_p",
    "p26_cm",
    "p26_oracle",
    "pentagonal_series",
    "primes_below",
    "profile",
    "run_all",
    "scan",
    "t1_prime",
    "t2_prime",
    "t_prime_power",
    "two_squares",
    "write_coefficient_csv",
]
