"""awlab: exact Askey-Wilson polynomial constructions and identity checks.

Everything is computed over the rational numbers with fractions.Fraction;
there is no floating point anywhere, and every verified identity holds with
a residual that is literally the zero polynomial.

Layers, bottom up:

  scalars      parameter handling, genericity certification, the closed-form
               constants (lambda, mu, alpha, beta, kappa)
  laurent      sparse exact Laurent polynomials and unreduced fractions
  hecke        the operators: substitutions, T0/T1, Y, D, D'
  polynomials  the symmetric family P_n and nonsymmetric family E_n
  verify       identity checks with residual witnesses, fault injection,
               negative controls, and the suite runner
  cli          the `awlab` command
"""

from .hecke import (
    NotSymmetricError,
    apply_D,
    apply_D_prime,
    apply_T0,
    apply_T1,
    apply_t0_T0_inv,
    apply_t1_T1_inv,
    apply_Y,
)
from .laurent import (
    BOTH_ZERO,
    SUB_INV,
    SUB_Q_OVER_Z,
    SUB_QZ,
    SUB_Z_OVER_Q,
    LaurentFraction,
    LaurentPoly,
    NotDivisibleError,
    exact_quotient,
    limit_at_infinity,
    proportional,
)
from .polynomials import (
    EigenSolveError,
    ExtractionError,
    askey_wilson_P,
    askey_wilson_P_oracle,
    nonsymmetric_E,
    recurrence_ratio,
    symmetrize,
)
from .scalars import (
    GenericityError,
    HorizonError,
    ParamSet,
    Scalar,
    alpha_n,
    beta_n,
    check_genericity,
    e1,
    e3,
    format_scalar,
    kappa_n,
    lambda_n,
    mu_n,
    param_set_from_json,
    parse_scalar,
    q_pochhammer,
    random_param_sets,
)
from .verify import (
    FAULT_TARGETS,
    IdentityReport,
    check_alpha_beta,
    check_bridge_identity,
    check_E_eigen,
    check_factorization,
    check_hecke_ladder,
    check_hecke_relations,
    check_intertwiner,
    check_leading_coefficient,
    check_lowering_via_d,
    check_projection,
    check_q_difference,
    check_raising_via_d,
    check_recurrence,
    check_symmetrization,
    run_suite,
    suite_plan,
)

__version__ = "0.1.0"

__all__ = [
    "BOTH_ZERO",
    "EigenSolveError",
    "ExtractionError",
    "FAULT_TARGETS",
    "GenericityError",
    "HorizonError",
    "IdentityReport",
    "LaurentFraction",
    "LaurentPoly",
    "NotDivisibleError",
    "NotSymmetricError",
    "ParamSet",
    "SUB_INV",
    "SUB_QZ",
    "SUB_Q_OVER_Z",
    "SUB_Z_OVER_Q",
    "Scalar",
    "alpha_n",
    "apply_D",
    "apply_D_prime",
    "apply_T0",
    "apply_T1",
    "apply_Y",
    "apply_t0_T0_inv",
    "apply_t1_T1_inv",
    "askey_wilson_P",
    "askey_wilson_P_oracle",
    "beta_n",
    "check_E_eigen",
    "check_alpha_beta",
    "check_bridge_identity",
    "check_factorization",
    "check_genericity",
    "check_hecke_ladder",
    "check_hecke_relations",
    "check_intertwiner",
    "check_leading_coefficient",
    "check_lowering_via_d",
    "check_projection",
    "check_q_difference",
    "check_raising_via_d",
    "check_recurrence",
    "check_symmetrization",
    "e1",
    "e3",
    "exact_quotient",
    "format_scalar",
    "kappa_n",
    "lambda_n",
    "limit_at_infinity",
    "mu_n",
    "nonsymmetric_E",
    "param_set_from_json",
    "parse_scalar",
    "proportional",
    "q_pochhammer",
    "random_param_sets",
    "recurrence_ratio",
    "run_suite",
    "suite_plan",
    "symmetrize",
]
