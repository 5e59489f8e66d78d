"""su(2) plane harmonics on the half-plane R+ x [-pi, pi].

Laguerre-based radial functions and plane harmonics, differential ladder
operators with an exact-rational normal-ordering engine, generalized
Gauss-Laguerre quadrature, analyze/synthesize transforms with per-j rotation,
and verification suites that adjudicate the printed identities against
independent oracles.
"""

from .basis import (
    PlanePoint,
    SpinIndex,
    calL,
    calL_deriv,
    calZ,
    index_to_spin,
    ode_residual,
    sector_labels,
    spin_to_index,
)
from .errors import (
    DomainError,
    EigenSolveError,
    ReductionLimitError,
    SchemaError,
    SectorMixingError,
    UnitarityError,
)
from .exact import ExactPolynomial
from .laguerre import (
    COMPOSED_RELATIONS,
    FIRST_ORDER_RELATIONS,
    LaguerreIndex,
    RecurrenceCheck,
    factorial_ratio_sqrt,
    laguerre_deriv,
    laguerre_eval,
    laguerre_reflect,
    recurrence_check,
    recurrence_residual,
)
from .algebra import (
    DEFAULT_RULES,
    ECorrectionReport,
    Monomial,
    OperatorExpr,
    QQi,
    RewriteRule,
    RewriteRuleSet,
    anticommutator,
    build_operator,
    commutator,
    critical_pairs,
    normal_form,
    reduce_word,
    verify_e_correction,
)
from .actions import (
    annihilation_residual,
    apply_ladder,
    apply_to_basis,
    casimir_residual,
    hermiticity_gap,
    k3_ladder_residual,
    ladder_coefficient,
    ladder_form,
    ladder_residual,
    pair_action,
    su2_commutator_residual,
)
from .quadrature import (
    QuadratureRule,
    default_n_phi,
    gauss_laguerre,
    halfline_inner,
    plane_inner,
)
from .rotation import RotationSpec, expm, rotation_matrix
from .transform import (
    CoefficientBlock,
    analyze,
    as_function,
    parseval_gap,
    random_block,
    rotate,
    synthesize,
)
from .errata import ERRATA, Erratum
from .verify import (
    DEFAULT_TOLERANCES,
    SUITES,
    CheckResult,
    VerificationReport,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "PlanePoint",
    "SpinIndex",
    "calL",
    "calL_deriv",
    "calZ",
    "index_to_spin",
    "ode_residual",
    "sector_labels",
    "spin_to_index",
    "DomainError",
    "EigenSolveError",
    "ReductionLimitError",
    "SchemaError",
    "SectorMixingError",
    "UnitarityError",
    "ExactPolynomial",
    "COMPOSED_RELATIONS",
    "FIRST_ORDER_RELATIONS",
    "LaguerreIndex",
    "RecurrenceCheck",
    "factorial_ratio_sqrt",
    "laguerre_deriv",
    "laguerre_eval",
    "laguerre_reflect",
    "recurrence_check",
    "recurrence_residual",
    "DEFAULT_RULES",
    "ECorrectionReport",
    "Monomial",
    "OperatorExpr",
    "QQi",
    "RewriteRule",
    "RewriteRuleSet",
    "anticommutator",
    "build_operator",
    "commutator",
    "critical_pairs",
    "normal_form",
    "reduce_word",
    "verify_e_correction",
    "annihilation_residual",
    "apply_ladder",
    "apply_to_basis",
    "casimir_residual",
    "hermiticity_gap",
    "k3_ladder_residual",
    "ladder_coefficient",
    "ladder_form",
    "ladder_residual",
    "pair_action",
    "su2_commutator_residual",
    "QuadratureRule",
    "default_n_phi",
    "gauss_laguerre",
    "halfline_inner",
    "plane_inner",
    "RotationSpec",
    "expm",
    "rotation_matrix",
    "CoefficientBlock",
    "analyze",
    "as_function",
    "parseval_gap",
    "random_block",
    "rotate",
    "synthesize",
    "ERRATA",
    "Erratum",
    "DEFAULT_TOLERANCES",
    "SUITES",
    "CheckResult",
    "VerificationReport",
    "run_suite",
    "__version__",
]
