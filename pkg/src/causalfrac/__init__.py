"""Real and complex order fractional integrals and derivatives of causal functions."""

from .exceptions import (
    DomainError,
    FracError,
    GammaOverflowError,
    IncompatibleConventionError,
    OrderUnavailableError,
    PoleError,
    RegularizationError,
    SpecParseError,
    UnsupportedOrderError,
)
from .fracderiv import (
    DerivativeVariant,
    derivative_image,
    frac_derivative,
    frac_derivative_split,
    split_order,
    unified_apply,
    unified_image,
)
from .fracint import (
    FractionalImage,
    OperatorResult,
    QuadratureConfig,
    auto_regularization_k,
    boundary_corrected,
    frac_integral,
    frac_integral_grid,
    iterated_integral,
)
from .funcspace import (
    CausalFunction,
    Constant,
    Exponential,
    Grid,
    Polynomial,
    Power,
    ScaledSum,
    derivative,
    format_function,
    make_constant,
    make_exponential,
    make_polynomial,
    make_power,
    parse_function,
)
from .parsing import format_order, parse_order
from .special import (
    EULER_GAMMA,
    ExpansionCoefficients,
    beta,
    euler_mascheroni,
    gamma,
    gamma_derivative_at_one,
    loggamma,
    phi,
    phi_expansion,
    rgamma,
)
from .verify import (
    Convention,
    VerificationReport,
    check_dirichlet,
    check_limits,
    check_linearity,
    check_semigroup,
    closed_form_power,
    compare_conventions,
    run_suite,
)

__version__ = "0.1.0"


def __getattr__(name):
    # keep scikit-learn an import-time cost only for users of the wrapper
    if name == "FractionalOperator":
        from .estimators import FractionalOperator

        return FractionalOperator
    raise AttributeError(name)
