"""scikit-learn style wrapper around the unified operator.

The operator has no data-dependent state, so ``fit`` only validates and
resolves the parameters; ``transform`` maps a column of abscissae to operator
values.  This lets the operator sit inside a ``Pipeline`` or be cloned and
grid-searched over ``order`` like any transformer.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .fracderiv import DerivativeVariant, frac_derivative, unified_apply
from .fracint import QuadratureConfig
from .funcspace import CausalFunction, parse_function
from .parsing import parse_order

__all__ = ["FractionalOperator"]


class FractionalOperator(TransformerMixin, BaseEstimator):
    """J^s (Re(s) > 0), identity (s = 0) or D^{-s} (Re(s) < 0) of a causal function.

    Parameters
    ----------
    function : CausalFunction or str
        The operand, or a specifier such as ``"power:a=0,p=2"``.
    order : complex, float or str
        Operator order; strings use the ``<re>[+<im>i]`` syntax.
    variant : {"right", "left"}
        Derivative form used when Re(order) < 0.
    nodes, regularization_k, tail_T
        Quadrature settings, see :class:`QuadratureConfig`.

    ``transform`` takes X of shape (n_samples, 1) holding x values and
    returns a complex array of shape (n_samples, 1).
    """

    def __init__(self, function="power:a=0,p=1", order=0.5, variant="right",
                 nodes=64, regularization_k=None, tail_T=40.0):
        self.function = function
        self.order = order
        self.variant = variant
        self.nodes = nodes
        self.regularization_k = regularization_k
        self.tail_T = tail_T

    def fit(self, X=None, y=None):
        f = self.function
        self.function_ = f if isinstance(f, CausalFunction) else parse_function(str(f))
        s = self.order
        self.order_ = parse_order(s) if isinstance(s, str) else complex(s)
        self.variant_ = DerivativeVariant(self.variant)
        self.config_ = QuadratureConfig(self.nodes, self.regularization_k, self.tail_T)
        if X is not None:
            self.n_features_in_ = check_array(X, ensure_2d=True).shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        X = check_array(X, dtype=float, ensure_2d=True)
        if X.shape[1] != 1:
            raise ValueError(f"expected X of shape (n_samples, 1) with x values, got {X.shape}")
        x = X[:, 0]
        s = self.order_
        if s.real < 0:
            vals = frac_derivative(self.function_, -s, x, self.variant_, self.config_)
        else:
            vals = unified_apply(self.function_, s, x, self.config_)
        return np.asarray(vals, dtype=complex).reshape(-1, 1)
