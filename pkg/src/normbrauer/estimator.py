"""Scikit-learn style front end.

:class:`VerticalBrauerGroup` wraps the pipeline in the estimator protocol so
it can be configured with ``get_params``/``set_params``, cloned, and dropped
into code that expects ``fit``/``transform``.  Inputs are scenarios in any
form accepted by :func:`normbrauer.validation.check_scenario`.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .brauer import Scenario, compute_vertical_brauer
from .exceptions import NormBrauerError
from .oracle import DEFAULT_BOUND, oracle_vertical_brauer
from .validation import check_scenario

__all__ = ["VerticalBrauerGroup", "OracleMismatchError"]


class OracleMismatchError(NormBrauerError):
    pass


def _as_batch(X) -> tuple[list, bool]:
    if isinstance(X, (list, tuple)):
        return list(X), True
    return [X], False


# outputs are tuples, not arrays, so set_output wrapping is off
class VerticalBrauerGroup(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    """Compute ``Br_vert(X)/Br(k)`` for one or more scenarios.

    Parameters
    ----------
    normalize : bool, default=True
        Normalize scenarios (reduce multiplicities mod n, add the factor at
        infinity).  When False, non-normalized input is rejected.
    verify : bool, default=False
        Recompute every result with the brute-force oracle and raise
        :class:`OracleMismatchError` on disagreement.
    bound : int, default=10**6
        Enumeration bound for the oracle.

    Attributes
    ----------
    results_ : list of BrauerResult
    invariant_factors_ : tuple of int
        For the first (or only) fitted scenario.
    generators_, symbols_, normalization_log_, scenario_
        Likewise, taken from the first result.
    """

    def __init__(self, normalize=True, verify=False, bound=DEFAULT_BOUND):
        self.normalize = normalize
        self.verify = verify
        self.bound = bound

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.requires_fit = False
        tags.input_tags.two_d_array = False
        return tags

    def _compute(self, X):
        s = check_scenario(X, normalize=self.normalize)
        result = compute_vertical_brauer(s)
        if self.verify:
            expected = oracle_vertical_brauer(s, bound=self.bound)
            if expected != result.invariant_factors:
                raise OracleMismatchError(
                    f"pipeline gave {list(result.invariant_factors)}, oracle gave {list(expected)}"
                )
        return result

    def fit(self, X, y=None):
        batch, _ = _as_batch(X)
        if not batch:
            raise ValueError("no scenarios given")
        self.results_ = [self._compute(s) for s in batch]
        first = self.results_[0]
        self.scenario_: Scenario = first.scenario
        self.invariant_factors_ = first.invariant_factors
        self.generators_ = first.generators
        self.symbols_ = list(first.symbols)
        self.normalization_log_ = list(first.normalization_log)
        return self

    def transform(self, X):
        """Invariant factors for each scenario (a single tuple for a single scenario)."""
        batch, is_batch = _as_batch(X)
        out = [self._compute(s).invariant_factors for s in batch]
        return out if is_batch else out[0]

    def order(self) -> int:
        """Order of the group found by the last :meth:`fit`."""
        check_is_fitted(self, "results_")
        return self.results_[0].order
