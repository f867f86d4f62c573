"""Compression-based programmability coefficients for cellular automata."""

import json

from ._ccoef import (
    CoefficientResult,
    DegenerateFitError,
    IncomparableError,
    RuleTable,
    behaviourally_equivalent,
    c_equivalent,
    calibrate_zero_band,
    coefficient,
    complexity,
    compressed_size,
    compressor_id,
    computes,
    evolve,
    gray_initials,
    inert_rules,
    is_zero_computer,
    kmeans_1d,
    life_coefficient,
    life_evolve,
    random_initials,
    serialize,
)
from ._ccoef import sweep_json as _sweep_json

__all__ = [
    "CoefficientResult",
    "DegenerateFitError",
    "IncomparableError",
    "RuleTable",
    "behaviourally_equivalent",
    "c_equivalent",
    "calibrate_zero_band",
    "coefficient",
    "complexity",
    "compressed_size",
    "compressor_id",
    "computes",
    "evolve",
    "gray_initials",
    "inert_rules",
    "is_zero_computer",
    "kmeans_1d",
    "life_coefficient",
    "life_evolve",
    "random_initials",
    "serialize",
    "sweep",
    "zero_band",
]


def zero_band(t=200, n=40, width=61, **kwargs):
    """Zero band calibrated on the inert elementary rules under the same parameters."""
    inert = [coefficient(rule, t=t, n=n, width=width, **kwargs) for rule in inert_rules()]
    return calibrate_zero_band(inert)


def sweep(t=200, n=40, width=61, epsilon=None, workers=0):
    """All 256 elementary rules; returns the sweep document as a dict."""
    return json.loads(_sweep_json(t=t, n=n, width=width, epsilon=epsilon, workers=workers))
