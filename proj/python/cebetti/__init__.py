"""Betti numbers of unordered configuration spaces.

Computes H_*(B_k(M); Q) (and twisted / relative-to-boundary variants) from a
finite presentation of the compactly supported cohomology of M, by building
and resolving the weight-graded Chevalley-Eilenberg complex of the associated
two-step nilpotent Lie algebra. Also machine-verifies the homological
stability ranges of the cap product with the unit.
"""

from ._core import (
    Model,
    betti,
    betti_table,
    check,
    parse_model,
    preset,
    presets,
    stability,
    sym_power,
    validate,
)

__all__ = [
    "Model",
    "betti",
    "betti_table",
    "check",
    "parse_model",
    "preset",
    "presets",
    "stability",
    "sym_power",
    "validate",
]
