"""Recover the singular points of a plane curve from the base points of its polars.

Every function takes cluster documents as JSON text (the format read and written by
the ``polarsing`` command line tool). Exact rationals come back as ``fractions.Fraction``.
"""

from ._core import (
    PolarsingError,
    are_similar,
    canonical_digest,
    invariants,
    multiplicities_from_values,
    recover,
    render_dot,
    validate,
    values_from_multiplicities,
)

__all__ = [
    "PolarsingError",
    "are_similar",
    "canonical_digest",
    "invariants",
    "multiplicities_from_values",
    "recover",
    "render_dot",
    "validate",
    "values_from_multiplicities",
]
