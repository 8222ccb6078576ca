"""Surfaces in P^3 with ordinary triple points.

Surfaces, points and reports are passed as the same JSON documents the
command line reads and writes, decoded into plain dicts and lists.
"""

from ._core import (
    TriplePointError,
    bounds,
    certify,
    classify_sextic,
    combined_bound,
    construct,
    dianode,
    family_ids,
    forms_with_multiplicity,
    interval_count,
    invariants,
    jacobian_hilbert,
    miyaoka_bound,
    parse_polynomial,
    plurigenus,
    polar_bound,
    quadrics_through,
    reciprocal,
    schema_version,
    singular_points,
    spectrum,
    spectrum_bound,
    steiner,
    tangent_dimension,
)

__all__ = [name for name in dir() if not name.startswith("_")]
