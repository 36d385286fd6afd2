"""Exact linear maps into R^{2k}, intersection numbers and their verifiers."""

from simplexembed.geometry.formatters import (
    ParityTextFormatter,
    VerificationTextFormatter,
)
from simplexembed.geometry.intersections import (
    affinely_independent,
    check_general_position,
    compute_o_f,
    gale_alternation,
    intersection_number,
    moment_map,
    random_generic_map,
    total_intersection_count,
    total_intersection_parity,
)
from simplexembed.geometry.models import (
    GenericMapExhaustedError,
    IntersectionRecord,
    LinearMap,
    NonGenericMapError,
    ParityReport,
    VerificationReport,
)
from simplexembed.geometry.verifiers import (
    intersection_sign,
    moment_parity,
    moment_sign,
    verify_coset,
    verify_moment_lemma,
)

__all__ = [
    "GenericMapExhaustedError",
    "IntersectionRecord",
    "LinearMap",
    "NonGenericMapError",
    "ParityReport",
    "ParityTextFormatter",
    "VerificationReport",
    "VerificationTextFormatter",
    "affinely_independent",
    "check_general_position",
    "compute_o_f",
    "gale_alternation",
    "intersection_number",
    "intersection_sign",
    "moment_map",
    "moment_parity",
    "moment_sign",
    "random_generic_map",
    "total_intersection_count",
    "total_intersection_parity",
    "verify_coset",
    "verify_moment_lemma",
]
