"""Exact overpartition statistics, separable classes, and q-series identity
verification at arbitrary integer precision."""

from .core import (
    Convention,
    Overpartition,
    Partition,
    conjugate,
    count_parts_above,
    largest_repeating_size,
    max_excludant_size,
    min_excludant_size,
    smallest_positive_repeating_size,
)
from .enumeration import (
    ClassTag,
    basis_elements,
    distinct_congruent_partitions,
    enumerate_class,
    overpartitions_of,
)
from .identities import (
    IDENTITY_IDS,
    VerificationReport,
    brute_force,
    closed_form,
    overpartition_series,
    theorem_count_check,
    verify,
    verify_all,
)
from .separable import (
    DecompositionWitness,
    basis_gf,
    bf_bijection_from_distinct,
    bf_bijection_to_distinct,
    bl_bijection_from_distinct,
    bl_bijection_to_distinct,
    compose,
    decompose,
    is_basis_element,
    is_member,
    toggle_extreme_overline,
)
from .series import (
    QSeries,
    ZQPoly,
    gaussian_binomial,
    omega_product,
    q_pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "ClassTag",
    "Convention",
    "DecompositionWitness",
    "IDENTITY_IDS",
    "Overpartition",
    "Partition",
    "QSeries",
    "VerificationReport",
    "ZQPoly",
    "basis_elements",
    "basis_gf",
    "bf_bijection_from_distinct",
    "bf_bijection_to_distinct",
    "bl_bijection_from_distinct",
    "bl_bijection_to_distinct",
    "brute_force",
    "closed_form",
    "compose",
    "conjugate",
    "count_parts_above",
    "decompose",
    "distinct_congruent_partitions",
    "enumerate_class",
    "gaussian_binomial",
    "is_basis_element",
    "is_member",
    "largest_repeating_size",
    "max_excludant_size",
    "min_excludant_size",
    "omega_product",
    "overpartition_series",
    "overpartitions_of",
    "q_pochhammer",
    "smallest_positive_repeating_size",
    "theorem_count_check",
    "toggle_extreme_overline",
    "verify",
    "verify_all",
]
