"""Quasigroups with a prescribed number of commuting pairs.

The library builds Latin squares of order n with exactly k commuting pairs
for every attainable k, certifies each construction by an independent
recount, and exposes the two spectra behind that claim: the attainable
counts for a fixed order, and the orders attaining a fixed commuting
proportion.
"""

from .core import (
    PartialSquare,
    Square,
    apply_row_isotope,
    check,
    count_commuting,
    is_orthogonal,
    is_self_orthogonal,
    paste,
    square_from_text,
    validate,
)
from .errors import (
    CompletionError,
    ConstructionError,
    ImpossibleTargetError,
    InvalidTargetError,
    QuasicommError,
    SeedConditionError,
    ValidationError,
)
from .perms import (
    Permutation,
    beta,
    count_collisions,
    random_derangement,
    sample_low_collision_derangement,
)
from .tables import BASE_SQUARES, SWITCH_RECIPES, anti_square, base_count, base_square
from .generators import anti_commutative, commutative, doubling_hole
from .completion import complete_symmetric
from .cyclic import (
    Seed,
    Skeleton,
    cyclic_square,
    cyclic_with_fixed_points,
    expand_seed,
    is_partial_orthomorphism,
    narrow_anti_square,
    reversal_skeleton,
)
from .holes import (
    anti_commutative_hole,
    collided_symmetric_hole,
    commutative_hole,
    permuted_symmetric_hole,
)
from .switching import (
    RowCycle,
    apply_recipe,
    cycle_through_column,
    high_counts,
    row_cycles,
    switch,
    symmetric_with_cycle,
)
from .spectrum import (
    AdmissibleSet,
    KqSet,
    band,
    kq,
    kq_members,
    proportion,
    spectrum_C,
)
from .synthesis import (
    DriverConstants,
    WitnessCertificate,
    admissible,
    compute_E,
    driver_constants,
    is_admissible,
    kconds_feasible_j,
    replay,
    witness,
)
from .oracle import (
    commuting_histogram,
    enumerate_all,
    sampled_counts,
    sampled_support,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSet",
    "BASE_SQUARES",
    "CompletionError",
    "ConstructionError",
    "DriverConstants",
    "ImpossibleTargetError",
    "InvalidTargetError",
    "KqSet",
    "PartialSquare",
    "Permutation",
    "QuasicommError",
    "RowCycle",
    "SWITCH_RECIPES",
    "Seed",
    "SeedConditionError",
    "Skeleton",
    "Square",
    "ValidationError",
    "WitnessCertificate",
    "admissible",
    "anti_commutative",
    "anti_commutative_hole",
    "anti_square",
    "apply_recipe",
    "apply_row_isotope",
    "band",
    "base_count",
    "base_square",
    "beta",
    "check",
    "collided_symmetric_hole",
    "commutative",
    "commutative_hole",
    "commuting_histogram",
    "complete_symmetric",
    "compute_E",
    "count_collisions",
    "count_commuting",
    "cycle_through_column",
    "cyclic_square",
    "cyclic_with_fixed_points",
    "doubling_hole",
    "driver_constants",
    "enumerate_all",
    "expand_seed",
    "high_counts",
    "is_admissible",
    "is_orthogonal",
    "is_partial_orthomorphism",
    "is_self_orthogonal",
    "kconds_feasible_j",
    "kq",
    "kq_members",
    "narrow_anti_square",
    "paste",
    "permuted_symmetric_hole",
    "proportion",
    "random_derangement",
    "replay",
    "reversal_skeleton",
    "row_cycles",
    "sample_low_collision_derangement",
    "sampled_counts",
    "sampled_support",
    "spectrum_C",
    "square_from_text",
    "switch",
    "symmetric_with_cycle",
    "validate",
    "witness",
]
