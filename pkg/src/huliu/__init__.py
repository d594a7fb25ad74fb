"""Finite workbench for left commutative rngs and rings with the Hu-Liu product.

Everything is exact integer arithmetic over small operation tables
(supported envelope: order <= 64).  Validation is exhaustive over all
tuples; primality, integrality, and the lying-over replay are brute-force
and therefore falsifiable.
"""

from .constructions import (
    FiniteCommRing,
    RingHom,
    catalog,
    catalog_pairs,
    comm_ring_violations,
    enumerate_lcrngs,
    identity_hom,
    lcrng_isomorphic,
    projection_hom,
    reduction_hom,
    ring_hom,
    ring_product,
    semidirect_null,
    validate_comm_ring,
    zmod,
)
from .errors import InputError, TheoremAlarm, ValidationFailure, Violation, WorkbenchError
from .files import emit_structure, parse_structure
from .hlring import (
    DIALGEBRA_IDENTITIES,
    HlRing,
    RawHlRing,
    diassociativity_report,
    from_lcrng,
    hl_halo,
    hlring_violations,
    is_hl_commutative,
    validate_hlring,
)
from .ideals import (
    GradedIdeal,
    Spectrum,
    as_graded_ideal,
    complement_closure_prime,
    enumerate_ideals,
    ideal_components,
    ideal_violation,
    is_huliu_prime,
    is_ideal,
    is_subrng,
    spectrum,
    subrng_violation,
)
from .integrality import (
    ComponentRing,
    IntegralWitness,
    component_ring,
    graded_witnesses,
    integral_witness,
    is_graded_integral,
    local_power,
    mul_power,
    push_down_check,
    witness_holds,
)
from .kernel import (
    SENTINEL,
    FiniteAbelianGroup,
    Subset,
    Table,
    direct_sum_group,
    enumerate_subgroups,
    format_subset,
    parse_subset,
    subgroup_closure,
    validate_group,
)
from .lcrng import (
    Decomposition,
    LcRng,
    RawLcRng,
    decompose,
    induced_product,
    induced_table,
    lcrng_violations,
    left_identities,
    validate_lcrng,
)
from .lyingover import (
    LyingOverReport,
    LyingOverRow,
    SubrngPair,
    embed_check,
    lying_over,
    maximal_in_t,
    sub_primes,
    t_set,
    verify_lying_over_all,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentRing",
    "DIALGEBRA_IDENTITIES",
    "Decomposition",
    "FiniteAbelianGroup",
    "FiniteCommRing",
    "GradedIdeal",
    "HlRing",
    "InputError",
    "IntegralWitness",
    "LcRng",
    "LyingOverReport",
    "LyingOverRow",
    "RawHlRing",
    "RawLcRng",
    "RingHom",
    "SENTINEL",
    "Spectrum",
    "SubrngPair",
    "Subset",
    "Table",
    "TheoremAlarm",
    "ValidationFailure",
    "Violation",
    "WorkbenchError",
    "as_graded_ideal",
    "catalog",
    "catalog_pairs",
    "comm_ring_violations",
    "complement_closure_prime",
    "component_ring",
    "decompose",
    "diassociativity_report",
    "direct_sum_group",
    "emit_structure",
    "enumerate_ideals",
    "enumerate_lcrngs",
    "enumerate_subgroups",
    "format_subset",
    "from_lcrng",
    "graded_witnesses",
    "hl_halo",
    "hlring_violations",
    "ideal_components",
    "ideal_violation",
    "identity_hom",
    "induced_product",
    "induced_table",
    "integral_witness",
    "is_graded_integral",
    "is_hl_commutative",
    "is_huliu_prime",
    "is_ideal",
    "is_subrng",
    "lcrng_isomorphic",
    "lcrng_violations",
    "left_identities",
    "local_power",
    "lying_over",
    "maximal_in_t",
    "mul_power",
    "parse_structure",
    "parse_subset",
    "projection_hom",
    "push_down_check",
    "reduction_hom",
    "ring_hom",
    "ring_product",
    "semidirect_null",
    "spectrum",
    "sub_primes",
    "subgroup_closure",
    "subrng_violation",
    "t_set",
    "validate_comm_ring",
    "validate_group",
    "validate_hlring",
    "validate_lcrng",
    "verify_lying_over_all",
    "witness_holds",
    "zmod",
]
