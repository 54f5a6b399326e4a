"""Exact combinatorics of squarefree monomial quotients J/I.

The package computes Stanley decompositions and Stanley depth, prime
filtrations, Alexander duals, exterior-algebra transfers, and
multigraded Betti invariants for squarefree modules presented by pairs
of monomial ideals, entirely over explicit subset lattices.  Everything
is deterministic: set-valued results come back in colex order and
searches resolve ties the same way every run.
"""

from .errors import (
    CapExceededError,
    FormatError,
    InternalCheckError,
    NMismatchError,
    NonSquarefreeError,
    TheoremViolationError,
    ZeroModuleError,
)
from .setcalc import (
    IndexSet,
    Interval,
    SimplicialComplex,
    alexander_dual,
    interval_members,
    sigma,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    SqIdeal,
    minimalize,
    sr_complex,
    sr_ideal,
    tilde,
)
from .sqmod import (
    SqQuotient,
    StanleyDecomposition,
    associated_primes,
    build_quotient,
    dualize_decomposition,
    dualize_quotient,
    hreg_min,
    sdepth,
    squarefree_certificate,
    tilde_ext,
    validate_decomposition,
)
from .filtration import (
    FiltrationStep,
    PrimeFiltration,
    dualize_filtration,
    facet_peel_filtration,
    filtration_to_decomposition,
    validate_filtration,
)
from .exterior import (
    EDecomposition,
    EPiece,
    ExtElement,
    ExtQuotientModule,
    dual_functional_image,
    dual_right_mul,
    e_dual,
    e_to_s_decomposition,
    edual_decomposition,
    pairing,
    s_to_e_decomposition,
    theta,
    theta_monomial,
    to_exterior,
    wedge,
)
from .homology import (
    BettiTable,
    DepthDualityRecord,
    EagonReinerRecord,
    InvariantReport,
    TeraiRecord,
    betti,
    depth_duality_check,
    eagon_reiner_check,
    invariants,
    terai_check,
)
from .linquot import (
    LinearQuotientsOrder,
    has_linear_quotients,
    linear_quotients_order,
    lq_decomposition,
)
from .partition import (
    PartitionabilityRecord,
    face_ring,
    find_partition,
    generator_bottom_decomposition,
    is_partitionable,
    partition_duality_check,
)
from .instances import (
    all_complexes,
    all_quotients,
    all_sq_ideals,
    proper_nonzero_ideals,
    random_complex,
    random_quotient,
    random_sq_ideal,
)
from .formats import (
    dump_json,
    instance_document,
    parse_instance,
    to_jsonable,
)
from .survey import (
    SurveyRecord,
    counterexamples,
    survey_exhaustive,
    survey_module,
    survey_random,
)

__version__ = "1.0.0"

__all__ = [
    "BettiTable",
    "CapExceededError",
    "DepthDualityRecord",
    "EDecomposition",
    "EPiece",
    "EagonReinerRecord",
    "ExtElement",
    "ExtQuotientModule",
    "FiltrationStep",
    "FormatError",
    "IndexSet",
    "InternalCheckError",
    "Interval",
    "InvariantReport",
    "LinearQuotientsOrder",
    "Monomial",
    "MonomialIdeal",
    "NMismatchError",
    "NonSquarefreeError",
    "PartitionabilityRecord",
    "PrimeFiltration",
    "SimplicialComplex",
    "SqIdeal",
    "SqQuotient",
    "StanleyDecomposition",
    "SurveyRecord",
    "TeraiRecord",
    "TheoremViolationError",
    "ZeroModuleError",
    "alexander_dual",
    "all_complexes",
    "all_quotients",
    "all_sq_ideals",
    "associated_primes",
    "betti",
    "build_quotient",
    "counterexamples",
    "depth_duality_check",
    "dual_functional_image",
    "dual_right_mul",
    "dualize_decomposition",
    "dualize_filtration",
    "dualize_quotient",
    "dump_json",
    "e_dual",
    "e_to_s_decomposition",
    "eagon_reiner_check",
    "edual_decomposition",
    "face_ring",
    "facet_peel_filtration",
    "filtration_to_decomposition",
    "find_partition",
    "generator_bottom_decomposition",
    "has_linear_quotients",
    "hreg_min",
    "instance_document",
    "interval_members",
    "invariants",
    "is_partitionable",
    "linear_quotients_order",
    "lq_decomposition",
    "minimalize",
    "pairing",
    "parse_instance",
    "partition_duality_check",
    "proper_nonzero_ideals",
    "random_complex",
    "random_quotient",
    "random_sq_ideal",
    "s_to_e_decomposition",
    "sdepth",
    "sigma",
    "squarefree_certificate",
    "sr_complex",
    "sr_ideal",
    "survey_exhaustive",
    "survey_module",
    "survey_random",
    "terai_check",
    "theta",
    "theta_monomial",
    "tilde",
    "tilde_ext",
    "to_exterior",
    "to_jsonable",
    "validate_decomposition",
    "validate_filtration",
    "wedge",
]
