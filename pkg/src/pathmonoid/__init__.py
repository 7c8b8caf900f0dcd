"""Endomorphism monoids of the finite directed path.

Transformations of {1..n} act on the right and compose left to right,
so ``f * g`` applies ``f`` first.
"""

from .generators_rank import (
    A,
    B,
    GeneratorSymbol,
    GeneratorWord,
    RankCertificate,
    canonical_generators,
    closure,
    evaluate,
    express_rank_n_minus_1,
    factorize,
    generating_subset_exists,
    kernel_lower_bound,
    make_alpha,
    make_beta,
    minimum_generating_set_size,
    rank_n_minus_1_elements,
    split,
)
from .path_endomorphisms import (
    ClassificationReport,
    NotAWeakEndomorphism,
    NotRegular,
    WEndEncoding,
    classify,
    compositions,
    count_idempotents,
    count_wend,
    count_wend_closed_form,
    decode,
    encode,
    enumerate_wend,
    is_automorphism,
    is_endomorphism,
    is_idempotent,
    is_regular,
    is_strong_endomorphism,
    is_strong_weak_endomorphism,
    is_weak_endomorphism,
    is_weak_endomorphism_by_characterization,
    pseudo_inverse,
    regular_normal_form,
    structure_census,
)
from .transformations import (
    KernelPartition,
    ParseError,
    PathTransformation,
    all_transformations,
    compose,
    format_transformation,
    identity,
    image_set,
    is_interval,
    is_order_preserving,
    kernel,
    parse_transformation,
    rank_of,
    transformation,
)

__version__ = "0.1.0"
