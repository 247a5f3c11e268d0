"""cantorlab: exact covering geometry for generalised Cantor sets.

Construct generalised Cantor sets, coupled (q, a) pairs and the sequence
sets {n**(-alpha)} U {0}; compute exact diameter-cover, ball-cover and
packing counts; estimate box-counting and local (Assouad-type) dimensions;
and machine-verify the product cover-count bounds, the zoom witnesses and
the local-uniformity factor at desk scale.
"""

from .errors import InvalidInputError, UndecidableError
from .numerics import (
    EQUAL,
    GREATER,
    LESS,
    Rational,
    ScalePower,
    cmp,
    format_rational,
    parse_rational,
    pow_scale,
    reduce,
)
from .setlab import (
    ATermRule,
    CantorSet,
    ConstantRule,
    CustomRule,
    GeneratorSequence,
    IntervalNode,
    Lemma44Rule,
    Lemma45Rule,
    PairSpec,
    SequenceSet,
    SequenceSetSpec,
    generators_from_pair,
    interval,
    lemma44_sequence,
    lemma45_sequence,
    next_point,
    sequence_set_points,
)
from .covers import (
    CoverProfile,
    FinitePointSet,
    ProfileEntry,
    WindowStat,
    ball_cover_count,
    brute_force_min_cover,
    canonical_window_count,
    chain_violations,
    compute_profile,
    local_cover_count,
    min_cover_count,
    packing_count,
    sequence_set_cover,
    window_stats,
)
from .dims import (
    AssouadReport,
    AssouadWindow,
    AttainmentReport,
    DimEstimate,
    EquiHomReport,
    WitnessEntry,
    assouad_lower_witness,
    assouad_windows,
    attainment_check,
    box_dims_from_exponents,
    box_dims_from_generators,
    box_dims_from_profile,
    equihom_check,
    product_bracket,
    self_product_dims,
    self_product_local_witness,
    theorem42_ratios,
    verify_product_theorem,
)

__version__ = "0.1.0"
