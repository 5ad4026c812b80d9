"""Low-coherence tight frames from cyclic and generalized dihedral groups.

Build harmonic frames seeded by multiplicative subgroups of (Z/nZ)^x,
their direct-product and dihedral relatives, measure coherence and
tightness, and evaluate the closed-form coherence bounds that the group
structure provides.
"""

from .analysis import (
    BoundSet,
    DominanceReport,
    InnerProductSpectrum,
    R2Branch,
    TightnessReport,
    WSpectrum,
    beta_value,
    bound_set,
    cluster_magnitudes,
    coherence,
    coherence_upper_bound,
    coset_inner_products,
    dihedral_distinct_count_bound,
    dihedral_dominance,
    dihedral_spectrum,
    fourier_pairing,
    frame_potential,
    gram,
    group_spectrum,
    is_equiangular,
    odd_m_coherence_upper_bound,
    prime_group_spectrum,
    r2_exact_coherence,
    r3_coherence_bounds,
    r3_product_identity_residual,
    sqrt_r_bound,
    tightness,
    w_spectrum,
    welch_bound,
)
from .baselines import (
    BaselineSpec,
    gaussian_frame,
    random_fourier_frame,
    sample_fourier_exponents,
)
from .frames import (
    AbelianFrameSpec,
    CyclicFrameSpec,
    DihedralFrameSpec,
    FrameMatrix,
    ZCSequence,
    build_abelian_frame,
    build_cyclic_frame,
    build_dihedral_frame,
    build_prime_group_frame,
    dihedral_subgroup_spec,
    zadoff_chu,
)
from .frameio import FrameFormatError, format_frame, parse_frame, read_frame, write_frame
from .numtheory import (
    CheckResult,
    CosetTable,
    DifferenceCounts,
    GroupContext,
    Subgroup,
    ZERO_COSET,
    coset_table,
    difference_counts,
    difference_vector,
    find_generator,
    is_difference_set,
    is_prime,
    multiplicative_order,
    primes_up_to,
    subgroup_of_order,
    translation_degree,
    verify_translation_identities,
)

__version__ = "0.1.0"
