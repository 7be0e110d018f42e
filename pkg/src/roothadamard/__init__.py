"""Root-Hadamard transforms, root correlations and complementarity with exact cyclotomic arithmetic."""
from .complementarity import (
    ComplementarityVerdict,
    ComponentReport,
    PNReport,
    complementary_iff_P_and_N,
    is_complementary_set,
    is_crosscomplementary,
    is_function_complementary_set,
    is_la_complementary_set,
    is_la_crosscomplementary,
    verify_component_complementarity,
)
from .correlations import (
    CorrelationProfile,
    LaurentPoly,
    aperiodic_autocorr,
    aperiodic_crosscorr,
    correlation_from_spectrum,
    crosscorrelation,
    function_negaperiodic_correlation,
    function_periodic_correlation,
    golay_poly_residue,
    nega_crosscorrelation,
    negaperiodic_autocorr,
    negaperiodic_crosscorr,
    periodic_autocorr,
    periodic_crosscorr,
    root_autocorrelation,
    root_correlation_profile,
    root_crosscorrelation,
    sequence_profile,
    shift_matrix,
    spectral_profile,
)
from .cyclo import CycElement, zeta_pow
from .gbf import (
    AnfPolynomial,
    BooleanFunction,
    GeneralizedBooleanFunction,
    anf_from_truth_table,
    component_function,
    compose_components,
    decompose_components,
    derivative,
    elementary_symmetric,
    iota,
    parse_function,
    truth_table_from_anf,
)
from .search import ProfileTarget, SearchSpace, search_golay_pairs, search_profile_match, search_root_bent
from .transforms import (
    Block,
    RootSpec,
    SpectralClass,
    Spectrum,
    binary_root_transform,
    classify_spectrum,
    component_synthesis,
    component_synthesis_spectrum,
    generalized_walsh,
    invert_root_hadamard,
    is_flat,
    naive_root_hadamard,
    nega_hadamard,
    nega_to_walsh_lift,
    root_hadamard,
    root_shift_function,
    walsh_hadamard,
)

__version__ = "0.1.0"
