"""Symbolic powers of ideals of points on an irreducible conic: exact
GF(p) oracles, reverse-lex generic initial staircases, minimal free
resolution shift data, and the limiting Newton polytope."""

from .errors import (
    CharacteristicHazard,
    ConicGinError,
    DegenerateInput,
    DomainError,
    EmptyTable,
    GenericityFailure,
    MalformedHVector,
    UnsupportedCase,
    ZeroInverse,
)
from .fatpoints import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    FatPointConfig,
    condition_matrix,
    conic_points,
    degree_cap,
    hilbert_function,
    quotient_hilbert_function,
    symbolic_power_basis,
    uniform_conic_config,
)
from .ffield import FFMatrix, ffmatrix, is_prime, modular_inverse, row_reduce
from .ginlab import (
    ShapeCertificate,
    artinian_h_vector,
    generic_gin,
    hilbert_staircase,
    shape_certificate,
    staircase_from_hilbert,
    staircase_product_contained,
)
from .monomials import (
    Monomial,
    degrevlex_compare,
    degrevlex_key,
    ideal_contains,
    is_strongly_stable,
    minimal_generators,
    monomials_of_degree,
)
from .polytope import (
    ConvergenceRow,
    LimitShape,
    StaircasePolytope,
    convergence_report,
    covolume,
    gamma_product_check,
    limit_figure_svg,
    limit_shape,
    report_csv,
    scaled_intercepts,
)
from .resolutions import (
    BettiTable,
    base_resolution,
    betti_from_json_dict,
    betti_to_json_dict,
    catalisano_resolve,
    catalisano_step,
    closed_form_resolution,
    consecutive_cancellation_reachable,
    extremal_shifts,
    hf_from_betti,
    hilbert_burch_of_gin,
    predicted_extremal_shifts,
)
from .staircase import GinStaircase

__version__ = "0.1.0"
