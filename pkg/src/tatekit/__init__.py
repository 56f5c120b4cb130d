"""Exact Tate (hyper)cohomology over Z[(Z/p)^r].

Everything is integer arithmetic end to end: group-ring matrices expand to
integer block matrices, homology and cohomology come out of Smith/Hermite
reduction, and every higher-level construction (complete resolutions,
syzygies, glued mapping cones, exponent certificates) is re-verified at
build time.
"""

from ._backend import BACKEND
from .errors import (
    FiltrationInvalid,
    GapViolation,
    InfiniteLength,
    InvalidPresentation,
    LiftObstruction,
    NoSolution,
    NotConcentrated,
    NotConnected,
    NotNonnegative,
    SublatticeViolation,
    TatekitError,
    WindowViolation,
)
from .exactlin import (
    INFINITE,
    AbelianInvariants,
    IntMatrix,
    cokernel_invariants,
    exponent,
    kernel_basis,
    lattice_basis,
    quotient_invariants,
    rank,
    smith_diagonal,
    smith_normal_form,
    solve_in_lattice,
    solve_preimage,
)
from .gallery import lens_complex, product_complex, random_free_complex
from .groupring import (
    ElementaryAbelianGroup,
    GroupRingElement,
    GroupRingMatrix,
    antipode,
    decode_columns,
    expand_matrix,
    full_norm,
    norm_element,
)
from .modpres import (
    FreeChainComplex,
    ModulePresentation,
    PresentedCochainComplex,
    dual_complex,
    free_module_presentation,
    homology,
    homology_module,
    homology_range,
    require_valid,
    tensor_complex,
    trivial_module,
    validate,
    zero_module,
)
from .resolve import (
    CompleteResolutionWindow,
    complete_resolution,
    lift_chain_map,
    periodic_complete_resolution,
    resolution_step,
    syzygy,
)
from .surgery import (
    BrowderReport,
    FiltrationVerdict,
    GluingCertificate,
    RowTable,
    browder_check,
    dimension_rows,
    filtration_exponent_check,
    glue,
    glue_rows,
)
from .tate import (
    CohomologyTable,
    ConcentrationComparison,
    concentrated_check,
    exponent_profile,
    suspension,
    tate_cohomology,
    tate_cohomology_range,
    tate_hypercohomology,
    tate_hypercohomology_range,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INFINITE",
    "AbelianInvariants",
    "BrowderReport",
    "CohomologyTable",
    "CompleteResolutionWindow",
    "ConcentrationComparison",
    "ElementaryAbelianGroup",
    "FiltrationInvalid",
    "FiltrationVerdict",
    "FreeChainComplex",
    "GapViolation",
    "GluingCertificate",
    "GroupRingElement",
    "GroupRingMatrix",
    "InfiniteLength",
    "IntMatrix",
    "InvalidPresentation",
    "LiftObstruction",
    "ModulePresentation",
    "NoSolution",
    "NotConcentrated",
    "NotConnected",
    "NotNonnegative",
    "PresentedCochainComplex",
    "RowTable",
    "SublatticeViolation",
    "TatekitError",
    "WindowViolation",
    "antipode",
    "browder_check",
    "cokernel_invariants",
    "complete_resolution",
    "concentrated_check",
    "decode_columns",
    "dimension_rows",
    "dual_complex",
    "expand_matrix",
    "exponent",
    "exponent_profile",
    "filtration_exponent_check",
    "free_module_presentation",
    "full_norm",
    "glue",
    "glue_rows",
    "homology",
    "homology_module",
    "homology_range",
    "kernel_basis",
    "lattice_basis",
    "lens_complex",
    "lift_chain_map",
    "norm_element",
    "periodic_complete_resolution",
    "product_complex",
    "quotient_invariants",
    "random_free_complex",
    "rank",
    "require_valid",
    "resolution_step",
    "smith_diagonal",
    "smith_normal_form",
    "solve_in_lattice",
    "solve_preimage",
    "suspension",
    "syzygy",
    "tate_cohomology",
    "tate_cohomology_range",
    "tate_hypercohomology",
    "tate_hypercohomology_range",
    "tensor_complex",
    "trivial_module",
    "validate",
    "zero_module",
]
