"""Exact hyperbolic polynomials, derivative cones and spectrahedral representations."""

from .errors import (
    DimensionError,
    HyperconeError,
    InputError,
    NotHomogeneousError,
    NotRealRootedError,
    OrthantError,
    PreconditionError,
    SearchLimitError,
)
from .hyperbolicity import (
    HyperbolicContext,
    HyperbolicityVerdict,
    check_hyperbolic,
    eigenvalue_poly,
    in_cone,
    in_derivative_cone,
)
from .matroid import (
    RankFunction,
    UniformSpec,
    equals_uniform,
    gurvits_rank,
    is_polymatroid,
    is_unimodular_realization,
    search_unimodular,
)
from .poly import (
    LinearForm,
    Polynomial,
    elementary_symmetric,
    evaluate,
    homogeneous_degree,
    polar,
    product_of_forms,
    restrict_to_line,
    ring_ops,
)
from .realroots import (
    UnivariatePolynomial,
    all_roots_nonneg,
    is_real_rooted,
    mult_at_zero,
    sturm_count,
)
from .spectra import (
    RealizationMatrix,
    SymmetricMatrix,
    SymmetricPencil,
    e2_arrowhead,
    is_psd,
    pencil_det,
    pencil_eval,
    realization_pencil,
    renegar_pencil,
    verify_theorem1,
)

__version__ = "0.1.0"
