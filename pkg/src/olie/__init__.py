"""Exact computations with anticommutative algebras whose Jacobian is
controlled by a skew bilinear form."""

from .algebra import (
    AlmostAbelianResult,
    AnticommAlgebra,
    OmegaAlgebra,
    SimplicityVerdict,
    Violation,
)
from .derivations import (
    AlphaLambdaDerivation,
    al_derivation_space,
    alpha0_bracket,
    check_al_derivation,
    ker_alpha_analysis,
)
from .extensions import (
    Cochain,
    DeformationSolution,
    adjoint_maps,
    check_representation,
    cochain_differential,
    extend_codim1,
    extension_from_cocycle,
    h2_dimension,
    infinitesimal_deformations,
    minus_algebra,
    omega_assoc_space,
    one_dim_module,
    semidirect,
)
from .fields import GF, QQ, PrimeField, Rationals
from .identities import (
    Identity,
    builtin,
    builtin_names,
    evaluate,
    evaluate_on_vectors,
    find_counterexample,
    holds,
    parse_identity,
)
from .linalg import AffineSolution, Subspace
from .structure import (
    ClassificationVerdict,
    RootDecomposition,
    alpha_vanishing_scan,
    binomial_identity_check,
    check_root_properties,
    classify,
    filtration,
    fitting_decomposition,
    root_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSolution",
    "AlmostAbelianResult",
    "AlphaLambdaDerivation",
    "AnticommAlgebra",
    "ClassificationVerdict",
    "Cochain",
    "DeformationSolution",
    "GF",
    "Identity",
    "OmegaAlgebra",
    "PrimeField",
    "QQ",
    "Rationals",
    "RootDecomposition",
    "SimplicityVerdict",
    "Subspace",
    "Violation",
    "adjoint_maps",
    "al_derivation_space",
    "alpha0_bracket",
    "alpha_vanishing_scan",
    "binomial_identity_check",
    "builtin",
    "builtin_names",
    "check_al_derivation",
    "check_representation",
    "check_root_properties",
    "classify",
    "cochain_differential",
    "evaluate",
    "evaluate_on_vectors",
    "extend_codim1",
    "extension_from_cocycle",
    "filtration",
    "find_counterexample",
    "fitting_decomposition",
    "h2_dimension",
    "holds",
    "infinitesimal_deformations",
    "ker_alpha_analysis",
    "minus_algebra",
    "omega_assoc_space",
    "one_dim_module",
    "parse_identity",
    "root_decomposition",
    "semidirect",
]
