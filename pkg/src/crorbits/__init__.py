"""Homogeneous CR orbits in complex hyperbolic space.

Numerical model of the solvable Iwasawa factor AN of the complex hyperbolic
isometry group, with orbit classification for connected subgroups, extrinsic
invariants (second fundamental form, mean curvature), congruence decisions,
and the moduli-space enumeration.  Every closed form is cross-checked against
an independent brute-force oracle; `crorbits verify` runs those checks.
"""

from .model import (
    AlgVec,
    GroupElement,
    J,
    adjoint,
    adjoint_series,
    bracket,
    group_inverse,
    group_multiply,
    inner,
    norm,
    rho,
)
from .subspaces import (
    CrDecomposition,
    Subspace,
    adjoint_subspace,
    cr_decompose,
    is_complex,
    is_subalgebra,
    is_totally_real,
    maximal_complex_subspace,
    orth_complement,
    orthonormalize,
    subspace_distance,
)
from .classify import (
    KINDS,
    InconsistencyError,
    OrbitCoords,
    OrbitQuery,
    OrbitReport,
    SpecError,
    SubalgebraSpec,
    build_subalgebra,
    classify_orbit,
    displaced_tangent_span,
    normalize_subalgebra,
    slice_coords,
    slice_reduce,
    structured_xi,
)
from .geometry import (
    ExtrinsicInvariants,
    closed_form_invariants,
    curvature,
    invariant_gaps,
    koszul_oracle,
    displaced_frame,
    levi_civita,
    orbit_invariants,
)
from .congruence import (
    CongruenceKey,
    ModuliComponent,
    congruence_key,
    congruent_orbits,
    invariant_map,
    invariant_map_inverse,
    invert_mean_sq_profile,
    mean_sq_profile,
    moduli_space,
    reduced_displacement,
    reduced_displacement_oracle,
)
from .verify import SUITE_NAMES, verify

__version__ = "0.1.0"

__all__ = [
    "AlgVec",
    "GroupElement",
    "J",
    "adjoint",
    "adjoint_series",
    "bracket",
    "group_inverse",
    "group_multiply",
    "inner",
    "norm",
    "rho",
    "CrDecomposition",
    "Subspace",
    "adjoint_subspace",
    "cr_decompose",
    "is_complex",
    "is_subalgebra",
    "is_totally_real",
    "maximal_complex_subspace",
    "orth_complement",
    "orthonormalize",
    "subspace_distance",
    "KINDS",
    "InconsistencyError",
    "OrbitCoords",
    "OrbitQuery",
    "OrbitReport",
    "SpecError",
    "SubalgebraSpec",
    "build_subalgebra",
    "classify_orbit",
    "displaced_tangent_span",
    "normalize_subalgebra",
    "slice_coords",
    "slice_reduce",
    "structured_xi",
    "ExtrinsicInvariants",
    "closed_form_invariants",
    "curvature",
    "invariant_gaps",
    "koszul_oracle",
    "displaced_frame",
    "levi_civita",
    "orbit_invariants",
    "CongruenceKey",
    "ModuliComponent",
    "congruence_key",
    "congruent_orbits",
    "invariant_map",
    "invariant_map_inverse",
    "invert_mean_sq_profile",
    "mean_sq_profile",
    "moduli_space",
    "reduced_displacement",
    "reduced_displacement_oracle",
    "SUITE_NAMES",
    "verify",
]
