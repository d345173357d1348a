"""curvlab: a numerical laboratory for algebraic curvature tensors on R^(p,q).

Builds curvature tensors from (skew-)self-adjoint generators, evaluates the
skew-symmetric curvature operator on 2-planes and complex lines, extracts
Jordan normal form invariants, and machine-checks the curvature identities
(antisymmetry, pair symmetry, first Bianchi, Hermitian invariance, the Gray
symmetry) together with Jordan-IP constancy over sampled Grassmannians.
"""

from .pseudo_linalg import (
    DEFAULT_TOL,
    BilinearSpace,
    JordanInvariants,
    PlaneClass,
    adjoint,
    classify_plane,
    inner,
    jordan_equivalent,
    jordan_invariants,
    numeric_rank,
)
from .complex_structures import (
    AdmissibilityReport,
    AdmissibleClass,
    ComplexStructure,
    PairReport,
    QuaternionStructure,
    SquareType,
    check_admissible,
    check_admissible_pair,
    classify_square,
    nilpotent_null_pair,
    nilpotent_null_pair_partner,
    standard_complex_structure,
    standard_quaternion_structure,
)
from .curvature import (
    CurvatureTensor,
    InvarianceReport,
    SymmetryReport,
    apply_pair,
    check_gray_identity,
    check_J_invariance,
    check_symmetries,
    combine,
    from_self_adjoint,
    from_skew_adjoint,
    projected_generator,
    pullback,
    random_algebraic_curvature_tensor,
)
from .jordan_ip import (
    OPERATOR_TOL,
    AlmostComplexReport,
    JordanIPReport,
    OrientedPlane,
    RealJordanIPReport,
    SpectrumModel,
    SpectrumSpec,
    SpectrumStructureError,
    build_complex_pair_tensor,
    build_quaternionic_tensor,
    check_almost_complex,
    check_jordan_ip,
    check_jordan_ip_real,
    complex_line,
    curvature_operator,
    sample_complex_lines,
    sample_real_planes,
    solve_constants,
    spectrum_of_JR,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "OPERATOR_TOL",
    "BilinearSpace",
    "PlaneClass",
    "JordanInvariants",
    "inner",
    "adjoint",
    "classify_plane",
    "numeric_rank",
    "jordan_invariants",
    "jordan_equivalent",
    "ComplexStructure",
    "QuaternionStructure",
    "standard_complex_structure",
    "standard_quaternion_structure",
    "nilpotent_null_pair",
    "nilpotent_null_pair_partner",
    "AdmissibleClass",
    "SquareType",
    "AdmissibilityReport",
    "PairReport",
    "classify_square",
    "check_admissible",
    "check_admissible_pair",
    "CurvatureTensor",
    "SymmetryReport",
    "InvarianceReport",
    "from_self_adjoint",
    "from_skew_adjoint",
    "combine",
    "check_symmetries",
    "apply_pair",
    "pullback",
    "check_J_invariance",
    "check_gray_identity",
    "random_algebraic_curvature_tensor",
    "projected_generator",
    "OrientedPlane",
    "complex_line",
    "sample_real_planes",
    "sample_complex_lines",
    "curvature_operator",
    "AlmostComplexReport",
    "check_almost_complex",
    "JordanIPReport",
    "check_jordan_ip",
    "RealJordanIPReport",
    "check_jordan_ip_real",
    "SpectrumSpec",
    "SpectrumModel",
    "SpectrumStructureError",
    "spectrum_of_JR",
    "solve_constants",
    "build_complex_pair_tensor",
    "build_quaternionic_tensor",
    "__version__",
]
