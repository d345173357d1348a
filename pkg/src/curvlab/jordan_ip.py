"""Skew-symmetric curvature operator, Grassmannian sampling, and Jordan-IP checks.

For an oriented basis {x, y} of a non-degenerate 2-plane pi, the
skew-symmetric curvature operator is

    R(pi) = |(x,x)(y,y) - (x,y)^2|^(-1/2) R(x, y),

a skew-adjoint endomorphism independent of the oriented basis choice.  A
tensor is Jordan-IP on a family of planes when the Jordan normal form of
R(pi) does not move across the family; sampling with a fixed seed replaces
quantification over the Grassmannian, and failures of the closed, continuous
conditions surface generically under random draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .complex_structures import ComplexStructure, QuaternionStructure
from .curvature import CurvatureTensor, apply_pair, combine, from_self_adjoint, from_skew_adjoint
from .pseudo_linalg import (
    BilinearSpace,
    JordanInvariants,
    PlaneClass,
    _check_vector,
    classify_plane,
    inner,
    jordan_equivalent,
    jordan_invariants,
    numeric_rank,
)

# Eigenvalue clouds of nilpotent Jordan blocks scatter like sqrt(machine eps)
# times the operator norm (about 3e-8), while the eigenvalue gaps of interest
# are order 0.1 and larger, so the operator-level checks cluster at 1e-6.
OPERATOR_TOL = 1e-6


class SpectrumStructureError(ValueError):
    """The composition J R(pi) lacks the eigenstructure of a complex-linear
    self-adjoint map: an odd real multiplicity, a non-J-invariant eigenspace,
    or a defective eigenvalue.  Indicates the tensor is not almost complex."""


@dataclass(frozen=True, eq=False)
class OrientedPlane:
    """An ordered spanning pair with its causal type.

    is_complex_line marks planes of the form span{x, Jx} for the designated
    complex structure; those are never of mixed type.
    """

    x: np.ndarray
    y: np.ndarray
    plane_class: PlaneClass
    is_complex_line: bool = False


def complex_line(J: ComplexStructure, x: np.ndarray) -> OrientedPlane:
    """The plane span{x, Jx}; requires x non-null, and is spacelike or timelike
    according to the sign of (x, x)."""
    space = J.space
    x = _check_vector(space, x, "x")
    t = inner(space, x, x)
    if abs(t) <= space.tol * float(x @ x):
        raise ValueError(f"x is null to tolerance ((x,x) = {t:.3e}); the span would be degenerate")
    cls = PlaneClass.SPACELIKE if t > 0 else PlaneClass.TIMELIKE
    return OrientedPlane(x, J.J @ x, cls, is_complex_line=True)


def _real_plane_realizable(space: BilinearSpace, causal_type: PlaneClass) -> bool:
    if causal_type is PlaneClass.SPACELIKE:
        return space.q >= 2
    if causal_type is PlaneClass.TIMELIKE:
        return space.p >= 2
    if causal_type is PlaneClass.MIXED:
        return space.p >= 1 and space.q >= 1
    return False


def sample_real_planes(
    space: BilinearSpace,
    causal_type: PlaneClass,
    n: int,
    seed: int = 0,
) -> list[OrientedPlane]:
    """n oriented 2-planes of the requested causal type, by seeded rejection
    sampling of standard-normal spanning pairs."""
    if n < 1:
        raise ValueError("sample count must be at least 1")
    if not _real_plane_realizable(space, causal_type):
        raise ValueError(
            f"no {causal_type.value} 2-plane exists in signature ({space.p}, {space.q})"
        )
    rng = np.random.default_rng(seed)
    planes: list[OrientedPlane] = []
    draws = 0
    while len(planes) < n:
        draws += 1
        if draws > 1000 * n:
            raise RuntimeError(f"rejection budget exceeded sampling {causal_type.value} planes")
        x = rng.standard_normal(space.m)
        y = rng.standard_normal(space.m)
        if classify_plane(space, x, y) is causal_type:
            planes.append(OrientedPlane(x, y, causal_type))
    return planes


def sample_complex_lines(
    J: ComplexStructure,
    causal_type: PlaneClass,
    n: int,
    seed: int = 0,
) -> list[OrientedPlane]:
    """n non-degenerate complex lines span{x, Jx} of the requested causal type.

    x is drawn standard-normal and rescaled to |(x, x)| = 1.  Mixed lines do
    not exist: (Jx, Jx) = (x, x), so a complex line inherits the causal type
    of x.
    """
    if n < 1:
        raise ValueError("sample count must be at least 1")
    space = J.space
    if causal_type is PlaneClass.SPACELIKE:
        realizable = space.q >= 2
    elif causal_type is PlaneClass.TIMELIKE:
        realizable = space.p >= 2
    else:
        raise ValueError(f"complex lines are never {causal_type.value}")
    if not realizable:
        raise ValueError(
            f"no {causal_type.value} complex line exists in signature ({space.p}, {space.q})"
        )
    want_positive = causal_type is PlaneClass.SPACELIKE
    rng = np.random.default_rng(seed)
    planes: list[OrientedPlane] = []
    draws = 0
    while len(planes) < n:
        draws += 1
        if draws > 1000 * n:
            raise RuntimeError(f"rejection budget exceeded sampling {causal_type.value} lines")
        x = rng.standard_normal(space.m)
        t = inner(space, x, x)
        if abs(t) <= space.tol * float(x @ x) or (t > 0) != want_positive:
            continue
        planes.append(complex_line(J, x / np.sqrt(abs(t))))
    return planes


def curvature_operator(tensor: CurvatureTensor, plane: OrientedPlane) -> np.ndarray:
    """R(pi): the pair contraction R(x, y) normalized by the plane's Gram determinant."""
    space = tensor.space
    x, y = plane.x, plane.y
    xx = inner(space, x, x)
    xy = inner(space, x, y)
    yy = inner(space, y, y)
    det = xx * yy - xy * xy
    scale = float(x @ x) * float(y @ y)
    if abs(det) <= space.tol * scale:
        raise ValueError(f"degenerate plane: restricted Gram determinant {det:.3e}")
    return apply_pair(tensor, x, y) / np.sqrt(abs(det))


@dataclass(frozen=True)
class AlmostComplexReport:
    passed: bool
    max_commutator: float
    witness: OrientedPlane | None


def check_almost_complex(
    tensor: CurvatureTensor,
    J: ComplexStructure,
    planes: list[OrientedPlane],
    tol: float = 1e-10,
) -> AlmostComplexReport:
    """Whether J R(pi) = R(pi) J on every given complex line."""
    worst = 0.0
    witness: OrientedPlane | None = None
    for plane in planes:
        if not plane.is_complex_line:
            raise ValueError("check_almost_complex requires complex lines")
        op = curvature_operator(tensor, plane)
        comm = float(np.max(np.abs(J.J @ op - op @ J.J)))
        if comm > worst:
            worst = comm
            witness = plane
    return AlmostComplexReport(worst <= tol, worst, witness if worst > tol else None)


@dataclass(frozen=True)
class JordanIPReport:
    """Constancy verdict for R(pi) over sampled non-degenerate complex lines."""

    constant: bool
    rank: int | None
    invariants_by_type: dict[PlaneClass, JordanInvariants]
    witness: tuple[OrientedPlane, OrientedPlane] | None
    seed: int
    samples_per_type: int


def check_jordan_ip(
    tensor: CurvatureTensor,
    J: ComplexStructure,
    n: int = 100,
    seed: int = 0,
    tol: float = OPERATOR_TOL,
) -> JordanIPReport:
    """Sample complex lines (spacelike, plus timelike when p >= 2) and test
    whether all curvature operators share one Jordan normal form.

    Comparisons are anchored to the first sampled line; equivalence is
    transitive, so pairwise agreement follows.
    """
    space = tensor.space
    planes = sample_complex_lines(J, PlaneClass.SPACELIKE, n, seed)
    if space.p >= 2:
        planes += sample_complex_lines(J, PlaneClass.TIMELIKE, n, seed + 1)

    anchor_plane = planes[0]
    anchor = jordan_invariants(curvature_operator(tensor, anchor_plane), tol)
    invariants_by_type: dict[PlaneClass, JordanInvariants] = {anchor_plane.plane_class: anchor}
    constant = True
    witness: tuple[OrientedPlane, OrientedPlane] | None = None
    for plane in planes[1:]:
        inv = jordan_invariants(curvature_operator(tensor, plane), tol)
        invariants_by_type.setdefault(plane.plane_class, inv)
        if constant and not jordan_equivalent(anchor, inv, tol):
            constant = False
            witness = (anchor_plane, plane)
    return JordanIPReport(
        constant=constant,
        rank=anchor.total_rank if constant else None,
        invariants_by_type=invariants_by_type,
        witness=witness,
        seed=seed,
        samples_per_type=n,
    )


@dataclass(frozen=True)
class RealJordanIPReport:
    """Per-causal-type constancy of R(pi) over real oriented 2-planes.

    The Jordan form may legitimately differ between types; the rank may not,
    so rank_type_independent is reported alongside.
    """

    constant_by_type: dict[PlaneClass, bool]
    rank_by_type: dict[PlaneClass, int]
    invariants_by_type: dict[PlaneClass, JordanInvariants]
    witnesses: dict[PlaneClass, tuple[OrientedPlane, OrientedPlane]]
    rank_type_independent: bool
    seed: int
    samples_per_type: int

    @property
    def constant(self) -> bool:
        return all(self.constant_by_type.values())


def check_jordan_ip_real(
    tensor: CurvatureTensor,
    n: int = 100,
    seed: int = 0,
    tol: float = OPERATOR_TOL,
    types: list[PlaneClass] | None = None,
) -> RealJordanIPReport:
    """Jordan constancy over real oriented 2-planes, independently per causal type."""
    space = tensor.space
    if types is None:
        types = [
            t
            for t in (PlaneClass.SPACELIKE, PlaneClass.TIMELIKE, PlaneClass.MIXED)
            if _real_plane_realizable(space, t)
        ]
    constant_by_type: dict[PlaneClass, bool] = {}
    rank_by_type: dict[PlaneClass, int] = {}
    invariants_by_type: dict[PlaneClass, JordanInvariants] = {}
    witnesses: dict[PlaneClass, tuple[OrientedPlane, OrientedPlane]] = {}
    for offset, causal_type in enumerate(types):
        planes = sample_real_planes(space, causal_type, n, seed + offset)
        anchor = jordan_invariants(curvature_operator(tensor, planes[0]), tol)
        invariants_by_type[causal_type] = anchor
        rank_by_type[causal_type] = anchor.total_rank
        constant = True
        for plane in planes[1:]:
            inv = jordan_invariants(curvature_operator(tensor, plane), tol)
            if not jordan_equivalent(anchor, inv, tol):
                constant = False
                witnesses[causal_type] = (planes[0], plane)
                break
        constant_by_type[causal_type] = constant
    return RealJordanIPReport(
        constant_by_type=constant_by_type,
        rank_by_type=rank_by_type,
        invariants_by_type=invariants_by_type,
        witnesses=witnesses,
        rank_type_independent=len(set(rank_by_type.values())) == 1,
        seed=seed,
        samples_per_type=n,
    )


@dataclass(frozen=True)
class SpectrumSpec:
    """Eigenvalues of J R(pi) with complex multiplicities, ordered by
    multiplicity (descending) then eigenvalue.

    Complex multiplicity counts J-invariant eigenplanes: half the real
    algebraic multiplicity.  The real dimension realized is 2 * sum(mu).
    """

    eigenvalues: tuple[tuple[float, int], ...]

    def __post_init__(self) -> None:
        if not self.eigenvalues:
            raise ValueError("a spectrum needs at least one eigenvalue")
        values = [lam for lam, _ in self.eigenvalues]
        if len(set(values)) != len(values):
            raise ValueError(f"eigenvalues must be pairwise distinct, got {values}")
        if any(mu < 1 for _, mu in self.eigenvalues):
            raise ValueError("multiplicities must be positive")
        # Stable sort: multiplicities descend, ties keep the listed order, so a
        # caller's designation of which mu = 1 eigenvalue plays which role in
        # solve_constants survives canonicalization.
        canon = tuple(sorted(self.eigenvalues, key=lambda e: -e[1]))
        object.__setattr__(self, "eigenvalues", canon)

    @property
    def dimension(self) -> int:
        return 2 * sum(mu for _, mu in self.eigenvalues)

    def matches(self, other: "SpectrumSpec", tol: float) -> bool:
        """Multiset agreement of (eigenvalue, multiplicity) pairs within tol."""
        if len(self.eigenvalues) != len(other.eigenvalues):
            return False
        remaining = list(other.eigenvalues)
        for lam, mu in self.eigenvalues:
            best = min(
                (e for e in remaining if e[1] == mu),
                key=lambda e: abs(e[0] - lam),
                default=None,
            )
            if best is None or abs(best[0] - lam) > tol:
                return False
            remaining.remove(best)
        return True


def spectrum_of_JR(
    tensor: CurvatureTensor,
    J: ComplexStructure,
    plane: OrientedPlane,
    tol: float = OPERATOR_TOL,
) -> SpectrumSpec:
    """Eigenvalues and complex multiplicities of the composition J R(pi).

    Raises SpectrumStructureError when the eigenstructure is incompatible
    with an almost complex tensor: R(pi) not commuting with J, eigenvalues
    off the real line, odd real multiplicities, defective eigenvalues, or
    eigenspaces not invariant under J.
    """
    if not plane.is_complex_line:
        raise ValueError("spectrum_of_JR requires a non-degenerate complex line")
    op = curvature_operator(tensor, plane)
    j = J.J
    k = j @ op
    m = k.shape[0]
    svals = np.linalg.svd(k, compute_uv=False)
    op_scale = float(svals[0]) if svals.size else 0.0
    threshold = tol * max(1.0, op_scale)

    comm = float(np.max(np.abs(j @ op - op @ j)))
    if comm > threshold:
        raise SpectrumStructureError(
            f"R(pi) does not commute with J (residual {comm:.3e}); tensor is not almost complex"
        )

    evals = np.linalg.eigvals(k)
    worst_imag = float(np.max(np.abs(evals.imag)))
    if worst_imag > threshold:
        raise SpectrumStructureError(f"non-real eigenvalue of J R(pi), imaginary part {worst_imag:.3e}")

    reals = np.sort(evals.real)
    clusters: list[list[float]] = [[float(reals[0])]]
    for v in reals[1:]:
        if v - clusters[-1][-1] <= threshold:
            clusters[-1].append(float(v))
        else:
            clusters.append([float(v)])

    pairs: list[tuple[float, int]] = []
    for group in clusters:
        lam = float(np.mean(group))
        mult = len(group)
        if mult % 2 != 0:
            raise SpectrumStructureError(
                f"eigenvalue {lam:.6g} has odd real multiplicity {mult}"
            )
        shifted = k - lam * np.eye(m)
        u, s, vt = np.linalg.svd(shifted)
        cutoff = tol * max(1.0, float(s[0]))
        basis = vt[s <= cutoff].T if np.any(s <= cutoff) else vt[m:].T
        if basis.shape[1] != mult:
            raise SpectrumStructureError(
                f"eigenvalue {lam:.6g} is defective: eigenspace dimension "
                f"{basis.shape[1]} != algebraic multiplicity {mult}"
            )
        jb = j @ basis
        residual = float(np.max(np.abs(jb - basis @ (basis.T @ jb))))
        if residual > threshold:
            raise SpectrumStructureError(
                f"eigenspace of {lam:.6g} is not J-invariant (residual {residual:.3e})"
            )
        pairs.append((lam, mult // 2))
    return SpectrumSpec(tuple(pairs))


class SpectrumModel(Enum):
    COMPLEX_PAIR = "complex_pair"
    QUATERNIONIC = "quaternionic"


def solve_constants(spec: SpectrumSpec, model: SpectrumModel) -> tuple[float, ...]:
    """Coefficients realizing a requested J R(pi) spectrum.

    COMPLEX_PAIR builds c0 R_Id + c1 R_J with the relations
    lambda_1 = c0 + 3 c1 (multiplicity 1) and lambda_0 = 2 c1; QUATERNIONIC
    builds c0 R_Id + c1 R_i + c2 R_j + c3 R_k with additionally
    lambda_2 = 2 c1 - c2 - c3.  The sum c2 + c3 is underdetermined; c3 = 0 is
    the canonical resolution so outputs are reproducible.  lambda_0 is the
    first listed eigenvalue (the high-multiplicity one when multiplicities
    differ).
    """
    ev = spec.eigenvalues
    if model is SpectrumModel.COMPLEX_PAIR:
        if len(ev) != 2:
            raise ValueError(f"complex pair spectra have exactly two eigenvalues, got {len(ev)}")
        (lam0, _), (lam1, mu1) = ev
        if mu1 != 1:
            raise ValueError(f"the low-multiplicity eigenvalue must have mu = 1, got {mu1}")
        c1 = lam0 / 2.0
        c0 = lam1 - 3.0 * c1
        return (c0, c1)
    if model is SpectrumModel.QUATERNIONIC:
        if spec.dimension % 4 != 0:
            raise ValueError(
                f"quaternionic spectra need dimension divisible by 4, got {spec.dimension}"
            )
        if len(ev) == 2:
            (lam0, _), (lam1, mu1) = ev
            if mu1 > 2:
                raise ValueError(f"second multiplicity must be at most 2, got {mu1}")
            c1 = lam0 / 2.0
            c0 = lam1 - 3.0 * c1
            c2 = (2.0 * c1 - lam1) if mu1 == 2 else 0.0
            return (c0, c1, c2, 0.0)
        if len(ev) == 3:
            (lam0, _), (lam1, mu1), (lam2, mu2) = ev
            if mu1 != 1 or mu2 != 1:
                raise ValueError(
                    f"three-eigenvalue spectra need trailing multiplicities 1, got {mu1}, {mu2}"
                )
            c1 = lam0 / 2.0
            c0 = lam1 - 3.0 * c1
            c2 = 2.0 * c1 - lam2
            return (c0, c1, c2, 0.0)
        raise ValueError(f"quaternionic spectra have two or three eigenvalues, got {len(ev)}")
    raise ValueError(f"unknown model {model!r}")


def build_complex_pair_tensor(
    J: ComplexStructure, c0: float, c1: float
) -> CurvatureTensor:
    """c0 R_Id + c1 R_J over the space carried by J."""
    space = J.space
    return combine(
        [
            (c0, from_self_adjoint(space, np.eye(space.m))),
            (c1, from_skew_adjoint(space, J.J)),
        ]
    )


def build_quaternionic_tensor(
    quat: QuaternionStructure, c0: float, c1: float, c2: float, c3: float
) -> CurvatureTensor:
    """c0 R_Id + c1 R_i + c2 R_j + c3 R_k over the space carried by the structure."""
    space = quat.space
    return combine(
        [
            (c0, from_self_adjoint(space, np.eye(space.m))),
            (c1, from_skew_adjoint(space, quat.i)),
            (c2, from_skew_adjoint(space, quat.j)),
            (c3, from_skew_adjoint(space, quat.k)),
        ]
    )
