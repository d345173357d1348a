"""Pseudo-Hermitian complex structures, quaternion structures, and admissibility.

The admissibility predicates gate which generators produce curvature tensors
whose skew-symmetric curvature operator has constant Jordan normal form on
complex lines: a single generator must be (skew-)self-adjoint with the right
commutation against J and square to +Id, -Id, or to zero with kernel equal to
range; a pair must additionally anti-commute through the inner product and,
in the doubly nilpotent case, map every non-degenerate complex line onto a
4-dimensional sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .pseudo_linalg import (
    BilinearSpace,
    _check_matrix,
    adjoint,
    inner,
    numeric_rank,
)

_ROT2 = np.array([[0.0, -1.0], [1.0, 0.0]])


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


@dataclass(frozen=True, eq=False)
class ComplexStructure:
    """An isometry J with J^2 = -Id, turning R^(p,q) into a complex vector space.

    Both p and q must be even: pairing a timelike with a spacelike direction
    can never be an isometry squaring to -Id.
    """

    space: BilinearSpace
    J: np.ndarray

    def __post_init__(self) -> None:
        J = _check_matrix(self.space, self.J, "J")
        object.__setattr__(self, "J", J)
        if self.space.p % 2 != 0 or self.space.q % 2 != 0:
            raise ValueError(
                f"signature ({self.space.p}, {self.space.q}) admits no pseudo-Hermitian "
                "complex structure; both counts must be even"
            )
        m = self.space.m
        tol = self.space.tol
        square_residual = _max_abs(J @ J + np.eye(m))
        if square_residual > tol * max(1.0, _max_abs(J) ** 2):
            raise ValueError(f"J^2 != -Id, max residual {square_residual:.3e}")
        isometry_residual = _max_abs(J.T @ self.space.gram @ J - self.space.gram)
        if isometry_residual > tol * max(1.0, _max_abs(J) ** 2):
            raise ValueError(f"J is not an isometry, max residual {isometry_residual:.3e}")


@dataclass(frozen=True, eq=False)
class QuaternionStructure:
    """Skew-adjoint isometries {i, j, k} with i^2 = j^2 = k^2 = -Id and ij = k.

    The sign convention is right-handed (ij = k, jk = i, ki = j); any
    consistent choice works, fixing one keeps golden values reproducible.
    """

    space: BilinearSpace
    i: np.ndarray
    j: np.ndarray
    k: np.ndarray

    def __post_init__(self) -> None:
        units = {}
        for name in ("i", "j", "k"):
            units[name] = _check_matrix(self.space, getattr(self, name), name)
            object.__setattr__(self, name, units[name])
        m, tol = self.space.m, self.space.tol
        eye = np.eye(m)
        checks = {
            "i^2 = -Id": units["i"] @ units["i"] + eye,
            "j^2 = -Id": units["j"] @ units["j"] + eye,
            "k^2 = -Id": units["k"] @ units["k"] + eye,
            "ij = k": units["i"] @ units["j"] - units["k"],
            "jk = i": units["j"] @ units["k"] - units["i"],
            "ki = j": units["k"] @ units["i"] - units["j"],
            "ji = -k": units["j"] @ units["i"] + units["k"],
        }
        for name, u in units.items():
            checks[f"{name} skew-adjoint"] = u + adjoint(self.space, u)
            checks[f"{name} isometry"] = u.T @ self.space.gram @ u - self.space.gram
        for label, residual in checks.items():
            r = _max_abs(residual)
            if r > tol * 10:
                raise ValueError(f"quaternion relation {label} fails, max residual {r:.3e}")

    @property
    def as_complex(self) -> ComplexStructure:
        """The complex structure J = i distinguished by the quaternion triple."""
        return ComplexStructure(self.space, self.i)


def standard_complex_structure(space: BilinearSpace) -> ComplexStructure:
    """Block-diagonal 2x2 rotations pairing coordinates of equal causal type."""
    if space.m % 2 != 0:
        raise ValueError(f"dimension {space.m} is odd, no complex structure exists")
    if space.p % 2 != 0:
        raise ValueError(
            f"timelike count p = {space.p} is odd; blocks must pair equal causal types"
        )
    J = np.zeros((space.m, space.m))
    for b in range(space.m // 2):
        J[2 * b : 2 * b + 2, 2 * b : 2 * b + 2] = _ROT2
    return ComplexStructure(space, J)


# Left multiplication by the quaternion units on H = span{1, i, j, k}.
_LEFT_I = np.array([
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
])
_LEFT_J = np.array([
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
])
_LEFT_K = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
])


def standard_quaternion_structure(space: BilinearSpace) -> QuaternionStructure:
    """4x4 blocks of quaternion left multiplication on each H-coordinate.

    Blocks sit on coordinate quadruples of equal causal type, so the timelike
    count must be 0 or divisible by 4.
    """
    if space.m % 4 != 0:
        raise ValueError(f"dimension {space.m} is not divisible by 4")
    if space.p % 4 != 0:
        raise ValueError(f"timelike count p = {space.p} must be 0 or divisible by 4")
    mats = {}
    for name, block in (("i", _LEFT_I), ("j", _LEFT_J), ("k", _LEFT_K)):
        u = np.zeros((space.m, space.m))
        for b in range(space.m // 4):
            u[4 * b : 4 * b + 4, 4 * b : 4 * b + 4] = block
        mats[name] = u
    return QuaternionStructure(space, mats["i"], mats["j"], mats["k"])


def nilpotent_null_pair(space: BilinearSpace) -> np.ndarray:
    """Self-adjoint phi with phi^2 = 0 and kernel = range on signature (s, s).

    Each timelike basis vector f_i maps to the null vector f_i + e_i and the
    paired spacelike e_i to its negative, so the range is the totally
    isotropic span of the null pairs and equals the kernel.  When s is even
    the range is invariant under the standard complex structure and phi
    commutes with it.
    """
    if space.p != space.q:
        raise ValueError(
            f"signature ({space.p}, {space.q}) is not of the form (s, s)"
        )
    s = space.p
    eye = np.eye(s)
    return np.block([[eye, -eye], [eye, -eye]])


def nilpotent_null_pair_partner(space: BilinearSpace) -> np.ndarray:
    """Skew-adjoint nilpotent generator completing :func:`nilpotent_null_pair`
    to an admissible pair on signature (4t, 4t).

    Built as [[M, -M], [M, -M]] where M anticommutes with the rotation blocks
    of the standard complex structure and satisfies M^2 = -Id.  Such an M is
    conjugate-linear with no invariant complex line, which is exactly what
    forces the images of any non-degenerate complex line under the two
    generators to span 4 dimensions inside the shared isotropic range.
    """
    if space.p != space.q:
        raise ValueError(
            f"signature ({space.p}, {space.q}) is not of the form (s, s)"
        )
    if space.p % 4 != 0:
        raise ValueError(
            f"timelike count p = {space.p} must be divisible by 4 for the "
            "conjugate-linear block to square to -Id"
        )
    sigma = np.diag([1.0, -1.0])
    zero = np.zeros((2, 2))
    quad = np.block([[zero, sigma], [-sigma, zero]])
    m_blocks = np.kron(np.eye(space.p // 4), quad)
    return np.block([[m_blocks, -m_blocks], [m_blocks, -m_blocks]])


class AdmissibleClass(Enum):
    SELF_ADJOINT_COMMUTING = "self_adjoint_commuting"
    SELF_ADJOINT_ANTICOMMUTING = "self_adjoint_anticommuting"
    SKEW_ADJOINT_ANTICOMMUTING = "skew_adjoint_anticommuting"
    NOT_ADMISSIBLE = "not_admissible"


class SquareType(Enum):
    PLUS_ID = "plus_id"
    MINUS_ID = "minus_id"
    NILPOTENT_KERNEL_EQUALS_RANGE = "nilpotent_kernel_equals_range"
    NONE = "none"


def classify_square(phi: np.ndarray, space: BilinearSpace, tol: float | None = None) -> SquareType:
    """Which of phi^2 = +Id, phi^2 = -Id, or phi^2 = 0 with ker = range holds.

    The nilpotent verdict additionally requires rank m/2 and that the columns
    of phi^2 stay inside the range of phi; together with phi^2 = 0 this forces
    kernel and range to coincide.
    """
    phi = _check_matrix(space, phi, "phi")
    if tol is None:
        tol = space.tol
    m = space.m
    scale = max(1.0, _max_abs(phi) ** 2)
    square = phi @ phi
    if _max_abs(square - np.eye(m)) <= tol * scale:
        return SquareType.PLUS_ID
    if _max_abs(square + np.eye(m)) <= tol * scale:
        return SquareType.MINUS_ID
    if _max_abs(square) <= tol * scale and m % 2 == 0:
        half = m // 2
        if numeric_rank(phi, tol) == half and numeric_rank(np.hstack([phi, square]), tol) == half:
            return SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
    return SquareType.NONE


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible_class: AdmissibleClass
    square_type: SquareType
    residuals: dict[str, float]

    @property
    def admissible(self) -> bool:
        return (
            self.admissible_class is not AdmissibleClass.NOT_ADMISSIBLE
            and self.square_type is not SquareType.NONE
        )


def check_admissible(
    phi: np.ndarray, J: ComplexStructure, tol: float | None = None
) -> AdmissibilityReport:
    """Classify phi against the adjoint/commutation and square conditions."""
    space = J.space
    phi = _check_matrix(space, phi, "phi")
    if tol is None:
        tol = space.tol
    scale = max(1.0, _max_abs(phi))
    star = adjoint(space, phi)
    residuals = {
        "self_adjoint": _max_abs(phi - star),
        "skew_adjoint": _max_abs(phi + star),
        "commute_J": _max_abs(phi @ J.J - J.J @ phi),
        "anticommute_J": _max_abs(phi @ J.J + J.J @ phi),
    }
    is_self = residuals["self_adjoint"] <= tol * scale
    is_skew = residuals["skew_adjoint"] <= tol * scale
    commutes = residuals["commute_J"] <= tol * scale
    anticommutes = residuals["anticommute_J"] <= tol * scale

    if is_self and commutes:
        cls = AdmissibleClass.SELF_ADJOINT_COMMUTING
    elif is_self and anticommutes:
        cls = AdmissibleClass.SELF_ADJOINT_ANTICOMMUTING
    elif is_skew and anticommutes:
        cls = AdmissibleClass.SKEW_ADJOINT_ANTICOMMUTING
    else:
        cls = AdmissibleClass.NOT_ADMISSIBLE
    return AdmissibilityReport(cls, classify_square(phi, space, tol), residuals)


@dataclass(frozen=True)
class PairReport:
    admissible: bool
    residuals: dict[str, float]
    min_line_rank: int | None
    seed: int | None


def check_admissible_pair(
    phi1: np.ndarray,
    phi2: np.ndarray,
    J: ComplexStructure,
    n_lines: int = 100,
    seed: int = 0,
    tol: float | None = None,
) -> PairReport:
    """Check the pair conditions: phi1 commutes with J, phi2 anti-commutes,
    phi1* phi2 + phi2* phi1 = 0, and (when both squares vanish) the images of
    sampled non-degenerate complex lines span 4 dimensions.

    The line condition quantifies over the whole Grassmannian; it is open and
    generic, so seeded sampling gives a reproducible verdict and the report
    records the minimum observed rank.  Individually non-admissible inputs
    are rejected before any pair test runs.
    """
    space = J.space
    if tol is None:
        tol = space.tol
    rep1 = check_admissible(phi1, J, tol)
    rep2 = check_admissible(phi2, J, tol)
    if not rep1.admissible:
        raise ValueError(f"phi1 is not admissible: {rep1.admissible_class.value}, {rep1.square_type.value}")
    if not rep2.admissible:
        raise ValueError(f"phi2 is not admissible: {rep2.admissible_class.value}, {rep2.square_type.value}")

    phi1 = _check_matrix(space, phi1, "phi1")
    phi2 = _check_matrix(space, phi2, "phi2")
    scale = max(1.0, _max_abs(phi1), _max_abs(phi2))
    residuals = {
        "phi1_commute_J": _max_abs(phi1 @ J.J - J.J @ phi1),
        "phi2_anticommute_J": _max_abs(phi2 @ J.J + J.J @ phi2),
        "cross_adjoint": _max_abs(
            adjoint(space, phi1) @ phi2 + adjoint(space, phi2) @ phi1
        ),
    }
    ok = all(r <= tol * scale**2 for r in residuals.values())

    min_rank: int | None = None
    used_seed: int | None = None
    both_nilpotent = (
        rep1.square_type is SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
        and rep2.square_type is SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
    )
    if both_nilpotent:
        used_seed = seed
        rng = np.random.default_rng(seed)
        found = 0
        draws = 0
        min_rank = 4
        while found < n_lines:
            draws += 1
            if draws > 1000 * n_lines:
                raise RuntimeError("rejection budget exceeded while sampling complex lines")
            x = rng.standard_normal(space.m)
            t = inner(space, x, x)
            if abs(t) <= space.tol * float(x @ x):
                continue
            x = x / np.sqrt(abs(t))
            jx = J.J @ x
            stacked = np.column_stack([phi1 @ x, phi1 @ jx, phi2 @ x, phi2 @ jx])
            min_rank = min(min_rank, numeric_rank(stacked, tol))
            found += 1
        ok = ok and min_rank == 4

    return PairReport(admissible=ok, residuals=residuals, min_line_rank=min_rank, seed=used_seed)
