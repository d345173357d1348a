"""Algebraic curvature tensors: generator constructors and identity checkers.

An algebraic curvature tensor is a rank-4 array R[a,b,c,d] = R(e_a,e_b,e_c,e_d)
satisfying

    R(x,y,z,w) = -R(y,x,z,w)                       (antisymmetry)
    R(x,y,z,w) =  R(z,w,x,y)                       (pair symmetry)
    R(x,y,z,w) + R(y,z,x,w) + R(z,x,y,w) = 0       (first Bianchi identity)

The two constructors build such tensors from a single endomorphism phi:

    self-adjoint phi:  R(x,y,z,w) = (phi y, z)(phi x, w) - (phi x, z)(phi y, w)
    skew-adjoint phi:  the same two terms minus 2 (phi x, y)(phi z, w)

Both are exact in floating point once phi is exactly (skew-)self-adjoint,
because every product reappears with the same rounding wherever a symmetry
demands cancellation.

Coefficients are stored as a dense m^4 array with no symmetry compression:
m <= 16 in all use cases, so transparency beats cleverness here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .complex_structures import ComplexStructure
from .pseudo_linalg import BilinearSpace, _check_matrix, _check_vector, adjoint


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """Rank-4 coefficient array over a bilinear space.

    Entry [a, b, c, d] is R(e_a, e_b, e_c, e_d).  Instances built by the
    module constructors satisfy the curvature symmetries; hand-built arrays
    can be audited with :func:`check_symmetries`.
    """

    space: BilinearSpace
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        m = self.space.m
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.shape != (m, m, m, m):
            raise ValueError(f"coefficient array has shape {coeffs.shape}, expected {(m,) * 4}")
        object.__setattr__(self, "coeffs", coeffs)


def _argmax_entry(a: np.ndarray) -> tuple[float, tuple[int, ...]]:
    idx = np.unravel_index(np.argmax(np.abs(a)), a.shape)
    return float(abs(a[idx])), tuple(int(i) for i in idx)


def _bilinear_matrix(space: BilinearSpace, phi: np.ndarray) -> np.ndarray:
    """B[i, j] = (phi e_i, e_j); symmetric iff phi is self-adjoint."""
    return phi.T * space.signs[None, :]


def from_self_adjoint(space: BilinearSpace, phi: np.ndarray) -> CurvatureTensor:
    """Curvature tensor (phi y, z)(phi x, w) - (phi x, z)(phi y, w).

    phi = Id yields the constant sectional curvature tensor of the unit
    pseudo-sphere; more generally this is the Gauss-equation tensor of a
    hypersurface with shape operator phi.
    """
    phi = _check_matrix(space, phi, "phi")
    residual = phi - adjoint(space, phi)
    worst, where = _argmax_entry(residual)
    if worst > space.tol * max(1.0, float(np.max(np.abs(phi)))):
        raise ValueError(
            f"phi is not self-adjoint: |phi - phi*| = {worst:.3e} at entry {where}"
        )
    b = _bilinear_matrix(space, phi)
    coeffs = np.einsum("bc,ad->abcd", b, b) - np.einsum("ac,bd->abcd", b, b)
    return CurvatureTensor(space, coeffs)


def from_skew_adjoint(space: BilinearSpace, phi: np.ndarray) -> CurvatureTensor:
    """Curvature tensor (phi y, z)(phi x, w) - (phi x, z)(phi y, w) - 2 (phi x, y)(phi z, w)."""
    phi = _check_matrix(space, phi, "phi")
    residual = phi + adjoint(space, phi)
    worst, where = _argmax_entry(residual)
    if worst > space.tol * max(1.0, float(np.max(np.abs(phi)))):
        raise ValueError(
            f"phi is not skew-adjoint: |phi + phi*| = {worst:.3e} at entry {where}"
        )
    b = _bilinear_matrix(space, phi)
    coeffs = (
        np.einsum("bc,ad->abcd", b, b)
        - np.einsum("ac,bd->abcd", b, b)
        - 2.0 * np.einsum("ab,cd->abcd", b, b)
    )
    return CurvatureTensor(space, coeffs)


def combine(terms: Iterable[tuple[float, CurvatureTensor]]) -> CurvatureTensor:
    """Entrywise linear combination sum_i c_i R_i; all tensors must share one space."""
    terms = list(terms)
    if not terms:
        raise ValueError("combine needs at least one (coefficient, tensor) term")
    space = terms[0][1].space
    coeffs = np.zeros_like(terms[0][1].coeffs)
    for c, tensor in terms:
        if tensor.space != space:
            raise ValueError(
                f"space mismatch: ({tensor.space.p}, {tensor.space.q}) vs ({space.p}, {space.q})"
            )
        coeffs = coeffs + float(c) * tensor.coeffs
    return CurvatureTensor(space, coeffs)


@dataclass(frozen=True)
class SymmetryReport:
    """Max violation and argmax quadruple for each curvature identity."""

    antisymmetry: float
    antisymmetry_witness: tuple[int, ...]
    pair_symmetry: float
    pair_symmetry_witness: tuple[int, ...]
    bianchi: float
    bianchi_witness: tuple[int, ...]

    @property
    def max_violation(self) -> float:
        return max(self.antisymmetry, self.pair_symmetry, self.bianchi)

    def passed(self, tol: float) -> bool:
        return self.max_violation <= tol


def check_symmetries(tensor: CurvatureTensor) -> SymmetryReport:
    """Audit the three curvature identities entrywise; report only, never raises.

    Compare against a threshold with ``report.passed(tol)``.
    """
    r = tensor.coeffs
    anti = r + r.swapaxes(0, 1)
    pair = r - r.transpose(2, 3, 0, 1)
    bianchi = r + np.einsum("abcd->cabd", r) + np.einsum("abcd->bcad", r)
    a_max, a_at = _argmax_entry(anti)
    p_max, p_at = _argmax_entry(pair)
    b_max, b_at = _argmax_entry(bianchi)
    return SymmetryReport(a_max, a_at, p_max, p_at, b_max, b_at)


def apply_pair(tensor: CurvatureTensor, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """The endomorphism R(x, y) defined by (R(x,y) z, w) = R(x, y, z, w)."""
    space = tensor.space
    x = _check_vector(space, x, "x")
    y = _check_vector(space, y, "y")
    n = np.einsum("a,b,abcd->cd", x, y, tensor.coeffs)
    return space.gram @ n.T


def pullback(tensor: CurvatureTensor, t: np.ndarray) -> CurvatureTensor:
    """(T* R)(x, y, z, w) = R(Tx, Ty, Tz, Tw); preserves the symmetries for any T."""
    t = _check_matrix(tensor.space, t, "T")
    coeffs = np.einsum(
        "abcd,ai,bj,ck,dl->ijkl", tensor.coeffs, t, t, t, t, optimize=True
    )
    return CurvatureTensor(tensor.space, coeffs)


@dataclass(frozen=True)
class InvarianceReport:
    passed: bool
    max_violation: float
    witness: tuple[int, ...]


def check_J_invariance(
    tensor: CurvatureTensor, J: ComplexStructure, tol: float = 1e-10
) -> InvarianceReport:
    """Whether R(Jx, Jy, Jz, Jw) = R(x, y, z, w) entrywise.

    This finite tensor identity is equivalent to R(pi) commuting with J on
    every non-degenerate complex line, so it serves as the exact form of the
    almost complex condition; the per-line commutator is the sampled
    cross-check.
    """
    diff = pullback(tensor, J.J).coeffs - tensor.coeffs
    worst, where = _argmax_entry(diff)
    return InvarianceReport(worst <= tol, worst, where)


def _partial_pullback(r: np.ndarray, j: np.ndarray, slots: tuple[int, ...]) -> np.ndarray:
    """Apply J to the given argument slots only, e.g. (0, 1) gives R(Jx, Jy, z, w)."""
    out = r
    letters = "abcd"
    for slot in slots:
        src = letters[slot]
        spec = f"{letters.replace(src, 'z')},z{src}->{letters}"
        out = np.einsum(spec, out, j)
    return out


def check_gray_identity(
    tensor: CurvatureTensor, J: ComplexStructure, tol: float = 1e-10
) -> InvarianceReport:
    """Check the six-term Gray symmetry satisfied by holomorphic Hermitian curvature:

        R(x,y,z,w) + R(Jx,Jy,Jz,Jw) =   R(Jx,Jy,z,w) + R(Jx,y,Jz,w) + R(Jx,y,z,Jw)
                                      + R(x,Jy,Jz,w) + R(x,Jy,z,Jw) + R(x,y,Jz,Jw)
    """
    r = tensor.coeffs
    j = J.J
    lhs = r + _partial_pullback(r, j, (0, 1, 2, 3))
    rhs = sum(
        _partial_pullback(r, j, slots)
        for slots in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    )
    worst, where = _argmax_entry(lhs - rhs)
    return InvarianceReport(worst <= tol, worst, where)


def random_algebraic_curvature_tensor(
    space: BilinearSpace, seed: int | np.random.Generator = 0
) -> CurvatureTensor:
    """A generic curvature tensor: project Gaussian noise onto the symmetry class.

    Antisymmetrize both index pairs, symmetrize the pair exchange, then
    subtract the cyclic (Bianchi) part, which is a 4-form and therefore keeps
    the first two symmetries intact.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    m = space.m
    t = rng.standard_normal((m, m, m, m))
    t = 0.5 * (t - t.swapaxes(0, 1))
    t = 0.5 * (t - t.swapaxes(2, 3))
    t = 0.5 * (t + t.transpose(2, 3, 0, 1))
    cyclic = (t + np.einsum("abcd->cabd", t) + np.einsum("abcd->bcad", t)) / 3.0
    return CurvatureTensor(space, t - cyclic)


def projected_generator(
    space: BilinearSpace,
    J: ComplexStructure,
    adjoint_sign: int,
    commutation_sign: int,
    seed: int | np.random.Generator = 0,
) -> np.ndarray:
    """Random phi with phi* = adjoint_sign * phi and phi J = commutation_sign * J phi.

    Built by averaging a Gaussian matrix with its (signed) adjoint and
    J-conjugate; the two projections commute, so both constraints hold to
    machine precision.
    """
    if adjoint_sign not in (-1, 1) or commutation_sign not in (-1, 1):
        raise ValueError("signs must be +1 or -1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    phi = rng.standard_normal((space.m, space.m))
    phi = 0.5 * (phi + adjoint_sign * adjoint(space, phi))
    # J phi J = -phi for commuting phi and +phi for anticommuting phi.
    phi = 0.5 * (phi - commutation_sign * J.J @ phi @ J.J)
    phi = 0.5 * (phi + adjoint_sign * adjoint(space, phi))
    return phi
