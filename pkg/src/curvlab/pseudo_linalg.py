"""Inner products of arbitrary signature, adjoints, plane types, and Jordan invariants.

Vectors and linear maps are plain numpy arrays; a :class:`BilinearSpace`
carries the signature, the diagonal Gram matrix, and the numeric tolerance
shared by the operations below.  Everything here is a pure function over
immutable values, so concurrent use needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

DEFAULT_TOL = 1e-8


class PlaneClass(Enum):
    """Causal type of a 2-plane, read off from the restricted Gram matrix."""

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    MIXED = "mixed"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class BilinearSpace:
    """R^(p,q): p timelike directions (inner product -1) then q spacelike (+1).

    The Gram matrix is fixed to diag(-1,...,-1,+1,...,+1); this standard model
    loses no generality and keeps adjoints explicit.
    """

    p: int
    q: int
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature counts must be nonnegative, got ({self.p}, {self.q})")
        if self.m < 2:
            raise ValueError(f"dimension p + q = {self.m} must be at least 2")
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")

    @property
    def m(self) -> int:
        return self.p + self.q

    @cached_property
    def signs(self) -> np.ndarray:
        """Diagonal of the Gram matrix as a vector of exact +-1.0 entries."""
        s = np.ones(self.m)
        s[: self.p] = -1.0
        s.setflags(write=False)
        return s

    @cached_property
    def gram(self) -> np.ndarray:
        g = np.diag(self.signs)
        g.setflags(write=False)
        return g


def _check_vector(space: BilinearSpace, v: np.ndarray, name: str = "vector") -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (space.m,):
        raise ValueError(f"{name} has shape {v.shape}, expected ({space.m},)")
    return v


def _check_matrix(space: BilinearSpace, a: np.ndarray, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape != (space.m, space.m):
        raise ValueError(f"{name} has shape {a.shape}, expected ({space.m}, {space.m})")
    return a


def inner(space: BilinearSpace, x: np.ndarray, y: np.ndarray) -> float:
    """Signature (p,q) inner product x^T G y."""
    x = _check_vector(space, x, "x")
    y = _check_vector(space, y, "y")
    return float(x @ (space.signs * y))


def adjoint(space: BilinearSpace, a: np.ndarray) -> np.ndarray:
    """Adjoint A* with (Av, w) = (v, A*w), i.e. G^-1 A^T G.

    Implemented as exact sign flips of the transpose, so the involution
    (A*)* == A holds bitwise.
    """
    a = _check_matrix(space, a)
    return space.signs[:, None] * a.T * space.signs[None, :]


def classify_plane(space: BilinearSpace, x: np.ndarray, y: np.ndarray) -> PlaneClass:
    """Causal type of span{x, y} from the signature of the restricted Gram matrix.

    Near-zero determinant (relative to the Euclidean scale of x and y) reports
    DEGENERATE; linear dependence lands there as well.
    """
    x = _check_vector(space, x, "x")
    y = _check_vector(space, y, "y")
    xx = inner(space, x, x)
    xy = inner(space, x, y)
    yy = inner(space, y, y)
    det = xx * yy - xy * xy
    scale = float(x @ x) * float(y @ y)
    if abs(det) <= space.tol * scale:
        return PlaneClass.DEGENERATE
    if det < 0:
        return PlaneClass.MIXED
    return PlaneClass.SPACELIKE if xx + yy > 0 else PlaneClass.TIMELIKE


def numeric_rank(a: np.ndarray, tol: float) -> int:
    """Number of singular values above tol times the largest one; 0 for the zero map."""
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = np.asarray(a)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


@dataclass(frozen=True)
class JordanInvariants:
    """Computable fingerprint of a Jordan normal form.

    clusters pairs each eigenvalue representative with its algebraic
    multiplicity; rank_sequences[i] holds the numeric ranks of
    (A - lambda_i I)^k for k = 1..multiplicity.  Together these determine the
    Jordan block structure without constructing an (ill-conditioned) Jordan
    basis.
    """

    dimension: int
    clusters: tuple[tuple[complex, int], ...]
    rank_sequences: tuple[tuple[int, ...], ...]
    total_rank: int
    clustering_ambiguous: bool


def _cluster_eigenvalues(evals: np.ndarray, threshold: float) -> list[np.ndarray]:
    """Single-linkage clustering of complex eigenvalues at the given distance."""
    n = evals.size
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(evals[i] - evals[j]) <= threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [evals[idx] for idx in groups.values()]


def jordan_invariants(a: np.ndarray, tol: float = DEFAULT_TOL) -> JordanInvariants:
    """Eigenvalue clusters plus rank sequences of shifted powers of a square matrix.

    Clustering distance is tol times the largest singular value of A.  The
    operator scale (rather than the spectral radius) keeps nilpotent matrices
    in one cluster: their computed eigenvalues scatter like sqrt(machine eps)
    times the operator norm.  Rank cutoffs for (A - lambda I)^k are anchored
    to sigma_max(A - lambda I)^k for the same reason.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    m = a.shape[0]
    evals = np.linalg.eigvals(a)
    svals = np.linalg.svd(a, compute_uv=False)
    op_scale = float(svals[0]) if svals.size else 0.0
    threshold = tol * op_scale

    groups = _cluster_eigenvalues(evals, threshold)

    # Flag gaps within a factor of 10 of the threshold: the clustering verdict
    # would flip under a small change of tol.
    ambiguous = False
    if threshold > 0:
        for i in range(evals.size):
            for j in range(i + 1, evals.size):
                d = abs(evals[i] - evals[j])
                if threshold / 10.0 < d < threshold * 10.0:
                    ambiguous = True

    clusters: list[tuple[complex, int]] = []
    rank_sequences: list[tuple[int, ...]] = []
    for group in groups:
        lam = complex(np.mean(group))
        mult = int(group.size)
        shifted = a.astype(complex) - lam * np.eye(m)
        shifted_scale = float(np.linalg.svd(shifted, compute_uv=False)[0])
        ranks = []
        power = np.eye(m, dtype=complex)
        for k in range(1, mult + 1):
            power = power @ shifted
            cutoff = tol * shifted_scale**k
            s = np.linalg.svd(power, compute_uv=False)
            ranks.append(int(np.count_nonzero(s > cutoff)) if cutoff > 0 else 0)
        clusters.append((lam, mult))
        rank_sequences.append(tuple(ranks))

    order = sorted(range(len(clusters)), key=lambda i: (clusters[i][0].real, clusters[i][0].imag))
    return JordanInvariants(
        dimension=m,
        clusters=tuple(clusters[i] for i in order),
        rank_sequences=tuple(rank_sequences[i] for i in order),
        total_rank=numeric_rank(a, tol),
        clustering_ambiguous=ambiguous,
    )


def jordan_equivalent(a: JordanInvariants, b: JordanInvariants, tol: float = DEFAULT_TOL) -> bool:
    """Whether two invariant fingerprints describe the same Jordan normal form.

    Eigenvalue clusters are paired greedily by nearest neighbour after sorting
    by (real, imaginary) parts; paired clusters must agree in eigenvalue
    (within tol relative to the spectral scale), multiplicity, and rank
    sequence.
    """
    if a.dimension != b.dimension:
        raise ValueError(f"ambient dimensions differ: {a.dimension} != {b.dimension}")
    if len(a.clusters) != len(b.clusters):
        return False
    scale = max(
        [1.0]
        + [abs(lam) for lam, _ in a.clusters]
        + [abs(lam) for lam, _ in b.clusters]
    )
    remaining = list(range(len(b.clusters)))
    for (lam_a, mult_a), ranks_a in zip(a.clusters, a.rank_sequences):
        j = min(remaining, key=lambda idx: abs(b.clusters[idx][0] - lam_a))
        remaining.remove(j)
        lam_b, mult_b = b.clusters[j]
        if abs(lam_a - lam_b) > tol * scale:
            return False
        if mult_a != mult_b or ranks_a != b.rank_sequences[j]:
            return False
    return True
