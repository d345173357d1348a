"""Tour of the base layer: signatures, adjoints, plane types, Jordan fingerprints.

Run:  python3 demos/01_spaces_and_operators.py
"""

import numpy as np

from curvlab import (
    BilinearSpace,
    adjoint,
    classify_plane,
    inner,
    jordan_equivalent,
    jordan_invariants,
)

print("=== Inner products of signature (p, q) ===")
lorentz = BilinearSpace(1, 1)
e1, e2 = np.eye(2)
print(f"(e1, e1) in R^(1,1)      = {inner(lorentz, e1, e1)}   (timelike direction)")
print(f"(e1+e2, e1+e2) in R^(1,1) = {inner(lorentz, e1 + e2, e1 + e2)}   (a null vector)")

print()
print("=== Adjoints are metric-dependent ===")
a = np.array([[0.0, 1.0], [0.0, 0.0]])
print("A =")
print(a)
print("Euclidean adjoint (plain transpose):")
print(adjoint(BilinearSpace(0, 2), a))
print("Lorentz adjoint, satisfying (Av, w) = (v, A*w) for the (1,1) product:")
print(adjoint(lorentz, a))

print()
print("=== Causal type of 2-planes ===")
split = BilinearSpace(2, 2)
basis = np.eye(4)
for x, y, label in [
    (basis[0], basis[1], "two timelike directions"),
    (basis[2], basis[3], "two spacelike directions"),
    (basis[0], basis[2], "one of each"),
    (basis[0] + basis[2], 2 * (basis[0] + basis[2]), "a doubled null vector"),
]:
    print(f"span({label}): {classify_plane(split, x, y).value}")

print()
print("=== Jordan structure without a Jordan basis ===")
# A single nilpotent block and a pair of blocks share rank but not structure.
one_block = np.zeros((4, 4))
one_block[0, 1] = one_block[1, 2] = 1.0
two_blocks = np.zeros((4, 4))
two_blocks[0, 1] = two_blocks[2, 3] = 1.0
for name, mat in [("J3(0) + J1(0)", one_block), ("J2(0) + J2(0)", two_blocks)]:
    inv = jordan_invariants(mat)
    print(f"{name}: clusters {inv.clusters}, rank sequences {inv.rank_sequences}")
same = jordan_equivalent(jordan_invariants(one_block), jordan_invariants(two_blocks))
print(f"equivalent? {same}  (equal eigenvalues and ranks, different block partitions)")

print()
print("=== Invariance under similarity ===")
rng = np.random.default_rng(0)
m = rng.standard_normal((5, 5))
psi = np.eye(5) + 0.3 * rng.standard_normal((5, 5))
conjugated = psi @ m @ np.linalg.inv(psi)
print(
    "random A ~ psi A psi^-1:",
    jordan_equivalent(jordan_invariants(m, 1e-7), jordan_invariants(conjugated, 1e-7), 1e-7),
)
