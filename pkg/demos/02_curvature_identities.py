"""Build curvature tensors from generators and audit their identities.

Run:  python3 demos/02_curvature_identities.py
"""

import numpy as np

from curvlab import (
    BilinearSpace,
    check_gray_identity,
    check_J_invariance,
    check_symmetries,
    combine,
    from_self_adjoint,
    from_skew_adjoint,
    projected_generator,
    standard_complex_structure,
    standard_quaternion_structure,
)

print("=== The two generator constructors ===")
space = BilinearSpace(0, 4)
r_id = from_self_adjoint(space, np.eye(4))
print(f"R_Id(e1,e2,e2,e1) = {r_id.coeffs[0, 1, 1, 0]}  (unit sectional curvature)")
J = standard_complex_structure(space)
r_j = from_skew_adjoint(space, J.J)
print(f"R_J(e1,e2,e1,e2)  = {r_j.coeffs[0, 1, 0, 1]}")
fubini = combine([(1.0, r_id), (1.0, r_j)])
print(f"(R_Id + R_J)(e1,e2,e2,e1) = {fubini.coeffs[0, 1, 1, 0]}")

print()
print("=== Curvature symmetries hold to machine precision ===")
rng = np.random.default_rng(1)
phi = rng.standard_normal((4, 4))
phi = 0.5 * (phi + phi.T)  # Euclidean signature: self-adjoint = symmetric
report = check_symmetries(from_self_adjoint(space, phi))
print(f"antisymmetry  {report.antisymmetry:.2e}")
print(f"pair symmetry {report.pair_symmetry:.2e}")
print(f"first Bianchi {report.bianchi:.2e}")

print()
print("=== Hermitian invariance R(Jx,Jy,Jz,Jw) = R(x,y,z,w) ===")
space6 = BilinearSpace(0, 6)
J6 = standard_complex_structure(space6)
commuting = projected_generator(space6, J6, +1, +1, seed=2)
good = from_self_adjoint(space6, commuting)
print(f"commuting generator:  violation {check_J_invariance(good, J6).max_violation:.2e}")
generic = rng.standard_normal((6, 6))
generic = 0.5 * (generic + generic.T)
bad = from_self_adjoint(space6, generic)
rep = check_J_invariance(bad, J6)
print(f"generic generator:    violation {rep.max_violation:.3f} at quadruple {rep.witness}")

print()
print("=== The Gray identity and its quaternionic counterexample ===")
print("Curvature of a holomorphic Hermitian structure satisfies a six-term")
print("exchange identity.  Generators commuting with J inherit it:")
print(f"  commuting generator violation: {check_gray_identity(good, J6).max_violation:.2e}")
space8 = BilinearSpace(0, 8)
quat = standard_quaternion_structure(space8)
r_qj = from_skew_adjoint(space8, quat.j)
rep = check_gray_identity(r_qj, quat.as_complex)
print("A full-rank generator anticommuting with J = i does not:")
print(f"  R_j violation: {rep.max_violation}  at quadruple {rep.witness}")
