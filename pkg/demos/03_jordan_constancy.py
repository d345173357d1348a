"""The skew-symmetric curvature operator and Jordan-form constancy checks.

Run:  python3 demos/03_jordan_constancy.py
"""

import numpy as np

from curvlab import (
    BilinearSpace,
    check_admissible,
    check_admissible_pair,
    check_jordan_ip,
    check_jordan_ip_real,
    combine,
    complex_line,
    curvature_operator,
    from_self_adjoint,
    from_skew_adjoint,
    nilpotent_null_pair,
    nilpotent_null_pair_partner,
    numeric_rank,
    random_algebraic_curvature_tensor,
    standard_complex_structure,
    standard_quaternion_structure,
)

print("=== The operator of a plane ===")
space = BilinearSpace(0, 4)
r_id = from_self_adjoint(space, np.eye(4))
J = standard_complex_structure(space)
line = complex_line(J, np.eye(4)[0])
op = curvature_operator(r_id, line)
print("R_Id on span{e1, Je1} rotates the plane a quarter turn and kills the rest:")
print(np.round(op, 12))

print()
print("=== Jordan constancy over complex lines ===")
space8 = BilinearSpace(0, 8)
quat = standard_quaternion_structure(space8)
J8 = quat.as_complex
print("admissibility of the quaternion generators against J = i:")
for name, phi in [("Id", np.eye(8)), ("j", quat.j), ("k", quat.k)]:
    rep = check_admissible(phi, J8)
    print(f"  {name}: {rep.admissible_class.value}, square {rep.square_type.value}")
pair = check_admissible_pair(np.eye(8), quat.j, J8, n_lines=50, seed=0)
print(f"pair {{Id, j}} admissible: {pair.admissible}")
tensor = combine(
    [(1.0, from_self_adjoint(space8, np.eye(8))), (2.0, from_skew_adjoint(space8, quat.j))]
)
report = check_jordan_ip(tensor, J8, n=50, seed=1)
print(f"R_Id + 2 R_j constant on complex lines: {report.constant}, rank {report.rank}")

print()
print("=== A pair failing one condition loses constancy ===")
space6 = BilinearSpace(0, 6)
J6 = standard_complex_structure(space6)
conj = np.diag([1.0, -1.0] * 3)  # anticommutes with J, but Id* conj + conj* Id != 0
broken = combine(
    [(1.0, from_self_adjoint(space6, np.eye(6))), (1.0, from_self_adjoint(space6, conj))]
)
rep = check_jordan_ip(broken, J6, n=50, seed=2)
print(f"R_Id + R_conj constant: {rep.constant} (witness lines recorded: {rep.witness is not None})")

print()
print("=== The nilpotent branch needs indefinite signature ===")
split = BilinearSpace(2, 2)
phi = nilpotent_null_pair(split)
print("generator mapping an orthonormal pair onto a null pair:")
print(phi)
r_nil = from_self_adjoint(split, phi)
line = complex_line(standard_complex_structure(split), np.array([0.0, 0.0, 1.0, 0.0]))
op = curvature_operator(r_nil, line)
print(f"operator rank {numeric_rank(op, 1e-8)}, ||R(pi)^2|| = {np.max(np.abs(op @ op)):.2e}")
print(f"constant: {check_jordan_ip(r_nil, standard_complex_structure(split), n=50, seed=3).constant}")

print()
print("=== Two nilpotent generators can still pair up ===")
big = BilinearSpace(4, 4)
J44 = standard_complex_structure(big)
phi1 = nilpotent_null_pair(big)
phi2 = nilpotent_null_pair_partner(big)
pair44 = check_admissible_pair(phi1, phi2, J44, n_lines=50, seed=7)
print(f"pair admissible: {pair44.admissible}, minimum line span: {pair44.min_line_rank}")
r_pair = combine(
    [(1.0, from_self_adjoint(big, phi1)), (1.0, from_skew_adjoint(big, phi2))]
)
rep44 = check_jordan_ip(r_pair, J44, n=40, seed=8)
print(f"pair tensor constant: {rep44.constant}, operator rank {rep44.rank}")

print()
print("=== Real planes, per causal type ===")
lorentz6 = BilinearSpace(1, 5)
involution = from_self_adjoint(lorentz6, np.diag([1.0, 1.0, -1.0, 1.0, -1.0, 1.0]))
rep = check_jordan_ip_real(involution, n=40, seed=4)
for cls, ok in rep.constant_by_type.items():
    print(f"  {cls.value}: constant {ok}, rank {rep.rank_by_type[cls]}")
print(f"rank independent of type: {rep.rank_type_independent}")
generic = random_algebraic_curvature_tensor(BilinearSpace(0, 5), 5)
print(f"generic tensor on (0,5) constant: {check_jordan_ip_real(generic, n=40, seed=6).constant}")
