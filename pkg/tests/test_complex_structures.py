import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvlab import (
    AdmissibleClass,
    BilinearSpace,
    ComplexStructure,
    SquareType,
    adjoint,
    check_admissible,
    check_admissible_pair,
    classify_square,
    inner,
    nilpotent_null_pair,
    standard_complex_structure,
    standard_quaternion_structure,
)


def rot2():
    return np.array([[0.0, -1.0], [1.0, 0.0]])


class TestStandardComplexStructure:
    def test_minimal_space(self):
        J = standard_complex_structure(BilinearSpace(0, 2))
        assert np.array_equal(J.J, rot2())

    def test_two_blocks_square_to_minus_identity(self):
        J = standard_complex_structure(BilinearSpace(0, 4))
        assert np.array_equal(J.J @ J.J, -np.eye(4))

    def test_split_signature_isometry_on_all_basis_pairs(self):
        s = BilinearSpace(2, 2)
        J = standard_complex_structure(s)
        eye = np.eye(4)
        for a in range(4):
            for b in range(4):
                assert inner(s, J.J @ eye[a], J.J @ eye[b]) == pytest.approx(
                    inner(s, eye[a], eye[b]), abs=1e-12
                )

    def test_rejects_odd_dimension(self):
        with pytest.raises(ValueError):
            standard_complex_structure(BilinearSpace(0, 3))

    def test_rejects_odd_timelike_count(self):
        with pytest.raises(ValueError):
            standard_complex_structure(BilinearSpace(1, 3))

    def test_constructor_validates_square(self):
        s = BilinearSpace(0, 2)
        with pytest.raises(ValueError):
            ComplexStructure(s, np.eye(2))

    def test_constructor_validates_isometry(self):
        s = BilinearSpace(0, 2)
        with pytest.raises(ValueError):
            ComplexStructure(s, 2.0 * rot2())

    def test_constructor_rejects_odd_signature_counts(self):
        s = BilinearSpace(1, 1)
        with pytest.raises(ValueError):
            ComplexStructure(s, rot2())

    @pytest.mark.parametrize("sig", [(0, 4), (0, 6), (2, 2), (2, 4)])
    def test_x_orthogonal_to_Jx(self, sig):
        s = BilinearSpace(*sig)
        J = standard_complex_structure(s)
        rng = np.random.default_rng(11)
        for _ in range(100):
            x = rng.standard_normal(s.m)
            assert abs(inner(s, x, J.J @ x)) <= 1e-12 * float(x @ x)


class TestStandardQuaternionStructure:
    def test_left_multiplication_relations(self):
        q = standard_quaternion_structure(BilinearSpace(0, 4))
        assert np.array_equal(q.i @ q.j, q.k)
        assert np.array_equal(q.j @ q.k, q.i)
        assert np.array_equal(q.k @ q.i, q.j)
        assert np.array_equal(q.j @ q.i, -q.k)
        for u in (q.i, q.j, q.k):
            assert np.array_equal(u @ u, -np.eye(4))

    def test_k_is_skew_symmetric_in_definite_signature(self):
        q = standard_quaternion_structure(BilinearSpace(0, 4))
        assert np.array_equal(q.k + q.k.T, np.zeros((4, 4)))

    def test_blockwise_extension_units_are_isometries(self):
        s = BilinearSpace(0, 8)
        q = standard_quaternion_structure(s)
        for u in (q.i, q.j, q.k):
            assert np.allclose(u.T @ s.gram @ u, s.gram)

    def test_rejects_dimension_not_divisible_by_four(self):
        with pytest.raises(ValueError):
            standard_quaternion_structure(BilinearSpace(0, 6))

    def test_rejects_partial_timelike_block(self):
        with pytest.raises(ValueError):
            standard_quaternion_structure(BilinearSpace(2, 6))

    def test_split_signature_blocks(self):
        s = BilinearSpace(4, 4)
        q = standard_quaternion_structure(s)
        for u in (q.i, q.j, q.k):
            assert np.allclose(u @ u, -np.eye(8))
            assert np.allclose(u + adjoint(s, u), 0.0)

    def test_as_complex_matches_standard_J(self):
        s = BilinearSpace(0, 8)
        q = standard_quaternion_structure(s)
        assert np.array_equal(q.as_complex.J, standard_complex_structure(s).J)

    @pytest.mark.parametrize("sig", [(0, 4), (0, 8)])
    def test_unit_spacelike_orbit_is_orthonormal(self, sig):
        s = BilinearSpace(*sig)
        q = standard_quaternion_structure(s)
        rng = np.random.default_rng(7)
        for _ in range(50):
            x = rng.standard_normal(s.m)
            x /= np.sqrt(inner(s, x, x))
            frame = [x, q.i @ x, q.j @ x, q.k @ x]
            for a in range(4):
                for b in range(4):
                    expected = 1.0 if a == b else 0.0
                    assert inner(s, frame[a], frame[b]) == pytest.approx(expected, abs=1e-10)


class TestNilpotentNullPair:
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_square_zero_and_half_rank(self, s):
        space = BilinearSpace(s, s)
        phi = nilpotent_null_pair(space)
        assert np.array_equal(phi @ phi, np.zeros((2 * s, 2 * s)))
        assert np.linalg.matrix_rank(phi) == s

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_self_adjoint_with_isotropic_range(self, s):
        space = BilinearSpace(s, s)
        phi = nilpotent_null_pair(space)
        assert np.array_equal(phi, adjoint(space, phi))
        for col in phi.T:
            assert inner(space, col, col) == 0.0

    def test_commutes_with_standard_J_when_s_even(self):
        space = BilinearSpace(2, 2)
        phi = nilpotent_null_pair(space)
        J = standard_complex_structure(space)
        assert np.array_equal(phi @ J.J, J.J @ phi)

    def test_rejects_unbalanced_signature(self):
        with pytest.raises(ValueError):
            nilpotent_null_pair(BilinearSpace(1, 3))


class TestClassifySquare:
    def test_identity(self):
        s = BilinearSpace(0, 4)
        assert classify_square(np.eye(4), s) is SquareType.PLUS_ID

    def test_rotation(self):
        s = BilinearSpace(0, 2)
        assert classify_square(rot2(), s) is SquareType.MINUS_ID

    def test_null_pair_generator(self):
        for sig in [(2, 2), (3, 3)]:
            space = BilinearSpace(*sig)
            assert (
                classify_square(nilpotent_null_pair(space), space)
                is SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
            )

    def test_nilpotent_with_wrong_rank(self):
        s = BilinearSpace(0, 4)
        phi = np.zeros((4, 4))
        phi[0, 1] = 1.0
        assert classify_square(phi, s) is SquareType.NONE

    def test_generic_matrix(self):
        s = BilinearSpace(0, 4)
        phi = np.random.default_rng(0).standard_normal((4, 4))
        assert classify_square(phi, s) is SquareType.NONE


class TestCheckAdmissible:
    def test_identity_is_self_adjoint_commuting_plus_id(self):
        J = standard_complex_structure(BilinearSpace(0, 4))
        rep = check_admissible(np.eye(4), J)
        assert rep.admissible_class is AdmissibleClass.SELF_ADJOINT_COMMUTING
        assert rep.square_type is SquareType.PLUS_ID
        assert rep.admissible

    def test_quaternion_j_with_J_equal_i(self):
        s = BilinearSpace(0, 8)
        q = standard_quaternion_structure(s)
        rep = check_admissible(q.j, q.as_complex)
        assert rep.admissible_class is AdmissibleClass.SKEW_ADJOINT_ANTICOMMUTING
        assert rep.square_type is SquareType.MINUS_ID
        assert rep.admissible

    def test_rank_deficient_nilpotent_not_admissible(self):
        J = standard_complex_structure(BilinearSpace(0, 4))
        phi = np.zeros((4, 4))
        phi[0, 1] = 1.0
        rep = check_admissible(phi, J)
        assert not rep.admissible
        assert rep.square_type is SquareType.NONE

    def test_J_itself_is_skew_but_commuting(self):
        # phi = J commutes with J, so the skew-adjoint anticommuting class
        # does not apply even though phi^2 = -Id.
        J = standard_complex_structure(BilinearSpace(0, 4))
        rep = check_admissible(J.J, J)
        assert rep.admissible_class is AdmissibleClass.NOT_ADMISSIBLE
        assert not rep.admissible

    def test_null_pair_generator_admissible_on_2_2(self):
        space = BilinearSpace(2, 2)
        J = standard_complex_structure(space)
        rep = check_admissible(nilpotent_null_pair(space), J)
        assert rep.admissible_class is AdmissibleClass.SELF_ADJOINT_COMMUTING
        assert rep.square_type is SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
        assert rep.admissible

    @given(st.integers(0, 2**31 - 1), st.sampled_from(["eye", "j", "random"]))
    @settings(max_examples=30, deadline=None)
    def test_negation_agrees(self, seed, kind):
        s = BilinearSpace(0, 8)
        q = standard_quaternion_structure(s)
        if kind == "eye":
            phi = np.eye(8)
        elif kind == "j":
            phi = q.j
        else:
            phi = np.random.default_rng(seed).standard_normal((8, 8))
        a = check_admissible(phi, q.as_complex)
        b = check_admissible(-phi, q.as_complex)
        assert a.admissible_class is b.admissible_class
        assert a.square_type is b.square_type


class TestCheckAdmissiblePair:
    def setup_method(self):
        self.space = BilinearSpace(0, 8)
        self.quat = standard_quaternion_structure(self.space)
        self.J = self.quat.as_complex

    def test_identity_with_j(self):
        rep = check_admissible_pair(np.eye(8), self.quat.j, self.J, n_lines=25, seed=0)
        assert rep.admissible
        assert all(r <= 1e-12 for r in rep.residuals.values())

    def test_identity_with_k(self):
        rep = check_admissible_pair(np.eye(8), self.quat.k, self.J, n_lines=25, seed=0)
        assert rep.admissible
        assert all(r <= 1e-12 for r in rep.residuals.values())

    def test_identity_with_identity_fails_commutation(self):
        rep = check_admissible_pair(np.eye(8), np.eye(8), self.J, n_lines=5, seed=0)
        assert not rep.admissible
        assert rep.residuals["phi2_anticommute_J"] > 0.5

    def test_rejects_non_admissible_member(self):
        phi = np.random.default_rng(1).standard_normal((8, 8))
        with pytest.raises(ValueError):
            check_admissible_pair(np.eye(8), phi, self.J)

    def test_nilpotent_pair_line_rank(self):
        # phi2 sends f1, f2, e1, e2 to n1, -n2, -n1, n2 (n_i the null pairs):
        # self-adjoint, anticommutes with J, square zero with kernel = range,
        # so individually admissible; but its range coincides with that of the
        # null-pair generator, so the line-span condition caps at rank 2.
        space = BilinearSpace(2, 2)
        J = standard_complex_structure(space)
        phi1 = nilpotent_null_pair(space)
        phi2 = np.array(
            [
                [1.0, 0.0, -1.0, 0.0],
                [0.0, -1.0, 0.0, 1.0],
                [1.0, 0.0, -1.0, 0.0],
                [0.0, -1.0, 0.0, 1.0],
            ]
        )
        rep_phi2 = check_admissible(phi2, J)
        assert rep_phi2.admissible_class is AdmissibleClass.SELF_ADJOINT_ANTICOMMUTING
        assert rep_phi2.square_type is SquareType.NILPOTENT_KERNEL_EQUALS_RANGE
        rep = check_admissible_pair(phi1, phi2, J, n_lines=10, seed=0)
        assert rep.min_line_rank == 2
        assert not rep.admissible

    def test_pair_images_pairwise_orthogonal_on_lines(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            x = rng.standard_normal(8)
            x /= np.sqrt(inner(self.space, x, x))
            jx = self.J.J @ x
            vectors = [x, jx, self.quat.j @ x, self.quat.j @ jx]
            for a in range(4):
                for b in range(a + 1, 4):
                    assert abs(inner(self.space, vectors[a], vectors[b])) <= 1e-10
