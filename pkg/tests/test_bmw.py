import itertools
import unittest

import pytest

from brauer_lab.bmw import (LaurentMatrix, RhoData, act_bmw, alpha_q, beta_prime, brauer_matrix, check_bmw_relations,
                            check_hat_agreement, check_hecke, check_hecke_relations, check_specialization,
                            check_word_independence, check_z_specialization, delta_q, gamma_prime, hecke_beta,
                            phi_c, specialize_vector, word_matrix, x_q, y_q, z_q)
from brauer_lab.diagrams import Permutation
from brauer_lab.scalars import LAURENT, LaurentPoly
from brauer_lab.tensor import SymplecticSpace, TensorVector, act_generator, alpha, z_vector

q = LaurentPoly.q()


class TestRhoData(unittest.TestCase):
    def test_rho_and_signs(self):
        data = RhoData(2)
        self.assertEqual(data.rho, (2, 1, -1, -2))
        self.assertEqual(data.epsilon, (1, 1, -1, -1))
        self.assertEqual(data.prime(1), 4)


class TestLocalMatrices(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(beta_prime(2).size, 16)
        self.assertEqual(gamma_prime(1).size, 4)
        self.assertEqual(hecke_beta(2).size, 4)

    def test_loop_value(self):
        self.assertEqual(delta_q(1), LaurentPoly({-2: -1, 2: -1}))
        for m in (1, 2, 3):
            self.assertEqual(delta_q(m).specialize(), -2 * m)

    def test_gamma_squares_to_delta(self):
        for m in (1, 2):
            g = gamma_prime(m)
            self.assertEqual(g @ g, g.scale(delta_q(m)))

    def test_twist_on_the_local_pair(self):
        b, g = beta_prime(1), gamma_prime(1)
        twist = LaurentPoly.monomial(-1, -3)
        self.assertEqual(g @ b, g.scale(twist))
        self.assertEqual(b @ g, g.scale(twist))

    def test_matrix_errors(self):
        with self.assertRaises(ValueError):
            LaurentMatrix.identity(2) @ LaurentMatrix.identity(3)
        with self.assertRaises(ValueError):
            phi_c("X", 1, 2, 1)
        with self.assertRaises(ValueError):
            phi_c("T", 2, 2, 1)

    def test_first_difference(self):
        a = LaurentMatrix.identity(2)
        b = a + LaurentMatrix(2, {1: {0: q}})
        self.assertEqual(a.first_difference(b), (1, 0, "0", str(q)))
        self.assertIsNone(a.first_difference(LaurentMatrix.identity(2)))


@pytest.mark.parametrize("n,m,rows", [(2, 1, 4), (3, 1, 15), (2, 2, 4), (3, 2, 15)])
def test_all_relation_instances_hold(n, m, rows):
    result = check_bmw_relations(n, m)
    assert len(result) == rows
    assert all(row["pass"] for row in result)
    assert {row["relation"] for row in result} <= {"1", "2", "3", "4", "5", "6", "7", "8"}


def test_far_commutation_appears_from_four_strands():
    rows = check_bmw_relations(4, 1)
    assert any(row["relation"] == "4" for row in rows)
    assert all(row["pass"] for row in rows)


def test_relations_need_two_strands():
    with pytest.raises(ValueError):
        check_bmw_relations(1, 1)


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_specialization_at_one(n, m):
    result = check_specialization(n, m)
    assert set(result) == {f"{g}{j}" for g in "TE" for j in range(1, n)}
    assert all(result.values())


def test_brauer_matrix_of_the_swap():
    assert brauer_matrix("s", 1, 2, 1) == {0: {0: -1}, 1: {2: -1}, 2: {1: -1}, 3: {3: -1}}


def test_act_bmw_specializes_to_the_signed_swap():
    space = SymplecticSpace(2)
    for idx in itertools.product(range(1, 5), repeat=2):
        v = TensorVector(space, 2, {idx: 1}, LAURENT)
        plain = TensorVector.basis(space, idx)
        assert specialize_vector(act_bmw(v, [("T", 1)])) == act_generator(plain, "s", 1).scale(-1)
        assert specialize_vector(act_bmw(v, [("E", 1)])) == act_generator(plain, "e", 1)


def test_alpha_q_specializes_to_alpha():
    for m in (1, 2):
        space = SymplecticSpace(m)
        assert specialize_vector(alpha_q(space)) == alpha(space)


def test_alpha_q_is_an_eigenvector_of_e():
    space = SymplecticSpace(1)
    a = alpha_q(space)
    assert act_bmw(a, [("E", 1)]) == a.scale(delta_q(1))


@pytest.mark.parametrize("m,g,lam", [(1, 0, (1,)), (1, 1, (1,)), (2, 0, (1, 1)), (2, 0, (2, 1)), (2, 1, (1,))])
def test_z_specialization(m, g, lam):
    assert check_z_specialization(SymplecticSpace(m), g, lam)


def test_z_q_lifts_z_up_to_sign():
    space = SymplecticSpace(2)
    assert specialize_vector(z_q(space, 0, (1, 1))) == z_vector(space, 0, (1, 1))
    with pytest.raises(ValueError):
        z_q(space, -1, (1,))
    with pytest.raises(ValueError):
        z_q(SymplecticSpace(1), 0, (1, 1))


@pytest.mark.parametrize("lam,m", [((2,), 1), ((3,), 1), ((2, 1), 2), ((2, 2), 2), ((1,), 2)])
def test_hecke_eigenvalue(lam, m):
    assert check_hecke(lam, m, samples=5, seed=7)


@pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 2)])
def test_hecke_relations(n, m):
    assert check_hecke_relations(n, m) == {"quadratic": True, "braid": True, "commute": True}


@pytest.mark.parametrize("lam,m", [((1,), 1), ((2, 1), 2), ((1, 1), 2), ((3,), 2)])
def test_hat_agreement(lam, m):
    assert check_hat_agreement(lam, m)


def test_word_independence():
    for images in itertools.permutations(range(1, 4)):
        assert check_word_independence(Permutation(images), 1)
    assert check_word_independence(Permutation((3, 1, 2)), 2)


def test_word_matrix_of_the_empty_word():
    assert word_matrix([], 2, 1) == LaurentMatrix.identity(4)
    assert word_matrix([("T", 1)], 2, 1) == phi_c("T", 1, 2, 1)


def test_symmetrizers():
    assert [c for c, _ in x_q((2,), 2)] == [LaurentPoly.constant(1), q]
    assert [c for c, _ in y_q((2,), 2)] == [LaurentPoly.constant(1), LaurentPoly.monomial(-1, -1)]
    assert len(y_q((2,), 4, offset=2)) == 2


if __name__ == "__main__":
    unittest.main()
