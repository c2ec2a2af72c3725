import itertools
import unittest

import numpy as np
import pytest

from brauer_lab.experiments import ideal_image, z_span
from brauer_lab.hyperalg import (ChevalleyOp, act_divided, chevalley_matrix, commutant_dimension, induced_rank,
                                 maximal_vectors, one_box, operators, validate_chevalley, weight_shift)
from brauer_lab.linalg import Subspace
from brauer_lab.scalars import QQ, FieldSpec
from brauer_lab.tensor import SymplecticSpace, TensorVector, act_generator, alpha, weight_of


class TestChevalleyOperators(unittest.TestCase):
    def test_one_box_rank_one(self):
        self.assertEqual(one_box("raise", 1, 1), {2: (1, 1)})
        self.assertEqual(one_box("lower", 1, 1), {1: (2, 1)})
        self.assertTrue(np.array_equal(chevalley_matrix("raise", 1, 1), np.array([[0, 1], [0, 0]])))

    def test_one_box_short_root(self):
        self.assertEqual(one_box("raise", 1, 2), {2: (1, 1), 4: (3, -1)})
        self.assertEqual(one_box("lower", 1, 2), {1: (2, 1), 3: (4, -1)})

    def test_invalid(self):
        with self.assertRaises(ValueError):
            ChevalleyOp("up", 1)
        with self.assertRaises(ValueError):
            ChevalleyOp("raise", 1, 0)
        with self.assertRaises(ValueError):
            one_box("raise", 3, 2)
        with self.assertRaises(ValueError):
            act_divided(TensorVector.basis(SymplecticSpace(1), (1,)), ChevalleyOp("raise", 2))

    def test_validation(self):
        for m in (1, 2, 3):
            with self.subTest(m=m):
                self.assertTrue(validate_chevalley(m))

    def test_weight_shift(self):
        self.assertEqual(weight_shift(ChevalleyOp("raise", 1, 2), 1), (4,))
        self.assertEqual(weight_shift(ChevalleyOp("raise", 1), 2), (1, -1))
        self.assertEqual(weight_shift(ChevalleyOp("lower", 2), 2), (0, -2))

    def test_operator_list(self):
        self.assertEqual(len(operators(2, 3)), 12)
        self.assertEqual(len(operators(2, 3, ("raise",))), 6)


class TestDividedPowers(unittest.TestCase):
    def setUp(self):
        self.space = SymplecticSpace(1)

    def test_second_divided_power(self):
        v = TensorVector.basis(self.space, (2, 2))
        self.assertEqual(act_divided(v, ChevalleyOp("raise", 1, 2)), TensorVector.basis(self.space, (1, 1)))
        spread = TensorVector(self.space, 2, {(1, 2): 1, (2, 1): 1})
        self.assertEqual(act_divided(v, ChevalleyOp("raise", 1, 1)), spread)
        self.assertFalse(act_divided(v, ChevalleyOp("raise", 1, 3)))

    def test_alpha_is_invariant(self):
        for m in (1, 2):
            space = SymplecticSpace(m)
            for op in operators(m, 2):
                self.assertFalse(act_divided(alpha(space), op))

    def test_weight_moves_by_shift(self):
        space = SymplecticSpace(2)
        v = TensorVector.basis(space, (2, 4, 3))
        for op in operators(2, 3):
            image = act_divided(v, op)
            shift = weight_shift(op, 2)
            for idx in image.coeffs:
                self.assertEqual(weight_of(idx, 2), tuple(a + b for a, b in zip(weight_of((2, 4, 3), 2), shift)))


@pytest.mark.parametrize("m", [1, 2])
def test_divided_powers_commute_with_the_brauer_action(m):
    space = SymplecticSpace(m)
    letters = [(kind, j) for kind in ("s", "e") for j in (1, 2)]
    for idx in itertools.product(range(1, 2 * m + 1), repeat=3):
        v = TensorVector.basis(space, idx)
        for op in operators(m, 3):
            for kind, j in letters:
                assert act_divided(act_generator(v, kind, j), op) == act_generator(act_divided(v, op), kind, j)


@pytest.mark.parametrize("m,n,lam,dim", [
    (1, 3, (1,), 2),
    (1, 2, (), 1),
    (1, 2, (2,), 1),
    (2, 3, (2, 1), 2),
    (2, 3, (1,), 3),
    (2, 4, (), 3),
])
def test_maximal_vector_dimensions(m, n, lam, dim):
    assert maximal_vectors(SymplecticSpace(m), n, lam).dim == dim


@pytest.mark.parametrize("m,g,lam", [(1, 1, (1,)), (2, 1, (1,)), (2, 0, (2, 1)), (1, 2, ())])
def test_maximal_vectors_are_spanned_by_z(m, g, lam):
    n = 2 * g + sum(lam)
    assert maximal_vectors(SymplecticSpace(m), n, lam) == z_span(m, g, lam, QQ)


def test_non_dominant_weight():
    with pytest.raises(ValueError):
        maximal_vectors(SymplecticSpace(2), 2, (0, 1))
    with pytest.raises(ValueError):
        maximal_vectors(SymplecticSpace(1), 2, (-2,))


def test_maximal_vectors_over_a_prime_field():
    f2 = FieldSpec.prime(2)
    assert maximal_vectors(SymplecticSpace(1), 3, (1,), f2).dim == 2


@pytest.mark.parametrize("m,n,dim", [(1, 1, 1), (1, 2, 2), (2, 2, 3)])
def test_commutant_of_the_full_tensor_power(m, n, dim):
    space = SymplecticSpace(m)
    assert commutant_dimension(space, n, Subspace.full((2 * m) ** n, QQ)) == dim


def test_commutant_of_a_quotient():
    space = SymplecticSpace(1)
    full = Subspace.full(4, QQ)
    assert commutant_dimension(space, 2, full, ideal_image(1, 2, 1, QQ)) == 1
    assert commutant_dimension(space, 2, full, full) == 0


def test_induced_rank():
    cols_a = [{0: 1}, {}]
    cols_b = [{0: 2}, {}]
    cols_c = [{}, {1: 1}]
    assert induced_rank([cols_a, cols_b], 2, QQ) == 1
    assert induced_rank([cols_a, cols_c], 2, QQ) == 2


if __name__ == "__main__":
    unittest.main()
