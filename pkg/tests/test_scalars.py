import unittest
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_lab.scalars import (LAURENT, QQ, FieldSpec, LaurentPoly, PrimeFieldElement, field_arith, render_scalar,
                                specialize_q1)


@st.composite
def laurent_polys(draw, max_terms=4):
    exps = draw(st.lists(st.integers(-6, 6), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(st.integers(-5, 5)) for e in exps})


class TestPrimeField(unittest.TestCase):
    def test_inverse_and_division(self):
        a = PrimeFieldElement(3, 7)
        self.assertEqual(a.inv(), PrimeFieldElement(5, 7))
        self.assertEqual(a / a, PrimeFieldElement(1, 7))
        self.assertEqual(1 / a, PrimeFieldElement(5, 7))

    def test_zero_has_no_inverse(self):
        with self.assertRaises(ZeroDivisionError):
            PrimeFieldElement(0, 5).inv()

    def test_modulus_mismatch(self):
        with self.assertRaises(TypeError):
            PrimeFieldElement(1, 3) + PrimeFieldElement(1, 5)

    def test_fraction_reduction(self):
        self.assertEqual(PrimeFieldElement.from_fraction(Fraction(1, 2), 3), PrimeFieldElement(2, 3))
        with self.assertRaises(ZeroDivisionError):
            PrimeFieldElement.from_fraction(Fraction(1, 3), 3)

    def test_equality_with_int(self):
        self.assertEqual(PrimeFieldElement(5, 3), 2)
        self.assertFalse(PrimeFieldElement(3, 3))


class TestFieldSpec(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(FieldSpec.parse("q"), QQ)
        self.assertEqual(FieldSpec.parse("fp5").p, 5)
        self.assertEqual([f.name for f in FieldSpec.parse_list("q, fp2,fp3")], ["q", "fp2", "fp3"])

    def test_parse_rejects(self):
        for token in ("fp4", "fpx", "r"):
            with self.subTest(token=token):
                with self.assertRaises(ValueError):
                    FieldSpec.parse(token)

    def test_coercion(self):
        self.assertEqual(QQ(3), Fraction(3))
        self.assertEqual(FieldSpec.prime(3)(Fraction(1, 2)), PrimeFieldElement(2, 3))
        with self.assertRaises(TypeError):
            QQ(PrimeFieldElement(1, 3))
        with self.assertRaises(TypeError):
            FieldSpec.prime(5)(PrimeFieldElement(1, 3))

    def test_zero_one(self):
        fld = FieldSpec.prime(7)
        self.assertFalse(fld.zero)
        self.assertEqual(fld.one * fld.one, fld.one)
        self.assertEqual(fld.characteristic, 7)
        self.assertEqual(QQ.characteristic, 0)


class TestLaurent(unittest.TestCase):
    def test_unit_inverse(self):
        q = LaurentPoly.q()
        self.assertEqual(q * q.inv(), LaurentPoly.constant(1))
        self.assertEqual((-q).inv(), LaurentPoly.monomial(-1, -1))

    def test_non_unit(self):
        with self.assertRaises(ZeroDivisionError):
            (LaurentPoly.q() + 1).inv()

    def test_exponent_bound(self):
        with self.assertRaises(OverflowError):
            LaurentPoly({2**40: 1})

    def test_specialize(self):
        q = LaurentPoly.q()
        self.assertEqual(specialize_q1(q - q.inv()), 0)
        self.assertEqual((q + q.inv() + 3).specialize(), 5)

    def test_ring_coercion(self):
        self.assertEqual(LAURENT(2), LaurentPoly.constant(2))
        with self.assertRaises(TypeError):
            LAURENT(Fraction(1, 2))
        with self.assertRaises(TypeError):
            LaurentPoly.q() + Fraction(1, 2)


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LAURENT.zero


@given(laurent_polys(), laurent_polys())
def test_specialization_is_a_homomorphism(a, b):
    assert (a * b).specialize() == a.specialize() * b.specialize()
    assert (a + b).specialize() == a.specialize() + b.specialize()


@given(st.integers(-50, 50), st.integers(1, 50), st.sampled_from([2, 3, 5, 7]))
def test_prime_field_matches_fraction_arithmetic(num, den, p):
    x = Fraction(num, den)
    if den % p == 0:
        return
    fld = FieldSpec.prime(p)
    assert fld(x) * fld(den) == fld(num)


def test_field_arith_checks_variants():
    assert field_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert field_arith(PrimeFieldElement(2, 5), None, "inv") == PrimeFieldElement(3, 5)
    assert field_arith(3, None, "neg") == Fraction(-3)
    with pytest.raises(TypeError):
        field_arith(Fraction(1), PrimeFieldElement(1, 3), "add")
    with pytest.raises(TypeError):
        field_arith(PrimeFieldElement(1, 3), PrimeFieldElement(1, 5), "mul")
    with pytest.raises(ZeroDivisionError):
        field_arith(Fraction(0), None, "inv")
    with pytest.raises(ValueError):
        field_arith(Fraction(1), None, "add")


def test_render_scalar():
    assert render_scalar(Fraction(-3, 4)) == "-3/4"
    assert render_scalar(2) == "2/1"
    assert render_scalar(PrimeFieldElement(4, 5)) == "4 (mod 5)"
    assert render_scalar(LaurentPoly({-1: -1, 1: 1})) == "-1*q^-1+1*q^1"


if __name__ == "__main__":
    unittest.main()
