"""Desk-scale grids over every configured field.

Each grid walks all parameters up to the stated bounds so a regression in
one corner of the parameter space is caught even when the anchor tests in
the per-module files still pass.
"""

import itertools

import pytest

from brauer_lab.bmw import check_specialization, check_z_specialization
from brauer_lab.experiments import (ExperimentSpec, check_bmw, check_decomposition_sum, check_duality,
                                    check_harmonic, check_ideal_dimension, check_maximal, check_presentation,
                                    check_surjectivity)
from brauer_lab.scalars import QQ, FieldSpec
from brauer_lab.tensor import SymplecticSpace

FIELDS = [QQ, FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)]
PRIME_FIELDS = FIELDS[1:]
FIELD_IDS = [fld.name for fld in FIELDS]


def _ideal_grid():
    shapes = [(1, n) for n in range(2, 6)] + [(2, n) for n in range(2, 5)]
    return [(m, n, f) for m, n in shapes for f in range(n // 2 + 1)]


def _maximal_grid():
    return [(m, n, g, lam.parts) for m in (1, 2) for n in range(1, 5)
            for g, lam in ExperimentSpec(m=m, n=n).maximal_pairs()]


@pytest.mark.parametrize("fld", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("m,n", list(itertools.product((1, 2, 3), range(2, 6))))
def test_presentation_grid(m, n, fld):
    result = check_presentation(m, n, fld)
    assert result.passed, result.witness


@pytest.mark.parametrize("fld", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("m,n,f", _ideal_grid())
def test_ideal_dimension_grid(m, n, f, fld):
    result = check_ideal_dimension(m, n, f, fld)
    assert result.passed, (result.expected, result.computed)


@pytest.mark.parametrize("m,n,f", _ideal_grid())
def test_duality_grid_in_characteristic_zero(m, n, f):
    result = check_duality(m, n, f, QQ)
    assert result.passed, result.details


@pytest.mark.parametrize("fld", PRIME_FIELDS, ids=FIELD_IDS[1:])
@pytest.mark.parametrize("m,n,f", _ideal_grid())
def test_harmonic_tensors_are_orthogonal_to_the_next_ideal(m, n, f, fld):
    result = check_duality(m, n, f, fld)
    assert result.passed
    assert result.details["pairing_on_lower"] == 0


@pytest.mark.parametrize("m,n,f,dim", [(1, 2, 0, 3), (2, 4, 1, 85)])
def test_duality_anchors(m, n, f, dim):
    result = check_duality(m, n, f, QQ)
    assert result.passed
    assert result.computed == dim


@pytest.mark.parametrize("fld", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("m,n,g,lam", _maximal_grid())
def test_maximal_vector_grid(m, n, g, lam, fld):
    result = check_maximal(m, n, g, lam, fld)
    assert result.passed, result.computed


@pytest.mark.parametrize("fld", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("m,n,f,rank", [(1, 2, 1, 1), (2, 3, 1, 5)])
def test_surjectivity_anchors_in_every_field(m, n, f, rank, fld):
    result = check_surjectivity(m, n, f, fld)
    assert result.passed
    assert result.computed == {"image_rank": rank, "commutant": rank}


@pytest.mark.parametrize("m,n", list(itertools.product((1, 2), range(1, 6))))
def test_bookkeeping_grid(m, n):
    result = check_decomposition_sum(m, n)
    assert result.passed, result.computed
    assert result.computed["total"] == (2 * m) ** n


@pytest.mark.parametrize("m,n", list(itertools.product((1, 2), (2, 3))))
def test_bmw_grid(m, n):
    assert check_bmw(m, n).passed
    assert all(check_specialization(n, m).values())


@pytest.mark.parametrize("m,n,g,lam", _maximal_grid())
def test_z_specialization_grid(m, n, g, lam):
    assert check_z_specialization(SymplecticSpace(m), g, lam)


@pytest.mark.parametrize("fld", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("m,n", list(itertools.product((1, 2), range(2, 5))))
def test_harmonic_grid(m, n, fld):
    result = check_harmonic(m, n, fld)
    assert result.passed, result.computed
