# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from supergaudin.exactalg import Z, as_ratfun, qmatrix
from supergaudin.opring import (
    NonInvertibleSymbol,
    NotUnitModU,
    OperatorElement,
    OpMatrix,
    USeries,
    agree,
    ber_cdet_factorization,
    berezinian,
    cdet,
    elements_agree,
    manin_check,
    normal_order,
    op_invert,
    op_mul,
    permute_matrix,
    quasideterminant,
    schur_factorization,
)
from supergaudin.superdata import Perm, SignSeq


def scalar(coeffs, depth=6):
    return OperatorElement.scalar(coeffs, depth=depth)


def constants(rows):
    return [[scalar({0: value}) for value in row] for row in rows]


def coefficients(element):
    return element.scalar_coefficients()


def weyl_matrix():
    """[[d, z], [1, d]], whose entries in column one commute."""
    d = scalar({1: 1})
    return [[d, scalar({0: Z})], [scalar({0: 1}), d]]


class TestNormalOrder(object):
    def test_first_power(self):
        assert normal_order(1, 1) == [(0, 1), (1, 1)]

    def test_second_power(self):
        assert normal_order(2, 2) == [(0, 1), (1, 4), (2, 2)]

    def test_negative_z_power(self):
        with pytest.raises(ValueError):
            normal_order(0, -1)


@given(integers(0, 6), integers(0, 6))
def test_normal_order_length(j, k):
    terms = normal_order(j, k)
    assert len(terms) == min(j, k) + 1
    assert terms[0] == (0, 1)


@given(integers(-4, -1), integers(0, 5))
def test_pseudo_normal_order_never_stops(j, k):
    assert len(normal_order(j, k)) == k + 1


class TestOperatorElement(object):
    def test_leibniz(self):
        product = op_mul(scalar({1: 1}), scalar({0: Z}))
        assert product.exact
        assert coefficients(product) == {1: Z, 0: as_ratfun(1)}

    def test_window(self):
        d = OperatorElement.d(1, 1)
        data = d.to_json()
        assert data["window"] == [1, 1]
        assert data["exact"]

    def test_shift(self):
        shifted = scalar({0: Z}).shift(-2)
        assert coefficients(shifted) == {-2: Z}
        assert shifted.top == -2

    def test_invert_derivative(self):
        inverse = op_invert(scalar({1: 1}))
        assert inverse.exact
        assert coefficients(inverse) == {-1: as_ratfun(1)}

    def test_invert_first_order(self):
        element = scalar({1: 1, 0: Z}, depth=4)
        inverse = op_invert(element)

        assert inverse.top == -1
        assert not inverse.exact
        values = coefficients(inverse)
        assert values[-1] == as_ratfun(1)
        assert values[-2] == -Z

        unit = OperatorElement.identity(1, 4)
        assert agree(op_mul(element, inverse), unit) == []

    def test_invert_zero(self):
        with pytest.raises(NonInvertibleSymbol):
            op_invert(OperatorElement.zero(1))

    def test_singular_symbol(self):
        element = OperatorElement.constant(qmatrix([(0, 0, 1)], 2))
        with pytest.raises(NonInvertibleSymbol):
            op_invert(element)

    def test_coefficient_below_floor(self):
        inverse = op_invert(scalar({1: 1, 0: Z}, depth=2))
        with pytest.raises(ValueError):
            inverse.coefficient(inverse.floor - 1)


class TestUSeries(object):
    def test_inverse(self):
        one = OperatorElement.identity(1)
        d = OperatorElement.d(1, 1)
        series = USeries.linear(one, d, 3)
        inverse = series.inverse()

        assert coefficients(inverse.coefficient(2)) == {2: as_ratfun(1)}
        assert coefficients(inverse.coefficient(3)) == {3: as_ratfun(-1)}
        assert elements_agree(series * inverse, series.identity_like())

    def test_not_a_unit(self):
        series = USeries.constant(OperatorElement.d(1, 1), 2)
        with pytest.raises(NotUnitModU):
            series.inverse()

    def test_shape(self):
        one = OperatorElement.identity(1)
        d = OperatorElement.d(1, 1)
        assert USeries.linear(one, d, 2).shape_violations() == []
        assert USeries.linear(d, one, 2).shape_violations() == [(0, 1)]


class TestDeterminants(object):
    def test_cdet_of_one_entry(self):
        entry = scalar({1: 1, 0: Z})
        matrix = OpMatrix([[entry]], SignSeq.standard(1, 0))
        assert elements_agree(cdet(matrix), entry)

    def test_cdet_of_constants(self):
        matrix = OpMatrix(constants([[1, 2], [3, 4]]), SignSeq.standard(2, 0))
        assert coefficients(cdet(matrix)) == {0: as_ratfun(-2)}

    def test_cdet_keeps_column_order(self):
        matrix = OpMatrix(weyl_matrix(), SignSeq.standard(2, 0))
        expected = scalar({2: 1, 0: -Z})
        assert elements_agree(cdet(matrix), expected)

    def test_super_diagonal(self):
        matrix = OpMatrix(constants([[2, 0], [0, 3]]), SignSeq.standard(1, 1))
        ber = berezinian(matrix)
        assert coefficients(ber) == {0: as_ratfun(2) / 3}

        left, right = ber_cdet_factorization(matrix)
        assert elements_agree(left, right)

    def test_even_factorization(self):
        matrix = OpMatrix(weyl_matrix(), SignSeq.standard(2, 0))
        left, right = ber_cdet_factorization(matrix)
        assert elements_agree(left, right)

    def test_schur(self):
        matrix = OpMatrix(weyl_matrix(), SignSeq.standard(2, 0))
        left, right = schur_factorization(matrix, 1)
        assert elements_agree(left, right)
        with pytest.raises(ValueError):
            schur_factorization(matrix, 2)

    def test_quasideterminant(self):
        matrix = OpMatrix(constants([[2, 0], [0, 3]]), SignSeq.standard(2, 0))
        assert coefficients(quasideterminant(matrix, 0, 0)) == {0: as_ratfun(2)}

    def test_permute(self):
        matrix = OpMatrix(constants([[1, 2], [3, 4]]), SignSeq.standard(1, 1))
        swapped = permute_matrix(matrix, Perm.transposition(2, 1, 2))

        assert coefficients(swapped[0, 0]) == {0: as_ratfun(4)}
        assert coefficients(swapped[0, 1]) == {0: as_ratfun(3)}
        assert swapped.signs.bits == (1, 0)


class TestManin(object):
    def test_constants_are_manin(self):
        matrix = OpMatrix(constants([[1, 2], [3, 4]]), SignSeq.standard(2, 0))
        assert manin_check(matrix) == []

    def test_violation(self):
        zero = OperatorElement.zero(1)
        entries = [[scalar({1: 1}), zero], [zero, scalar({0: Z})]]
        matrix = OpMatrix(entries, SignSeq.standard(2, 0))
        assert (0, 0, 1, 1) in manin_check(matrix)


@given(integers(1, 5), integers(-5, 5), integers(-5, 5))
@settings(max_examples=100, deadline=None)
def test_invert_round_trip(lead, constant, slope):
    element = scalar({1: lead, 0: constant + slope * Z}, depth=4)
    inverse = op_invert(element, verify=False)
    unit = OperatorElement.identity(1, 4)

    assert agree(op_mul(element, inverse), unit) == []
    assert agree(op_mul(inverse, element), unit) == []
