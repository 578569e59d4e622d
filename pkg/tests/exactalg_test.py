# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis.strategies import integers
from sympy import QQ

from supergaudin.exactalg import (
    Echelon,
    NotCommuting,
    PoleOutsideSet,
    ZP,
    Z,
    algebra_closure,
    as_ratfun,
    check_commuting,
    identity,
    joint_numeric_eigen,
    kernel_basis,
    matvec,
    partial_fractions,
    qmatrix,
    rank,
    rat,
    rat_to_str,
    rationalize,
    ratfun,
    ratfun_eval,
    ratfun_key,
    residual_accepted,
    simple_pole,
)


class TestScalars(object):
    def test_rat(self):
        assert rat("3/6") == QQ(1, 2)
        assert rat(" -4 ") == QQ(-4)
        assert rat(Fraction(2, 4)) == QQ(1, 2)
        assert rat(7, 2) == QQ(7, 2)

    def test_rat_rejects_booleans(self):
        with pytest.raises(TypeError):
            rat(True)

    def test_rat_to_str(self):
        assert rat_to_str(QQ(-3, 4)) == "-3/4"
        assert rat_to_str(QQ(10, 2)) == "5"

    def test_rationalize(self):
        assert rationalize(0.5) == QQ(1, 2)
        assert rationalize(1 / 3) == QQ(1, 3)
        assert rationalize(0.5 + 1j) is None
        assert rationalize(math.pi) is None


@given(integers(-50, 50), integers(1, 50))
def test_rat_reads_fractions(numerator, denominator):
    assert rat("{}/{}".format(numerator, denominator)) == QQ(numerator, denominator)


class TestRationalFunctions(object):
    def test_partial_fractions(self):
        f = simple_pole(0) + 2 * simple_pole(1, 2) + Z
        split = partial_fractions(f, [QQ(0), QQ(1)])

        assert split.terms == [(0, 1, QQ(1)), (1, 2, QQ(2))]
        assert split.poly == ZP
        assert split.recombine([QQ(0), QQ(1)]) == f

    def test_pole_outside_set(self):
        with pytest.raises(PoleOutsideSet):
            partial_fractions(simple_pole(3), [QQ(0), QQ(1)])

    def test_eval(self):
        f = ratfun([1], [-1, 1])
        assert ratfun_eval(f, 3) == QQ(1, 2)
        with pytest.raises(ZeroDivisionError):
            ratfun_eval(f, 1)

    def test_key_is_canonical(self):
        left = ratfun([2], [-2, 2])
        right = as_ratfun(1) / (Z - 1)
        assert ratfun_key(left) == ratfun_key(right)


class TestLinearAlgebra(object):
    def test_kernel(self):
        matrix = qmatrix([(0, 0, 1), (0, 1, 1), (1, 0, 2), (1, 1, 2)], 2)
        kernel = kernel_basis(matrix)

        assert len(kernel) == 1
        assert matvec(matrix, kernel[0]) == {}
        assert rank(matrix) == 1

    def test_echelon(self):
        echelon = Echelon()
        assert echelon.add({0: QQ(1), 1: QQ(1)})
        assert echelon.add({1: QQ(2)})
        assert not echelon.add({0: QQ(3)})
        assert len(echelon) == 2

    def test_nilpotent_closure(self):
        jordan = qmatrix([(0, 1, 1), (1, 2, 1)], 3)
        assert len(algebra_closure([jordan])) == 3

    def test_closure_of_nothing(self):
        assert len(algebra_closure([], dim=4)) == 1

    def test_noncommuting(self):
        raising = qmatrix([(0, 1, 1)], 2)
        lowering = qmatrix([(1, 0, 1)], 2)
        with pytest.raises(NotCommuting):
            check_commuting([raising, lowering, identity(2)])

    def test_joint_spectrum(self):
        first = qmatrix([(0, 0, 1), (1, 1, 2)], 2)
        second = qmatrix([(0, 0, 3), (1, 1, 5)], 2)
        spectrum = joint_numeric_eigen([first, second], seed=1)

        assert spectrum.simple
        assert len(spectrum) == 2
        values = sorted(round(abs(thetas[0])) for thetas in spectrum.eigenvalues)
        assert values == [1, 2]

    def test_zero_member_spectrum(self):
        spectrum = joint_numeric_eigen([qmatrix([], 2)], seed=0)
        assert len(spectrum) == 2
        assert not spectrum.simple

    def test_residual_is_relative(self):
        # a tiny member gets no absolute slack
        assert not residual_accepted(1e-19, 1e-12, 1.0, 1e-9)
        assert residual_accepted(1e-22, 1e-12, 1.0, 1e-9)
        assert residual_accepted(1e-19, 0.0, 1.0, 1e-9)
        assert not residual_accepted(1e-17, 0.0, 1.0, 1e-9)
