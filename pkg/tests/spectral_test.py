# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers
from sympy import QQ

from supergaudin.exactalg import ZP, Z, simple_pole
from supergaudin.gaudin import GaudinSystem, Status
from supergaudin.spectral import (
    INFINITY,
    NoConvergence,
    BetheConfig,
    BetheNotSatisfied,
    DeltaSpec,
    FuchsianOperator,
    NotFuchsianAtPoint,
    _newton,
    bethe_colors,
    bethe_eigen_operator,
    bethe_residuals,
    bethe_vector,
    check_bethe,
    check_fuchsian,
    check_sum_rule,
    delta_membership,
    eigenbasis_fuchsian_map,
    exponents_at,
    polynomial_kernel,
    solve_bethe,
    super_bethe_check,
    vacuum_index,
    verify_bethe_eigen,
)
from supergaudin.superdata import BadRange, Weight

H1 = -(simple_pole(0) + simple_pole(2))
H2 = 2 / (Z * (Z - 2))


def gl2_pair(z=(0, 2)):
    return GaudinSystem(2, 0, [(1,), (1,)], list(z), u_order=2)


def one_root():
    return BetheConfig(gl2_pair(), [1], [1])


class TestFuchsianOperator(object):
    def test_from_bethe_roots(self):
        operator = bethe_eigen_operator(one_root())
        assert operator.order == 2
        assert operator.coeffs == [H1, H2]

    def test_exponents(self):
        operator = FuchsianOperator([H1, H2])
        assert exponents_at(operator, 0) == [0, 2]
        assert exponents_at(operator, 2) == [0, 2]
        assert exponents_at(operator, INFINITY) == [-2, -1]

    def test_kernel(self):
        operator = FuchsianOperator([H1, H2])
        assert polynomial_kernel(operator) == [ZP - 1, ZP ** 2]

    def test_trivial_operator(self):
        operator = FuchsianOperator([0, 0])
        assert exponents_at(operator, 3) == [0, 1]
        assert polynomial_kernel(operator) == [ZP ** 0, ZP]

    def test_too_singular(self):
        operator = FuchsianOperator([simple_pole(0, 2)])
        with pytest.raises(NotFuchsianAtPoint):
            exponents_at(operator, 0)

    def test_round_trip(self):
        operator = FuchsianOperator([H1, H2])
        assert FuchsianOperator.from_operator(operator.to_operator()) == operator
        assert operator.to_json()["order"] == 2


class TestMembership(object):
    def test_bethe_operator(self):
        spec = DeltaSpec.for_system(gl2_pair(), (1, 1))
        report = delta_membership(FuchsianOperator([H1, H2]), spec)
        assert report.passed

    def test_extra_pole(self):
        spec = DeltaSpec.for_system(gl2_pair(), (1, 1))
        operator = FuchsianOperator([H1, H2 + simple_pole(5)])
        report = delta_membership(operator, spec)
        assert "singular_points" in report.failures

    def test_wrong_weight(self):
        spec = DeltaSpec.for_system(gl2_pair(), (2, 0))
        report = delta_membership(FuchsianOperator([H1, H2]), spec)
        assert "infinity" in report.failures


class TestBetheVectors(object):
    def test_single_root(self):
        configs = solve_bethe(gl2_pair(), [1])
        assert len(configs) == 1
        assert configs[0].roots == [QQ(1)]
        assert bethe_residuals(configs[0]) == [0]

    def test_other_points(self):
        configs = solve_bethe(gl2_pair((0, 1)), [1])
        assert configs[0].roots == [QQ(1, 2)]

    def test_vector(self):
        # e2 x e1 - e1 x e2
        assert bethe_vector(one_root()) == {2: QQ(1), 1: QQ(-1)}

    def test_verify(self):
        report = verify_bethe_eigen(one_root())
        assert report.failures == []
        assert report.eigen_operator is True

    def test_vacuum(self):
        system = gl2_pair()
        configs = solve_bethe(system, [])
        assert len(configs) == 1
        assert bethe_vector(configs[0]) == {vacuum_index(system): QQ(1)}
        assert verify_bethe_eigen(configs[0]).failures == []

    def test_off_shell(self):
        cfg = BetheConfig(gl2_pair(), [1], [QQ(101, 100)])
        assert any(bethe_residuals(cfg))
        assert "not singular" in verify_bethe_eigen(cfg).failures
        with pytest.raises(BetheNotSatisfied):
            bethe_eigen_operator(cfg)

    def test_bad_color(self):
        with pytest.raises(BadRange):
            BetheConfig(gl2_pair(), [2], [1])

    def test_colors(self):
        system = gl2_pair()
        assert bethe_colors(system, (1, 1)) == [1]
        assert bethe_colors(system, Weight(2, 0, (2, 0))) == []
        with pytest.raises(BadRange):
            bethe_colors(system, (3, -1))


@given(integers(1, 20))
@settings(max_examples=10, deadline=None)
def test_single_root_is_the_midpoint(spacing):
    configs = solve_bethe(gl2_pair((0, spacing)), [1])
    assert configs[0].roots == [QQ(spacing, 2)]


class TestComplexRoots(object):
    def test_two_roots(self):
        system = GaudinSystem(2, 0, [(2,), (2,)], [0, 1])
        configs = solve_bethe(system, [1, 1], seed=0)

        assert len(configs) == 1
        cfg = configs[0]
        assert not cfg.exact
        first, second = cfg.roots
        # roots of w^2 - w + 1/3
        assert abs(first + second - 1) < 1e-6
        assert abs(first * second - 1 / 3) < 1e-6
        assert len(cfg.to_json()["roots"][0]) == 2

        report = verify_bethe_eigen(cfg)
        assert report.failures == []
        assert report.eigen_operator is None

    def test_check_passes(self):
        system = GaudinSystem(2, 0, [(2,), (2,)], [0, 1])
        result = check_bethe(system)
        assert result.status is Status.PASS, result.witness

    def test_runaway_roots_are_rejected(self):
        # 1/w vanishes at infinity and Newton doubles w at every step
        def residual(values):
            return 1 / values

        def jacobian(values):
            return np.array([[-1 / values[0] ** 2]])

        start = np.array([1.0 + 0j])
        escaped = _newton(start, residual, jacobian, 1e-9, 100)
        assert abs(escaped[0]) > 1e8

        with pytest.raises(NoConvergence):
            _newton(start, residual, jacobian, 1e-9, 100, radius=1e3)


class TestEigenbasis(object):
    def test_map(self):
        system = gl2_pair()
        mapping = eigenbasis_fuchsian_map(system, Weight(2, 0, (1, 1)))

        assert mapping.exact
        assert mapping.failures == []
        _, operator = mapping.pairs[0]
        assert operator.key() == bethe_eigen_operator(one_root()).key()

    def test_super_lift(self):
        super_system = GaudinSystem(1, 1, [(1,), (1,)], [0, 2], u_order=2)
        report = super_bethe_check(super_system, 1, one_root())
        assert report.partition.parts == (1, 1)


class TestChecks(object):
    def test_classical(self):
        system = gl2_pair()
        assert check_bethe(system).status is Status.PASS
        assert check_fuchsian(system).status is Status.PASS
        assert check_sum_rule(system).status is Status.PASS

    def test_super_is_vacuous(self):
        system = GaudinSystem(1, 1, [(1,), (1,)], [0, 2], u_order=2)
        assert check_bethe(system).status is Status.VACUOUS
        assert check_fuchsian(system).status is Status.VACUOUS
        assert check_sum_rule(system).status is Status.PASS
