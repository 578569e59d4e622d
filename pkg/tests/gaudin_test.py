# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers
from sympy import QQ

from supergaudin.exactalg import Z, as_ratfun, simple_pole
from supergaudin.gaudin import (
    CheckResult,
    GaudinSystem,
    Status,
    ber_operator,
    check_binomial_relation,
    check_cdet_consistency,
    check_commutativity,
    check_decomposition,
    check_expansion_shape,
    check_gl_invariance,
    check_manin,
    check_module_relations,
    check_parity_convention,
    check_permutation_invariance,
    check_quadratic_membership,
    check_schur_factorization,
    check_shapovalov_symmetry,
    check_sigma_correspondence,
    check_simple_spectrum,
    check_structure,
    check_super_lift,
    gauge_action,
    joint_eigen,
    lax_matrix,
    minimal_r,
    quadratic_hamiltonians,
    sample_z,
    singular_spaces,
    verify_algebraic_identities,
    verify_truncation,
)
from supergaudin.superdata import BadRange, NotHook, Weight


def gl2_pair():
    return GaudinSystem(2, 0, [(1,), (1,)], [0, 2], u_order=2)


def gl11_pair():
    return GaudinSystem(1, 1, [(1,), (1,)], [0, 2], u_order=2)


def assert_passes(result):
    assert result.status is Status.PASS, result.witness


class TestSystem(object):
    def test_repeated_points(self):
        with pytest.raises(BadRange):
            GaudinSystem(2, 0, [(1,), (1,)], [1, 1])

    def test_point_count(self):
        with pytest.raises(BadRange):
            GaudinSystem(2, 0, [(1,), (1,)], [1])

    def test_not_hook(self):
        with pytest.raises(NotHook):
            GaudinSystem(1, 1, [(2, 2)], [0])

    def test_dimension(self):
        assert gl2_pair().dim == 4
        assert GaudinSystem(2, 1, [(1,), (1,)], [0, 1]).dim == 9

    def test_with_z_shares_module(self):
        system = gl2_pair()
        other = system.with_z([1, 5])
        assert other.module is system.module
        assert other.z == [QQ(1), QQ(5)]


@given(integers(1, 4), integers(0, 100))
@settings(max_examples=20)
def test_sample_z_distinct(ell, seed):
    points = sample_z(ell, seed)
    assert len(set(points)) == ell
    assert all(abs(point) <= 10 * ell for point in points)


class TestLax(object):
    def test_diagonal_entry(self):
        lax = lax_matrix(gl2_pair())
        coeffs = lax[0, 0].terms
        assert set(coeffs) == {0, 1}

    def test_odd_row_sign(self):
        system = gl11_pair()
        lax = lax_matrix(system)
        # E_12(z) enters with a minus sign, E_21(z) with a plus sign
        assert (lax[0, 1].coefficient(0) + gauge_action(system, 0, 1)).is_zero_matrix()
        assert (lax[1, 0].coefficient(0) - gauge_action(system, 1, 0)).is_zero_matrix()

    def test_cdet_for_even_systems(self):
        operator = ber_operator(gl2_pair())
        assert operator.exact
        assert operator.top == 2


class TestClassicalChecks(object):
    def test_algebraic(self):
        system = gl2_pair()
        for check in (
            check_commutativity,
            check_binomial_relation,
            check_permutation_invariance,
            check_cdet_consistency,
            check_schur_factorization,
            check_expansion_shape,
            check_gl_invariance,
            check_manin,
        ):
            assert_passes(check(system))

    def test_module(self):
        system = gl2_pair()
        assert_passes(check_module_relations(system, samples=20))
        assert_passes(check_parity_convention(system))
        decomposition = check_decomposition(system)
        assert_passes(decomposition)
        assert decomposition.instance["dimension"] == 4

    def test_shapovalov(self):
        assert_passes(check_shapovalov_symmetry(gl2_pair()))

    def test_quadratic(self):
        system = gl2_pair()
        assert_passes(check_quadratic_membership(system))
        first, second = quadratic_hamiltonians(system)
        assert (first + second).is_zero_matrix()


class TestSuperChecks(object):
    def test_algebraic(self):
        system = gl11_pair()
        for check in (
            check_commutativity,
            check_binomial_relation,
            check_permutation_invariance,
            check_cdet_consistency,
            check_expansion_shape,
            check_gl_invariance,
            check_manin,
        ):
            assert_passes(check(system))

    def test_shapovalov_is_vacuous(self):
        assert check_shapovalov_symmetry(gl11_pair()).status is Status.VACUOUS

    def test_singular_weights(self):
        spaces = singular_spaces(gl11_pair())
        assert set(spaces) == {Weight(1, 1, (2, 0)), Weight(1, 1, (1, 1))}
        assert minimal_r(gl11_pair()) == 1


class TestSpectra(object):
    def test_one_dimensional_weight(self):
        system = gl2_pair()
        weight = Weight(2, 0, (1, 1))
        data = joint_eigen(system, singular_spaces(system)[weight])

        assert data.exact
        operator = data.operators[0]
        coeffs = operator.scalar_coefficients()
        assert coeffs[2] == as_ratfun(1)
        assert coeffs[1] == -(simple_pole(0) + simple_pole(2))
        assert coeffs[0] == 2 / (Z * (Z - 2))


class TestResults(object):
    def test_to_json(self):
        result = CheckResult("manin", millis=3.5)
        assert result.to_json()["status"] == "pass"
        assert "millis" not in result.to_json()
        assert result.to_json(timings=True)["millis"] == 3.5
        assert not result.failed


class TestSuperStructure(object):
    def test_structure(self):
        assert_passes(check_structure(gl11_pair()))

    def test_simple_spectrum(self):
        assert_passes(check_simple_spectrum(gl11_pair()))

    def test_lift_at_random_points(self):
        system = gl11_pair()
        for seed in range(3):
            other = system.with_z(sample_z(2, seed))
            assert_passes(check_super_lift(other, 1))


class TestGl21(object):
    system = GaudinSystem(2, 1, [(1,), (1,)], [0, 1], u_order=4)

    def test_identities(self):
        for result in verify_algebraic_identities(self.system):
            assert_passes(result)

    def test_truncation(self):
        for result in verify_truncation(self.system, p=1, k=0):
            assert_passes(result)
        assert_passes(check_sigma_correspondence(self.system, p=1))

    def test_structure(self):
        assert_passes(check_structure(self.system))
        assert_passes(check_simple_spectrum(self.system))


def test_minimal_r_for_three_sites():
    system = GaudinSystem(1, 1, [(1,), (1,), (1,)], [0, 1, 3], u_order=3)
    assert minimal_r(system) == 2
