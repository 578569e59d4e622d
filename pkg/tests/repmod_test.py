# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from
from sympy import QQ

from supergaudin.repmod import (
    NotClassical,
    Subspace,
    decompose,
    irreducible_module,
    natural_module,
    check_relations,
    parity_convention,
    shapovalov_gram,
    sigma_singular_correspondence,
    singular_space,
    tensor_compatible,
    tensor_product,
    truncate,
)
from supergaudin.superdata import BadRange, NotHook, Parity


def power(m, n, count):
    return tensor_product([natural_module(m, n)] * count)


class TestNaturalModule(object):
    def test_basis(self):
        module = natural_module(2, 1)
        assert module.dim == 3
        assert module.parities == [Parity.EVEN, Parity.EVEN, Parity.ODD]
        assert parity_convention(module) == []

    def test_relations(self):
        assert check_relations(natural_module(2, 1)) == []

    def test_singular(self):
        spaces = singular_space(natural_module(2, 1))
        assert len(spaces) == 1
        assert list(spaces.values())[0].vectors == [{0: QQ(1)}]


@given(sampled_from([(1, 1), (2, 0), (2, 1)]), integers(0, 5))
@settings(max_examples=10, deadline=None)
def test_tensor_square_relations(shape, seed):
    m, n = shape
    module = power(m, n, 2)
    assert check_relations(module, samples=20, seed=seed) == []
    assert parity_convention(module) == []


class TestDecomposition(object):
    def test_gl11_cube(self):
        decomposition = decompose(power(1, 1, 3))

        assert decomposition.dimension == 8
        assert decomposition.consistent
        assert [p.parts for p in decomposition.multiset()] == [
            (3,), (2, 1), (2, 1), (1, 1, 1)
        ]

    def test_gl21_square(self):
        decomposition = decompose(power(2, 1, 2))

        assert decomposition.dimension == 9
        assert decomposition.consistent
        assert [p.parts for p in decomposition.multiset()] == [(2,), (1, 1)]

    def test_irreducible_dims(self):
        assert irreducible_module((2,), 2, 0).dim == 3
        assert irreducible_module((1, 1), 2, 0).dim == 1
        assert irreducible_module((), 2, 1).dim == 1
        with pytest.raises(NotHook):
            irreducible_module((2, 2), 1, 1)


class TestTruncation(object):
    def test_natural(self):
        truncated = truncate(natural_module(2, 1), 1, 1)
        assert truncated.dim == 2
        assert truncated.parent == [0, 2]
        assert check_relations(truncated, samples=20) == []

    def test_tensor_compatible(self):
        assert tensor_compatible(power(2, 1, 2), 1, 1)

    def test_correspondence(self):
        result = sigma_singular_correspondence(power(2, 1, 2), (2,), 1)
        assert result.equal
        assert result.dims_match

    def test_correspondence_needs_hook(self):
        with pytest.raises(BadRange):
            sigma_singular_correspondence(power(2, 1, 2), (2, 2), 1)


class TestSubspace(object):
    def test_membership(self):
        space = Subspace.span(3, [{0: QQ(1), 1: QQ(1)}, {1: QQ(2)}])

        assert space.dim == 2
        assert space.contains({0: QQ(5)})
        assert not space.contains({2: QQ(1)})
        assert space.embed(space.coordinates({0: QQ(1), 1: QQ(3)})) == {
            0: QQ(1), 1: QQ(3)
        }

    def test_equality(self):
        left = Subspace.span(2, [{0: QQ(1)}, {1: QQ(1)}])
        right = Subspace.span(2, [{0: QQ(1), 1: QQ(1)}, {0: QQ(1), 1: QQ(-1)}])
        assert left.equals(right)


class TestShapovalov(object):
    def test_tensor_square(self):
        gram = shapovalov_gram(power(2, 0, 2))
        assert gram.is_symmetric()
        assert gram.adjoint_violations(power(2, 0, 2)) == []

    def test_super_modules(self):
        with pytest.raises(NotClassical):
            shapovalov_gram(natural_module(1, 1))
