# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import pytest
from hypothesis import given
from hypothesis.strategies import sampled_from

from supergaudin.superdata import (
    BadRange,
    HookPartition,
    IndexSet,
    NotHook,
    Parity,
    Perm,
    RootData,
    SignSeq,
    Weight,
    additivity_check,
    partition_from_weight,
    partition_weight,
    partition_weight_sigma,
    sigma_p,
    weight_in_truncation,
)

hooks_21 = [(), (1,), (2,), (1, 1), (2, 1), (3, 1), (1, 1, 1), (2, 2, 1)]


class TestIndexSet(object):
    def test_labels(self):
        index = IndexSet(2, 1)
        assert index.labels() == ["1", "2", "1/2"]
        assert index.parity(2) is Parity.ODD
        assert index.position("1/2") == 2

    def test_bad_labels(self):
        index = IndexSet(2, 1)
        with pytest.raises(BadRange):
            index.position("3/2")
        with pytest.raises(BadRange):
            index.position("3")

    def test_standard_subset(self):
        assert IndexSet(2, 2).standard_subset(1, 1) == [0, 2]
        with pytest.raises(BadRange):
            IndexSet(2, 2).standard_subset(3, 0)


class TestPermutations(object):
    def test_sigma_p(self):
        assert sigma_p(2, 1, 1).images == (1, 3, 2)
        assert sigma_p(2, 1, 2).is_identity()
        with pytest.raises(BadRange):
            sigma_p(2, 1, 0)

    def test_inverse(self):
        perm = Perm((2, 3, 1))
        assert perm.inverse().images == (3, 1, 2)
        assert Perm.transposition(3, 1, 3).images == (3, 2, 1)

    def test_signs(self):
        signs = SignSeq.standard(2, 1)
        assert signs.hats == (1, 1, -1)
        assert sigma_p(2, 1, 1).apply_signs(signs).bits == (0, 1, 0)

    def test_not_a_permutation(self):
        with pytest.raises(BadRange):
            Perm((1, 1, 2))


class TestPartitions(object):
    def test_conjugate(self):
        assert HookPartition((3, 1)).conjugate().parts == (2, 1, 1)
        assert HookPartition((2, 0, 0)).parts == (2,)

    def test_hook(self):
        assert HookPartition((3, 1)).is_hook(1, 1)
        assert not HookPartition((2, 2)).is_hook(1, 1)

    def test_increasing_parts(self):
        with pytest.raises(BadRange):
            HookPartition((1, 2))

    def test_weights(self):
        assert partition_weight((2, 1), 1, 1).values == (2, 1)
        assert partition_weight((2, 1), 2, 1).values == (2, 1, 0)
        assert partition_weight_sigma((2, 1), 2, 1, 1).values == (2, 0, 1)
        with pytest.raises(NotHook):
            partition_weight((2, 2), 1, 1)


@given(sampled_from(hooks_21))
def test_weight_determines_partition(parts):
    weight = partition_weight(parts, 2, 1)
    assert partition_from_weight(weight) == HookPartition(parts)
    assert weight.size == sum(parts)


class TestWeights(object):
    def test_parity(self):
        weight = Weight(1, 2, (1, 1, 0))
        assert weight.parity is Parity.ODD
        assert weight_in_truncation(weight, 1, 1)
        assert not weight_in_truncation(Weight(1, 2, (0, 0, 1)), 1, 1)

    def test_additivity(self):
        mu = Weight(2, 0, (1, 0))
        gamma = Weight(2, 0, (0, 1))
        assert additivity_check(mu, gamma)

    def test_root_data(self):
        data = RootData(3)
        assert data.simple_root(2) == (0, 1, -1)
        assert data.cartan(1, 1) == 2
        assert data.cartan(1, 2) == -1
        assert data.root_decomposition([1, 0, -1]) == [1, 1]
        with pytest.raises(BadRange):
            data.root_decomposition([1, 0, 0])
