# -*- coding: utf-8 -*-

# Copyright © 2023, 2024 The supergaudin authors
#
# Permission to use, copy, modify, and/or distribute this software for
# any purpose with or without fee is hereby granted, provided that the
# above copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY
# SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES WHATSOEVER
# RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN ACTION OF
# CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF OR IN
# CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.

"""Index sets, sign sequences, permutations, hook partitions and weights.

Positions are 0-based throughout the package: position i < m carries the
even label i + 1, position m + j carries the odd label j + 1/2.  Labels are
kept as twice their value so that half integers stay integral.
"""

from __future__ import unicode_literals

from collections import OrderedDict
from enum import Enum, unique
from typing import Dict, List, Sequence, Tuple

import attr

from . import SupergaudinError


class BadRange(SupergaudinError):
    pass


class NotHook(SupergaudinError):
    pass


@unique
class Parity(Enum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((self.value + other.value) % 2)


def _counts(instance, attribute, value):
    if value < 0:
        raise BadRange("{} must be nonnegative, got {}".format(attribute.name, value))


@attr.s(frozen=True)
class IndexSet(object):
    """The ordered index set 1 < ... < m < 1/2 < ... < n - 1/2."""

    m = attr.ib(type=int, validator=_counts)
    n = attr.ib(type=int, validator=_counts)

    @property
    def size(self):
        # type: () -> int
        return self.m + self.n

    @property
    def doubled_labels(self):
        # type: () -> List[int]
        return [2 * (i + 1) for i in range(self.m)] + [
            2 * j + 1 for j in range(self.n)
        ]

    def parity(self, position):
        # type: (int) -> Parity
        self._check(position)
        return Parity.EVEN if position < self.m else Parity.ODD

    def label(self, position):
        # type: (int) -> str
        self._check(position)
        if position < self.m:
            return "{}".format(position + 1)
        return "{}/2".format(2 * (position - self.m) + 1)

    def labels(self):
        # type: () -> List[str]
        return [self.label(position) for position in range(self.size)]

    def position(self, label):
        # type: (str) -> int
        """Inverse of ``label``."""
        text = "{}".format(label)
        if "/" in text:
            numerator, denominator = text.split("/")
            if int(denominator) != 2 or int(numerator) % 2 != 1:
                raise BadRange("{} is not a half integer label".format(text))
            position = self.m + (int(numerator) - 1) // 2
        else:
            position = int(text) - 1
            if position >= self.m:
                raise BadRange("{} is not an even label of I_{}|{}".format(
                    text, self.m, self.n))
        self._check(position)
        return position

    def standard_subset(self, p, k):
        # type: (int, int) -> List[int]
        """Positions of I_{p|k} inside I_{m|n}."""
        if not (0 <= p <= self.m and 0 <= k <= self.n):
            raise BadRange(
                "I_{}|{} is not inside I_{}|{}".format(p, k, self.m, self.n)
            )
        return list(range(p)) + [self.m + j for j in range(k)]

    def standard_signs(self):
        # type: () -> SignSeq
        return SignSeq.standard(self.m, self.n)

    def _check(self, position):
        if not 0 <= position < self.size:
            raise BadRange("position {} outside I_{}|{}".format(
                position, self.m, self.n))


@attr.s(frozen=True)
class SignSeq(object):
    bits = attr.ib(type=tuple, converter=tuple)

    @bits.validator
    def _check_bits(self, attribute, value):
        if any(bit not in (0, 1) for bit in value):
            raise BadRange("sign sequences only hold 0 and 1: {}".format(value))

    @classmethod
    def standard(cls, m, n):
        # type: (int, int) -> SignSeq
        return cls((0,) * m + (1,) * n)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, position):
        return self.bits[position]

    @property
    def hats(self):
        # type: () -> Tuple[int, ...]
        return tuple(-1 if bit else 1 for bit in self.bits)

    @property
    def zeros(self):
        # type: () -> int
        return self.bits.count(0)

    @property
    def ones(self):
        # type: () -> int
        return self.bits.count(1)

    def sub(self, positions):
        # type: (Sequence[int]) -> SignSeq
        return SignSeq(self.bits[position] for position in positions)


@attr.s(frozen=True)
class Perm(object):
    """A permutation of {1, ..., size} in one-line notation."""

    images = attr.ib(type=tuple, converter=tuple)

    @images.validator
    def _check_images(self, attribute, value):
        if sorted(value) != list(range(1, len(value) + 1)):
            raise BadRange("{} is not a permutation".format(value))

    @classmethod
    def identity(cls, size):
        # type: (int) -> Perm
        return cls(range(1, size + 1))

    @classmethod
    def transposition(cls, size, i, j):
        # type: (int, int, int) -> Perm
        """The transposition of the 1-based points i and j."""
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    def __len__(self):
        return len(self.images)

    def __call__(self, point):
        # type: (int) -> int
        return self.images[point - 1]

    def inverse(self):
        # type: () -> Perm
        images = [0] * len(self.images)
        for point, image in enumerate(self.images, 1):
            images[image - 1] = point
        return Perm(images)

    def is_identity(self):
        # type: () -> bool
        return self.images == tuple(range(1, len(self.images) + 1))

    def apply_signs(self, signs):
        # type: (SignSeq) -> SignSeq
        """s^sigma with s^sigma_i = s_{sigma^-1(i)}."""
        inverse = self.inverse()
        return SignSeq(signs[inverse(i) - 1] for i in range(1, len(self) + 1))

    def precedes(self, a, b):
        # type: (int, int) -> bool
        """The order <_sigma on 0-based positions."""
        return self(a + 1) < self(b + 1)


def sigma_p(m, n, p):
    # type: (int, int, int) -> Perm
    """The permutation moving the odd block right after the first p evens."""
    if not 1 <= p <= m:
        raise BadRange("sigma_p needs 1 <= p <= m, got p={} m={}".format(p, m))

    images = []
    for i in range(1, m + n + 1):
        if i <= p:
            images.append(i)
        elif i <= m:
            images.append(i + n)
        else:
            images.append(i - (m - p))
    return Perm(images)


def _positive_parts(instance, attribute, value):
    if any(part <= 0 for part in value):
        raise BadRange("partition parts must be positive: {}".format(value))
    if any(a < b for a, b in zip(value, value[1:])):
        raise BadRange("partition must be weakly decreasing: {}".format(value))


@attr.s(frozen=True)
class HookPartition(object):
    parts = attr.ib(
        type=tuple,
        converter=lambda parts: tuple(int(p) for p in parts if int(p) != 0),
        validator=_positive_parts,
    )

    def __len__(self):
        return len(self.parts)

    @property
    def size(self):
        # type: () -> int
        return sum(self.parts)

    def part(self, i):
        # type: (int) -> int
        """lambda_i for 1-based i, zero past the length."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def conjugate(self):
        # type: () -> HookPartition
        if not self.parts:
            return self
        return HookPartition(
            sum(1 for part in self.parts if part > column)
            for column in range(self.parts[0])
        )

    def is_hook(self, m, n):
        # type: (int, int) -> bool
        return self.part(m + 1) <= n

    def to_json(self):
        # type: () -> List[int]
        return list(self.parts)

    def __str__(self):
        return "({})".format(",".join("{}".format(p) for p in self.parts))


def hook_check(partition, m, n):
    # type: (Sequence[int], int, int) -> bool
    if not isinstance(partition, HookPartition):
        partition = HookPartition(partition)
    return partition.is_hook(m, n)


@attr.s(frozen=True)
class Weight(object):
    """A total map I_{m|n} -> Z, stored in position order."""

    m = attr.ib(type=int)
    n = attr.ib(type=int)
    values = attr.ib(type=tuple, converter=tuple)

    @values.validator
    def _check_values(self, attribute, value):
        if len(value) != self.m + self.n:
            raise BadRange("weight of length {} for I_{}|{}".format(
                len(value), self.m, self.n))

    @classmethod
    def zero(cls, m, n):
        # type: (int, int) -> Weight
        return cls(m, n, (0,) * (m + n))

    @classmethod
    def epsilon(cls, m, n, position):
        # type: (int, int, int) -> Weight
        values = [0] * (m + n)
        values[position] = 1
        return cls(m, n, values)

    @classmethod
    def from_mapping(cls, m, n, mapping):
        # type: (int, int, Dict[str, int]) -> Weight
        index = IndexSet(m, n)
        values = [0] * (m + n)
        for label, value in mapping.items():
            values[index.position(label)] = int(value)
        return cls(m, n, values)

    def __add__(self, other):
        return Weight(self.m, self.n, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return Weight(self.m, self.n, (a - b for a, b in zip(self.values, other.values)))

    def __getitem__(self, position):
        return self.values[position]

    @property
    def size(self):
        # type: () -> int
        return sum(self.values)

    @property
    def even(self):
        # type: () -> Tuple[int, ...]
        return self.values[:self.m]

    @property
    def odd(self):
        # type: () -> Tuple[int, ...]
        return self.values[self.m:]

    @property
    def parity(self):
        # type: () -> Parity
        return Parity(sum(self.odd) % 2)

    def is_nonnegative(self):
        # type: () -> bool
        return all(value >= 0 for value in self.values)

    def restrict(self, positions):
        # type: (Sequence[int]) -> Tuple[int, ...]
        return tuple(self.values[position] for position in positions)

    def to_json(self):
        # type: () -> Dict[str, int]
        index = IndexSet(self.m, self.n)
        return OrderedDict(
            (index.label(position), value)
            for position, value in enumerate(self.values)
        )

    def __str__(self):
        return " + ".join(
            "{}e{}".format(value, label)
            for label, value in self.to_json().items()
            if value
        ) or "0"


def _bracket(value):
    return max(value, 0)


def _hook(partition, m, n):
    partition = (partition if isinstance(partition, HookPartition)
                 else HookPartition(partition))
    if not partition.is_hook(m, n):
        raise NotHook("{} is not a ({}|{})-hook partition".format(partition, m, n))
    return partition


def partition_weight(partition, m, n):
    # type: (Sequence[int], int, int) -> Weight
    """The highest weight of L_{m|n}(lambda) for the standard Borel."""
    partition = _hook(partition, m, n)
    conjugate = partition.conjugate()
    return Weight(
        m,
        n,
        [partition.part(i) for i in range(1, m + 1)]
        + [_bracket(conjugate.part(i) - m) for i in range(1, n + 1)],
    )


def partition_weight_sigma(partition, m, n, p):
    # type: (Sequence[int], int, int, int) -> Weight
    """The highest weight of L_{m|n}(lambda) for the sigma_p Borel."""
    partition = _hook(partition, m, n)
    if not 1 <= p <= m:
        raise BadRange("need 1 <= p <= m, got p={} m={}".format(p, m))
    conjugate = partition.conjugate()
    even = [partition.part(i) for i in range(1, p + 1)] + [
        _bracket(partition.part(i) - n) for i in range(p + 1, m + 1)
    ]
    odd = [_bracket(conjugate.part(i) - p) for i in range(1, n + 1)]
    return Weight(m, n, even + odd)


def partition_from_weight(weight):
    # type: (Weight) -> HookPartition
    """Inverse of partition_weight on dominant polynomial weights."""
    even, odd = weight.even, weight.odd
    tail = []
    row = 1
    while True:
        length = sum(1 for value in odd if value >= row)
        if not length:
            break
        tail.append(length)
        row += 1
    return HookPartition(list(even) + tail)


def weight_in_truncation(weight, p, k):
    # type: (Weight, int, int) -> bool
    """Whether the weight is supported on I_{p|k}."""
    if not (0 <= p <= weight.m and 0 <= k <= weight.n):
        raise BadRange("I_{}|{} is not inside I_{}|{}".format(
            p, k, weight.m, weight.n))
    return not any(weight.even[p:]) and not any(weight.odd[k:])


def additivity_check(mu, gamma):
    # type: (Weight, Weight) -> bool
    """(mu + gamma)(E_ii) = 0 iff both vanish, for nonnegative weights."""
    total = mu + gamma
    return all(
        (total[i] == 0) == (mu[i] == 0 and gamma[i] == 0)
        for i in range(len(total.values))
    )


@attr.s(frozen=True)
class RootData(object):
    """Simple roots and coroots of gl_m."""

    m = attr.ib(type=int)

    def _check(self, i):
        if not 1 <= i <= self.m - 1:
            raise BadRange("simple root index {} outside 1..{}".format(i, self.m - 1))

    def simple_root(self, i):
        # type: (int) -> Tuple[int, ...]
        """alpha_i = e_i - e_{i+1} as a coefficient vector."""
        self._check(i)
        values = [0] * self.m
        values[i - 1] = 1
        values[i] = -1
        return tuple(values)

    def coroot(self, i, values):
        # type: (int, Sequence[int]) -> int
        """The pairing with E_ii - E_{i+1,i+1}."""
        self._check(i)
        return values[i - 1] - values[i]

    def cartan(self, i, j):
        # type: (int, int) -> int
        return self.coroot(j, self.simple_root(i))

    def root_decomposition(self, values):
        # type: (Sequence[int]) -> List[int]
        """Coefficients c_j with values = sum_j c_j alpha_j, or BadRange."""
        if sum(values) != 0:
            raise BadRange("{} is not in the root lattice".format(tuple(values)))
        coefficients = []
        running = 0
        for value in values[:-1]:
            running += value
            coefficients.append(running)
        return coefficients
