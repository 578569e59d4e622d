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

"""Pseudo-differential operators with matrix coefficients.

An ``OperatorElement`` is a finite sum of ``C_k(z) d^k`` where every C_k is a
square matrix over QQ(z) and ``d`` is the derivative in z.  Negative powers
make the ring pseudo-differential; such elements are kept to a window of
``depth`` powers below their top symbol, with ``floor`` recording the lowest
power that is still exactly known.

``USeries`` are truncated power series in an even variable u with
operator coefficients, used for the exact expansion of Ber(1 + uL).  Both
rings share the interface used by the determinant machinery at the bottom
of the module.
"""

from __future__ import unicode_literals

import itertools
from collections import OrderedDict
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import attr
from logbook import Logger
from sympy import QQ, binomial, factorial
from sympy.polys.matrices.sdm import SDM

from . import SupergaudinError
from .exactalg import (
    DimensionMismatch,
    RATFUN,
    as_ratfun,
    identity,
    matvec,
    ratfun_constant,
    ratfun_derive,
    ratfun_is_constant,
    ratfun_to_json,
    rat_to_str,
    to_ratfun_matrix,
)
from .globals import DEFAULT_WINDOW
from .superdata import Perm, SignSeq

logger = Logger("supergaudin.opring")


class NonInvertibleSymbol(SupergaudinError):
    pass


class NotUnitModU(SupergaudinError):
    pass


class InversionFailure(SupergaudinError):
    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super(InversionFailure, self).__init__(
            "quasiminor {} is not invertible: {}".format(stage, cause)
        )


class InverseMismatch(SupergaudinError):
    pass


@lru_cache(maxsize=None)
def _binomial(n, k):
    # type: (int, int) -> Any
    return QQ(int(binomial(n, k)))


def normal_order(j, k):
    # type: (int, int) -> List[Tuple[int, Any]]
    """d^j z^k as sum_i c_i z^(k-i) d^(j-i), returned as [(i, c_i)]."""
    if k < 0:
        raise ValueError("the power of z must be nonnegative")
    terms = []
    for i in range(k + 1):
        coeff = _binomial(j, i) * _binomial(k, i) * QQ(int(factorial(i)))
        if coeff:
            terms.append((i, coeff))
    return terms


def derive_matrix(matrix):
    # type: (SDM) -> SDM
    rows = {}
    for i, row in matrix.items():
        derived = {}
        for j, value in row.items():
            value = ratfun_derive(value)
            if value:
                derived[j] = value
        if derived:
            rows[i] = derived
    return SDM(rows, matrix.shape, RATFUN)


def _max_floor(*floors):
    known = [floor for floor in floors if floor is not None]
    return max(known) if known else None


@attr.s
class OperatorElement(object):
    """sum_k terms[k] d^k, exactly known for all powers >= floor."""

    size = attr.ib(type=int)
    terms = attr.ib(type=dict, factory=dict)
    top = attr.ib(default=None)
    floor = attr.ib(default=None)
    depth = attr.ib(type=int, default=DEFAULT_WINDOW)
    _derivatives = attr.ib(init=False, factory=dict, repr=False, eq=False)

    def __attrs_post_init__(self):
        cleaned = {}
        for power, coeff in self.terms.items():
            if self.floor is not None and power < self.floor:
                continue
            if coeff.shape != (self.size, self.size):
                raise DimensionMismatch(
                    "coefficient of shape {} in a size {} operator".format(
                        coeff.shape, self.size
                    )
                )
            if not coeff.is_zero_matrix():
                cleaned[power] = to_ratfun_matrix(coeff)
        self.terms = cleaned

        highest = max(cleaned) if cleaned else None
        if self.top is None:
            self.top = highest if highest is not None else 0
        elif highest is not None and highest > self.top:
            self.top = highest

    @classmethod
    def zero(cls, size, depth=DEFAULT_WINDOW):
        # type: (int, int) -> OperatorElement
        return cls(size, {}, top=0, depth=depth)

    @classmethod
    def identity(cls, size, depth=DEFAULT_WINDOW):
        # type: (int, int) -> OperatorElement
        return cls(size, {0: identity(size, RATFUN)}, depth=depth)

    @classmethod
    def constant(cls, matrix, depth=DEFAULT_WINDOW):
        # type: (SDM, int) -> OperatorElement
        return cls(matrix.shape[0], {0: matrix}, top=0, depth=depth)

    @classmethod
    def d(cls, power, size, depth=DEFAULT_WINDOW):
        # type: (int, int, int) -> OperatorElement
        return cls(size, {power: identity(size, RATFUN)}, depth=depth)

    @classmethod
    def scalar(cls, coeffs, depth=DEFAULT_WINDOW, floor=None, top=None):
        # type: (Dict[int, Any], int, Optional[int], Optional[int]) -> OperatorElement
        """A 1x1 operator from {power: rational function}."""
        terms = {
            power: SDM({0: {0: as_ratfun(value)}} if value else {}, (1, 1), RATFUN)
            for power, value in coeffs.items()
        }
        return cls(1, terms, top=top, floor=floor, depth=depth)

    @property
    def exact(self):
        # type: () -> bool
        return self.floor is None

    @property
    def window(self):
        # type: () -> Tuple[int, int]
        if self.floor is not None:
            return self.floor, self.top
        return (min(self.terms) if self.terms else 0), self.top

    def identity_like(self):
        return OperatorElement.identity(self.size, self.depth)

    def zero_like(self):
        return OperatorElement.zero(self.size, self.depth)

    def is_zero(self):
        # type: () -> bool
        return not self.terms

    def leading_power(self):
        # type: () -> Optional[int]
        return max(self.terms) if self.terms else None

    def coefficient(self, power):
        # type: (int) -> SDM
        if self.floor is not None and power < self.floor:
            raise ValueError(
                "power {} lies below the known floor {}".format(power, self.floor)
            )
        coeff = self.terms.get(power)
        if coeff is None:
            return SDM.zeros((self.size, self.size), RATFUN)
        return coeff

    def derivative(self, power, order):
        # type: (int, int) -> SDM
        """order-th z-derivative of the coefficient of d^power."""
        if order == 0:
            return self.terms[power]
        key = (power, order)
        if key not in self._derivatives:
            self._derivatives[key] = derive_matrix(self.derivative(power, order - 1))
        return self._derivatives[key]

    def with_depth(self, depth):
        # type: (int) -> OperatorElement
        return OperatorElement(self.size, dict(self.terms), self.top, self.floor, depth)

    def shift(self, power):
        # type: (int) -> OperatorElement
        """Right multiplication by d^power, which needs no Leibniz terms."""
        return OperatorElement(
            self.size,
            {p + power: coeff for p, coeff in self.terms.items()},
            top=self.top + power,
            floor=None if self.floor is None else self.floor + power,
            depth=self.depth,
        )

    def scale(self, value):
        # type: (Any) -> OperatorElement
        value = as_ratfun(value)
        return OperatorElement(
            self.size,
            {p: coeff.mul(value) for p, coeff in self.terms.items()},
            top=self.top,
            floor=self.floor,
            depth=self.depth,
        )

    def _combine(self, other, sign):
        if self.size != other.size:
            raise DimensionMismatch("operators of size {} and {}".format(
                self.size, other.size))
        floor = _max_floor(self.floor, other.floor)
        terms = dict(self.terms)
        for power, coeff in other.terms.items():
            current = terms.get(power)
            if current is None:
                terms[power] = coeff if sign > 0 else -coeff
            else:
                terms[power] = current + coeff if sign > 0 else current - coeff
        return OperatorElement(
            self.size,
            terms,
            top=max(self.top, other.top),
            floor=floor,
            depth=min(self.depth, other.depth),
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return OperatorElement(
            self.size,
            {p: -coeff for p, coeff in self.terms.items()},
            top=self.top,
            floor=self.floor,
            depth=self.depth,
        )

    def __mul__(self, other):
        return op_mul(self, other)

    def inverse(self):
        return op_invert(self)

    def apply(self, vector):
        # type: (Dict[int, Any]) -> Dict[int, Dict[int, Any]]
        """{power: C_power v} for a vector of the module."""
        vector = {i: as_ratfun(value) for i, value in vector.items()}
        result = {}
        for power, coeff in self.terms.items():
            image = matvec(coeff, vector)
            if image:
                result[power] = image
        return result

    def scalar_coefficients(self):
        # type: () -> Dict[int, Any]
        if self.size != 1:
            raise DimensionMismatch("not a scalar operator")
        return {
            power: coeff[0][0]
            for power, coeff in self.terms.items()
            if 0 in coeff
        }

    def to_json(self):
        # type: () -> Dict[str, Any]
        low, high = self.window
        coeffs = OrderedDict()
        for power in sorted(self.terms, reverse=True):
            coeff = self.terms[power]
            coeffs["{}".format(power)] = [
                [i, j, ratfun_to_json(value)]
                for i in sorted(coeff)
                for j, value in sorted(coeff[i].items())
            ]
        return OrderedDict(
            [
                ("size", self.size),
                ("window", [low, high]),
                ("exact", self.exact),
                ("coeffs", coeffs),
            ]
        )


def op_mul(left, right, depth=None):
    # type: (OperatorElement, OperatorElement, Optional[int]) -> OperatorElement
    """Product with d^p f = sum_i C(p, i) f^(i) d^(p-i).

    Terms below top - depth are dropped; the result only claims exactness if
    nothing nonzero was dropped and both factors were exact.
    """
    if left.size != right.size:
        raise DimensionMismatch(
            "operators of size {} and {}".format(left.size, right.size)
        )

    depth = min(left.depth, right.depth) if depth is None else depth
    top = left.top + right.top
    inherited = _max_floor(
        None if left.floor is None else left.floor + right.top,
        None if right.floor is None else left.top + right.floor,
    )
    low = top - depth if inherited is None else max(top - depth, inherited)
    truncated = False
    result = {}  # type: Dict[int, SDM]

    for p, coeff in left.terms.items():
        for q in right.terms:
            i = 0
            while True:
                power = p + q - i
                factor = _binomial(p, i)

                if p >= 0 and i > p:
                    break

                derived = right.derivative(q, i)
                if derived.is_zero_matrix():
                    break

                if power < low:
                    if factor:
                        truncated = True
                    break

                if factor:
                    term = coeff.matmul(derived)
                    if factor != 1:
                        term = term.mul(as_ratfun(factor))
                    current = result.get(power)
                    result[power] = term if current is None else current + term
                i += 1

    floor = low if (truncated or inherited is not None) else None
    return OperatorElement(left.size, result, top=top, floor=floor, depth=depth)


def op_invert(element, depth=None, verify=True):
    # type: (OperatorElement, Optional[int], bool) -> OperatorElement
    """Two-sided inverse through the leading symbol.

    With a = A d^t (1 + X) the inverse is sum_j (-X)^j d^(-t) A^(-1), kept to
    ``depth`` powers below -t.
    """
    depth = element.depth if depth is None else depth
    top = element.leading_power()
    if top is None:
        raise NonInvertibleSymbol("the zero operator has no inverse")

    lead = element.terms[top]
    try:
        lead_inverse = lead.inv()
    except Exception as error:
        raise NonInvertibleSymbol(
            "leading symbol at d^{} is singular: {}".format(top, error)
        )

    size = element.size
    base = op_mul(
        OperatorElement.d(-top, size, depth),
        OperatorElement.constant(lead_inverse, depth),
        depth,
    )

    rest_terms = {p: c for p, c in element.terms.items() if p != top}
    result = base

    if rest_terms or element.floor is not None:
        rest = OperatorElement(
            size, rest_terms, top=top - 1, floor=element.floor, depth=depth
        )
        step = -op_mul(base, rest, depth)
        series = OperatorElement.identity(size, depth)
        power = series
        j = 1
        while j * step.top >= -depth and not step.is_zero():
            power = op_mul(power, step, depth + j * step.top)
            series = series + power
            j += 1
        # every power of X below -depth is truncated away
        series = OperatorElement(
            size, series.terms, top=0, floor=_max_floor(series.floor, -depth),
            depth=depth,
        )
        result = op_mul(series, base, depth)

    result = OperatorElement(
        size, result.terms, top=-top, floor=result.floor, depth=depth
    )

    if verify:
        unit = OperatorElement.identity(size, depth)
        for product in (op_mul(element, result, depth), op_mul(result, element, depth)):
            mismatch = agree(product, unit)
            if mismatch:
                raise InverseMismatch(
                    "inverse fails at powers {} (window {})".format(
                        mismatch, product.window
                    )
                )

    return result


def agree(left, right):
    # type: (OperatorElement, OperatorElement) -> List[int]
    """Powers where two operators differ within their common known range."""
    floor = _max_floor(left.floor, right.floor)
    powers = set(left.terms) | set(right.terms)
    mismatched = []
    for power in sorted(powers, reverse=True):
        if floor is not None and power < floor:
            continue
        if not (left.coefficient(power) - right.coefficient(power)).is_zero_matrix():
            mismatched.append(power)
    return mismatched


@attr.s
class USeries(object):
    """sum_i terms[i] u^i modulo u^(order + 1)."""

    terms = attr.ib(type=list)
    order = attr.ib(type=int)

    def __attrs_post_init__(self):
        if len(self.terms) != self.order + 1:
            raise DimensionMismatch(
                "{} terms for a series of order {}".format(len(self.terms), self.order)
            )

    @property
    def size(self):
        # type: () -> int
        return self.terms[0].size

    @classmethod
    def constant(cls, element, order):
        # type: (OperatorElement, int) -> USeries
        zero = OperatorElement.zero(element.size, element.depth)
        return cls([element] + [zero] * order, order)

    @classmethod
    def linear(cls, constant, slope, order):
        # type: (OperatorElement, OperatorElement, int) -> USeries
        """constant + u * slope."""
        zero = OperatorElement.zero(constant.size, constant.depth)
        terms = [constant] + [zero] * order
        if order >= 1:
            terms[1] = slope
        return cls(terms, order)

    def identity_like(self):
        return USeries.constant(self.terms[0].identity_like(), self.order)

    def zero_like(self):
        return USeries.constant(self.terms[0].zero_like(), self.order)

    def is_zero(self):
        # type: () -> bool
        return all(term.is_zero() for term in self.terms)

    def coefficient(self, power):
        # type: (int) -> OperatorElement
        return self.terms[power]

    def __add__(self, other):
        return USeries([a + b for a, b in zip(self.terms, other.terms)], self.order)

    def __sub__(self, other):
        return USeries([a - b for a, b in zip(self.terms, other.terms)], self.order)

    def __neg__(self):
        return USeries([-term for term in self.terms], self.order)

    def __mul__(self, other):
        result = [term.zero_like() for term in self.terms]
        for i, left in enumerate(self.terms):
            if left.is_zero():
                continue
            for j in range(self.order + 1 - i):
                right = other.terms[j]
                if right.is_zero():
                    continue
                result[i + j] = result[i + j] + op_mul(left, right)
        return USeries(result, self.order)

    def inverse(self):
        return useries_invert(self)

    def shape_violations(self):
        # type: () -> List[Tuple[int, int]]
        """(u-power, d-power) pairs outside 0 <= d-power <= u-power."""
        return [
            (i, power)
            for i, term in enumerate(self.terms)
            for power in term.terms
            if not 0 <= power <= i
        ]


def _unit_value(element):
    """c when element is the operator c * 1 with c a nonzero rational."""
    if set(element.terms) != {0} or not element.exact:
        return None
    coeff = element.terms[0]
    diagonal = coeff.get(0, {}).get(0)
    if diagonal is None or not ratfun_is_constant(diagonal):
        return None
    value = ratfun_constant(diagonal)
    expected = identity(element.size, RATFUN).mul(as_ratfun(value))
    if not (coeff - expected).is_zero_matrix():
        return None
    return value


def useries_invert(series):
    # type: (USeries) -> USeries
    value = _unit_value(series.terms[0])
    if value is None:
        raise NotUnitModU("constant term is not an invertible scalar")

    scale = QQ.one / value
    result = [series.terms[0].identity_like().scale(scale)]
    for k in range(1, series.order + 1):
        total = series.terms[0].zero_like()
        for j in range(1, k + 1):
            if series.terms[j].is_zero() or result[k - j].is_zero():
                continue
            total = total + op_mul(series.terms[j], result[k - j])
        result.append(total.scale(-scale))
    return USeries(result, series.order)


@attr.s
class OpMatrix(object):
    """A square matrix of ring elements with a 0/1 type sequence."""

    entries = attr.ib(type=list)
    signs = attr.ib(type=SignSeq)

    def __attrs_post_init__(self):
        if any(len(row) != len(self.entries) for row in self.entries):
            raise DimensionMismatch("an operator matrix must be square")
        if len(self.signs) != len(self.entries):
            raise DimensionMismatch(
                "type of length {} for a matrix of size {}".format(
                    len(self.signs), len(self.entries)
                )
            )

    @property
    def size(self):
        # type: () -> int
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def submatrix(self, positions):
        # type: (Sequence[int]) -> OpMatrix
        return OpMatrix(
            [[self.entries[i][j] for j in positions] for i in positions],
            self.signs.sub(positions),
        )

    def block(self, rows, cols):
        # type: (Sequence[int], Sequence[int]) -> List[List[Any]]
        return [[self.entries[i][j] for j in cols] for i in rows]

    def map(self, function):
        # type: (Callable[[Any], Any]) -> OpMatrix
        return OpMatrix(
            [[function(entry) for entry in row] for row in self.entries], self.signs
        )


def quasiminors(matrix):
    # type: (OpMatrix) -> List[Any]
    """Principal quasiminors by successive Schur complements Z - Y W^-1 X."""
    entries = [list(row) for row in matrix.entries]
    size = matrix.size
    minors = []

    for k in range(size):
        pivot = entries[k][k]
        minors.append(pivot)
        if k == size - 1:
            break
        try:
            pivot_inverse = pivot.inverse()
        except SupergaudinError as error:
            raise InversionFailure(k + 1, error)

        for i in range(k + 1, size):
            if entries[i][k].is_zero():
                continue
            left = entries[i][k] * pivot_inverse
            for j in range(k + 1, size):
                if entries[k][j].is_zero():
                    continue
                entries[i][j] = entries[i][j] - left * entries[k][j]

    logger.debug("computed {} quasiminors".format(len(minors)))
    return minors


def berezinian(matrix):
    # type: (OpMatrix) -> Any
    """d_1^(s_1) ... d_N^(s_N) with hats +1 for type 0 and -1 for type 1."""
    minors = quasiminors(matrix)
    result = minors[0].identity_like()
    for stage, (minor, hat) in enumerate(zip(minors, matrix.signs.hats), 1):
        if hat < 0:
            try:
                minor = minor.inverse()
            except SupergaudinError as error:
                raise InversionFailure(stage, error)
        result = result * minor
    return result


def _sign(permutation):
    inversions = sum(
        1
        for i in range(len(permutation))
        for j in range(i + 1, len(permutation))
        if permutation[i] > permutation[j]
    )
    return -1 if inversions % 2 else 1


def cdet(matrix):
    # type: (OpMatrix) -> Any
    """Column determinant: the factor from column 1 stands leftmost."""
    size = matrix.size
    total = matrix[0, 0].zero_like()
    for permutation in itertools.permutations(range(size)):
        product = None
        for column, row in enumerate(permutation):
            factor = matrix[row, column]
            if factor.is_zero():
                product = None
                break
            product = factor if product is None else product * factor
        else:
            total = total + product if _sign(permutation) > 0 else total - product
    return total


def rdet(entries):
    # type: (List[List[Any]]) -> Any
    """Row determinant: the factor from row 1 stands leftmost."""
    size = len(entries)
    total = None
    for permutation in itertools.permutations(range(size)):
        product = None
        for row, column in enumerate(permutation):
            factor = entries[row][column]
            product = factor if product is None else product * factor
        total = product if total is None else (
            total + product if _sign(permutation) > 0 else total - product
        )
    return total


def elements_agree(left, right):
    # type: (Any, Any) -> bool
    if isinstance(left, USeries):
        return all(
            not agree(a, b) for a, b in zip(left.terms, right.terms)
        )
    return not agree(left, right)


def _supercommutator(left, right, left_parity, right_parity):
    sign = -1 if left_parity * right_parity % 2 else 1
    forward = left * right
    backward = right * left
    return forward - backward if sign > 0 else forward + backward


def manin_check(matrix):
    # type: (OpMatrix) -> List[Tuple[int, int, int, int]]
    """All (i, j, k, l), 0-based, where the Manin relation fails."""
    size = matrix.size
    s = matrix.signs
    violations = []
    products = {}

    def supercommutator(a, b):
        key = (a, b)
        if key not in products:
            (i, j), (k, l) = a, b
            products[key] = _supercommutator(
                matrix[i, j], matrix[k, l], s[i] + s[j], s[k] + s[l]
            )
        return products[key]

    # swapping i with k or j with l gives back the same relation
    for i, j, k, l in itertools.product(range(size), repeat=4):
        if i > k or j > l:
            continue
        left = supercommutator((i, j), (k, l))
        right = supercommutator((k, j), (i, l))
        exponent = s[i] * s[j] + s[i] * s[k] + s[j] * s[k]
        if exponent % 2:
            right = -right
        if not elements_agree(left, right):
            violations.append((i, j, k, l))

    return violations


def permute_matrix(matrix, permutation):
    # type: (OpMatrix, Perm) -> OpMatrix
    """A^sigma with entries a_{sigma^-1(i), sigma^-1(j)} and type s^sigma."""
    if len(permutation) != matrix.size:
        raise DimensionMismatch("permutation of {} points for size {}".format(
            len(permutation), matrix.size))
    inverse = permutation.inverse()
    size = matrix.size
    entries = [
        [matrix[inverse(i + 1) - 1, inverse(j + 1) - 1] for j in range(size)]
        for i in range(size)
    ]
    return OpMatrix(entries, permutation.apply_signs(matrix.signs))


def matrix_inverse(matrix):
    # type: (OpMatrix) -> List[List[Any]]
    """Gauss-Jordan inverse using left row operations only."""
    size = matrix.size
    one = matrix[0, 0].identity_like()
    zero = matrix[0, 0].zero_like()
    rows = [
        list(matrix.entries[i]) + [one if i == j else zero for j in range(size)]
        for i in range(size)
    ]

    for k in range(size):
        pivot_inverse = None
        for candidate in range(k, size):
            try:
                pivot_inverse = rows[candidate][k].inverse()
            except SupergaudinError:
                continue
            rows[k], rows[candidate] = rows[candidate], rows[k]
            break
        if pivot_inverse is None:
            raise InversionFailure(k + 1, "no invertible pivot in column")

        rows[k] = [pivot_inverse * entry for entry in rows[k]]
        for i in range(size):
            if i == k or rows[i][k].is_zero():
                continue
            factor = rows[i][k]
            rows[i] = [
                entry - factor * pivot_entry
                for entry, pivot_entry in zip(rows[i], rows[k])
            ]

    return [row[size:] for row in rows]


def quasideterminant(matrix, i, j):
    # type: (OpMatrix, int, int) -> Any
    """|A|_{ij}, the inverse of the (j, i) entry of A^-1 (0-based)."""
    inverse = matrix_inverse(matrix)
    return inverse[j][i].inverse()


def ber_cdet_factorization(matrix):
    # type: (OpMatrix) -> Tuple[Any, Any]
    """(Ber A, cdet of the even block times rdet of the odd block of A^-1)."""
    m = matrix.signs.zeros
    if matrix.signs != SignSeq.standard(m, matrix.size - m):
        raise ValueError("the factorization needs the standard type")

    left = berezinian(matrix)
    even = OpMatrix(matrix.block(range(m), range(m)), SignSeq.standard(m, 0))
    right = cdet(even)
    if matrix.size > m:
        inverse = matrix_inverse(matrix)
        odd = [row[m:] for row in inverse[m:]]
        right = right * rdet(odd)
    return left, right


def schur_factorization(matrix, k):
    # type: (OpMatrix, int) -> Tuple[Any, Any]
    """(Ber A, Ber(W) Ber(Z - Y W^-1 X)) for the split after k rows."""
    size = matrix.size
    if not 1 <= k < size:
        raise ValueError("split {} outside 1..{}".format(k, size - 1))

    head, tail = list(range(k)), list(range(k, size))
    w = OpMatrix(matrix.block(head, head), matrix.signs.sub(head))
    w_inverse = matrix_inverse(w)
    x = matrix.block(head, tail)
    y = matrix.block(tail, head)
    z = matrix.block(tail, tail)

    complement = []
    for i in range(len(tail)):
        row = []
        for j in range(len(tail)):
            entry = z[i][j]
            for a in range(k):
                if y[i][a].is_zero():
                    continue
                for b in range(k):
                    if x[b][j].is_zero() or w_inverse[a][b].is_zero():
                        continue
                    entry = entry - y[i][a] * w_inverse[a][b] * x[b][j]
            row.append(entry)
        complement.append(row)

    left = berezinian(matrix)
    right = berezinian(w) * berezinian(OpMatrix(complement, matrix.signs.sub(tail)))
    return left, right
