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

"""Exact scalars, rational functions and sparse matrices.

Scalars live in sympy's ``QQ``, rational functions of the spectral variable
``z`` in the fraction field ``QQ(z)`` and matrices are sympy ``SDM`` sparse
matrices over one of the two.  A small float bridge hands exact matrices to
numpy for spectra that have no exact counterpart.
"""

from __future__ import unicode_literals, division

from collections import OrderedDict, deque
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import attr
import numpy as np
from logbook import Logger
from sympy import QQ, field
from sympy.polys.matrices.sdm import SDM
from sympy.polys.ring_series import rs_mul, rs_series_inversion

from . import SupergaudinError

logger = Logger("supergaudin.exactalg")

_FIELD, Z = field("z", QQ)
RATFUN = _FIELD.to_domain()
POLYS = _FIELD.ring
ZP = POLYS.gens[0]


class PoleOutsideSet(SupergaudinError):
    pass


class NotCommuting(SupergaudinError):
    def __init__(self, pair):
        self.pair = pair
        super(NotCommuting, self).__init__(
            "matrices {} and {} do not commute".format(*pair)
        )


class DimensionMismatch(SupergaudinError):
    pass


# Scalars


def rat(value, denominator=1):
    # type: (Any, int) -> Any
    """Coerce ints, strings "p/q", Fractions and QQ elements into QQ."""
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            value = QQ(int(p), int(q))
        else:
            value = QQ(int(text))
    elif isinstance(value, Fraction):
        value = QQ(value.numerator, value.denominator)
    elif isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    elif isinstance(value, int):
        value = QQ(value)
    else:
        value = QQ.convert(value)

    if denominator != 1:
        value = value / QQ(denominator)

    return value


def rat_to_str(value):
    # type: (Any) -> str
    value = rat(value)
    if value.denominator == 1:
        return "{}".format(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def rat_to_float(value):
    # type: (Any) -> float
    return int(value.numerator) / int(value.denominator)


def rationalize(number, max_denominator=10 ** 4, tol=1e-9):
    # type: (complex, int, float) -> Optional[Any]
    """Closest small-denominator rational to a float, or None if not close."""
    number = complex(number)
    if abs(number.imag) > tol:
        return None
    fraction = Fraction(number.real).limit_denominator(max_denominator)
    if abs(float(fraction) - number.real) > tol * max(1.0, abs(number.real)):
        return None
    return QQ(fraction.numerator, fraction.denominator)


# Polynomials and rational functions


def poly_coeffs(poly):
    # type: (Any) -> List[Any]
    """Dense coefficient list of a polynomial in z, lowest degree first."""
    if not poly:
        return []
    coeffs = [QQ.zero] * (poly.degree() + 1)
    for (power,), coeff in poly.terms():
        coeffs[power] = coeff
    return coeffs


def poly_from_coeffs(coeffs):
    # type: (Sequence[Any]) -> Any
    return POLYS.from_dict(
        {(power,): rat(c) for power, c in enumerate(coeffs) if rat(c)}
    )


def poly_eval(coeffs, point):
    result = 0
    for coeff in reversed(coeffs):
        result = result * point + coeff
    return result


def as_ratfun(value):
    # type: (Any) -> Any
    """Coerce scalars, polynomials and rational functions into QQ(z)."""
    if isinstance(value, type(Z)):
        return value
    if isinstance(value, type(ZP)):
        return _FIELD.new(value, POLYS.one)
    return _FIELD(rat(value))


def ratfun(num, den=(1,)):
    # type: (Sequence[Any], Sequence[Any]) -> Any
    """Rational function from coefficient lists, lowest degree first."""
    denominator = poly_from_coeffs(den)
    if not denominator:
        raise ZeroDivisionError("zero denominator")
    return _FIELD.new(poly_from_coeffs(num), denominator)


def simple_pole(point, order=1):
    # type: (Any, int) -> Any
    """The rational function (z - point)^(-order)."""
    return _FIELD.one / (Z - as_ratfun(rat(point))) ** order


def ratfun_normalize(f):
    # type: (Any) -> Tuple[List[Any], List[Any]]
    """Canonical (num, den) coefficient lists with a monic denominator."""
    f = as_ratfun(f)
    lead = f.denom.LC
    numer = f.numer * (QQ.one / lead)
    denom = f.denom * (QQ.one / lead)
    return poly_coeffs(numer), poly_coeffs(denom)


def ratfun_derive(f):
    # type: (Any) -> Any
    return as_ratfun(f).diff(Z)


def ratfun_is_constant(f):
    # type: (Any) -> bool
    f = as_ratfun(f)
    return f.numer.degree() <= 0 and f.denom.degree() == 0


def ratfun_constant(f):
    # type: (Any) -> Any
    """The value of a z-free rational function."""
    f = as_ratfun(f)
    if not ratfun_is_constant(f):
        raise ValueError("{} depends on z".format(f))
    return f.numer.LC / f.denom.LC if f.numer else QQ.zero


def ratfun_eval(f, point):
    # type: (Any, Any) -> Any
    """Exact value of f at a rational point."""
    num, den = ratfun_normalize(f)
    point = rat(point)
    denominator = poly_eval(den, point)
    if not denominator:
        raise ZeroDivisionError("pole at {}".format(rat_to_str(point)))
    return poly_eval(num, point) / denominator


def ratfun_eval_float(f, point):
    # type: (Any, complex) -> complex
    num, den = ratfun_normalize(f)
    return poly_eval([rat_to_float(c) for c in num], complex(point)) / poly_eval(
        [rat_to_float(c) for c in den], complex(point)
    )


def ratfun_to_json(f):
    # type: (Any) -> Dict[str, List[str]]
    num, den = ratfun_normalize(f)
    return OrderedDict(
        [
            ("num", [rat_to_str(c) for c in num]),
            ("den", [rat_to_str(c) for c in den]),
        ]
    )


def ratfun_key(f):
    # type: (Any) -> Tuple[Tuple[str, ...], Tuple[str, ...]]
    """Hashable canonical form, equal iff the rational functions are."""
    num, den = ratfun_normalize(f)
    return tuple(rat_to_str(c) for c in num), tuple(rat_to_str(c) for c in den)


@attr.s
class PartialFractions(object):
    poly = attr.ib()
    terms = attr.ib(type=list, factory=list)

    def recombine(self, poles):
        # type: (Sequence[Any]) -> Any
        total = as_ratfun(self.poly)
        for index, order, coeff in self.terms:
            total += simple_pole(poles[index], order) * as_ratfun(coeff)
        return total


def partial_fractions(f, poles):
    # type: (Any, Sequence[Any]) -> PartialFractions
    """Split f into a polynomial part and principal parts at the poles.

    Terms are (pole_index, order, coefficient) for c * (z - z_i)^(-order),
    sorted by pole index and then order.  Raises PoleOutsideSet if the
    denominator keeps a root that is not among the poles.
    """
    f = as_ratfun(f)
    num, den = f.numer, f.denom
    terms = []

    for index, pole in enumerate(poles):
        point = rat(pole)
        linear = ZP - point
        rest, order = den, 0

        while rest.degree() > 0:
            quotient, remainder = divmod(rest, linear)
            if remainder:
                break
            rest, order = quotient, order + 1

        if not order:
            continue

        # Taylor coefficients of num / rest at the pole.
        shifted_num = num.compose(ZP, ZP + point)
        shifted_rest = rest.compose(ZP, ZP + point)
        series = rs_mul(
            shifted_num,
            rs_series_inversion(shifted_rest, ZP, order),
            ZP,
            order,
        )

        for pole_order in range(1, order + 1):
            coeff = series.get((order - pole_order,), QQ.zero)
            if coeff:
                terms.append((index, pole_order, coeff))

        principal = series.compose(ZP, ZP - point)
        num = (num - principal * rest).exquo(linear ** order)
        den = rest

    if den.degree() > 0:
        raise PoleOutsideSet(
            "denominator factor {} has roots outside {}".format(
                den, [rat_to_str(p) for p in poles]
            )
        )

    terms.sort(key=lambda term: (term[0], term[1]))
    return PartialFractions(num * (QQ.one / den.LC), terms)


# Matrices


def qmatrix(entries, rows, cols=None, domain=QQ):
    # type: (Any, int, Optional[int], Any) -> SDM
    """Sparse matrix from (row, col, value) triplets or a dict of dicts."""
    cols = rows if cols is None else cols
    elements = {}  # type: Dict[int, Dict[int, Any]]

    if isinstance(entries, dict):
        triplets = [
            (i, j, value)
            for i, row in entries.items()
            for j, value in row.items()
        ]
    else:
        triplets = entries

    for i, j, value in triplets:
        if not (0 <= i < rows and 0 <= j < cols):
            raise DimensionMismatch(
                "entry ({}, {}) outside a {}x{} matrix".format(i, j, rows, cols)
            )
        value = as_ratfun(value) if domain == RATFUN else rat(value)
        if value:
            elements.setdefault(i, {})[j] = value

    return SDM(elements, (rows, cols), domain)


def identity(size, domain=QQ):
    # type: (int, Any) -> SDM
    return SDM.eye((size, size), domain)


def zeros(size, cols=None, domain=QQ):
    # type: (int, Optional[int], Any) -> SDM
    return SDM.zeros((size, size if cols is None else cols), domain)


def to_ratfun_matrix(matrix):
    # type: (SDM) -> SDM
    if matrix.domain == RATFUN:
        return matrix
    return matrix.convert_to(RATFUN)


def scaled(matrix, factor):
    # type: (SDM, Any) -> SDM
    """A QQ matrix times a rational function, as a matrix over QQ(z)."""
    factor = as_ratfun(factor)
    if not factor:
        return SDM.zeros(matrix.shape, RATFUN)
    return matrix.applyfunc(lambda value: factor * as_ratfun(value), RATFUN)


def is_zero(matrix):
    # type: (SDM) -> bool
    return matrix.is_zero_matrix()


def matrices_equal(left, right):
    # type: (SDM, SDM) -> bool
    if left.shape != right.shape:
        return False
    if left.domain != right.domain:
        left, right = to_ratfun_matrix(left), to_ratfun_matrix(right)
    return (left - right).is_zero_matrix()


def commutator(left, right):
    # type: (SDM, SDM) -> SDM
    return left.matmul(right) - right.matmul(left)


def matvec(matrix, vector):
    # type: (SDM, Dict[int, Any]) -> Dict[int, Any]
    """Apply a sparse matrix to a sparse vector given as {index: value}."""
    result = {}
    for i, row in matrix.items():
        total = None
        for j, value in row.items():
            x = vector.get(j)
            if x:
                total = value * x if total is None else total + value * x
        if total:
            result[i] = total
    return result


def vector_add(left, right, factor=1):
    # type: (Dict[int, Any], Dict[int, Any], Any) -> Dict[int, Any]
    """left + factor * right for sparse vectors."""
    result = dict(left)
    for index, value in right.items():
        total = result.get(index, 0) + factor * value
        if total:
            result[index] = total
        else:
            result.pop(index, None)
    return result


def vector_scale(vector, factor):
    # type: (Dict[int, Any], Any) -> Dict[int, Any]
    if not factor:
        return {}
    return {index: factor * value for index, value in vector.items()}


def flatten(matrix):
    # type: (SDM) -> Dict[int, Any]
    cols = matrix.shape[1]
    return {
        i * cols + j: value
        for i, row in matrix.items()
        for j, value in row.items()
    }


def matrix_to_json(matrix):
    # type: (SDM) -> Dict[str, Any]
    rows, cols = matrix.shape
    entries = []
    for i in sorted(matrix):
        for j in sorted(matrix[i]):
            value = matrix[i][j]
            if matrix.domain == RATFUN:
                entries.append([i, j, ratfun_to_json(value)])
            else:
                entries.append([i, j, rat_to_str(value)])
    return OrderedDict([("rows", rows), ("cols", cols), ("entries", entries)])


# Linear algebra


def kernel_basis(matrix):
    # type: (SDM) -> List[Dict[int, Any]]
    """Basis of the right null space, by fraction-free row reduction."""
    _, cols = matrix.shape

    if not cols:
        return []
    if matrix.is_zero_matrix():
        return [{j: QQ.one} for j in range(cols)]

    reduced, _, pivots = matrix.rref_den()
    null, _ = reduced.nullspace_from_rref(pivots)
    return [dict(null[i]) for i in range(null.shape[0]) if i in null]


def rank(matrix):
    # type: (SDM) -> int
    if matrix.is_zero_matrix():
        return 0
    _, pivots = matrix.rref()
    return len(pivots)


@attr.s
class Echelon(object):
    """Incrementally row reduced set of sparse vectors.

    Rows are kept with a unit pivot at their smallest index; ``add`` reports
    whether a vector enlarged the span.
    """

    rows = attr.ib(type=list, factory=list)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector):
        # type: (Dict[int, Any]) -> Dict[int, Any]
        remainder = {k: v for k, v in vector.items() if v}
        for pivot, row in self.rows:
            coeff = remainder.get(pivot)
            if coeff:
                remainder = vector_add(remainder, row, -coeff)
        return remainder

    def contains(self, vector):
        # type: (Dict[int, Any]) -> bool
        return not self.reduce(vector)

    def add(self, vector):
        # type: (Dict[int, Any]) -> bool
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder)
        row = vector_scale(remainder, QQ.one / remainder[pivot])

        updated = []
        for other_pivot, other in self.rows:
            coeff = other.get(pivot)
            if coeff:
                other = vector_add(other, row, -coeff)
            updated.append((other_pivot, other))
        updated.append((pivot, row))
        self.rows = updated
        return True


def algebra_closure(gens, dim=None):
    # type: (Sequence[SDM], Optional[int]) -> List[SDM]
    """Linear basis of the unital algebra generated by square matrices."""
    if gens:
        dim = gens[0].shape[0]
        for gen in gens:
            if gen.shape != (dim, dim):
                raise DimensionMismatch(
                    "generator of shape {} in a {}x{} family".format(
                        gen.shape, dim, dim
                    )
                )
    elif dim is None:
        raise DimensionMismatch("an empty family needs an explicit dimension")

    unit = identity(dim)
    echelon = Echelon()
    echelon.add(flatten(unit))
    basis = [unit]
    queue = deque([unit])

    while queue:
        element = queue.popleft()
        for gen in gens:
            product = element.matmul(gen)
            if echelon.add(flatten(product)):
                basis.append(product)
                queue.append(product)

    logger.debug(
        "algebra closure of {} generators has dimension {}".format(
            len(gens), len(basis)
        )
    )
    return basis


def in_span(basis, matrix):
    # type: (Sequence[SDM], SDM) -> bool
    echelon = Echelon()
    for element in basis:
        echelon.add(flatten(element))
    return echelon.contains(flatten(matrix))


def check_commuting(matrices):
    # type: (Sequence[SDM]) -> None
    for i, left in enumerate(matrices):
        for j in range(i + 1, len(matrices)):
            if not commutator(left, matrices[j]).is_zero_matrix():
                raise NotCommuting((i, j))


# Float bridge


def to_numpy(matrix):
    # type: (SDM) -> np.ndarray
    result = np.zeros(matrix.shape, dtype=complex)
    for i, row in matrix.items():
        for j, value in row.items():
            result[i, j] = rat_to_float(value)
    return result


@attr.s
class JointSpectrum(object):
    dim = attr.ib(type=int)
    vectors = attr.ib(type=list, factory=list)
    eigenvalues = attr.ib(type=list, factory=list)
    combination = attr.ib(type=list, factory=list)
    simple = attr.ib(type=bool, default=False)
    residual = attr.ib(type=float, default=0.0)

    def __len__(self):
        return len(self.vectors)


def residual_accepted(residual, norm, vector_norm, tol):
    # type: (float, float, float, float) -> bool
    """|Av - theta v| <= tol * |A| * |v|, with a tol^2 floor for A = 0."""
    if norm == 0:
        return residual <= tol * tol
    return residual <= tol * norm * vector_norm


def joint_numeric_eigen(commuting, seed=0, tol=1e-9, dim=None, separation=None):
    # type: (Sequence[SDM], int, float, Optional[int], Optional[float]) -> JointSpectrum
    """Approximate joint eigenvectors of exactly commuting matrices.

    A random rational combination of the family is diagonalized in floats and
    every eigenvector is accepted only if its residual against each member
    stays within tol * |A| * |v|.
    """
    if commuting:
        dim = commuting[0].shape[0]
    elif dim is None:
        raise DimensionMismatch("an empty family needs an explicit dimension")

    check_commuting(commuting)
    separation = tol if separation is None else separation

    rng = np.random.default_rng(seed)
    weights = [
        QQ(int(rng.integers(1, 1000)), int(rng.integers(1, 100)))
        for _ in commuting
    ]

    combined = zeros(dim)
    for weight, member in zip(weights, commuting):
        combined = combined + member.mul(weight)

    floats = [to_numpy(member) for member in commuting]
    values, columns = np.linalg.eig(to_numpy(combined))

    spectrum = JointSpectrum(dim=dim)
    worst = 0.0

    for position in range(dim):
        vector = columns[:, position]
        vector = vector / np.linalg.norm(vector)
        thetas = []
        accepted = True

        for member in floats:
            image = member @ vector
            theta = np.vdot(vector, image) / np.vdot(vector, vector)
            residual = np.linalg.norm(image - theta * vector)
            worst = max(worst, residual)
            if not residual_accepted(residual, np.linalg.norm(member),
                                     np.linalg.norm(vector), tol):
                accepted = False
                break
            thetas.append(theta)

        if accepted:
            spectrum.vectors.append(vector)
            spectrum.eigenvalues.append(thetas)
            spectrum.combination.append(values[position])

    gaps = [
        abs(a - b)
        for i, a in enumerate(spectrum.combination)
        for b in spectrum.combination[i + 1:]
    ]
    spectrum.simple = len(spectrum) == dim and all(
        gap > separation for gap in gaps
    )
    spectrum.residual = worst

    logger.debug(
        "joint spectrum: {} of {} vectors accepted, simple={}".format(
            len(spectrum), dim, spectrum.simple
        )
    )
    return spectrum
