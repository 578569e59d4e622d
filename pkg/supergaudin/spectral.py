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

"""Bethe vectors and the Fuchsian operators attached to joint eigenvectors.

Everything here concerns the classical factor gl_m.  Bethe vectors are
built from the site actions of the tensor module, their eigenvalues are
monic scalar differential operators, and those operators are checked
against the exponent conditions that single out the polynomial kernels.
"""

from __future__ import unicode_literals, division

import itertools
from collections import OrderedDict
from typing import Any, Dict, List, Optional, Sequence, Tuple

import attr
import numpy as np
from logbook import Logger
from sympy import QQ, Integer, Poly, Symbol, expand, roots

from . import SupergaudinError
from .exactalg import (
    DimensionMismatch,
    POLYS,
    PoleOutsideSet,
    ZP,
    as_ratfun,
    kernel_basis,
    matvec,
    partial_fractions,
    poly_coeffs,
    poly_eval,
    poly_from_coeffs,
    qmatrix,
    rat,
    rat_to_float,
    rat_to_str,
    rationalize,
    ratfun_derive,
    ratfun_key,
    ratfun_to_json,
    simple_pole,
    to_numpy,
    vector_add,
    vector_scale,
)
from .gaudin import (
    EmptyWeightSpace,
    MultisetMismatch,
    NotSimpleSpectrum,
    ber_operator,
    coefficient_matrices,
    joint_eigen,
    result_for,
    signature_equal,
    singular_spaces,
    vacuous_for,
    window_family,
)
from .globals import EXACT_DEPTH
from .opring import OperatorElement
from .repmod import Subspace, highest_weight_index
from .superdata import (
    BadRange,
    HookPartition,
    NotHook,
    RootData,
    Weight,
    partition_weight,
)

logger = Logger("supergaudin.spectral")

INFINITY = "inf"
RHO = Symbol("rho")
W = Symbol("w")


class RootCollision(SupergaudinError):
    pass


class NoConvergence(SupergaudinError):
    pass


class BetheNotSatisfied(SupergaudinError):
    pass


class NotFuchsianAtPoint(SupergaudinError):
    def __init__(self, point, index):
        self.point = point
        self.index = index
        super(NotFuchsianAtPoint, self).__init__(
            "coefficient h_{} is too singular at {}".format(index, point)
        )


def _root_key(root):
    value = complex(root.evalf())
    return value.real, value.imag


def _to_sympy(value):
    return QQ.to_sympy(rat(value))


# Fuchsian operators


def _ratfuns(values):
    return [as_ratfun(value) for value in values]


@attr.s
class FuchsianOperator(object):
    """D = d^order + h_1 d^(order - 1) + ... + h_order."""

    coeffs = attr.ib(type=list, converter=_ratfuns)

    @property
    def order(self):
        # type: () -> int
        return len(self.coeffs)

    @classmethod
    def from_operator(cls, operator):
        # type: (OperatorElement) -> FuchsianOperator
        """The monic scalar differential operator held by an OperatorElement."""
        if operator.size != 1:
            raise DimensionMismatch("a Fuchsian operator is scalar")
        coeffs = operator.scalar_coefficients()
        if not operator.exact or any(power < 0 for power in coeffs):
            raise ValueError("not a differential operator")
        top = operator.leading_power()
        if top is None or coeffs[top] != as_ratfun(1):
            raise ValueError("operator is not monic")
        return cls([coeffs.get(top - i, 0) for i in range(1, top + 1)])

    def to_operator(self, depth=EXACT_DEPTH):
        # type: (int) -> OperatorElement
        terms = {self.order: 1}
        for i, coeff in enumerate(self.coeffs, 1):
            terms[self.order - i] = coeff
        return OperatorElement.scalar(terms, depth=depth)

    def key(self):
        return tuple(ratfun_key(coeff) for coeff in self.coeffs)

    def to_json(self):
        # type: () -> Dict[str, Any]
        return OrderedDict(
            [
                ("order", self.order),
                ("coeffs", [ratfun_to_json(coeff) for coeff in self.coeffs]),
            ]
        )


def apply_operator(operator, f):
    # type: (FuchsianOperator, Any) -> Any
    derivatives = [as_ratfun(f)]
    for _ in range(operator.order):
        derivatives.append(ratfun_derive(derivatives[-1]))
    total = derivatives[operator.order]
    for i, coeff in enumerate(operator.coeffs, 1):
        total = total + coeff * derivatives[operator.order - i]
    return total


def _strip(poly, linear):
    count = 0
    while True:
        quotient, remainder = divmod(poly, linear)
        if remainder:
            return poly, count
        poly, count = quotient, count + 1


def _local_term(f, point):
    """(v, c) with f = c (z - point)^v + higher order terms."""
    f = as_ratfun(f)
    linear = ZP - point
    numer, up = _strip(f.numer, linear)
    denom, down = _strip(f.denom, linear)
    leading = poly_eval(poly_coeffs(numer), point) / poly_eval(poly_coeffs(denom), point)
    return up - down, leading


def _indicial_leading(operator, point):
    leading = []
    for i, coeff in enumerate(operator.coeffs, 1):
        if not coeff:
            leading.append(QQ.zero)
            continue
        if point == INFINITY:
            excess = coeff.numer.degree() - coeff.denom.degree() + i
            value = coeff.numer.LC / coeff.denom.LC
        else:
            valuation, value = _local_term(coeff, point)
            excess = -valuation - i
        if excess > 0:
            raise NotFuchsianAtPoint(
                point if point == INFINITY else rat_to_str(point), i
            )
        leading.append(value if excess == 0 else QQ.zero)
    return leading


def _falling(x, k):
    result = Integer(1)
    for j in range(k):
        result = result * (x - j)
    return result


def exponents_at(operator, point):
    # type: (FuchsianOperator, Any) -> List[Any]
    """Roots with multiplicity of the indicial polynomial at a point or at "inf".

    At a finite point a the exponents are the rho with D (z - a)^rho of
    lower order than (z - a)^(rho - d); at infinity they describe solutions
    behaving like z^(-rho).
    """
    if point != INFINITY:
        point = rat(point)
    order = operator.order
    leading = _indicial_leading(operator, point)
    if not order:
        return []
    x = -RHO if point == INFINITY else RHO

    expression = _falling(x, order)
    for i, value in enumerate(leading, 1):
        if value:
            expression += _to_sympy(value) * _falling(x, order - i)

    polynomial = Poly(expand(expression), RHO)
    found = roots(polynomial)
    if sum(found.values()) < order:
        logger.warning(
            "only {} of {} exponents found in radicals".format(
                sum(found.values()), order)
        )
    result = []
    for root in sorted(found, key=_root_key):
        result.extend([root] * found[root])
    return result


def _same_multiset(found, expected):
    expected = sorted((Integer(value) for value in expected), key=_root_key)
    return len(found) == len(expected) and all(
        a == b for a, b in zip(sorted(found, key=_root_key), expected)
    )


def polynomial_kernel(operator):
    # type: (FuchsianOperator) -> List[Any]
    """Basis of the polynomial solutions, one monic polynomial per degree."""
    try:
        exponents = exponents_at(operator, INFINITY)
    except NotFuchsianAtPoint:
        exponents = []
    degrees = [
        int(-value) for value in exponents
        if value.is_integer and value <= 0
    ]
    bound = max(degrees) if degrees else -1
    if len(degrees) < len(exponents) or not exponents:
        fallback = operator.order + sum(
            coeff.denom.degree() for coeff in operator.coeffs
        )
        bound = max(bound, fallback)
    if bound < 0:
        return []

    images = [apply_operator(operator, ZP ** k) for k in range(bound + 1)]
    common = POLYS.one
    for image in images:
        if image:
            common = common.lcm(image.denom)
    columns = []
    for image in images:
        if image:
            columns.append(poly_coeffs(image.numer * common.exquo(image.denom)))
        else:
            columns.append([])

    rows = max([len(column) for column in columns] + [1])
    matrix = qmatrix(
        [
            (row, k, value)
            for k, column in enumerate(columns)
            for row, value in enumerate(column)
            if value
        ],
        rows,
        bound + 1,
    )
    kernel = kernel_basis(matrix)

    # highest degree first so that the echelon pivots are leading terms
    reversed_basis = Subspace.span(
        bound + 1,
        [{bound - k: value for k, value in vector.items()} for vector in kernel],
    )
    result = []
    for vector in reversed_basis.vectors:
        coeffs = [QQ.zero] * (bound + 1)
        for index, value in vector.items():
            coeffs[bound - index] = value
        result.append(poly_from_coeffs(coeffs))
    result.sort(key=lambda poly: poly.degree())
    logger.debug("polynomial kernel of dimension {} up to degree {}".format(
        len(result), bound))
    return result


def _int_tuple(values):
    return tuple(int(value) for value in values)


@attr.s
class DeltaSpec(object):
    weights = attr.ib(
        type=list, converter=lambda weights: [_int_tuple(w) for w in weights]
    )
    mu = attr.ib(type=tuple, converter=_int_tuple)
    z = attr.ib(type=list, converter=lambda points: [rat(p) for p in points])

    @property
    def m(self):
        # type: () -> int
        return len(self.mu)

    @property
    def sum_rule(self):
        # type: () -> bool
        return sum(self.mu) == sum(sum(weight) for weight in self.weights)

    @classmethod
    def for_system(cls, sys, weight):
        values = weight.values if isinstance(weight, Weight) else weight
        return cls(_highest_weights(sys), values, sys.z)


@attr.s
class DeltaReport(object):
    singular_points = attr.ib(type=bool)
    local_exponents = attr.ib(type=bool)
    infinity = attr.ib(type=bool)
    polynomial = attr.ib(type=bool)
    sum_rule = attr.ib(type=bool)

    @property
    def failures(self):
        # type: () -> List[str]
        names = ["singular_points", "local_exponents", "infinity", "polynomial",
                 "sum_rule"]
        return [name for name in names if not getattr(self, name)]

    @property
    def passed(self):
        # type: () -> bool
        return not self.failures


def delta_membership(operator, spec):
    # type: (FuchsianOperator, DeltaSpec) -> DeltaReport
    singular = True
    for coeff in operator.coeffs:
        try:
            partial_fractions(coeff, spec.z)
        except PoleOutsideSet:
            singular = False

    m = spec.m
    local = True
    for weight, point in zip(spec.weights, spec.z):
        expected = [weight[m - 1 - j] + j for j in range(m)]
        try:
            local = local and _same_multiset(exponents_at(operator, point), expected)
        except NotFuchsianAtPoint:
            local = False

    expected = [j + 1 - m - spec.mu[j] for j in range(m)]
    try:
        infinity = _same_multiset(exponents_at(operator, INFINITY), expected)
    except NotFuchsianAtPoint:
        infinity = False

    polynomial = len(polynomial_kernel(operator)) == operator.order

    report = DeltaReport(singular, local, infinity, polynomial, spec.sum_rule)
    if report.failures:
        logger.debug("operator outside the exponent set: {}".format(report.failures))
    return report


# Bethe vectors


def _highest_weights(sys):
    return [partition_weight(site, sys.m, 0).values for site in sys.sites]


def _classical(sys):
    if sys.n:
        raise BadRange("Bethe vectors are built for gl_m systems, got gl({}|{})".format(
            sys.m, sys.n))


@attr.s
class BetheConfig(object):
    """Colors i_1..i_p and roots w_1..w_p for a gl_m Gaudin system.

    Roots are exact rationals or, when they are not rational, complex
    floats from the Newton solver.
    """

    system = attr.ib()
    colors = attr.ib(type=list, converter=list)
    roots = attr.ib(type=list, converter=list)

    def __attrs_post_init__(self):
        _classical(self.system)
        if len(self.colors) != len(self.roots):
            raise BadRange("{} colors for {} roots".format(
                len(self.colors), len(self.roots)))
        for color in self.colors:
            if not 1 <= color <= self.system.m - 1:
                raise BadRange("color {} outside 1..{}".format(
                    color, self.system.m - 1))
        if self.exact:
            self.roots = [rat(root) for root in self.roots]

    @property
    def p(self):
        # type: () -> int
        return len(self.roots)

    @property
    def exact(self):
        # type: () -> bool
        return not any(
            isinstance(root, (complex, float, np.complexfloating, np.floating))
            for root in self.roots
        )

    def points(self):
        if self.exact:
            return list(self.system.z)
        return [rat_to_float(point) for point in self.system.z]

    def weight(self):
        # type: () -> Tuple[int, ...]
        """sum_k xi_k - sum_j alpha_(i_j), the weight of the Bethe vector."""
        data = RootData(self.system.m)
        values = [sum(column) for column in zip(*_highest_weights(self.system))]
        for color in self.colors:
            values = [a - b for a, b in zip(values, data.simple_root(color))]
        return tuple(values)

    def to_json(self):
        # type: () -> Dict[str, Any]
        if self.exact:
            values = [rat_to_str(root) for root in self.roots]
        else:
            values = [[complex(root).real, complex(root).imag] for root in self.roots]
        return OrderedDict([("colors", list(self.colors)), ("roots", values)])


def _check_collisions(values, points):
    for j, value in enumerate(values):
        for other in values[j + 1:]:
            if not value - other:
                raise RootCollision("two roots coincide at {}".format(value))
        for point in points:
            if not value - point:
                raise RootCollision("root {} sits on a marked point".format(value))


def _residuals(colors, values, points, highest, data):
    _check_collisions(values, points)
    result = []
    for j, color in enumerate(colors):
        total = 0
        for xi, point in zip(highest, points):
            pairing = data.coroot(color, xi)
            if pairing:
                total = total + pairing / (values[j] - point)
        for s, other in enumerate(colors):
            if s != j:
                entry = data.cartan(other, color)
                if entry:
                    total = total - entry / (values[j] - values[s])
        result.append(total)
    return result


def bethe_residuals(cfg):
    # type: (BetheConfig) -> List[Any]
    values = _residuals(
        cfg.colors, cfg.roots, cfg.points(), _highest_weights(cfg.system),
        RootData(cfg.system.m),
    )
    if cfg.exact:
        return [rat(value) for value in values]
    return [complex(value) for value in values]


def vacuum_index(sys):
    # type: (Any) -> int
    """Position of v_1 x ... x v_l, the tensor product of highest vectors."""
    module = sys.module
    label = tuple(
        factor.labels[highest_weight_index(factor)] for factor in module.factors
    )
    return module.index_of(label)


def _ordered_partitions(p, ell):
    """Every way to deal 0..p-1 into ell ordered sequences."""
    for order in itertools.permutations(range(p)):
        for cuts in itertools.combinations_with_replacement(range(p + 1), ell - 1):
            bounds = (0,) + cuts + (p,)
            yield [order[bounds[k]:bounds[k + 1]] for k in range(ell)]


def _lowered(sys, sequences, images):
    """f-monomials of every site applied to the vacuum, memoized in images."""
    key = tuple(sequences)
    if key not in images:
        vector = {vacuum_index(sys): QQ.one}
        for site, colors in enumerate(sequences):
            # the rightmost f acts first
            for color in reversed(colors):
                vector = matvec(sys.module.site_action(site, color, color - 1), vector)
        images[key] = vector
    return images[key]


def bethe_vector(cfg):
    # type: (BetheConfig) -> Any
    """The Bethe vector as an exact sparse dict, or a numpy array for float roots."""
    sys = cfg.system
    points = cfg.points()
    values = cfg.roots
    _check_collisions(values, points)

    total = {} if cfg.exact else np.zeros(sys.dim, dtype=complex)
    images = {}

    for parts in _ordered_partitions(cfg.p, sys.ell):
        denominator = QQ.one if cfg.exact else 1.0
        for site, part in enumerate(parts):
            chain = [values[j] for j in part] + [points[site]]
            for left, right in zip(chain, chain[1:]):
                denominator = denominator * (left - right)

        sequences = [tuple(cfg.colors[j] for j in part) for part in parts]
        image = _lowered(sys, sequences, images)
        if not image:
            continue
        if cfg.exact:
            total = vector_add(total, image, QQ.one / denominator)
        else:
            for index, value in image.items():
                total[index] += rat_to_float(value) / denominator

    return total


# Solving the Bethe equations


def _jacobian(colors, values, points, highest, data):
    size = len(values)
    jacobian = np.zeros((size, size), dtype=complex)
    for j, color in enumerate(colors):
        for xi, point in zip(highest, points):
            pairing = data.coroot(color, xi)
            if pairing:
                jacobian[j, j] -= pairing / (values[j] - point) ** 2
        for s, other in enumerate(colors):
            if s == j:
                continue
            entry = data.cartan(other, color)
            if entry:
                term = entry / (values[j] - values[s]) ** 2
                jacobian[j, j] += term
                jacobian[j, s] -= term
    return jacobian


def _newton(start, residual, jacobian, tol, max_iter, radius=np.inf):
    """Damped Newton kept inside the disc |w| <= radius.

    Every Bethe residual tends to zero as a root runs off to infinity, so
    iterates leaving the disc count as failed steps.
    """
    values = start
    current = np.abs(residual(values)).max()

    for iteration in range(max_iter):
        if current <= tol:
            logger.debug("Newton converged after {} steps".format(iteration))
            return values
        try:
            step = np.linalg.solve(jacobian(values), -residual(values))
        except np.linalg.LinAlgError as error:
            raise NoConvergence("singular Jacobian: {}".format(error))

        damping = 1.0
        while damping > 1e-8:
            trial = values + damping * step
            if np.abs(trial).max() > radius:
                damping /= 2
                continue
            try:
                value = np.abs(residual(trial)).max()
            except RootCollision:
                value = np.inf
            if value < current:
                break
            damping /= 2
        else:
            raise NoConvergence("line search stalled at residual {:.3g}".format(current))
        values, current = trial, value

    if current <= tol:
        return values
    raise NoConvergence("residual {:.3g} after {} steps".format(current, max_iter))


def _same_solution(colors, left, right, bound):
    """Whether two root tuples agree up to permuting roots of equal color."""
    unused = list(range(len(right)))
    for j, value in enumerate(left):
        match = next(
            (s for s in unused
             if colors[s] == colors[j] and abs(right[s] - value) < bound),
            None,
        )
        if match is None:
            return False
        unused.remove(match)
    return True


def _finish(sys, colors, values):
    exact = [rationalize(value, tol=1e-7) for value in values]
    if all(value is not None for value in exact):
        try:
            cfg = BetheConfig(sys, colors, exact)
            if not any(bethe_residuals(cfg)):
                return cfg
        except RootCollision:
            pass
    return BetheConfig(sys, colors, [complex(value) for value in values])


def _solve_single(sys, color, tol):
    data = RootData(sys.m)
    highest = _highest_weights(sys)
    numerator = Integer(0)
    for k, (xi, point) in enumerate(zip(highest, sys.z)):
        pairing = data.coroot(color, xi)
        if not pairing:
            continue
        term = Integer(pairing)
        for l, other in enumerate(sys.z):
            if l != k:
                term = term * (W - _to_sympy(other))
        numerator = numerator + term

    polynomial = Poly(expand(numerator), W)
    if polynomial.is_zero:
        logger.warning("the Bethe equation for color {} is empty".format(color))
        return []

    found = roots(polynomial)
    if sum(found.values()) < polynomial.degree():
        found = {root: 1 for root in polynomial.nroots()}

    configs = []
    for root in sorted(found, key=_root_key):
        if root.is_Rational:
            value = QQ(int(root.p), int(root.q))
            if value in sys.z:
                continue
        else:
            value = complex(root.evalf(30))
            if any(abs(value - rat_to_float(point)) < tol for point in sys.z):
                continue
        configs.append(BetheConfig(sys, [color], [value]))
    return configs


def solve_bethe(sys, colors, seed=0, tol=None, max_iter=100, starts=16):
    # type: (Any, Sequence[int], int, Optional[float], int, int) -> List[BetheConfig]
    """Solutions of the Bethe equations for the given colors.

    One root is solved exactly from the numerator polynomial.  More roots
    go through damped Newton from seeded random starts; converged tuples are
    deduplicated up to permutations of equal colors and rationalized when
    the exact residuals then vanish.
    """
    _classical(sys)
    tol = sys.float_tol if tol is None else tol
    colors = sorted(colors)

    if not colors:
        return [BetheConfig(sys, [], [])]
    if len(colors) == 1:
        return _solve_single(sys, colors[0], tol)

    data = RootData(sys.m)
    highest = _highest_weights(sys)
    points = [rat_to_float(point) for point in sys.z]

    def residual(values):
        return np.array(_residuals(colors, list(values), points, highest, data),
                        dtype=complex)

    def jacobian(values):
        return _jacobian(colors, list(values), points, highest, data)

    rng = np.random.default_rng(seed)
    center = float(np.mean(points))
    spread = max([1.0] + [abs(point - center) for point in points])
    radius = 1e3 * (1 + max(abs(point) for point in points))
    found = []  # type: List[np.ndarray]

    for attempt in range(starts):
        start = center + spread * (
            rng.standard_normal(len(colors)) + 1j * rng.standard_normal(len(colors))
        )
        try:
            values = _newton(start, residual, jacobian, tol, max_iter, radius)
        except (NoConvergence, RootCollision) as error:
            logger.warning("Bethe start {} abandoned: {}".format(attempt, error))
            continue
        if any(_same_solution(colors, values, other, 10 * tol) for other in found):
            continue
        found.append(values)

    logger.debug("{} distinct Bethe solutions for colors {}".format(
        len(found), colors))
    return [_finish(sys, colors, values) for values in found]


def bethe_colors(sys, weight):
    # type: (Any, Any) -> List[int]
    """Colors i_1 <= ... <= i_p with sum_k xi_k - mu = sum_j alpha_(i_j)."""
    _classical(sys)
    values = weight.values if isinstance(weight, Weight) else tuple(weight)
    total = [sum(column) for column in zip(*_highest_weights(sys))]
    coefficients = RootData(sys.m).root_decomposition(
        [a - b for a, b in zip(total, values)]
    )
    if any(c < 0 for c in coefficients):
        raise BadRange("{} is not below the highest weight {}".format(
            values, tuple(total)))
    return [
        color
        for color, count in enumerate(coefficients, 1)
        for _ in range(count)
    ]


# Eigenvalues of Bethe vectors


def bethe_eigen_operator(cfg, check=True):
    # type: (BetheConfig, bool) -> FuchsianOperator
    """(d - E_1(z)) ... (d - E_m(z)) expanded into monic form."""
    if not cfg.exact:
        raise BetheNotSatisfied("the operator is only built from exact roots")
    if check and any(bethe_residuals(cfg)):
        raise BetheNotSatisfied("roots {} violate the Bethe equations".format(
            cfg.to_json()["roots"]))

    sys = cfg.system
    data = RootData(sys.m)
    highest = _highest_weights(sys)
    product = None

    for i in range(sys.m):
        e = as_ratfun(0)
        for xi, point in zip(highest, sys.z):
            if xi[i]:
                e = e + xi[i] * simple_pole(point)
        for color, root in zip(cfg.colors, cfg.roots):
            alpha = data.simple_root(color)[i]
            if alpha:
                e = e - alpha * simple_pole(root)
        factor = OperatorElement.scalar({1: 1, 0: -e}, depth=EXACT_DEPTH)
        product = factor if product is None else product * factor

    return FuchsianOperator.from_operator(product)


@attr.s
class BetheReport(object):
    nonzero = attr.ib(type=bool)
    singular = attr.ib(type=bool)
    joint_eigen = attr.ib(type=bool)
    # None when the roots are not exact
    eigen_operator = attr.ib(default=None)

    @property
    def failures(self):
        # type: () -> List[str]
        failures = []
        if not self.nonzero:
            failures.append("zero vector")
        if not self.singular:
            failures.append("not singular")
        if not self.joint_eigen:
            failures.append("not a joint eigenvector")
        if self.eigen_operator is False:
            failures.append("eigenvalue operator differs")
        return failures


def _exact_eigen(matrix, vector):
    image = matvec(matrix, vector)
    pivot = min(vector)
    eigenvalue = image.get(pivot, QQ.zero) / vector[pivot]
    return not vector_add(image, vector, -eigenvalue)


def _numeric_eigen(matrix, vector, tol):
    image = matrix @ vector
    theta = np.vdot(vector, image) / np.vdot(vector, vector)
    bound = tol * max(1.0, np.linalg.norm(matrix)) * np.linalg.norm(vector)
    return np.linalg.norm(image - theta * vector) <= bound


def verify_bethe_eigen(cfg, tol=1e-6):
    # type: (BetheConfig, float) -> BetheReport
    """Singularity, the eigenvalue operator and the joint eigenvector property.

    Exact roots are checked with zero tolerance.  Float roots are checked in
    floats with relative tolerance tol and leave eigen_operator unset.
    """
    sys = cfg.system
    vector = bethe_vector(cfg)
    size = sys.m
    raising = [sys.module.action(a, b) for a in range(size) for b in range(a + 1, size)]
    operator = ber_operator(sys)
    matrices = list(coefficient_matrices(window_family(operator), sys.z).values())

    if not cfg.exact:
        norm = np.linalg.norm(vector)
        nonzero = bool(norm > tol)
        singular = all(
            np.linalg.norm(to_numpy(action) @ vector) <= tol * norm
            for action in raising
        )
        joint = nonzero and all(
            _numeric_eigen(to_numpy(matrix), vector, tol) for matrix in matrices
        )
        return BetheReport(nonzero, singular, joint)

    nonzero = bool(vector)
    singular = all(not matvec(action, vector) for action in raising)
    joint = nonzero and all(_exact_eigen(matrix, vector) for matrix in matrices)

    expected = bethe_eigen_operator(cfg, check=False).to_operator().scalar_coefficients()
    lifted = {index: as_ratfun(value) for index, value in vector.items()}
    found = operator.apply(vector)
    powers = set(found) | set(expected)
    eigen_operator = nonzero and all(
        not vector_add(
            found.get(power, {}),
            vector_scale(lifted, expected.get(power, 0)),
            -1,
        )
        for power in powers
    )

    report = BetheReport(nonzero, singular, joint, eigen_operator)
    if report.failures:
        logger.debug("Bethe vector for {} fails: {}".format(
            cfg.to_json()["roots"], report.failures))
    return report


def _operator_signature(operator, poles, low, top):
    signature = OrderedDict()
    coeffs = operator.scalar_coefficients()
    for power in range(top, low - 1, -1):
        coeff = coeffs.get(power)
        if not coeff:
            continue
        split = partial_fractions(coeff, poles)
        for site, order, value in split.terms:
            signature[(power, "pole", site, order)] = value
        for degree, value in enumerate(poly_coeffs(split.poly)):
            if value:
                signature[(power, "poly", degree)] = value
    return signature


@attr.s
class SuperBetheReport(object):
    partition = attr.ib(type=HookPartition)
    index = attr.ib(type=int)
    window = attr.ib(type=tuple)


def super_bethe_check(super_sys, r, cfg):
    # type: (Any, int, BetheConfig) -> SuperBetheReport
    """Find the super eigenvector whose operator is D_cfg d^(-n-r) in the window."""
    companion = cfg.system
    if companion.m != super_sys.m + r:
        raise BadRange("companion gl_{} does not match m + r = {}".format(
            companion.m, super_sys.m + r))

    partition = HookPartition(cfg.weight())
    try:
        target = partition_weight(partition, super_sys.m, super_sys.n)
    except NotHook:
        raise MultisetMismatch((str(partition), "hook"))
    sub = singular_spaces(super_sys).get(target)
    if sub is None:
        raise MultisetMismatch((str(partition), "weight"))

    operator = ber_operator(super_sys)
    low, top = operator.window
    shifted = bethe_eigen_operator(cfg).to_operator().shift(-(super_sys.n + r))
    try:
        expected = _operator_signature(shifted, super_sys.z, low, top)
    except PoleOutsideSet:
        raise MultisetMismatch((str(partition), "poles"))

    data = joint_eigen(super_sys, sub, operator)
    for index, signature in enumerate(data.signatures):
        trimmed = OrderedDict(
            (key, value) for key, value in signature.items() if key[0] >= low
        )
        if signature_equal(trimmed, expected, 10 * super_sys.float_tol):
            return SuperBetheReport(partition, index, (low, top))

    raise MultisetMismatch((str(partition), next(iter(expected), ("empty",))))


# Eigenvectors and their operators


@attr.s
class EigenbasisMap(object):
    weight = attr.ib(type=Weight)
    dim = attr.ib(type=int)
    pairs = attr.ib(type=list, factory=list)
    reports = attr.ib(type=list, factory=list)
    exact = attr.ib(type=bool, default=True)

    @property
    def distinct(self):
        # type: () -> bool
        keys = set(operator.key() for _, operator in self.pairs)
        return len(keys) == len(self.pairs)

    @property
    def failures(self):
        # type: () -> List[Any]
        failures = []
        for index, report in enumerate(self.reports):
            failures.extend((index, name) for name in report.failures)
        if not self.distinct:
            failures.append("operators coincide")
        if len(self.pairs) != self.dim:
            failures.append("{} operators for dimension {}".format(
                len(self.pairs), self.dim))
        return failures


def eigenbasis_fuchsian_map(sys, weight):
    # type: (Any, Weight) -> EigenbasisMap
    """v -> D_v on the singular weight space, each D_v checked for membership."""
    _classical(sys)
    sub = singular_spaces(sys).get(weight)
    if sub is None:
        raise EmptyWeightSpace("no singular vectors of weight {}".format(weight))

    data = joint_eigen(sys, sub)
    result = EigenbasisMap(weight, sub.dim, exact=data.exact)
    if not data.exact:
        logger.warning("eigenvectors of weight {} are not rational".format(weight))
        return result

    spec = DeltaSpec.for_system(sys, weight)
    for vector, operator in zip(data.vectors, data.operators):
        fuchsian = FuchsianOperator.from_operator(operator)
        result.pairs.append((vector, fuchsian))
        result.reports.append(delta_membership(fuchsian, spec))
    return result


def sum_rule(sys):
    # type: (Any) -> List[str]
    """Singular weights whose size differs from the total size of the sites."""
    total = sum(site.size for site in sys.sites)
    return [
        "{}".format(weight)
        for weight in singular_spaces(sys)
        if weight.size != total
    ]


# Checks


def check_bethe(sys, max_roots=3):
    instance = sys.describe()
    if sys.n:
        return vacuous_for(sys, "bethe", "Bethe vectors are built for gl_m systems")

    failures = []
    solved = []
    skipped = []
    for weight in singular_spaces(sys):
        colors = bethe_colors(sys, weight)
        if len(colors) > max_roots:
            skipped.append("{}".format(weight))
            continue
        configs = solve_bethe(sys, colors, seed=sys.seed, tol=sys.float_tol)
        solved.append(["{}".format(weight), len(configs)])
        for cfg in configs:
            report = verify_bethe_eigen(cfg)
            if report.failures:
                failures.append(
                    ["{}".format(weight), cfg.to_json()["roots"], report.failures]
                )

    instance["solutions"] = solved
    instance["skipped"] = skipped
    if not solved:
        return vacuous_for(sys, "bethe", "every weight needs too many roots", instance)
    return result_for(sys, "bethe", failures, instance)


def check_fuchsian(sys):
    instance = sys.describe()
    if sys.n:
        return vacuous_for(sys, "fuchsian", "Fuchsian operators need a gl_m system")

    failures = []
    inexact = []
    for weight in singular_spaces(sys):
        try:
            mapping = eigenbasis_fuchsian_map(sys, weight)
        except NotSimpleSpectrum as error:
            failures.append(["{}".format(weight), "{}".format(error)])
            continue
        if not mapping.exact:
            inexact.append("{}".format(weight))
            continue
        failures.extend(["{}".format(weight), f] for f in mapping.failures)

    instance["inexact"] = inexact
    if inexact and len(inexact) == len(singular_spaces(sys)):
        return vacuous_for(sys, "fuchsian", "no rational eigenvectors", instance)
    return result_for(sys, "fuchsian", failures, instance)


def check_sum_rule(sys):
    return result_for(sys, "sum-rule", sum_rule(sys))
