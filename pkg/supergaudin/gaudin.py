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

"""Lax matrices, Berezinian expansions and the Gaudin algebra they generate.

A ``GaudinSystem`` fixes gl(m|n), the site partitions and the points z; the
tensor module, the Lax matrix and both Berezinian expansions are computed on
demand and cached on the system.  The ``check_*`` functions at the bottom
turn every identity into a ``CheckResult``.
"""

from __future__ import unicode_literals

import itertools
from collections import OrderedDict
from enum import Enum, unique
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import attr
import numpy as np
from logbook import Logger
from sympy import QQ, binomial
from sympy.polys.matrices.sdm import SDM

from . import SupergaudinError
from .exactalg import (
    RATFUN,
    Echelon,
    algebra_closure,
    as_ratfun,
    commutator,
    flatten,
    identity,
    joint_numeric_eigen,
    matvec,
    partial_fractions,
    poly_coeffs,
    qmatrix,
    rank,
    rat,
    rat_to_str,
    rationalize,
    scaled,
    simple_pole,
    to_numpy,
    vector_add,
    Z,
)
from .globals import DEFAULT_TOL, DEFAULT_WINDOW, EXACT_DEPTH, MAX_U_ORDER
from .opring import (
    OperatorElement,
    OpMatrix,
    USeries,
    ber_cdet_factorization,
    berezinian,
    cdet,
    elements_agree,
    manin_check,
    permute_matrix,
    schur_factorization,
)
from .repmod import (
    NotClassical,
    Subspace,
    check_relations as module_relations,
    decompose,
    irreducible_module,
    parity_convention,
    shapovalov_gram,
    sigma_singular_correspondence,
    singular_space,
    tensor_compatible,
    tensor_product,
)
from .superdata import (
    BadRange,
    HookPartition,
    IndexSet,
    NotHook,
    Perm,
    partition_from_weight,
    partition_weight,
    partition_weight_sigma,
    sigma_p,
)

logger = Logger("supergaudin.gaudin")

SEPARATION = 1e-6


class NotInvariant(SupergaudinError):
    def __init__(self, witness, message="subspace is not invariant"):
        self.witness = witness
        super(NotInvariant, self).__init__(message)


class EmptyWeightSpace(SupergaudinError):
    pass


class NotSimpleSpectrum(SupergaudinError):
    pass


class MultisetMismatch(SupergaudinError):
    def __init__(self, coefficient):
        self.coefficient = coefficient
        super(MultisetMismatch, self).__init__(
            "spectra differ at {}".format(coefficient)
        )


def _to_partitions(values):
    return [
        value if isinstance(value, HookPartition) else HookPartition(value)
        for value in values
    ]


def _to_rats(values):
    return [rat(value) for value in values]


@attr.s
class GaudinSystem(object):
    m = attr.ib(type=int)
    n = attr.ib(type=int)
    sites = attr.ib(type=list, converter=_to_partitions)
    z = attr.ib(type=list, converter=_to_rats)
    u_order = attr.ib(default="auto")
    window = attr.ib(type=int, default=DEFAULT_WINDOW)
    seed = attr.ib(type=int, default=0)
    max_u_order = attr.ib(type=int, default=MAX_U_ORDER)
    float_tol = attr.ib(type=float, default=DEFAULT_TOL)
    _cache = attr.ib(init=False, factory=dict, repr=False, eq=False)

    def __attrs_post_init__(self):
        if not self.sites:
            raise BadRange("a Gaudin system needs at least one site")
        if len(self.sites) != len(self.z):
            raise BadRange("{} sites but {} points".format(
                len(self.sites), len(self.z)))
        if len(set(rat_to_str(point) for point in self.z)) != len(self.z):
            raise BadRange("the points z must be pairwise distinct")
        for site in self.sites:
            if not site.is_hook(self.m, self.n):
                raise NotHook("{} is not a ({}|{})-hook partition".format(
                    site, self.m, self.n))
        if self.window < 1:
            raise BadRange("the window depth must be positive")

    def cached(self, key, factory):
        # type: (Any, Callable[[], Any]) -> Any
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    @property
    def ell(self):
        # type: () -> int
        return len(self.sites)

    @property
    def index_set(self):
        # type: () -> IndexSet
        return IndexSet(self.m, self.n)

    @property
    def module(self):
        return self.cached(
            "module",
            lambda: tensor_product(
                [irreducible_module(site, self.m, self.n) for site in self.sites]
            ),
        )

    @property
    def dim(self):
        # type: () -> int
        return self.module.dim

    def with_z(self, z):
        # type: (Sequence[Any]) -> GaudinSystem
        """The same system at other points; the module is shared."""
        other = GaudinSystem(
            self.m, self.n, self.sites, z, self.u_order, self.window,
            self.seed, self.max_u_order, self.float_tol,
        )
        self.module
        for key, value in self._cache.items():
            if key == "module" or key[:1] == ("singular",):
                other._cache[key] = value
        return other

    def describe(self):
        # type: () -> Dict[str, Any]
        return OrderedDict(
            [
                ("m", self.m),
                ("n", self.n),
                ("sites", [site.to_json() for site in self.sites]),
                ("z", [rat_to_str(point) for point in self.z]),
            ]
        )


def sample_z(ell, seed):
    # type: (int, int) -> List[Any]
    """ell distinct integers from [-10 ell, 10 ell]."""
    rng = np.random.default_rng(seed)
    points = rng.choice(np.arange(-10 * ell, 10 * ell + 1), size=ell, replace=False)
    return [QQ(int(point)) for point in points]


def _positions_key(positions):
    return None if positions is None else tuple(positions)


def gauge_action(sys, a, b):
    # type: (GaudinSystem, int, int) -> SDM
    """E_ab(z) = sum_k E_ab^(k) / (z - z_k) as a matrix over QQ(z)."""

    def compute():
        total = SDM.zeros((sys.dim, sys.dim), RATFUN)
        for site, point in enumerate(sys.z):
            total = total + scaled(sys.module.site_action(site, a, b), simple_pole(point))
        return total

    return sys.cached(("gauge", a, b), compute)


def lax_matrix(sys, positions=None, depth=None):
    # type: (GaudinSystem, Optional[Sequence[int]], Optional[int]) -> OpMatrix
    """L_ij = delta_ij d - (-1)^|i| E_ij(z) on the positions given."""
    depth = sys.window if depth is None else depth
    index = sys.index_set
    positions = list(range(index.size)) if positions is None else list(positions)

    def compute():
        one = identity(sys.dim, RATFUN)
        entries = []
        for i in positions:
            odd = index.parity(i).value
            row = []
            for j in positions:
                gauge = gauge_action(sys, i, j)
                terms = {0: gauge if odd else -gauge}
                if i == j:
                    terms[1] = one
                row.append(OperatorElement(sys.dim, terms, depth=depth))
            entries.append(row)
        return OpMatrix(entries, index.standard_signs().sub(positions))

    return sys.cached(("lax", _positions_key(positions), depth), compute)


def unit_lax(sys, order, positions=None):
    # type: (GaudinSystem, int, Optional[Sequence[int]]) -> OpMatrix
    """1 + uL modulo u^(order + 1)."""
    lax = lax_matrix(sys, positions, EXACT_DEPTH)
    one = OperatorElement.identity(sys.dim, EXACT_DEPTH)
    zero = OperatorElement.zero(sys.dim, EXACT_DEPTH)
    entries = [
        [
            USeries.linear(one if i == j else zero, lax[i, j], order)
            for j in range(lax.size)
        ]
        for i in range(lax.size)
    ]
    return OpMatrix(entries, lax.signs)


@attr.s
class HamiltonianFamily(object):
    """Matrix-valued rational functions b(z) keyed by their provenance.

    u-adic families are keyed by (i, j) for the coefficient of d^(i-j) u^i,
    window families by the d-power k.
    """

    provenance = attr.ib(type=str)
    entries = attr.ib(type=OrderedDict)
    dim = attr.ib(type=int)
    order = attr.ib(type=int)
    source = attr.ib(default=None)


def u_family(series):
    # type: (USeries) -> HamiltonianFamily
    entries = OrderedDict()
    for i, term in enumerate(series.terms):
        for j in range(i + 1):
            entries[(i, j)] = term.coefficient(i - j)
    return HamiltonianFamily("u-adic", entries, series.size, series.order, series)


def ber_u_expansion(sys, order=None, positions=None):
    # type: (GaudinSystem, Optional[int], Optional[Sequence[int]]) -> HamiltonianFamily
    """Ber(1 + uL) = sum b_ij(z) d^(i-j) u^i, exact up to u^order."""
    order = resolve_u_order(sys) if order is None else order
    if order < 1:
        raise BadRange("the u-order must be at least 1")
    positions = _positions_key(positions)

    for key, family in sys._cache.items():
        if key[:1] == ("u-adic",) and key[2] == positions and key[1] > order:
            series = family.source
            return u_family(USeries(series.terms[:order + 1], order))

    def compute():
        series = berezinian(unit_lax(sys, order, positions))
        logger.debug("Ber(1 + uL) expanded to u^{} on {} dimensions".format(
            order, sys.dim))
        return u_family(series)

    return sys.cached(("u-adic", order, positions), compute)


def ber_window(sys, depth=None, positions=None, shift=0):
    # type: (GaudinSystem, Optional[int], Optional[Sequence[int]], int) -> OperatorElement
    """Ber(L_P(z)) d^shift, exact for every power >= top - depth."""
    depth = sys.window if depth is None else depth
    if depth < 1:
        raise BadRange("the window depth must be positive")
    key = ("window", depth, _positions_key(positions))
    operator = sys.cached(key, lambda: berezinian(lax_matrix(sys, positions, depth)))
    return operator.shift(shift) if shift else operator


def ber_operator(sys, positions=None, shift=0, depth=None):
    # type: (GaudinSystem, Optional[Sequence[int]], int, Optional[int]) -> OperatorElement
    """Column determinant for purely even blocks, windowed Berezinian otherwise."""
    index = sys.index_set
    chosen = range(index.size) if positions is None else positions
    if all(position < sys.m for position in chosen):
        depth = sys.window if depth is None else depth
        key = ("cdet", depth, _positions_key(positions))
        operator = sys.cached(key, lambda: cdet(lax_matrix(sys, positions, depth)))
        return operator.shift(shift) if shift else operator
    return ber_window(sys, depth, positions, shift)


def window_family(operator):
    # type: (OperatorElement) -> HamiltonianFamily
    low, top = operator.window
    entries = OrderedDict(
        (power, operator.coefficient(power)) for power in range(top, low - 1, -1)
    )
    return HamiltonianFamily("window", entries, operator.size, top - low, operator)


def coefficient_matrices(family, poles):
    # type: (HamiltonianFamily, Sequence[Any]) -> Dict[Tuple[Any, ...], SDM]
    """Exact matrices of the principal parts and polynomial parts of b(z).

    Keys are the family key followed by ("pole", site, order) or
    ("poly", degree).
    """
    result = OrderedDict()
    for key, matrix in family.entries.items():
        pieces = {}  # type: Dict[Tuple[Any, ...], List[Tuple[int, int, Any]]]
        for r, row in matrix.items():
            for c, value in row.items():
                split = partial_fractions(value, poles)
                for site, order, coeff in split.terms:
                    pieces.setdefault(("pole", site, order), []).append((r, c, coeff))
                for degree, coeff in enumerate(poly_coeffs(split.poly)):
                    if coeff:
                        pieces.setdefault(("poly", degree), []).append((r, c, coeff))
        prefix = key if isinstance(key, tuple) else (key,)
        for piece in sorted(pieces):
            result[prefix + piece] = qmatrix(pieces[piece], family.dim)
    return result


def span_basis(matrices, dim):
    # type: (Sequence[SDM], int) -> List[SDM]
    """The members that are independent of the identity and of earlier members."""
    echelon = Echelon()
    echelon.add(flatten(identity(dim)))
    return [matrix for matrix in matrices if echelon.add(flatten(matrix))]


def generators(sys, order=None):
    # type: (GaudinSystem, Optional[int]) -> List[SDM]
    family = ber_u_expansion(sys, order)
    return span_basis(list(coefficient_matrices(family, sys.z).values()), sys.dim)


def closure_dimension(sys, order):
    # type: (GaudinSystem, int) -> int
    return sys.cached(
        ("closure", order),
        lambda: len(algebra_closure(generators(sys, order), sys.dim)),
    )


def resolve_u_order(sys):
    # type: (GaudinSystem) -> int
    """The configured u-order, or the first N with stable closure at N + 1."""
    if sys.u_order != "auto":
        return int(sys.u_order)

    def compute():
        for order in range(2, sys.max_u_order):
            # the larger expansion first, so that the smaller one is cut from it
            there = closure_dimension(sys, order + 1)
            if closure_dimension(sys, order) == there:
                logger.debug("u-order settled at {}".format(order))
                return order
        logger.warning(
            "closure did not stabilize below u^{}".format(sys.max_u_order)
        )
        return sys.max_u_order

    return sys.cached("u_order", compute)


def expansion_shape(family):
    # type: (HamiltonianFamily) -> List[Tuple[int, int]]
    return family.source.shape_violations()


def restrict(matrices, sub):
    # type: (Sequence[SDM], Subspace) -> List[SDM]
    """Matrices in the echelon basis of an invariant subspace."""
    result = []
    for matrix in matrices:
        entries = []
        for j, vector in enumerate(sub.vectors):
            coords = sub.coordinates(matvec(matrix, vector))
            if coords is None:
                raise NotInvariant(vector)
            entries.extend((i, j, value) for i, value in enumerate(coords) if value)
        result.append(qmatrix(entries, sub.dim))
    return result


def gl_actions(sys):
    # type: (GaudinSystem) -> List[Tuple[Tuple[int, int], SDM]]
    return [(g, sys.module.action(*g)) for g in sys.module.generators]


def gl_invariance(sys, matrices):
    # type: (GaudinSystem, Dict[Any, SDM]) -> List[Tuple[Any, Tuple[int, int]]]
    """(key, generator) pairs where a coefficient matrix fails to commute."""
    failures = []
    for key, matrix in matrices.items():
        for g, action in gl_actions(sys):
            if not commutator(matrix, action).is_zero_matrix():
                failures.append((key, g))
    return failures


def singular_spaces(sys, sigma=None):
    # type: (GaudinSystem, Optional[Perm]) -> Dict[Any, Subspace]
    key = ("singular", None if sigma is None else sigma.images)
    return sys.cached(key, lambda: singular_space(sys.module, sigma))


def singular_subspace(sys):
    # type: (GaudinSystem) -> Subspace
    spaces = list(singular_spaces(sys).values())
    if not spaces:
        raise EmptyWeightSpace("the module has no singular vectors")
    return Subspace.join(spaces, sys.dim)


def quadratic_hamiltonians(sys):
    # type: (GaudinSystem) -> List[SDM]
    """H_k = sum_(j != k) Omega^(k,j) / (z_k - z_j)."""
    index = sys.index_set
    module = sys.module
    size = index.size

    def omega(i, j):
        total = SDM.zeros((sys.dim, sys.dim), QQ)
        for a in range(size):
            for b in range(size):
                term = module.site_action(i, a, b).matmul(module.site_action(j, b, a))
                total = total - term if index.parity(b).value else total + term
        return total

    pairs = {
        (i, j): omega(i, j)
        for i in range(sys.ell)
        for j in range(i + 1, sys.ell)
    }
    result = []
    for k in range(sys.ell):
        total = SDM.zeros((sys.dim, sys.dim), QQ)
        for j in range(sys.ell):
            if j != k:
                pair = pairs[(min(j, k), max(j, k))]
                total = total + pair.mul(QQ.one / (sys.z[k] - sys.z[j]))
        result.append(total)
    return result


def minimal_r(sys):
    # type: (GaudinSystem) -> int
    """The least r with l(lambda) <= m + r for every site and singular weight."""
    lengths = [len(site) for site in sys.sites] + [
        len(partition_from_weight(weight)) for weight in singular_spaces(sys)
    ]
    return max([0] + [length - sys.m for length in lengths])


# Spectra


@attr.s
class SpectralData(object):
    subspace = attr.ib(type=Subspace)
    vectors = attr.ib(type=list)
    signatures = attr.ib(type=list)
    operators = attr.ib(type=list)
    exact = attr.ib(type=bool)
    window = attr.ib(default=None)


def _exact_eigenvector(restricted, numeric):
    """Rationalized eigenvector, kept only if it is an exact joint eigenvector."""
    numeric = np.asarray(numeric)
    pivot = int(np.argmax(np.abs(numeric)))
    numeric = numeric / numeric[pivot]
    coords = [rationalize(value, tol=1e-7) for value in numeric]
    if any(value is None for value in coords):
        return None
    vector = {i: value for i, value in enumerate(coords) if value}
    for matrix in restricted:
        image = matvec(matrix, vector)
        eigenvalue = image.get(pivot, QQ.zero)
        if vector_add(image, vector, -eigenvalue):
            return None
    return coords


def _exact_signature(keys, restricted, coords):
    vector = {i: value for i, value in enumerate(coords) if value}
    pivot = min(vector)
    signature = OrderedDict()
    for key, matrix in zip(keys, restricted):
        image = matvec(matrix, vector)
        eigenvalue = image.get(pivot, QQ.zero) / vector[pivot]
        if vector_add(image, vector, -eigenvalue):
            raise NotSimpleSpectrum("not a joint eigenvector of {}".format(key))
        if eigenvalue:
            signature[key] = eigenvalue
    return signature


def _numeric_signature(keys, restricted, vector):
    signature = OrderedDict()
    norm = np.vdot(vector, vector)
    for key, matrix in zip(keys, restricted):
        value = np.vdot(vector, to_numpy(matrix) @ vector) / norm
        if abs(value) > DEFAULT_TOL:
            signature[key] = complex(value)
    return signature


def signature_operator(signature, operator, poles):
    # type: (Dict[Tuple[Any, ...], Any], OperatorElement, Sequence[Any]) -> OperatorElement
    """Rebuild the scalar operator sum alpha_k(z) d^k from an exact signature."""
    coeffs = {}
    for key, value in signature.items():
        power, kind = key[0], key[1]
        if kind == "pole":
            term = simple_pole(poles[key[2]], key[3]) * as_ratfun(value)
        else:
            term = as_ratfun(value) * Z ** key[2]
        coeffs[power] = coeffs.get(power, as_ratfun(0)) + term
    return OperatorElement.scalar(
        coeffs, depth=operator.depth, floor=operator.floor, top=operator.top
    )


def joint_eigen(sys, sub, operator=None):
    # type: (GaudinSystem, Subspace, Optional[OperatorElement]) -> SpectralData
    """Joint eigenvectors on sub and the scalar operators D_v read from them."""
    if sub.dim == 0:
        raise EmptyWeightSpace("empty subspace")
    operator = ber_operator(sys) if operator is None else operator
    pieces = coefficient_matrices(window_family(operator), sys.z)
    keys = list(pieces)
    restricted = restrict(list(pieces.values()), sub)

    if sub.dim == 1:
        candidates = [[QQ.one]]
        numeric = [None]
    else:
        spectrum = joint_numeric_eigen(
            restricted, seed=sys.seed, tol=sys.float_tol, separation=SEPARATION
        )
        if not spectrum.simple:
            raise NotSimpleSpectrum(
                "{} of {} joint eigenvectors, spectrum not separated".format(
                    len(spectrum), sub.dim)
            )
        numeric = spectrum.vectors
        candidates = [_exact_eigenvector(restricted, v) for v in numeric]

    exact = all(coords is not None for coords in candidates)
    vectors, signatures, operators = [], [], []
    for coords, approximate in zip(candidates, numeric):
        if exact:
            signature = _exact_signature(keys, restricted, coords)
            vectors.append(sub.embed(coords))
            operators.append(signature_operator(signature, operator, sys.z))
        else:
            signature = _numeric_signature(keys, restricted, approximate)
            vectors.append(approximate)
            operators.append(None)
        signatures.append(signature)

    return SpectralData(sub, vectors, signatures, operators, exact, operator.window)


def _as_number(value):
    if isinstance(value, complex):
        return value
    return complex(int(value.numerator) / int(value.denominator))


def signature_equal(left, right, tol):
    keys = set(left) | set(right)
    numeric = any(
        isinstance(value, complex)
        for signature in (left, right)
        for value in signature.values()
    )
    if numeric:
        return all(
            abs(_as_number(left.get(key, QQ.zero)) - _as_number(right.get(key, QQ.zero)))
            <= tol
            for key in keys
        )
    return all(left.get(key, QQ.zero) == right.get(key, QQ.zero) for key in keys)


def _signatures_match(left, right, floor, tol):
    """None if the multisets agree on powers >= floor, else an offending key."""

    def trimmed(signature):
        return OrderedDict(
            (key, value) for key, value in signature.items()
            if floor is None or key[0] >= floor
        )

    unmatched = [trimmed(signature) for signature in right]
    for signature in (trimmed(s) for s in left):
        match = next(
            (c for c in unmatched if signature_equal(signature, c, tol)), None
        )
        if match is None:
            return next(iter(signature), ("empty",))
        unmatched.remove(match)
    if unmatched:
        return next(iter(unmatched[0]), ("empty",))
    return None


@attr.s
class LiftMatch(object):
    partition = attr.ib(type=HookPartition)
    super_data = attr.ib(type=SpectralData)
    classical_data = attr.ib(type=SpectralData)


def companion_system(sys, r):
    # type: (GaudinSystem, int) -> GaudinSystem
    """The gl_(m+r) system on the same site partitions and points."""
    return GaudinSystem(
        sys.m + r, 0, sys.sites, sys.z, sys.u_order, sys.window, sys.seed,
        sys.max_u_order, sys.float_tol,
    )


def super_lift_spectra(sys, r=None):
    # type: (GaudinSystem, Optional[int]) -> List[LiftMatch]
    """Match {D'_w} on the super side with {D_v d^(-n-r)} on gl_(m+r)."""
    least = minimal_r(sys)
    r = least if r is None else r
    if r < least:
        raise BadRange("r = {} is below the minimal {}".format(r, least))

    classical = companion_system(sys, r)
    super_operator = ber_operator(sys)
    classical_operator = ber_operator(classical, shift=-(sys.n + r))
    floors = [
        f for f in (super_operator.floor, classical_operator.floor) if f is not None
    ]
    floor = max(floors) if floors else None

    classical_spaces = singular_spaces(classical)
    matches = []
    for weight, sub in singular_spaces(sys).items():
        partition = partition_from_weight(weight)
        target = partition_weight(partition, sys.m + r, 0)
        other = classical_spaces.get(target)
        if other is None or other.dim != sub.dim:
            raise MultisetMismatch((str(partition), "dimension"))

        left = joint_eigen(sys, sub, super_operator)
        right = joint_eigen(classical, other, classical_operator)
        offending = _signatures_match(
            left.signatures, right.signatures, floor, 10 * sys.float_tol
        )
        if offending is not None:
            raise MultisetMismatch((str(partition), offending))
        matches.append(LiftMatch(partition, left, right))
        logger.debug("lift matched on {}".format(partition))

    return matches


# Checks


@unique
class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return "{}".format(value)


@attr.s
class CheckResult(object):
    check = attr.ib(type=str)
    instance = attr.ib(type=OrderedDict, factory=OrderedDict)
    status = attr.ib(type=Status, default=Status.PASS)
    witness = attr.ib(default=None)
    window = attr.ib(default=None)
    u_order = attr.ib(default=None)
    seed = attr.ib(default=None)
    millis = attr.ib(default=None)

    @property
    def failed(self):
        # type: () -> bool
        return self.status is Status.FAIL

    def to_json(self, timings=False):
        # type: (bool) -> Dict[str, Any]
        result = OrderedDict(
            [
                ("check", self.check),
                ("instance", self.instance),
                ("status", self.status.value),
                ("witness", _jsonable(self.witness)),
                ("window", self.window),
                ("u_order", self.u_order),
                ("seed", self.seed),
            ]
        )
        if timings:
            result["millis"] = self.millis
        return result


def result_for(sys, check, failures, instance=None, u_order=None):
    # type: (GaudinSystem, str, List[Any], Optional[Dict[str, Any]], Optional[int]) -> CheckResult
    result = CheckResult(
        check,
        instance if instance is not None else sys.describe(),
        Status.FAIL if failures else Status.PASS,
        failures[:5] if failures else None,
        sys.window,
        u_order,
        sys.seed,
    )
    if failures:
        logger.error("{} failed: {}".format(check, failures[:5]))
    return result


def vacuous_for(sys, check, reason, instance=None):
    logger.warning("{} is vacuous: {}".format(check, reason))
    return CheckResult(
        check,
        instance if instance is not None else sys.describe(),
        Status.VACUOUS,
        "{}".format(reason),
        sys.window,
        None,
        sys.seed,
    )


def _u_matrices(sys):
    order = resolve_u_order(sys)
    return order, coefficient_matrices(ber_u_expansion(sys, order), sys.z)


def check_commutativity(sys):
    # type: (GaudinSystem) -> CheckResult
    order, matrices = _u_matrices(sys)
    basis = span_basis(list(matrices.values()), sys.dim)
    failures = [
        (i, j)
        for i, j in itertools.combinations(range(len(basis)), 2)
        if not commutator(basis[i], basis[j]).is_zero_matrix()
    ]
    instance = sys.describe()
    instance["generators"] = len(basis)
    return result_for(sys, "commutativity", failures, instance, order)


def check_binomial_relation(sys):
    # type: (GaudinSystem) -> CheckResult
    """b_ij = C(m - n - j, i - j) b_(m-n-j) against the windowed Berezinian."""
    order = resolve_u_order(sys)
    family = ber_u_expansion(sys, order)
    window = ber_window(sys)
    low, _ = window.window
    top = sys.m - sys.n
    failures, compared = [], 0

    for (i, j), b_ij in family.entries.items():
        power = top - j
        if power < low:
            continue
        factor = QQ(int(binomial(top - j, i - j)))
        expected = window.coefficient(power).mul(as_ratfun(factor))
        compared += 1
        if not (b_ij - expected).is_zero_matrix():
            failures.append((i, j))

    instance = sys.describe()
    instance["compared"] = compared
    return result_for(sys, "binomial-relation", failures, instance, order)


def default_permutations(sys):
    # type: (GaudinSystem) -> List[Perm]
    size = sys.m + sys.n
    perms = []
    if sys.n:
        perms.extend(sigma_p(sys.m, sys.n, p) for p in range(1, sys.m))
    if size >= 2:
        swap = Perm.transposition(size, 1, 2)
        if swap not in perms:
            perms.append(swap)
    return perms


def check_permutation_invariance(sys, perms=None):
    # type: (GaudinSystem, Optional[Sequence[Perm]]) -> CheckResult
    order = resolve_u_order(sys)
    perms = default_permutations(sys) if perms is None else perms
    if not perms:
        return vacuous_for(sys, "permutation-invariance", "no permutation to test")
    matrix = unit_lax(sys, order)
    reference = ber_u_expansion(sys, order).source
    failures = [
        list(perm.images)
        for perm in perms
        if not elements_agree(berezinian(permute_matrix(matrix, perm)), reference)
    ]
    instance = sys.describe()
    instance["permutations"] = [list(perm.images) for perm in perms]
    return result_for(sys, "permutation-invariance", failures, instance, order)


def check_cdet_consistency(sys):
    # type: (GaudinSystem) -> CheckResult
    """Ber = cdet on the even block of 1 + uL."""
    order = resolve_u_order(sys)
    positions = None if sys.n == 0 else list(range(sys.m))
    ber = ber_u_expansion(sys, order, positions).source
    column = cdet(unit_lax(sys, order, positions))
    failures = [
        i for i, (a, b) in enumerate(zip(ber.terms, column.terms))
        if not elements_agree(a, b)
    ]
    return result_for(sys, "cdet-consistency", failures, None, order)


def verify_algebraic_identities(sys):
    # type: (GaudinSystem) -> List[CheckResult]
    return [
        check_commutativity(sys),
        check_binomial_relation(sys),
        check_permutation_invariance(sys),
        check_cdet_consistency(sys),
    ]


def check_ber_cdet_factorization(sys):
    # type: (GaudinSystem) -> CheckResult
    order = resolve_u_order(sys)
    left, right = ber_cdet_factorization(unit_lax(sys, order))
    failures = [
        i for i, (a, b) in enumerate(zip(left.terms, right.terms))
        if not elements_agree(a, b)
    ]
    return result_for(sys, "ber-cdet-factorization", failures, None, order)


def check_schur_factorization(sys):
    # type: (GaudinSystem) -> CheckResult
    size = sys.m + sys.n
    if size < 2:
        return vacuous_for(sys, "schur-factorization", "a 1x1 matrix has no split")
    order = resolve_u_order(sys)
    split = sys.m if sys.n else 1
    left, right = schur_factorization(unit_lax(sys, order), split)
    failures = [
        i for i, (a, b) in enumerate(zip(left.terms, right.terms))
        if not elements_agree(a, b)
    ]
    instance = sys.describe()
    instance["split"] = split
    return result_for(sys, "schur-factorization", failures, instance, order)


def check_expansion_shape(sys):
    # type: (GaudinSystem) -> CheckResult
    order = resolve_u_order(sys)
    return result_for(
        sys, "expansion-shape", expansion_shape(ber_u_expansion(sys, order)),
        None, order,
    )


def check_gl_invariance(sys):
    # type: (GaudinSystem) -> CheckResult
    order, matrices = _u_matrices(sys)
    return result_for(sys, "gl-invariance", gl_invariance(sys, matrices), None, order)


def check_manin(sys):
    # type: (GaudinSystem) -> CheckResult
    return result_for(sys, "manin", manin_check(lax_matrix(sys)))


def check_module_relations(sys, samples=100):
    # type: (GaudinSystem, int) -> CheckResult
    failures = [
        ("module",) + tuple(v)
        for v in module_relations(sys.module, samples, sys.seed)
    ]
    for site in sorted(set(sys.sites), key=lambda site: site.parts):
        irreducible = irreducible_module(site, sys.m, sys.n)
        failures.extend(
            (str(site),) + tuple(v)
            for v in module_relations(irreducible, samples, sys.seed)
        )
    return result_for(sys, "relations", failures)


def check_parity_convention(sys):
    # type: (GaudinSystem) -> CheckResult
    return result_for(sys, "parity-convention", parity_convention(sys.module))


def check_decomposition(sys):
    # type: (GaudinSystem) -> CheckResult
    decomposition = decompose(sys.module)
    instance = sys.describe()
    instance["decomposition"] = [p.to_json() for p in decomposition.multiset()]
    instance["dimension"] = decomposition.dimension
    failures = []
    if not decomposition.consistent:
        failures.append(("dimension", decomposition.dimension, decomposition.total))
    return result_for(sys, "decomposition", failures, instance)


def _applied_mismatch(left, right, vector):
    """d-powers where two operators differ on a vector, within both windows."""
    floors = [f for f in (left.floor, right.floor) if f is not None]
    floor = max(floors) if floors else None
    a, b = left.apply(vector), right.apply(vector)
    return [
        power
        for power in sorted(set(a) | set(b), reverse=True)
        if (floor is None or power >= floor)
        and vector_add(a.get(power, {}), b.get(power, {}), -1)
    ]


def _singular_partitions(sys, p, k):
    return [
        partition_from_weight(weight)
        for weight in singular_spaces(sys)
        if partition_from_weight(weight).is_hook(p, k)
    ]


def check_truncation_i(sys, p=1, partitions=None):
    # type: (GaudinSystem, int, Optional[Sequence[Any]]) -> CheckResult
    """Ber(L_(m|n)) v = Ber(L_(p|n)) d^(m-p) v on sigma_p-singular vectors."""
    instance = sys.describe()
    instance["p"] = p
    if not 1 <= p <= sys.m:
        raise BadRange("truncation needs 1 <= p <= m")
    if partitions is None:
        partitions = _singular_partitions(sys, p, sys.n)
    partitions = [HookPartition(x) if not isinstance(x, HookPartition) else x
                  for x in partitions]
    instance["partitions"] = [x.to_json() for x in partitions]

    left = ber_operator(sys)
    right = ber_operator(
        sys, sys.index_set.standard_subset(p, sys.n), shift=sys.m - p
    )
    spaces = singular_spaces(sys, sigma_p(sys.m, sys.n, p))
    failures, compared = [], 0
    for partition in partitions:
        if not partition.is_hook(p, sys.n):
            raise BadRange("{} is not a ({}|{})-hook".format(partition, p, sys.n))
        sub = spaces.get(partition_weight_sigma(partition, sys.m, sys.n, p))
        if sub is None:
            continue
        for vector in sub.vectors:
            compared += 1
            failures.extend(
                (str(partition), power)
                for power in _applied_mismatch(left, right, vector)
            )

    if not compared:
        return vacuous_for(sys, "truncation-i", "no sigma_p-singular vectors", instance)
    instance["vectors"] = compared
    return result_for(sys, "truncation-i", failures, instance)


def check_truncation_ii(sys, k=0):
    # type: (GaudinSystem, int) -> CheckResult
    """Ber(L_(m|n)) v = Ber(L_(m|k)) d^(k-n) v when mu(E_(k+1/2,k+1/2)) = 0."""
    instance = sys.describe()
    instance["k"] = k
    if not 0 <= k <= sys.n:
        raise BadRange("truncation needs 0 <= k <= n")

    left = ber_operator(sys)
    right = ber_operator(
        sys, sys.index_set.standard_subset(sys.m, k), shift=k - sys.n
    )
    failures, compared = [], 0
    for weight, sub in singular_spaces(sys).items():
        if k < sys.n and weight[sys.m + k] != 0:
            continue
        for vector in sub.vectors:
            compared += 1
            failures.extend(
                (str(weight), power)
                for power in _applied_mismatch(left, right, vector)
            )

    if not compared:
        return vacuous_for(sys, "truncation-ii", "no singular weight vanishes there",
                        instance)
    instance["vectors"] = compared
    return result_for(sys, "truncation-ii", failures, instance)


def verify_truncation(sys, p=1, k=0, partitions=None):
    # type: (GaudinSystem, int, int, Optional[Sequence[Any]]) -> List[CheckResult]
    return [check_truncation_i(sys, p, partitions), check_truncation_ii(sys, k)]


def check_sigma_correspondence(sys, p=1, partitions=None):
    # type: (GaudinSystem, int, Optional[Sequence[Any]]) -> CheckResult
    instance = sys.describe()
    instance["p"] = p
    if partitions is None:
        partitions = _singular_partitions(sys, p, sys.n)
    if not partitions:
        return vacuous_for(sys, "sigma-singular-correspondence",
                        "no singular weight in the truncation", instance)
    failures = []
    dims = []
    for partition in partitions:
        found = sigma_singular_correspondence(sys.module, partition, p)
        dims.append([found.left.dim, found.right.dim, found.standard_dim])
        if not (found.equal and found.dims_match):
            failures.append(str(found.partition))
    instance["dims"] = dims
    tensor_ok = tensor_compatible(sys.module, p, sys.n)
    if not tensor_ok:
        failures.append("tensor-compatibility")
    return result_for(sys, "sigma-singular-correspondence", failures, instance)


@attr.s
class StructureReport(object):
    closure_dim = attr.ib(type=int)
    sub_dim = attr.ib(type=int)
    cyclic = attr.ib(type=list)
    frobenius = attr.ib(type=list)
    simple = attr.ib(type=bool)

    @property
    def failures(self):
        # type: () -> List[str]
        failures = []
        if self.closure_dim != self.sub_dim:
            failures.append("closure dimension {} != {}".format(
                self.closure_dim, self.sub_dim))
        if not any(self.cyclic):
            failures.append("no cyclic vector found")
        if not any(self.frobenius):
            failures.append("no Frobenius functional found")
        if not self.simple:
            failures.append("joint eigenspaces are not all one-dimensional")
        return failures


def _random_rational(rng):
    return QQ(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))


def structure_checks(sys, sub, trials=5, seed=None, matrices=None):
    # type: (GaudinSystem, Subspace, int, Optional[int], Optional[List[SDM]]) -> StructureReport
    """Closure dimension, cyclic vectors, a Frobenius form and eigenspaces."""
    seed = sys.seed if seed is None else seed
    if matrices is None:
        matrices = generators(sys)
    restricted = restrict(matrices, sub)
    basis = algebra_closure(restricted, sub.dim)
    rng = np.random.default_rng(seed)

    cyclic = []
    for _ in range(trials):
        vector = {i: _random_rational(rng) for i in range(sub.dim)}
        images = {
            row: matvec(element, vector) for row, element in enumerate(basis)
        }
        span = SDM(
            {row: image for row, image in images.items() if image},
            (len(basis), sub.dim), QQ,
        )
        cyclic.append(rank(span) == sub.dim)
        if cyclic[-1]:
            break

    frobenius = []
    for _ in range(trials):
        weights = {
            (i, j): _random_rational(rng)
            for i in range(sub.dim) for j in range(sub.dim)
        }

        def phi(element):
            return sum(
                (weights[(i, j)] * value
                 for i, row in element.items() for j, value in row.items()),
                QQ.zero,
            )

        gram = qmatrix(
            [
                (a, b, phi(left.matmul(right)))
                for a, left in enumerate(basis)
                for b, right in enumerate(basis)
            ],
            len(basis),
        )
        frobenius.append(rank(gram) == len(basis))
        if frobenius[-1]:
            break

    simple = sub.dim == 1 or joint_numeric_eigen(
        restricted, seed=seed, tol=sys.float_tol, separation=SEPARATION
    ).simple

    return StructureReport(len(basis), sub.dim, cyclic, frobenius, simple)


def check_structure(sys, trials=5):
    # type: (GaudinSystem, int) -> CheckResult
    order = resolve_u_order(sys)
    sub = singular_subspace(sys)
    report = structure_checks(sys, sub, trials)
    instance = sys.describe()
    instance["closure_dim"] = report.closure_dim
    instance["singular_dim"] = report.sub_dim
    instance["cyclic_trials"] = len(report.cyclic)
    instance["frobenius_trials"] = len(report.frobenius)
    return result_for(sys, "structure", report.failures, instance, order)


def check_simple_spectrum(sys, trials=5):
    # type: (GaudinSystem, int) -> CheckResult
    """Simple joint spectrum on the singular space at seeded random points."""
    failures = []
    tuples = []
    for trial in range(trials):
        points = sample_z(sys.ell, sys.seed + trial)
        tuples.append([rat_to_str(point) for point in points])
        other = sys.with_z(points)
        sub = singular_subspace(other)
        pieces = coefficient_matrices(window_family(ber_operator(other)), points)
        restricted = restrict(list(pieces.values()), sub)
        spectrum = joint_numeric_eigen(
            restricted, seed=sys.seed, tol=sys.float_tol, separation=SEPARATION
        )
        if not spectrum.simple or len(spectrum) != sub.dim:
            failures.append(tuples[-1])
    instance = sys.describe()
    instance["z_tuples"] = tuples
    return result_for(sys, "simple-spectrum", failures, instance)


def u_order_stability(sys):
    # type: (GaudinSystem) -> Tuple[int, int, int]
    order = resolve_u_order(sys)
    return order, closure_dimension(sys, order), closure_dimension(sys, order + 1)


def check_u_order_stability(sys):
    # type: (GaudinSystem) -> CheckResult
    order, here, there = u_order_stability(sys)
    instance = sys.describe()
    instance["closure_dims"] = [here, there]
    failures = [] if here == there else [(order, here, there)]
    return result_for(sys, "u-order-stability", failures, instance, order)


def check_super_lift(sys, r=None):
    # type: (GaudinSystem, Optional[int]) -> CheckResult
    instance = sys.describe()
    r = minimal_r(sys) if r is None else r
    instance["r"] = r
    try:
        matches = super_lift_spectra(sys, r)
    except MultisetMismatch as error:
        return result_for(sys, "super-lift", [error.coefficient], instance)
    instance["weights"] = [match.partition.to_json() for match in matches]
    return result_for(sys, "super-lift", [], instance)


def shapovalov_symmetry(sys):
    # type: (GaudinSystem) -> List[Any]
    """Coefficient matrices b with S(bv, w) != S(v, bw)."""
    gram = shapovalov_gram(sys.module).matrix
    _, matrices = _u_matrices(sys)
    return [
        key
        for key, matrix in matrices.items()
        if not (matrix.transpose().matmul(gram) - gram.matmul(matrix)).is_zero_matrix()
    ]


def check_shapovalov_symmetry(sys):
    # type: (GaudinSystem) -> CheckResult
    try:
        failures = shapovalov_symmetry(sys)
    except NotClassical as error:
        return vacuous_for(sys, "shapovalov-symmetry", error)
    return result_for(sys, "shapovalov-symmetry", failures, None, resolve_u_order(sys))


def check_quadratic_membership(sys):
    # type: (GaudinSystem) -> CheckResult
    """Every H_k commutes with the realized algebra and with gl(m|n)."""
    if sys.ell < 2:
        return vacuous_for(sys, "quadratic-membership", "a single site has no H_k")
    order = resolve_u_order(sys)
    basis = generators(sys, order)
    failures = []
    for k, hamiltonian in enumerate(quadratic_hamiltonians(sys)):
        for i, matrix in enumerate(basis):
            if not commutator(hamiltonian, matrix).is_zero_matrix():
                failures.append((k, "generator", i))
        for g, action in gl_actions(sys):
            if not commutator(hamiltonian, action).is_zero_matrix():
                failures.append((k, "gl", g))
    return result_for(sys, "quadratic-membership", failures, None, order)
