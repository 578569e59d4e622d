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

"""Polynomial gl(m|n)-modules with exact action matrices.

Modules are built from the natural module by super tensor products; the
irreducible L(lambda) is cut out of a tensor power as the span of a singular
vector under the lowering operators.  Every module carries one sparse QQ
matrix per generator E_ab, indexed by 0-based positions (a, b).
"""

from __future__ import unicode_literals

import itertools
from collections import OrderedDict, deque
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import attr
import numpy as np
from logbook import Logger
from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from . import SupergaudinError
from .exactalg import (
    Echelon,
    kernel_basis,
    matrix_to_json,
    matvec,
    qmatrix,
    rat_to_str,
    vector_add,
)
from .superdata import (
    BadRange,
    HookPartition,
    IndexSet,
    NotHook,
    Parity,
    Perm,
    Weight,
    partition_from_weight,
    partition_weight,
    partition_weight_sigma,
    sigma_p,
    weight_in_truncation,
)

logger = Logger("supergaudin.repmod")


class SingularVectorNotFound(SupergaudinError):
    pass


class NotClassical(SupergaudinError):
    pass


def _label_str(label):
    if isinstance(label, tuple):
        return "({})".format(",".join(_label_str(part) for part in label))
    return "{}".format(label)


@attr.s
class ModuleSpace(object):
    m = attr.ib(type=int)
    n = attr.ib(type=int)
    labels = attr.ib(type=list)
    parities = attr.ib(type=list)
    weights = attr.ib(type=list)
    actions = attr.ib(type=dict)
    sites = attr.ib(default=None)
    factors = attr.ib(default=None)
    highest = attr.ib(default=None)
    parent = attr.ib(default=None)
    embedding = attr.ib(default=None)
    _index = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        self._index = {label: i for i, label in enumerate(self.labels)}

    @property
    def dim(self):
        # type: () -> int
        return len(self.labels)

    @property
    def index_set(self):
        # type: () -> IndexSet
        return IndexSet(self.m, self.n)

    @property
    def generators(self):
        # type: () -> List[Tuple[int, int]]
        size = self.m + self.n
        return [(a, b) for a in range(size) for b in range(size)]

    def generator_parity(self, a, b):
        # type: (int, int) -> int
        index = self.index_set
        return (index.parity(a).value + index.parity(b).value) % 2

    def action(self, a, b):
        # type: (int, int) -> SDM
        return self.actions[(a, b)]

    def site_action(self, site, a, b):
        # type: (int, int, int) -> SDM
        if self.sites is None:
            if site != 0:
                raise BadRange("module has a single site")
            return self.actions[(a, b)]
        return self.sites[site][(a, b)]

    @property
    def site_count(self):
        # type: () -> int
        return 1 if self.sites is None else len(self.sites)

    def index_of(self, label):
        # type: (Any) -> int
        return self._index[label]

    def weight_spaces(self):
        # type: () -> Dict[Weight, List[int]]
        spaces = OrderedDict()  # type: Dict[Weight, List[int]]
        for i, weight in enumerate(self.weights):
            spaces.setdefault(weight, []).append(i)
        return spaces

    def to_json(self):
        # type: () -> Dict[str, Any]
        index = self.index_set
        return OrderedDict(
            [
                ("basis", [_label_str(label) for label in self.labels]),
                (
                    "weights",
                    OrderedDict(
                        (_label_str(label), weight.to_json())
                        for label, weight in zip(self.labels, self.weights)
                    ),
                ),
                (
                    "actions",
                    OrderedDict(
                        (
                            "({},{})".format(index.label(a), index.label(b)),
                            matrix_to_json(self.actions[(a, b)]),
                        )
                        for a, b in self.generators
                    ),
                ),
            ]
        )


def natural_module(m, n):
    # type: (int, int) -> ModuleSpace
    """C^{m|n} with E_ab e_c = delta_bc e_a."""
    if m < 1 or n < 0:
        raise BadRange("natural module needs m >= 1 and n >= 0")
    index = IndexSet(m, n)
    size = index.size
    actions = {
        (a, b): qmatrix([(a, b, 1)], size)
        for a in range(size)
        for b in range(size)
    }
    return ModuleSpace(
        m=m,
        n=n,
        labels=list(range(size)),
        parities=[index.parity(position) for position in range(size)],
        weights=[Weight.epsilon(m, n, position) for position in range(size)],
        actions=actions,
        highest=0,
    )


def trivial_module(m, n):
    # type: (int, int) -> ModuleSpace
    size = m + n
    return ModuleSpace(
        m=m,
        n=n,
        labels=[0],
        parities=[Parity.EVEN],
        weights=[Weight.zero(m, n)],
        actions={(a, b): SDM({}, (1, 1), QQ) for a in range(size) for b in range(size)},
        highest=0,
    )


def tensor_product(factors):
    # type: (Sequence[ModuleSpace]) -> ModuleSpace
    """Super tensor product, basis ordered row-major.

    The copy of E_ab acting on factor k picks up the sign
    (-1)^(|E_ab| (|v_1| + ... + |v_(k-1)|)).
    """
    if not factors:
        raise BadRange("a tensor product needs at least one factor")
    m, n = factors[0].m, factors[0].n
    if any((f.m, f.n) != (m, n) for f in factors):
        raise BadRange("factors of different gl(m|n)")

    dims = [f.dim for f in factors]
    tuples = list(itertools.product(*[range(d) for d in dims]))
    flat = {t: i for i, t in enumerate(tuples)}
    total = len(tuples)

    labels = [tuple(f.labels[i] for f, i in zip(factors, t)) for t in tuples]
    parities = [
        Parity(sum(f.parities[i].value for f, i in zip(factors, t)) % 2)
        for t in tuples
    ]
    weights = []
    for t in tuples:
        weight = Weight.zero(m, n)
        for f, i in zip(factors, t):
            weight = weight + f.weights[i]
        weights.append(weight)

    generators = factors[0].generators
    sites = []
    for k, factor in enumerate(factors):
        columns = {g: factor.action(*g).transpose() for g in generators}
        site = {}
        for g in generators:
            odd = factor.generator_parity(*g)
            column = columns[g]
            entries = []
            for t, col in zip(tuples, range(total)):
                images = column.get(t[k])
                if not images:
                    continue
                prefix = sum(factors[s].parities[t[s]].value for s in range(k))
                sign = -1 if odd and prefix % 2 else 1
                for row, value in images.items():
                    target = t[:k] + (row,) + t[k + 1:]
                    entries.append((flat[target], col, sign * value))
            site[g] = qmatrix(entries, total)
        sites.append(site)

    actions = {}
    for g in generators:
        matrix = sites[0][g]
        for site in sites[1:]:
            matrix = matrix + site[g]
        actions[g] = matrix

    return ModuleSpace(
        m=m,
        n=n,
        labels=labels,
        parities=parities,
        weights=weights,
        actions=actions,
        sites=sites,
        factors=list(factors),
    )


@attr.s
class Subspace(object):
    """Span of exact vectors, kept in reduced row echelon form."""

    ambient = attr.ib(type=int)
    vectors = attr.ib(type=list, factory=list)
    pivots = attr.ib(type=list, factory=list)
    weight = attr.ib(default=None)

    @classmethod
    def span(cls, ambient, vectors, weight=None):
        # type: (int, Sequence[Dict[int, Any]], Optional[Weight]) -> Subspace
        rows = {i: dict(v) for i, v in enumerate(vectors) if v}
        if not rows:
            return cls(ambient, [], [], weight)
        matrix = SDM(
            dict(enumerate(rows.values())), (len(rows), ambient), QQ
        )
        reduced, _ = matrix.rref()
        echelon = sorted((min(row), dict(row)) for row in reduced.values() if row)
        return cls(
            ambient,
            [row for _, row in echelon],
            [pivot for pivot, _ in echelon],
            weight,
        )

    @classmethod
    def join(cls, subspaces, ambient=None):
        # type: (Sequence[Subspace], Optional[int]) -> Subspace
        if ambient is None:
            ambient = subspaces[0].ambient
        vectors = [v for sub in subspaces for v in sub.vectors]
        return cls.span(ambient, vectors)

    @property
    def dim(self):
        # type: () -> int
        return len(self.vectors)

    def coordinates(self, vector):
        # type: (Dict[int, Any]) -> Optional[List[Any]]
        """Coordinates in the echelon basis, or None if outside the span."""
        coords = [vector.get(pivot, QQ.zero) for pivot in self.pivots]
        remainder = dict(vector)
        for coeff, basis in zip(coords, self.vectors):
            if coeff:
                remainder = vector_add(remainder, basis, -coeff)
        if remainder:
            return None
        return coords

    def contains(self, vector):
        # type: (Dict[int, Any]) -> bool
        return self.coordinates(vector) is not None

    def equals(self, other):
        # type: (Subspace) -> bool
        return (
            self.ambient == other.ambient
            and self.dim == other.dim
            and all(other.contains(v) for v in self.vectors)
        )

    def embed(self, coords):
        # type: (Sequence[Any]) -> Dict[int, Any]
        vector = {}
        for coeff, basis in zip(coords, self.vectors):
            if coeff:
                vector = vector_add(vector, basis, coeff)
        return vector

    def to_json(self):
        # type: () -> Dict[str, Any]
        return OrderedDict(
            [
                ("dim", self.dim),
                ("weight", None if self.weight is None else self.weight.to_json()),
                (
                    "vectors",
                    [
                        [[i, rat_to_str(value)] for i, value in sorted(v.items())]
                        for v in self.vectors
                    ],
                ),
            ]
        )


def singular_space(module, sigma=None):
    # type: (ModuleSpace, Optional[Perm]) -> Dict[Weight, Subspace]
    """Per-weight joint kernels of E_ab for a <_sigma b; empty ones omitted."""
    size = module.m + module.n
    if sigma is None:
        sigma = Perm.identity(size)
    raising = [
        (a, b)
        for a in range(size)
        for b in range(size)
        if a != b and sigma.precedes(a, b)
    ]
    columns = [module.action(a, b).transpose() for a, b in raising]

    spaces = OrderedDict()  # type: Dict[Weight, Subspace]
    for weight, indices in module.weight_spaces().items():
        local = {g: l for l, g in enumerate(indices)}
        entries = {}  # type: Dict[Tuple[int, int], Any]
        row_keys = {}  # type: Dict[Tuple[int, int], int]
        for op, column in enumerate(columns):
            for g in indices:
                for row, value in column.get(g, {}).items():
                    key = row_keys.setdefault((op, row), len(row_keys))
                    entries[(key, local[g])] = value

        matrix = SDM.from_dok(entries, (len(row_keys), len(indices)), QQ)
        kernel = kernel_basis(matrix)
        if not kernel:
            continue
        vectors = [{indices[l]: value for l, value in v.items()} for v in kernel]
        spaces[weight] = Subspace.span(module.dim, vectors, weight)

    return spaces


def span_module(module, seeds, highest_weight=None):
    # type: (ModuleSpace, Sequence[Dict[int, Any]], Optional[Weight]) -> ModuleSpace
    """The submodule spanned by the seeds under the lowering operators.

    Seeds are expected to be singular, so lowering alone reaches the whole
    submodule they generate.
    """
    size = module.m + module.n
    lowering = [(a, b) for a in range(size) for b in range(size) if a > b]
    echelons = OrderedDict()  # type: Dict[Weight, Echelon]

    def weight_of(vector):
        return module.weights[min(vector)]

    queue = deque()
    for seed in seeds:
        if echelons.setdefault(weight_of(seed), Echelon()).add(seed):
            queue.append(seed)

    while queue:
        vector = queue.popleft()
        for a, b in lowering:
            image = matvec(module.action(a, b), vector)
            if not image:
                continue
            if echelons.setdefault(weight_of(image), Echelon()).add(image):
                queue.append(image)

    basis = []  # type: List[Tuple[Weight, int, Dict[int, Any]]]
    location = {}  # type: Dict[Weight, Dict[int, int]]
    for weight, echelon in echelons.items():
        for pivot, row in sorted(echelon.rows, key=lambda item: item[0]):
            location.setdefault(weight, {})[pivot] = len(basis)
            basis.append((weight, pivot, row))

    dim = len(basis)
    actions = {}
    for g in module.generators:
        matrix = module.action(*g)
        entries = []
        for col, (_, _, vector) in enumerate(basis):
            image = matvec(matrix, vector)
            if not image:
                continue
            target = location[weight_of(image)]
            for pivot, row_index in target.items():
                value = image.get(pivot)
                if value:
                    entries.append((row_index, col, value))
        actions[g] = qmatrix(entries, dim)

    highest = None
    if highest_weight is not None:
        highest = next(
            i for i, (weight, _, _) in enumerate(basis) if weight == highest_weight
        )

    return ModuleSpace(
        m=module.m,
        n=module.n,
        labels=list(range(dim)),
        parities=[module.parities[pivot] for _, pivot, _ in basis],
        weights=[weight for weight, _, _ in basis],
        actions=actions,
        highest=highest,
        embedding=[vector for _, _, vector in basis],
    )


@lru_cache(maxsize=None)
def _irreducible(parts, m, n):
    partition = HookPartition(parts)
    if not partition.is_hook(m, n):
        raise NotHook("{} is not a ({}|{})-hook partition".format(partition, m, n))
    if partition.size == 0:
        return trivial_module(m, n)
    if partition.parts == (1,):
        return natural_module(m, n)

    power = tensor_product([natural_module(m, n)] * partition.size)
    target = partition_weight(partition, m, n)
    spaces = singular_space(power)
    if target not in spaces:
        raise SingularVectorNotFound(
            "no singular vector of weight {} in the tensor power".format(target)
        )

    module = span_module(power, [spaces[target].vectors[0]], target)
    singular = singular_space(module)
    if list(singular) != [target] or singular[target].dim != 1:
        raise SingularVectorNotFound(
            "span of the singular vector of weight {} is not irreducible".format(target)
        )

    logger.debug("L({}) for gl({}|{}) has dimension {}".format(
        partition, m, n, module.dim))
    return module


def irreducible_module(partition, m, n):
    # type: (Any, int, int) -> ModuleSpace
    if not isinstance(partition, HookPartition):
        partition = HookPartition(partition)
    return _irreducible(partition.parts, m, n)


def highest_weight_index(module):
    # type: (ModuleSpace) -> int
    if module.highest is not None:
        return module.highest
    spaces = singular_space(module)
    if len(spaces) != 1:
        raise SingularVectorNotFound("module is not irreducible")
    sub = list(spaces.values())[0]
    vector = sub.vectors[0]
    if len(vector) != 1:
        raise SingularVectorNotFound("highest weight vector is not a basis vector")
    return next(iter(vector))


@attr.s
class Decomposition(object):
    multiplicities = attr.ib(type=OrderedDict)
    dimension = attr.ib(type=int)
    total = attr.ib(type=int)

    @property
    def consistent(self):
        # type: () -> bool
        return self.dimension == self.total

    def multiset(self):
        # type: () -> List[HookPartition]
        return sorted(
            (
                partition
                for partition, count in self.multiplicities.items()
                for _ in range(count)
            ),
            key=lambda partition: partition.parts,
            reverse=True,
        )


def decompose(module):
    # type: (ModuleSpace) -> Decomposition
    multiplicities = OrderedDict()  # type: Dict[HookPartition, int]
    total = 0
    for weight, sub in singular_space(module).items():
        partition = partition_from_weight(weight)
        if partition_weight(partition, module.m, module.n) != weight:
            raise SingularVectorNotFound(
                "singular weight {} is not a hook highest weight".format(weight)
            )
        multiplicities[partition] = multiplicities.get(partition, 0) + sub.dim
        total += sub.dim * irreducible_module(partition, module.m, module.n).dim
    return Decomposition(multiplicities, module.dim, total)


def truncate(module, p, k):
    # type: (ModuleSpace, int, int) -> ModuleSpace
    """Keep the weight spaces supported on I_{p|k}, acted on by gl(p|k)."""
    index = module.index_set
    positions = index.standard_subset(p, k)
    kept = [
        i for i, weight in enumerate(module.weights)
        if weight_in_truncation(weight, p, k)
    ]
    local = {g: l for l, g in enumerate(kept)}
    dim = len(kept)

    def restrict(actions):
        result = {}
        for new_a, a in enumerate(positions):
            for new_b, b in enumerate(positions):
                entries = []
                for row, values in actions[(a, b)].items():
                    if row not in local:
                        continue
                    for col, value in values.items():
                        if col in local:
                            entries.append((local[row], local[col], value))
                result[(new_a, new_b)] = qmatrix(entries, dim)
        return result

    sites = None
    if module.sites is not None:
        sites = [restrict(site) for site in module.sites]

    factors = None
    if module.factors is not None:
        factors = [truncate(factor, p, k) for factor in module.factors]

    return ModuleSpace(
        m=p,
        n=k,
        labels=[module.labels[i] for i in kept],
        parities=[module.parities[i] for i in kept],
        weights=[
            Weight(p, k, module.weights[i].restrict(positions)) for i in kept
        ],
        actions=restrict(module.actions),
        sites=sites,
        factors=factors,
        parent=kept,
    )


def tensor_compatible(module, p, k):
    # type: (ModuleSpace, int, int) -> bool
    """truncate(M1 x ... x Ml) against truncate(M1) x ... x truncate(Ml)."""
    if module.factors is None:
        return True
    left = truncate(module, p, k)
    pieces = [truncate(factor, p, k) for factor in module.factors]
    if any(piece.dim == 0 for piece in pieces):
        return left.dim == 0
    right = tensor_product(pieces)
    if left.labels != right.labels or left.weights != right.weights:
        return False
    return all(
        (left.actions[g] - right.actions[g]).is_zero_matrix()
        for g in left.generators
    )


@attr.s
class Correspondence(object):
    partition = attr.ib(type=HookPartition)
    p = attr.ib(type=int)
    left = attr.ib(type=Subspace)
    right = attr.ib(type=Subspace)
    standard_dim = attr.ib(type=int)

    @property
    def equal(self):
        # type: () -> bool
        return self.left.equals(self.right)

    @property
    def dims_match(self):
        # type: () -> bool
        return self.left.dim == self.right.dim == self.standard_dim


def sigma_singular_correspondence(module, partition, p):
    # type: (ModuleSpace, Any, int) -> Correspondence
    """Truncated singular space against the sigma_p-singular space."""
    if not isinstance(partition, HookPartition):
        partition = HookPartition(partition)
    m, n = module.m, module.n
    if not partition.is_hook(p, n):
        raise BadRange("{} is not a ({}|{})-hook partition".format(partition, p, n))

    truncated = truncate(module, p, n)
    left_weight = partition_weight(partition, p, n)
    left_space = singular_space(truncated).get(left_weight)
    left_vectors = []
    if left_space is not None:
        left_vectors = [
            {truncated.parent[i]: value for i, value in v.items()}
            for v in left_space.vectors
        ]
    right_weight = partition_weight_sigma(partition, m, n, p)
    left = Subspace.span(module.dim, left_vectors, right_weight)

    right = singular_space(module, sigma_p(m, n, p)).get(right_weight)
    if right is None:
        right = Subspace(module.dim, [], [], right_weight)

    standard = singular_space(module).get(partition_weight(partition, m, n))
    return Correspondence(
        partition, p, left, right, 0 if standard is None else standard.dim
    )


@attr.s
class GramForm(object):
    matrix = attr.ib(type=SDM)

    def value(self, left, right):
        # type: (Dict[int, Any], Dict[int, Any]) -> Any
        image = matvec(self.matrix, right)
        return sum((value * image[i] for i, value in left.items() if i in image), QQ.zero)

    def is_symmetric(self):
        # type: () -> bool
        return (self.matrix - self.matrix.transpose()).is_zero_matrix()

    def adjoint_violations(self, module):
        # type: (ModuleSpace) -> List[Tuple[int, int]]
        """Generators with S(E_rs v, w) != S(v, E_sr w)."""
        return [
            (r, s)
            for r, s in module.generators
            if not (
                module.action(r, s).transpose().matmul(self.matrix)
                - self.matrix.matmul(module.action(s, r))
            ).is_zero_matrix()
        ]


def _contravariant_form(module):
    dim = module.dim
    unknowns = {}  # type: Dict[Tuple[int, int], int]
    for i in range(dim):
        for j in range(i, dim):
            if module.weights[i] == module.weights[j]:
                unknowns[(i, j)] = len(unknowns)

    def var(i, j):
        return unknowns.get((i, j) if i <= j else (j, i))

    rows = {}  # type: Dict[Tuple[int, int], int]
    entries = {}  # type: Dict[Tuple[int, int], Any]

    def add(key, variable, value):
        row = rows.setdefault(key, len(rows))
        total = entries.get((row, variable), QQ.zero) + value
        if total:
            entries[(row, variable)] = total
        else:
            entries.pop((row, variable), None)

    # (E_rs^T G - G E_sr)[x][y] = 0
    for r, s in module.generators:
        raising = module.action(r, s)
        lowering = module.action(s, r)
        for k, row in raising.items():
            for x, value in row.items():
                for y in range(dim):
                    variable = var(k, y)
                    if variable is not None:
                        add((r, s, x, y), variable, value)
        for x in range(dim):
            for k, row in lowering.items():
                variable = var(x, k)
                if variable is None:
                    continue
                for y, value in row.items():
                    add((r, s, x, y), variable, -value)

    matrix = SDM.from_dok(entries, (max(len(rows), 1), len(unknowns)), QQ)
    kernel = kernel_basis(matrix)
    if len(kernel) != 1:
        raise SingularVectorNotFound(
            "contravariant forms span a {}-dimensional space".format(len(kernel))
        )

    solution = kernel[0]
    top = highest_weight_index(module)
    scale = solution.get(var(top, top))
    if not scale:
        raise SingularVectorNotFound("contravariant form vanishes on the top vector")

    values = {}
    for (i, j), variable in unknowns.items():
        value = solution.get(variable)
        if value:
            values.setdefault(i, {})[j] = value / scale
            values.setdefault(j, {})[i] = value / scale
    return SDM(values, (dim, dim), QQ)


def shapovalov_gram(module):
    # type: (ModuleSpace) -> GramForm
    """Tensor product of the contravariant forms normalized at the top."""
    if module.n > 0:
        raise NotClassical("Shapovalov forms are only built for gl_m modules")

    if module.factors is None:
        return GramForm(_contravariant_form(module))

    grams = [shapovalov_gram(factor).matrix for factor in module.factors]
    listed = [
        [(i, j, value) for i, row in gram.items() for j, value in row.items()]
        for gram in grams
    ]
    entries = []
    for combination in itertools.product(*listed):
        left = tuple(
            factor.labels[i] for factor, (i, _, _) in zip(module.factors, combination)
        )
        right = tuple(
            factor.labels[j] for factor, (_, j, _) in zip(module.factors, combination)
        )
        value = QQ.one
        for _, _, factor_value in combination:
            value *= factor_value
        entries.append((module.index_of(left), module.index_of(right), value))
    return GramForm(qmatrix(entries, module.dim))


def check_relations(module, samples=100, seed=0):
    # type: (ModuleSpace, int, int) -> List[Tuple[Any, ...]]
    """Sampled violations of the gl(m|n) supercommutation relations.

    Also reports every E_ii that fails to act by the weight on the basis.
    """
    size = module.m + module.n
    rng = np.random.default_rng(seed)
    violations = []

    for _ in range(samples):
        a, b, c, d = (int(x) for x in rng.integers(0, size, 4))
        sign = -1 if module.generator_parity(a, b) * module.generator_parity(c, d) else 1
        left = module.action(a, b).matmul(module.action(c, d))
        right = module.action(c, d).matmul(module.action(a, b))
        bracket = left - right if sign > 0 else left + right

        expected = SDM.zeros((module.dim, module.dim), QQ)
        if b == c:
            expected = expected + module.action(a, d)
        if d == a:
            term = module.action(c, b)
            expected = expected - term if sign > 0 else expected + term

        if not (bracket - expected).is_zero_matrix():
            violations.append((a, b, c, d))

    for i in range(size):
        diagonal = qmatrix(
            [(x, x, weight[i]) for x, weight in enumerate(module.weights)],
            module.dim,
        )
        if not (module.action(i, i) - diagonal).is_zero_matrix():
            violations.append(("diagonal", i))

    return violations


def parity_convention(module):
    # type: (ModuleSpace) -> List[Any]
    """Basis labels whose parity differs from the parity of their weight."""
    return [
        label
        for label, parity, weight in zip(module.labels, module.parities, module.weights)
        if parity != weight.parity
    ]
