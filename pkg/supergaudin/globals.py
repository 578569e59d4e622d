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

from __future__ import unicode_literals

from typing import Tuple

from logbook import Logger

SCRIPT_NAME = "supergaudin"  # type: str
DEFAULT_WINDOW = 6  # type: int
DEFAULT_TOL = 1e-9  # type: float
MAX_U_ORDER = 8  # type: int
# u-adic products never drop terms: every d-power stays nonnegative there.
EXACT_DEPTH = 1 << 20  # type: int
LOGGER = Logger(SCRIPT_NAME)

# Report order of the check suite.
CHECK_NAMES = (
    "commutativity",
    "binomial-relation",
    "permutation-invariance",
    "cdet-consistency",
    "ber-cdet-factorization",
    "schur-factorization",
    "expansion-shape",
    "gl-invariance",
    "manin",
    "relations",
    "parity-convention",
    "decomposition",
    "truncation-i",
    "truncation-ii",
    "sigma-singular-correspondence",
    "structure",
    "simple-spectrum",
    "u-order-stability",
    "super-lift",
    "bethe",
    "fuchsian",
    "shapovalov-symmetry",
    "sum-rule",
    "quadratic-membership",
)  # type: Tuple[str, ...]
