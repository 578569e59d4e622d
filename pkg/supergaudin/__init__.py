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

"""Exact computer algebra for the gl(m|n) Gaudin model.

The package builds polynomial gl(m|n)-modules, realizes the Lax matrix and
the Berezinian generated Gaudin Hamiltonians on them and checks the
identities and structural properties of the resulting commutative algebra
in exact rational arithmetic.
"""

from __future__ import unicode_literals

__version__ = "0.1.0"


class SupergaudinError(Exception):
    """Base class of every error raised by supergaudin."""
