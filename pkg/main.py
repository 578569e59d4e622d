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

import os
import sys

# Use a `venv` directory next to this script if there is one, so that a
# checkout runs without installing the package.
activate_this = os.path.join(
    os.path.dirname(os.path.realpath(__file__)), "venv", "bin", "activate_this.py"
)
if os.path.exists(activate_this):
    exec(open(activate_this).read(), {"__file__": activate_this})

from supergaudin.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
