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

"""supergaudin run configuration.

A run is described by a JSON file and command line flags.  Every key a run
understands is an Option in RUN_OPTIONS; load_config merges the sources,
casts and validates each value and returns a RunConfig.

To add a run parameter add an Option to RUN_OPTIONS and a field to
RunConfig.
"""

from __future__ import unicode_literals

import json
import os
from collections import OrderedDict, namedtuple
from typing import Any, Dict, List, Optional

import attr
import logbook

from . import SupergaudinError
from .exactalg import rat, rat_to_str
from .globals import CHECK_NAMES, DEFAULT_TOL, DEFAULT_WINDOW, MAX_U_ORDER
from .superdata import BadRange, HookPartition


class ConfigError(SupergaudinError):
    def __init__(self, location, message):
        self.location = location
        super(ConfigError, self).__init__("{}: {}".format(location, message))


class Option(
    namedtuple(
        "Option",
        [
            "name",
            "type",
            "string_values",
            "min",
            "max",
            "value",
            "description",
            "cast_func",
            "change_callback",
        ],
    )
):
    """A class representing a run option.

    An option object is consumed by load_config, which casts and range
    checks the raw JSON or flag value before it lands on a RunConfig.
    """

    __slots__ = ()

    def __new__(
        cls,
        name,
        type,
        string_values,
        min,
        max,
        value,
        description,
        cast=None,
        change_callback=None,
    ):
        """
        Parameters:
            name (str): Name of the option, also its JSON key
            type (str): Type of the option, one of integer, float, boolean,
                string or list
            string_values (str): Accepted string values separated by |, an
                integer option may also take one of them
            min (int): Minimal value of the option, only used if the type of
                the option is integer
            max (int): Maximal value of the option, only used if the type of
                the option is integer
            value: Default value of the option
            description (str): Description of the option
            cast (callable): A callable taking the raw value and the
                location string, returning the checked value.
            change_callback (callable): A function called with the finished
                RunConfig after every option has been set.
        """

        return super(Option, cls).__new__(
            cls,
            name,
            type,
            string_values,
            min,
            max,
            value,
            description,
            cast,
            change_callback,
        )


def level_to_logbook(value):
    if value == 0:
        return logbook.ERROR
    if value == 1:
        return logbook.WARNING
    if value == 2:
        return logbook.INFO
    if value == 3:
        return logbook.DEBUG

    return logbook.ERROR


def _sites_cast(value, location):
    if not isinstance(value, list) or not value:
        raise ConfigError(location, "expected a non-empty list of partitions")
    sites = []
    for i, parts in enumerate(value):
        try:
            sites.append(HookPartition(parts))
        except (BadRange, TypeError, ValueError) as error:
            raise ConfigError("{}[{}]".format(location, i), error)
    return sites


def _z_cast(value, location):
    if value == "random":
        return value
    if isinstance(value, str):
        value = [part for part in value.split(",") if part.strip()]
    if not isinstance(value, list):
        raise ConfigError(location, 'expected a list of "p/q" strings or "random"')
    points = []
    for i, point in enumerate(value):
        try:
            points.append(rat(point))
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise ConfigError("{}[{}]".format(location, i), error)
        if points[-1] in points[:-1]:
            raise ConfigError(
                "{}[{}]".format(location, i),
                "repeated point {}".format(rat_to_str(points[-1])),
            )
    return points


def _checks_cast(value, location):
    if isinstance(value, str):
        value = [value]
    if not isinstance(value, list):
        raise ConfigError(location, "expected a list of check names")
    for i, name in enumerate(value):
        if name not in CHECK_NAMES:
            raise ConfigError("{}[{}]".format(location, i),
                              "unknown check {}".format(name))
    # each requested check runs once
    return list(OrderedDict.fromkeys(value))


def _resolve_z(config):
    from .gaudin import sample_z

    if config.z == "random":
        config.z = sample_z(len(config.sites), config.seed)


RUN_OPTIONS = [
    Option("m", "integer", "", 1, 16, 1, "Even rank m of gl(m|n)"),
    Option("n", "integer", "", 0, 16, 0, "Odd rank n of gl(m|n)"),
    Option(
        "sites",
        "list",
        "",
        0,
        0,
        [[1], [1]],
        "Hook partition of the irreducible module at each site",
        _sites_cast,
    ),
    Option(
        "z",
        "list",
        "random",
        0,
        0,
        "random",
        'Marked points as "p/q" strings, or "random" for seeded sampling',
        _z_cast,
        _resolve_z,
    ),
    Option(
        "u_order",
        "integer",
        "auto",
        2,
        64,
        "auto",
        "Order of the u-adic Berezinian expansion, auto stops at a stable closure",
    ),
    Option("window", "integer", "", 1, 64, DEFAULT_WINDOW,
           "Number of d-powers kept below the top symbol"),
    Option("seed", "integer", "", 0, 2 ** 31 - 1, 0,
           "Seed of every random choice of a run"),
    Option("float_tol", "float", "", 0, 0, DEFAULT_TOL,
           "Tolerance of the float bridge"),
    Option("checks", "list", "", 0, 0, [], "Checks to run, in suite order",
           _checks_cast),
    Option("out", "string", "", 0, 0, None, "Report file, stdout if unset"),
    Option("verbosity", "integer", "", 0, 3, 1,
           "0 errors, 1 warnings, 2 info, 3 debug"),
    Option("timings", "boolean", "", 0, 0, False,
           "Add wall clock milliseconds to every check result"),
    Option("trials", "integer", "", 1, 100, 5,
           "Random trials of the structure and spectrum checks"),
    Option("max_u_order", "integer", "", 2, 64, MAX_U_ORDER,
           "Largest u-order tried by the automatic setting"),
    Option("max_bethe_roots", "integer", "", 0, 8, 3,
           "Weights needing more Bethe roots are skipped"),
    Option("truncation_p", "integer", "", 1, 16, 1,
           "Even rank kept by the truncation checks"),
    Option("truncation_k", "integer", "", 0, 16, 0,
           "Odd rank kept by the truncation checks"),
    Option("truncation_lambda", "list", "", 0, 0, None,
           "Partitions for the truncation checks, all singular ones if unset"),
]  # type: List[Option]


def _cast(option, value, location):
    if option.cast_func is not None:
        return option.cast_func(value, location)
    if value is None:
        return None

    string_values = option.string_values.split("|") if option.string_values else []
    if value in string_values:
        return value

    if option.type == "integer":
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise ConfigError(location, "expected an integer")
        try:
            value = int(value)
        except ValueError:
            raise ConfigError(location, "expected an integer, got {}".format(value))
        if not option.min <= value <= option.max:
            raise ConfigError(location, "{} outside {}..{}".format(
                value, option.min, option.max))
        return value
    if option.type == "float":
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ConfigError(location, "expected a number")
        if value <= 0:
            raise ConfigError(location, "must be positive")
        return value
    if option.type == "boolean":
        if not isinstance(value, bool):
            raise ConfigError(location, "expected true or false")
        return value
    if option.type == "list" and not isinstance(value, list):
        raise ConfigError(location, "expected a list")
    return value


@attr.s
class RunConfig(object):
    m = attr.ib(type=int, default=1)
    n = attr.ib(type=int, default=0)
    sites = attr.ib(type=list, factory=lambda: [HookPartition([1]), HookPartition([1])])
    z = attr.ib(default="random")
    u_order = attr.ib(default="auto")
    window = attr.ib(type=int, default=DEFAULT_WINDOW)
    seed = attr.ib(type=int, default=0)
    float_tol = attr.ib(type=float, default=DEFAULT_TOL)
    checks = attr.ib(type=list, factory=list)
    out = attr.ib(default=None)
    verbosity = attr.ib(type=int, default=1)
    timings = attr.ib(type=bool, default=False)
    trials = attr.ib(type=int, default=5)
    max_u_order = attr.ib(type=int, default=MAX_U_ORDER)
    max_bethe_roots = attr.ib(type=int, default=3)
    truncation_p = attr.ib(type=int, default=1)
    truncation_k = attr.ib(type=int, default=0)
    truncation_lambda = attr.ib(default=None)

    def validate(self, source="config"):
        # type: (str) -> RunConfig
        for i, site in enumerate(self.sites):
            if not site.is_hook(self.m, self.n):
                raise ConfigError(
                    "{}: sites[{}]".format(source, i),
                    "{} is not a ({}|{})-hook partition".format(site, self.m, self.n),
                )
        if self.z != "random" and len(self.z) != len(self.sites):
            raise ConfigError(
                "{}: z".format(source),
                "{} points for {} sites".format(len(self.z), len(self.sites)),
            )
        if self.truncation_p > self.m or self.truncation_k > self.n:
            raise ConfigError(
                "{}: truncation".format(source),
                "gl({}|{}) is not inside gl({}|{})".format(
                    self.truncation_p, self.truncation_k, self.m, self.n),
            )
        if self.truncation_lambda is not None:
            self.truncation_lambda = _sites_cast(
                self.truncation_lambda, "{}: truncation_lambda".format(source)
            )
        return self

    def echo(self):
        # type: () -> Dict[str, Any]
        """The resolved configuration as it appears in the report."""
        return OrderedDict(
            [
                ("m", self.m),
                ("n", self.n),
                ("sites", [site.to_json() for site in self.sites]),
                (
                    "z",
                    self.z if self.z == "random"
                    else [rat_to_str(point) for point in self.z],
                ),
                ("u_order", self.u_order),
                ("window", self.window),
                ("seed", self.seed),
                ("float_tol", self.float_tol),
                ("checks", list(self.checks)),
            ]
        )


def read_config_file(path):
    # type: (str) -> Dict[str, Any]
    name = os.path.basename(path)
    try:
        with open(path) as config_file:
            raw = json.load(config_file)
    except (IOError, OSError) as error:
        raise ConfigError(name, "cannot be read: {}".format(error))
    except ValueError as error:
        raise ConfigError(name, "is not valid JSON: {}".format(error))
    if not isinstance(raw, dict):
        raise ConfigError(name, "expected a JSON object")
    return raw


def load_config(path=None, flags=None, raw=None):
    # type: (Optional[str], Optional[Dict[str, Any]], Optional[Dict[str, Any]]) -> RunConfig
    """Merge file, flags and defaults into a validated RunConfig.

    A flag given on the command line wins over the file; the file wins over
    the defaults.
    """
    source = os.path.basename(path) if path else "config"
    if raw is None:
        raw = read_config_file(path) if path else {}
    flags = {key: value for key, value in (flags or {}).items() if value is not None}

    known = {option.name for option in RUN_OPTIONS}
    for key in raw:
        if key not in known:
            raise ConfigError("{}: {}".format(source, key), "unknown key")

    config = RunConfig()
    for option in RUN_OPTIONS:
        if option.name in flags:
            value, location = flags[option.name], "flags: {}".format(option.name)
        elif option.name in raw:
            value, location = raw[option.name], "{}: {}".format(source, option.name)
        else:
            continue
        setattr(config, option.name, _cast(option, value, location))

    config.validate(source)

    for option in RUN_OPTIONS:
        if option.change_callback is not None:
            option.change_callback(config)

    return config
