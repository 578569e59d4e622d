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

"""Command line front end: configuration, the check suite and reports."""

from __future__ import unicode_literals

import argparse
import json
import sys
import time
from collections import OrderedDict
from typing import Any, Callable, Dict, List, Optional

import attr
import logbook
import numpy
import sympy
from atomicwrites import atomic_write

from . import SupergaudinError, __version__
from .config import (
    RUN_OPTIONS,
    ConfigError,
    RunConfig,
    level_to_logbook,
    load_config,
)
from .gaudin import (
    CheckResult,
    EmptyWeightSpace,
    GaudinSystem,
    Status,
    check_ber_cdet_factorization,
    check_binomial_relation,
    check_cdet_consistency,
    check_commutativity,
    check_decomposition,
    check_expansion_shape,
    check_gl_invariance,
    check_manin,
    check_module_relations,
    check_parity_convention,
    check_permutation_invariance,
    check_quadratic_membership,
    check_schur_factorization,
    check_shapovalov_symmetry,
    check_sigma_correspondence,
    check_simple_spectrum,
    check_structure,
    check_super_lift,
    check_truncation_i,
    check_truncation_ii,
    check_u_order_stability,
    vacuous_for,
)
from .globals import CHECK_NAMES, LOGGER, SCRIPT_NAME
from .spectral import check_bethe, check_fuchsian, check_sum_rule
from .superdata import BadRange, NotHook


class ParseError(SupergaudinError):
    pass


class UnknownDemo(SupergaudinError):
    pass


CHECKS = OrderedDict(
    [
        ("commutativity", lambda system, config: check_commutativity(system)),
        ("binomial-relation", lambda system, config: check_binomial_relation(system)),
        (
            "permutation-invariance",
            lambda system, config: check_permutation_invariance(system),
        ),
        ("cdet-consistency", lambda system, config: check_cdet_consistency(system)),
        (
            "ber-cdet-factorization",
            lambda system, config: check_ber_cdet_factorization(system),
        ),
        (
            "schur-factorization",
            lambda system, config: check_schur_factorization(system),
        ),
        ("expansion-shape", lambda system, config: check_expansion_shape(system)),
        ("gl-invariance", lambda system, config: check_gl_invariance(system)),
        ("manin", lambda system, config: check_manin(system)),
        ("relations", lambda system, config: check_module_relations(system)),
        ("parity-convention", lambda system, config: check_parity_convention(system)),
        ("decomposition", lambda system, config: check_decomposition(system)),
        (
            "truncation-i",
            lambda system, config: check_truncation_i(
                system, config.truncation_p, config.truncation_lambda
            ),
        ),
        (
            "truncation-ii",
            lambda system, config: check_truncation_ii(system, config.truncation_k),
        ),
        (
            "sigma-singular-correspondence",
            lambda system, config: check_sigma_correspondence(
                system, config.truncation_p, config.truncation_lambda
            ),
        ),
        ("structure", lambda system, config: check_structure(system, config.trials)),
        (
            "simple-spectrum",
            lambda system, config: check_simple_spectrum(system, config.trials),
        ),
        ("u-order-stability", lambda system, config: check_u_order_stability(system)),
        ("super-lift", lambda system, config: check_super_lift(system)),
        ("bethe", lambda system, config: check_bethe(system, config.max_bethe_roots)),
        ("fuchsian", lambda system, config: check_fuchsian(system)),
        (
            "shapovalov-symmetry",
            lambda system, config: check_shapovalov_symmetry(system),
        ),
        ("sum-rule", lambda system, config: check_sum_rule(system)),
        (
            "quadratic-membership",
            lambda system, config: check_quadratic_membership(system),
        ),
    ]
)  # type: Dict[str, Callable[[GaudinSystem, RunConfig], CheckResult]]

DEMOS = OrderedDict(
    [
        (
            "gl2-bethe",
            {
                "m": 2,
                "n": 0,
                "sites": [[1], [1]],
                "z": ["0", "2"],
                "checks": ["commutativity", "bethe", "fuchsian", "sum-rule",
                           "shapovalov-symmetry"],
            },
        ),
        (
            "gl11-lift",
            {
                "m": 1,
                "n": 1,
                "sites": [[1], [1]],
                "z": ["0", "2"],
                "checks": ["commutativity", "structure", "simple-spectrum",
                           "super-lift"],
            },
        ),
        (
            "gl21-trunc",
            {
                "m": 2,
                "n": 1,
                "sites": [[1], [1]],
                "z": ["0", "1"],
                "u_order": 4,
                "checks": ["relations", "decomposition", "truncation-i",
                           "truncation-ii", "sigma-singular-correspondence"],
            },
        ),
    ]
)


@attr.s
class RunReport(object):
    config = attr.ib(type=OrderedDict)
    results = attr.ib(type=list, factory=list)
    timings = attr.ib(type=bool, default=False)

    @property
    def summary(self):
        # type: () -> Dict[str, int]
        counts = OrderedDict((status.value, 0) for status in Status)
        for result in self.results:
            counts[result.status.value] += 1
        return counts

    @property
    def failed(self):
        # type: () -> bool
        return any(result.failed for result in self.results)

    def to_json(self):
        # type: () -> Dict[str, Any]
        return OrderedDict(
            [
                ("config", self.config),
                ("results", [r.to_json(self.timings) for r in self.results]),
                ("summary", self.summary),
                (
                    "versions",
                    OrderedDict(
                        [
                            (SCRIPT_NAME, __version__),
                            ("sympy", sympy.__version__),
                            ("numpy", numpy.__version__),
                        ]
                    ),
                ),
            ]
        )

    def dumps(self):
        # type: () -> str
        return json.dumps(self.to_json(), indent=2) + "\n"


def build_system(config):
    # type: (RunConfig) -> GaudinSystem
    try:
        return GaudinSystem(
            config.m,
            config.n,
            config.sites,
            config.z,
            u_order=config.u_order,
            window=config.window,
            seed=config.seed,
            max_u_order=config.max_u_order,
            float_tol=config.float_tol,
        )
    except (BadRange, NotHook) as error:
        raise ConfigError("config", error)


def run_check(name, system, config):
    # type: (str, GaudinSystem, RunConfig) -> CheckResult
    LOGGER.info("running {}".format(name))
    start = time.perf_counter()
    try:
        result = CHECKS[name](system, config)
    except EmptyWeightSpace as error:
        result = vacuous_for(system, name, error)
    except Exception as error:
        LOGGER.error("{} raised {}: {}".format(name, type(error).__name__, error))
        result = CheckResult(
            name,
            system.describe(),
            Status.FAIL,
            "{}: {}".format(type(error).__name__, error),
            system.window,
            None,
            system.seed,
        )
    if config.timings:
        result.millis = int((time.perf_counter() - start) * 1000)
    LOGGER.info("{} finished: {}".format(name, result.status.value))
    return result


def run(config):
    # type: (RunConfig) -> RunReport
    """Run the requested checks in suite order."""
    system = build_system(config)
    results = [
        run_check(name, system, config)
        for name in CHECK_NAMES
        if name in config.checks
    ]
    return RunReport(config.echo(), results, config.timings)


def demo_config(name):
    # type: (str) -> RunConfig
    if name not in DEMOS:
        raise UnknownDemo("unknown demo {}, known: {}".format(
            name, ", ".join(DEMOS)))
    return load_config(raw=dict(DEMOS[name]))


def demo(name):
    # type: (str) -> RunReport
    return run(demo_config(name))


class RunArgParse(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _option_help():
    lines = ["config keys:"]
    for option in RUN_OPTIONS:
        lines.append("  {:<18} {}".format(option.name, option.description))
    return "\n".join(lines)


def build_parser():
    # type: () -> RunArgParse
    parser = RunArgParse(
        prog=SCRIPT_NAME,
        description="Exact checks of the gl(m|n) Gaudin model",
        epilog=_option_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", metavar="FILE", help="JSON run configuration")
    parser.add_argument("--check", action="append", metavar="NAME",
                        help="check to run, repeatable")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--z", metavar="P/Q,...", help='points, or "random"')
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--sites", metavar="1,1;2",
                        help="site partitions separated by ;")
    parser.add_argument("--window", type=int)
    parser.add_argument("--u-order", dest="u_order")
    parser.add_argument("--out", metavar="FILE", help="report file")
    parser.add_argument("--demo", metavar="NAME", help=", ".join(DEMOS))
    parser.add_argument("--timings", action="store_true", default=None)
    parser.add_argument("-v", "--verbose", dest="verbosity", action="count")
    parser.add_argument("--list-checks", action="store_true")
    return parser


def _parse_sites(value):
    try:
        return [
            [int(part) for part in site.split(",") if part.strip()]
            for site in value.split(";")
        ]
    except ValueError:
        raise ConfigError("flags: sites", "expected integers like 2,1;1")


def flags_from(args):
    # type: (argparse.Namespace) -> Dict[str, Any]
    flags = OrderedDict(
        [
            ("m", args.m),
            ("n", args.n),
            ("sites", None if args.sites is None else _parse_sites(args.sites)),
            ("z", args.z),
            ("u_order", args.u_order),
            ("window", args.window),
            ("seed", args.seed),
            ("checks", args.check),
            ("out", args.out),
            ("verbosity", args.verbosity),
            ("timings", args.timings),
        ]
    )
    return flags


class StderrHandler(logbook.StreamHandler):
    def __init__(self, level=logbook.WARNING, format_string=None, filter=None,
                 bubble=False):
        logbook.StreamHandler.__init__(
            self, sys.stderr, level, format_string, None, filter, bubble
        )


def write_report(report, path=None):
    # type: (RunReport, Optional[str]) -> None
    text = report.dumps()
    if path is None:
        sys.stdout.write(text)
        return
    with atomic_write(path, overwrite=True) as report_file:
        report_file.write(text)


def main(argv=None):
    # type: (Optional[List[str]]) -> int
    handler = StderrHandler()
    handler.format_string = "{record.channel}: {record.message}"

    with handler.applicationbound():
        try:
            args = build_parser().parse_args(argv)
        except ParseError as error:
            LOGGER.error("{} (see --help)".format(error))
            return 2

        if args.list_checks:
            sys.stdout.write("\n".join(CHECK_NAMES) + "\n")
            return 0

        try:
            if args.demo:
                config = demo_config(args.demo)
                if args.out:
                    config.out = args.out
            else:
                config = load_config(args.config, flags_from(args))
            handler.level = level_to_logbook(config.verbosity)
            report = run(config)
        except (ConfigError, UnknownDemo) as error:
            LOGGER.error("{}".format(error))
            return 2

        write_report(report, config.out)
        summary = report.summary
        LOGGER.info("{} passed, {} failed, {} vacuous".format(
            summary["pass"], summary["fail"], summary["vacuous"]))
        return 1 if report.failed else 0
