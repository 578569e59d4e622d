# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import json

import pytest

from supergaudin.cli import (
    CHECKS,
    DEMOS,
    UnknownDemo,
    build_parser,
    build_system,
    demo,
    demo_config,
    flags_from,
    main,
    run,
    run_check,
)
from supergaudin.config import load_config
from supergaudin.gaudin import CheckResult, Status
from supergaudin.globals import CHECK_NAMES

GL2_FLAGS = ["--m", "2", "--sites", "1;1", "--z", "0,2"]


def read_report(path):
    with open(str(path)) as report_file:
        return json.load(report_file)


class TestSuite(object):
    def test_check_order(self):
        assert tuple(CHECKS) == CHECK_NAMES

    def test_demo_checks_are_known(self):
        for raw in DEMOS.values():
            assert set(raw["checks"]) <= set(CHECK_NAMES)

    def test_unknown_demo(self):
        with pytest.raises(UnknownDemo):
            demo_config("gl3-everything")

    def test_suite_order_wins(self):
        config = load_config(raw={
            "m": 2, "sites": [[1], [1]], "z": ["0", "2"],
            "checks": ["sum-rule", "manin"],
        })
        report = run(config)
        assert [result.check for result in report.results] == ["manin", "sum-rule"]
        assert report.summary["pass"] == 2

    def test_report_is_stable(self):
        raw = {"m": 2, "sites": [[1], [1]], "z": "random", "seed": 7,
               "checks": ["manin"]}
        first = run(load_config(raw=dict(raw))).dumps()
        second = run(load_config(raw=dict(raw))).dumps()
        assert first == second

    def test_raising_check_fails(self, monkeypatch):
        def broken(system, config):
            raise RuntimeError("boom")

        monkeypatch.setitem(CHECKS, "manin", broken)
        config = load_config(raw={"m": 2, "sites": [[1], [1]], "z": ["0", "2"]})
        result = run_check("manin", build_system(config), config)
        assert result.status is Status.FAIL
        assert result.witness == "RuntimeError: boom"

    def test_gl2_demo(self):
        report = demo("gl2-bethe")
        assert not report.failed
        assert len(report.results) == 5


class TestFlags(object):
    def test_sites(self):
        args = build_parser().parse_args(["--sites", "2,1;1", "--check", "manin"])
        flags = flags_from(args)
        assert flags["sites"] == [[2, 1], [1]]
        assert flags["checks"] == ["manin"]
        assert flags["seed"] is None


class TestMain(object):
    def test_empty_run(self, tmp_path):
        path = tmp_path / "report.json"
        assert main(GL2_FLAGS + ["--out", str(path)]) == 0

        report = read_report(path)
        assert report["results"] == []
        assert report["config"]["z"] == ["0", "2"]
        assert report["summary"] == {"pass": 0, "fail": 0, "vacuous": 0}

    def test_passing_checks(self, tmp_path):
        path = tmp_path / "report.json"
        argv = GL2_FLAGS + ["--check", "sum-rule", "--check", "manin",
                            "--out", str(path)]
        assert main(argv) == 0
        checks = [result["check"] for result in read_report(path)["results"]]
        assert checks == ["manin", "sum-rule"]

    def test_vacuous_is_not_failure(self, tmp_path):
        path = tmp_path / "report.json"
        argv = ["--m", "1", "--n", "1", "--sites", "1;1", "--z", "0,2",
                "--check", "bethe", "--out", str(path)]
        assert main(argv) == 0
        assert read_report(path)["results"][0]["status"] == "vacuous"

    def test_failure_exit(self, tmp_path, monkeypatch):
        monkeypatch.setitem(
            CHECKS, "manin",
            lambda system, config: CheckResult("manin", status=Status.FAIL),
        )
        path = tmp_path / "report.json"
        assert main(GL2_FLAGS + ["--check", "manin", "--out", str(path)]) == 1

    def test_repeated_point(self):
        assert main(["--m", "2", "--sites", "1;1", "--z", "1,1"]) == 2

    def test_bad_flag(self):
        assert main(["--frobnicate"]) == 2

    def test_unknown_demo(self):
        assert main(["--demo", "nope"]) == 2

    def test_list_checks(self, capsys):
        assert main(["--list-checks"]) == 0
        assert tuple(capsys.readouterr().out.split()) == CHECK_NAMES

    def test_stdout_report(self, capsys):
        assert main(GL2_FLAGS) == 0
        assert json.loads(capsys.readouterr().out)["results"] == []

    def test_flags_override_config_file(self, tmp_path):
        config_path = tmp_path / "run.json"
        config_path.write_text(json.dumps({
            "m": 2, "sites": [[1], [1]], "z": ["0", "2"], "seed": 1,
            "checks": ["sum-rule"],
        }))
        path = tmp_path / "report.json"
        argv = ["--config", str(config_path), "--seed", "7", "--z", "0,3",
                "--check", "manin", "--out", str(path)]
        assert main(argv) == 0

        report = read_report(path)
        assert report["config"]["seed"] == 7
        assert report["config"]["z"] == ["0", "3"]
        assert [result["check"] for result in report["results"]] == ["manin"]
