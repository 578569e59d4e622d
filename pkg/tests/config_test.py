# -*- coding: utf-8 -*-

from __future__ import unicode_literals

import json

import attr
import logbook
import pytest
from hypothesis import given
from hypothesis.strategies import integers, sampled_from
from sympy import QQ

from supergaudin.config import (
    RUN_OPTIONS,
    ConfigError,
    RunConfig,
    level_to_logbook,
    load_config,
    read_config_file,
)
from supergaudin.globals import CHECK_NAMES

GL2 = {"m": 2, "n": 0, "sites": [[1], [1]], "z": ["0", "2"]}


def with_keys(**keys):
    raw = dict(GL2)
    raw.update(keys)
    return raw


class TestOptions(object):
    def test_every_option_is_a_field(self):
        fields = {field.name for field in attr.fields(RunConfig)}
        assert {option.name for option in RUN_OPTIONS} <= fields

    def test_levels(self):
        assert level_to_logbook(0) == logbook.ERROR
        assert level_to_logbook(3) == logbook.DEBUG
        assert level_to_logbook(7) == logbook.ERROR


class TestLoadConfig(object):
    def test_explicit_points(self):
        config = load_config(raw=dict(GL2))
        assert config.z == [QQ(0), QQ(2)]
        assert config.echo()["z"] == ["0", "2"]
        assert config.checks == []

    def test_repeated_point(self):
        with pytest.raises(ConfigError) as error:
            load_config(raw=with_keys(z=["1/2", "2/4"]))
        assert error.value.location == "config: z[1]"

    def test_point_count(self):
        with pytest.raises(ConfigError):
            load_config(raw=with_keys(z=["0"]))

    def test_unknown_check(self):
        with pytest.raises(ConfigError) as error:
            load_config(raw=with_keys(checks=["manin", "nope"]))
        assert error.value.location == "config: checks[1]"

    def test_checks_run_once(self):
        config = load_config(raw=with_keys(checks=["manin", "manin"]))
        assert config.checks == ["manin"]

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            load_config(raw=with_keys(colour="red"))

    def test_range(self):
        with pytest.raises(ConfigError):
            load_config(raw=with_keys(m=0))
        with pytest.raises(ConfigError):
            load_config(raw=with_keys(window=True))

    def test_not_hook(self):
        with pytest.raises(ConfigError) as error:
            load_config(raw={"m": 1, "sites": [[1, 1]], "z": ["0"]})
        assert error.value.location == "config: sites[0]"

    def test_truncation_inside(self):
        with pytest.raises(ConfigError):
            load_config(raw=with_keys(truncation_k=1))

    def test_flags_win_over_file(self):
        config = load_config(
            flags={"seed": 7, "z": ["5", "9"]},
            raw=with_keys(seed=1, window=4),
        )
        assert config.seed == 7
        assert config.z == [QQ(5), QQ(9)]
        assert config.window == 4

    def test_unset_flags_keep_the_file(self):
        config = load_config(flags={"seed": None, "checks": None},
                             raw=with_keys(seed=2, checks=["manin"]))
        assert config.seed == 2
        assert config.checks == ["manin"]

    def test_flag_points(self):
        config = load_config(flags={"z": "0, 1/2"}, raw={"m": 2})
        assert config.z == [QQ(0), QQ(1, 2)]

    def test_auto_u_order(self):
        assert load_config(raw=with_keys(u_order="auto")).u_order == "auto"
        assert load_config(raw=with_keys(u_order=3)).u_order == 3


@given(integers(0, 1000), sampled_from([1, 2, 3]))
def test_random_points_are_seeded(seed, ell):
    raw = {"m": 1, "sites": [[1]] * ell, "z": "random", "seed": seed}
    first = load_config(raw=dict(raw))
    second = load_config(raw=dict(raw))

    assert first.z == second.z
    assert len(set(first.z)) == ell


@given(sampled_from(CHECK_NAMES))
def test_every_check_name_is_accepted(name):
    assert load_config(raw=with_keys(checks=[name])).checks == [name]


class TestConfigFile(object):
    def test_read(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(with_keys(checks=["sum-rule"])))

        config = load_config(str(path))
        assert config.checks == ["sum-rule"]

    def test_location_names_the_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(with_keys(z=["1", "1"])))

        with pytest.raises(ConfigError) as error:
            load_config(str(path))
        assert error.value.location == "run.json: z[1]"

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        with pytest.raises(ConfigError):
            read_config_file(str(path))

    def test_missing(self, tmp_path):
        with pytest.raises(ConfigError):
            read_config_file(str(tmp_path / "missing.json"))
