"""Tests for configuration loading, environment overrides and validation."""

import json

import pytest

from cli.config_parser import load_and_merge_config, merge_cli_args, validate_config
from utils.config_parser import AppConfig, load_config
from utils.exceptions import ConfigError, UnknownGeneratorError


@pytest.fixture
def config_file(tmp_path):
    def write(data):
        path = tmp_path / "config.json"
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(path)

    return write


class TestLoadConfig:
    def test_defaults_without_file(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        config = load_config(environ={})
        assert config == AppConfig()
        assert config.compute.enum_cap == 10**7
        assert config.compute.digits == 3
        assert config.compute.default_prob == "1/6"
        assert config.simulation.generator_id == "pcg64"

    def test_file_values(self, config_file):
        path = config_file({"compute": {"digits": 4}, "simulation": {"trials": 500}})
        config = load_config(path, environ={})
        assert config.compute.digits == 4
        assert config.compute.unit == 6
        assert config.simulation.trials == 500

    def test_environment_overrides_file(self, config_file):
        path = config_file({"compute": {"enum_cap": 5000}})
        config = load_config(
            path, environ={"PEPYS_ENUM_CAP": "200", "PEPYS_WORKERS": "2", "PEPYS_SEED": "9"}
        )
        assert config.compute.enum_cap == 200
        assert config.compute.workers == 2
        assert config.simulation.seed == 9

    def test_empty_env_value_is_ignored(self):
        config = load_config(environ={"PEPYS_ENUM_CAP": ""})
        assert config.compute.enum_cap == 10**7

    def test_non_integer_env_value(self):
        with pytest.raises(ConfigError):
            load_config(environ={"PEPYS_SEED": "abc"})

    def test_missing_explicit_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(str(tmp_path / "missing.json"), environ={})

    def test_invalid_json(self, config_file):
        with pytest.raises(ConfigError):
            load_config(config_file("{not json"), environ={})

    def test_unknown_key(self, config_file):
        with pytest.raises(ConfigError):
            load_config(config_file({"compute": {"colour": "red"}}), environ={})

    def test_to_dict(self):
        data = AppConfig().to_dict()
        assert set(data) == {"compute", "simulation"}
        assert data["simulation"]["seed"] == 20061693


class TestMergeAndValidate:
    def test_cli_args_take_precedence(self, config_file, clean_env):
        clean_env.setenv("PEPYS_ENUM_CAP", "300")
        path = config_file({"simulation": {"trials": 10}})
        config = load_and_merge_config(path, cli_args={"enum_cap": 40, "trials": 20})
        assert config.compute.enum_cap == 40
        assert config.simulation.trials == 20

    def test_none_arguments_do_not_override(self):
        base = AppConfig()
        merged = merge_cli_args(base, {"workers": None, "seed": 5})
        assert merged.compute.workers is None
        assert merged.simulation.seed == 5
        assert base.simulation.seed == 20061693

    @pytest.mark.parametrize(
        "section,key,value",
        [
            ("compute", "enum_cap", 0),
            ("compute", "digits", 0),
            ("compute", "default_prob", "5/4"),
            ("compute", "tol", "0"),
            ("compute", "tol", "tiny"),
            ("compute", "unit", 0),
            ("compute", "workers", 0),
            ("simulation", "trials", 0),
            ("simulation", "seed", 2**64),
        ],
    )
    def test_out_of_range_values(self, section, key, value):
        config = AppConfig()
        setattr(getattr(config, section), key, value)
        with pytest.raises(ConfigError):
            validate_config(config)

    def test_unknown_generator(self):
        config = AppConfig()
        config.simulation.generator_id = "xorshift"
        with pytest.raises(UnknownGeneratorError):
            validate_config(config)

    def test_defaults_validate(self):
        validate_config(AppConfig())
