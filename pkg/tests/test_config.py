import json

import mpmath
import pytest

from hhsum import config


def test_defaults():
    cfg = config.EngineConfig()
    assert cfg.precision_digits >= 30
    assert cfg.default_tolerance == 1e-8


def test_set_config_changes_mp_precision():
    config.configure(precision_digits=50)
    assert mpmath.mp.dps == 50 + config.GUARD_DIGITS


def test_invalid_values():
    with pytest.raises(ValueError):
        config.EngineConfig(precision_digits=5)
    with pytest.raises(ValueError):
        config.EngineConfig(default_tolerance=0)


def test_file_formats(tmp_path):
    kv = tmp_path / "a.conf"
    kv.write_text("# comment\nprecision_digits = 40\ndefault_tolerance=1e-6\n")
    assert config.load_config_file(kv) == {"precision_digits": 40, "default_tolerance": 1e-6}
    js = tmp_path / "a.json"
    js.write_text(json.dumps({"acceleration_depth": 80}))
    assert config.load_config_file(js) == {"acceleration_depth": 80}


def test_unknown_key(tmp_path):
    f = tmp_path / "bad.conf"
    f.write_text("nope = 1\n")
    with pytest.raises(ValueError):
        config.load_config_file(f)


def test_source_priority(tmp_path):
    f = tmp_path / "a.conf"
    f.write_text("precision_digits = 40\n")
    assert config.config_from_sources(str(f), env={}).precision_digits == 40
    env = {config.ENV_PRECISION: "35"}
    assert config.config_from_sources(str(f), env=env).precision_digits == 35
    assert config.config_from_sources(str(f), env=env, precision_digits=33).precision_digits == 33
