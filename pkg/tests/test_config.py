import json
import logging

import pytest

from neil_algebra.config import Config
from neil_algebra.errors import ReportFormatError


def test_defaults_without_file():
    config = Config()
    assert config.get("grid_size") == 1024
    assert config.get("alpha_grid") == [33, 64]
    assert config.get("missing", "fallback") == "fallback"


def test_load_merges_known_keys(files):
    config = Config(str(files / "config.json"))
    assert config.get("grid_size") == 512
    assert config.get("scan_degree") == 16
    assert config.get("factor_degree") == 128


def test_unknown_keys_are_ignored(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"workers": 2, "hash_algorithm": "md5"}))
    with caplog.at_level(logging.WARNING, logger="neil_algebra.config"):
        config = Config(str(path))
    assert config.get("workers") == 2
    assert config.get("hash_algorithm") is None
    assert "hash_algorithm" in caplog.text


def test_broken_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{")
    with pytest.raises(ReportFormatError):
        Config(str(path))


def test_missing_file_keeps_defaults(tmp_path):
    assert Config(str(tmp_path / "absent.json")).config == Config.DEFAULT_CONFIG


def test_save_and_reload(tmp_path):
    path = tmp_path / "saved.json"
    config = Config()
    config.set("minimax_degree", 24)
    config.save(str(path))
    assert Config(str(path)).get("minimax_degree") == 24
    with pytest.raises(ReportFormatError):
        Config().save()


def test_log_band():
    config = Config()
    assert config.log_band(1024) == 256
    assert config.log_band(256) == 64
    config.set("log_band", 32)
    assert config.log_band(1024) == 32


def test_check_cap():
    config = Config()
    assert config.check_cap("max_scan_degree", 256) == 256
    with pytest.raises(ReportFormatError) as info:
        config.check_cap("max_scan_degree", 257)
    assert info.value.exit_code == 2


def test_classify_options(files):
    options = Config(str(files / "config.json")).classify_options()
    assert (options.theta_steps, options.phi_steps) == (8, 8)
    assert options.degree == 16
    assert options.minimax_degree == 8
    assert options.grid_size == 512

    options = Config().classify_options(degree=32, grid_size=None, show_progress=True)
    assert options.degree == 32
    assert options.grid_size == 1024
    assert options.show_progress
    with pytest.raises(ReportFormatError):
        Config().classify_options(degree=512)
