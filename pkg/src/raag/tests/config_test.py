import importlib
import os

from raag import config


def contains(contents, match):
    return any(match in line for line in contents)


def test_values():
    assert type(config.log_directory) is str
    assert config.restart_budget == 64
    assert config.default_primes == (2, 3, 5, 7)
    assert config.n_workers >= 1


def test_toml():
    with open(os.path.join(config.top_dir, "config.toml"), "rt") as f:
        config_toml = f.readlines()

    assert contains(config_toml, "restart_budget")
    assert contains(config_toml, str(config.dense_rank_limit))
    assert contains(config_toml, "default_primes")


def test_threads_override(monkeypatch):
    monkeypatch.setenv("RAAG_THREADS", "3")
    assert config._read_n_workers() == 3


def test_bad_threads_ignored(monkeypatch):
    monkeypatch.setenv("RAAG_THREADS", "lots")
    assert config._read_n_workers() == config._config["n_workers"]
    monkeypatch.setenv("RAAG_THREADS", "0")
    assert config._read_n_workers() == config._config["n_workers"]


def test_reload_keeps_defaults(monkeypatch):
    monkeypatch.delenv("RAAG_THREADS", raising=False)
    reloaded = importlib.reload(config)
    assert reloaded.n_workers == reloaded._config["n_workers"]
