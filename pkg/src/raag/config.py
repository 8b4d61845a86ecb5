import logging
import os
import tomllib


top_dir = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(top_dir, "config.toml"), "rb") as f:
    _config = tomllib.load(f)


log_directory = _config["log_directory"]
restart_budget = _config["restart_budget"]
default_primes = tuple(_config["default_primes"])
dense_rank_limit = _config["dense_rank_limit"]
kunneth_cell_limit = _config["kunneth_cell_limit"]


def _read_n_workers():
    """
    RAAG_THREADS caps the worker count. Anything that isn't a positive
    integer falls back to the value in config.toml.
    """
    raw = os.environ.get("RAAG_THREADS")
    if raw is None:
        return _config["n_workers"]
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        logging.getLogger(__name__).warning(
            f"Ignoring RAAG_THREADS={raw!r}, it must be a positive integer."
        )
        return _config["n_workers"]
    return value


n_workers = _read_n_workers()
