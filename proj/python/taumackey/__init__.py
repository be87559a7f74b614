"""Exact twisted Frobenius-Schur indicators, simple reducibility and Gelfand pair checks."""

import json

from . import _core
from ._core import EXIT_CROSS_CHECK, EXIT_OK, EXIT_USAGE, TaumackeyError, __version__

__all__ = [
    "EXIT_CROSS_CHECK",
    "EXIT_OK",
    "EXIT_USAGE",
    "TaumackeyError",
    "__version__",
    "commands",
    "group_order",
    "power_sums",
    "run",
    "run_batch",
    "zeta_values",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def commands():
    return list(_core.commands())


def run(command, **fields):
    """Run one job; returns (report dict, exit code)."""
    job = {"command": command}
    job.update({k: v for k, v in fields.items() if v is not None})
    report, code = _core.run_job(json.dumps(job))
    return json.loads(report), code


def run_batch(jobs, cache_dir=None, workers=1):
    """Run a list of job dicts; returns (report dict, exit code, hits, misses)."""
    report, code, hits, misses = _core.run_batch(_dump(jobs), cache_dir, workers)
    return json.loads(report), code, hits, misses


def group_order(group):
    return _core.group_order(_dump(group))


def zeta_values(group, tau="inverse"):
    return dict(_core.zeta_values(_dump(group), _dump(tau)))


def power_sums(group, tau, n):
    lhs, rhs = _core.power_sums(_dump(group), _dump(tau), n)
    return int(lhs), int(rhs)
