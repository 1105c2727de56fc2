"""Growth experiments in finite linear groups."""

import json

from ._core import Error, Field, commands, group_order, pargcd_verify, parse_config, plot_data
from . import _core

__all__ = ["Error", "Field", "commands", "group_order", "pargcd_verify", "parse_config", "plot_data", "run"]


def run(config_text):
    """Run an experiment config; returns (list of record dicts, exit code)."""
    records, code = _core.run(config_text)
    return [json.loads(r) for r in records], code
