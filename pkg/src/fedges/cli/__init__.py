"""Command-line module for fedges.

This module handles:
- Experiment specifications (validated with pydantic)
- The sample / run / eval / summary / export commands
- JSON reports and the summary table
"""

from fedges.cli.main import build_parser, cmd_eval, cmd_run, cmd_sample, main
from fedges.cli.spec import ExperimentSpec

__all__ = [
    "ExperimentSpec",
    "build_parser",
    "cmd_sample",
    "cmd_run",
    "cmd_eval",
    "main",
]
