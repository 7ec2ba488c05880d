"""
Command line front end.

Every command writes one JSON document (or DOT text for ``tree --format dot``) to
stdout and diagnostics to stderr. Exit codes: 0 success, 1 a check or predicate
came out negative, 2 bad usage or input.
"""

from .run_cli import COMMAND_REGISTRY, build_parser, main

__all__ = ["COMMAND_REGISTRY", "build_parser", "main"]
