"""Logging setup for the command-line front end.

Library modules only ever call `logging.getLogger(__name__)`; handlers are
attached here, once, by the CLI. Records go to stderr so that reports on
stdout stay byte-for-byte deterministic.
"""
from __future__ import annotations

import logging
import sys

try:  # python-json-logger >= 3
    from pythonjsonlogger.json import JsonFormatter
except ImportError:  # pragma: no cover - 2.x layout
    from pythonjsonlogger.jsonlogger import JsonFormatter

from surface_bundles import config

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"


def configure_logging(level: str | int | None = None, fmt: str | None = None) -> logging.Logger:
    """Attach a single stderr handler to the package logger and return it."""
    level = level or config.LOG_LEVEL
    fmt = (fmt or config.LOG_FORMAT).lower()
    if fmt not in config.LOG_FORMATS:
        raise ValueError(f"log format '{fmt}' not in {config.LOG_FORMATS}")

    handler = logging.StreamHandler(sys.stderr)
    if fmt == "json":
        handler.setFormatter(JsonFormatter(JSON_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))

    root = logging.getLogger("surface_bundles")
    for old in list(root.handlers):
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    return root
