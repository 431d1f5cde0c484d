"""Lines on twisted Hilbert modular surfaces: exact search and certificates."""

import json

from . import _core
from ._core import (
    CERTIFICATE_SCHEMA,
    ConfigError,
    DomainError,
    HmslError,
    PrecisionError,
    SearchExhausted,
)

__all__ = [
    "CERTIFICATE_SCHEMA",
    "ConfigError",
    "DomainError",
    "HmslError",
    "PrecisionError",
    "SearchExhausted",
    "certify",
    "find_lines",
    "galois_group",
    "real_root_count",
    "solvability",
    "verify_paper",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _coeffs(coeffs):
    return [str(c) for c in coeffs]


def verify_paper():
    return json.loads(_core.verify_paper())


def find_lines(config, max_results=1, threads=0):
    """Search report for a config (dict or JSON text)."""
    return json.loads(_core.find_lines(_text(config), max_results, threads))


def certify(line, config):
    """Certificate of a line ({"p": [...], "q": [...]}) under a config."""
    return json.loads(_core.certify(_text(line), _text(config)))


def solvability(coeffs):
    return json.loads(_core.solvability(_coeffs(coeffs)))


def galois_group(coeffs):
    return _core.galois_group(_coeffs(coeffs))


def real_root_count(coeffs):
    return _core.real_root_count(_coeffs(coeffs))
