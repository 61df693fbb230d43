"""GF(p) cohomology of restricted Lie superalgebras."""

import json

from . import _core
from ._core import ParseError, ValidationError, catalog_ids, cohomology_dim, schema_version, selftest

__all__ = [
    "ParseError",
    "ValidationError",
    "catalog_file",
    "catalog_ids",
    "catalog_sixterm",
    "cohomology_dim",
    "schema_version",
    "selftest",
    "sixterm",
    "validate",
]


def validate(text, p_override=None):
    return json.loads(_core.validate(text, p_override))


def sixterm(text, module="", p_override=None):
    return json.loads(_core.sixterm(text, module, p_override))


def catalog_file(id):
    return json.loads(_core.catalog_file(id))


def catalog_sixterm(id):
    return json.loads(_core.catalog_sixterm(id))
