"""Exact edge vectors, flows and moves on directed plabic networks.

Networks travel as JSON. Every function accepts either a JSON string or an
already parsed dict and returns parsed JSON (dicts and lists), except
``export`` which returns the DOT or SVG text.
"""

import json

from . import _core
from ._core import (
    GenericityError,
    InputError,
    InternalError,
    ParseError,
    PlabicError,
    ResourceError,
)

__all__ = [
    "PlabicError", "InputError", "GenericityError", "ResourceError", "ParseError", "InternalError",
    "validate", "vectors", "measure", "faces", "flows", "edge_flows", "transform", "check",
    "export", "fixture", "random_network",
]


def _text(obj):
    if obj is None or isinstance(obj, str):
        return obj
    return json.dumps(obj)


def validate(network):
    return json.loads(_core.validate(_text(network)))


def vectors(network, method="solve", depth=None, bc=None, max_flows=None):
    """Edge vectors by "solve", "talaska" or "truncate" (truncate needs a depth)."""
    return json.loads(_core.vectors(_text(network), method, depth, _text(bc), max_flows))


def measure(network):
    return json.loads(_core.measure(_text(network)))


def faces(network):
    return json.loads(_core.faces(_text(network)))


def flows(network, max_flows=None):
    return json.loads(_core.flows(_text(network), max_flows))


def edge_flows(network, edge, sink, max_flows=None):
    return json.loads(_core.edge_flows(_text(network), edge, sink, max_flows))


def transform(network, spec):
    """Apply {"op": name, ...} and return the reports and the resulting network."""
    return json.loads(_core.transform(_text(network), _text(spec)))


def check(suite="all", trials=100, seed=1, network=None):
    return json.loads(_core.check(suite, trials, seed, _text(network)))


def export(network, format="svg", with_vectors=False):
    return _core.export(_text(network), format, with_vectors)


def fixture(name, params=None):
    return json.loads(_core.fixture(name, _text(params)))


def random_network(seed, options=None):
    return json.loads(_core.random(seed, _text(options)))
