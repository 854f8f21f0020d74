"""UPB and GUPB verification, bounds and orthogonal representation search.

Sets, graphs, solver configs and reports use the same JSON shapes as the
upbforge command-line tool; here they are plain dicts and lists.
"""

import json
import os

from . import _upbforge
from ._upbforge import FormatError, worker_count

__all__ = [
    "FormatError",
    "compare_bounds",
    "construct_upb",
    "example_upb",
    "k13_decompositions",
    "nn_bound",
    "search_gupb",
    "solve",
    "table1",
    "verify_gupb",
    "verify_upb",
    "worker_count",
]


def _text(obj):
    """Accepts a dict/list, a JSON string or a path to a JSON file."""
    if isinstance(obj, (dict, list)):
        return json.dumps(obj)
    if isinstance(obj, os.PathLike) or (isinstance(obj, str) and os.path.isfile(obj)):
        with open(obj, encoding="utf-8") as f:
            return f.read()
    return obj


def verify_upb(product_set, allow_numerical=False):
    return json.loads(_upbforge.verify_upb(_text(product_set), allow_numerical))


def verify_gupb(product_set, allow_numerical=False):
    return json.loads(_upbforge.verify_gupb(_text(product_set), allow_numerical))


def compare_bounds(dims):
    return json.loads(_upbforge.compare_bounds(list(dims)))


def table1():
    return json.loads(_upbforge.table1())


def nn_bound(n):
    return int(_upbforge.nn_bound(n))


def k13_decompositions():
    return json.loads(_upbforge.k13_decompositions())


def solve(graph, **config):
    return json.loads(_upbforge.solve(_text(graph), json.dumps(config)))


def example_upb(which):
    return json.loads(_upbforge.example_upb(which))


def search_gupb(source="cayley", include_timing=True, **config):
    return json.loads(_upbforge.search_gupb(source, json.dumps(config), include_timing))


def construct_upb(recipe):
    return json.loads(_upbforge.construct_upb(_text(recipe)))
