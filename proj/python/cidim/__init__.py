"""Exact homological dimensions over graded quotient rings.

Every function takes ring/object/deformation data as JSON strings (the same
formats the ``cidim`` command line tool reads) and returns a JSON report
string.  ``loads`` wrappers are provided for callers who prefer dicts.
"""

import json as _json

from ._cidim import (
    ParseError,
    betti,
    cidim_bound,
    depth,
    gdim,
    hierarchy,
    homology,
    pcidim,
    pd,
    poincare,
    resolve,
    ring_info,
    verify,
)

__all__ = [
    "ParseError",
    "betti",
    "cidim_bound",
    "depth",
    "gdim",
    "hierarchy",
    "homology",
    "pcidim",
    "pd",
    "poincare",
    "resolve",
    "ring_info",
    "verify",
    "report",
]


def report(fn, *args, **kwargs):
    """Call one of the module functions and parse its JSON reply."""
    return _json.loads(fn(*args, **kwargs))
