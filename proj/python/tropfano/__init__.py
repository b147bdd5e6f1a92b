"""Exact tropical Fano scheme computations.

Thin wrapper over the C++ extension: inputs and outputs are JSON-compatible
dicts; rationals travel as exact strings like "3/2", valuations as
"p/q" or "inf".
"""

import json

try:
    from . import _tropfano as _core
except ImportError:  # build-tree layout: extension next to the package
    import _tropfano as _core


def _j(doc):
    return json.dumps(doc) if isinstance(doc, (dict, list)) else doc


def plucker_minors(matrix, k):
    return json.loads(_core.plucker_minors(_j(matrix), k))


def trop_linear(plucker, orbit=()):
    return json.loads(_core.trop_linear(_j(plucker), list(orbit)))


def bergman(matrix):
    return json.loads(_core.bergman(_j(matrix)))


def prevariety(system):
    return json.loads(_core.prevariety(_j(system)))


def fano_linear(plucker, d, orbit=()):
    return json.loads(_core.fano_linear(_j(plucker), d, list(orbit)))


def fano_general(complex_, d, n, orbit=()):
    return json.loads(_core.fano_general(_j(complex_), d, n, list(orbit)))


def contains_line(plucker, complex_, orbit=()):
    return json.loads(_core.contains_line(_j(plucker), _j(complex_), list(orbit)))


def plane_fano_trop(matrix):
    return json.loads(_core.plane_fano_trop(_j(matrix)))


def genericity(matrix):
    return json.loads(_core.genericity(_j(matrix)))


def pairing_line(matrix, pairs):
    return json.loads(_core.pairing_line(_j(matrix), [list(p) for p in pairs]))


def compare(first, second):
    return json.loads(_core.compare(_j(first), _j(second)))


def toric_trop(lattice):
    return json.loads(_core.toric_trop(_j(lattice)))


def toric_binomials(lattice):
    return json.loads(_core.toric_binomials(_j(lattice)))


def cayley_verify(lattice, cayley):
    return _core.cayley_verify(_j(lattice), _j(cayley))


def cayley_extract(lattice, plucker):
    return json.loads(_core.cayley_extract(_j(lattice), _j(plucker)))


def toric_realize(lattice, plucker, translation=()):
    return json.loads(_core.toric_realize(_j(lattice), _j(plucker), [str(t) for t in translation]))


__all__ = [
    "plucker_minors", "trop_linear", "bergman", "prevariety", "fano_linear",
    "fano_general", "contains_line", "plane_fano_trop", "genericity",
    "pairing_line", "compare", "toric_trop", "toric_binomials",
    "cayley_verify", "cayley_extract", "toric_realize",
]
