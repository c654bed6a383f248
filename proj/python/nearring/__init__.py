"""Local nearrings on metacyclic p-groups G(p^m, p^n, p^d)."""

import json

from ._core import (
    Error,
    Group,
    MapFormatError,
    MapTriple,
    ParamError,
    ParseError,
    SizeError,
    __version__,
    _analyze,
    _aut,
    _verify,
    aut_order_formula,
    canonical_maps,
    enumerate_local,
    is_local,
    maps_from_exprs,
)


def verify(maps, samples=None, seed=None, threads=0):
    """Run all axiom and condition checks; returns the report as a dict."""
    return json.loads(_verify(maps, samples, seed, threads))


def analyze(maps):
    """Units, L, identity order and the locality checks, as a dict."""
    return json.loads(_analyze(maps))


def automorphisms(group, threads=0):
    """Brute-force automorphism count next to the closed form."""
    return json.loads(_aut(group, threads))


__all__ = [
    "Error",
    "Group",
    "MapFormatError",
    "MapTriple",
    "ParamError",
    "ParseError",
    "SizeError",
    "__version__",
    "analyze",
    "aut_order_formula",
    "automorphisms",
    "canonical_maps",
    "enumerate_local",
    "is_local",
    "maps_from_exprs",
    "verify",
]
