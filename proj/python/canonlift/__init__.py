"""Canonical lifts of curves on surfaces: diagrams, invariants, moves and bounded equivalence search.

Diagrams are passed as text in the `.cl` format; structured results come back as plain dicts.
"""

import json

from . import _core
from ._core import (
    CanonliftError,
    DimensionMismatch,
    InapplicableMove,
    MalformedAssociatedSubgroup,
    MissingReference,
    ModeMismatch,
    NonIntegralTurning,
    ParseError,
    UnsupportedSurface,
)

__all__ = [
    "CanonliftError", "DimensionMismatch", "InapplicableMove", "MalformedAssociatedSubgroup",
    "MissingReference", "ModeMismatch", "NonIntegralTurning", "ParseError", "UnsupportedSurface",
    "validate", "invariants", "canonicalize", "canonical_form", "equivalent", "replay", "isomorphic",
    "h1", "smith_normal_form", "dehn_reduce", "is_trivial", "britton_reduce", "run_cli",
]


def validate(text):
    """List of violations (empty when the diagram is valid)."""
    return json.loads(_core.validate(text))


def invariants(text):
    return json.loads(_core.invariants(text))


def canonicalize(text):
    """Diagram text realizing a twisted shadow, plus the per-component turning change."""
    return json.loads(_core.canonicalize(text))


def canonical_form(text):
    return _core.canonical_form(text)


def equivalent(first, second, max_moves=6, max_states=100_000, threads=1, transvections=None):
    """Bounded search; the verdict dict carries a certificate, a distinguishing invariant, or neither."""
    tv = "" if transvections is None else (transvections if isinstance(transvections, str) else json.dumps(transvections))
    return json.loads(_core.equivalent(first, second, max_moves, max_states, threads, tv))


def replay(text, certificate):
    cert = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return _core.replay(text, cert)


def isomorphic(first, second):
    return _core.isomorphic(first, second)


def h1(genus, boundary=0, bundle="UT", euler=None, sigma=None):
    return _core.h1(genus, boundary, bundle, euler, sigma)


def smith_normal_form(rows):
    """(D, U, V) with U @ rows @ V == D, as lists of Python ints."""
    d, u, v = _core.smith_normal_form([[str(x) for x in r] for r in rows])
    back = lambda m: [[int(x) for x in r] for r in m]
    return back(d), back(u), back(v)


def dehn_reduce(word, genus, boundary=0):
    return _core.dehn_reduce(word, genus, boundary)


def is_trivial(word, genus, boundary=0):
    return _core.is_trivial(word, genus, boundary)


def britton_reduce(word, base, phi=()):
    return _core.britton_reduce(word, list(base), [tuple(p) for p in phi])


def run_cli(args):
    """Runs the command line in-process: (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
