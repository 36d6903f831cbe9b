"""Exact computations at the formal punctured neighborhood of infinity.

Values (fields, series, polynomials, rational functions) are native objects;
reports are returned as plain dicts in the same JSON layout the CLI emits.
"""

import json as _json

from ._core import (
    DEFAULT_SEED,
    Error,
    Field,
    FieldValue,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    run_cli,
)
from . import _core

Q = Field.rationals()


def _field(field):
    if field is None:
        return Q
    if isinstance(field, str):
        return Field.parse(field)
    return field


def phi_of_series(f, window=20, field=None, known_terms=False, precision=None):
    prec = precision if precision is not None else window + 16
    return _json.loads(_core._phi_of_series(_field(field), f, window, known_terms, prec))


def verify_homomorphism(f, g, window=20, field=None):
    return _json.loads(_core._verify_homomorphism(_field(field), f, g, window))


def verify_ses(h, window=14, field=None):
    return _json.loads(_core._verify_ses(_field(field), h, window))


def factor_cocycle(text, order=12, field=None):
    return _json.loads(_core._factor_cocycle(_field(field), text, order))


def laurent_roots(polynomial, precision=20, field=None):
    return _json.loads(_core._laurent_roots(_field(field), polynomial, precision))


def algebraicity_witness(h, dx=2, dy=2, field=None, precision=40):
    return _json.loads(_core._algebraicity_witness(_field(field), h, dx, dy, precision))


def residues(f, g, field=None):
    return _json.loads(_core._residues(_field(field), f, g))


def weil(f, g, field=None):
    return _json.loads(_core._weil(_field(field), f, g))


def prop71(precision=15, field=None):
    return _json.loads(_core._prop71(_field(field), precision))


def suite(name, seed=DEFAULT_SEED, order=12):
    return _json.loads(_core._suite(name, seed, order))


__all__ = [
    "Error", "Field", "FieldValue", "Polynomial", "RationalFunction", "TruncatedSeries", "Q",
    "phi_of_series", "verify_homomorphism", "verify_ses", "factor_cocycle", "laurent_roots",
    "algebraicity_witness", "residues", "weil", "prop71", "suite", "run_cli",
]
