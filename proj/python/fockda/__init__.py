"""Exact arithmetic for neutral and charged free fermion Fock spaces.

Rationals cross the boundary as strings like "1/3"; verification reports come back as dicts with
keys check, params, cases_run, failures and elapsed_ms.
"""

import json
from fractions import Fraction

from . import _fockda
from ._fockda import ParseError, apply, da_map, decompose, lemma_vector, partition_count, sector_dimension

__all__ = [
    "ParseError",
    "apply",
    "character",
    "da_map",
    "decompose",
    "grades",
    "jacobi",
    "lemma_vector",
    "partition_count",
    "scalar_defect",
    "sector_dimension",
    "verify",
]


def _str(x):
    return str(Fraction(x)) if not isinstance(x, str) else x


def grades(indices):
    """(dg, weight, deg_h) of the monomial with the given indices; weight is a Fraction."""
    dg, weight, deg = _fockda.grades(list(indices))
    return dg, Fraction(weight), deg


def character(qmax_half, form="trace"):
    """Coefficients {(z, qhalf): coeff} of the character through q^(qmax_half/2)."""
    return {(z, h): c for z, h, c in _fockda.character(qmax_half, form)}


def jacobi(which, qmax):
    return json.loads(_fockda.jacobi(which, qmax))


def scalar_defect(k1, n1, k2, n2, weight_cut=6):
    """The scalar [J^k1_n1, J^k2_n2] - lift([..]) as a Fraction, or None if it is not scalar."""
    s = _fockda.scalar_defect(k1, n1, k2, n2, _str(weight_cut))
    return None if s is None else Fraction(s)


def verify(target, **options):
    """Run a verification suite and return its reports.

    target is one of clifford, heisenberg, virasoro, identities, iso, winf, charged. Rational
    options (weight_cut, max_index, lambda_, b, lambdas, bs) accept str, int or Fraction.
    """
    for key in ("weight_cut", "max_index", "lambda_", "b"):
        if key in options:
            options[key] = _str(options[key])
    for key in ("lambdas", "bs"):
        if key in options:
            options[key] = [_str(x) for x in options[key]]
    fn = getattr(_fockda, "verify_" + target, None)
    if fn is None:
        raise ValueError(f"unknown verification target {target!r}")
    out = fn(**options)
    return [json.loads(r) for r in (out if isinstance(out, list) else [out])]
