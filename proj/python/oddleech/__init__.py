"""Frame certificates for O24, Construction A lattices and q-series checks, with exact arithmetic.

Certificates are plain dicts in the same JSON shape the ``oddleech`` command line writes.
"""

import json

from . import _core
from ._core import (
    CertificateParseError,
    GuardExceeded,
    VerificationError,
    code_size,
    four_squares,
    is_self_dual,
    lattice_summary,
    min_euclidean_weight,
    represent_quaternary,
    sigma1,
    theta,
)

__all__ = [
    "CertificateParseError",
    "GuardExceeded",
    "VerificationError",
    "build_frame",
    "code_size",
    "extract_code",
    "four_squares",
    "identity_check",
    "is_self_dual",
    "lattice_summary",
    "min_euclidean_weight",
    "represent_quaternary",
    "sigma1",
    "theta",
    "verify_frame",
]


def _text(cert):
    return cert if isinstance(cert, str) else json.dumps(cert, sort_keys=True)


def build_frame(k):
    return json.loads(_core.build_frame(k))


def verify_frame(cert):
    """Re-derives both checks from the vectors; returns a dict with gram_ok, membership_ok and valid."""
    gram_ok, membership_ok = _core.check_frame(_text(cert))
    return {"gram_ok": gram_ok, "membership_ok": membership_ok, "valid": gram_ok and membership_ok}


def extract_code(cert):
    """(modulus, generator rows) of the self-dual code read off a frame certificate."""
    modulus, rows = _core.extract_code(_text(cert))
    return modulus, rows


def identity_check(bound=1388):
    holds, first_mismatch = _core.identity_check(bound)
    return {"holds": holds, "first_mismatch": first_mismatch}
