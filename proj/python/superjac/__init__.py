"""Exact invariants and endomorphism-algebra certificates for superelliptic
curves y^q = f(x) with q = p^r and deg f = m * p^s.

The heavy lifting lives in the C++ extension; this package re-exports it and
adds a small JSON convenience wrapper around the certificate.
"""

import json as _json

from superjac._core import (  # noqa: F401
    Family,
    InconclusiveError,
    RegimeError,
    ValidationError,
    birational_exponents,
    certificate_json,
    commutant_dimension,
    differential_basis,
    dimension_decomposition,
    eigenspace_dimension,
    family,
    family_from_coefficients,
    genus,
    heart_is_simple,
    infinity_count,
    invariant_multipliers,
    monotone_constancy,
    multiplicity_gcd,
    multiplicity_profile,
    orbit_partition,
    picard_invariant_factors,
    picard_p_rank,
    torsion_map_rank,
    verify_all,
)


def certificate(fam, galois, seed=1):
    """Endomorphism-algebra certificate as a plain dict."""
    return _json.loads(certificate_json(fam, galois, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
