"""Degree reduction and a complete invariant for function equality mod m.

Dividing by the factorial-product basis polynomial leaves an equivalent
remainder of degree < mu(m); its Newton coordinates reduced mod m form a
complete invariant, because the difference of two remainders is null mod m
exactly when all of its Newton coordinates vanish mod m. (The remainder's
monomial coefficients would NOT be complete: null polynomials of degree
below mu(m) exist, e.g. p * x(x-1)...(x-p+1) mod p**2.)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .construct import kempner_basis, kempner_mu
from .oracle import newton_coefficients
from .polys import Polynomial, divmod_monic, reduce_coeffs


@dataclass(frozen=True)
class CanonicalForm:
    """Newton coordinates (length mu(m), entries in [0, m)) of the
    degree-reduced representative; equal forms iff equivalent polynomials."""

    m: int
    a: tuple[int, ...]


@lru_cache(maxsize=None)
def _basis(m: int) -> Polynomial:
    return kempner_basis(m)


def reduce_degree(f: Polynomial, m: int) -> Polynomial:
    """Equivalent polynomial of degree < mu(m), coefficients in [0, m)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    _, r = divmod_monic(f, _basis(m), m)
    return r


def canonical_form(f: Polynomial, m: int) -> CanonicalForm:
    r = reduce_coeffs(reduce_degree(f, m), m)
    a = [c % m for c in newton_coefficients(r)]
    a += [0] * (kempner_mu(m) - len(a))
    return CanonicalForm(m, tuple(a))


def equivalent(f: Polynomial, g: Polynomial, m: int) -> bool:
    """True iff f and g induce the same function on Z_m."""
    return canonical_form(f, m) == canonical_form(g, m)
