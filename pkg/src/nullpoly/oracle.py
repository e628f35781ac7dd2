"""Ground-truth tests for null-ness, null order, and functional equivalence.

Two independent routes are kept deliberately separate: the definitional
evaluation scan over a full residue window, and the Newton (binomial
coefficient basis) criterion. A polynomial is null mod m exactly when every
coordinate in the basis C(x,0), C(x,1), ... is divisible by m; each m*C(x,k)
is integer-valued and identically 0 mod m, and conversely the k-th forward
difference at 0 of a null polynomial is a Z-combination of values ≡ 0.
"""
from __future__ import annotations

from itertools import product

from .polys import Polynomial


def is_null_eval(f: Polynomial, m: int) -> bool:
    """Definitional test: f(x) ≡ 0 (mod m) for x = 0..m-1.

    The finite window suffices because x1 ≡ x2 (mod m) forces
    f(x1) ≡ f(x2) (mod m).
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return all(f.eval_mod(x, m) == 0 for x in range(m))


def newton_coefficients(f: Polynomial) -> tuple[int, ...]:
    """Exact coordinates of f in the binomial basis: f = sum a[k]*C(x,k).

    a[k] is the k-th forward difference of f at 0, always an integer for an
    integer polynomial; length is deg(f)+1 (empty for the zero polynomial).
    """
    if not f:
        return ()
    n = f.degree
    values = [f(x) for x in range(n + 1)]
    out = []
    for _ in range(n + 1):
        out.append(values[0])
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return tuple(out)


def _newton_mod(f: Polynomial, m: int) -> list[int]:
    # Same difference table reduced mod m at every step; the verdicts of
    # is_null_binomial only need the coefficients mod m.
    values = [f.eval_mod(x, m) for x in range(len(f.coeffs))]
    out = []
    for _ in range(len(values)):
        out.append(values[0])
        values = [(values[i + 1] - values[i]) % m for i in range(len(values) - 1)]
    return out


def is_null_binomial(f: Polynomial, m: int) -> bool:
    """Newton-basis test: null mod m iff every basis coordinate ≡ 0 mod m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return all(a == 0 for a in _newton_mod(f, m))


def null_order(f: Polynomial, p: int, d_max: int) -> int:
    """Largest d <= d_max with f null mod p**d; 0 if f is not null mod p.

    Linear ascent is correct because nullity mod p**(d+1) implies nullity
    mod p**d.
    """
    d = 0
    while d < d_max and is_null_binomial(f, p ** (d + 1)):
        d += 1
    return d


def equivalent_eval(f: Polynomial, g: Polynomial, m: int) -> bool:
    """True iff f and g induce the same function on Z_m (f-g is null)."""
    return is_null_binomial(f - g, m)


def null_witness(f: Polynomial, m: int) -> int | None:
    """Smallest x >= 0 with f(x) not ≡ 0 (mod m), or None if f is null.

    When some Newton coordinate a[k] is nonzero mod m a witness exists
    already among x = 0..k, so scanning 0..max(m, deg f) never misses.
    """
    bound = max(m, len(f.coeffs))
    for x in range(bound):
        if f.eval_mod(x, m) != 0:
            return x
    return None


def brute_least_monic_degree(m: int, degree_cap: int) -> int | None:
    """Exhaustive search for the least degree of a monic null poly mod m.

    Scans every monic coefficient vector in [0,m)**n for n = 1..degree_cap;
    returns None when no monic null polynomial of degree <= degree_cap
    exists. Cost is m**degree_cap, so the preconditions are enforced.
    """
    if m < 2 or m > 16:
        raise ValueError("brute search requires 2 <= m <= 16")
    if degree_cap < 1 or degree_cap > 6:
        raise ValueError("brute search requires 1 <= degree_cap <= 6")
    for n in range(1, degree_cap + 1):
        for tail in product(range(m), repeat=n):
            f = Polynomial(tail + (1,))
            if all(f.eval_mod(x, m) == 0 for x in range(m)):
                return n
    return None
