"""Enumerate and count null polynomials of bounded degree mod p**d.

Every null polynomial mod p**d decomposes uniquely as

    f = sum over layers j = d..1 of  p**(d-j) * B_j * q_j   (mod p**d)

where B_j is the least-degree monic null polynomial mod p**j, q_d is free,
q_j for j < d has degree < p, a layer is dropped when its digit vector
saturates (its basis polynomial repeats the next layer's degree), and the
coefficients of q_j matter mod p**j. Counting is therefore a product of
independent coefficient boxes, which collapses to closed-form powers of p.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator

from .construct import (
    digit_vector,
    least_monic_null,
    omega1_prime_power,
    repunit,
)
from .polys import Polynomial, reduce_coeffs
from .primes import is_prime


@dataclass(frozen=True)
class NullLayer:
    level: int
    multiplier: int            # p**(d - level)
    poly: Polynomial           # least-degree monic null polynomial mod p**level
    q_degree_bound: int | None  # None: free degree; otherwise q degree < bound
    skipped: bool

    @property
    def free(self) -> bool:
        return self.q_degree_bound is None


@dataclass(frozen=True)
class NullBasis:
    p: int
    d: int
    layers: tuple[NullLayer, ...]  # descending level d..1


@dataclass(frozen=True)
class CountResult:
    value: int
    p_exponent: int | None  # E when value is exactly p**E, else None
    trace: tuple[tuple[str, object], ...]


def null_basis(p: int, d: int) -> NullBasis:
    """Layered decomposition basis for null polynomials mod p**d."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("d must be >= 1")
    layers = []
    for j in range(d, 0, -1):
        skipped = j < d and digit_vector(p, j).e_max == p
        layers.append(
            NullLayer(
                level=j,
                multiplier=p ** (d - j),
                poly=least_monic_null(p, j),
                q_degree_bound=None if j == d else p,
                skipped=skipped,
            )
        )
    return NullBasis(p, d, tuple(layers))


def enumerate_null(p: int, d: int, n: int) -> Iterator[Polynomial]:
    """Yield every null polynomial of degree <= n mod p**d exactly once.

    Coefficients come out reduced to [0, p**d). The caller is responsible
    for bounding the total via count_null_le first; generation order is an
    implementation detail (the CLI sorts).
    """
    basis = null_basis(p, d)
    pd = p ** d
    active: list[tuple[Polynomial, int, int]] = []
    for layer in basis.layers:
        if layer.skipped:
            continue
        ncoeffs = n - layer.poly.degree + 1
        if not layer.free:
            ncoeffs = min(ncoeffs, p)
        if ncoeffs <= 0:
            continue
        scaled = reduce_coeffs(layer.poly * layer.multiplier, pd)
        active.append((scaled, p ** layer.level, ncoeffs))
    boxes = [iproduct(range(cm), repeat=nc) for _, cm, nc in active]
    for choice in iproduct(*boxes):
        f = Polynomial(())
        for (scaled, _, _), q in zip(active, choice):
            f = f + scaled * Polynomial(q)
        yield reduce_coeffs(f, pd)


def tower_threshold_exponent(p: int, n: int) -> int:
    """log_p of the number of null polynomials of degree < p**n mod
    p**repunit(p, n): closed form p**n * (repunit(p, n) - n) / 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = p ** n * (repunit(p, n) - n)
    assert num % 2 == 0
    return num // 2


def _tower_threshold_exponent_recursive(p: int, n: int) -> int:
    # product-over-blocks recursion; kept as a cross-check for the closed form
    if n == 1:
        return 0
    step = p ** n * (p ** (n - 1) - 1)
    assert step % 2 == 0
    return step // 2 + p * _tower_threshold_exponent_recursive(p, n - 1)


def tower_block_exponent(p: int, n: int, i: int) -> int:
    """log_p of the below-threshold count when the top digit is i at index n:
    i*(i-1)*p**n*repunit(p,n)/2 + i*tower_threshold_exponent(p,n)."""
    if not 0 <= i <= p:
        raise ValueError("digit must be in [0, p]")
    return i * (i - 1) * p ** n * repunit(p, n) // 2 + i * tower_threshold_exponent(p, n)


def threshold_count_exponent(p: int, d: int) -> tuple[int, list[tuple[int, int, int]]]:
    """log_p of the count of null polynomials of degree < omega1 mod p**d.

    Summed digit by digit: digit e at index i contributes its own block
    exponent plus e * p**i times the value carried by the digits above it.
    Returns (exponent, [(index, digit, contribution), ...] descending).
    """
    dv = digit_vector(p, d)
    total = 0
    blocks = []
    for i, e in reversed(dv.exponents()):
        above = sum(ej * repunit(p, j) for j, ej in dv.exponents() if j > i)
        contrib = e * p ** i * above + tower_block_exponent(p, i, e)
        total += contrib
        blocks.append((i, e, contrib))
    return total, blocks


def count_null_le(n: int, p: int, d: int) -> CountResult:
    """Number of null polynomials of degree <= n mod p**d (zero poly included)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 0:
        raise ValueError("degree bound must be >= 0")
    omega1 = omega1_prime_power(p, d)
    trace: list[tuple[str, object]] = [
        ("modulus", f"{p}^{d}"),
        ("least_monic_degree", omega1),
    ]
    if n < p:
        trace.append(("case", "below-least-null-degree"))
        trace.append(("count", 1))
        return CountResult(1, 0, tuple(trace))
    if n >= omega1:
        extra = d * (n - omega1 + 1)
        base_exp, blocks = threshold_count_exponent(p, d)
        trace.append(("case", "above-threshold"))
        trace.append(("free-coefficients-exponent", extra))
        trace.append(("threshold-exponent", base_exp))
        exp = base_exp + extra
    elif n == omega1 - 1:
        exp, blocks = threshold_count_exponent(p, d)
        trace.append(("case", "at-threshold-digit-product"))
        for i, e, contrib in blocks:
            trace.append((f"digit-block[index={i}, digit={e}]", contrib))
    else:
        dstar = 1
        while omega1_prime_power(p, dstar) <= n:
            dstar += 1
        dbar = dstar - 1
        top = omega1_prime_power(p, dstar)
        base_exp, _ = threshold_count_exponent(p, dstar)
        peel = dbar * (top - 1 - n)
        exp = base_exp - peel
        trace.append(("case", "band-reduction"))
        trace.append(("band-modulus-exponent", dstar))
        trace.append(("band-top-degree", top - 1))
        trace.append(("band-threshold-exponent", base_exp))
        trace.append(("peeled-exponent", peel))
    trace.append(("count-exponent", exp))
    value = p ** exp
    trace.append(("count", value if exp < 256 else f"{p}^{exp}"))
    return CountResult(value, exp, tuple(trace))


def count_monic(n: int, p: int, d: int) -> CountResult:
    """Number of monic null polynomials of degree exactly n mod p**d."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    omega1 = omega1_prime_power(p, d)
    trace: list[tuple[str, object]] = [
        ("modulus", f"{p}^{d}"),
        ("least_monic_degree", omega1),
    ]
    if n < omega1:
        trace.append(("case", "below-least-monic-degree"))
        trace.append(("count", 0))
        return CountResult(0, None, tuple(trace))
    base_exp, _ = threshold_count_exponent(p, d)
    extra = d * (n - omega1)
    exp = base_exp + extra
    trace.append(("case", "at-threshold" if n == omega1 else "above-threshold"))
    trace.append(("threshold-exponent", base_exp))
    if extra:
        trace.append(("free-coefficients-exponent", extra))
    trace.append(("count-exponent", exp))
    value = p ** exp
    trace.append(("count", value if exp < 256 else f"{p}^{exp}"))
    return CountResult(value, exp, tuple(trace))


def count_monic_le(n: int, p: int, d: int) -> CountResult:
    """Number of monic null polynomials of degree <= n mod p**d.

    Geometric sum of count_monic over degrees omega1..n:
    (p**(d*(n*+1)) - 1) / (p**d - 1) times the threshold count.
    """
    if n < 0:
        raise ValueError("degree bound must be >= 0")
    omega1 = omega1_prime_power(p, d)
    if n < omega1:
        return CountResult(
            0, None, (("modulus", f"{p}^{d}"), ("case", "below-least-monic-degree"))
        )
    nstar = n - omega1
    base_exp, _ = threshold_count_exponent(p, d)
    pd = p ** d
    scale = (pd ** (nstar + 1) - 1) // (pd - 1)
    value = scale * p ** base_exp
    trace = (
        ("modulus", f"{p}^{d}"),
        ("least_monic_degree", omega1),
        ("case", "geometric-sum-above-threshold"),
        ("threshold-exponent", base_exp),
        ("geometric-factor", scale),
    )
    exp = _pure_power_exponent(value, p)
    return CountResult(value, exp, trace)


def _pure_power_exponent(value: int, p: int) -> int | None:
    if value < 1:
        return None
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    return e if value == 1 else None
