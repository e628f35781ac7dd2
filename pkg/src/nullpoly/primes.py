"""Primality and integer factorization helpers (desk-scale moduli)."""
from __future__ import annotations

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with these witnesses is deterministic below 3.3e24
# (Sorenson & Webster), far beyond any modulus this library targets.
_MR_WITNESSES = _SMALL_PRIMES
_MR_PROVEN_BOUND = 3317044064679887385961981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factorization(m: int) -> list[tuple[int, int]]:
    """Sorted (prime, exponent) pairs with product m, by trial division."""
    if m < 2:
        raise ValueError("factorization requires m >= 2")
    out: list[tuple[int, int]] = []
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
            # after stripping a factor, a surviving prime cofactor is common
            if rest > 1 and is_prime(rest):
                break
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return out
