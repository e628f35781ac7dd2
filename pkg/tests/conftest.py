"""Shared brute-force helpers for the test suite."""
from nullpoly.polys import Polynomial, all_polynomials


def eval_vector(f: Polynomial, m: int) -> tuple[int, ...]:
    return tuple(f.eval_mod(x, m) for x in range(m))


def brute_null_set(m: int, max_degree: int) -> set[Polynomial]:
    """All reduced null polynomials of degree <= max_degree mod m, by the
    definitional evaluation test."""
    out = set()
    for f in all_polynomials(m, max_degree):
        if all(f.eval_mod(x, m) == 0 for x in range(m)):
            out.add(f)
    return out
