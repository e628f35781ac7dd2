import random

import pytest

from conftest import eval_vector
from nullpoly.canonical import CanonicalForm, canonical_form, equivalent, reduce_degree
from nullpoly.construct import kempner_basis, kempner_mu, least_monic_null
from nullpoly.oracle import equivalent_eval
from nullpoly.polys import Polynomial, deg_mod, parse_polynomial, reduce_coeffs

X = Polynomial((0, 1))


def test_reduce_degree_examples():
    assert reduce_degree(Polynomial((0, 0, 0, 1)), 3) == X  # x^3 -> x mod 3
    f = Polynomial((2, 1, 5))
    assert reduce_degree(f, 9) == reduce_coeffs(f, 9)  # already below mu(9)=6
    assert reduce_degree(kempner_basis(8), 8) == Polynomial(())


def test_reduce_degree_bounds_and_function():
    rng = random.Random(17)
    for m in range(2, 101):
        mu = kempner_mu(m)
        for _ in range(3):
            f = Polynomial([rng.randrange(-m, m) for _ in range(rng.randrange(0, 14))])
            r = reduce_degree(f, m)
            d = deg_mod(r, m)
            assert d is None or d < mu
            for x in range(m):
                assert f.eval_mod(x, m) == r.eval_mod(x, m)


def test_canonical_form_examples():
    assert canonical_form(Polynomial((0, 0, 0, 1)), 3) == canonical_form(X, 3)
    assert canonical_form(X, 8) == CanonicalForm(8, (0, 1, 0, 0))
    # adding a multiple of the least monic null polynomial changes nothing
    h = least_monic_null(3, 2)
    f = Polynomial((4, 7, 2, 1))
    assert canonical_form(f, 9) == canonical_form(f + h * Polynomial((3, 1, 2)), 9)


def test_canonical_form_shape():
    for m in (2, 6, 8, 9, 12):
        cf = canonical_form(Polynomial((1, 2, 3, 4, 5, 6, 7)), m)
        assert len(cf.a) == kempner_mu(m)
        assert all(0 <= a < m for a in cf.a)


def test_equivalent_examples():
    assert equivalent(parse_polynomial("x^4-2x^3+3x^2-2x"), Polynomial(()), 8)
    assert equivalent(Polynomial((0, 0, 1)), X, 2)
    for m in (2, 3, 7, 12):
        assert not equivalent(X + Polynomial((1,)), X, m)


def test_completeness_of_the_invariant():
    # canonical forms are equal exactly when the value tables agree
    rng = random.Random(2718)
    for m in range(2, 49):
        pairs = []
        for _ in range(12):
            f = Polynomial([rng.randrange(-99, 99) for _ in range(rng.randrange(0, 11))])
            g = Polynomial([rng.randrange(-99, 99) for _ in range(rng.randrange(0, 11))])
            pairs.append((f, g))
        for _ in range(4):
            f = Polynomial([rng.randrange(-99, 99) for _ in range(rng.randrange(0, 11))])
            null = m * Polynomial([rng.randrange(-9, 9) for _ in range(4)])
            pairs.append((f, f + null))
        for f, g in pairs:
            same_form = canonical_form(f, m) == canonical_form(g, m)
            same_function = eval_vector(f, m) == eval_vector(g, m)
            assert same_form == same_function, (m, f, g)


def test_agrees_with_difference_oracle():
    rng = random.Random(31415)
    for _ in range(300):
        m = rng.randrange(2, 40)
        f = Polynomial([rng.randrange(0, m) for _ in range(rng.randrange(0, 9))])
        g = Polynomial([rng.randrange(0, m) for _ in range(rng.randrange(0, 9))])
        assert equivalent(f, g, m) == equivalent_eval(f, g, m)


def test_degree_one_rigidity():
    # two polynomials of degree <= 1 are equivalent iff congruent: the map
    # (a0, a1) -> value table is injective on reduced coefficients
    for m in range(2, 21):
        seen = {}
        for a0 in range(m):
            for a1 in range(m):
                f = Polynomial((a0, a1))
                key = eval_vector(f, m)
                assert key not in seen, (m, seen[key], f)
                seen[key] = f


def test_degree_below_p_rigidity_mod_prime_powers():
    # mod p^d, polynomials of degree <= p-1 with reduced coefficients induce
    # pairwise distinct functions
    from itertools import product

    for p, d in [(2, 2), (2, 3), (3, 2)]:
        m = p ** d
        seen = set()
        for coeffs in product(range(m), repeat=p):
            key = eval_vector(Polynomial(coeffs), m)
            assert key not in seen
            seen.add(key)


def test_constant_term_lemma():
    # equivalent polynomials agree at x = 0
    rng = random.Random(55)
    for _ in range(100):
        m = rng.randrange(2, 30)
        f = Polynomial([rng.randrange(0, m) for _ in range(6)])
        g = f + m * Polynomial([rng.randrange(-5, 5) for _ in range(6)])
        g = g + kempner_basis(m) * Polynomial((rng.randrange(0, m),))
        assert equivalent(f, g, m)
        assert (f(0) - g(0)) % m == 0


def test_reduce_degree_requires_m_at_least_2():
    with pytest.raises(ValueError):
        reduce_degree(X, 1)
