import pytest

from conftest import brute_null_set
from nullpoly.construct import digit_vector, least_monic_null, omega1_prime_power
from nullpoly.counting import (
    _tower_threshold_exponent_recursive,
    count_monic,
    count_monic_le,
    count_null_le,
    enumerate_null,
    null_basis,
    threshold_count_exponent,
    tower_block_exponent,
    tower_threshold_exponent,
)
from nullpoly.oracle import is_null_binomial, is_null_eval
from nullpoly.polys import Polynomial, deg_mod, parse_polynomial


def test_null_basis_layers_p2_d3():
    nb = null_basis(2, 3)
    assert [l.level for l in nb.layers] == [3, 2, 1]
    top, mid, bottom = nb.layers
    assert top.multiplier == 1 and top.free and not top.skipped
    assert top.poly == least_monic_null(2, 3)
    assert mid.skipped and mid.multiplier == 2          # its digit saturates
    assert bottom.multiplier == 4 and bottom.q_degree_bound == 2
    assert not bottom.skipped


def test_null_basis_layers_p3_d2():
    nb = null_basis(3, 2)
    assert nb.layers[0].free and nb.layers[0].poly.degree == 6
    assert nb.layers[1].multiplier == 3 and nb.layers[1].poly.degree == 3
    assert not any(l.skipped for l in nb.layers)


def test_null_basis_single_free_layer():
    nb = null_basis(2, 1)
    assert len(nb.layers) == 1
    assert nb.layers[0].free and nb.layers[0].multiplier == 1


def test_null_basis_kept_layers_are_monic_null():
    for p, d in [(2, 4), (2, 6), (3, 3), (5, 2)]:
        for layer in null_basis(p, d).layers:
            if layer.skipped:
                continue
            assert layer.poly.coeffs[-1] == 1
            assert is_null_binomial(layer.poly, p ** layer.level)


def test_enumerate_examples():
    got = set(enumerate_null(2, 2, 3))
    expected = {
        Polynomial(()),
        parse_polynomial("2x^2+2x"),
        parse_polynomial("2x^3+2x^2"),
        parse_polynomial("2x^3+2x"),
    }
    assert got == expected
    assert set(enumerate_null(2, 2, 2)) == {Polynomial(()), parse_polynomial("2x^2+2x")}
    for p, d in [(2, 2), (3, 1), (5, 3)]:
        assert set(enumerate_null(p, d, p - 1)) == {Polynomial(())}


@pytest.mark.parametrize("p,d,n", [(2, 2, 4), (2, 3, 4), (3, 2, 3)])
def test_enumerate_equals_brute_force_set(p, d, n):
    assert set(enumerate_null(p, d, n)) == brute_null_set(p ** d, n)


def test_count_matches_enumerator():
    for p, d, nmax in [(2, 1, 5), (2, 2, 6), (2, 3, 6), (3, 1, 4), (3, 2, 7)]:
        for n in range(nmax + 1):
            polys = list(enumerate_null(p, d, n))
            assert len(polys) == len(set(polys))  # no duplicates ever
            assert count_null_le(n, p, d).value == len(polys)


def _layer_count_exponent(n: int, p: int, d: int) -> int:
    # independent route: product of per-layer coefficient boxes, each box
    # clipped by the degree budget
    total = 0
    for layer in null_basis(p, d).layers:
        if layer.skipped:
            continue
        ncoeffs = n - layer.poly.degree + 1
        if not layer.free:
            ncoeffs = min(ncoeffs, p)
        if ncoeffs > 0:
            total += layer.level * ncoeffs
    return total


def test_count_matches_layer_formula():
    for p in (2, 3, 5):
        for d in range(1, 9):
            w1 = omega1_prime_power(p, d)
            for n in range(w1 + 6):
                res = count_null_le(n, p, d)
                assert res.value == p ** _layer_count_exponent(n, p, d), (p, d, n)
                assert res.value >= 1
                assert res.p_exponent is not None


def test_count_examples():
    assert count_null_le(2, 2, 2).value == 2
    assert count_null_le(3, 2, 3).value == 4
    assert count_null_le(1, 5, 7).value == 1
    assert count_null_le(3, 2, 2).value == 4


def test_count_trace_records_path():
    trace = dict(count_null_le(3, 2, 3).trace)
    assert trace["case"] == "at-threshold-digit-product"
    trace = dict(count_null_le(9, 2, 3).trace)
    assert trace["case"] == "above-threshold"
    trace = dict(count_null_le(2, 2, 3).trace)
    assert trace["case"] == "band-reduction"
    trace = dict(count_null_le(1, 5, 7).trace)
    assert trace["case"] == "below-least-null-degree"


def test_count_monic_examples():
    assert count_monic(3, 2, 2).value == 0
    assert count_monic(4, 2, 2).value == 4
    assert count_monic(5, 2, 2).value == 16


def test_count_monic_brute_force():
    from itertools import product

    def brute_monic(n, p, d):
        m = p ** d
        total = 0
        for tail in product(range(m), repeat=n):
            f = Polynomial(tail + (1,))
            if all(f.eval_mod(x, m) == 0 for x in range(m)):
                total += 1
        return total

    for p, d, n in [(2, 2, 4), (2, 2, 5), (2, 3, 4), (3, 1, 3), (2, 3, 5)]:
        assert count_monic(n, p, d).value == brute_monic(n, p, d)


def test_threshold_identity():
    # count of monic nulls at the least monic degree equals the count of all
    # nulls strictly below it
    for p in (2, 3):
        for d in range(1, 7):
            w1 = omega1_prime_power(p, d)
            assert count_monic(w1, p, d).value == count_null_le(w1 - 1, p, d).value


def test_count_monic_le_is_geometric_sum():
    for p, d in [(2, 2), (2, 3), (3, 2)]:
        w1 = omega1_prime_power(p, d)
        for n in range(w1 + 4):
            expect = sum(count_monic(k, p, d).value for k in range(n + 1))
            assert count_monic_le(n, p, d).value == expect


def test_stability_across_exponents():
    for d1 in range(1, 6):
        for d2 in range(1, 6):
            bound = min(omega1_prime_power(2, d1), omega1_prime_power(2, d2))
            for n in range(bound):
                assert count_null_le(n, 2, d1).value == count_null_le(n, 2, d2).value


def test_tower_threshold_exponent_examples():
    assert tower_threshold_exponent(2, 2) == 2
    assert tower_threshold_exponent(3, 3) == 135
    assert tower_threshold_exponent(2, 1) == 0


def test_tower_threshold_recursion_matches_closed_form():
    for p in (2, 3, 5):
        for n in range(1, 6):
            closed = tower_threshold_exponent(p, n)
            assert closed == _tower_threshold_exponent_recursive(p, n)
            assert p ** n * (((p ** n - 1) // (p - 1)) - n) % 2 == 0


def test_tower_threshold_is_count_at_tower_moduli():
    # at d = repunit(p, n) the threshold count is exactly p ** Ntilde
    from nullpoly.construct import repunit

    for p in (2, 3):
        for n in (1, 2, 3):
            d = repunit(p, n)
            if d == 0:
                continue
            exp, _ = threshold_count_exponent(p, d)
            assert exp == tower_threshold_exponent(p, n)


def test_tower_block_exponent_identities():
    for p in (2, 3):
        for n in (1, 2, 3):
            assert tower_block_exponent(p, n, 0) == 0
            assert tower_block_exponent(p, n, 1) == tower_threshold_exponent(p, n)
            assert tower_block_exponent(p, n, p) == tower_threshold_exponent(p, n + 1)


def test_threshold_count_brute_force():
    for p, d in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        w1 = omega1_prime_power(p, d)
        exp, blocks = threshold_count_exponent(p, d)
        assert p ** exp == len(brute_null_set(p ** d, w1 - 1))
        assert sum(c for _, _, c in blocks) == exp


def test_threshold_count_vs_enumerator():
    # larger moduli where raw brute force is out of reach: the enumerator
    # (whose output is brute-checked elsewhere) supplies the cardinality
    for p, d in [(2, 4), (2, 5), (3, 3), (5, 2)]:
        w1 = omega1_prime_power(p, d)
        exp, _ = threshold_count_exponent(p, d)
        polys = set(enumerate_null(p, d, w1 - 1))
        assert len(polys) == p ** exp
        m = p ** d
        for f in polys:
            assert is_null_binomial(f, m)


def test_enumerated_polynomials_are_null_and_reduced():
    for p, d, n in [(2, 3, 5), (3, 2, 6)]:
        m = p ** d
        for f in enumerate_null(p, d, n):
            assert all(0 <= c < m for c in f.coeffs)
            dm = deg_mod(f, m)
            assert dm is None or dm <= n
            assert is_null_eval(f, m)


def test_count_input_validation():
    with pytest.raises(ValueError):
        count_null_le(-1, 2, 2)
    with pytest.raises(ValueError):
        count_null_le(3, 4, 2)
    with pytest.raises(ValueError):
        count_null_le(3, 2, 0)
