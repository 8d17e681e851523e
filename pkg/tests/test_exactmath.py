import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kucomm import exactmath as em
from oracles import count_partitions, falling_factorial_coeffs, pascal


def test_binom_matches_pascal_triangle():
    rows = pascal(40)
    for n, row in enumerate(rows):
        for k, c in enumerate(row):
            assert em.binom(n, k) == c
    assert em.binom(5, -1) == em.binom(5, 6) == em.binom(-1, 0) == 0


@given(st.integers(-30, 30), st.integers(0, 12))
def test_gbinom_is_falling_product_over_factorial(r, k):
    num = math.prod(r - i for i in range(k))
    assert Fraction(num, math.factorial(k)) == em.gbinom(r, k)


def test_gbinom_negative_upper():
    assert [em.gbinom(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert em.gbinom(-2, 3) == -4


def test_stirling1_from_falling_factorial():
    for n in range(16):
        coeffs = falling_factorial_coeffs(n)
        for k, c in enumerate(coeffs):
            assert em.stirling1(n, k) == c


def test_stirling2_by_enumerating_partitions():
    for n in range(8):
        for k in range(n + 1):
            assert em.stirling2(n, k) == count_partitions(n, k)


def test_stirling_tables_grow_on_demand():
    assert em.stirling2(70, 69) == em.binom(70, 2)
    assert em.stirling1(70, 69) == -em.binom(70, 2)


@given(st.integers(0, 25), st.integers(0, 25))
def test_stirling_matrices_are_inverse(n, m):
    total = sum(em.stirling1(n, k) * em.stirling2(k, m) for k in range(26))
    assert total == (n == m)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_multinomial_is_product_of_binomials(parts):
    expected, acc = 1, 0
    for p in parts:
        acc += p
        expected *= em.binom(acc, p)
    assert em.multinomial(*parts) == expected


def test_normalize_and_format():
    assert em.normalize(Fraction(4, 2)) == 2 and type(em.normalize(Fraction(4, 2))) is int
    assert em.format_rat(Fraction(-2, 3)) == "-2/3"
    assert em.format_rat(5) == "5"
    assert em.parse_rat("6/4") == Fraction(3, 2)


def test_injected_fault_is_scoped():
    before = em.stirling2(3, 2)
    with em.injected_fault():
        assert em.stirling2(3, 2) == before + 1
    assert em.stirling2(3, 2) == before


def test_injected_fault_restored_after_error():
    with pytest.raises(RuntimeError):
        with em.injected_fault(4, 2, 5):
            raise RuntimeError
    assert em.stirling2(4, 2) == 7
