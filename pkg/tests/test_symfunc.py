from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chromatica.errors import UnsupportedBasisError
from chromatica.partition import Partition, partitions_of
from chromatica.symfunc import (Basis, SymFunc, TPoly, convert, e, evaluate_t, m, multiply, p, s)


def ssyt_count(shape, content):
    """Semistandard tableaux of ``shape`` with ``content``; plain backtracking."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = {}
    left = list(content)

    def go(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        for v in range(len(left)):
            if not left[v]:
                continue
            if c and grid[(r, c - 1)] > v:
                continue
            if r and grid[(r - 1, c)] >= v:
                continue
            grid[(r, c)] = v
            left[v] -= 1
            total += go(k + 1)
            left[v] += 1
        return total

    return go(0)


# --- TPoly -------------------------------------------------------------------

def test_tpoly_arithmetic():
    a = TPoly([1, 1])
    assert a * a == TPoly([1, 2, 1])
    assert a - a == TPoly()
    assert (a * 3)(2) == 9
    assert TPoly([0, 0, 0]).is_zero
    assert not TPoly([1, Fraction(1, 2)]).is_integral()
    assert str(TPoly([1, 2, 1])) == "1+2t+t^2"


# --- examples ----------------------------------------------------------------

def test_e21_in_m():
    assert convert(e(2, 1), Basis.M) == m(2, 1) + m(1, 1, 1) * 3


def test_s21_in_e():
    assert convert(s(2, 1), Basis.E) == e(2, 1) - e(3)


def test_monomial_product():
    assert multiply(m(1), m(1)) == m(2) + m(1, 1) * 2


def test_power_sums():
    assert convert(p(1, 1) - p(2), Basis.E) == e(2) * 2
    assert convert(p(2), Basis.M) == m(2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_hook_monomial_in_e(n):
    lam = (2,) + (1,) * (n + 1)
    assert convert(m(*lam), Basis.E) == e(n + 2, 1) - e(n + 3) * (n + 3)


def test_generalized_net_monomial_transitions():
    # two further displayed change-of-basis identities, at n = 4
    n = 4
    lhs = convert(m(3, 1, 1, 1, 1), Basis.E)
    assert lhs == e(n + 1, 1, 1) - e(n + 1, 2) * 2 - e(n + 2, 1) + e(n + 3) * (n + 3)
    lhs = convert(m(4, 1, 1, 1), Basis.E)
    rhs = (e(n, 1, 1, 1) - e(n, 2, 1) * 3 + e(n, 3) * 3 - e(n + 1, 1, 1) + e(n + 1, 2) * 2
           + e(n + 2, 1) - e(n + 3) * (n + 3))
    assert lhs == rhs


def test_schur_product_unsupported():
    with pytest.raises(UnsupportedBasisError):
        multiply(s(1), s(1))


def test_string_forms():
    f = e(3) * 12 + e(2, 1) * 18 - e(1, 1, 1) * 6
    assert str(f) == "12 e_{3} + 18 e_{2,1} - 6 e_{1,1,1}"
    g = SymFunc(Basis.E, 3, {Partition((3,)): TPoly([1, 1, 1]), Partition((2, 1)): TPoly([0, 1])})
    assert str(g) == "(1+t+t^2) e_{3} + (t) e_{2,1}"


def test_json_round_trip():
    g = SymFunc(Basis.S, 3, {Partition((2, 1)): TPoly([0, Fraction(3, 2)]), Partition((3,)): 7})
    data = g.to_json()
    assert [t["partition"] for t in data["terms"]] == [[3], [2, 1]]
    assert SymFunc.from_json(data) == g


def test_evaluate_t():
    g = SymFunc(Basis.E, 2, {Partition((2,)): TPoly([1, 1])})
    assert evaluate_t(g, 1) == e(2) * 2


# --- Kostka numbers ------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_schur_to_monomial_is_kostka(n):
    for lam in partitions_of(n):
        f = convert(s(*lam), Basis.M)
        for mu in partitions_of(n):
            assert f[mu] == TPoly.const(ssyt_count(lam, mu)), (lam, mu)


# --- round trips -------------------------------------------------------------

@st.composite
def symfuncs(draw, basis, max_degree=7):
    n = draw(st.integers(1, max_degree))
    parts = partitions_of(n)
    chosen = draw(st.lists(st.sampled_from(parts), min_size=1, max_size=4, unique=True))
    coeffs = draw(st.lists(st.integers(-20, 20), min_size=len(chosen), max_size=len(chosen)))
    return SymFunc(basis, n, dict(zip(chosen, coeffs)))


BASES = [Basis.M, Basis.E, Basis.P, Basis.S]


@given(st.sampled_from(BASES).flatmap(symfuncs), st.sampled_from(BASES))
def test_conversion_round_trip(f, target):
    assert convert(convert(f, target), f.basis) == f


@given(st.sampled_from(BASES).flatmap(symfuncs), st.sampled_from(BASES), st.sampled_from(BASES))
def test_conversion_paths_agree(f, a, b):
    assert convert(convert(f, a), b) == convert(f, b)


@given(symfuncs(Basis.E, 4), symfuncs(Basis.E, 4))
def test_e_product_agrees_with_monomial_product(f, g):
    via_m = multiply(convert(f, Basis.M), convert(g, Basis.M))
    assert convert(multiply(f, g), Basis.M) == via_m


@given(symfuncs(Basis.P, 4), symfuncs(Basis.P, 4))
def test_p_product_agrees_with_monomial_product(f, g):
    via_m = multiply(convert(f, Basis.M), convert(g, Basis.M))
    assert convert(multiply(f, g), Basis.M) == via_m


@given(st.sampled_from(BASES).flatmap(symfuncs))
def test_conversion_is_linear(f):
    assert convert(f * 3 + f, Basis.M) == convert(f, Basis.M) * 4
