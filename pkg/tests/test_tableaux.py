import pytest
from hypothesis import given, strategies as st

from chromatica.chromatic import qcsf_colorings
from chromatica.errors import IncompleteCaseError, InvalidInputError, UnsupportedSizeError
from chromatica.graph import IntervalSeq, horseshoe_crab_seqs
from chromatica.partition import Partition, partitions_of
from chromatica.symfunc import Basis, TPoly, convert
from chromatica.tableaux import (PTableau, allowed_shapes, dominance_checks, e_coefficients,
                                 enumerate_tableaux, injection_eta, injection_psi, injection_xi,
                                 inv_weight, palindromic, qcsf_tableaux, unimodal,
                                 verify_injection, xi_branch)

CRAB8 = IntervalSeq((2, 4, 6, 8, 8, 8, 8))


def hook(n, *head):
    return Partition(tuple(head) + (1,) * (n - sum(head)))


@st.composite
def interval_seqs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    m, low = [], 1
    for i in range(1, n):
        value = draw(st.integers(max(low, i), n))
        m.append(value)
        low = value
    return IntervalSeq(tuple(m))


# --- tableaux and weights ----------------------------------------------------

def test_worked_example_weight():
    t = PTableau(((1, 3, 7), (2, 5), (6,), (4,), (8,)), CRAB8)
    # pairs {2,3} {4,5} {4,6} {4,7} {5,7} {6,7}
    assert inv_weight(t) == 6


def test_small_weights():
    s = IntervalSeq((2, 3))
    assert inv_weight(PTableau(((1, 3), (2,)), s)) == 1
    chain = IntervalSeq((1, 2, 3, 4))
    assert inv_weight(PTableau(((1,), (2,), (3,), (4,), (5,)), chain)) == 0


def test_validation():
    s = IntervalSeq((2, 3))
    with pytest.raises(InvalidInputError):
        PTableau(((1, 2), (3,)), s)          # 1, 2 incomparable in a row
    with pytest.raises(InvalidInputError):
        PTableau(((3,), (1,), (2,)), IntervalSeq((1, 3)))  # 1 <_P 3 directly below it
    with pytest.raises(InvalidInputError):
        PTableau(((1, 3),), s)
    assert not PTableau(((1, 2), (3,)), s, checked=False).is_valid()


def test_enumeration_examples():
    s = IntervalSeq((2, 3))
    tabs = enumerate_tableaux(s, Partition((1, 1, 1)))
    assert sorted(inv_weight(t) for t in tabs) == [0, 1, 1, 2]
    assert [t.rows for t in tabs] == sorted(t.rows for t in tabs)
    two = enumerate_tableaux(s, Partition((2, 1)))
    assert [t.rows for t in two] == [((1, 3), (2,))] and inv_weight(two[0]) == 1
    assert enumerate_tableaux(s, Partition((3,))) == []


def test_enumeration_cap():
    with pytest.raises(UnsupportedSizeError):
        enumerate_tableaux(IntervalSeq((11,) * 10), Partition((1,) * 11))


def test_allowed_shapes():
    assert allowed_shapes(IntervalSeq((2, 3))) == [Partition((2, 1)), Partition((1, 1, 1))]
    assert allowed_shapes(IntervalSeq((4, 4, 4))) == [Partition((1, 1, 1, 1))]
    six = {hook(8), hook(8, 2), hook(8, 2, 2), hook(8, 2, 2, 2), hook(8, 3), hook(8, 3, 2)}
    for s in horseshoe_crab_seqs(8):
        assert set(allowed_shapes(s)) <= six


def test_schur_expansion_examples():
    s = IntervalSeq((2, 3))
    f = qcsf_tableaux(s)
    assert f[(1, 1, 1)] == TPoly([1, 2, 1]) and f[(2, 1)] == TPoly([0, 1])
    assert qcsf_tableaux(IntervalSeq((2,)))[(1, 1)] == TPoly([1, 1])
    assert qcsf_tableaux(IntervalSeq((3, 3)))[(1, 1, 1)] == TPoly([1, 2, 2, 1])


def test_e_coefficients_examples():
    coeffs = e_coefficients(IntervalSeq((2, 3)))
    assert coeffs == {Partition((3,)): TPoly([1, 1, 1]), Partition((2, 1)): TPoly([0, 1])}
    k4 = e_coefficients(IntervalSeq((4, 4, 4)))
    assert list(k4) == [Partition((4,))]
    assert k4[(4,)] == qcsf_tableaux(IntervalSeq((4, 4, 4)))[(1, 1, 1, 1)]
    crab = IntervalSeq((2, 3, 4, 6, 6))
    assert e_coefficients(crab)[(3, 2, 1)] == qcsf_tableaux(crab)[(3, 2, 1)]


@pytest.mark.parametrize("n", [6, 7])
def test_coefficient_equations_for_crabs(n):
    """E_lam(t) as signed sums of Schur coefficients, for the six hook-like lam."""
    for s in horseshoe_crab_seqs(n):
        S = qcsf_tableaux(s)
        E = e_coefficients(s)
        expected = {
            Partition((n,)): S[hook(n)] + S[hook(n, 3)] - S[hook(n, 2)],
            Partition((n - 1, 1)): S[hook(n, 2)] + S[hook(n, 3, 2)] - S[hook(n, 2, 2)] - S[hook(n, 3)],
            Partition((n - 2, 2)): S[hook(n, 2, 2)] - S[hook(n, 2, 2, 2)] - S[hook(n, 3)],
            Partition((n - 2, 1, 1)): S[hook(n, 3)] - S[hook(n, 3, 2)],
            Partition((n - 3, 3)): S[hook(n, 2, 2, 2)] - S[hook(n, 3, 2)],
            Partition((n - 3, 2, 1)): S[hook(n, 3, 2)],
        }
        for lam in partitions_of(n):
            assert E.get(lam, TPoly()) == expected.get(lam, TPoly()), (s.m, lam)


def test_symmetry_examples():
    for s in (IntervalSeq((2, 3)), CRAB8, IntervalSeq((3, 3))):
        assert palindromic(s) and unimodal(s)


@given(interval_seqs())
def test_tableaux_match_colorings(s):
    assert convert(qcsf_tableaux(s), Basis.M) == qcsf_colorings(s)


@given(interval_seqs(max_n=7))
def test_every_enumerated_tableau_is_valid(s):
    for lam in allowed_shapes(s):
        tabs = enumerate_tableaux(s, lam)
        assert tabs and all(t.is_valid() and t.shape == lam for t in tabs)
        assert len({t.rows for t in tabs}) == len(tabs)


@given(interval_seqs(max_n=7))
def test_palindromic_and_unimodal(s):
    assert palindromic(s) and unimodal(s)


@given(interval_seqs(max_n=6))
def test_top_coefficient_positive_when_connected(s):
    from chromatica.graph import nuig
    if not nuig(s).is_connected():
        return
    top = e_coefficients(s)[(s.n,)]
    nz = [i for i, c in enumerate(top) if c]
    assert all(top[i] > 0 for i in range(nz[0], nz[-1] + 1))


# --- injections --------------------------------------------------------------

def _tab(rows, seq=CRAB8):
    return PTableau(tuple(tuple(r) for r in rows), seq)


def test_eta_example():
    t = _tab([(1, 3, 7), (2, 5), (4,), (6,), (8,)])
    img = injection_eta(t)
    assert img.rows == ((1, 3, 7), (2,), (5,), (4,), (6,), (8,))
    assert img.is_valid() and inv_weight(img) == inv_weight(t)


def test_psi_example():
    t = _tab([(1, 3, 7), (2, 5), (4,), (6,), (8,)])
    img = injection_psi(t)
    assert img.rows == ((3, 7), (2, 5), (1, 4), (6,), (8,))
    assert img.is_valid() and inv_weight(img) == inv_weight(t) + 1


def test_xi_literal_a21_is_2_image_is_not_a_tableau():
    t = _tab([(1, 3, 7), (2,), (4,), (5,), (6,), (8,)])
    assert xi_branch(t) == "a21-is-2"
    literal = injection_xi(t, variant="literal")
    assert literal.rows[:2] == ((2, 7), (1, 3))
    assert not literal.is_valid()        # 3 sits under 7 although 3 <_P 7
    repaired = injection_xi(t)
    assert repaired.rows[:2] == ((1, 3), (2, 7))
    assert repaired.is_valid() and inv_weight(repaired) == inv_weight(t)


def test_xi_literal_a31_is_2_loses_a_weight():
    t = _tab([(1, 3, 7), (4,), (2,), (5,), (6,), (8,)])
    assert xi_branch(t) == "a31-is-2"
    literal = injection_xi(t, variant="literal")
    assert literal.is_valid() and inv_weight(literal) == inv_weight(t) - 1
    repaired = injection_xi(t)
    assert repaired.is_valid() and inv_weight(repaired) == inv_weight(t)


def test_xi_two_row_branch():
    t = _tab([(1, 7), (2, 5), (3, 8), (4,), (6,)])
    img = injection_xi(t)
    assert img.rows == ((1, 7), (2, 5), (3,), (8,), (4,), (6,))
    assert img.is_valid() and inv_weight(img) == inv_weight(t)


def test_injection_preconditions():
    with pytest.raises(InvalidInputError):
        injection_eta(_tab([(1, 7), (2, 5), (3, 8), (4,), (6,)]))
    disconnected = IntervalSeq((2, 2, 5, 6, 6))
    source = next(t for t in enumerate_tableaux(disconnected, hook(6, 3)))
    with pytest.raises(InvalidInputError):
        injection_xi(source)
    with pytest.raises(InvalidInputError):
        injection_eta(PTableau(((1, 3), (2,)), IntervalSeq((2, 3))))
    with pytest.raises(IncompleteCaseError):
        # with 2 <_P 3 a first row may start at 2, which the map does not cover
        injection_psi(next(t for t in enumerate_tableaux(disconnected, hook(6, 3, 2))
                           if t.rows[0][0] == 2))


def test_verify_injection_reports():
    for name in ("eta", "psi", "xi"):
        report = verify_injection(CRAB8, name)
        assert report.ok and report.source_count > 0, name
    literal = verify_injection(CRAB8, "xi", variant="literal")
    assert literal.invalid_targets and literal.weight_errors and literal.counting_ok
    assert not literal.ok
    assert verify_injection(CRAB8, "counting").ok


@pytest.mark.parametrize("n", [6, 7, 8])
def test_repaired_xi_on_every_connected_crab(n):
    for s in horseshoe_crab_seqs(n, connected_only=True):
        report = verify_injection(s, "xi")
        assert report.map_ok, (s.m, report.to_json())


@pytest.mark.parametrize("n", [6, 7, 8])
def test_dominance_for_every_crab(n):
    for s in horseshoe_crab_seqs(n):
        checks = dominance_checks(s)
        connected = s.bound(2) >= 3 and s.bound(3) >= 4
        for key, report in checks.items():
            if key == "n-3,3 shifted" and not connected:
                continue
            assert report.ok, (s.m, key, report.counting_failures)
