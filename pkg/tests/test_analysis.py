from itertools import combinations
from math import factorial

import pytest
from hypothesis import given

from chromatica.analysis import (IntPoly, e_positivity, generalized_spider_legs,
                                 generalized_spiders, independence_poly_from_csf,
                                 independence_polynomial, matching_polynomial, net_closed_form,
                                 net_monomial_formulas, uniqueness_scan)
from chromatica.chromatic import csf_colorings
from chromatica.errors import ContractError, InconsistentInputError
from chromatica.graph import (Graph, claw, complete, edgeless, generalized_net, line_graph, path,
                              spider)
from chromatica.partition import Partition
from chromatica.symfunc import Basis, SymFunc, convert, e

from test_graph import small_graphs


def brute_matchings(g):
    counts = [0] * (g.n // 2 + 1)
    for k in range(len(counts)):
        for subset in combinations(g.edges, k):
            ends = [v for edge in subset for v in edge]
            if len(ends) == len(set(ends)):
                counts[k] += 1
    return IntPoly(counts)


def test_intpoly():
    p = IntPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert str(IntPoly([1, 6, 9, 4])) == "1 + 6x + 9x^2 + 4x^3"
    assert p * p == IntPoly([1, 4, 4]) and p(3) == 7
    assert str(IntPoly()) == "0"


def test_positivity_reports():
    assert e_positivity(csf_colorings(complete(4))).verdict == "e-positive"
    net = e_positivity(csf_colorings(generalized_net(4)))
    assert net.verdict == "not-e-positive"
    assert net.witnesses == [Partition((4, 3))]
    assert net.negative[Partition((4, 3))][0] == -6
    assert e_positivity(csf_colorings(claw())).verdict == "not-e-positive"


def test_closed_form_values():
    f = net_closed_form(3)
    assert f == (e(6) * 12 + e(5, 1) * 18 + e(4, 2) * 12 + e(4, 1, 1) * 6
                 + e(3, 2, 1) * 6 - e(3, 3) * 6)
    assert net_closed_form(4)[(4, 3)][0] == -6
    for n in range(3, 9):
        assert net_closed_form(n)[(n, 2, 1)][0] == 6 * factorial(n - 2)
    with pytest.raises(ContractError):
        net_closed_form(2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_closed_form_matches_enumeration(n):
    assert convert(csf_colorings(generalized_net(n)), Basis.E) == net_closed_form(n)


def test_monomial_formula_examples():
    f = net_monomial_formulas(3)
    assert f[Partition((2, 1, 1, 1, 1))] == 216
    assert net_monomial_formulas(4)[Partition((2, 1, 1, 1, 1, 1))] == 1440


def test_polynomial_examples():
    assert matching_polynomial(complete(2)) == IntPoly([1, 1])
    assert matching_polynomial(spider((2, 2, 2))) == IntPoly([1, 6, 9, 4])
    assert matching_polynomial(path(4)) == IntPoly([1, 3, 1])
    assert independence_polynomial(complete(5)) == IntPoly([1, 5])
    assert independence_polynomial(generalized_net(3)) == IntPoly([1, 6, 9, 4])
    assert independence_polynomial(edgeless(4)) == IntPoly([1, 4, 6, 4, 1])


def test_from_csf_examples():
    assert independence_poly_from_csf(csf_colorings(generalized_net(3)))[2] == 9
    assert independence_poly_from_csf(csf_colorings(complete(3)), 3) == IntPoly([1, 3])
    assert independence_poly_from_csf(csf_colorings(path(3)), 3) == IntPoly([1, 3, 1])


def test_from_csf_rejects_non_divisible_input():
    bogus = SymFunc(Basis.M, 3, {Partition((2, 1)): 1, Partition((1, 1, 1)): 5})
    with pytest.raises(InconsistentInputError):
        independence_poly_from_csf(bogus)
    with pytest.raises(ContractError):
        independence_poly_from_csf(csf_colorings(path(3)), 4)


@given(small_graphs(max_n=7))
def test_independence_from_csf_property(g):
    assert independence_poly_from_csf(csf_colorings(g), g.n) == independence_polynomial(g)


@given(small_graphs(max_n=7))
def test_matching_polynomial_brute_force(g):
    assert matching_polynomial(g) == brute_matchings(g)


@given(small_graphs(max_n=6))
def test_line_graph_bridge(g):
    assert independence_polynomial(line_graph(g), max_vertices=15) == matching_polynomial(g)


def test_generalized_spider_enumeration():
    legs = generalized_spider_legs(6)
    assert (3, ()) in legs and (3, (1, 1, 1)) in legs and (3, (3,)) in legs
    assert all(len(l) <= body and body + sum(l) <= 6 for body, l in legs)
    assert len(legs) == len(set(legs))


def test_uniqueness_examples():
    rep = uniqueness_scan([complete(3), path(3)])
    assert rep.ok and rep.fingerprints_distinct
    assert independence_polynomial(complete(3)) != independence_polynomial(path(3))
    dup = uniqueness_scan([("a", path(4)), ("b", Graph(4, [(1, 3), (3, 2), (2, 4)]))])
    assert dup.isomorphic_duplicates == [("a", "b")] and dup.ok


def test_uniqueness_detects_csf_collision():
    # the only pair of non-isomorphic 5-vertex graphs sharing a CSF
    g = Graph(5, [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4)])
    h = Graph(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4)])
    rep = uniqueness_scan([("g", g), ("h", h)])
    assert rep.fingerprint_collisions == [("g", "h")]
    assert rep.csf_collisions == [("g", "h")] and not rep.ok


def test_generalized_spiders_unique_up_to_nine():
    rep = uniqueness_scan(generalized_spiders(9))
    assert rep.ok and rep.fingerprints_distinct and rep.count == 67
