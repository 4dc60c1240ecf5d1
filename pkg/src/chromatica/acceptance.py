"""The twelve end-to-end acceptance checks, shared by the test suite and ``chromatica selftest``."""
from __future__ import annotations

import random
import time
from math import factorial
from dataclasses import dataclass, field
from typing import Callable

from . import config as _config
from .analysis import (generalized_spiders, independence_poly_from_csf,
                       independence_polynomial, matching_polynomial, net_closed_form,
                       net_monomial_formulas, uniqueness_scan)
from .chromatic import csf_colorings, csf_subsets, product_check, qcsf_colorings
from .graph import (Graph, IntervalSeq, are_isomorphic, claw, complete, cycle, edgeless,
                    generalized_net, generalized_spider, horseshoe_crab_seqs,
                    is_claw_free, is_p4_sparse, line_graph, nonisomorphic_trees, nuig, path,
                    spider)
from .partition import Partition
from .symfunc import Basis, TPoly, convert, evaluate_t
from .tableaux import (dominance_checks, e_coefficients, palindromic, qcsf_tableaux, unimodal,
                       verify_injection)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    data: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.title} ({self.seconds:.1f}s) {self.detail}".rstrip()

    def to_json(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "data": self.data, "seconds": round(self.seconds, 3)}


def _rng(offset: int = 0) -> random.Random:
    return random.Random(_config.current().seed + offset)


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    density = rng.uniform(0.2, 0.8) if density is None else density
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
                     if rng.random() < density])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n)
        if g.is_connected():
            return g


def random_interval_seq(rng: random.Random, n: int) -> IntervalSeq:
    m, low = [], 1
    for i in range(1, n):
        low = max(low, i)
        value = rng.randint(low, n)
        m.append(value)
        low = value
    return IntervalSeq(tuple(m))


def named_family_instances(max_vertices: int = 7) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    for n in range(1, max_vertices + 1):
        out += [(f"K{n}", complete(n)), (f"P{n}", path(n)), (f"edgeless{n}", edgeless(n))]
        if n >= 3:
            out.append((f"C{n}", cycle(n)))
    out.append(("claw", claw()))
    for n in range(3, max_vertices - 2):
        out.append((f"net{n}", generalized_net(n)))
    for legs_total in range(3, max_vertices):
        for legs in _leg_multisets(legs_total, 3, 4):
            out.append((f"spider{legs}", spider(legs)))
    out += [(name, g) for name, g in generalized_spiders(max_vertices)]
    for n in range(4, max_vertices + 1):
        out += [(f"hcrab{s.m}", nuig(s)) for s in horseshoe_crab_seqs(n)]
    return out


def _leg_multisets(total: int, min_legs: int, max_legs: int) -> list[tuple[int, ...]]:
    out = []

    def rec(left: int, largest: int, acc: tuple):
        if left == 0:
            if min_legs <= len(acc) <= max_legs:
                out.append(acc)
            return
        if len(acc) == max_legs:
            return
        for first in range(min(left, largest), 0, -1):
            rec(left - first, first, acc + (first,))

    rec(total, total, ())
    return out


def interval_test_set(max_n: int = 7, random_count: int = 100) -> list[IntervalSeq]:
    """All horseshoe crabs with ``n <= max_n`` plus ``random_count`` further distinct sequences."""
    seqs = {s.m: s for n in range(4, max_n + 1) for s in horseshoe_crab_seqs(n)}
    target = len(seqs) + random_count
    rng = _rng(5)
    while len(seqs) < target:
        s = random_interval_seq(rng, rng.randint(2, max_n))
        seqs.setdefault(s.m, s)
    return list(seqs.values())


# ---------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    bad = []
    for n in (3, 4, 5, 6):
        got = convert(csf_colorings(generalized_net(n)), Basis.E)
        if got != net_closed_form(n):
            bad.append(n)
        elif got[Partition((n, 3))] != TPoly.const(-6 * factorial(n - 3)):
            bad.append(n)
    return CriterionResult(1, "generalized-net closed form n=3..6", not bad,
                           f"mismatch at n={bad}" if bad else "exact match, e_(n,3) = -6(n-3)!")


def criterion_2() -> CriterionResult:
    bad = []
    for n in (3, 4, 5):
        f = csf_colorings(generalized_net(n))
        expected = net_monomial_formulas(n)
        for lam, value in expected.items():
            if f[lam] != TPoly.const(value):
                bad.append((n, str(lam), str(f[lam]), value))
        if not set(f.support()) <= set(expected):
            bad.append((n, "extra support", [str(x) for x in f.support()]))
    return CriterionResult(2, "seven monomial coefficient formulas n=3..5", not bad,
                           f"{bad[:3]}" if bad else "all seven formulas exact")


def criterion_3(random_count: int = 200) -> CriterionResult:
    rng = _rng(3)
    graphs = [(f"random#{i}", random_connected_graph(rng, rng.randint(1, 7))) for i in range(random_count)]
    graphs += named_family_instances(7)
    bad = [name for name, g in graphs if convert(csf_colorings(g), Basis.P) != csf_subsets(g)]
    return CriterionResult(3, "colorings engine = edge-subset engine", not bad,
                           f"{len(graphs)} graphs, failures {bad[:5]}" if bad else f"{len(graphs)} graphs agree")


def criterion_4(pairs: int = 50, nuig_pairs: int = 30) -> CriterionResult:
    rng = _rng(4)
    bad = []
    for i in range(pairs):
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 5))
        if not product_check(g, h):
            bad.append(("plain", g.to_json(), h.to_json()))
    for i in range(nuig_pairs):
        g = nuig(random_interval_seq(rng, rng.randint(2, 5)))
        h = nuig(random_interval_seq(rng, rng.randint(2, 5)))
        if not product_check(g, h):
            bad.append(("t-refined", g.to_json(), h.to_json()))
    return CriterionResult(4, "product rule for disjoint unions (plain and t-refined)", not bad,
                           f"failures {bad[:2]}" if bad else f"{pairs} random + {nuig_pairs} interval pairs")


def criterion_5() -> CriterionResult:
    seqs = interval_test_set()
    bad = []
    for s in seqs:
        by_tableaux = convert(qcsf_tableaux(s), Basis.M)
        by_colorings = qcsf_colorings(s)
        if by_tableaux != by_colorings:
            bad.append(s.m)
        elif evaluate_t(by_tableaux, 1) != csf_colorings(nuig(s)):
            bad.append(s.m)
    return CriterionResult(5, "tableaux expansion = ascent-weighted colorings", not bad,
                           f"failures {bad[:5]}" if bad else f"{len(seqs)} sequences agree")


def criterion_6() -> CriterionResult:
    seqs = interval_test_set()
    bad = [s.m for s in seqs if not (palindromic(s) and unimodal(s))]
    return CriterionResult(6, "palindromic and unimodal Schur coefficients", not bad,
                           f"failures {bad[:5]}" if bad else f"{len(seqs)} sequences")


def _strictly_positive_on_support(poly: TPoly) -> bool:
    nz = [i for i, c in enumerate(poly) if c]
    return all(poly[i] > 0 for i in range(nz[0], nz[-1] + 1)) if nz else True


def criterion_7() -> CriterionResult:
    bad, hook_status = [], {}
    for n in (6, 7, 8):
        asserted = [Partition((n,)), Partition((n - 2, 2)), Partition((n - 2, 1, 1)),
                    Partition((n - 3, 3)), Partition((n - 3, 2, 1))]
        for s in horseshoe_crab_seqs(n):
            coeffs = e_coefficients(s)
            for lam in asserted:
                if not coeffs.get(lam, TPoly()).is_nonnegative():
                    bad.append((s.m, str(lam)))
            if not _strictly_positive_on_support(coeffs.get(Partition((n,)), TPoly())):
                bad.append((s.m, "E_(n) has an interior zero"))
            hook = coeffs.get(Partition((n - 1, 1)), TPoly())
            hook_status[str(s)] = "nonnegative" if hook.is_nonnegative() else f"negative: {hook}"
    negative_hooks = [k for k, v in hook_status.items() if v != "nonnegative"]
    detail = (f"failures {bad[:5]}" if bad else "five coefficients nonnegative") + \
        f"; E_(n-1,1) negative on {len(negative_hooks)} of {len(hook_status)} crabs (reported only)"
    return CriterionResult(7, "positivity ladder for horseshoe crabs n=6..8", not bad, detail,
                           {"e_n_minus_1_1": hook_status})


def criterion_8() -> CriterionResult:
    bad, info = [], {}
    for n in (6, 7, 8):
        for s in horseshoe_crab_seqs(n):
            connected = s.bound(2) >= 3 and s.bound(3) >= 4
            eta = verify_injection(s, "eta")
            if not eta.ok:
                bad.append((s.m, "eta"))
            checks = dominance_checks(s)
            for key in ("n-2,2", "n-2,1,1", "n-3,3"):
                if not checks[key].ok:
                    bad.append((s.m, f"counting {key}"))
            if connected:
                for name in ("psi", "xi"):
                    rep = verify_injection(s, name)
                    if not rep.ok:
                        bad.append((s.m, name))
                if not checks["n-3,3 shifted"].ok:
                    bad.append((s.m, "counting n-3,3 shifted"))
            else:
                info[str(s)] = {"psi_map_ok": verify_injection(s, "psi").map_ok,
                                "shifted_counting_ok": checks["n-3,3 shifted"].ok}
    return CriterionResult(8, "injections eta, psi, xi and counting dominance n=6..8", not bad,
                           f"failures {bad[:5]}" if bad else
                           "eta on all crabs; psi, xi on connected crabs; same-weight counts on all",
                           {"disconnected": info})


def criterion_9() -> CriterionResult:
    graphs = generalized_spiders(9)
    report = uniqueness_scan(graphs)
    ok = report.ok and report.fingerprints_distinct and not report.isomorphic_duplicates
    return CriterionResult(9, "generalized spiders up to 9 vertices have distinct CSFs", ok,
                           f"{report.count} graphs, independence polynomials pairwise distinct"
                           if ok else str(report.to_json()))


def criterion_10() -> CriterionResult:
    bad = [n for n in range(3, 8)
           if not (is_claw_free(generalized_net(n)) and is_p4_sparse(generalized_net(n)))]
    if is_claw_free(claw()):
        bad.append("claw")
    if is_p4_sparse(path(5)):
        bad.append("P5")
    return CriterionResult(10, "claw-free / P4-sparse predicates", not bad,
                           f"failures {bad}" if bad else "nets n=3..7 claw-free and P4-sparse; claw, P5 rejected")


def criterion_11(random_count: int = 50) -> CriterionResult:
    rng = _rng(11)
    graphs = named_family_instances(7)
    graphs += [(f"random#{i}", random_graph(rng, rng.randint(1, 7))) for i in range(random_count)]
    bad = []
    for name, g in graphs:
        try:
            if independence_poly_from_csf(csf_colorings(g), g.n) != independence_polynomial(g):
                bad.append(name)
        except Exception as exc:  # divisibility failure is a criterion failure, not a crash
            bad.append(f"{name}: {exc}")
    return CriterionResult(11, "independence polynomial recovered from the CSF", not bad,
                           f"failures {bad[:5]}" if bad else f"{len(graphs)} graphs, exact divisibility")


def criterion_12() -> CriterionResult:
    bad = []
    spiders_checked = 0
    for total in range(3, 9):
        for legs in _leg_multisets(total, 3, 4):
            spiders_checked += 1
            lg = line_graph(spider(legs))
            target = generalized_spider(len(legs), [x - 1 for x in legs])
            if not are_isomorphic(lg, target):
                bad.append(("line graph", legs))
    trees = [t for n in range(1, 10) for t in nonisomorphic_trees(n)]
    for t in trees:
        if independence_polynomial(line_graph(t)) != matching_polynomial(t):
            bad.append(("matching", t.to_json()))
    return CriterionResult(12, "line graphs of spiders and matching polynomials", not bad,
                           f"failures {bad[:3]}" if bad else
                           f"{spiders_checked} spiders, {len(trees)} trees")


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12,
}


def run_criterion(number: int) -> CriterionResult:
    start = time.perf_counter()
    try:
        result = CRITERIA[number]()
    except Exception as exc:
        result = CriterionResult(number, f"criterion {number}", False, f"raised {type(exc).__name__}: {exc}")
    result.seconds = time.perf_counter() - start
    return result


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(k) for k in (numbers or sorted(CRITERIA))]
