"""Positivity reports, the generalized-net closed form, and polynomial invariants of graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from . import config as _config
from .chromatic import csf_colorings
from .errors import ContractError, InconsistentInputError, UnsupportedSizeError
from .graph import Graph, are_isomorphic, generalized_spider
from .partition import Partition
from .symfunc import Basis, SymFunc, TPoly, convert


class IntPoly:
    """Integer polynomial in ``x``, stored low degree first with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


# ---------------------------------------------------------------------------
# e-positivity
# ---------------------------------------------------------------------------

@dataclass
class PositivityReport:
    coefficients: dict[Partition, TPoly]
    negative: dict[Partition, TPoly] = field(default_factory=dict)
    basis: str = "e"

    @property
    def verdict(self) -> str:
        return "not-e-positive" if self.negative else "e-positive"

    @property
    def positive(self) -> bool:
        return not self.negative

    @property
    def witnesses(self) -> list[Partition]:
        return list(self.negative)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "verdict": self.verdict,
            "coefficients": [{"partition": list(lam), "coeff": c.to_strings()}
                             for lam, c in self.coefficients.items()],
            "witnesses": [{"partition": list(lam), "coeff": c.to_strings()}
                          for lam, c in self.negative.items()],
        }


def e_positivity(f: SymFunc) -> PositivityReport:
    """Expand in the elementary basis and flag every coefficient with a negative term."""
    g = convert(f, Basis.E)
    coeffs = dict(g.items())
    negative = {lam: c for lam, c in coeffs.items() if any(x < 0 for x in c)}
    return PositivityReport(coeffs, negative)


# ---------------------------------------------------------------------------
# Generalized nets
# ---------------------------------------------------------------------------

def _hook(total: int, *head: int) -> Partition:
    return Partition(tuple(head) + (1,) * (total - sum(head)))


def net_closed_form(n: int) -> SymFunc:
    """Elementary expansion of the CSF of ``K_n`` with three pendant satellites."""
    if n < 3:
        raise ContractError("generalized nets need a body of size n >= 3")
    f = factorial
    terms = {
        Partition((n + 3,)): (n + 3) * f(n - 1),
        Partition((n + 2, 1)): 3 * (n * n - 3) * f(n - 2),
        Partition((n + 1, 2)): 6 * (n - 1) * f(n - 3),
        Partition((n + 1, 1, 1)): 3 * (n * n - 2 * n - 1) * f(n - 2),
        Partition((n, 2, 1)): 6 * f(n - 2),
        Partition((n, 3)): -6 * f(n - 3),
        Partition((n, 1, 1, 1)): (n - 3) * f(n - 1),
    }
    return SymFunc(Basis.E, n + 3, terms)


def net_monomial_formulas(n: int) -> dict[Partition, int]:
    """Counts of proper colorings of the generalized net by class-size type."""
    if n < 3:
        raise ContractError("generalized nets need a body of size n >= 3")
    f = factorial
    total = n + 3
    return {
        _hook(total): f(n + 3),
        _hook(total, 2): 3 * n * f(n + 1),
        _hook(total, 3): (3 * n - 5) * f(n),
        _hook(total, 4): (n - 3) * f(n - 1),
        _hook(total, 2, 2): 6 * (n * n - 2 * n + 2) * f(n - 1),
        _hook(total, 3, 2): 3 * (n * n - 4 * n + 5) * f(n - 2),
        _hook(total, 2, 2, 2): 6 * (n ** 3 - 6 * n * n + 14 * n - 13) * f(n - 3),
    }


# ---------------------------------------------------------------------------
# Matching and independence polynomials
# ---------------------------------------------------------------------------

def matching_polynomial(g: Graph, max_edges: int | None = None) -> IntPoly:
    """``sum_k m_k x^k`` with ``m_k`` the number of k-edge matchings."""
    cap = _config.current().max_edges if max_edges is None else max_edges
    if g.m > cap:
        raise UnsupportedSizeError("edge count", g.m, cap)
    edges = g.edges
    counts = [0] * (g.n // 2 + 1)

    def go(i: int, covered: int, k: int) -> None:
        counts[k] += 1
        for j in range(i, len(edges)):
            u, v = edges[j]
            if covered >> u & 1 or covered >> v & 1:
                continue
            go(j + 1, covered | (1 << u) | (1 << v), k + 1)

    go(0, 0, 0)
    return IntPoly(counts)


def independence_polynomial(g: Graph, max_vertices: int | None = None) -> IntPoly:
    """``sum_i Phi_i x^i`` with ``Phi_i`` the number of independent sets of size i."""
    cap = _config.current().max_vertices if max_vertices is None else max_vertices
    if g.n > cap:
        raise UnsupportedSizeError("vertex count", g.n, cap)
    counts = [0] * (g.n + 1)

    def go(v: int, blocked: int, k: int) -> None:
        if v > g.n:
            counts[k] += 1
            return
        go(v + 1, blocked, k)
        if not blocked >> v & 1:
            go(v + 1, blocked | g.adj[v], k + 1)

    go(1, 0, 0)
    return IntPoly(counts)


def independence_poly_from_csf(f: SymFunc, n: int | None = None) -> IntPoly:
    """Read off ``Phi_k`` as ``[m_(k,1^(n-k))] / (n-k)!``; the division must be exact."""
    if f.basis is not Basis.M:
        f = convert(f, Basis.M)
    n = f.degree if n is None else n
    if n != f.degree:
        raise ContractError(f"function has degree {f.degree}, expected {n}")
    if not f.is_constant():
        raise ContractError("expected constant (t-free) coefficients")
    out = [1]
    for k in range(1, n + 1):
        c = f[_hook(n, k)][0]
        q, r = divmod(c, factorial(n - k))
        if r or q != int(q):
            raise InconsistentInputError(
                f"coefficient {c} of m_{_hook(n, k)} is not divisible by {n - k}!")
        out.append(int(q))
    return IntPoly(out)


# ---------------------------------------------------------------------------
# Uniqueness scans
# ---------------------------------------------------------------------------

def generalized_spider_legs(max_vertices: int) -> list[tuple[int, tuple[int, ...]]]:
    """``(body, legs)`` pairs, one per leg multiset, with at most ``max_vertices`` vertices.

    Legs are listed in weakly decreasing order; the leg-free clique is included.
    """
    out = []

    def multisets(budget: int, largest: int, slots: int):
        yield ()
        if slots == 0:
            return
        for first in range(min(budget, largest), 0, -1):
            for rest in multisets(budget - first, first, slots - 1):
                yield (first,) + rest

    for body in range(3, max_vertices + 1):
        for legs in multisets(max_vertices - body, max_vertices, body):
            out.append((body, legs))
    return out


def generalized_spiders(max_vertices: int) -> list[tuple[str, Graph]]:
    return [(f"gspider({body};{','.join(map(str, legs))})", generalized_spider(body, legs))
            for body, legs in generalized_spider_legs(max_vertices)]


@dataclass
class UniquenessReport:
    count: int
    fingerprint_collisions: list[tuple[str, str]] = field(default_factory=list)
    isomorphic_duplicates: list[tuple[str, str]] = field(default_factory=list)
    csf_collisions: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.csf_collisions

    @property
    def fingerprints_distinct(self) -> bool:
        return not self.fingerprint_collisions

    def to_json(self) -> dict:
        return {
            "graphs": self.count,
            "ok": self.ok,
            "fingerprints_distinct": self.fingerprints_distinct,
            "fingerprint_collisions": [list(p) for p in self.fingerprint_collisions],
            "isomorphic_duplicates": [list(p) for p in self.isomorphic_duplicates],
            "csf_collisions": [list(p) for p in self.csf_collisions],
        }


def uniqueness_scan(graphs: Sequence[Graph | tuple[str, Graph]]) -> UniquenessReport:
    """Group by independence polynomial, then compare full CSFs inside each group.

    A pair with equal independence polynomials is a fingerprint collision;
    such a pair is then either isomorphic (a duplicate) or, if the CSFs also
    agree, a genuine CSF collision.
    """
    named = [(x if isinstance(x, tuple) else (f"#{i}", x)) for i, x in enumerate(graphs)]
    buckets: dict[tuple, list[tuple[str, Graph]]] = {}
    for name, g in named:
        key = (g.n, independence_polynomial(g, max_vertices=max(g.n, 1)).coeffs)
        buckets.setdefault(key, []).append((name, g))
    report = UniquenessReport(len(named))
    for group in buckets.values():
        if len(group) < 2:
            continue
        csfs = {name: csf_colorings(g, max_vertices=g.n) for name, g in group}
        for (na, ga), (nb, gb) in combinations(group, 2):
            if are_isomorphic(ga, gb):
                report.isomorphic_duplicates.append((na, nb))
                continue
            report.fingerprint_collisions.append((na, nb))
            if csfs[na] == csfs[nb]:
                report.csf_collisions.append((na, nb))
    return report
