"""Chromatic symmetric functions and their t-refinement.

Two independent routes to ``X_G``:

* :func:`csf_colorings` counts proper colorings by class sizes (monomial basis);
* :func:`csf_subsets` sums ``(-1)^|S| p_lambda(S)`` over edge subsets (power-sum basis).

Monomial coefficient convention: the coefficient of ``m_lam`` is the number of
proper colorings using colors ``1..len(lam)`` in which color ``c`` is used
exactly ``lam[c-1]`` times.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import config as _config
from .errors import NotSymmetricError, UnsupportedSizeError
from .graph import Graph, IntervalSeq, disjoint_union, interval_seq_of, nuig
from .partition import Partition, partitions_of
from .symfunc import Basis, SymFunc, TPoly, convert, multiply


def _check_vertices(g: Graph, cap: int | None) -> None:
    cap = _config.current().max_vertices if cap is None else cap
    if g.n > cap:
        raise UnsupportedSizeError("vertex count", g.n, cap)


def _check_edges(g: Graph, cap: int | None) -> None:
    cap = _config.current().max_edges if cap is None else cap
    if g.m > cap:
        raise UnsupportedSizeError("edge count", g.m, cap)


def stable_partition_types(g: Graph) -> Counter:
    """Count partitions of ``V`` into independent sets, keyed by block-size type."""
    n = g.n
    types: Counter = Counter()
    blocks: list[list[int]] = []  # [bitmask, size]

    def place(v: int) -> None:
        if v > n:
            types[Partition.from_unsorted(b[1] for b in blocks)] += 1
            return
        row = g.adj[v]
        for b in blocks:
            if not b[0] & row:
                b[0] |= 1 << v
                b[1] += 1
                place(v + 1)
                b[0] &= ~(1 << v)
                b[1] -= 1
        blocks.append([1 << v, 1])
        place(v + 1)
        blocks.pop()

    place(1)
    return types


def _multiplicity_factor(lam: Partition) -> int:
    out = 1
    for c in Counter(lam).values():
        out *= factorial(c)
    return out


def csf_colorings(g: Graph, max_vertices: int | None = None) -> SymFunc:
    """``X_G`` in the monomial basis by enumerating colorings."""
    _check_vertices(g, max_vertices)
    # a stable partition of type lam yields prod(mult!) colorings with class
    # sizes exactly lam: blocks of equal size may swap their colors.
    terms = {lam: k * _multiplicity_factor(lam) for lam, k in stable_partition_types(g).items()}
    return SymFunc(Basis.M, g.n, terms)


def csf_subsets(g: Graph, max_edges: int | None = None) -> SymFunc:
    """``X_G = sum_S (-1)^|S| p_lambda(S)`` in the power-sum basis.

    Edge subsets are aggregated by the set partition of ``V`` into components
    they induce, so the sum over all ``2^|E|`` subsets is carried as a signed
    count per connectivity pattern.
    """
    _check_edges(g, max_edges)
    n = g.n
    state: dict[tuple[int, ...], int] = {tuple(range(n)): 1}
    for u, v in g.edges:
        nxt: dict[tuple[int, ...], int] = dict(state)
        for labels, c in state.items():
            a, b = labels[u - 1], labels[v - 1]
            if a == b:
                merged = labels
            else:
                lo, hi = min(a, b), max(a, b)
                merged = _canonical(tuple(lo if x == hi else x for x in labels))
            nxt[merged] = nxt.get(merged, 0) - c
        state = {k: c for k, c in nxt.items() if c}
    terms: dict[Partition, int] = {}
    for labels, c in state.items():
        lam = Partition.from_unsorted(Counter(labels).values())
        terms[lam] = terms.get(lam, 0) + c
    return SymFunc(Basis.P, n, terms)


def _canonical(labels: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def csf_subsets_bruteforce(g: Graph) -> SymFunc:
    """Literal subset-by-subset evaluation of the power-sum expansion, for checking."""
    n = g.n
    terms: dict[Partition, int] = {}
    edges = g.edges
    for mask in range(1 << len(edges)):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        size = 0
        for k, (u, v) in enumerate(edges):
            if mask >> k & 1:
                size += 1
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        lam = Partition.from_unsorted(Counter(find(v) for v in g.vertices).values())
        terms[lam] = terms.get(lam, 0) + (-1) ** size
    return SymFunc(Basis.P, n, terms)


# ---------------------------------------------------------------------------
# t-refinement
# ---------------------------------------------------------------------------

def ascent_weight_poly(g: Graph, sizes: Sequence[int]) -> TPoly:
    """Sum of ``t^asc(k)`` over proper colorings ``k`` with ``|k^-1(c)| = sizes[c-1]``.

    Vertices are colored in label order; memoized on the colors of already
    colored vertices that still have uncolored neighbours, plus the remaining
    per-color budget.
    """
    n = g.n
    sizes = tuple(sizes)
    if sum(sizes) != n:
        return TPoly()
    earlier = [[u for u in g.neighbors(j) if u < j] for j in range(n + 1)]
    last_nbr = [max([u for u in g.neighbors(v)], default=0) for v in range(n + 1)]
    frontiers: list[tuple[int, ...]] = [()]
    for j in range(1, n + 1):
        frontiers.append(tuple(v for v in range(1, j + 1) if last_nbr[v] > j))
    slot = [{v: k for k, v in enumerate(f)} for f in frontiers]

    @lru_cache(maxsize=None)
    def go(j: int, colors: tuple[int, ...], budget: tuple[int, ...]) -> tuple[int, ...]:
        if j > n:
            return (1,)
        prev = slot[j - 1]
        nbr_colors = [colors[prev[u]] for u in earlier[j]]
        out: list[int] = []
        for c, left in enumerate(budget):
            if not left or c in nbr_colors:
                continue
            asc = sum(1 for x in nbr_colors if x < c)
            color_of = {v: colors[k] for v, k in prev.items()}
            color_of[j] = c
            nxt_colors = tuple(color_of[v] for v in frontiers[j])
            sub = go(j + 1, nxt_colors, budget[:c] + (left - 1,) + budget[c + 1:])
            if len(out) < len(sub) + asc:
                out.extend([0] * (len(sub) + asc - len(out)))
            for k, x in enumerate(sub):
                out[k + asc] += x
        return tuple(out)

    return TPoly(go(1, (), sizes))


def qcsf_colorings(g: Graph | IntervalSeq, verify_symmetry: bool = True,
                   max_vertices: int | None = None) -> SymFunc:
    """``X~_G(t)`` in the monomial basis, weighting colorings by ``t^asc``.

    With ``verify_symmetry`` each coefficient is recomputed for one permuted
    class-size pattern and must agree; a mismatch raises
    :class:`NotSymmetricError`.
    """
    if isinstance(g, IntervalSeq):
        g = nuig(g)
    _check_vertices(g, max_vertices)
    terms = {}
    for lam in partitions_of(g.n):
        poly = ascent_weight_poly(g, lam)
        if verify_symmetry and len(set(lam)) > 1:
            permuted = tuple(reversed(lam))
            other = ascent_weight_poly(g, permuted)
            if other != poly:
                raise NotSymmetricError(
                    f"class sizes {tuple(lam)} and {permuted} give different weights",
                    witness={"sizes": list(lam), "permuted": list(permuted),
                             "weight": poly.to_strings(), "permuted_weight": other.to_strings()})
        terms[lam] = poly
    return SymFunc(Basis.M, g.n, terms)


def product_check(g: Graph, h: Graph) -> bool:
    """``X_{G+H} = X_G X_H``; also the t-analogue when both graphs are nuig-labeled."""
    union = disjoint_union(g, h)
    if csf_subsets(union) != multiply(csf_subsets(g), csf_subsets(h)):
        return False
    if interval_seq_of(g) is not None and interval_seq_of(h) is not None:
        lhs = qcsf_colorings(union)
        rhs = multiply(qcsf_colorings(g), qcsf_colorings(h))
        return lhs == rhs
    return True


def csf(g: Graph, method: str = "colorings", basis="m") -> SymFunc:
    """Convenience front end choosing an engine and an output basis."""
    if method == "colorings":
        f = csf_colorings(g)
    elif method == "subsets":
        f = csf_subsets(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    return convert(f, basis)
