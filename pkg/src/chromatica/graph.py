"""Labeled simple graphs and the graph families built around clique bodies.

Vertices are always ``1..n``.  The labeling matters for the ascent statistic
and for natural unit interval graphs, so constructors fix it:

* spiders: vertex 1 is the center, legs follow in order;
* generalized spiders/nets: body ``1..n`` first, leg vertices after, each leg
  numbered outward from its body vertex;
* line graphs: one vertex per edge, in lexicographic edge order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidFamilyError, UnsupportedSizeError

ISOMORPHISM_CAP = 12


class Graph:
    """Simple undirected graph on vertices ``1..n``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        adj = [0] * (n + 1)
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 1..{n}")
            a, b = min(u, v), max(u, v)
            norm.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.adj: tuple[int, ...] = tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in self.vertices if row >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in self.vertices]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1 << 1
        frontier = [1]
        while frontier:
            v = frontier.pop()
            new = self.adj[v] & ~seen
            seen |= new
            frontier.extend(u for u in self.vertices if new >> u & 1)
        return all(seen >> v & 1 for v in self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], data["edges"])


@dataclass(frozen=True)
class IntervalSeq:
    """Sequence ``m = (m_1, ..., m_{n-1})`` defining a natural unit interval order.

    ``i <_P j`` iff ``m_i < j``; ``i < j`` are incomparable iff ``j <= m_i``.
    """

    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "m", m)
        n = len(m) + 1
        for i, mi in enumerate(m, start=1):
            if not i <= mi <= n:
                raise InvalidFamilyError(f"need {i} <= m_{i} <= {n}, got m_{i} = {mi}")
            if i > 1 and m[i - 2] > mi:
                raise InvalidFamilyError(f"sequence must be non-decreasing: {m}")

    @classmethod
    def parse(cls, text: str) -> "IntervalSeq":
        return cls(tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x))

    @property
    def n(self) -> int:
        return len(self.m) + 1

    def bound(self, i: int) -> int:
        """``m_i`` with the convention ``m_n = n``."""
        return self.m[i - 1] if i < self.n else self.n

    def less(self, a: int, b: int) -> bool:
        """``a <_P b``."""
        return a < b and self.bound(a) < b

    def comparable(self, a: int, b: int) -> bool:
        return self.less(a, b) or self.less(b, a)

    def __str__(self) -> str:
        return ",".join(map(str, self.m))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyError("complete graph needs n >= 1")
    return Graph(n, combinations(range(1, n + 1), 2))


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def claw() -> Graph:
    return spider((1, 1, 1))


def _attach_paths(g_edges: list, start: int, anchors_and_lengths) -> int:
    nxt = start
    for anchor, length in anchors_and_lengths:
        prev = anchor
        for _ in range(length):
            g_edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt - 1


def spider(legs: Sequence[int]) -> Graph:
    """Tree with center 1 and paths of the given lengths hanging off it."""
    legs = tuple(int(x) for x in legs)
    if len(legs) < 3 or any(x < 1 for x in legs):
        raise InvalidFamilyError(f"a spider needs at least 3 legs of positive length, got {legs}")
    edges: list = []
    last = _attach_paths(edges, 2, ((1, length) for length in legs))
    return Graph(last, edges)


def generalized_spider(n: int, legs: Sequence[int]) -> Graph:
    """``K_n`` with a path of length ``legs[k]`` attached at body vertex ``k+1``."""
    legs = tuple(int(x) for x in legs)
    if n < 3:
        raise InvalidFamilyError("generalized spider needs a body of size n >= 3")
    if any(x < 0 for x in legs):
        raise InvalidFamilyError("leg lengths must be nonnegative")
    nonzero = [x for x in legs if x]
    if len(legs) > n and any(legs[n:]) or len(nonzero) > n:
        raise InvalidFamilyError(f"{len(nonzero)} legs do not fit on a body of size {n}")
    edges = list(combinations(range(1, n + 1), 2))
    last = _attach_paths(edges, n + 1, ((k + 1, length) for k, length in enumerate(legs) if length))
    return Graph(max(last, n), edges)


def generalized_net(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyError("generalized net needs n >= 3")
    return generalized_spider(n, (1, 1, 1))


def nuig(seq: IntervalSeq | Sequence[int]) -> Graph:
    """Incomparability graph of the natural unit interval order ``P(m)``."""
    if not isinstance(seq, IntervalSeq):
        seq = IntervalSeq(tuple(seq))
    n = seq.n
    return Graph(n, ((i, j) for i in range(1, n) for j in range(i + 1, seq.m[i - 1] + 1)))


def horseshoe_crab_seq(m2: int, m3: int, n: int) -> IntervalSeq:
    if n < 4:
        raise InvalidFamilyError("horseshoe crab needs n >= 4")
    return IntervalSeq((2, m2, m3) + (n,) * (n - 4))


def horseshoe_crab(m2: int, m3: int, n: int) -> Graph:
    return nuig(horseshoe_crab_seq(m2, m3, n))


def is_horseshoe_crab_seq(seq: IntervalSeq) -> bool:
    m = seq.m
    return len(m) >= 3 and m[0] == 2 and all(x == seq.n for x in m[3:])


def horseshoe_crab_seqs(n: int, connected_only: bool = False) -> list[IntervalSeq]:
    """Every valid ``(2, m2, m3, n, ..., n)`` for the given ``n``."""
    out = []
    for m2 in range(2, n + 1):
        for m3 in range(max(3, m2), n + 1):
            if connected_only and (m2 < 3 or m3 < 4):
                continue
            out.append(horseshoe_crab_seq(m2, m3, n))
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced on ``vs``, relabeled ``1..k`` in increasing order."""
    vs = sorted(set(vs))
    if any(not 1 <= v <= g.n for v in vs):
        raise ValueError("vertex subset must lie in 1..n")
    index = {v: i + 1 for i, v in enumerate(vs)}
    return Graph(len(vs), ((index[u], index[v]) for u, v in g.edges if u in index and v in index))


def line_graph(g: Graph) -> Graph:
    edges = g.edges
    out = []
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.append((i + 1, j + 1))
    return Graph(len(edges), out)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _induced_degree_signature(g: Graph, vs: Sequence[int]) -> tuple[int, ...]:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return tuple(sorted(bin(g.adj[v] & mask).count("1") for v in vs))


def _is_induced_claw(g: Graph, vs) -> bool:
    return _induced_degree_signature(g, vs) == (1, 1, 1, 3)


def _is_induced_p4(g: Graph, vs) -> bool:
    # three edges on four vertices with degrees 1,1,2,2 is exactly P_4
    return _induced_degree_signature(g, vs) == (1, 1, 2, 2)


def is_claw_free(g: Graph) -> bool:
    return not any(_is_induced_claw(g, vs) for vs in combinations(g.vertices, 4))


def is_p4_free(g: Graph) -> bool:
    return not any(_is_induced_p4(g, vs) for vs in combinations(g.vertices, 4))


def is_p4_sparse(g: Graph) -> bool:
    """Every 5-subset of vertices induces at most one ``P_4``."""
    p4 = {vs for vs in combinations(g.vertices, 4) if _is_induced_p4(g, vs)}
    if len(p4) < 2:
        return True
    for five in combinations(g.vertices, 5):
        if sum(1 for four in combinations(five, 4) if four in p4) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible maps."""
    for graph in (g, h):
        if graph.n > ISOMORPHISM_CAP:
            raise UnsupportedSizeError("vertex count", graph.n, ISOMORPHISM_CAP)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    if n == 0:
        return True
    gdeg, hdeg = g.degrees(), h.degrees()

    def signature(graph: Graph, deg: list[int], v: int) -> tuple:
        return (deg[v - 1], tuple(sorted(deg[u - 1] for u in graph.neighbors(v))))

    gsig = [signature(g, gdeg, v) for v in g.vertices]
    hsig = [signature(h, hdeg, v) for v in h.vertices]
    if sorted(gsig) != sorted(hsig):
        return False
    # most constrained vertices first: high degree, then BFS-ish adjacency
    order = sorted(g.vertices, key=lambda v: (-gdeg[v - 1], v))
    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in h.vertices:
            if used >> w & 1 or hsig[w - 1] != gsig[v - 1]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, mapping[u]) for u in order[:k]):
                mapping[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
                del mapping[v]
        return False

    return extend(0)


def interval_seq_of(g: Graph) -> IntervalSeq | None:
    """The sequence ``m`` with ``g == nuig(m)``, or ``None`` if the labeling is not natural."""
    if g.n == 0:
        return None
    m = []
    for i in range(1, g.n):
        higher = [j for j in g.neighbors(i) if j > i]
        m.append(max(higher, default=i))
    try:
        seq = IntervalSeq(tuple(m))
    except InvalidFamilyError:
        return None
    return seq if nuig(seq) == g else None


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

def _tree_centers(g: Graph) -> list[int]:
    degree = {v: g.degree(v) for v in g.vertices}
    layer = [v for v in g.vertices if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in g.neighbors(v):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism-invariant encoding of a tree (nested parentheses rooted at a center)."""
    if g.n == 0:
        return ""

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(u, v) for u in g.neighbors(v) if u != parent)) + ")"

    return min(encode(c, 0) for c in _tree_centers(g))


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return []
    level = [Graph(1)]
    for size in range(2, n + 1):
        seen: dict[str, Graph] = {}
        for t in level:
            for v in t.vertices:
                child = Graph(size, list(t.edges) + [(v, size)])
                seen.setdefault(tree_canonical_form(child), child)
        level = list(seen.values())
    return level
