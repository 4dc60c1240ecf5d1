"""P-tableaux of natural unit interval orders and the Schur expansion of X~_G(t).

A P-tableau of shape ``lam`` is a filling of the Young diagram (English
notation) by ``1..n``, each used once, whose rows are chains ``a <_P b`` and
in which no cell is strictly ``<_P`` the cell immediately above it.  Its
weight counts incomparable pairs ``a < b`` with ``b`` in a strictly higher
row than ``a``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from . import config as _config
from .errors import IncompleteCaseError, InvalidInputError, UnsupportedSizeError
from .graph import IntervalSeq, is_horseshoe_crab_seq, nuig
from .partition import Partition, partitions_of
from .symfunc import Basis, SymFunc, TPoly, convert


@dataclass(frozen=True)
class PTableau:
    rows: tuple[tuple[int, ...], ...]
    seq: IntervalSeq
    checked: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if len(r)))
        if self.checked:
            problem = self.problem()
            if problem:
                raise InvalidInputError(f"not a P-tableau: {problem}: {self.rows}")

    @property
    def shape(self) -> Partition:
        return Partition.from_unsorted(len(r) for r in self.rows)

    def row_of(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def entry(self, i: int, j: int) -> int | None:
        """1-based ``a_{i,j}`` or ``None`` when the cell is absent."""
        if i - 1 < len(self.rows) and j - 1 < len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    def problem(self) -> str | None:
        """Reason this filling is not a valid P-tableau, or ``None``."""
        seq, rows = self.seq, self.rows
        lengths = [len(r) for r in rows]
        if lengths != sorted(lengths, reverse=True):
            return "row lengths are not weakly decreasing"
        flat = [x for r in rows for x in r]
        if sorted(flat) != list(range(1, seq.n + 1)):
            return "entries are not a permutation of 1..n"
        for r in rows:
            for a, b in zip(r, r[1:]):
                if not seq.less(a, b):
                    return f"row entries {a}, {b} are not a chain"
        for upper, lower in zip(rows, rows[1:]):
            for a, b in zip(upper, lower):
                if seq.less(b, a):
                    return f"{b} sits directly below {a} but {b} <_P {a}"
        return None

    def is_valid(self) -> bool:
        return self.problem() is None

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def inv_weight(tab: PTableau) -> int:
    """Number of incomparable pairs ``a < b`` with ``b`` in an earlier row."""
    seq = tab.seq
    row = tab.row_of()
    n = seq.n
    count = 0
    for a in range(1, n):
        for b in range(a + 1, seq.bound(a) + 1):
            if row[b] < row[a]:
                count += 1
    return count


def _check_size(seq: IntervalSeq, cap: int | None) -> None:
    cap = _config.current().max_vertices if cap is None else cap
    if seq.n > cap:
        raise UnsupportedSizeError("vertex count", seq.n, cap)


@lru_cache(maxsize=None)
def _longest_chain_from(seq: IntervalSeq) -> tuple[int, ...]:
    n = seq.n
    best = [0] * (n + 2)
    for x in range(n, 0, -1):
        best[x] = 1 + max((best[y] for y in range(seq.bound(x) + 1, n + 1)), default=0)
    return tuple(best)


def _fillings(seq: IntervalSeq, shape: Partition, first_only: bool = False) -> Iterator[tuple]:
    n = seq.n
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    chain = _longest_chain_from(seq)
    grid = [[0] * length for length in shape]

    def rec(k: int, used: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        need = shape[r] - c
        left = grid[r][c - 1] if c else 0
        above = grid[r - 1][c] if r else 0
        start = seq.bound(left) + 1 if left else 1
        for x in range(start, n + 1):
            if used >> x & 1 or chain[x] < need:
                continue
            if above and seq.less(x, above):
                continue
            grid[r][c] = x
            yield from rec(k + 1, used | (1 << x))
        grid[r][c] = 0

    yield from rec(0, 0)


def enumerate_tableaux(seq: IntervalSeq, shape, max_vertices: int | None = None) -> list[PTableau]:
    """All P-tableaux of ``shape``, in row-major lexicographic order of entries."""
    _check_size(seq, max_vertices)
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    if shape.n != seq.n:
        return []
    return [PTableau(rows, seq, checked=False) for rows in _fillings(seq, shape)]


def allowed_shapes(seq: IntervalSeq, max_vertices: int | None = None) -> list[Partition]:
    """Shapes admitting at least one P-tableau, in descending lexicographic order."""
    _check_size(seq, max_vertices)
    longest = max(_longest_chain_from(seq)[1:seq.n + 1])
    out = []
    for lam in partitions_of(seq.n):
        if lam[0] > longest:
            continue
        if next(_fillings(seq, lam), None) is not None:
            out.append(lam)
    return out


def weight_counts(seq: IntervalSeq, shape) -> Counter:
    """Number of tableaux of ``shape`` at each weight."""
    return Counter(inv_weight(t) for t in enumerate_tableaux(seq, shape))


def _counter_poly(counts: Counter) -> TPoly:
    if not counts:
        return TPoly()
    out = [0] * (max(counts) + 1)
    for w, c in counts.items():
        out[w] = c
    return TPoly(out)


def qcsf_tableaux(seq: IntervalSeq, max_vertices: int | None = None) -> SymFunc:
    """``X~_G(t) = sum_T t^inv(T) s_shape(T)`` for the incomparability graph of ``P(m)``."""
    _check_size(seq, max_vertices)
    terms = {}
    for lam in allowed_shapes(seq, max_vertices):
        terms[lam] = _counter_poly(weight_counts(seq, lam))
    return SymFunc(Basis.S, seq.n, terms)


def e_coefficients(seq: IntervalSeq, max_vertices: int | None = None) -> dict[Partition, TPoly]:
    """``E_lam(t)`` for every ``lam`` with a nonzero coefficient."""
    return dict(convert(qcsf_tableaux(seq, max_vertices), Basis.E).items())


def edge_count(seq: IntervalSeq) -> int:
    return sum(seq.m[i - 1] - i for i in range(1, seq.n))


def palindromic(seq: IntervalSeq) -> bool:
    """Each Schur coefficient sequence is symmetric about ``|E|``."""
    top = edge_count(seq)
    for _, poly in qcsf_tableaux(seq).items():
        if any(poly[j] != poly[top - j] for j in range(top + 1)) or poly.degree > top:
            return False
    return True


def unimodal(seq: IntervalSeq) -> bool:
    """Each Schur coefficient sequence is weakly increasing up to the middle."""
    top = edge_count(seq)
    for _, poly in qcsf_tableaux(seq).items():
        for i in range(0, (top - 1) // 2 + 1):
            if poly[i + 1] < poly[i]:
                return False
    return True


# ---------------------------------------------------------------------------
# Injections between tableau sets of horseshoe crab graphs
# ---------------------------------------------------------------------------

def _hook(n: int, *head: int) -> Partition:
    return Partition(tuple(head) + (1,) * (n - sum(head)))


def shape_3_2(n: int) -> Partition:
    return _hook(n, 3, 2)


def shape_3_1(n: int) -> Partition:
    return _hook(n, 3)


def shape_2_2_2(n: int) -> Partition:
    return _hook(n, 2, 2, 2)


def shape_2_2(n: int) -> Partition:
    return _hook(n, 2, 2)


def shape_2_1(n: int) -> Partition:
    return _hook(n, 2)


def _require(tab: PTableau, shapes: Sequence[Partition], connected: bool = False) -> None:
    seq = tab.seq
    if not is_horseshoe_crab_seq(seq):
        raise InvalidInputError(f"{seq.m} is not a horseshoe crab sequence")
    if connected and (seq.bound(2) < 3 or seq.bound(3) < 4):
        raise InvalidInputError("this map needs a connected horseshoe crab (m2 >= 3, m3 >= 4)")
    if tab.shape not in shapes:
        raise InvalidInputError(f"shape {tab.shape} is not in the domain {[str(s) for s in shapes]}")
    problem = tab.problem()
    if problem:
        raise InvalidInputError(problem)


def _image(rows: Iterable[Sequence[int]], seq: IntervalSeq) -> PTableau:
    return PTableau(tuple(tuple(r) for r in rows), seq, checked=False)


def injection_eta(tab: PTableau) -> PTableau:
    """Shape ``(3,2,1^{n-5})`` to ``(3,1^{n-3})``: drop ``a_{2,2}`` below the 2."""
    _require(tab, [shape_3_2(tab.seq.n)])
    rows = tab.rows
    return _image([rows[0], rows[1][:1], rows[1][1:]] + list(rows[2:]), tab.seq)


def injection_psi(tab: PTableau) -> PTableau:
    """Shape ``(3,2,1^{n-5})`` to ``(2^3,1^{n-6})``; adds exactly one to the weight.

    ``(1,3,a) / (2,b) / (c) / ...`` becomes ``(3,a) / (2,b) / (1,c) / ...``.
    """
    _require(tab, [shape_3_2(tab.seq.n)])
    rows = tab.rows
    if len(rows) < 3:
        raise InvalidInputError("psi needs n >= 6")
    first, second, third = rows[0], rows[1], rows[2]
    if first[:2] != (1, 3) or second[0] != 2:
        raise IncompleteCaseError(f"unexpected leading cells in {tab}")
    return _image([first[1:], second, (1,) + third] + list(rows[3:]), tab.seq)


XI_BRANCHES = ("two-row", "a21-incomparable", "a21-above-3", "a31-is-2", "a21-is-2")


def xi_branch(tab: PTableau) -> str:
    """Name of the case of the xi map that applies to ``tab``."""
    n = tab.seq.n
    if tab.shape == shape_2_2_2(n):
        return "two-row"
    rows = tab.rows
    if rows[0][:2] != (1, 3):
        raise IncompleteCaseError(f"first row of {tab} does not start 1, 3")
    a21 = rows[1][0]
    a31 = rows[2][0] if len(rows) > 2 else None
    if a21 == 2:
        return "a21-is-2"
    if a31 == 2:
        return "a31-is-2"
    if not tab.seq.less(3, a21):
        return "a21-incomparable"
    return "a21-above-3"


def injection_xi(tab: PTableau, variant: str = "repaired") -> PTableau:
    """``(2^3,1^{n-6}) u (3,1^{n-3})`` to ``(2^2,1^{n-4})``, weight preserving.

    ``variant="literal"`` applies the cell moves exactly as originally described;
    ``"repaired"`` (the default) replaces the two branches whose literal
    moves do not produce valid weight-preserving images.
    """
    n = tab.seq.n
    _require(tab, [shape_2_2_2(n), shape_3_1(n)], connected=True)
    rows = tab.rows
    seq = tab.seq
    branch = xi_branch(tab)
    if branch == "two-row":
        # move a_{3,2} directly above a_{4,1}
        return _image([rows[0], rows[1], rows[2][:1], rows[2][1:]] + list(rows[3:]), seq)
    a13 = rows[0][2]
    a21 = rows[1][0]
    rest = list(rows[2:])
    if branch == "a21-incomparable":
        return _image([(1, a21), (3, a13)] + rest, seq)
    if branch == "a21-above-3":
        return _image([(1, a13), (3, a21)] + rest, seq)
    if variant == "literal":
        if branch == "a31-is-2":
            return _image([(1, 3), (2, a13), (a21,)] + list(rows[3:]), seq)
        return _image([(2, a13), (1, 3)] + rest, seq)
    if variant != "repaired":
        raise ValueError(f"unknown xi variant {variant!r}")
    return _xi_repaired(tab, branch)


def _xi_repaired(tab: PTableau, branch: str) -> PTableau:
    rows, seq = tab.rows, tab.seq
    a13, a21 = rows[0][2], rows[1][0]
    if branch == "a21-is-2":
        # a13 slides down next to 2; 2 <_P a13 since a13 > m3 >= m2
        return _image([(1, 3), (2, a13)] + list(rows[2:]), seq)
    if branch == "a31-is-2":
        # 2 takes the head of the first row; which element joins 1 in row two
        # depends on whether a41 sits above 3 in P
        a41 = rows[3][0]
        if seq.less(3, a41):
            return _image([(2, a13), (1, a41), (3,), (a21,)] + list(rows[4:]), seq)
        return _image([(2, a13), (1, a21), (3,)] + list(rows[3:]), seq)
    raise IncompleteCaseError(f"no repaired rule for branch {branch}")


MAPS: dict[str, Callable[[PTableau], PTableau]] = {
    "eta": injection_eta,
    "psi": injection_psi,
    "xi": injection_xi,
}


# ---------------------------------------------------------------------------
# Exhaustive verification
# ---------------------------------------------------------------------------

@dataclass
class InjectionReport:
    map_name: str
    seq: tuple[int, ...]
    sources: list[str]
    target: str
    shift: int
    source_count: int = 0
    target_count: int = 0
    invalid_targets: list[dict] = field(default_factory=list)
    wrong_shape: list[dict] = field(default_factory=list)
    weight_errors: list[dict] = field(default_factory=list)
    collisions: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    counting_failures: list[dict] = field(default_factory=list)
    branch_counts: dict[str, int] = field(default_factory=dict)

    @property
    def map_ok(self) -> bool:
        return not (self.invalid_targets or self.wrong_shape or self.weight_errors
                    or self.collisions or self.errors)

    @property
    def counting_ok(self) -> bool:
        return not self.counting_failures

    @property
    def ok(self) -> bool:
        return self.counting_ok and (self.map_name == "counting" or self.map_ok)

    def to_json(self) -> dict:
        out = {k: v for k, v in self.__dict__.items()}
        out["seq"] = list(self.seq)
        out["map_ok"] = self.map_ok
        out["counting_ok"] = self.counting_ok
        out["ok"] = self.ok
        return out


def default_domain(map_name: str, n: int) -> tuple[list[Partition], Partition, int]:
    if map_name == "eta":
        return [shape_3_2(n)], shape_3_1(n), 0
    if map_name == "psi":
        return [shape_3_2(n)], shape_2_2_2(n), 1
    if map_name in ("xi", "counting"):
        return [shape_2_2_2(n), shape_3_1(n)], shape_2_2(n), 0
    raise ValueError(f"unknown map {map_name!r}")


def verify_injection(seq: IntervalSeq, map_name: str, sources: Sequence[Partition] | None = None,
                     target: Partition | None = None, shift: int | None = None,
                     limit: int = 20, **map_kwargs) -> InjectionReport:
    """Apply a map to every source tableau and check it is an injection with a fixed weight shift.

    ``map_name="counting"`` skips the explicit map and only checks that, for
    every weight ``w``, there are at least as many target tableaux of weight
    ``w + shift`` as source tableaux of weight ``w``.
    """
    d_sources, d_target, d_shift = default_domain(map_name, seq.n)
    sources = list(sources) if sources is not None else d_sources
    target = target if target is not None else d_target
    shift = d_shift if shift is None else shift
    report = InjectionReport(map_name, seq.m, [str(s) for s in sources], str(target), shift)

    source_weights: Counter = Counter()
    source_tabs = []
    for lam in sources:
        for tab in enumerate_tableaux(seq, lam):
            source_tabs.append(tab)
            source_weights[inv_weight(tab)] += 1
    target_weights = weight_counts(seq, target)
    report.source_count = len(source_tabs)
    report.target_count = sum(target_weights.values())

    for w, c in sorted(source_weights.items()):
        if target_weights.get(w + shift, 0) < c:
            report.counting_failures.append(
                {"weight": w, "sources": c, "targets_at_shifted_weight": target_weights.get(w + shift, 0)})

    if map_name == "counting":
        return report

    fn = MAPS[map_name]
    seen: dict[tuple, PTableau] = {}
    for tab in source_tabs:
        if map_name == "xi":
            branch = xi_branch(tab)
            report.branch_counts[branch] = report.branch_counts.get(branch, 0) + 1
        try:
            img = fn(tab, **map_kwargs)
        except (IncompleteCaseError, InvalidInputError) as exc:
            if len(report.errors) < limit:
                report.errors.append({"source": [list(r) for r in tab.rows], "error": str(exc)})
            continue
        entry = {"source": [list(r) for r in tab.rows], "image": [list(r) for r in img.rows]}
        if img.shape != target:
            if len(report.wrong_shape) < limit:
                report.wrong_shape.append(entry)
            continue
        problem = img.problem()
        if problem:
            if len(report.invalid_targets) < limit:
                report.invalid_targets.append({**entry, "problem": problem})
            continue
        w0, w1 = inv_weight(tab), inv_weight(img)
        if w1 != w0 + shift:
            if len(report.weight_errors) < limit:
                report.weight_errors.append({**entry, "source_weight": w0, "image_weight": w1})
        if img.rows in seen:
            if len(report.collisions) < limit:
                report.collisions.append({**entry, "other_source": [list(r) for r in seen[img.rows].rows]})
        else:
            seen[img.rows] = tab
    return report


def dominance_checks(seq: IntervalSeq) -> dict[str, InjectionReport]:
    """Weight-by-weight tableau counts behind the nonnegativity of E_(n-2,2), E_(n-2,1,1), E_(n-3,3).

    Keys name the coefficient; ``"n-3,3 shifted"`` is the raw +1 shift that
    the explicit map gives, ``"n-3,3"`` the same-weight consequence.
    """
    n = seq.n
    return {
        "n-2,2": verify_injection(seq, "counting", [shape_2_2_2(n), shape_3_1(n)], shape_2_2(n), 0),
        "n-2,1,1": verify_injection(seq, "counting", [shape_3_2(n)], shape_3_1(n), 0),
        "n-3,3 shifted": verify_injection(seq, "counting", [shape_3_2(n)], shape_2_2_2(n), 1),
        "n-3,3": verify_injection(seq, "counting", [shape_3_2(n)], shape_2_2_2(n), 0),
    }
