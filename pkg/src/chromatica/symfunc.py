"""Exact homogeneous symmetric functions in the m, e, p and s bases.

Coefficients are :class:`TPoly` values, polynomials in a formal variable ``t``
with exact rational coefficients.  Plain chromatic symmetric functions use
constant polynomials.

Basis changes go through per-degree transition tables:

* ``e -> m`` and ``p -> m`` multiply out generators in the monomial basis
  (``e_k = m_(1^k)``, ``p_k = m_(k)``);
* ``m -> e`` and ``m -> p`` invert those tables by triangular elimination;
* ``s -> e`` expands the dual Jacobi-Trudi determinant;
* ``e -> s`` inverts that (unitriangular) relationship.
"""
from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Union

from .errors import ContractError, UnsupportedBasisError
from .partition import Partition, conjugate, partitions_of

Scalar = Union[int, Fraction]


def _norm(x) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _parse_scalar(text) -> Scalar:
    if isinstance(text, int):
        return text
    return _norm(Fraction(str(text)))


class TPoly:
    """Polynomial in ``t`` with rational coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "TPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> "TPoly":
        return cls((0,) * power + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == TPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "TPoly":
        other = _as_tpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "TPoly":
        return self + (-_as_tpoly(other))

    def __rsub__(self, other) -> "TPoly":
        return _as_tpoly(other) - self

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TPoly()
            return TPoly(c * other for c in self.coeffs)
        other = _as_tpoly(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _norm(acc)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}" if isinstance(mag, int) else f"({mag}){power}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += sign + body
        return text


def _as_tpoly(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a t-polynomial")


class Basis(str, Enum):
    M = "m"
    E = "e"
    P = "p"
    S = "s"

    @classmethod
    def of(cls, value) -> "Basis":
        if isinstance(value, Basis):
            return value
        return cls(str(value).lower())


class SymFunc:
    """A homogeneous symmetric function tagged with its basis.

    ``terms`` maps partitions of ``degree`` to nonzero :class:`TPoly`
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("basis", "degree", "_terms")

    def __init__(self, basis, degree: int, terms: Mapping = None):
        self.basis = Basis.of(basis)
        self.degree = int(degree)
        clean: dict[Partition, TPoly] = {}
        for lam, coeff in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.n != self.degree:
                raise ContractError(f"{lam} is not a partition of {self.degree}")
            coeff = _as_tpoly(coeff)
            if coeff:
                clean[lam] = clean[lam] + coeff if lam in clean else coeff
                if not clean[lam]:
                    del clean[lam]
        self._terms = clean

    @classmethod
    def zero(cls, basis, degree: int) -> "SymFunc":
        return cls(basis, degree, {})

    @classmethod
    def single(cls, basis, lam, coeff=1) -> "SymFunc":
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return cls(basis, lam.n, {lam: coeff})

    # --- mapping-ish access -------------------------------------------
    def items(self) -> Iterator[tuple[Partition, TPoly]]:
        """Terms in canonical (descending lexicographic) order."""
        for lam in sorted(self._terms, reverse=True):
            yield lam, self._terms[lam]

    def __getitem__(self, lam) -> TPoly:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return self._terms.get(lam, TPoly())

    def __contains__(self, lam) -> bool:
        return Partition(lam) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def support(self) -> list[Partition]:
        return sorted(self._terms, reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.degree == other.degree
        return (self.basis, self.degree, self._terms) == (other.basis, other.degree, other._terms)

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self._terms.items())))

    # --- arithmetic ----------------------------------------------------
    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis or self.degree != other.degree:
            raise ContractError(
                f"cannot combine {self.basis.value}-basis degree {self.degree} with "
                f"{other.basis.value}-basis degree {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        return add(self, other)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return add(self, -other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "SymFunc":
        return self.scale(other)

    def scale(self, c) -> "SymFunc":
        c = _as_tpoly(c)
        return SymFunc(self.basis, self.degree, {k: v * c for k, v in self._terms.items()})

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {k: fn(v) for k, v in self._terms.items()})

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._terms.values())

    def is_constant(self) -> bool:
        return all(c.degree <= 0 for c in self._terms.values())

    # --- conversions / serialization -------------------------------------
    def to(self, basis) -> "SymFunc":
        return convert(self, basis)

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": c.to_strings()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        terms = {}
        for term in data["terms"]:
            terms[Partition(term["partition"])] = TPoly(_parse_scalar(c) for c in term["coeff"])
        return cls(data["basis"], data["degree"], terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (lam, c) in enumerate(self.items()):
            name = f"{self.basis.value}_{{{','.join(map(str, lam))}}}"
            if c.degree == 0:
                k = c[0]
                sign = "-" if k < 0 else "+"
                mag = abs(k)
                body = name if mag == 1 else f"{mag} {name}"
            else:
                sign, body = "+", f"({c}) {name}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"SymFunc({self.basis.value!r}, {self.degree}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------

def add(f: SymFunc, g: SymFunc) -> SymFunc:
    f._check_compatible(g)
    terms = dict(f._terms)
    for lam, c in g._terms.items():
        terms[lam] = terms[lam] + c if lam in terms else c
    return SymFunc(f.basis, f.degree, terms)


def evaluate_t(f: SymFunc, value: Scalar) -> SymFunc:
    """Substitute ``value`` for ``t`` in every coefficient."""
    return SymFunc(f.basis, f.degree, {lam: TPoly.const(c(value)) for lam, c in f._terms.items()})


def _linear_apply(f: SymFunc, table: Mapping[Partition, Mapping[Partition, Scalar]],
                  basis: Basis) -> SymFunc:
    acc: dict[Partition, TPoly] = {}
    for lam, c in f._terms.items():
        for mu, k in table[lam].items():
            piece = c * k
            acc[mu] = acc[mu] + piece if mu in acc else piece
    return SymFunc(basis, f.degree, acc)


def _merge(into: dict, key, value) -> None:
    v = into.get(key, 0) + value
    if v:
        into[key] = v
    else:
        into.pop(key, None)


# ---------------------------------------------------------------------------
# Monomial products
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Expansion of ``m_lam * m_mu`` in the monomial basis.

    The coefficient of ``m_nu`` counts pairs of exponent vectors (alpha, beta)
    with ``alpha + beta = nu``, alpha a rearrangement of ``lam`` and beta a
    rearrangement of ``mu`` (both padded with zeros).
    """
    total = lam.n + mu.n
    out: dict[Partition, int] = {}
    lo = max(len(lam), len(mu))
    hi = len(lam) + len(mu)
    for nu in partitions_of(total):
        if not lo <= len(nu) <= hi:
            continue
        k = _overlay_count(nu, lam, mu)
        if k:
            out[nu] = k
    return out


def _overlay_count(nu: Partition, lam: Partition, mu: Partition) -> int:
    size = len(nu)
    a_init = _counts_key(lam, size)
    b_init = _counts_key(mu, size)

    @lru_cache(maxsize=None)
    def go(i: int, a: tuple, b: tuple) -> int:
        if i == size:
            return 1
        target = nu[i]
        total = 0
        for idx, (va, ca) in enumerate(a):
            if not ca or va > target:
                continue
            vb = target - va
            for jdx, (w, cb) in enumerate(b):
                if w == vb and cb:
                    na = a[:idx] + ((va, ca - 1),) + a[idx + 1:]
                    nb = b[:jdx] + ((w, cb - 1),) + b[jdx + 1:]
                    total += go(i + 1, na, nb)
        return total

    return go(0, a_init, b_init)


def _counts_key(parts: Iterable[int], size: int) -> tuple:
    counts: dict[int, int] = {}
    parts = list(parts)
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    if size > len(parts):
        counts[0] = size - len(parts)
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def _e_times_m(k: int, mu: Partition) -> dict[Partition, int]:
    """``m_(1^k) * m_mu``: add 1 to ``k`` distinct slots of ``mu`` padded with zeros."""
    mults = sorted(_counts_key(mu, len(mu) + k))  # (value, count), value 0 = padding
    out: dict[Partition, int] = {}

    def rec(idx: int, left: int, chosen: list):
        if idx == len(mults):
            if left:
                return
            parts = []
            for (v, c), i in zip(mults, chosen):
                parts += [v + 1] * i + [v] * (c - i)
            nu = Partition.from_unsorted(parts)
            nu_counts = dict(_counts_key(nu, 0))
            coeff = 1
            for (v, _), i in zip(mults, chosen):
                if i:
                    coeff *= comb(nu_counts[v + 1], i)
            out[nu] = out.get(nu, 0) + coeff
            return
        v, c = mults[idx]
        for i in range(min(c, left) + 1):
            rec(idx + 1, left - i, chosen + [i])

    rec(0, k, [])
    # a nu reachable via several increment patterns was counted per pattern;
    # each pattern corresponds to a distinct set of decremented slots.
    return out


@lru_cache(maxsize=None)
def _p_times_m(k: int, mu: Partition) -> dict[Partition, int]:
    """``m_(k) * m_mu``: add ``k`` to a single slot of ``mu`` padded with a zero."""
    out: dict[Partition, int] = {}
    for v in sorted(set(mu) | {0}):
        parts = list(mu)
        if v:
            parts.remove(v)
        parts.append(v + k)
        nu = Partition.from_unsorted(parts)
        out[nu] = nu.count(v + k)
    return out


# ---------------------------------------------------------------------------
# Transition tables
# ---------------------------------------------------------------------------

class _TableCache:
    """Per-degree transition tables, each built exactly once."""

    def __init__(self, builder):
        self._builder = builder
        self._tables: dict[int, dict] = {}
        self._lock = threading.RLock()

    def __call__(self, degree: int) -> dict:
        table = self._tables.get(degree)
        if table is None:
            with self._lock:
                table = self._tables.get(degree)
                if table is None:
                    table = self._builder(degree)
                    self._tables[degree] = table
        return table


def _generator_to_m(degree: int, factor) -> dict:
    """Expand products of generators ``g_lam = g_lam1 * g_rest`` into the m basis."""
    table: dict[Partition, dict[Partition, int]] = {}
    for lam in partitions_of(degree):
        if len(lam) <= 1:
            table[lam] = {lam: 1} if factor is _p_times_m or not lam else {Partition((1,) * degree): 1}
            continue
        rest = Partition(lam[1:])
        acc: dict[Partition, int] = {}
        for mu, c in _gen_table(factor, rest.n)[rest].items():
            for nu, k in factor(lam[0], mu).items():
                _merge(acc, nu, c * k)
        table[lam] = acc
    return table


def _gen_table(factor, degree):
    return E_TO_M(degree) if factor is _e_times_m else P_TO_M(degree)


E_TO_M = _TableCache(lambda d: _generator_to_m(d, _e_times_m))
P_TO_M = _TableCache(lambda d: _generator_to_m(d, _p_times_m))


def _invert_e_to_m(degree: int) -> dict:
    # e_{nu'} = m_nu + (lex-smaller terms): peel off the lex-largest monomial.
    e2m = E_TO_M(degree)
    table = {}
    for nu in partitions_of(degree):
        residual = {nu: 1}
        result: dict[Partition, Scalar] = {}
        while residual:
            top = max(residual)
            c = residual[top]
            key = conjugate(top)
            _merge(result, key, c)
            for mu, k in e2m[key].items():
                _merge(residual, mu, -c * k)
        table[nu] = result
    return table


def _invert_p_to_m(degree: int) -> dict:
    # p_nu = z * m_nu + (lex-larger terms): peel off the lex-smallest monomial.
    p2m = P_TO_M(degree)
    table = {}
    for nu in partitions_of(degree):
        residual: dict[Partition, Scalar] = {nu: 1}
        result: dict[Partition, Scalar] = {}
        while residual:
            low = min(residual)
            c = _norm(Fraction(residual[low]) / p2m[low][low])
            _merge(result, low, c)
            for mu, k in p2m[low].items():
                _merge(residual, mu, _norm(-c * k))
        table[nu] = result
    return table


M_TO_E = _TableCache(_invert_e_to_m)
M_TO_P = _TableCache(_invert_p_to_m)


def _jacobi_trudi(lam: Partition) -> dict[Partition, int]:
    """``s_lam = det(e_{lam'_i - i + j})`` expanded over permutations."""
    conj = conjugate(lam)
    size = len(conj)

    # Laplace expansion row by row; the minor left after fixing rows < i
    # depends only on the set of used columns, so memoize on that mask.
    @lru_cache(maxsize=None)
    def minor(i: int, mask: int) -> dict[tuple, int]:
        if i == size:
            return {(): 1}
        out: dict[tuple, int] = {}
        for j in range(size):
            if mask >> j & 1:
                continue
            idx = conj[i] - i + j
            if idx < 0:
                continue  # e_k = 0 for k < 0
            sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
            for rest, c in minor(i + 1, mask | (1 << j)).items():
                key = tuple(sorted(rest + (idx,), reverse=True)) if idx else rest
                _merge(out, key, sign * c)
        return out

    return {Partition(k): c for k, c in minor(0, 0).items()}


def _s_to_e(degree: int) -> dict:
    return {lam: _jacobi_trudi(lam) for lam in partitions_of(degree)}


def _invert_s_to_e(degree: int) -> dict:
    # s_kappa = e_{kappa'} + (e_{nu'} with nu lex-smaller): peel lex-largest nu.
    s2e = S_TO_E(degree)
    table = {}
    for mu in partitions_of(degree):
        residual = {mu: 1}
        result: dict[Partition, Scalar] = {}
        while residual:
            kappa = max(conjugate(key) for key in residual)
            c = residual[conjugate(kappa)]
            _merge(result, kappa, c)
            for key, k in s2e[kappa].items():
                _merge(residual, key, -c * k)
        table[mu] = result
    return table


S_TO_E = _TableCache(_s_to_e)
E_TO_S = _TableCache(_invert_s_to_e)


# ---------------------------------------------------------------------------
# Public conversion and multiplication
# ---------------------------------------------------------------------------

def convert(f: SymFunc, target) -> SymFunc:
    """Express ``f`` in the ``target`` basis, exactly."""
    target = Basis.of(target)
    src = f.basis
    if src == target:
        return f
    d = f.degree
    if src == Basis.S and target == Basis.E:
        return _linear_apply(f, S_TO_E(d), Basis.E)
    if src == Basis.E and target == Basis.S:
        return _linear_apply(f, E_TO_S(d), Basis.S)
    as_m = _to_m(f)
    if target == Basis.M:
        return as_m
    if target == Basis.E:
        return _linear_apply(as_m, M_TO_E(d), Basis.E)
    if target == Basis.P:
        return _linear_apply(as_m, M_TO_P(d), Basis.P)
    as_e = _linear_apply(as_m, M_TO_E(d), Basis.E)
    return _linear_apply(as_e, E_TO_S(d), Basis.S)


def _to_m(f: SymFunc) -> SymFunc:
    d = f.degree
    if f.basis == Basis.M:
        return f
    if f.basis == Basis.E:
        return _linear_apply(f, E_TO_M(d), Basis.M)
    if f.basis == Basis.P:
        return _linear_apply(f, P_TO_M(d), Basis.M)
    return _linear_apply(_linear_apply(f, S_TO_E(d), Basis.E), E_TO_M(d), Basis.M)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two symmetric functions given in the same m, e or p basis."""
    if f.basis != g.basis:
        raise ContractError("multiply needs both factors in the same basis")
    if f.basis == Basis.S:
        raise UnsupportedBasisError("products in the Schur basis are not supported")
    acc: dict[Partition, TPoly] = {}
    for lam, a in f._terms.items():
        for mu, b in g._terms.items():
            ab = a * b
            if f.basis == Basis.M:
                for nu, k in monomial_product(lam, mu).items():
                    piece = ab * k
                    acc[nu] = acc[nu] + piece if nu in acc else piece
            else:
                nu = Partition.from_unsorted(lam + mu)
                acc[nu] = acc[nu] + ab if nu in acc else ab
    return SymFunc(f.basis, f.degree + g.degree, acc)


def e(*parts, coeff=1) -> SymFunc:
    return SymFunc.single(Basis.E, Partition.from_unsorted(parts), coeff)


def m(*parts, coeff=1) -> SymFunc:
    return SymFunc.single(Basis.M, Partition.from_unsorted(parts), coeff)


def p(*parts, coeff=1) -> SymFunc:
    return SymFunc.single(Basis.P, Partition.from_unsorted(parts), coeff)


def s(*parts, coeff=1) -> SymFunc:
    return SymFunc.single(Basis.S, Partition.from_unsorted(parts), coeff)


def p_lambda_m_leading(lam: Partition) -> int:
    """Coefficient of ``m_lam`` in ``p_lam``: product of multiplicity factorials."""
    out = 1
    for c in lam.multiplicities().values():
        out *= factorial(c)
    return out
