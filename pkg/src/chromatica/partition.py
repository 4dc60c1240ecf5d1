"""Integer partitions.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  The canonical order on partitions of the same size is descending
lexicographic, which is also plain tuple comparison reversed.
"""
from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1^3"`` style text (caret exponents allowed)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        parts: list[int] = []
        for token in re.split(r"\s*,\s*", text):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise ValueError(f"cannot parse partition token {token!r}")
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        return multiplicity_vector(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def compact(self) -> str:
        """Exponent notation, e.g. ``2,1^4``."""
        out = []
        for value, count in sorted(Counter(self).items(), reverse=True):
            out.append(f"{value}^{count}" if count > 1 else str(value))
        return ",".join(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition(())
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def multiplicity_vector(lam: Iterable[int]) -> dict[int, int]:
    return dict(Counter(lam))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _partitions(n, n))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when ``lam >= mu`` in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True
