"""Partitions, hook lengths, tableau counts and RSK insertion for words."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

from .core import Multipermutation, UlamError


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of n, stored as weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise UlamError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UlamError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        """Length of the first (longest) row, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.first)))

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-based ``(row, column)`` cells."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError:
            raise UlamError(f"bad partition {text!r}; expected e.g. 4,3,3,2") from None

    def __str__(self):
        return ",".join(map(str, self.parts))


def _partitions(n: int, max_part: int, min_first: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), max(min_first, 1) - 1, -1):
        for rest in _partitions(n - p, p, 0):
            yield (p,) + rest


def partitions_first_part_at_least(n: int, min_first: int = 0) -> Iterator[Partition]:
    """Each partition of n with first part >= min_first, in reverse-lexicographic order."""
    if n < 1:
        raise UlamError("n must be at least 1")
    for parts in _partitions(n, n, min_first):
        yield Partition(parts)


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Cells to the right of and below (i, j), plus the cell itself."""
    if not (1 <= i <= len(lam) and 1 <= j <= lam.parts[i - 1]):
        raise UlamError(f"cell ({i},{j}) is not in the diagram {lam}")
    arm = lam.parts[i - 1] - j
    leg = sum(1 for p in lam.parts[i:] if p >= j)
    return arm + leg + 1


def count_syt(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    return factorial(lam.n) // prod(hook_length(lam, i, j) for i, j in lam.cells())


@lru_cache(maxsize=None)
def _kostka_rect(shape: tuple[int, ...], symbols: int, r: int) -> int:
    # Fillings of shape with 1..symbols each used r times; the largest symbol
    # always occupies a horizontal strip of r cells at the row ends.
    if symbols == 0:
        return 1 if not shape else 0
    if len(shape) > symbols or shape[0] > symbols * r:
        return 0
    total = 0
    rows = len(shape)

    def strips(i: int, left: int, acc: list[int]):
        nonlocal total
        if i == rows:
            if left == 0:
                inner = tuple(p for p in acc if p > 0)
                total += _kostka_rect(inner, symbols - 1, r)
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        for mu in range(shape[i], lo - 1, -1):
            removed = shape[i] - mu
            if removed > left:
                break
            acc.append(mu)
            strips(i + 1, left - removed, acc)
            acc.pop()

    strips(0, r, [])
    return total


def count_content_r(lam: Partition, r: int) -> int:
    """Young tableaux of shape lam in which each of 1..n/r appears exactly r times."""
    n = lam.n
    if r < 1 or n % r:
        raise UlamError(f"r={r} must be a positive divisor of n={n}")
    return _kostka_rect(lam.parts, n // r, r)


@dataclass(frozen=True)
class TableauPair:
    """RSK output: a semistandard insertion tableau P and a standard recording tableau Q."""

    P: tuple[tuple[int, ...], ...]
    Q: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        p_shape = tuple(len(row) for row in self.P)
        q_shape = tuple(len(row) for row in self.Q)
        if p_shape != q_shape:
            raise UlamError("P and Q shapes differ")
        Partition(p_shape)
        if not is_semistandard(self.P):
            raise UlamError("P is not a Young tableau")
        if not is_standard(self.Q):
            raise UlamError("Q is not a standard Young tableau")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.P))


def is_semistandard(rows) -> bool:
    """Rows weakly increase, columns strictly increase."""
    for row in rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            return False
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


def is_standard(rows) -> bool:
    entries = sorted(v for row in rows for v in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    return is_semistandard(rows)


def rsk(m) -> TableauPair:
    """Row-insertion RSK for a word (a multipermutation or any integer sequence)."""
    word = m.symbols if isinstance(m, Multipermutation) else tuple(m)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            cur = P[row]
            # leftmost entry strictly greater than x gets bumped
            lo, hi = 0, len(cur)
            while lo < hi:
                mid = (lo + hi) // 2
                if cur[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == len(cur):
                cur.append(x)
                Q[row].append(step)
                break
            cur[lo], x = x, cur[lo]
            row += 1
    return TableauPair(tuple(map(tuple, P)), tuple(map(tuple, Q)))
