"""Permutations, r-regular multipermutations, translocations and the Ulam distance.

All public indices are 1-based.  Sequences are stored as tuples of ints, so
every value object here is immutable and hashable.
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from . import _accel

DEFAULT_BFS_MAX_N = 8
DEFAULT_BRUTE_MAX_N = 8
DEFAULT_CLASS_MAX_SIZE = 40320


class UlamError(ValueError):
    """Bad input to one of the library operations."""


class CapExceeded(UlamError):
    """An exhaustive computation was asked to run beyond its configured cap."""


def brute_max_n(default: int = DEFAULT_BRUTE_MAX_N) -> int:
    """Brute-force size cap, overridable through ``ULAM_MAX_BRUTE_N``."""
    raw = os.environ.get("ULAM_MAX_BRUTE_N")
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UlamError(f"ULAM_MAX_BRUTE_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise UlamError("ULAM_MAX_BRUTE_N must be positive")
    return value


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise UlamError(f"expected whitespace-separated integers, got {text!r}") from None


@dataclass(frozen=True)
class Permutation:
    """A bijection on [n] written as its image sequence ``[s(1), ..., s(n)]``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise UlamError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise UlamError(f"{list(images)} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(_parse_ints(text))

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __str__(self):
        return " ".join(map(str, self.images))


@dataclass(frozen=True)
class Multipermutation:
    """An r-regular multipermutation: each of ``1..n/r`` occurs exactly r times."""

    symbols: tuple[int, ...]
    r: int

    def __post_init__(self):
        symbols = tuple(int(v) for v in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        n, r = len(symbols), self.r
        if n == 0:
            raise UlamError("a multipermutation needs n >= 1")
        if r < 1 or n % r:
            raise UlamError(f"r={r} must be a positive divisor of n={n}")
        k = n // r
        counts = [0] * (k + 1)
        for s in symbols:
            if not 1 <= s <= k:
                raise UlamError(f"symbol {s} outside 1..{k} for n={n}, r={r}")
            counts[s] += 1
        if any(c != r for c in counts[1:]):
            raise UlamError(f"{list(symbols)} is not {r}-regular")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def k(self) -> int:
        """Alphabet size ``n/r``."""
        return len(self.symbols) // self.r

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "Multipermutation":
        """Parse a one-line codeword; r is inferred from symbol counts when omitted."""
        symbols = _parse_ints(text)
        if not symbols:
            raise UlamError("empty multipermutation")
        if r is None:
            r = symbols.count(symbols[0])
        return cls(symbols, r)

    @classmethod
    def from_permutation(cls, sigma: Permutation) -> "Multipermutation":
        return cls(sigma.images, 1)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return " ".join(map(str, self.symbols))


@dataclass(frozen=True)
class Translocation:
    """phi(i, j): delete the entry at position i and reinsert it at position j."""

    source: int
    target: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise UlamError("n must be positive")
        for name, v in (("source", self.source), ("target", self.target)):
            if not 1 <= v <= self.n:
                raise UlamError(f"translocation {name} {v} outside 1..{self.n}")

    @property
    def is_identity(self) -> bool:
        return self.source == self.target

    def apply(self, seq: Sequence[int]) -> tuple[int, ...]:
        """Right action on a raw sequence of length n."""
        if len(seq) != self.n:
            raise UlamError(f"sequence length {len(seq)} does not match n={self.n}")
        return translocate(tuple(seq), self.source, self.target)

    def __str__(self):
        return f"phi({self.source},{self.target})"


def translocate(seq: tuple, i: int, j: int) -> tuple:
    """Delete ``seq[i]`` and reinsert it at position j (1-based, unchecked)."""
    if i < j:
        return seq[:i - 1] + seq[i:j] + (seq[i - 1],) + seq[j:]
    if i > j:
        return seq[:j - 1] + (seq[i - 1],) + seq[j - 1:i - 1] + seq[i:]
    return seq


def identity(n: int) -> Permutation:
    if n < 1:
        raise UlamError("n must be at least 1")
    return Permutation(tuple(range(1, n + 1)))


def reverse_identity(n: int) -> Permutation:
    """The decreasing permutation ``[n, n-1, ..., 1]``."""
    if n < 1:
        raise UlamError("n must be at least 1")
    return Permutation(tuple(range(n, 0, -1)))


def omega(n: int, r: int) -> Permutation:
    """Permutation whose r-projection cycles ``1, 2, ..., n/r`` repeatedly."""
    _check_divides(n, r)
    k = n // r
    # ceil(i*r/n) == ceil(i/k)
    return Permutation(tuple(((i - 1) % k) * r + -(-i // k) for i in range(1, n + 1)))


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.n
    for pos, v in enumerate(sigma.images, start=1):
        inv[v - 1] = pos
    return Permutation(tuple(inv))


def compose(sigma: Permutation, pi: Permutation) -> Permutation:
    """``(sigma pi)(i) = sigma(pi(i))``."""
    if sigma.n != pi.n:
        raise UlamError(f"length mismatch: {sigma.n} vs {pi.n}")
    s = sigma.images
    return Permutation(tuple(s[p - 1] for p in pi.images))


def translocation_perm(n: int, i: int, j: int) -> Permutation:
    """The permutation phi(i, j) in S_n."""
    phi = Translocation(i, j, n)
    return Permutation(phi.apply(tuple(range(1, n + 1))))


def _check_divides(n: int, r: int):
    if n < 1 or r < 1 or n % r:
        raise UlamError(f"r={r} must be a positive divisor of n={n}")


def project(sigma: Permutation, r: int) -> Multipermutation:
    """The r-regular multipermutation of sigma: entry v maps to ceil(v / r)."""
    _check_divides(sigma.n, r)
    return Multipermutation(tuple((v - 1) // r + 1 for v in sigma.images), r)


def identity_multipermutation(n: int, r: int) -> Multipermutation:
    return project(identity(n), r)


def omega_multipermutation(n: int, r: int) -> Multipermutation:
    return project(omega(n, r), r)


def act(m: Multipermutation, phi) -> Multipermutation:
    """Right action ``m . phi``.

    *phi* is a :class:`Translocation` or any :class:`Permutation`, in which case
    ``(m . pi)(i) = m(pi(i))``.
    """
    if isinstance(phi, Translocation):
        if phi.n != m.n:
            raise UlamError(f"length mismatch: {m.n} vs {phi.n}")
        return Multipermutation(translocate(m.symbols, phi.source, phi.target), m.r)
    if isinstance(phi, Permutation):
        if phi.n != m.n:
            raise UlamError(f"length mismatch: {m.n} vs {phi.n}")
        s = m.symbols
        return Multipermutation(tuple(s[p - 1] for p in phi.images), m.r)
    raise TypeError(f"cannot act by {type(phi).__name__}")


def lcs_length(x: Sequence[int], y: Sequence[int]) -> int:
    """Length of a longest common subsequence (quadratic DP)."""
    return int(_accel.lcs_length(tuple(x), tuple(y)))


def _symbols(x) -> tuple[int, ...]:
    if isinstance(x, Multipermutation):
        return x.symbols
    if isinstance(x, Permutation):
        return x.images
    return tuple(x)


def _check_pair(x, y):
    if isinstance(x, Multipermutation) and isinstance(y, Multipermutation):
        if x.n != y.n or x.r != y.r:
            raise UlamError(f"parameter mismatch: (n={x.n}, r={x.r}) vs (n={y.n}, r={y.r})")
    elif len(x) != len(y):
        raise UlamError(f"length mismatch: {len(x)} vs {len(y)}")


def ulam_distance(x, y) -> int:
    """``n - lcs(x, y)`` for two multipermutations (or permutations) of equal shape."""
    _check_pair(x, y)
    a, b = _symbols(x), _symbols(y)
    return len(a) - lcs_length(a, b)


def radius_one_neighbours(seq: tuple) -> set[tuple]:
    """All sequences reachable from *seq* with at most one translocation."""
    n = len(seq)
    out = {seq}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i - j != 1 and i != j:
                out.add(translocate(seq, i, j))
    return out


def min_translocation_count(x, y, max_n: int = DEFAULT_BFS_MAX_N) -> int:
    """Fewest translocations taking x to y, by breadth-first search of the action graph."""
    _check_pair(x, y)
    a, b = _symbols(x), _symbols(y)
    if len(a) > max_n:
        raise CapExceeded(f"BFS limited to n <= {max_n}, got n={len(a)}")
    if sorted(a) != sorted(b):
        raise UlamError("sequences are not rearrangements of each other")
    if a == b:
        return 0
    seen = {a}
    frontier = deque([(a, 0)])
    while frontier:
        cur, depth = frontier.popleft()
        for nxt in radius_one_neighbours(cur):
            if nxt in seen:
                continue
            if nxt == b:
                return depth + 1
            seen.add(nxt)
            frontier.append((nxt, depth + 1))
    raise AssertionError("unreachable: translocations generate S_n")


def equivalence_class(sigma: Permutation, r: int,
                      max_size: int = DEFAULT_CLASS_MAX_SIZE) -> Iterator[Permutation]:
    """Every permutation with the same r-projection as sigma."""
    _check_divides(sigma.n, r)
    k = sigma.n // r
    size = factorial(r) ** k
    if size > max_size:
        raise CapExceeded(f"class size {size} exceeds cap {max_size}")
    m = project(sigma, r).symbols
    positions = [[p for p, s in enumerate(m) if s == block] for block in range(1, k + 1)]
    block_values = [range((b - 1) * r + 1, b * r + 1) for b in range(1, k + 1)]
    per_block = [list(itertools.permutations(vals)) for vals in block_values]
    for choice in itertools.product(*per_block):
        images = [0] * sigma.n
        for pos_list, vals in zip(positions, choice):
            for p, v in zip(pos_list, vals):
                images[p] = v
        yield Permutation(tuple(images))


def space_size(n: int, r: int) -> int:
    """``n! / (r!)^(n/r)``, the number of r-regular multipermutations."""
    _check_divides(n, r)
    return factorial(n) // factorial(r) ** (n // r)


def _next_multiset_perm(a: list) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def multipermutations(n: int, r: int, max_n: int | None = None) -> Iterator[Multipermutation]:
    """All of M_r(S_n) in lexicographic order."""
    _check_divides(n, r)
    cap = brute_max_n() if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"enumeration of M_r(S_n) limited to n <= {cap}, got n={n}")
    for seq in _raw_multipermutations(n, r):
        yield Multipermutation(seq, r)


def _raw_multipermutations(n: int, r: int) -> Iterator[tuple[int, ...]]:
    a = [s for s in range(1, n // r + 1) for _ in range(r)]
    while True:
        yield tuple(a)
        if not _next_multiset_perm(a):
            return
