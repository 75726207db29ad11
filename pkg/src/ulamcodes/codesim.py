"""Greedy codes, minimum-distance checks and a seeded translocation channel."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _accel
from .core import (
    CapExceeded,
    Multipermutation,
    UlamError,
    _raw_multipermutations,
    translocate,
)

GREEDY_MAX_N = 10
DEFAULT_BLOCK = 4096
RNG_NAME = "numpy PCG64, SeedSequence([seed, block])"


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    distance: int


class Codebook:
    """An ordered list of distinct r-regular multipermutations with a claimed minimum distance."""

    def __init__(self, codewords, n: int, r: int, d: int, verify: bool = True):
        words = [w if isinstance(w, Multipermutation) else Multipermutation(tuple(w), r)
                 for w in codewords]
        for w in words:
            if w.n != n or w.r != r:
                raise UlamError(f"codeword {w} does not have n={n}, r={r}")
        if d < 1:
            raise UlamError("minimum distance must be at least 1")
        self.codewords = words
        self.n, self.r, self.d = n, r, d
        self._array = None
        if verify:
            ok, bad = verify_min_distance(self)
            if not ok:
                a, b = words[bad.i], words[bad.j]
                raise UlamError(
                    f"codewords {bad.i} ({a}) and {bad.j} ({b}) are at distance "
                    f"{bad.distance} < {d}")

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.array([w.symbols for w in self.codewords], dtype=np.int64).reshape(
                len(self.codewords), self.n)
        return self._array

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def save(self, path) -> None:
        lines = [f"{self.n} {self.r} {self.d}"] + [str(w) for w in self.codewords]
        Path(path).write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path) -> "Codebook":
        text = Path(path).read_text()
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise UlamError(f"{path}: empty codebook file")
        try:
            n, r, d = (int(v) for v in rows[0].split())
        except ValueError:
            raise UlamError(f"{path}: header must be 'n r d'") from None
        words = []
        for lineno, row in enumerate(rows[1:], start=2):
            try:
                words.append(Multipermutation.parse(row, r))
            except UlamError as exc:
                raise UlamError(f"{path}:{lineno}: {exc}") from None
        if not words:
            raise UlamError(f"{path}: no codewords")
        return cls(words, n, r, d)


def verify_min_distance(code: Codebook) -> tuple[bool, Violation | None]:
    """All-pairs check; returns the first pair closer than the claimed distance."""
    words = code.codewords
    if code.d == 1:
        seen = {}
        for k, w in enumerate(words):
            if w.symbols in seen:
                return False, Violation(seen[w.symbols], k, 0)
            seen[w.symbols] = k
        return True, None
    book = code.array
    for a in range(len(words) - 1):
        rest = book[a + 1:]
        if not _accel.far_from_all(book[a], rest, code.d):
            for b in range(a + 1, len(words)):
                dist = code.n - _accel.lcs_length(book[a], book[b])
                if dist < code.d:
                    return False, Violation(a, b, dist)
    return True, None


def greedy_code(n: int, r: int, d: int, max_n: int = GREEDY_MAX_N) -> Codebook:
    """Lexicographic greedy (maximal) code of minimum distance d."""
    if r < 1 or n % r:
        raise UlamError(f"r={r} must be a positive divisor of n={n}")
    if not 1 <= d <= n - r + 1:
        raise UlamError(f"d must be in 1..{n - r + 1}")
    if n > max_n:
        raise CapExceeded(f"greedy search limited to n <= {max_n}, got n={n}")
    if d == 1:
        return Codebook(list(_raw_multipermutations(n, r)), n, r, d, verify=False)
    book = np.empty((64, n), dtype=np.int64)
    count = 0
    for word in _raw_multipermutations(n, r):
        w = np.asarray(word, dtype=np.int64)
        # newest codewords are the likeliest to be close in lexicographic order
        if count == 0 or _accel.far_from_all(w, book[count - 1::-1].copy(), d):
            if count == len(book):
                book = np.concatenate([book, np.empty_like(book)])
            book[count] = w
            count += 1
    words = [tuple(int(v) for v in row) for row in book[:count]]
    return Codebook(words, n, r, d, verify=False)


@dataclass(frozen=True)
class ChannelRun:
    seed: int
    trials: int
    t: int
    successes: int
    generator: str = RNG_NAME

    @property
    def failures(self) -> int:
        return self.trials - self.successes

    def as_dict(self) -> dict:
        return {"seed": str(self.seed), "trials": str(self.trials), "t": self.t,
                "successes": str(self.successes), "failures": str(self.failures),
                "generator": self.generator}


def _random_translocation(rng: np.random.Generator, n: int) -> tuple[int, int]:
    while True:
        i, j = (int(v) for v in rng.integers(1, n + 1, size=2))
        if i - j != 1:
            return i, j


def _run_block(code: Codebook, t: int, seed: int, block: int, trials: int) -> int:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, block])))
    book = code.array
    words = [w.symbols for w in code.codewords]
    n = code.n
    ok = 0
    for _ in range(trials):
        k = int(rng.integers(len(words)))
        received = words[k]
        for _ in range(t):
            received = translocate(received, *_random_translocation(rng, n))
        idx, _, tied = _accel.nearest(np.asarray(received, dtype=np.int64), book)
        if not tied and idx == k:
            ok += 1
    return ok


def simulate_channel(code: Codebook, t: int, trials: int, seed: int,
                     workers: int = 1, block_size: int = DEFAULT_BLOCK) -> ChannelRun:
    """Send uniform codewords through t random translocations and decode to the nearest codeword.

    Trials are cut into fixed blocks, each seeded from (seed, block index), so
    the result does not depend on *workers*.
    """
    if t < 0 or trials < 0:
        raise UlamError("t and trials must be non-negative")
    if not 0 <= seed < 2 ** 64:
        raise UlamError("seed must be a 64-bit unsigned integer")
    if block_size < 1 or workers < 1:
        raise UlamError("block_size and workers must be positive")
    if len(code) == 0:
        raise UlamError("empty codebook")
    code.array  # build once before any worker touches it
    sizes = [min(block_size, trials - s) for s in range(0, trials, block_size)]
    if workers == 1:
        results = [_run_block(code, t, seed, b, k) for b, k in enumerate(sizes)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda bk: _run_block(code, t, seed, *bk), enumerate(sizes)))
    return ChannelRun(seed=seed, trials=trials, t=t, successes=sum(results))
