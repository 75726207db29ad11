"""Ulam sphere sizes.

Four routes to |S(m, t)| live here: the tableaux sum over partitions with a
long first row (identity centre, any radius), closed-form polynomials for
permutations, the duplication-set formula for radius 1 with any centre, and
direct enumeration as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .core import (
    CapExceeded,
    Multipermutation,
    Translocation,
    UlamError,
    _raw_multipermutations,
    brute_max_n,
    lcs_length,
    radius_one_neighbours,
    translocate,
)
from .tableaux import count_content_r, count_syt, partitions_first_part_at_least

RADIUS_ONE_MAX_N = 64
LITERAL_ORACLE_MAX_N = 10

METHODS = ("closed-form", "tableaux-sum", "ballcalc", "brute-force")

# The published worked example for m below drops the leading 1 of the radius-1
# formula and prints 71; enumeration gives 72.
KNOWN_MISPRINTS = {
    (1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4): (
        71,
        "published value 71 omits the +1 (centre) term; enumeration confirms 72",
    ),
}


@dataclass(frozen=True)
class SphereReport:
    """A sphere size together with how it was obtained."""

    center: Union[Multipermutation, str]
    radius: int
    size: int
    method: str
    components: dict | None = None
    cross_check: str | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.method not in METHODS:
            raise UlamError(f"unknown method {self.method!r}")
        if self.size < 1:
            raise UlamError("a sphere always contains its centre")

    def as_dict(self) -> dict:
        out = {
            "center": str(self.center),
            "radius": self.radius,
            "size": str(self.size),
            "method": self.method,
        }
        if self.components is not None:
            out["components"] = {k: _plain(v) for k, v in self.components.items()}
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _plain(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    return v


def _check_radius(n: int, r: int, t: int):
    if n < 1 or r < 1 or n % r:
        raise UlamError(f"r={r} must be a positive divisor of n={n}")
    if not 0 <= t <= n - r:
        raise UlamError(f"radius t={t} outside 0..{n - r}")


def sphere_size_identity(n: int, r: int, t: int) -> int:
    """|S(m_e^r, t)| as the sum of f^lam * K^lam_r over lam with lam_1 >= n - t."""
    _check_radius(n, r, t)
    return sum(count_syt(lam) * count_content_r(lam, r)
               for lam in partitions_first_part_at_least(n, n - t))


def sphere_size_perm_closed(n: int, t: int) -> int:
    """Permutation sphere size from the hook-length polynomials, t in {1, 2, 3}."""
    if t not in (1, 2, 3):
        raise UlamError("closed forms exist only for t in {1, 2, 3}")
    if n < 2:
        raise UlamError("n must be at least 2")
    size = 1 + (n - 1) ** 2
    if t >= 2:
        if n <= 3:
            raise UlamError("the radius-2 closed form needs n > 3")
        size += (n * (n - 3) // 2) ** 2 + ((n - 1) * (n - 2) // 2) ** 2
    if t >= 3:
        if n <= 5:
            raise UlamError("the radius-3 closed form needs n > 5")
        size += ((n * (n - 1) * (n - 5) // 6) ** 2
                 + (n * (n - 2) * (n - 4) // 3) ** 2
                 + ((n - 1) * (n - 2) * (n - 3) // 6) ** 2)
    return size


def unique_translocations(n: int) -> set[Translocation]:
    """{phi(i, j) : i - j != 1}, with the identity represented once as phi(1, 1)."""
    if n < 1:
        raise UlamError("n must be at least 1")
    out = {Translocation(1, 1, n)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and i - j != 1:
                out.add(Translocation(i, j, n))
    return out


def _seq(m) -> tuple[int, ...]:
    return m.symbols if isinstance(m, Multipermutation) else tuple(m)


def standard_duplication_size(m) -> int:
    """|SD(m)|: (n-2) per repeated position plus (r-1) per other position."""
    s = _seq(m)
    n = len(s)
    r = m.r if isinstance(m, Multipermutation) else s.count(s[0])
    repeats = sum(1 for i in range(1, n) if s[i] == s[i - 1])
    return (n - 2) * repeats + (r - 1) * (n - repeats)


def standard_duplication_set(m) -> set[tuple[int, int]]:
    """Literal SD(m) as (i, j) pairs; an oracle for the counting rule."""
    s = _seq(m)
    n = len(s)
    out = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or i - j == 1:
                continue
            if s[i - 1] == s[j - 1] or (i >= 2 and s[i - 1] == s[i - 2]):
                out.add((i, j))
    return out


def psi(k: int) -> int:
    """floor((k - 2)^2 / 4)."""
    if k < 0:
        raise UlamError("psi is defined for non-negative integers")
    return (k - 2) ** 2 // 4


def psi_tuple(x) -> int:
    return sum(psi(k) for k in x)


def maximal_alternating_runs(s) -> list[tuple[int, int]]:
    """1-based ``(start, end)`` of every locally maximal alternating substring.

    Consecutive runs may share one position, e.g. (1,2,1,2,3,2,3).
    """
    s = _seq(s)
    n = len(s)
    if n == 0:
        return []
    runs = []
    start = 0
    for p in range(1, n):
        if s[p] == s[p - 1]:
            runs.append((start + 1, p))
            start = p
        elif p - start >= 2 and s[p] != s[p - 2]:
            runs.append((start + 1, p))
            start = p - 1
    runs.append((start + 1, n))
    return runs


def alternating_duplication_size(m) -> int:
    """|AD(m)|: psi summed over the lengths of the locally maximal alternating substrings."""
    return sum(psi(b - a + 1) for a, b in maximal_alternating_runs(m))


def alternating_duplication_set(m) -> set[tuple[int, int]]:
    """Literal AD(m) from its quantified definition (quartic; oracle only)."""
    s = _seq(m)
    n = len(s)
    if n > LITERAL_ORACLE_MAX_N:
        raise CapExceeded(f"literal AD oracle limited to n <= {LITERAL_ORACLE_MAX_N}")
    sd = standard_duplication_set(s)

    def allowed(i, j):
        return i != j and i - j != 1 and (i, j) not in sd

    out = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not allowed(i, j):
                continue
            moved = translocate(s, i, j)
            for k in range(i, j - 1):
                if allowed(j, k) and translocate(s, j, k) == moved:
                    out.add((i, j))
                    break
    return out


def alternating_star_count(m) -> int:
    """|AD*(m)|: alternating substrings of even length at least 4."""
    s = _seq(m)
    total = 0
    for a, b in maximal_alternating_runs(s):
        length = b - a + 1
        # substrings of even length L >= 4 inside a run of this length
        total += sum(length - L + 1 for L in range(4, length + 1, 2))
    return total


def sphere_size_radius1(m: Multipermutation) -> SphereReport:
    """1 + (n-1)^2 - |SD(m)| - |AD(m)|."""
    n = m.n
    tn = 1 + (n - 1) ** 2
    sd = standard_duplication_size(m)
    ad = alternating_duplication_size(m)
    notes = ()
    known = KNOWN_MISPRINTS.get(m.symbols)
    if known is not None:
        notes = (known[1],)
    return SphereReport(
        center=m, radius=1, size=tn - sd - ad, method="ballcalc",
        components={"T_n": tn, "SD": sd, "AD": ad}, notes=notes,
    )


def sphere_enumerate(m: Multipermutation, t: int, max_n: int | None = None) -> set[Multipermutation]:
    """Every multipermutation within Ulam distance t of m, by direct enumeration."""
    if t < 0:
        raise UlamError("radius must be non-negative")
    return {Multipermutation(s, m.r) for s in _enumerate_raw(m.symbols, m.r, t, max_n)}


def sphere_enumerate_size(m: Multipermutation, t: int, max_n: int | None = None) -> int:
    """``len(sphere_enumerate(m, t))`` without building the value objects."""
    if t < 0:
        raise UlamError("radius must be non-negative")
    return len(_enumerate_raw(m.symbols, m.r, t, max_n))


def _enumerate_raw(s: tuple, r: int, t: int, max_n: int | None) -> set[tuple]:
    n = len(s)
    if t == 0:
        return {s}
    if t == 1:
        if n > RADIUS_ONE_MAX_N:
            raise CapExceeded(f"radius-1 enumeration limited to n <= {RADIUS_ONE_MAX_N}")
        return radius_one_neighbours(s)
    cap = brute_max_n() if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"brute-force sphere limited to n <= {cap}, got n={n}")
    floor = n - t
    return {x for x in _raw_multipermutations(n, r) if lcs_length(s, x) >= floor}
