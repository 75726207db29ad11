"""Code-size bounds and the perfect-code feasibility verdict.

Every bound is kept as an exact rational (``raw``) and as an integer
``value``: floored for upper bounds, ceiled for lower bounds.  The binary
bounds go through the real-valued envelope U(r), which is the one place a
float enters.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from .binarycuts import max_sphere_binary, upper_envelope_U
from .core import CapExceeded, UlamError, lcs_length, space_size
from .spheres import sphere_size_identity, sphere_size_perm_closed

BOUND_KINDS = (
    "singleton-upper", "sphere-packing-upper", "perfect-lower",
    "gv-lower", "binary-perfect-lower", "binary-gv-lower",
)
VERDICTS = ("trivial-forced", "overlap-excluded", "explicit-sphere-excluded", "not-excluded")
PERFECT_SEARCH_MAX_N = 6


@dataclass(frozen=True)
class BoundReport:
    kind: str
    params: dict
    value: int
    raw: Fraction | float

    def __post_init__(self):
        if self.kind not in BOUND_KINDS:
            raise UlamError(f"unknown bound kind {self.kind!r}")

    @property
    def is_upper(self) -> bool:
        return self.kind.endswith("upper")

    def as_dict(self) -> dict:
        raw = self.raw
        if isinstance(raw, Fraction):
            raw_text = f"{raw.numerator}/{raw.denominator}" if raw.denominator != 1 else str(raw.numerator)
        else:
            raw_text = f"{raw:.6g}"
        return {"kind": self.kind, "params": {k: str(v) for k, v in self.params.items()},
                "value": str(self.value), "raw": raw_text}


@dataclass(frozen=True)
class FeasibilityVerdict:
    n: int
    t: int
    verdict: str
    witness: str

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise UlamError(f"unknown verdict {self.verdict!r}")


def _ceil(x) -> int:
    return math.ceil(x)


def _floor(x) -> int:
    return math.floor(x)


def singleton_upper(n: int, d: int) -> BoundReport:
    """|C| <= (n - d + 1)! for a permutation code of minimum distance d."""
    if not 1 <= d <= n - 1:
        raise UlamError(f"d must satisfy 1 <= d <= n - 1, got d={d}, n={n}")
    v = factorial(n - d + 1)
    return BoundReport("singleton-upper", {"n": n, "d": d}, v, Fraction(v))


def overlapping_F(n: int, t: int) -> Fraction:
    """((n-t)!)^2 t! / (n! (n-2t)!); perfect t-codes are ruled out when this exceeds 1."""
    if t < 0:
        raise UlamError("t must be non-negative")
    if n < 2 * t:
        raise UlamError(f"F(n, t) needs n >= 2t, got n={n}, t={t}")
    return Fraction(factorial(n - t) ** 2 * factorial(t), factorial(n) * factorial(n - 2 * t))


def min_n_overlap(t: int, n_max: int | None = None) -> int | None:
    """Least n >= 2t with F(n, t) > 1, or None when no such n exists (t = 1)."""
    if t < 1:
        raise UlamError("t must be at least 1")
    if t == 1:
        # F(n, 1) = (n - 1)/n < 1 for every n
        return None
    # F(n, t) increases in n towards t!, so the scan terminates for t >= 2
    limit = n_max if n_max is not None else 2 * t + 10_000
    for n in range(2 * t, limit + 1):
        if overlapping_F(n, t) > 1:
            return n
    return None


def _perm_sphere(n: int, t: int) -> int:
    if t in (1, 2, 3) and n > 2 * t - 1:
        return sphere_size_perm_closed(n, t)
    return sphere_size_identity(n, 1, t)


def perfect_code_feasibility(n: int, t: int) -> FeasibilityVerdict:
    """Which argument, if any, rules out a nontrivial perfect t-error-correcting code in S_n."""
    if n < 1 or t < 0:
        raise UlamError("need n >= 1 and t >= 0")
    if t == 0:
        return FeasibilityVerdict(n, t, "trivial-forced", "t = 0: the whole space is the code")
    if t >= n - 1:
        return FeasibilityVerdict(n, t, "trivial-forced", f"t={t} >= n-1: one sphere covers S_n")
    if n <= 2 * t + 1:
        return FeasibilityVerdict(
            n, t, "trivial-forced",
            f"n={n} <= 2t+1: minimum distance 2t+1 >= n forces a single codeword")
    if t in (1, 2, 3):
        sphere = _perm_sphere(n, t)
        cap = factorial(n - 2 * t)
        ratio = Fraction(factorial(n), sphere)
        if ratio > cap:
            return FeasibilityVerdict(
                n, t, "explicit-sphere-excluded",
                f"n!/|S(e,{t})| = {factorial(n)}/{sphere} > (n-2t)! = {cap}")
    F = overlapping_F(n, t)
    if F > 1:
        return FeasibilityVerdict(n, t, "overlap-excluded", f"F({n},{t}) = {F} > 1")
    return FeasibilityVerdict(n, t, "not-excluded", f"F({n},{t}) = {F} <= 1")


def _min_radius1_sphere(n: int, r: int) -> int:
    # identity centre is smallest; with n = r there is one point in the space
    if n == r:
        return 1
    return 1 + (n - 1) * (n // r - 1)


def _max_radius1_sphere(n: int, r: int) -> int:
    if n == r:
        return 1
    return 1 + (n - 1) ** 2 - (r - 1) * n


def sphere_packing_upper(n: int, r: int) -> BoundReport:
    """Size bound for single-error-correcting codes from the smallest radius-1 sphere."""
    raw = Fraction(space_size(n, r), _min_radius1_sphere(n, r))
    return BoundReport("sphere-packing-upper", {"n": n, "r": r}, _floor(raw), raw)


def _check_non_binary(n: int, r: int, allow_binary: bool = False):
    space_size(n, r)
    if n // r == 2 and not allow_binary:
        raise UlamError(f"n/r = 2 at (n={n}, r={r}); use the binary bounds")


def perfect_lower(n: int, r: int, allow_binary: bool = False) -> BoundReport:
    """A perfect single-error-correcting code needs at least space / max-sphere codewords.

    The max-sphere value 1 + (n-1)^2 - (r-1)n is only proven for n/r > 2, so
    binary parameters are refused unless *allow_binary* asks for the bare formula.
    """
    _check_non_binary(n, r, allow_binary)
    raw = Fraction(space_size(n, r), _max_radius1_sphere(n, r))
    return BoundReport("perfect-lower", {"n": n, "r": r}, _ceil(raw), raw)


def gv_lower(n: int, r: int, d: int, allow_binary: bool = False) -> BoundReport:
    """Any maximal code of minimum distance d has at least space / maxball^(d-1) words."""
    _check_non_binary(n, r, allow_binary)
    if d < 1:
        raise UlamError("d must be at least 1")
    raw = Fraction(space_size(n, r), _max_radius1_sphere(n, r) ** (d - 1))
    return BoundReport("gv-lower", {"n": n, "r": r, "d": d}, _ceil(raw), raw)


def _binary_space(r: int) -> int:
    if r < 1:
        raise UlamError("r must be positive")
    return space_size(2 * r, r)


def binary_perfect_lower(r: int) -> BoundReport:
    raw = _binary_space(r) / upper_envelope_U(r)
    return BoundReport("binary-perfect-lower", {"n": 2 * r, "r": r}, _ceil(raw), raw)


def binary_gv_lower(r: int, d: int) -> BoundReport:
    if d < 1:
        raise UlamError("d must be at least 1")
    raw = _binary_space(r) / upper_envelope_U(r) ** (d - 1)
    return BoundReport("binary-gv-lower", {"n": 2 * r, "r": r, "d": d}, _ceil(raw), raw)


def applicable_gv_lower(n: int, r: int, d: int) -> BoundReport:
    """The GV-type bound for the regime of (n, r)."""
    if n == 2 * r:
        return binary_gv_lower(r, d)
    return gv_lower(n, r, d)


def table5(t_max: int = 10) -> list[tuple[int, int | None]]:
    return [(t, min_n_overlap(t)) for t in range(1, t_max + 1)]


def table6(r_values=(10, 100, 1000)) -> list[tuple[int, int, float, float]]:
    rows = []
    for r in r_values:
        size = max_sphere_binary(r).size
        u = upper_envelope_U(r)
        rows.append((r, size, u, size / u))
    return rows


# Exhaustive perfect-code search, small n only.

def _perm_balls(n: int, t: int) -> tuple[list[tuple], list[int]]:
    perms = list(_all_perms(n))
    index = {p: k for k, p in enumerate(perms)}
    balls = []
    for p in perms:
        mask = 0
        for q in perms:
            if lcs_length(p, q) >= n - t:
                mask |= 1 << index[q]
        balls.append(mask)
    return perms, balls


def _all_perms(n: int) -> Iterator[tuple]:
    return itertools.permutations(range(1, n + 1))


def find_perfect_code(n: int, t: int, max_n: int = PERFECT_SEARCH_MAX_N) -> list[tuple] | None:
    """A set of radius-t spheres in S_n that tiles S_n with more than one sphere, or None.

    Exact cover search: always branch on the lowest uncovered permutation, and
    prune when the uncovered count is not a multiple of the (constant) sphere size.
    """
    if n > max_n:
        raise CapExceeded(f"perfect-code search limited to n <= {max_n}")
    perms, balls = _perm_balls(n, t)
    total = len(perms)
    size = bin(balls[0]).count("1")
    if size == total or total % size:
        return None
    full = (1 << total) - 1
    containing: list[list[int]] = [[] for _ in range(total)]
    for k, mask in enumerate(balls):
        m = mask
        while m:
            low = m & -m
            containing[low.bit_length() - 1].append(k)
            m ^= low

    chosen: list[int] = []

    def search(covered: int) -> bool:
        if covered == full:
            return True
        free = ~covered & full
        target = (free & -free).bit_length() - 1
        for k in containing[target]:
            if balls[k] & covered == 0:
                chosen.append(k)
                if search(covered | balls[k]):
                    return True
                chosen.pop()
        return False

    if search(0):
        return [perms[k] for k in chosen]
    return None
