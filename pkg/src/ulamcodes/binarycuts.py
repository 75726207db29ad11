"""The binary case n = 2r: cuts, balanced cut profiles and the largest radius-1 sphere.

A *cut* is a locally maximal alternating substring.  In a word over {1, 2}
the cuts tile the word without overlap, so a binary multipermutation is
described (up to the starting symbol) by its tuple of cut lengths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt
from typing import NamedTuple

from .core import Multipermutation, UlamError
from .spheres import SphereReport, psi, psi_tuple


def _check_n(n: int):
    if n < 2 or n % 2:
        raise UlamError(f"binary case needs an even n >= 2, got {n}")


def _check_c(n: int, c: int):
    _check_n(n)
    if not 1 <= c <= n - 1:
        raise UlamError(f"cut count c={c} outside 1..{n - 1}")


@dataclass(frozen=True)
class CutProfile:
    n: int
    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        _check_n(self.n)
        if not lengths or any(x < 1 for x in lengths):
            raise UlamError("cut lengths must be positive")
        if sum(lengths) != self.n:
            raise UlamError(f"cut lengths sum to {sum(lengths)}, expected {self.n}")

    @property
    def r(self) -> int:
        return self.n // 2

    @property
    def c(self) -> int:
        return len(self.lengths)

    @property
    def realizable(self) -> bool:
        return any(x % 2 == 0 for x in self.lengths)


def qc_partition(n: int, c: int) -> CutProfile:
    """The balanced c-cut profile q_c of n."""
    _check_c(n, c)
    q, rem = divmod(n, c)
    if q % 2 == 1 and rem == 0:
        lengths = (q + 1,) + (q,) * (c - 2) + (q - 1,)
    else:
        lengths = (q + 1,) * rem + (q,) * (c - rem)
    return CutProfile(n, lengths)


def cut_lengths(m) -> tuple[int, ...]:
    """Lengths of the cuts of a binary word, left to right."""
    s = m.symbols if isinstance(m, Multipermutation) else tuple(m)
    if not s:
        return ()
    out, run = [], 1
    for a, b in zip(s, s[1:]):
        if a == b:
            out.append(run)
            run = 1
        else:
            run += 1
    out.append(run)
    return tuple(out)


def realize_cuts(profile: CutProfile) -> Multipermutation:
    """A binary multipermutation whose cuts have exactly the given lengths (as a multiset).

    Odd cuts are split into two equal halves around one even cut, so the
    surplus symbol of each odd cut in the first half is cancelled by the
    second half.
    """
    if not profile.realizable:
        raise UlamError(f"profile {profile.lengths} has no even cut and cannot be balanced")
    odd = [x for x in profile.lengths if x % 2]
    even = [x for x in profile.lengths if x % 2 == 0]
    k = len(odd) // 2
    order = odd[:k] + even[:1] + odd[k:] + even[1:]
    word: list[int] = []
    sym = 1
    for length in order:
        # a new cut repeats the previous symbol
        for _ in range(length):
            word.append(sym)
            sym = 3 - sym
        sym = word[-1]
    return Multipermutation(tuple(word), profile.r)


def sd_size_binary(n: int, c: int) -> int:
    """|SD| of any binary multipermutation with c cuts: (c + n - 1)(r - 1)."""
    _check_c(n, c)
    r = n // 2
    return c * (r - 1) + (n - 1) * (r - 1)


def psi_qc(n: int, c: int) -> int:
    """psi summed over q_c in constant time."""
    _check_c(n, c)
    q, rem = divmod(n, c)
    if q % 2 == 1 and rem == 0:
        return psi(q + 1) + psi(q - 1) + (c - 2) * psi(q)
    return rem * psi(q + 1) + (c - rem) * psi(q)


def min_ad_for_cuts(n: int, c: int) -> int:
    """Smallest |AD| over binary multipermutations with exactly c cuts."""
    return psi_tuple(qc_partition(n, c).lengths)


class CutChoice(NamedTuple):
    c: int
    tie: bool


def optimal_cut_count(r: int) -> CutChoice:
    """floor(sqrt r) when r <= fl^2 + fl, else ceil(sqrt r); exact integer comparisons.

    The tie flag compares the two duplication totals directly.  It is set at
    every r = fl^2 + fl and also at r = 5, where 2 and 3 cuts both total 49.
    """
    if r < 1:
        raise UlamError("r must be positive")
    fl = isqrt(r)
    c = fl if r <= fl * fl + fl else fl + 1
    tie = False
    if fl * fl != r and fl + 1 <= 2 * r - 1:
        n = 2 * r
        tie = duplication_total(n, fl) == duplication_total(n, fl + 1)
    return CutChoice(c, tie)


def _candidate_cuts(r: int) -> list[int]:
    fl = isqrt(r)
    ce = fl if fl * fl == r else fl + 1
    n = 2 * r
    return sorted({c for c in (fl, ce) if 1 <= c <= max(1, n - 1)})


def duplication_total(n: int, c: int) -> int:
    """|SD| + min |AD| for c cuts."""
    return sd_size_binary(n, c) + psi_qc(n, c)


def max_sphere_binary(r: int) -> SphereReport:
    """Largest |S(m, 1)| over binary multipermutations with n = 2r."""
    if r < 1:
        raise UlamError("r must be positive")
    n = 2 * r
    tn = 1 + (n - 1) ** 2
    totals = {c: duplication_total(n, c) for c in _candidate_cuts(r)}
    best_c = min(totals, key=lambda c: (totals[c], c))
    choice = optimal_cut_count(r)
    tie = len(set(totals.values())) == 1 and len(totals) == 2
    if choice.c != best_c or choice.tie != tie:
        raise AssertionError(f"cut-count rule disagrees with direct minimum at r={r}")
    profile = qc_partition(n, best_c)
    return SphereReport(
        center=realize_cuts(profile), radius=1, size=tn - totals[best_c],
        method="closed-form",
        components={
            "T_n": tn, "SD": sd_size_binary(n, best_c), "AD": psi_qc(n, best_c),
            "c": best_c, "tie": tie, "q_c": ",".join(map(str, profile.lengths)),
        },
    )


def upper_envelope_U(r: int | float) -> float:
    """Real-valued upper bound on the binary radius-1 sphere, using c-hat = sqrt(r)."""
    if r < 1:
        raise UlamError("U(r) needs r >= 1")
    ch = sqrt(r)
    n = 2 * r
    dup = (ch - 1) * (r - 1) + (n - 1) * (r - 1) + (ch - 1) * ((r / (ch + 1) - 1) ** 2 - 0.25)
    return 1 + (n - 1) ** 2 - dup


def lower_envelope_L(r: int | float) -> float:
    """Real-valued lower bound on the binary radius-1 sphere maximum."""
    if r <= 1:
        raise UlamError("L(r) needs r >= 2 (sqrt(r) - 1 appears in a denominator)")
    ch = sqrt(r)
    n = 2 * r
    dup = (ch + 1) * (r - 1) + (n - 1) * (r - 1) + (ch + 1) * (r / (ch - 1) - 0.5) ** 2
    return 1 + (n - 1) ** 2 - dup


@dataclass(frozen=True)
class FloorIdentities:
    a: int
    b: int | None
    floorcalc: bool
    floordiff: bool
    floordiff2: bool | None
    floordiff2_equality: bool | None


def _sq_floor(x: Fraction) -> int:
    return (x * x).numerator // (x * x).denominator


def appendixD_identities(a: int, b: int | None = None) -> FloorIdentities:
    """Check the floor-of-squares identities for a, and the exchange inequality for (a, b)."""
    half = Fraction(a, 2)
    if a % 2 == 0:
        calc = _sq_floor(half) == half * half
        diff = _sq_floor(half) - _sq_floor(Fraction(a - 1, 2)) == half
    else:
        calc = _sq_floor(half) == half * half - Fraction(1, 4)
        diff = _sq_floor(half) - _sq_floor(Fraction(a - 1, 2)) == half - Fraction(1, 2)
    ineq = eq_ok = None
    if b is not None:
        if b < 1 or a - b < 2:
            raise UlamError("the exchange inequality needs b >= 1 and a - b >= 2")
        lhs, rhs = psi(a) + psi(b), psi(a - 1) + psi(b + 1)
        ineq = lhs >= rhs
        # equality exactly when a - b = 2 with both odd
        eq_ok = (lhs == rhs) == (a - b == 2 and a % 2 == 1 and b % 2 == 1)
    return FloorIdentities(a, b, calc, diff, ineq, eq_ok)


# Inequalities on the balanced profiles, exposed for sweeps.

def check_cplusone(r: int, c: int) -> bool:
    """For c*c >= r: psi(q_c) - psi(q_{c+1}) <= r - 1."""
    n = 2 * r
    if not (1 <= c <= n - 2 and c * c >= r):
        raise UlamError(f"hypothesis fails at r={r}, c={c}")
    return psi_qc(n, c) - psi_qc(n, c + 1) <= r - 1


def check_cminusone(r: int, c: int) -> bool:
    """For c*c <= r and c >= 2: psi(q_{c-1}) - psi(q_c) > r - 1."""
    n = 2 * r
    if not (2 <= c <= n - 1 and c * c <= r):
        raise UlamError(f"hypothesis fails at r={r}, c={c}")
    return psi_qc(n, c - 1) - psi_qc(n, c) > r - 1


def check_floorrootr(r: int) -> bool:
    """r <= fl^2 + fl holds exactly when moving from fl to ceil cuts does not pay."""
    fl = isqrt(r)
    if fl * fl == r:
        return True
    n = 2 * r
    lhs = r <= fl * fl + fl
    rhs = psi_qc(n, fl) - psi_qc(n, fl + 1) <= r - 1
    return lhs == rhs


def check_continuous(r: int, c: int) -> bool:
    """psi(q_c) >= c((r/c - 1)^2 - 1/4), cleared of denominators."""
    n = 2 * r
    _check_c(n, c)
    return 4 * c * psi_qc(n, c) >= 4 * (r - c) ** 2 - c * c
