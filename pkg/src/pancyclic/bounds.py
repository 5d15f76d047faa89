"""Closed-form lower bounds on the minimum pancyclic edge count m(n).

A pancyclic graph on n vertices needs at least n - 2 cycles (one per
length), while a Hamiltonian graph with k chords has at most 2^(k+1) - 1
cycles. That single counting argument yields the classical lower bound
m(n) >= n + ceil(log2(n-1)) - 1, computed here in pure integer arithmetic.
The sharper cycle-count bound of Rautenbach and Stella is evaluated as
stated; its correction term is negative for small k, so every consumer uses
min(2^(k+1) - 1, rautenbach-stella) as the effective bound.

The same counting idea bounds the maximum degree: cycles through 2 chords at
a shared vertex are almost all impossible, so a vertex of degree > 4 wipes
out a quantifiable fraction of the 2^(k+1) - 1 budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def h_iterated_log(n: int) -> int:
    """Smallest h >= 1 with the h-fold binary log of n strictly below 2.

    log2 applied h times to n is < 2 iff n < 2^2^...^2 (a tower of h+1 twos),
    so the comparison is done against exact integer towers: 4, 16, 65536, ...
    """
    if n < 2:
        raise ValueError(f"iterated log needs n >= 2, got {n}")
    threshold = 4
    h = 1
    while n >= threshold:
        threshold = 2 ** threshold
        h += 1
    return h


def bondy_lower(n: int) -> int:
    """Lower bound on m(n): n + (smallest k with 2^(k+1) - 1 >= n - 2)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    k = 0
    while 2 ** (k + 1) - 1 < n - 2:
        k += 1
    return n + k


def rs_cycle_bound(k: float) -> float:
    """Rautenbach-Stella upper bound on the cycle count with k chords.

    2^(k+1) - 1 - k * ((sqrt(k) - 2) / (log2(k) + 2) - log2(k) / 4),
    evaluated as stated; k = 0 falls back to the exact count 1. The inner
    term is negative for small k, where the plain 2^(k+1) - 1 is stronger.
    """
    if k < 0:
        raise ValueError(f"chord count must be nonnegative, got {k}")
    if k == 0:
        return 1.0
    log2k = math.log2(k)
    return 2.0 ** (k + 1) - 1 - k * ((math.sqrt(k) - 2) / (log2k + 2) - log2k / 4)


def rs_lower(n: int) -> int:
    """Lower bound n + C, with C the largest k whose effective cycle bound is < n - 2.

    The effective bound per k is min(2^(k+1) - 1, rs_cycle_bound(k)). Note
    the statement is implemented verbatim: k = C chords already give too few
    cycles, so n + C + 1 is arguably the honest bound; reports expose both.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    c = 0
    k = 1
    while True:
        effective = min(2 ** (k + 1) - 1, rs_cycle_bound(k))
        if effective < n - 2:
            c = k
            k += 1
        else:
            break
    return n + c


def max_degree_feasible(n: int, k: int, delta: int) -> bool:
    """Cycle-count feasibility of max degree delta > 4 in a pancyclic graph.

    Returns True iff n - 2 <= 2^(k - delta - 1) * (delta^2 + 3*delta + 4) - 1,
    the necessary condition for a pancyclic Hamiltonian graph with k chords
    to have a vertex of degree delta. False means such a graph cannot exist.
    Exact arithmetic: for k - delta - 1 < 0 the comparison is cross-multiplied
    instead of evaluated in floats.
    """
    if delta <= 4:
        raise ValueError(f"criterion applies only to max degree > 4, got {delta}")
    if k < delta:
        raise ValueError(f"criterion needs k >= delta, got k={k}, delta={delta}")
    poly = delta * delta + 3 * delta + 4
    e = k - delta - 1
    if e >= 0:
        return n - 2 <= (poly << e) - 1
    return (n - 1) << (-e) <= poly


@dataclass(frozen=True)
class BoundsReport:
    """Lower bounds on m(n) plus the construction upper bound where known.

    rs_lower is the verbatim n + C value; rs_lower_strict is n + C + 1 (C
    chords give too few cycles, so the minimum feasible chord count is
    C + 1). construction_upper is n + 5 in the range the five-chord
    construction covers, absent elsewhere. No ordering between bondy_lower
    and rs_lower is asserted.
    """

    n: int
    bondy_lower: int
    rs_lower: int
    rs_lower_strict: int
    h_of_n: int
    construction_upper: int | None

    def to_json_dict(self) -> dict:
        doc = {
            "n": self.n,
            "bondy_lower": self.bondy_lower,
            "rs_lower": self.rs_lower,
            "rs_lower_strict": self.rs_lower_strict,
            "h_of_n": self.h_of_n,
            "upper_bound_note": "m(n) <= n + log2(n) + H(n) + O(1), constant unspecified",
        }
        if self.construction_upper is not None:
            doc["construction_upper"] = self.construction_upper
        return doc


def bounds_report(n: int) -> BoundsReport:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rs = rs_lower(n)
    return BoundsReport(
        n=n,
        bondy_lower=bondy_lower(n),
        rs_lower=rs,
        rs_lower_strict=rs + 1,
        h_of_n=h_iterated_log(n),
        construction_upper=n + 5 if 23 <= n <= 37 else None,
    )
