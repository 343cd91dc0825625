"""Exact evaluation metrics for periodic hopping patterns.

All patterns here are periodic with a known state period ``L``, so the
long-run collision frequency of a pair is exactly its collision count over
one period divided by ``L``; ratios are returned as :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import numpy as np

from .errors import SamePair, SizeCapExceeded
from .pattern import CompanionPattern, Pattern, _step_states

DEFAULT_CONTINUAL_CAP = 64
DEFAULT_WORK_CAP = 10**6

Pair = Tuple[int, int]


def _work_check(P: Pattern, work_cap: Optional[int]):
    cap = DEFAULT_WORK_CAP if work_cap is None else work_cap
    if P.num_resources * P.period > cap:
        raise SizeCapExceeded(
            f"m*n*L = {P.num_resources * P.period} exceeds evaluation cap {cap}"
        )


def _pairs(N: int) -> Tuple[np.ndarray, np.ndarray]:
    # lexicographic (s, s') order with s < s'
    return np.triu_indices(N, 1)


def _partition_signature(row: np.ndarray) -> Tuple[int, ...]:
    # relabel j-values by order of first appearance so only the grouping matters
    labels: Dict[int, int] = {}
    return tuple(labels.setdefault(int(j), len(labels)) for j in row)


def column_period(P: Pattern) -> int:
    """Smallest ``T >= 1`` after which the who-collides-with-whom partition repeats."""
    L = P.period
    J = P.time_table(0, L)
    sigs = [_partition_signature(J[t]) for t in range(L)]
    for T in range(1, L + 1):
        if all(sigs[t] == sigs[(t + T) % L] for t in range(L)):
            assert L % T == 0, (L, T)
            return T
    raise AssertionError("unreachable: T = L always works")


def collision_count_pair(P: Pattern, s: int, s2: int) -> int:
    """Frames ``t`` in ``[0, L)`` with ``j(t)(s) == j(t)(s2)``."""
    if s == s2:
        raise SamePair(f"resources must differ, got {s} twice")
    P._check_resource(s)
    P._check_resource(s2)
    J = P.time_table(0, P.period)
    return int(np.count_nonzero(J[:, s] == J[:, s2]))


def _pair_counts(P: Pattern) -> np.ndarray:
    J = P.time_table(0, P.period)
    a, b = _pairs(P.num_resources)
    counts = np.zeros(a.size, dtype=np.int64)
    for row in J:
        counts += row[a] == row[b]
    return counts


def _orbit_counts(P: CompanionPattern) -> np.ndarray:
    """Per pair, the count of ``t`` where ``A^t (state(s) - state(s'))`` has
    last coordinate 0; computed once per nonzero difference vector."""
    F, r = P.field, P.r
    q = F.q
    N = q ** (r + 1)
    weights = q ** np.arange(r + 1, dtype=np.int64)
    vecs = np.array([(np.arange(N) // q**c) % q for c in range(r + 1)], dtype=np.int64)
    zero_last = np.zeros(N, dtype=np.int64)
    cur = vecs
    for _ in range(P.period):
        zero_last += cur[r] == 0
        cur = _step_states(P.matrix, cur)
    states = P.initial_states()
    a, b = _pairs(P.num_resources)
    diff = F.tables.sub[states[:, a], states[:, b]]
    return zero_last[weights @ diff]


def max_collision_ratio(P: Pattern, method: str = "auto", work_cap: Optional[int] = None
                        ) -> Tuple[Fraction, Optional[Pair]]:
    """Largest per-pair collision frequency and the first pair attaining it.

    ``method`` is ``"pairs"`` (all pairs, frame by frame), ``"orbit"``
    (companion patterns only: one orbit walk per difference vector) or
    ``"auto"``.
    """
    _work_check(P, work_cap)
    if P.num_resources < 2:
        return Fraction(0), None
    if method == "auto":
        method = "orbit" if isinstance(P, CompanionPattern) else "pairs"
    if method == "orbit":
        counts = _orbit_counts(P)
    elif method == "pairs":
        counts = _pair_counts(P)
    else:
        raise ValueError(f"unknown method {method!r}")
    k = int(np.argmax(counts))
    a, b = _pairs(P.num_resources)
    return Fraction(int(counts[k]), P.period), (int(a[k]), int(b[k]))


def _continual_scan(P: Pattern, cap: int) -> Tuple[Optional[int], Optional[Tuple[int, int, int]]]:
    L = P.period
    J = P.time_table(0, 2 * L)
    a, b = _pairs(P.num_resources)
    run = np.zeros(a.size, dtype=np.int64)
    best = np.zeros(a.size, dtype=np.int64)
    best_start = np.zeros(a.size, dtype=np.int64)
    for t, row in enumerate(J):
        hit = row[a] == row[b]
        run = np.where(hit, run + 1, 0)
        better = run > best
        best = np.where(better, run, best)
        best_start = np.where(better, t - run + 1, best_start)
    if best.size == 0 or best.max() == 0:
        return 0, None
    k = int(np.argmax(best))
    witness = (int(a[k]), int(b[k]), int(best_start[k]))
    top = int(best[k])
    # a run spanning the whole window never ends
    if top >= 2 * L or top > cap:
        return None, witness
    return top, witness


def max_continual_collisions(P: Pattern, cap: int = DEFAULT_CONTINUAL_CAP,
                             work_cap: Optional[int] = None) -> Optional[int]:
    """Longest run of consecutive frames in which some pair collides.

    Returns ``None`` when the run exceeds ``cap`` or never ends.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _work_check(P, work_cap)
    return _continual_scan(P, cap)[0]


def occupancy(P: Pattern, t: int) -> Dict[int, int]:
    """Number of resources in each time slot ``j`` at frame ``t``."""
    if t < 0:
        raise ValueError("t must be >= 0")
    J = P.time_table(t, t + 1)[0]
    counts = np.bincount(J, minlength=P.frame.n)
    return {j: int(c) for j, c in enumerate(counts)}


def occupancy_balanced(P: Pattern) -> bool:
    J = P.time_table(0, P.period)
    m, n = P.frame
    return all(bool(np.all(np.bincount(row, minlength=n) == m)) for row in J)


def continual_bound_ceil(m: int, n: int) -> int:
    """Smallest integer >= log_n(m)."""
    e, v = 0, 1
    while v < m:
        v *= n
        e += 1
    return e


def lower_bounds(m: int, n: int) -> Tuple[Fraction, Union[int, float]]:
    """Lower bounds on the collision ratio and the continual collision number."""
    if m < 1 or n < 2:
        raise ValueError("lower bounds need m >= 1, n >= 2")
    e = continual_bound_ceil(m, n)
    return Fraction(m - 1, m * n - 1), (e if n**e == m else math.log(m) / math.log(n))


def first_rendezvous(P: Pattern, s: int, s2: int) -> Optional[int]:
    """First frame in ``[0, L)`` where ``s`` and ``s2`` sit in different time slots."""
    if s == s2:
        raise SamePair(f"resources must differ, got {s} twice")
    P._check_resource(s)
    P._check_resource(s2)
    J = P.time_table(0, P.period)
    apart = np.flatnonzero(J[:, s] != J[:, s2])
    return int(apart[0]) if apart.size else None


@dataclass(frozen=True)
class MetricsReport:
    m: int
    n: int
    column_period: int
    max_collision_ratio: Fraction
    ratio_witness: Optional[Pair]
    max_continual: Optional[int]  # None: cap exceeded
    continual_witness: Optional[Tuple[int, int, int]]
    occupancy_balanced: bool
    ratio_bound: Fraction
    continual_bound: Union[int, float]

    @property
    def continual_bound_ceil(self) -> int:
        return continual_bound_ceil(self.m, self.n)

    @property
    def ratio_meets_bound(self) -> bool:
        return self.max_collision_ratio == self.ratio_bound

    @property
    def continual_meets_bound(self) -> bool:
        return self.max_continual == self.continual_bound_ceil

    def to_dict(self) -> dict:
        if isinstance(self.continual_bound, int):
            cbound = self.continual_bound
        else:
            cbound = {"log": {"m": self.m, "n": self.n}}
        return {
            "column_period": self.column_period,
            "max_collision_ratio": _ratio_json(self.max_collision_ratio),
            "max_continual": "cap_exceeded" if self.max_continual is None else self.max_continual,
            "occupancy_balanced": self.occupancy_balanced,
            "bounds": {
                "max_collision_ratio": _ratio_json(self.ratio_bound),
                "max_continual": cbound,
            },
            "witnesses": {
                "max_collision_ratio": None if self.ratio_witness is None else list(self.ratio_witness),
                "max_continual": None if self.continual_witness is None else list(self.continual_witness),
            },
        }


def _ratio_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def evaluate(P: Pattern, cap: int = DEFAULT_CONTINUAL_CAP,
             work_cap: Optional[int] = None) -> MetricsReport:
    """All three metrics, both bounds, witnesses and the occupancy flag."""
    _work_check(P, work_cap)
    m, n = P.frame
    ratio, rw = max_collision_ratio(P, work_cap=work_cap)
    continual, cw = _continual_scan(P, cap)
    rbound, cbound = lower_bounds(m, n)
    return MetricsReport(
        m=m,
        n=n,
        column_period=column_period(P),
        max_collision_ratio=ratio,
        ratio_witness=rw,
        max_continual=continual,
        continual_witness=cw,
        occupancy_balanced=occupancy_balanced(P),
        ratio_bound=rbound,
        continual_bound=cbound,
    )
