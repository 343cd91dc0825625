"""Brute-force verifiers.

Everything here is written directly against the definitions and only uses
:mod:`hoplattice.gf` for field arithmetic.  Matrices are taken as plain
data (``.field`` and ``.entries``); no code from the polynomial, pattern or
metrics modules is reused, so a bug there cannot hide itself.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import SizeCapExceeded
from .gf import FieldParams

EXHAUSTIVE_CAP = 4096       # q**(r+1) must stay strictly below this
NAIVE_CAP = 2 * 10**7       # (m*n)**2 * L for naive_metrics
COMPOSITION_CAP = 200_000   # beyond this check_lemma1 samples


@dataclass
class Verdict:
    check: str
    params: Dict[str, Any]
    passed: bool
    counterexample: Any = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"check": self.check, "params": self.params, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out


# --------------------------------------------------------------------------
# small dense linear algebra over F_q on index arrays
# --------------------------------------------------------------------------

def _as_array(A) -> np.ndarray:
    return np.array(A.entries, dtype=np.int64)


def _matmul(F: FieldParams, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    t = F.tables
    prods = t.mul[X[:, :, None], Y[None, :, :]]
    acc = prods[:, 0, :]
    for j in range(1, X.shape[1]):
        acc = t.add[acc, prods[:, j, :]]
    return acc


def _apply_all(F: FieldParams, X: np.ndarray, V: np.ndarray) -> np.ndarray:
    # X @ V for a batch of column vectors V (shape (n, N))
    t = F.tables
    out = np.zeros_like(V)
    for i in range(X.shape[0]):
        acc = np.zeros(V.shape[1], dtype=np.int64)
        for j in range(X.shape[1]):
            acc = t.add[acc, t.mul[X[i, j], V[j]]]
        out[i] = acc
    return out


def _all_vectors(q: int, n: int) -> np.ndarray:
    codes = np.arange(q**n)
    return np.array([(codes // q**c) % q for c in range(n)], dtype=np.int64)


def _encode(q: int, V: np.ndarray) -> np.ndarray:
    return (q ** np.arange(V.shape[0], dtype=np.int64)) @ V


def _det_is_nonzero(F: FieldParams, rows: List[List[int]]) -> bool:
    t = F.table_lists
    M = [list(r) for r in rows]
    n = len(M)
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return False
        M[col], M[piv] = M[piv], M[col]
        inv_p = t.inv[M[col][col]]
        for i in range(col + 1, n):
            if M[i][col]:
                factor = t.mul[M[i][col]][inv_p]
                M[i] = [t.sub[a][t.mul[factor][b]] for a, b in zip(M[i], M[col])]
    return True


def _params(A) -> Dict[str, Any]:
    F = A.field
    n = len(A.entries)
    neg = F.table_lists.neg
    poly = [neg[A.entries[i][n - 1]] for i in range(n)] + [1]
    return {"p": F.p, "k": F.k, "q": F.q, "r": n - 1, "poly": poly}


def _guard(A):
    F = A.field
    if F.q ** len(A.entries) >= EXHAUSTIVE_CAP:
        raise SizeCapExceeded(
            f"q^(r+1) = {F.q ** len(A.entries)} outside the exhaustive regime (< {EXHAUSTIVE_CAP})"
        )


# --------------------------------------------------------------------------
# group-theoretic checks on the companion matrix
# --------------------------------------------------------------------------

def _powers_until_identity(F: FieldParams, X: np.ndarray, limit: int
                           ) -> Tuple[List[np.ndarray], bool]:
    """``[X^0, X^1, ...]`` up to (excluding) the first return to the identity.

    The flag is False when no return happened within ``limit`` steps.
    """
    I = np.eye(X.shape[0], dtype=np.int64)
    out = [I]
    cur = X.copy()
    while not np.array_equal(cur, I):
        if len(out) >= limit:
            return out, False
        out.append(cur)
        cur = _matmul(F, cur, X)
    return out, True


def check_group_order(A) -> Verdict:
    """The cyclic group generated by A has order q^(r+1) - 1 and its
    (q^(r+1)-1)/(q-1)-th power generates exactly the nonzero scalar matrices."""
    _guard(A)
    F = A.field
    q = F.q
    X = _as_array(A)
    size = X.shape[0]
    N = q**size - 1
    powers, closed = _powers_until_identity(F, X, N)
    params = _params(A)
    order = len(powers)
    if not closed or order != N:
        return Verdict("group_order", params, False,
                       {"order": order if closed else None, "expected": N})
    B = powers[(N // (q - 1)) % N]
    sub = {tuple(map(tuple, M)) for M in _powers_until_identity(F, B, N)[0]}
    scalars = {tuple(tuple(y if i == j else 0 for j in range(size)) for i in range(size))
               for y in range(1, q)}
    ok = sub == scalars
    y = int(B[0, 0])
    return Verdict("group_order", params, ok,
                   None if ok else {"scalar_power_exponent": N // (q - 1)},
                   {"order": order, "scalar": y, "scalar_subgroup_size": len(sub)})


def check_transitivity(A, side: str = "column") -> Verdict:
    """Every nonzero vector's orbit under A (left action on columns, or right
    action on rows) visits each nonzero vector exactly once per period."""
    _guard(A)
    F = A.field
    q = F.q
    X = _as_array(A)
    if side == "row":
        X = X.T.copy()  # v A == (A^T v^T)^T
    elif side != "column":
        raise ValueError(f"side must be 'column' or 'row', got {side!r}")
    size = X.shape[0]
    N = q**size - 1
    V = _all_vectors(q, size)[:, 1:]
    codes = np.empty((N, N), dtype=np.int64)
    cur = V
    for t in range(N):
        codes[t] = _encode(q, cur)
        cur = _apply_all(F, X, cur)
    codes.sort(axis=0)
    good = np.all(codes == np.arange(1, N + 1)[:, None], axis=0)
    params = dict(_params(A), side=side)
    if good.all():
        return Verdict(f"transitivity_{side}", params, True, details={"orbits": N})
    bad = int(np.flatnonzero(~good)[0])
    return Verdict(f"transitivity_{side}", params, False, {"vector": V[:, bad].tolist()})


def check_stabilizer(A) -> Verdict:
    """Powers of A mapping the row set {(0,...,0,y): y != 0} into itself are
    exactly the nonzero scalar matrices."""
    _guard(A)
    F = A.field
    q = F.q
    t = F.table_lists
    X = _as_array(A)
    size = X.shape[0]
    N = q**size - 1
    powers, _ = _powers_until_identity(F, X, N)
    found = []
    for e, M in enumerate(powers):
        last = M[-1].tolist()
        keeps = True
        for y in range(1, q):
            row = [t.mul[y][c] for c in last]
            if any(row[:-1]) or row[-1] == 0:
                keeps = False
                break
        if keeps:
            found.append((e, M))
    mats = {tuple(map(tuple, M)) for _, M in found}
    scalars = {tuple(tuple(y if i == j else 0 for j in range(size)) for i in range(size))
               for y in range(1, q)}
    exps = [e for e, _ in found]
    if mats == scalars and len(found) == q - 1:
        return Verdict("stabilizer", _params(A), True,
                       details={"exponents": exps, "scalars": sorted(int(M[0, 0]) for _, M in found)})
    offending = next((e for e, M in found if tuple(map(tuple, M)) not in scalars), None)
    return Verdict("stabilizer", _params(A), False,
                   {"exponent": offending, "exponents": exps})


def check_row_independence(A) -> Verdict:
    """For every nonzero row vector a, the rows a, aA, ..., aA^r are independent."""
    _guard(A)
    F = A.field
    q = F.q
    X = _as_array(A)
    size = X.shape[0]
    alphas = _all_vectors(q, size)[:, 1:]  # columns are the row vectors a
    XT = X.T.copy()
    iterates = [alphas]
    for _ in range(size - 1):
        iterates.append(_apply_all(F, XT, iterates[-1]))
    for col in range(alphas.shape[1]):
        rows = [it[:, col].tolist() for it in iterates]
        if not _det_is_nonzero(F, rows):
            return Verdict("row_independence", _params(A), False,
                           {"alpha": alphas[:, col].tolist(), "rows": rows})
    return Verdict("row_independence", _params(A), True, details={"vectors": alphas.shape[1]})


# --------------------------------------------------------------------------
# partition bound
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionInstance:
    total: int
    parts: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen = set()
        for part in self.parts:
            if seen & part:
                raise ValueError("parts overlap")
            seen |= part
        if seen != set(range(self.total)):
            raise ValueError("parts do not cover all elements")

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "PartitionInstance":
        parts, start = [], 0
        for c in sizes:
            parts.append(frozenset(range(start, start + c)))
            start += c
        return cls(start, tuple(parts))


def partition_sum(P: PartitionInstance) -> int:
    """Number of ordered pairs of distinct elements lying in the same part."""
    where = {x: k for k, part in enumerate(P.parts) for x in part}
    return sum(
        1
        for x in range(P.total)
        for y in range(P.total)
        if x != y and where[x] == where[y]
    )


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` non-negative integers."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        sizes = []
        for b in bars:
            sizes.append(b - prev - 1)
            prev = b
        sizes.append(total + parts - 1 - prev - 1)
        yield tuple(sizes)


def _random_composition(rng: random.Random, total: int, parts: int) -> Tuple[int, ...]:
    bars = sorted(rng.sample(range(total + parts - 1), parts - 1))
    sizes, prev = [], -1
    for b in bars:
        sizes.append(b - prev - 1)
        prev = b
    sizes.append(total + parts - 2 - prev)
    return tuple(sizes)


def check_lemma1(m: int, n: int, samples: int = 20_000, seed: int = 0) -> Verdict:
    """Sum of |part|(|part|-1) over any split of m*n elements into n parts is
    at least m^2 n - m n, with equality exactly for equal parts.

    Exhaustive when the number of compositions is at most ``COMPOSITION_CAP``,
    otherwise ``samples`` seeded random compositions plus the balanced one.
    """
    total = m * n
    bound = m * m * n - m * n
    count = math.comb(total + n - 1, n - 1)
    exhaustive = count <= COMPOSITION_CAP
    if exhaustive:
        pool: Iterator[Tuple[int, ...]] = compositions(total, n)
    else:
        rng = random.Random(seed)
        pool = itertools.chain([(m,) * n],
                               (_random_composition(rng, total, n) for _ in range(samples)))
    literal = total <= 12
    checked = 0
    equal_cases = []
    for sizes in pool:
        checked += 1
        if literal:
            value = partition_sum(PartitionInstance.from_sizes(sizes))
        else:
            value = sum(c * (c - 1) for c in sizes)
        balanced = all(c == m for c in sizes)
        if value < bound or (value == bound) != balanced:
            return Verdict("lemma1", {"m": m, "n": n}, False,
                           {"sizes": list(sizes), "sum": value, "bound": bound})
        if value == bound:
            equal_cases.append(list(sizes))
    mode = "exhaustive" if exhaustive else "sampled"
    return Verdict("lemma1", {"m": m, "n": n}, True,
                   details={"mode": mode, "checked": checked, "bound": bound,
                            "equality_at": equal_cases[:1]})


# --------------------------------------------------------------------------
# metrics straight from the definitions
# --------------------------------------------------------------------------

def naive_metrics(P, cap: int = 64):
    """Recompute every :class:`~hoplattice.metrics.MetricsReport` field from
    ``P.slot`` alone, reading each definition literally."""
    from .metrics import MetricsReport

    m, n = P.frame
    N = m * n
    L = P.period
    if N * N * L > NAIVE_CAP:
        raise SizeCapExceeded(f"(mn)^2 L = {N * N * L} exceeds naive cap {NAIVE_CAP}")
    j = [[P.slot(t, s).j for s in range(N)] for t in range(3 * L)]
    pairs = [(s, s2) for s in range(N) for s2 in range(s + 1, N)]

    # condition (P), pair by pair
    T = None
    for cand in range(1, L + 1):
        if all((j[t][s] == j[t][s2]) == (j[t + cand][s] == j[t + cand][s2])
               for t in range(L) for s, s2 in pairs):
            T = cand
            break

    best_ratio, ratio_w = Fraction(0), None
    for s, s2 in pairs:
        c = Fraction(sum(1 for t in range(L) if j[t][s] == j[t][s2]), L)
        if ratio_w is None or c > best_ratio:
            best_ratio, ratio_w = c, (s, s2)

    longest, cont_w = 0, None
    for s, s2 in pairs:
        for t in range(L):
            run = 0
            while run < 2 * L and j[t + run][s] == j[t + run][s2]:
                run += 1
            if run > longest:
                longest, cont_w = run, (s, s2, t)
    continual: Optional[int] = longest
    if longest >= 2 * L or longest > cap:
        continual = None

    balanced = True
    for t in range(L):
        counts: Dict[int, int] = {}
        for s in range(N):
            counts[j[t][s]] = counts.get(j[t][s], 0) + 1
        if any(counts.get(slot, 0) != m for slot in range(n)):
            balanced = False

    e, v = 0, 1
    while v < m:
        v, e = v * n, e + 1
    cbound = e if v == m else math.log(m) / math.log(n)

    return MetricsReport(
        m=m, n=n, column_period=T,
        max_collision_ratio=best_ratio, ratio_witness=ratio_w,
        max_continual=continual, continual_witness=cont_w,
        occupancy_balanced=balanced,
        ratio_bound=Fraction(m - 1, m * n - 1), continual_bound=cbound,
    )


def run_all(A) -> List[Verdict]:
    """Every oracle check for one companion matrix of size r+1 over F_q."""
    q = A.field.q
    r = len(A.entries) - 1
    return [
        check_group_order(A),
        check_transitivity(A, "column"),
        check_transitivity(A, "row"),
        check_stabilizer(A),
        check_row_independence(A),
        check_lemma1(q**r, q),
    ]
