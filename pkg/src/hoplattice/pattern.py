"""Frame structures and hopping patterns.

A pattern assigns every logical resource ``s`` in ``[0, m*n)`` a slot
``(i, j)`` in each frame ``t``: ``i`` is the frequency index in ``[0, m)``
and ``j`` the time index in ``[0, n)``.  Two resources collide in frame
``t`` when their ``j`` values agree.

Two constructions are provided:

* :class:`CompanionPattern` -- over F_q with ``m = q**r`` and ``n = q``, the
  state of each resource is a column vector in F_q^(r+1) advanced by the
  companion matrix of a primitive polynomial of degree ``r + 1``.
* :class:`LinearPattern` -- the baseline ``j(t) = (j(0) + i(0) t) mod n``
  with a fixed frequency index.

Note that under the companion construction the resource whose state is the
zero vector never moves: it sits in slot ``(0, 0)`` every frame.  This does
not affect any collision metric, which depends only on differences between
states.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    BadDimensions,
    DegreeMismatch,
    DegreeTooSmall,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotPrimitive,
)
from .gf import FieldParams
from .polyalg import MonicPoly, is_primitive

Vector = Tuple[int, ...]


class FrameStructure(NamedTuple):
    m: int  # frequency-domain locations
    n: int  # time-domain locations

    @property
    def size(self) -> int:
        return self.m * self.n


class Slot(NamedTuple):
    i: int
    j: int


# --------------------------------------------------------------------------
# linear algebra over F_q, entries stored as element indices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    field: FieldParams
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@dataclass(frozen=True)
class CompanionMatrix(Matrix):
    poly: Optional[MonicPoly] = field(default=None, compare=False)


def identity(F: FieldParams, size: int) -> Matrix:
    return Matrix(F, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))


def companion_matrix(f: MonicPoly) -> CompanionMatrix:
    """Companion matrix of ``f``: ones on the subdiagonal, last column ``-c_0, ..., -c_r``."""
    if f.degree < 2:
        raise DegreeTooSmall(f"companion pattern needs degree >= 2, got {f.degree}")
    size = f.degree
    neg = f.field.table_lists.neg
    rows = []
    for i in range(size):
        row = [1 if i == j + 1 else 0 for j in range(size - 1)]
        row.append(neg[f.coeffs[i]])
        rows.append(tuple(row))
    return CompanionMatrix(f.field, tuple(rows), f)


def mat_vec_mul(A: Matrix, v: Sequence[int]) -> Vector:
    if A.shape[1] != len(v):
        raise DimensionMismatch(f"{A.shape} matrix times length-{len(v)} vector")
    t = A.field.table_lists
    add, mul = t.add, t.mul
    out = []
    for row in A.entries:
        acc = 0
        for a, x in zip(row, v):
            acc = add[acc][mul[a][x]]
        out.append(acc)
    return tuple(out)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"{A.shape} times {B.shape}")
    t = A.field.table_lists
    add, mul = t.add, t.mul
    cols = list(zip(*B.entries))
    rows = []
    for row in A.entries:
        out = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                acc = add[acc][mul[a][b]]
            out.append(acc)
        rows.append(tuple(out))
    return Matrix(A.field, tuple(rows))


def mat_pow(A: Matrix, e: int) -> Matrix:
    """``A**e`` by repeated squaring; ``A**0`` is the identity."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatch("matrix power needs a square matrix")
    result = identity(A.field, A.size)
    base: Matrix = A
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def _step_states(A: Matrix, states: np.ndarray) -> np.ndarray:
    """Apply ``A`` to every column of ``states`` (shape ``(r+1, N)``)."""
    t = A.field.tables
    out = np.zeros_like(states)
    for i, row in enumerate(A.entries):
        acc = np.zeros(states.shape[1], dtype=np.int64)
        for a, x in zip(row, states):
            if a:
                acc = t.add[acc, t.mul[a][x]]
        out[i] = acc
    return out


# --------------------------------------------------------------------------
# resource <-> state encoding
# --------------------------------------------------------------------------

def resource_to_state(F: FieldParams, r: int, s: int) -> Vector:
    """Base-q digits of ``s`` (least significant first) as a state vector.

    Coordinates ``0..r-1`` encode the frequency index, coordinate ``r`` the
    time index.
    """
    q = F.q
    if not 0 <= s < q ** (r + 1):
        raise IndexOutOfRange(f"resource {s} outside [0, {q ** (r + 1)})")
    out = []
    for _ in range(r + 1):
        s, d = divmod(s, q)
        out.append(d)
    return tuple(out)


def state_to_resource(F: FieldParams, v: Sequence[int]) -> int:
    s = 0
    for d in reversed(v):
        s = s * F.q + d
    return s


def state_to_slot(F: FieldParams, v: Sequence[int]) -> Slot:
    i = 0
    for d in reversed(v[:-1]):
        i = i * F.q + d
    return Slot(i, v[-1])


# --------------------------------------------------------------------------
# patterns
# --------------------------------------------------------------------------

class Pattern:
    """Common interface: ``frame``, ``period`` (a full state period), ``slot``."""

    kind: str
    frame: FrameStructure
    period: int

    @property
    def num_resources(self) -> int:
        return self.frame.size

    def _check_resource(self, s: int):
        if not 0 <= s < self.num_resources:
            raise IndexOutOfRange(f"resource {s} outside [0, {self.num_resources})")

    def slot(self, t: int, s: int) -> Slot:
        raise NotImplementedError

    def slot_table(self, t0: int, t1: int) -> Tuple[np.ndarray, np.ndarray]:
        """Frequency and time indices for frames ``[t0, t1)``, each of shape
        ``(t1 - t0, m*n)``."""
        rows = [[self.slot(t, s) for s in range(self.num_resources)] for t in range(t0, t1)]
        arr = np.array(rows, dtype=np.int64).reshape(t1 - t0, self.num_resources, 2)
        return arr[:, :, 0], arr[:, :, 1]

    def time_table(self, t0: int, t1: int) -> np.ndarray:
        return self.slot_table(t0, t1)[1]

    def schedule(self, t0: int, t1: int) -> List[Tuple[int, int, int, int]]:
        """Rows ``(t, s, i, j)`` for frames ``[t0, t1)``, ordered by ``t`` then ``s``."""
        if not 0 <= t0 <= t1:
            raise ValueError(f"bad frame range [{t0}, {t1})")
        if t0 == t1:
            return []
        I, J = self.slot_table(t0, t1)
        return [
            (t0 + dt, s, int(I[dt, s]), int(J[dt, s]))
            for dt in range(t1 - t0)
            for s in range(self.num_resources)
        ]


class CompanionPattern(Pattern):
    """Pattern driven by the companion matrix of a primitive polynomial."""

    kind = "companion"

    def __init__(self, field: FieldParams, r: int, poly: MonicPoly):
        if poly.field != field:
            raise FieldMismatch("polynomial is over a different field")
        if poly.degree != r + 1:
            raise DegreeMismatch(f"need degree r+1 = {r + 1}, got {poly.degree}")
        if r < 1:
            raise DegreeTooSmall("r must be >= 1")
        if not is_primitive(poly):
            raise NotPrimitive(f"{poly} is not primitive over {field!r}")
        self.field = field
        self.r = r
        self.poly = poly
        self.matrix = companion_matrix(poly)
        q = field.q
        self.frame = FrameStructure(q**r, q)
        self.period = q ** (r + 1) - 1

    def __repr__(self) -> str:
        return f"CompanionPattern({self.field!r}, r={self.r}, f={self.poly})"

    def state(self, t: int, s: int) -> Vector:
        self._check_resource(s)
        v = resource_to_state(self.field, self.r, s)
        return mat_vec_mul(mat_pow(self.matrix, t % self.period), v)

    def slot(self, t: int, s: int) -> Slot:
        return state_to_slot(self.field, self.state(t, s))

    def initial_states(self) -> np.ndarray:
        """States of all resources at frame 0, shape ``(r+1, m*n)``."""
        q = self.field.q
        s = np.arange(self.num_resources)
        return np.array([(s // q**c) % q for c in range(self.r + 1)], dtype=np.int64)

    def state_table(self, t0: int, t1: int) -> np.ndarray:
        """States for frames ``[t0, t1)``, shape ``(t1 - t0, r+1, m*n)``."""
        start = mat_pow(self.matrix, t0 % self.period)
        cur = _step_states(start, self.initial_states())
        out = np.empty((t1 - t0, self.r + 1, self.num_resources), dtype=np.int64)
        for dt in range(t1 - t0):
            out[dt] = cur
            cur = _step_states(self.matrix, cur)
        return out

    def slot_table(self, t0, t1):
        S = self.state_table(t0, t1)
        weights = self.field.q ** np.arange(self.r, dtype=np.int64)
        I = np.tensordot(S[:, : self.r, :], weights, axes=([1], [0]))
        return I.astype(np.int64), S[:, self.r, :]


class LinearPattern(Pattern):
    """Baseline ``i(t) = i0``, ``j(t) = (j0 + i0 t) mod n`` with ``s = i0*n + j0``."""

    kind = "linear"

    def __init__(self, m: int, n: int):
        if not 1 <= m <= n:
            raise BadDimensions(f"baseline requires 1 <= m <= n, got m={m}, n={n}")
        self.frame = FrameStructure(m, n)
        self.period = n

    def __repr__(self) -> str:
        return f"LinearPattern(m={self.frame.m}, n={self.frame.n})"

    def slot(self, t: int, s: int) -> Slot:
        self._check_resource(s)
        i0, j0 = divmod(s, self.frame.n)
        return Slot(i0, (j0 + i0 * t) % self.frame.n)

    def slot_table(self, t0, t1):
        n = self.frame.n
        i0, j0 = np.divmod(np.arange(self.num_resources), n)
        t = np.arange(t0, t1)[:, None]
        return np.broadcast_to(i0, (t1 - t0, i0.size)).copy(), (j0 + i0 * t) % n


class RelabeledPattern(Pattern):
    """``base`` with its frame-0 assignment composed with a permutation of resources."""

    def __init__(self, base: Pattern, perm: Sequence[int]):
        perm = [int(x) for x in perm]
        if sorted(perm) != list(range(base.num_resources)):
            raise ValueError("perm must be a permutation of the resources")
        self.base = base
        self.perm = np.array(perm, dtype=np.int64)
        self.kind = base.kind
        self.frame = base.frame
        self.period = base.period

    def slot(self, t, s):
        self._check_resource(s)
        return self.base.slot(t, int(self.perm[s]))

    def slot_table(self, t0, t1):
        I, J = self.base.slot_table(t0, t1)
        return I[:, self.perm], J[:, self.perm]


def companion_pattern_new(field: FieldParams, r: int, poly: MonicPoly) -> CompanionPattern:
    return CompanionPattern(field, r, poly)


def linear_pattern_new(m: int, n: int) -> LinearPattern:
    return LinearPattern(m, n)


def relabel(P: Pattern, perm: Sequence[int]) -> RelabeledPattern:
    return RelabeledPattern(P, perm)


def slot(P: Pattern, t: int, s: int) -> Slot:
    return P.slot(t, s)


def schedule(P: Pattern, t0: int, t1: int) -> List[Tuple[int, int, int, int]]:
    return P.schedule(t0, t1)
