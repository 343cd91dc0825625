"""Exact arithmetic in finite fields F_q, q = p**k.

Elements are stored in the polynomial basis over F_p: a tuple of ``k``
integers in ``[0, p)``, lowest degree first.  Extension fields use the
canonical modulus, i.e. the smallest monic irreducible polynomial of
degree ``k`` over F_p when coefficient lists are read as base-p numbers
(constant term least significant).

Every element also has an integer index in ``[0, q)`` given by the same
base-p reading; polynomial and matrix code elsewhere in the package keeps
coefficients as indices and uses the lookup tables from
:attr:`FieldParams.tables`.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property
from types import SimpleNamespace
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, IndexOutOfRange, NotPrime, SizeCapExceeded

FieldElement = Tuple[int, ...]

DEFAULT_SIZE_CAP = 2**20
TABLE_CAP = 1024
CAP_ENV = "HOPLATTICE_CAP"


def size_cap() -> int:
    """Current size cap; ``HOPLATTICE_CAP`` overrides the default."""
    raw = os.environ.get(CAP_ENV)
    if raw:
        return int(raw)
    return DEFAULT_SIZE_CAP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_poly_rem(a: list, b: Sequence[int], p: int) -> list:
    # remainder of a by monic b over F_p, both low-degree-first
    a = list(a)
    db = len(b) - 1
    for top in range(len(a) - 1, db - 1, -1):
        c = a[top] % p
        if c:
            shift = top - db
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
    return [x % p for x in a[:db]]


def _irreducible_over_prime(coeffs: Sequence[int], p: int) -> bool:
    d = len(coeffs) - 1
    for dd in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=dd):
            if any(_prime_poly_rem(coeffs, low + (1,), p)):
                continue
            return False
    return True


def _canonical_modulus(p: int, k: int) -> Tuple[int, ...]:
    for value in range(p**k):
        low = tuple((value // p**i) % p for i in range(k))
        cand = low + (1,)
        if low[0] != 0 and _irreducible_over_prime(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldParams:
    """Description of F_q with q = p**k.

    ``modulus`` is the monic defining polynomial over F_p (low degree first,
    leading 1 included), or ``None`` for a prime field.
    """

    p: int
    k: int
    modulus: Optional[Tuple[int, ...]] = None

    @property
    def q(self) -> int:
        return self.p**self.k

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    @cached_property
    def zero(self) -> FieldElement:
        return (0,) * self.k

    @cached_property
    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.k - 1)

    def elements(self):
        """All elements, in index order."""
        return [element_from_index(self, i) for i in range(self.q)]

    @cached_property
    def tables(self) -> SimpleNamespace:
        """Index-level operation tables as numpy arrays.

        ``add[a, b]``, ``sub[a, b]``, ``mul[a, b]``, ``neg[a]`` and ``inv[a]``
        (``inv[0]`` is 0 as a placeholder).
        """
        q = self.q
        if q > TABLE_CAP:
            raise SizeCapExceeded(f"lookup tables limited to q <= {TABLE_CAP}, got {q}")
        elems = self.elements()
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a, ea in enumerate(elems):
            for b in range(a, q):
                eb = elems[b]
                add[a, b] = add[b, a] = element_to_index(self, _add(self, ea, eb))
                mul[a, b] = mul[b, a] = element_to_index(self, _mul(self, ea, eb))
        negs = np.array([element_to_index(self, neg(self, e)) for e in elems], dtype=np.int64)
        invs = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            invs[a] = element_to_index(self, inv(self, elems[a]))
        return SimpleNamespace(add=add, sub=add[:, negs], mul=mul, neg=negs, inv=invs)

    @cached_property
    def table_lists(self) -> SimpleNamespace:
        """Same as :attr:`tables` but as nested Python lists (fast scalar lookups)."""
        t = self.tables
        return SimpleNamespace(
            add=t.add.tolist(), sub=t.sub.tolist(), mul=t.mul.tolist(),
            neg=t.neg.tolist(), inv=t.inv.tolist(),
        )


def field_new(p: int, k: int = 1, cap: Optional[int] = None) -> FieldParams:
    """Build F_{p^k} with its canonical modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    cap = size_cap() if cap is None else cap
    if p**k > cap:
        raise SizeCapExceeded(f"field size {p}^{k} exceeds cap {cap}")
    modulus = _canonical_modulus(p, k) if k > 1 else None
    return FieldParams(p, k, modulus)


def element(F: FieldParams, coeffs: Sequence[int]) -> FieldElement:
    """Validate and normalise a coefficient sequence into an element."""
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != F.k or any(not 0 <= c < F.p for c in coeffs):
        raise ValueError(f"{coeffs!r} is not an element of {F!r}")
    return coeffs


def element_from_index(F: FieldParams, idx: int) -> FieldElement:
    if not 0 <= idx < F.q:
        raise IndexOutOfRange(f"index {idx} outside [0, {F.q})")
    p = F.p
    out = []
    for _ in range(F.k):
        idx, d = divmod(idx, p)
        out.append(d)
    return tuple(out)


def element_to_index(F: FieldParams, a: FieldElement) -> int:
    idx = 0
    for c in reversed(a):
        idx = idx * F.p + c
    return idx


def _add(F, a, b):
    p = F.p
    return tuple((x + y) % p for x, y in zip(a, b))


def _mul(F, a, b):
    p = F.p
    if F.k == 1:
        return ((a[0] * b[0]) % p,)
    prod = [0] * (2 * F.k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return tuple(_prime_poly_rem(prod, F.modulus, p))


def add(F: FieldParams, a: FieldElement, b: FieldElement) -> FieldElement:
    return _add(F, a, b)


def neg(F: FieldParams, a: FieldElement) -> FieldElement:
    return tuple((-x) % F.p for x in a)


def sub(F: FieldParams, a: FieldElement, b: FieldElement) -> FieldElement:
    p = F.p
    return tuple((x - y) % p for x, y in zip(a, b))


def mul(F: FieldParams, a: FieldElement, b: FieldElement) -> FieldElement:
    return _mul(F, a, b)


def power(F: FieldParams, a: FieldElement, e: int) -> FieldElement:
    """``a**e`` by square-and-multiply (``e >= 0``)."""
    result = F.one
    base = a
    while e:
        if e & 1:
            result = _mul(F, result, base)
        base = _mul(F, base, base)
        e >>= 1
    return result


def inv(F: FieldParams, a: FieldElement) -> FieldElement:
    """Multiplicative inverse, computed as ``a**(q-2)``."""
    if not any(a):
        raise DivisionByZero("zero has no inverse")
    return power(F, a, F.q - 2)

