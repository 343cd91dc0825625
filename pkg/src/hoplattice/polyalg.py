"""Polynomials over F_q: modular arithmetic, irreducibility, order of x, primitivity.

A polynomial is a tuple of element indices (see :mod:`hoplattice.gf`),
lowest degree first, with no trailing zeros; the zero polynomial is ``()``.
:class:`MonicPoly` additionally carries its field and keeps the leading 1.

Candidate polynomials are enumerated in canonical order: the coefficient
list below the leading term is read as a base-q number, constant term least
significant.  Under that order x^3+x+1 precedes x^3+x^2+1 over F_2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from . import gf
from .errors import (
    DegreeMismatch,
    FieldMismatch,
    NotIrreducible,
    SizeCapExceeded,
    ZeroConstantTerm,
)
from .gf import FieldParams

Poly = Tuple[int, ...]


@dataclass(frozen=True)
class MonicPoly:
    """Monic polynomial ``x^d + c_{d-1} x^{d-1} + ... + c_0`` over ``field``.

    ``coeffs`` holds ``(c_0, ..., c_{d-1}, 1)`` as element indices.
    """

    field: FieldParams
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("monic polynomial must have degree >= 1")
        if self.coeffs[-1] != 1:
            raise ValueError("leading coefficient must be 1")
        q = self.field.q
        if any(not 0 <= c < q for c in self.coeffs):
            raise FieldMismatch(f"coefficients {self.coeffs} not in {self.field!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    def elements(self) -> List[gf.FieldElement]:
        return [gf.element_from_index(self.field, c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"[{c}]{mono}")
        return " + ".join(terms)


def monic(F: FieldParams, coeffs: Sequence[int]) -> MonicPoly:
    """Build a :class:`MonicPoly` from low-degree-first indices (leading 1 included)."""
    return MonicPoly(F, tuple(int(c) for c in coeffs))


def trim(g: Sequence[int]) -> Poly:
    g = list(g)
    while g and g[-1] == 0:
        g.pop()
    return tuple(g)


def _check_coeffs(g: Sequence[int], q: int):
    if any(not 0 <= c < q for c in g):
        raise FieldMismatch(f"coefficient out of range for field of size {q}")


def poly_rem(g: Sequence[int], f: MonicPoly) -> Poly:
    """Remainder of an arbitrary polynomial ``g`` modulo monic ``f``."""
    t = f.field.table_lists
    add, mul, neg = t.add, t.mul, t.neg
    a = list(g)
    d = f.degree
    fc = f.coeffs
    for top in range(len(a) - 1, d - 1, -1):
        c = a[top]
        if c:
            nc = neg[c]
            shift = top - d
            for i in range(d + 1):
                a[shift + i] = add[a[shift + i]][mul[nc][fc[i]]]
    return trim(a[:d])


def poly_mul(g: Sequence[int], h: Sequence[int], F: FieldParams) -> Poly:
    if not g or not h:
        return ()
    t = F.table_lists
    add, mul = t.add, t.mul
    out = [0] * (len(g) + len(h) - 1)
    for i, x in enumerate(g):
        if x:
            row = mul[x]
            for j, y in enumerate(h):
                out[i + j] = add[out[i + j]][row[y]]
    return trim(out)


def poly_mul_mod(g: Sequence[int], h: Sequence[int], f: MonicPoly) -> Poly:
    """``(g * h) mod f``."""
    q = f.field.q
    _check_coeffs(g, q)
    _check_coeffs(h, q)
    return poly_rem(poly_mul(g, h, f.field), f)


def poly_pow_mod(g: Sequence[int], e: int, f: MonicPoly) -> Poly:
    """``g**e mod f`` by square-and-multiply; ``g**0`` is 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result: Poly = poly_rem((1,), f)
    base = poly_rem(trim(g), f)
    while e:
        if e & 1:
            result = poly_mul_mod(result, base, f)
        base = poly_mul_mod(base, base, f)
        e >>= 1
    return result


def monic_polys(F: FieldParams, degree: int) -> Iterator[MonicPoly]:
    """All monic polynomials of ``degree`` over F, in canonical order."""
    q = F.q
    for digits in itertools.product(range(q), repeat=degree):
        yield MonicPoly(F, tuple(reversed(digits)) + (1,))


def _enumeration_cap(F: FieldParams, degree: int, cap: Optional[int]):
    cap = gf.size_cap() if cap is None else cap
    if F.q**degree > cap:
        raise SizeCapExceeded(f"enumerating {F.q}^{degree} candidates exceeds cap {cap}")


def is_irreducible(f: MonicPoly, cap: Optional[int] = None) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg f / 2."""
    half = f.degree // 2
    _enumeration_cap(f.field, half, cap)
    for d in range(1, half + 1):
        for g in monic_polys(f.field, d):
            if not poly_rem(f.coeffs, g):
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    primes: Tuple[Tuple[int, int], ...]  # (prime, multiplicity), ascending

    def distinct(self) -> List[int]:
        return [p for p, _ in self.primes]


def factor_integer(N: int) -> Factorization:
    """Trial-division factorisation of ``N >= 2``."""
    if N < 2:
        raise ValueError(f"cannot factor {N}")
    out = []
    n = N
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return Factorization(N, tuple(out))


X: Poly = (0, 1)


def order_of_x(f: MonicPoly) -> int:
    """Multiplicative order of x modulo an irreducible ``f``.

    Starts from ``q**deg(f) - 1`` and strips each prime factor while the
    reduced exponent still gives 1.
    """
    if f.constant_term == 0:
        raise ZeroConstantTerm(f"{f} has zero constant term")
    if not is_irreducible(f):
        raise NotIrreducible(f"{f} is reducible")
    one = poly_rem((1,), f)
    c = f.field.q**f.degree - 1
    if c == 1:
        return 1
    for ell in factor_integer(c).distinct():
        while c % ell == 0 and poly_pow_mod(X, c // ell, f) == one:
            c //= ell
    return c


def is_primitive(f: MonicPoly) -> bool:
    """True iff x generates the multiplicative group of F_q[x]/(f)."""
    if f.constant_term == 0 or not is_irreducible(f):
        return False
    return order_of_x(f) == f.field.q**f.degree - 1


def primitive_polys(F: FieldParams, degree: int) -> List[MonicPoly]:
    """Every primitive polynomial of ``degree``, canonical order."""
    _enumeration_cap(F, degree, None)
    return [f for f in monic_polys(F, degree) if is_primitive(f)]


def find_primitive(F: FieldParams, degree: int) -> MonicPoly:
    """The first primitive polynomial of ``degree`` in canonical order."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    _enumeration_cap(F, degree, None)
    for f in monic_polys(F, degree):
        if is_primitive(f):
            return f
    raise AssertionError(f"no primitive polynomial of degree {degree} over {F!r}")


def order_certificate(f: MonicPoly) -> dict:
    """Evidence that ``f`` is primitive: the factored group order and, for
    every prime divisor ``l``, whether ``x**(N/l) == 1 mod f``."""
    N = f.field.q**f.degree - 1
    one = poly_rem((1,), f)
    fac = factor_integer(N) if N > 1 else Factorization(N, ())
    checks = [
        {"prime": ell, "exponent": N // ell, "is_one": poly_pow_mod(X, N // ell, f) == one}
        for ell in fac.distinct()
    ]
    return {
        "group_order": N,
        "factorization": [[p, e] for p, e in fac.primes],
        "x_pow_group_order_is_one": poly_pow_mod(X, N, f) == one,
        "checks": checks,
    }


def require_degree(f: MonicPoly, degree: int):
    if f.degree != degree:
        raise DegreeMismatch(f"expected degree {degree}, got {f.degree}")
