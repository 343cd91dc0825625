"""Reference routines for the tests, written on top of coefficient-level gf ops only."""
import itertools

from hoplattice import gf


def poly_divmod(F, a, b):
    """Quotient and remainder of a by b (lists of FieldElements, low first)."""
    a = list(a)
    q_out = [F.zero] * max(len(a) - len(b) + 1, 1)
    lead_inv = gf.inv(F, b[-1])
    while len(a) >= len(b) and any(any(c) for c in a):
        if not any(a[-1]):
            a.pop()
            continue
        shift = len(a) - len(b)
        c = gf.mul(F, a[-1], lead_inv)
        q_out[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = gf.sub(F, a[shift + i], gf.mul(F, c, bc))
        a.pop()
    while a and not any(a[-1]):
        a.pop()
    return q_out, a


def idx_to_elems(F, coeffs):
    return [gf.element_from_index(F, c) for c in coeffs]


def irreducible_full(F, coeffs):
    """No monic divisor of any degree in [1, deg f)."""
    f = idx_to_elems(F, coeffs)
    d = len(coeffs) - 1
    for dd in range(1, d):
        for low in itertools.product(range(F.q), repeat=dd):
            g = idx_to_elems(F, low + (1,))
            if not poly_divmod(F, f, g)[1]:
                return False
    return True


def naive_order_of_x(F, coeffs, limit):
    """min c >= 1 with x^c == 1 mod f by stepping x^c one power at a time."""
    f = idx_to_elems(F, coeffs)
    cur = [F.zero, F.one]  # x
    for c in range(1, limit + 1):
        _, rem = poly_divmod(F, cur, f)
        if len(rem) == 1 and rem[0] == F.one:
            return c
        cur = [F.zero] + list(rem)
    return None


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if __import__("math").gcd(k, n) == 1)
