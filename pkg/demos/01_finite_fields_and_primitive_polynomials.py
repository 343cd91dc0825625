"""
Finite fields and primitive polynomials
=======================================

Build a few small fields, do arithmetic in them, and look for primitive
polynomials (the ones whose root generates the whole multiplicative group).
"""
from hoplattice import gf, polyalg

# F_4 is built over F_2 with the modulus x^2 + x + 1.
F4 = gf.field_new(2, 2)
print(F4, "modulus (low degree first):", F4.modulus)

x = gf.element_from_index(F4, 2)      # the element "x" = (0, 1)
print("x * x =", gf.mul(F4, x, x))     # x + 1 = (1, 1)
print("1 / x =", gf.inv(F4, x))

# Every nonzero element satisfies a^(q-1) = 1.
print("all a^3 == 1:", all(gf.power(F4, a, 3) == F4.one for a in F4.elements()[1:]))

# Primitive polynomials over F_2 and F_3.  Coefficients are element indices,
# constant term first, leading 1 last.
F2, F3 = gf.field_new(2), gf.field_new(3)
for F, d in [(F2, 2), (F2, 3), (F2, 4), (F3, 2), (F4, 2)]:
    f = polyalg.find_primitive(F, d)
    print(f"{F!r:8} degree {d}: {str(f):22} coeffs={list(f.coeffs)}  order of x = {polyalg.order_of_x(f)}")

# x^2 + 1 over F_3 is irreducible but not primitive: x has order 4, not 8.
g = polyalg.monic(F3, [1, 0, 1])
print(g, "irreducible:", polyalg.is_irreducible(g), "primitive:", polyalg.is_primitive(g),
      "order:", polyalg.order_of_x(g))

# How many primitive polynomials of degree 4 are there over F_5?
print("primitive quartics over F_5:", len(polyalg.primitive_polys(gf.field_new(5), 4)))
