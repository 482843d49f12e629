"""Tour of the symmetric functions layer: bases, involutions, the pairing."""

from hopftower import convert, e, h, hall_pair, involution, m, p
from hopftower.sym import (antipode, coproduct, e_series, expand,
                           format_polynomial, h_series)

print("== four bases, one algebra ==")
x = h(2)
for basis in ("e", "p", "m"):
    print("h[2] in the %s basis: %s" % (basis, convert(x, basis)))

print()
print("m-basis products are orbit sums, not concatenations:")
print("  m[1]*m[1]   =", m(1) * m(1))
print("  m[2,1]*m[1] =", m(2, 1) * m(1))

print()
print("== expansions in finitely many variables ==")
print("e[2] in 3 variables:", format_polynomial(expand(e(2), 3)))
print("p[2] in 3 variables:", format_polynomial(expand(p(2), 3)))

print()
print("== structure maps ==")
print("coproduct of e[2]:", coproduct(e(2)))
print("antipode of e[3]: ", antipode(e(3)))
print("the generator series satisfy h(T) = 1/e(-T):",
      e_series(6).alternate().invert() == h_series(6))

print()
print("== involutions ==")
for which in ("dual", "whitney", "omega"):
    print("%-8s e[3] ->" % which, involution(e(3), which))

print()
print("== the pairing that matches h against m ==")
print("<h[2,1], m[2,1]> =", hall_pair(h(2, 1), m(2, 1)))
print("<p[2],   p[2]>   =", hall_pair(p(2), p(2)))
print("<e[2],   m[1,1]> =", hall_pair(e(2), m(1, 1)))
