"""Formal diffeomorphisms of the line: composition, inversion, coaction."""

from hopftower import TruncatedSeries, e, parse_series, t, t_series
from hopftower.diffeo import (FdBElement, coaction_sym, fdb_antipode,
                              fdb_coproduct)

CAP = 5

print("== the universal jet and its compositional inverse ==")
f = t_series(CAP)
print("f(T)      =", f)
g = f.revert()
print("f^{-1}(T) =", g)
ident = TruncatedSeries(FdBElement, {1: 1}, CAP)
print("f(f^{-1}(T)) == T:", f.compose(g) == ident)

print()
print("== the antipode is exactly Lagrange inversion ==")
for n in (1, 2, 3, 4):
    print("  S(t[%d]) = %s" % (n, fdb_antipode(t(n))))
print("series of antipodes equals the reversion:",
      f.map_coefficients(fdb_antipode) == g)

print()
print("== the coproduct tracks composition of jets ==")
print("coproduct of t[2]:", fdb_coproduct(t(2)))
print("coproduct of t[3]:", fdb_coproduct(t(3)))

print()
print("== coaction on symmetric functions ==")
for n in (1, 2, 3):
    print("  e[%d] |-> %s" % (n, coaction_sym(e(n))))

print()
print("== series expressions understand all this ==")
print('revert(t(T)) at cap 4:', parse_series("revert(t(T))", 4))
print('t(2*T) rescales:      ', parse_series("t(2*T)", 3))
