"""The dual pair: noncommutative words against quasisymmetric functions."""

from hopftower import M, Tensor, abelianize, include_symmetric, m, pair, z
from hopftower.nsym import antipode as z_antipode
from hopftower.nsym import coproduct as z_coproduct
from hopftower.qsym import antipode as m_antipode
from hopftower.qsym import coproduct as m_coproduct
from hopftower.qsym import expand_ordered, pair_tensor

print("== products ==")
print("Z words concatenate:      Z[1]*Z[2]  =", z(1) * z(2))
print("order matters:            Z[2]*Z[1]  =", z(2) * z(1))
print("M labels quasi-shuffle:   M[1]*M[2]  =", M(1) * M(2))
print("                          M[1]*M[1,1] =", M(1) * M(1, 1))

print()
print("== expansion in ordered variables ==")
print("M[2,1] in x1..x3:", expand_ordered(M(2, 1), 3))

print()
print("== coproducts ==")
print("each Z letter splits binomially:")
print("  ", z_coproduct(z(2)))
print("M words deconcatenate:")
print("  ", m_coproduct(M(1, 2)))

print()
print("== antipodes ==")
print("S(Z[3]) =", z_antipode(z(3)))
print("S(M[1,1]) =", m_antipode(M(1, 1)))

print()
print("== duality ==")
print("<Z[1,2], M[1,2]> =", pair(z(1, 2), M(1, 2)))
print("<Z[1,2], M[2,1]> =", pair(z(1, 2), M(2, 1)))
print("product on one side is coproduct on the other:")
lhs = pair(z(1) * z(2), M(1, 2))
rhs = pair_tensor(Tensor.of(z(1), z(2)), m_coproduct(M(1, 2)))
print("  <Z[1]Z[2], M[1,2]> = %s and through the coproduct: %s" % (lhs, rhs))

print()
print("== moving to the commutative world and back ==")
print("abelianize Z[2,1]:", abelianize(z(2, 1)))
print("abelianize Z[1,2]:", abelianize(z(1, 2)))
print("include m[2,1]:   ", include_symmetric(m(2, 1)))
