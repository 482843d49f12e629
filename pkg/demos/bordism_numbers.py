"""From the structural logarithm to characteristic numbers."""

from hopftower import (ProjectiveProductSpace, b_series, beta_series, chi_b,
                       cp_char_number, cp_hurewicz, fgl, miscenko_log,
                       quasitoric_char_number)
from hopftower.topology import cp_char_number_oracle

CAP = 5

print("== the generator series and its logarithm ==")
print("b(T) =", b_series(CAP))
log = miscenko_log(CAP)
print("log  =", log)
print("round trip:", b_series(CAP).compose(log).coeffs == {1: 1})

print()
print("== projective spaces land on the log coefficients ==")
for n in (0, 1, 2, 3):
    print("  [CP^%d] -> %s" % (n, cp_hurewicz(n)))
print("(each is (n+1) times the antipode image chi(b_n); chi(b_2) = %s)"
      % chi_b(2))

print()
print("== characteristic numbers, two independent routes ==")
cases = [(1, (1,)), (2, (1, 1)), (2, (2,)), (3, (1, 1, 1)), (3, (2, 1)),
         (3, (3,))]
for n, lam in cases:
    direct = cp_char_number(n, lam)
    oracle = cp_char_number_oracle(n, lam)
    print("  CP^%d, partition %-9s -> %5s (oracle %5s)"
          % (n, lam, direct, oracle))

print()
print("== quasitoric input: products of projective lines ==")
sq = ProjectiveProductSpace.from_document(
    {"factors": [1, 1], "roots": [[1, 0], [1, 0], [0, 1], [0, 1]]})
for I in ((1, 1), (2,)):
    print("  composition %-6s tangent %2s   normal %2s" % (
        I, quasitoric_char_number(sq, I),
        quasitoric_char_number(sq, I, convention="normal")))

print()
print("== the addition law and its beta deformation ==")
F = fgl(3)
print("F(X,Y) =", F)
B = beta_series(3)
print("beta series =", B)
lift = fgl(3).map_coefficients(
    lambda el: type(B.coefficient(0))({0: el}), algebra=type(B.coefficient(0)))
print("B(F(X,Y)) == B(X)B(Y):",
      B.compose(lift) == B.embed_bivariate(0) * B.embed_bivariate(1))
