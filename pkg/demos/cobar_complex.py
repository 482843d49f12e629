"""Split algebroids and the reduced cobar complex, weight by weight."""

from hopftower import ALGEBROIDS, coface, cohomology_rank, differential
from hopftower.algebroid import differential_matrix, invariants_rank_oracle

print("== the two registered algebroids ==")
for name, alg in ALGEBROIDS.items():
    print("  %s: base %s with Hopf factor %s"
          % (name, alg.base_cls.__name__, alg.hopf_cls.__name__))

alg = ALGEBROIDS["S.B"]
x = alg.as_level(alg.base_element((2,)))

print()
print("== cofaces of the weight-2 base generator ==")
for i in range(2):
    print("  d_%d:" % i, coface(alg, x, i))

print()
print("== the differential and its square ==")
dx = differential(alg, x)
print("d(x)   =", dx)
print("d(d(x)) =", differential(alg, dx))

print()
print("== normalized complex sizes and ranks ==")
for w in range(4):
    dom0, _, _ = differential_matrix(alg, w, 0)
    dom1, cod1, _ = differential_matrix(alg, w, 1)
    print("  weight %d: levels %d -> %d -> %d, H^0 rank %d, H^1 rank %d"
          % (w, len(dom0), len(dom1), len(cod1),
             cohomology_rank("S.B", w, 0), cohomology_rank("S.B", w, 1)))

print()
print("== H^0 equals the invariants, computed directly ==")
for name in ALGEBROIDS:
    ranks = [cohomology_rank(name, w, 0) for w in range(4)]
    oracle = [invariants_rank_oracle(name, w) for w in range(4)]
    print("  %s: %s vs oracle %s" % (name, ranks, oracle))
