"""Property-check suites and the documented command-line invocation table.

Each suite returns a list of ``(label, ok, detail)`` records; the CLI turns
them into a pass/fail report.  The checks deliberately compute everything
twice along independent routes wherever the library offers one (series
reversion against the connected-graded recursion, matrix ranks against a
direct kernel solve, quasi-shuffle against expansion in ordered variables,
and so on), so a bug in either route breaks the comparison rather than
hiding inside it.

``DOCUMENTED_INVOCATIONS`` pins the exact argv, stdout and exit code of
every command-line example this package documents; the ``cli-roundtrip``
suite replays the whole table and also fuzzes parse/print round trips.
"""

import json
import random
from fractions import Fraction
from functools import lru_cache

from . import diffeo
from . import nsym as nsym_mod
from . import qsym as qsym_mod
from . import sym as sym_mod
from . import topology
from .algebroid import (ALGEBROIDS, coface, cohomology_rank, differential,
                        differential_matrix, invariants_rank_oracle)
from .diffeo import FdBElement, t
from .errors import ExpressionError
from .expr import parse_element
from .indices import compositions_of, partitions_of
from .jsonio import document_for, dumps, from_document
from .linear import Tensor
from .nsym import NSymElement, z
from .qsym import M, QSymElement, expand_ordered, pair, pair_tensor
from .scalars import ONE, ZERO
from .series import TruncatedSeries
from .sym import SymElement, convert, e, h
from .topology import BElement, BetaPolynomial, b


def _ok(label, detail=""):
    return (label, True, detail)


def _fail(label, detail):
    return (label, False, detail)


# -- generic Hopf structure checks -----------------------------------------

class _Structure:
    def __init__(self, name, cls, delta, antipode, indices, default_bound, make):
        self.name = name
        self.cls = cls
        self.delta = delta
        self.antipode = antipode
        self.indices = indices
        self.default_bound = default_bound
        self.make = make


_STRUCTURES = [
    _Structure("sym-binomial", SymElement, sym_mod.coproduct, sym_mod.antipode,
               partitions_of, 7, lambda idx: SymElement({idx: 1}, "e")),
    _Structure("nsym-binomial", NSymElement, nsym_mod.coproduct,
               nsym_mod.antipode, compositions_of, 7,
               lambda idx: NSymElement({idx: 1})),
    _Structure("qsym", QSymElement, qsym_mod.coproduct, qsym_mod.antipode,
               compositions_of, 6, lambda idx: QSymElement({idx: 1})),
    _Structure("fdb", FdBElement, diffeo.fdb_coproduct, diffeo.fdb_antipode,
               partitions_of, 6, lambda idx: FdBElement({idx: 1})),
    _Structure("bfk", NSymElement, diffeo.bfk_coproduct, diffeo.bfk_antipode,
               compositions_of, 6, lambda idx: NSymElement({idx: 1})),
]


def _coassociative(st, x):
    d = st.delta(x)
    pair_fac = (st.cls, st.cls)
    left = d.apply(0, lambda idx: st.delta(st.make(idx)), pair_fac)
    right = d.apply(1, lambda idx: st.delta(st.make(idx)), pair_fac)
    return left == right


def _counit_ok(st, x):
    d = st.delta(x)
    wrapped = Tensor.of(x)
    return d.project_counit(0) == wrapped and d.project_counit(1) == wrapped


def _convolution_ok(st, x):
    d = st.delta(x)
    left = st.cls.zero()
    right = st.cls.zero()
    for (i, j), c in d.terms.items():
        left = left + (st.antipode(st.make(i)) * st.make(j)).scale(c)
        right = right + (st.make(i) * st.antipode(st.make(j))).scale(c)
    target = st.cls.one().scale(x.counit())
    return left == target and right == target


def suite_hopf_axioms(weight=None, cap=None):
    results = []
    for st in _STRUCTURES:
        bound = weight if weight is not None else st.default_bound
        count = 0
        bad = None
        for check_name, check in (("coassociativity", _coassociative),
                                  ("counit", _counit_ok),
                                  ("antipode convolution", _convolution_ok)):
            count = 0
            bad = None
            for w in range(bound + 1):
                for idx in st.indices(w):
                    count += 1
                    if not check(st, st.make(idx)):
                        bad = idx
                        break
                if bad is not None:
                    break
            label = "%s %s (weight <= %d, %d elements)" % (
                st.name, check_name, bound, count)
            if bad is None:
                results.append(_ok(label))
            else:
                results.append(_fail(label, "fails on index %r" % (bad,)))
    return results


# -- antipode cross-checks -------------------------------------------------

@lru_cache(maxsize=None)
def _fdb_chi_gen_oracle(n):
    """Antipode of t_n by the connected-graded recursion, not by reversion."""
    x = t(n)
    acc = -x
    for (i, j), c in diffeo.fdb_coproduct(x).terms.items():
        if sum(i) and sum(j):
            acc = acc - (_fdb_chi_index_oracle(i) * FdBElement({j: 1})).scale(c)
    return acc


def _fdb_chi_index_oracle(idx):
    out = FdBElement.one()
    for k in idx:
        out = out * _fdb_chi_gen_oracle(k)
    return out


def suite_antipode(weight=None, cap=None):
    results = []
    bound = weight if weight is not None else 8
    bad = None
    for n in range(1, bound + 1):
        want = convert(h(n), "e").scale(Fraction(-1) ** n)
        if sym_mod.antipode(e(n)) != want:
            bad = n
            break
        if sym_mod.h_series(bound).coefficient(n) != convert(h(n), "e"):
            bad = n
            break
    label = "antipode(e_n) = (-1)^n h_n and h-series agreement (n <= %d)" % bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at n=%d" % bad))

    bad = None
    for n in range(1, bound + 1):
        if diffeo.fdb_antipode(t(n)) != _fdb_chi_gen_oracle(n):
            bad = n
            break
    label = "diffeo antipode: reversion equals graded recursion (n <= %d)" % bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at n=%d" % bad))

    bfk_bound = min(bound, 6)
    bad = None
    for n in range(1, bfk_bound + 1):
        if diffeo.bfk_abelianize(diffeo.bfk_antipode(z(n))) != diffeo.fdb_antipode(t(n)):
            bad = n
            break
    label = "renormalization antipode abelianizes to diffeo antipode (n <= %d)" % bfk_bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at n=%d" % bad))
    return results


# -- duality ----------------------------------------------------------------

def suite_duality(weight=None, cap=None):
    results = []
    bound = weight if weight is not None else 6

    bad = None
    for w in range(bound + 1):
        for I in compositions_of(w):
            for J in compositions_of(w):
                want = ONE if I == J else ZERO
                if pair(NSymElement({I: 1}), QSymElement({J: 1})) != want:
                    bad = (I, J)
    for wa in range(4):
        for wb in range(4):
            if wa == wb:
                continue
            for I in compositions_of(wa):
                for J in compositions_of(wb):
                    if pair(NSymElement({I: 1}), QSymElement({J: 1})) != ZERO:
                        bad = (I, J)
    label = "basis pairing is delta (weight <= %d)" % bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))

    bad = None
    checked = 0
    for w in range(2, bound + 1):
        for wa in range(1, w):
            for I in compositions_of(wa):
                for J in compositions_of(w - wa):
                    left = NSymElement({I: 1}) * NSymElement({J: 1})
                    tens = Tensor.of(NSymElement({I: 1}), NSymElement({J: 1}))
                    for K in compositions_of(w):
                        checked += 1
                        mk = QSymElement({K: 1})
                        lhs = pair(left, mk)
                        rhs = pair_tensor(tens, qsym_mod.coproduct(mk))
                        if lhs != rhs:
                            bad = (I, J, K)
    label = "product adjoint to deconcatenation (weight <= %d, %d triples)" % (
        bound, checked)
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))

    bad = None
    checked = 0
    for w in range(2, bound + 1):
        for K in compositions_of(w):
            dz = nsym_mod.coproduct(NSymElement({K: 1}))
            for wa in range(1, w):
                for I in compositions_of(wa):
                    for J in compositions_of(w - wa):
                        checked += 1
                        lhs = pair_tensor(dz, Tensor.of(QSymElement({I: 1}),
                                                        QSymElement({J: 1})))
                        rhs = pair(NSymElement({K: 1}),
                                   QSymElement({I: 1}) * QSymElement({J: 1}))
                        if lhs != rhs:
                            bad = (K, I, J)
    label = "coproduct adjoint to quasi-shuffle (weight <= %d, %d triples)" % (
        bound, checked)
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))

    qbound = min(bound, 5)
    bad = None
    for w in range(2, qbound + 1):
        for wa in range(1, w):
            for I in compositions_of(wa):
                for J in compositions_of(w - wa):
                    nvars = w
                    prod = QSymElement({I: 1}) * QSymElement({J: 1})
                    direct = expand_ordered(prod, nvars)
                    pieces = sym_mod._poly_mul(
                        expand_ordered(QSymElement({I: 1}), nvars),
                        expand_ordered(QSymElement({J: 1}), nvars))
                    if direct != pieces:
                        bad = (I, J)
    label = "quasi-shuffle equals ordered-variable expansion (weight <= %d)" % qbound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))
    return results


# -- renormalization coproduct ---------------------------------------------

def suite_bfk(weight=None, cap=None):
    results = []
    nn = (NSymElement, NSymElement)

    want2 = Tensor(nn, {((2,), ()): 1, ((1,), (1,)): 2, ((), (2,)): 1})
    got2 = diffeo.bfk_coproduct(z(2))
    results.append(_ok("coproduct of Z_2 has the 2 Z_1 (x) Z_1 cross term")
                   if got2 == want2 else
                   _fail("coproduct of Z_2 has the 2 Z_1 (x) Z_1 cross term",
                         "got %s" % got2))

    want3 = Tensor(nn, {((3,), ()): 1, ((), (3,)): 1, ((1,), (1, 1)): 1,
                        ((1,), (2,)): 2, ((2,), (1,)): 3})
    got3 = diffeo.bfk_coproduct(z(3))
    ok3 = got3 == want3 and got3.swap_slots(0, 1) != got3
    results.append(_ok("coproduct of Z_3: mixed coefficients 2 and 3, "
                       "not cocommutative")
                   if ok3 else
                   _fail("coproduct of Z_3: mixed coefficients 2 and 3, "
                         "not cocommutative", "got %s" % got3))

    bound = weight if weight is not None else 7
    st = next(s for s in _STRUCTURES if s.name == "bfk")
    bad = None
    count = 0
    for w in range(bound + 1):
        for idx in compositions_of(w):
            count += 1
            if not _coassociative(st, NSymElement({idx: 1})):
                bad = idx
    label = "renormalization coproduct coassociative (weight <= %d, %d words)" % (
        bound, count)
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))
    return results


# -- comodules and the cobar complex ---------------------------------------

def suite_comodule_algebroid(weight=None, cap=None):
    results = []
    bound = weight if weight is not None else 6
    cosimp_bound = min(bound, 5)

    for name, alg in ALGEBROIDS.items():
        bad = None
        for w in range(bound + 1):
            for lam in alg.base_indices(w):
                x = alg.base_element(lam)
                psi = alg.coaction(x)
                left = psi.apply(0, lambda idx: alg.coaction(alg.base_element(idx)),
                                 (alg.base_cls, alg.hopf_cls))
                right = psi.apply(1, lambda idx: alg.h_coproduct(alg.hopf_element(idx)),
                                  (alg.hopf_cls, alg.hopf_cls))
                if left != right or psi.project_counit(1) != Tensor.of(x):
                    bad = lam
        label = "%s comodule axioms (weight <= %d)" % (name, bound)
        results.append(_ok(label) if bad is None else
                       _fail(label, "fails on %r" % (bad,)))

    for name, alg in ALGEBROIDS.items():
        bad = None
        for w in range(cosimp_bound + 1):
            for lam in alg.base_indices(w):
                x = alg.as_level(alg.base_element(lam))
                for jj in range(1, 3):
                    for ii in range(jj):
                        lhs = coface(alg, coface(alg, x, ii), jj)
                        rhs = coface(alg, coface(alg, x, jj - 1), ii)
                        if lhs != rhs:
                            bad = (lam, ii, jj)
                if differential(alg, differential(alg, x)):
                    bad = (lam, "d2")
        label = "%s cosimplicial identities and d^2 = 0 (weight <= %d)" % (
            name, cosimp_bound)
        results.append(_ok(label) if bad is None else
                       _fail(label, "fails on %r" % (bad,)))

    bad = None
    for w in range(cosimp_bound + 1):
        dom0, cod0, rows0 = differential_matrix(ALGEBROIDS["S.B"], w, 0)
        dom1, cod1, rows1 = differential_matrix(ALGEBROIDS["S.B"], w, 1)
        assert cod0 == dom1
        for i in range(len(dom0)):
            acc = [ZERO] * len(cod1)
            for j, c in enumerate(rows0[i]):
                if c:
                    for k, d in enumerate(rows1[j]):
                        acc[k] += c * d
            if any(acc):
                bad = (w, dom0[i])
    label = "normalized differential squares to zero in matrix form (weight <= %d)" % (
        cosimp_bound)
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))

    bad = None
    for w in range(4):
        got = cohomology_rank("S.B", w, 0)
        oracle = invariants_rank_oracle(ALGEBROIDS["S.B"], w)
        if got != 1 or oracle != 1:
            bad = (w, got, oracle)
    label = "H^0 of the S.B complex is rank 1 in weights 0-3 (two routes)"
    results.append(_ok(label) if bad is None else
                   _fail(label, "weight %r gave %r/%r" % bad))
    return results


# -- topology ---------------------------------------------------------------

def _t_to_b(x):
    return BElement(dict(x.terms))


def suite_topology(weight=None, cap=None):
    results = []
    bound = weight if weight is not None else 7

    bad = None
    log = topology.miscenko_log(bound + 1)
    for n in range(1, bound + 1):
        structural = _t_to_b(_fdb_chi_gen_oracle(n))
        if log.coefficient(n + 1) != structural or topology.chi_b(n) != structural:
            bad = n
    label = "log coefficients equal the structural antipode of b_n (n <= %d)" % bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at n=%d" % bad))

    bad = None
    for n in range(6):
        for lam in partitions_of(n):
            if topology.cp_char_number(n, lam) != topology.cp_char_number_oracle(n, lam):
                bad = (n, lam)
    hits = [(topology.cp_char_number(1, (1,)), Fraction(-2)),
            (topology.cp_char_number(2, (1, 1)), Fraction(6)),
            (topology.cp_char_number(2, (2,)), Fraction(-3))]
    if any(a != b for a, b in hits):
        bad = ("pinned", hits)
    label = "projective-space numbers match the normal-bundle oracle (n <= 5)"
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails on %r" % (bad,)))

    fcap = cap if cap is not None else 6
    F = topology.fgl(fcap)
    ident = TruncatedSeries(BElement, {1: 1}, fcap)
    problems = []
    if F.set_variable_zero(1) != ident or F.set_variable_zero(0) != ident:
        problems.append("unit")
    if F.swap_variables() != F:
        problems.append("commutativity")
    f3 = {(i, j, 0): c for (i, j), c in F.coeffs.items()}
    g3 = {(0, i, j): c for (i, j), c in F.coeffs.items()}
    xvar = {(1, 0, 0): BElement.one()}
    zvar = {(0, 0, 1): BElement.one()}
    lhs = topology.evaluate_bivariate(F, f3, zvar, fcap)
    rhs = topology.evaluate_bivariate(F, xvar, g3, fcap)
    if lhs != rhs:
        problems.append("associativity")
    label = "group law is unital, commutative, associative (degree <= %d)" % fcap
    results.append(_ok(label) if not problems else
                   _fail(label, "failed: %s" % ", ".join(problems)))

    B = topology.beta_series(fcap)
    lift = F.map_coefficients(lambda el: BetaPolynomial({0: el}),
                              algebra=BetaPolynomial)
    lhs = B.compose(lift)
    rhs = B.embed_bivariate(0) * B.embed_bivariate(1)
    label = "beta series turns the group law into a product (degree <= %d)" % fcap
    results.append(_ok(label) if lhs == rhs else _fail(label, "mismatch"))
    pinned = (B.coefficient(0) == BetaPolynomial.one()
              and B.coefficient(1) == BetaPolynomial({1: BElement.one()})
              and B.coefficient(2) == BetaPolynomial({1: b(1).scale(-1),
                                                      2: BElement({(): Fraction(1, 2)})}))
    label = "beta series low coefficients: 1, beta, beta^2/2 - beta b_1"
    results.append(_ok(label) if pinned else _fail(label, "mismatch"))

    ncap = min(fcap, 5)
    CP = topology.cp_infinity_coproduct(ncap)
    okc = (topology.abelianize_series_to_b(CP) == topology.fgl(ncap)
           and CP.set_variable_zero(1) == TruncatedSeries(NSymElement, {1: 1}, ncap)
           and CP.coefficient((1, 1)) == z(1).scale(2))
    label = "noncommutative addition series degenerates and abelianizes correctly"
    results.append(_ok(label) if okc else _fail(label, "mismatch"))

    C = topology.cumulant_series(3)
    okq = (C.coefficient(1) == NSymElement({(): -1})
           and C.coefficient(2) == -z(1)
           and C.coefficient(3) == -(z(1, 1).scale(2) - z(2)))
    label = "cumulant series pinned coefficients through T^3"
    results.append(_ok(label) if okq else _fail(label, "got %s" % C))
    return results


# -- combinatorial counts ---------------------------------------------------

def _brute_partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def suite_counts(weight=None, cap=None):
    results = []
    bound = weight if weight is not None else 12

    bad = None
    for n in range(bound + 1):
        want = 1 if n == 0 else 2 ** (n - 1)
        if len(compositions_of(n)) != want:
            bad = n
    if compositions_of(3) != ((3,), (2, 1), (1, 2), (1, 1, 1)):
        bad = "order-3"
    if compositions_of(0) != ((),):
        bad = "order-0"
    label = "compositions of n number 2^(n-1) (n <= %d), pinned order at 3" % bound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at %r" % (bad,)))

    bad = None
    for n in range(9):
        if set(partitions_of(n)) != set(_brute_partitions(n)):
            bad = n
    if set(partitions_of(3)) != {(3,), (2, 1), (1, 1, 1)}:
        bad = "pinned-3"
    if len(partitions_of(4)) != 5:
        bad = "count-4"
    label = "partitions agree with brute-force enumeration (n <= 8)"
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at %r" % (bad,)))

    kbound = min(bound, 10)
    bad = None
    for k in range(1, kbound + 1):
        inv = topology.crn_invariant(k)
        if (len(inv.terms) != 2 ** (k - 1)
                or any(c != ONE for c in inv.terms.values())):
            bad = k
    label = "composition-sum invariant has 2^(k-1) unit terms (k <= %d)" % kbound
    results.append(_ok(label) if bad is None else
                   _fail(label, "fails at k=%d" % bad))
    return results


# -- CLI round trips and the documented invocation table --------------------

_QT_SPACE_1 = '{"factors":[1],"roots":[[1],[1]]}'
_QT_SPACE_11 = '{"factors":[1,1],"roots":[[1,0],[1,0],[0,1],[0,1]]}'

DOCUMENTED_INVOCATIONS = [
    # elements: products, canonical printing
    (("eval", "Z[1,1]*Z[2,3]"), "Z[1,1,2,3]", 0),
    (("eval", "1*Z[2]"), "Z[2]", 0),
    (("eval", "Z[2]*Z[1]"), "Z[2,1]", 0),
    (("eval", "Z[1]*Z[2]"), "Z[1,2]", 0),
    (("eval", "(Z[1]+Z[2])*Z[1]"), "Z[1,1] + Z[2,1]", 0),
    (("eval", "Z[2]*Z[1] + 3*Z[3]"), "Z[2,1] + 3*Z[3]", 0),
    (("eval", "e[2,1]^2"), "e[2,2,1,1]", 0),
    (("eval", "e[1]*e[1]"), "e[1,1]", 0),
    (("eval", "h[1]*h[2]"), "h[2,1]", 0),
    (("eval", "m[1]*m[1]"), "2*m[1,1] + m[2]", 0),
    (("eval", "M[1]*M[1]"), "2*M[1,1] + M[2]", 0),
    (("eval", "M[1]*M[2]"), "M[1,2] + M[2,1] + M[3]", 0),
    (("eval", "1*M[1,2]"), "M[1,2]", 0),
    (("eval", "t[1,2]"), "t[2,1]", 0),
    (("eval", "t[2,1,2]"), "t[2,2,1]", 0),
    (("eval", "1"), "1", 0),
    (("eval", "--json", "e[1]^2 - e[2]"),
     '{"algebra":"sym","basis":"e","terms":[{"index":[1,1],"coeff":"1"},'
     '{"index":[2],"coeff":"-1"}]}', 0),
    (("eval", "--json", "e[1] - e[1]"),
     '{"algebra":"sym","basis":"e","terms":[]}', 0),
    # basis conversion, involutions, algebra collapse
    (("convert", "h[2]", "--to", "e"), "e[1,1] - e[2]", 0),
    (("convert", "p[2]", "--to", "e"), "e[1,1] - 2*e[2]", 0),
    (("convert", "m[1]", "--to", "e"), "e[1]", 0),
    (("convert", "e[3]", "--involution", "dual"), "-e[3]", 0),
    (("convert", "e[2]", "--involution", "whitney"), "h[2]", 0),
    (("convert", "e[2]", "--involution", "omega"), "h[2]", 0),
    (("convert", "e[2]", "--involution", "omega", "--involution", "omega",
      "--to", "e"), "e[2]", 0),
    (("convert", "Z[2,1]", "--to", "e"), "e[2,1]", 0),
    (("convert", "Z[1,2]", "--to", "e"), "e[2,1]", 0),
    (("convert", "Z[1,1] - Z[2]", "--to", "e"), "e[1,1] - e[2]", 0),
    (("convert", "Z[2,1]", "--to", "t"), "t[2,1]", 0),
    (("convert", "-Z[3] + 2*Z[1,2] + 3*Z[2,1] - 5*Z[1,1,1]", "--to", "t"),
     "-5*t[1,1,1] + 5*t[2,1] - t[3]", 0),
    (("convert", "m[2,1]", "--to", "M"), "M[1,2] + M[2,1]", 0),
    (("convert", "m[1]", "--to", "M"), "M[1]", 0),
    (("convert", "e[2]", "--to", "M"), "M[1,1]", 0),
    # antipodes
    (("antipode", "e[1]"), "-e[1]", 0),
    (("antipode", "e[2]"), "e[1,1] - e[2]", 0),
    (("antipode", "e[3]"), "-e[1,1,1] + 2*e[2,1] - e[3]", 0),
    (("antipode", "Z[1]"), "-Z[1]", 0),
    (("antipode", "Z[2]"), "Z[1,1] - Z[2]", 0),
    (("antipode", "Z[3]"), "-Z[1,1,1] + Z[1,2] + Z[2,1] - Z[3]", 0),
    (("antipode", "M[1]"), "-M[1]", 0),
    (("antipode", "M[1,1]"), "M[1,1] + M[2]", 0),
    (("antipode", "M[2]"), "-M[2]", 0),
    (("antipode", "t[1]"), "-t[1]", 0),
    (("antipode", "t[2]"), "2*t[1,1] - t[2]", 0),
    (("antipode", "t[3]"), "-5*t[1,1,1] + 5*t[2,1] - t[3]", 0),
    (("antipode", "--structure", "bfk", "Z[1]"), "-Z[1]", 0),
    (("antipode", "--structure", "bfk", "Z[2]"), "2*Z[1,1] - Z[2]", 0),
    (("antipode", "--structure", "bfk", "Z[3]"),
     "-5*Z[1,1,1] + 2*Z[1,2] + 3*Z[2,1] - Z[3]", 0),
    # coproducts (canonical JSON)
    (("coproduct", "e[1]"),
     '{"algebra":"tensor","factors":["sym","sym"],"terms":['
     '{"left":[],"right":[1],"coeff":"1"},{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "e[2]"),
     '{"algebra":"tensor","factors":["sym","sym"],"terms":['
     '{"left":[],"right":[2],"coeff":"1"},{"left":[1],"right":[1],"coeff":"1"},'
     '{"left":[2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "e[1]^2"),
     '{"algebra":"tensor","factors":["sym","sym"],"terms":['
     '{"left":[],"right":[1,1],"coeff":"1"},{"left":[1],"right":[1],"coeff":"2"},'
     '{"left":[1,1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "Z[1]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"binomial",'
     '"terms":[{"left":[],"right":[1],"coeff":"1"},'
     '{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "Z[2]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"binomial",'
     '"terms":[{"left":[],"right":[2],"coeff":"1"},'
     '{"left":[1],"right":[1],"coeff":"1"},{"left":[2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "Z[1,1]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"binomial",'
     '"terms":[{"left":[],"right":[1,1],"coeff":"1"},'
     '{"left":[1],"right":[1],"coeff":"2"},{"left":[1,1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "M[1]"),
     '{"algebra":"tensor","factors":["qsym","qsym"],"terms":['
     '{"left":[],"right":[1],"coeff":"1"},{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "M[1,2]"),
     '{"algebra":"tensor","factors":["qsym","qsym"],"terms":['
     '{"left":[],"right":[1,2],"coeff":"1"},{"left":[1],"right":[2],"coeff":"1"},'
     '{"left":[1,2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "1", "--algebra", "qsym"),
     '{"algebra":"tensor","factors":["qsym","qsym"],"terms":['
     '{"left":[],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "t[1]"),
     '{"algebra":"tensor","factors":["fdb","fdb"],"terms":['
     '{"left":[],"right":[1],"coeff":"1"},{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "t[2]"),
     '{"algebra":"tensor","factors":["fdb","fdb"],"terms":['
     '{"left":[],"right":[2],"coeff":"1"},{"left":[1],"right":[1],"coeff":"2"},'
     '{"left":[2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "bfk", "Z[1]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"bfk","terms":['
     '{"left":[],"right":[1],"coeff":"1"},{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "bfk", "Z[2]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"bfk","terms":['
     '{"left":[],"right":[2],"coeff":"1"},{"left":[1],"right":[1],"coeff":"2"},'
     '{"left":[2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "bfk", "Z[3]"),
     '{"algebra":"tensor","factors":["nsym","nsym"],"structure":"bfk","terms":['
     '{"left":[],"right":[3],"coeff":"1"},{"left":[1],"right":[1,1],"coeff":"1"},'
     '{"left":[1],"right":[2],"coeff":"2"},{"left":[2],"right":[1],"coeff":"3"},'
     '{"left":[3],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "fdb", "e[1]"),
     '{"algebra":"tensor","factors":["sym","fdb"],"terms":['
     '{"left":[1],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "fdb", "e[2]"),
     '{"algebra":"tensor","factors":["sym","fdb"],"terms":['
     '{"left":[1],"right":[1],"coeff":"1"},{"left":[2],"right":[],"coeff":"1"}]}', 0),
    (("coproduct", "--structure", "fdb", "e[3]"),
     '{"algebra":"tensor","factors":["sym","fdb"],"terms":['
     '{"left":[1],"right":[2],"coeff":"1"},{"left":[2],"right":[1],"coeff":"2"},'
     '{"left":[3],"right":[],"coeff":"1"}]}', 0),
    # pairings
    (("pair", "h[2,1]", "m[2,1]"), "1", 0),
    (("pair", "h[2]", "m[1,1]"), "0", 0),
    (("pair", "e[2]", "m[1,1]"), "1", 0),
    (("pair", "Z[1,2]", "M[1,2]"), "1", 0),
    (("pair", "Z[1,2]", "M[2,1]"), "0", 0),
    (("pair", "Z[2]", "M[1]*M[1]"), "1", 0),
    # series calculus
    (("compose", "T+T^2", "T+T^2", "--cap", "4", "--text"),
     "T + 2*T^2 + 2*T^3 + T^4 (cap 4)", 0),
    (("compose", "(1+e[1]*T)*(1-e[1]*T)", "T", "--cap", "2", "--text"),
     "1 - e[1,1]*T^2 (cap 2)", 0),
    (("compose", "(T+Z[1]*T^2)*(T+Z[1]*T^2)", "T", "--cap", "4", "--text"),
     "T^2 + 2*Z[1]*T^3 + Z[1,1]*T^4 (cap 4)", 0),
    (("compose", "Z(T)*1", "T", "--cap", "4", "--text"),
     "T + Z[1]*T^2 + Z[2]*T^3 + Z[3]*T^4 (cap 4)", 0),
    (("compose", "invert(1 - e[1]*T)", "T", "--cap", "3", "--text"),
     "1 + e[1]*T + e[1,1]*T^2 + e[1,1,1]*T^3 (cap 3)", 0),
    (("compose", "invert(e(-T))", "T", "--cap", "2", "--text"),
     "1 + e[1]*T + (e[1,1] - e[2])*T^2 (cap 2)", 0),
    (("compose", "invert(1)", "T", "--cap", "3", "--text"), "1 (cap 3)", 0),
    (("compose", "exp(log(1+e[1]*T))", "T", "--cap", "3", "--text"),
     "1 + e[1]*T (cap 3)", 0),
    (("compose", "exp(beta*T)", "T", "--cap", "2", "--text"),
     "1 + beta*T + 1/2*beta^2*T^2 (cap 2)", 0),
    (("compose", "residue(shift(Z(T),-3))", "T", "--cap", "3", "--text"),
     "Z[1] (cap 3)", 0),
    (("compose", "residue(1)", "T", "--cap", "3", "--text"), "0 (cap 3)", 0),
    (("revert", "T", "--cap", "3", "--text"), "T (cap 3)", 0),
    (("revert", "t(T)", "--cap", "3", "--text"),
     "T - t[1]*T^2 + (2*t[1,1] - t[2])*T^3 (cap 3)", 0),
    (("revert", "t(T)", "--cap", "4", "--text"),
     "T - t[1]*T^2 + (2*t[1,1] - t[2])*T^3 + "
     "(-5*t[1,1,1] + 5*t[2,1] - t[3])*T^4 (cap 4)", 0),
    (("log", "1+T", "--cap", "4", "--text"),
     "T - 1/2*T^2 + 1/3*T^3 - 1/4*T^4 (cap 4)", 0),
    (("log", "--cap", "3", "--text"),
     "T - b[1]*T^2 + (2*b[1,1] - b[2])*T^3 (cap 3)", 0),
    (("fgl", "--cap", "2", "--text"), "X + Y + 2*b[1]*X*Y (cap 2)", 0),
    (("fgl", "--structure", "bfk", "--cap", "2", "--text"),
     "X + Y + 2*Z[1]*X*Y (cap 2)", 0),
    (("beta", "--cap", "2", "--text"),
     "1 + beta*T + (-b[1]*beta + 1/2*beta^2)*T^2 (cap 2)", 0),
    (("cumulant", "--cap", "3", "--text"),
     "-T - Z[1]*T^2 + (-2*Z[1,1] + Z[2])*T^3 (cap 3)", 0),
    # characteristic numbers
    (("charnum", "cp", "--dim", "0"), "1", 0),
    (("charnum", "cp", "--dim", "1"), "-2*b[1]", 0),
    (("charnum", "cp", "--dim", "2"), "6*b[1,1] - 3*b[2]", 0),
    (("charnum", "cp", "--dim", "1", "--partition", "1"), "-2", 0),
    (("charnum", "cp", "--dim", "2", "--partition", "1,1"), "6", 0),
    (("charnum", "cp", "--dim", "2", "--partition", "2"), "-3", 0),
    (("charnum", "quasitoric", "--space", _QT_SPACE_1,
      "--composition", "1"), "2", 0),
    (("charnum", "quasitoric", "--space", _QT_SPACE_11,
      "--composition", "1,1"), "4", 0),
    (("charnum", "quasitoric", "--space", _QT_SPACE_11,
      "--composition", "2"), "0", 0),
    # composition-sum invariant
    (("crn", "--weight", "1"), "Z[1]", 0),
    (("crn", "--weight", "2"), "Z[1,1] + Z[2]", 0),
    (("crn", "--weight", "3"), "Z[1,1,1] + Z[1,2] + Z[2,1] + Z[3]", 0),
    # cobar ranks
    (("cobar-rank", "--algebroid", "S.B", "--weight", "0", "--degree", "0"),
     '{"algebroid":"S.B","weight":0,"degree":0,"rank":1}', 0),
    (("cobar-rank", "--algebroid", "S.B", "--weight", "1", "--degree", "0"),
     '{"algebroid":"S.B","weight":1,"degree":0,"rank":1}', 0),
    (("cobar-rank", "--algebroid", "S.B", "--weight", "2", "--degree", "0"),
     '{"algebroid":"S.B","weight":2,"degree":0,"rank":1}', 0),
    (("cobar-rank", "--algebroid", "S.B", "--weight", "3", "--degree", "0"),
     '{"algebroid":"S.B","weight":3,"degree":0,"rank":1}', 0),
    # error path: truncated index list reports its column
    (("eval", "M[1,2"), None, 1),
    # verification entry points
    (("verify", "--suite", "counts"), None, 0),
    (("verify", "--suite", "hopf-axioms", "--weight", "6"), None, 0),
]


def _random_element(rng, family):
    if family == "sym":
        basis = rng.choice(("e", "h", "p", "m"))
    terms = {}
    for _ in range(rng.randint(1, 4)):
        w = rng.randint(1, 6)
        if family in ("sym", "fdb", "bpoly"):
            pool = partitions_of(w)
        else:
            pool = compositions_of(w)
        idx = pool[rng.randrange(len(pool))]
        num = rng.choice([x for x in range(-9, 10) if x])
        den = rng.randint(1, 9)
        terms[idx] = terms.get(idx, Fraction(0)) + Fraction(num, den)
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        terms = {(1,): Fraction(1)}
    if family == "sym":
        return SymElement(terms, basis)
    cls = {"nsym": NSymElement, "qsym": QSymElement,
           "fdb": FdBElement, "bpoly": BElement}[family]
    return cls(terms)


def suite_cli_roundtrip(weight=None, cap=None):
    from .cli import run_command  # deferred: cli imports this module
    import io

    results = []
    rng = random.Random(20260825)
    per_family = 1000
    bad = None
    for family in ("sym", "nsym", "qsym", "fdb", "bpoly"):
        for _ in range(per_family):
            x = _random_element(rng, family)
            text = str(x)
            try:
                value, fam = parse_element(text)
            except ExpressionError as exc:
                bad = (family, text, str(exc))
                break
            if value != x or fam != family:
                bad = (family, text, "value or family mismatch")
                break
            doc = dumps(document_for(x))
            if dumps(document_for(x)) != doc:
                bad = (family, text, "unstable JSON")
                break
            back = from_document(json.loads(doc))
            if back != x or (isinstance(x, SymElement)
                             and back.basis != x.basis):
                bad = (family, text, "JSON round trip")
                break
        if bad:
            break
    label = "parse/print and JSON round trips on %d random elements per algebra" % (
        per_family)
    results.append(_ok(label) if bad is None else
                   _fail(label, "%r" % (bad,)))

    bad = None
    for argv, expected_out, expected_exit in DOCUMENTED_INVOCATIONS:
        out1, err1 = io.StringIO(), io.StringIO()
        code1 = run_command(list(argv), out1, err1)
        out2, err2 = io.StringIO(), io.StringIO()
        code2 = run_command(list(argv), out2, err2)
        if code1 != expected_exit:
            bad = (argv, "exit %d != %d; stderr: %s"
                   % (code1, expected_exit, err1.getvalue().strip()))
            break
        if (code1, out1.getvalue()) != (code2, out2.getvalue()):
            bad = (argv, "output not byte-stable")
            break
        if expected_out is not None and out1.getvalue().rstrip("\n") != expected_out:
            bad = (argv, "got %r" % out1.getvalue().rstrip("\n"))
            break
    label = "documented invocations: %d commands, pinned output and exit codes" % (
        len(DOCUMENTED_INVOCATIONS))
    results.append(_ok(label) if bad is None else
                   _fail(label, "%s -> %s" % bad))
    return results


SUITES = {
    "hopf-axioms": suite_hopf_axioms,
    "antipode": suite_antipode,
    "duality": suite_duality,
    "bfk": suite_bfk,
    "comodule-algebroid": suite_comodule_algebroid,
    "topology": suite_topology,
    "counts": suite_counts,
    "cli-roundtrip": suite_cli_roundtrip,
}


def run_suites(names, weight=None, cap=None):
    """Run the named suites (or all) and return (records, all_ok)."""
    if not names or names == ["all"]:
        names = list(SUITES)
    records = []
    for name in names:
        fn = SUITES.get(name)
        if fn is None:
            raise KeyError(name)
        records.extend(fn(weight=weight, cap=cap))
    return records, all(ok for _, ok, _ in records)


def render_report(records):
    lines = []
    for label, ok, detail in records:
        if ok:
            lines.append("ok    %s" % label)
        else:
            lines.append("FAIL  %s%s" % (label, " -- " + detail if detail else ""))
    passed = sum(1 for _, ok, _ in records if ok)
    lines.append("%d/%d checks passed" % (passed, len(records)))
    return "\n".join(lines)
