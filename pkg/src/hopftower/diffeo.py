"""Hopf algebras of formal diffeomorphisms, commutative and noncommutative.

The commutative one (Faa di Bruno) is the free polynomial algebra on t_1,
t_2, ... with t_0 = 1; its coproduct represents composition of series
t(T) = T + t_1 T^2 + ... and its antipode is Lagrange reversion.

The noncommutative counterpart (Brouder-Frabetti-Krattenthaler, BFK) reuses
the free associative algebra on Z_k but installs the renormalization
coproduct: Delta Z_n is the T^{n+1} coefficient of sum_k Z_{k-1} (x) Z(T)^k.
Its antipode comes from the generic connected-graded recursion and
abelianizes to Lagrange reversion, which is the main cross-check.

The same substitution combinatorics, read on the commutative side, yields
the coaction of the diffeomorphism algebra on symmetric functions.
"""

from functools import lru_cache

from .indices import sort_to_partition, weak_compositions
from .linear import CommutativeElement, Tensor, TensorSpace, add_term
from .nsym import NSymElement, z_series
from .scalars import ONE
from .series import TruncatedSeries, generator_series
from . import sym


class FdBElement(CommutativeElement):
    """Polynomial in the diffeomorphism coordinates t_k, indexed by partitions."""

    LETTER = "t"
    __slots__ = ()


def t(*parts):
    return FdBElement({tuple(sorted(parts, reverse=True)): ONE})


def t_series(cap):
    """T + t_1 T^2 + t_2 T^3 + ...: the generic formal diffeomorphism."""
    return generator_series(FdBElement, cap)


# -- composition coproduct -------------------------------------------------

@lru_cache(maxsize=None)
def _fdb_coproduct_gen(n):
    """Coproduct of t_n: the T^{n+1} coefficient of (t (x) 1)((1 (x) t)(T))."""
    space = TensorSpace(FdBElement, FdBElement)
    if n == 0:
        return space.one()
    cap = n + 1
    outer = TruncatedSeries(space, {
        m + 1: Tensor.of(FdBElement({((m,) if m else ()): ONE}), FdBElement.one())
        for m in range(n + 1)}, cap)
    inner = TruncatedSeries(space, {
        k + 1: Tensor.of(FdBElement.one(), FdBElement({((k,) if k else ()): ONE}))
        for k in range(n + 1)}, cap)
    return outer.compose(inner).coefficient(cap)


def fdb_coproduct(f):
    """Composition coproduct, extended to t-monomials multiplicatively."""
    space = (FdBElement, FdBElement)
    total = Tensor(space, {})
    for lam, c in f.terms.items():
        acc = Tensor(space, {((), ()): c})
        for k in lam:
            acc = acc * _fdb_coproduct_gen(k)
        total = total + acc
    return total


def fdb_counit(f):
    return f.counit()


@lru_cache(maxsize=None)
def _fdb_antipode_gen(n):
    """Antipode of t_n: the T^{n+1} coefficient of the reverted series."""
    if n == 0:
        return FdBElement.one()
    return t_series(n + 1).revert().coefficient(n + 1)


def fdb_antipode(f):
    """Lagrange reversion coefficients, extended as an algebra morphism."""
    out = {}
    for lam, c in f.terms.items():
        prod = FdBElement({(): ONE})
        for k in lam:
            prod = prod * _fdb_antipode_gen(k)
        for idx, cc in prod.terms.items():
            add_term(out, idx, c * cc)
    return FdBElement(out)


# -- coaction on symmetric functions --------------------------------------

@lru_cache(maxsize=None)
def _coaction_gen(n):
    """psi(e_n): the T^n coefficient of e(t(T)), as an S (x) FdB tensor."""
    space = (sym.SymElement, FdBElement)
    if n == 0:
        return Tensor(space, {((), ()): ONE})
    terms = {}
    for j in range(1, n + 1):
        for wc in weak_compositions(n - j, j):
            lam = tuple(sorted((k for k in wc if k), reverse=True))
            add_term(terms, ((j,), lam), ONE)
    return Tensor(space, terms)


def coaction_sym(f):
    """Right coaction of the diffeomorphism algebra on symmetric functions.

    On generators this reads off the T^n coefficient of e(t(T)); it extends
    multiplicatively, making S a comodule algebra.  Input in any basis; the
    left slots of the output are in the e basis.
    """
    fe = sym.convert(f, "e")
    space = (sym.SymElement, FdBElement)
    total = Tensor(space, {})
    for lam, c in fe.terms.items():
        acc = Tensor(space, {((), ()): c})
        for k in lam:
            acc = acc * _coaction_gen(k)
        total = total + acc
    return total


# -- renormalization coproduct (BFK) --------------------------------------

@lru_cache(maxsize=None)
def _bfk_coproduct_gen(n):
    """Delta Z_n: the T^{n+1} coefficient of sum_{k>=1} Z_{k-1} (x) Z(T)^k."""
    space = (NSymElement, NSymElement)
    if n == 0:
        return Tensor(space, {((), ()): ONE})
    zs = z_series(n + 1)
    power = TruncatedSeries(NSymElement, {0: NSymElement.one()}, n + 1)
    total = Tensor(space, {})
    for k in range(1, n + 2):
        power = power * zs
        right = power.coefficient(n + 1)
        if not right:
            continue
        left = NSymElement({((k - 1,) if k > 1 else ()): ONE})
        total = total + Tensor.of(left, right)
    return total


def bfk_coproduct(f):
    """Renormalization coproduct on the Z-algebra, extended multiplicatively."""
    space = (NSymElement, NSymElement)
    total = Tensor(space, {})
    for word, c in f.terms.items():
        acc = Tensor(space, {((), ()): c})
        for k in word:
            acc = acc * _bfk_coproduct_gen(k)
        total = total + acc
    return total


def bfk_counit(f):
    return f.counit()


@lru_cache(maxsize=None)
def _bfk_antipode_gen(n):
    """Antipode of Z_n by the connected-graded recursion through Delta."""
    if n == 0:
        return NSymElement.one()
    acc = NSymElement({(n,): -ONE})
    delta = _bfk_coproduct_gen(n)
    collected = {}
    for (left, right), c in delta.terms.items():
        if left == () or right == ():
            continue
        # left slots of generator coproducts are single generators Z_m, m < n
        add_term(collected.setdefault(left[0], {}), right, c)
    for m in sorted(collected):
        acc = acc - _bfk_antipode_gen(m) * NSymElement(collected[m])
    return acc


def bfk_antipode(f):
    """Renormalization antipode; extended to words as an antimorphism."""
    out = {}
    for word, c in f.terms.items():
        prod = NSymElement({(): ONE})
        for k in reversed(word):
            prod = prod * _bfk_antipode_gen(k)
        for idx, cc in prod.terms.items():
            add_term(out, idx, c * cc)
    return NSymElement(out)


def bfk_abelianize(f):
    """Quotient to the commutative diffeomorphism algebra: Z words to t monomials."""
    return FdBElement(f.map_indices(sort_to_partition))


def bfk_abelianize_tensor(tensor):
    """Slotwise abelianization of a tensor of Z-algebra elements."""
    out = tensor
    for pos in range(tensor.arity):
        out = out.apply(pos, lambda idx: FdBElement({sort_to_partition(idx): ONE}),
                        (FdBElement,))
    return out
