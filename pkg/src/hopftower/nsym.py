"""Noncommutative symmetric functions: the free associative algebra on Z_k.

Basis elements Z_I are words in the generators, indexed by compositions;
the product is concatenation.  The coalgebra structure here is the binomial
one, where the generator series is grouplike: Delta Z_n = sum_{i+j=n}
Z_i (x) Z_j with Z_0 = 1.  The antipode extends the alternating
composition sum on generators as an antimorphism, reversing words.

Abelianizing Z_k down to the elementary symmetric function e_k carries all
of this onto the symmetric function Hopf algebra.
"""

from fractions import Fraction
from functools import lru_cache

from .indices import compositions_of, sort_to_partition
from .linear import LinearElement, Tensor, add_term
from .scalars import ONE
from .series import generator_series
from . import sym


class NSymElement(LinearElement):
    LETTER = "Z"
    COMMUTATIVE = False
    __slots__ = ()

    @classmethod
    def basis_mul(cls, i, j):
        return ((i + j, ONE),)


def z(*parts):
    return NSymElement({tuple(parts): ONE})


def z_series(cap):
    """T + Z_1 T^2 + Z_2 T^3 + ...: the universal coordinate change."""
    return generator_series(NSymElement, cap)


def coproduct(f):
    """Binomial coproduct, extended to words multiplicatively."""
    space = (NSymElement, NSymElement)
    total = Tensor(space, {})
    for word, c in f.terms.items():
        acc = Tensor(space, {((), ()): c})
        for k in word:
            split = {}
            for i in range(k + 1):
                left = (i,) if i else ()
                right = (k - i,) if k - i else ()
                split[(left, right)] = ONE
            acc = acc * Tensor(space, split)
        total = total + acc
    return total


def counit(f):
    return f.counit()


@lru_cache(maxsize=None)
def _antipode_gen(n):
    """Antipode of Z_n: alternating sum of Z_I over compositions I of n."""
    terms = {}
    for comp in compositions_of(n):
        add_term(terms, comp, Fraction(-1) ** len(comp))
    return NSymElement(terms)


def antipode(f):
    """Antipode; an antimorphism, so words are processed in reverse order."""
    out = {}
    for word, c in f.terms.items():
        prod = NSymElement({(): ONE})
        for k in reversed(word):
            prod = prod * _antipode_gen(k)
        for idx, cc in prod.terms.items():
            add_term(out, idx, c * cc)
    return NSymElement(out)


def abelianize(f):
    """Quotient onto symmetric functions: Z_I goes to e_{sort(I)}."""
    out = {}
    for word, c in f.terms.items():
        add_term(out, sort_to_partition(word), c)
    return sym.SymElement(out, "e")


def abelianize_tensor(t):
    """Slotwise abelianization of a tensor of NSymElements."""
    out = t
    for pos in range(t.arity):
        out = out.apply(pos, lambda idx: sym.SymElement({sort_to_partition(idx): ONE}, "e"),
                        (sym.SymElement,))
    return out


def abelianize_series(s):
    """Push a series with NSymElement coefficients down to SymElements."""
    return s.map_coefficients(abelianize, algebra=sym.SymElement)
