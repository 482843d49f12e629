"""Quasisymmetric functions in the monomial basis.

M_I is indexed by a composition and stands for the sum of monomials
x_{n_1}^{i_1} ... x_{n_r}^{i_r} over strictly increasing variable indices,
so the product is the overlapping (quasi-) shuffle and the coproduct is
deconcatenation.  This algebra is the graded dual of the noncommutative
symmetric functions under the basis pairing <Z_I, M_J> = delta, and the
symmetric functions sit inside it by fanning a partition out over all of
its rearrangements.
"""

from functools import lru_cache
from itertools import combinations, permutations

from .errors import AlgebraMismatchError
from .linear import LinearElement, Tensor, add_term
from .nsym import NSymElement
from .scalars import ONE, ZERO
from . import sym


@lru_cache(maxsize=None)
def quasi_shuffle(I, J):
    """Overlapping shuffle of two compositions: ((composition, count), ...).

    Standard recursion on first letters: take from the left word, from the
    right word, or merge both first letters into one part.
    """
    if not I:
        return ((J, 1),)
    if not J:
        return ((I, 1),)
    out = {}
    for K, c in quasi_shuffle(I[1:], J):
        add_term(out, (I[0],) + K, c)
    for K, c in quasi_shuffle(I, J[1:]):
        add_term(out, (J[0],) + K, c)
    for K, c in quasi_shuffle(I[1:], J[1:]):
        add_term(out, (I[0] + J[0],) + K, c)
    return tuple(out.items())


class QSymElement(LinearElement):
    LETTER = "M"
    COMMUTATIVE = True
    __slots__ = ()

    @classmethod
    def basis_mul(cls, i, j):
        return quasi_shuffle(i, j)


def M(*parts):
    return QSymElement({tuple(parts): ONE})


def coproduct(f):
    """Deconcatenation: split the composition at every position."""
    space = (QSymElement, QSymElement)
    out = {}
    for I, c in f.terms.items():
        for k in range(len(I) + 1):
            add_term(out, (I[:k], I[k:]), c)
    return Tensor(space, out)


def counit(f):
    return f.counit()


@lru_cache(maxsize=None)
def _antipode_basis(I):
    """Antipode on M_I by the connected-graded recursion."""
    if not I:
        return QSymElement({(): ONE})
    acc = QSymElement({I: -ONE})
    for k in range(1, len(I)):
        acc = acc - _antipode_basis(I[:k]) * QSymElement({I[k:]: ONE})
    return acc


def antipode(f):
    out = QSymElement()
    for I, c in f.terms.items():
        out = out + _antipode_basis(I).scale(c)
    return out


def pair(a, b):
    """Duality pairing with noncommutative symmetric functions: <Z_I, M_J> = delta."""
    if not isinstance(a, NSymElement) or not isinstance(b, QSymElement):
        raise AlgebraMismatchError("pair expects (NSymElement, QSymElement)")
    return sum((a.terms[I] * b.terms[I] for I in a.terms.keys() & b.terms.keys()), ZERO)


def pair_tensor(t_left, t_right):
    """Componentwise pairing of equal-arity tensors (N slots against Q slots)."""
    if t_left.arity != t_right.arity:
        raise AlgebraMismatchError("tensor arities differ")
    total = ZERO
    for key, c in t_left.terms.items():
        d = t_right.terms.get(key)
        if d is not None:
            total += c * d
    return total


def include_symmetric(f):
    """Embed a symmetric function: m_lam fans out over all rearrangements."""
    fm = sym.convert(f, "m")
    out = {}
    for lam, c in fm.terms.items():
        for I in set(permutations(lam)):
            add_term(out, I, c)
    return QSymElement(out)


def expand_ordered(f, nvars):
    """Evaluate f in ordered variables x_1 < ... < x_nvars.

    Returns a dict from exponent vectors to Fractions; the independent
    oracle for the quasi-shuffle product.
    """
    out = {}
    for I, c in f.terms.items():
        for positions in combinations(range(nvars), len(I)):
            key = [0] * nvars
            for pos, part in zip(positions, I):
                key[pos] = part
            add_term(out, tuple(key), c)
    return out
