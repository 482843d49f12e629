"""Sparse linear combinations indexed by integer tuples, and tensors of them.

Every graded algebra in the package stores its elements the same way: a dict
from basis index (a tuple of positive integers, ``()`` for the unit) to a
nonzero ``Fraction``.  Subclasses fix the product of two basis indices; the
bilinear extension, scalar action, grading helpers and canonical printing all
live here.  Elements are treated as immutable once built, which keeps the
memoised structure constants safe to share.
"""

from fractions import Fraction

from .errors import AlgebraMismatchError, DomainError
from .indices import index_sort_key
from .scalars import ONE, ZERO


def add_term(data, idx, coeff):
    """Accumulate ``coeff`` on ``idx`` inside ``data``, dropping zeros."""
    c = data.get(idx)
    c = coeff if c is None else c + coeff
    if c:
        data[idx] = c
    elif idx in data:
        del data[idx]


class LinearElement:
    LETTER = "?"
    COMMUTATIVE = False
    __slots__ = ("terms",)
    __hash__ = None

    def __init__(self, terms=None):
        data = {}
        if terms:
            for idx, coeff in terms.items():
                idx = tuple(idx)
                if any(not isinstance(p, int) or p < 1 for p in idx):
                    raise DomainError("index parts must be positive integers")
                if not isinstance(coeff, Fraction):
                    coeff = Fraction(coeff)
                if coeff:
                    data[idx] = coeff
        self.terms = data

    # -- construction -----------------------------------------------------

    def _new(self, terms):
        """Build a same-algebra element; subclasses carrying extra state override."""
        return type(self)(terms)

    @classmethod
    def from_index(cls, idx, coeff=1):
        return cls({tuple(idx): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis_mul(cls, i, j):
        """Product of two basis indices as ((index, coeff), ...) pairs."""
        raise NotImplementedError

    # -- structure helpers ------------------------------------------------

    def counit(self):
        """Coefficient of the unit; kills everything of positive weight."""
        return self.terms.get((), ZERO)

    def weights(self):
        return sorted({sum(idx) for idx in self.terms})

    def component(self, w):
        """Homogeneous part of weight ``w``."""
        return self._new({i: c for i, c in self.terms.items() if sum(i) == w})

    def max_weight(self):
        return max((sum(i) for i in self.terms), default=0)

    def is_homogeneous(self, w):
        return all(sum(i) == w for i in self.terms)

    def map_indices(self, fn):
        """Relabel basis indices through ``fn``, merging collisions."""
        out = {}
        for idx, c in self.terms.items():
            add_term(out, tuple(fn(idx)), c)
        return out

    # -- arithmetic -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self.terms == ({(): other} if other else {})
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = dict(self.terms)
            add_term(out, (), Fraction(other))
            return self._new(out)
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for idx, c in other.terms.items():
            add_term(out, idx, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q):
        q = Fraction(q)
        if not q:
            return self._new({})
        return self._new({i: c * q for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            raise AlgebraMismatchError(
                "cannot multiply %s by %s" % (type(self).__name__, type(other).__name__))
        out = {}
        for i, ci in self.terms.items():
            for j, cj in other.terms.items():
                cij = ci * cj
                for idx, bc in self.basis_mul(i, j):
                    add_term(out, idx, cij * bc)
        return self._new(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise AlgebraMismatchError("exponents must be nonnegative integers")
        out = self._new({(): ONE})
        for _ in range(n):
            out = out * self
        return out

    # -- printing ---------------------------------------------------------

    def _letter(self):
        return self.LETTER

    def _term_str(self, idx):
        if idx == ():
            return None
        return "%s[%s]" % (self._letter(), ",".join(str(p) for p in idx))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for idx in sorted(self.terms, key=index_sort_key):
            c = self.terms[idx]
            body = self._term_str(idx)
            if not bits:
                if body is None:
                    bits.append(str(c))
                elif c == 1:
                    bits.append(body)
                elif c == -1:
                    bits.append("-" + body)
                else:
                    bits.append("%s*%s" % (c, body))
            else:
                sign = " + " if c > 0 else " - "
                a = abs(c)
                if body is None:
                    bits.append(sign + str(a))
                elif a == 1:
                    bits.append(sign + body)
                else:
                    bits.append("%s%s*%s" % (sign, a, body))
        return "".join(bits)

    def __repr__(self):
        return str(self)


class CommutativeElement(LinearElement):
    """Free commutative polynomial algebra on generators g_1, g_2, ...

    A basis index is a partition; the part ``k`` stands for the generator of
    weight ``k`` and the monomial is the product of its parts.
    """

    COMMUTATIVE = True
    __slots__ = ()

    def __init__(self, terms=None):
        # canonicalise indices to partitions; unsorted inputs merge correctly
        if terms:
            data = {}
            for idx, coeff in terms.items():
                if not isinstance(coeff, Fraction):
                    coeff = Fraction(coeff)
                add_term(data, tuple(sorted(idx, reverse=True)), coeff)
            terms = data
        super().__init__(terms)

    @classmethod
    def basis_mul(cls, i, j):
        return ((tuple(sorted(i + j, reverse=True)), ONE),)


class Tensor:
    """Sparse tensor over a fixed tuple of coefficient algebras.

    Keys are tuples of basis indices, one per slot.  All algebras here are
    concentrated in even topological degree, so no Koszul signs appear
    anywhere.
    """

    __slots__ = ("factors", "terms")
    __hash__ = None

    def __init__(self, factors, terms=None):
        self.factors = tuple(factors)
        data = {}
        if terms:
            for key, coeff in terms.items():
                if not isinstance(coeff, Fraction):
                    coeff = Fraction(coeff)
                if coeff:
                    data[tuple(tuple(i) for i in key)] = coeff
        self.terms = data

    @classmethod
    def of(cls, *elements):
        """Tensor product of algebra elements, expanded bilinearly."""
        factors = tuple(type(x) for x in elements)
        keys = {(): ONE}
        for x in elements:
            nxt = {}
            for prefix, c in keys.items():
                for idx, cx in x.terms.items():
                    nxt[prefix + (idx,)] = c * cx
            keys = nxt
        return cls(factors, keys)

    @property
    def arity(self):
        return len(self.factors)

    def _require_same_shape(self, other):
        if not isinstance(other, Tensor) or other.factors != self.factors:
            raise AlgebraMismatchError("tensor factors do not match")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.factors == other.factors and self.terms == other.terms

    def __add__(self, other):
        self._require_same_shape(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            add_term(out, key, c)
        return Tensor(self.factors, out)

    def __neg__(self):
        return Tensor(self.factors, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q):
        q = Fraction(q)
        return Tensor(self.factors, {k: c * q for k, c in self.terms.items()} if q else {})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._require_same_shape(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for f, i1, i2 in zip(self.factors, k1, k2):
                    nxt = []
                    for prefix, c in partial:
                        for idx, bc in f.basis_mul(i1, i2):
                            nxt.append((prefix + (idx,), c * bc))
                    partial = nxt
                for key, c in partial:
                    add_term(out, key, c)
        return Tensor(self.factors, out)

    # -- slot surgery -----------------------------------------------------

    def apply(self, pos, fn, new_factors):
        """Apply ``fn`` (index -> element or tensor) to slot ``pos``, splicing."""
        new_factors = tuple(new_factors)
        factors = self.factors[:pos] + new_factors + self.factors[pos + 1:]
        out = {}
        for key, c in self.terms.items():
            res = fn(key[pos])
            if isinstance(res, Tensor):
                items = res.terms.items()
            else:
                items = (((i,), cc) for i, cc in res.terms.items())
            for sub, cc in items:
                add_term(out, key[:pos] + tuple(sub) + key[pos + 1:], c * cc)
        return Tensor(factors, out)

    def insert_slot(self, pos, factor, index=()):
        """Insert a fresh slot holding a single basis index (default: the unit)."""
        factors = self.factors[:pos] + (factor,) + self.factors[pos:]
        index = tuple(index)
        return Tensor(factors,
                      {key[:pos] + (index,) + key[pos:]: c for key, c in self.terms.items()})

    def swap_slots(self, i, j):
        factors = list(self.factors)
        factors[i], factors[j] = factors[j], factors[i]
        out = {}
        for key, c in self.terms.items():
            k = list(key)
            k[i], k[j] = k[j], k[i]
            add_term(out, tuple(k), c)
        return Tensor(factors, out)

    def merge_slots(self, i, j):
        """Multiply slot ``j`` into slot ``i`` (in that order) and drop slot ``j``."""
        if self.factors[i] is not self.factors[j]:
            raise AlgebraMismatchError("cannot merge slots over different algebras")
        factors = self.factors[:j] + self.factors[j + 1:]
        out = {}
        for key, c in self.terms.items():
            for idx, bc in self.factors[i].basis_mul(key[i], key[j]):
                k = list(key)
                k[i] = idx
                del k[j]
                add_term(out, tuple(k), c * bc)
        return Tensor(factors, out)

    def project_counit(self, pos):
        """Apply the counit to slot ``pos``: keep unit-indexed terms, drop the slot."""
        factors = self.factors[:pos] + self.factors[pos + 1:]
        out = {}
        for key, c in self.terms.items():
            if key[pos] == ():
                add_term(out, key[:pos] + key[pos + 1:], c)
        return Tensor(factors, out)

    def slot_element(self):
        """Convert an arity-1 tensor back into a plain algebra element."""
        if self.arity != 1:
            raise AlgebraMismatchError("slot_element needs an arity-1 tensor")
        return self.factors[0]({k[0]: c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        unit_like = [f.one() for f in self.factors]
        for key in sorted(self.terms, key=lambda k: tuple(index_sort_key(i) for i in k)):
            c = self.terms[key]
            slots = []
            for f, one, idx in zip(self.factors, unit_like, key):
                s = one._new({idx: ONE})._term_str(idx)
                slots.append(s if s is not None else "1")
            body = " (x) ".join(slots)
            if not bits:
                prefix = "" if c == 1 else ("-" if c == -1 else "%s*" % c)
                bits.append(prefix + body)
            else:
                sign = " + " if c > 0 else " - "
                a = abs(c)
                bits.append(sign + ("" if a == 1 else "%s*" % a) + body)
        return "".join(bits)

    def __repr__(self):
        return str(self)


class TensorSpace:
    """Descriptor for a tensor-product coefficient algebra, usable by series."""

    __slots__ = ("factors",)

    def __init__(self, *factors):
        self.factors = tuple(factors)

    def one(self):
        return Tensor(self.factors, {tuple(() for _ in self.factors): 1})

    def zero(self):
        return Tensor(self.factors, {})

    @property
    def COMMUTATIVE(self):
        return all(f.COMMUTATIVE for f in self.factors)

    def __eq__(self, other):
        return isinstance(other, TensorSpace) and other.factors == self.factors

    def __repr__(self):
        return "TensorSpace(%s)" % ", ".join(f.__name__ for f in self.factors)
