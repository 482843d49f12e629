"""Symmetric functions over the rationals with e, h, p and m bases.

The algebra is graded by weight.  Basis indices are partitions; the bases are
the elementary (e), complete homogeneous (h), power sum (p) and monomial (m)
families.  e, h and p are multiplicative, so products there just merge
partitions; products in the m basis and all basis conversions go through one
pivot: the literal expansion as a symmetric polynomial in weight-many
variables, which doubles as an independently checkable oracle.

The Hopf structure lives on the e basis (each generator series is grouplike),
with everything else reached by conversion.  All coefficients are Fractions;
conversions involving the p basis are the only place denominators appear.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
import warnings

from .errors import AlgebraMismatchError, DomainError
from .exactlinalg import invert_matrix
from .indices import compositions_of, partitions_of, sort_to_partition
from .linear import LinearElement, Tensor, add_term
from .scalars import ONE, ZERO
from .series import TruncatedSeries

BASES = ("e", "h", "p", "m")


class SymElement(LinearElement):
    """A symmetric function tagged with the basis its coefficients refer to."""

    COMMUTATIVE = True
    __slots__ = ("basis",)

    def __init__(self, terms=None, basis="e"):
        if basis not in BASES:
            raise DomainError("unknown symmetric function basis %r" % (basis,))
        merged = {}
        if terms:
            for idx, coeff in terms.items():
                idx = tuple(sorted(idx, reverse=True))
                if any(not isinstance(p, int) or p <= 0 for p in idx):
                    raise DomainError("partition parts must be positive integers")
                add_term(merged, idx, coeff if isinstance(coeff, Fraction) else Fraction(coeff))
        super().__init__(merged)
        self.basis = basis

    def _new(self, terms):
        return SymElement(terms, self.basis)

    def _letter(self):
        return self.basis

    @classmethod
    def from_index(cls, idx, coeff=1, basis="e"):
        return cls({tuple(idx): coeff}, basis)

    @classmethod
    def one(cls, basis="e"):
        return cls({(): 1}, basis)

    @classmethod
    def zero(cls, basis="e"):
        return cls({}, basis)

    @classmethod
    def basis_mul(cls, i, j):
        # merge of partitions; only correct for the multiplicative bases,
        # which is all that tensor slots (always e-based) ever see
        return ((tuple(sorted(i + j, reverse=True)), ONE),)

    def __eq__(self, other):
        if isinstance(other, SymElement) and other.basis != self.basis:
            other = convert(other, self.basis)
        return super().__eq__(other)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, SymElement) and other.basis != self.basis:
            other = convert(other, self.basis)
        return super().__add__(other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymElement):
            raise AlgebraMismatchError(
                "cannot multiply SymElement by %s" % type(other).__name__)
        if other.basis != self.basis:
            other = convert(other, self.basis)
        if self.basis == "m":
            return _monomial_mul(self, other)
        return super().__mul__(other)


def e(*parts):
    return SymElement({tuple(parts): ONE}, "e")


def h(*parts):
    return SymElement({tuple(parts): ONE}, "h")


def p(*parts):
    return SymElement({tuple(parts): ONE}, "p")


def m(*parts):
    return SymElement({tuple(parts): ONE}, "m")


# -- polynomial expansion (the pivot oracle) ------------------------------

def _poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            add_term(out, key, va * vb)
    return out


def _gen_poly(basis, n, nvars):
    """Expansion of a single generator e_n / h_n / p_n in nvars variables."""
    if n == 0:
        return {(0,) * nvars: ONE}
    out = {}
    if basis == "e":
        for pos in combinations(range(nvars), n):
            key = [0] * nvars
            for q in pos:
                key[q] = 1
            out[tuple(key)] = ONE
    elif basis == "h":
        for multi in combinations_with_replacement(range(nvars), n):
            key = [0] * nvars
            for q in multi:
                key[q] += 1
            out[tuple(key)] = ONE
    elif basis == "p":
        for i in range(nvars):
            key = [0] * nvars
            key[i] = n
            out[tuple(key)] = ONE
    else:
        raise DomainError("no generator expansion for basis %r" % (basis,))
    return out


def _m_poly(lam, nvars):
    """m_lam in nvars variables: one monomial per distinct arrangement."""
    if not lam:
        return {(0,) * nvars: ONE}
    if len(lam) > nvars:
        return {}
    counts = sorted(Counter(lam).items())
    out = {}

    def place(avail, i, current):
        if i == len(counts):
            out[tuple(current)] = ONE
            return
        v, k = counts[i]
        for pos in combinations(avail, k):
            for q in pos:
                current[q] = v
            place(tuple(x for x in avail if x not in pos), i + 1, current)
            for q in pos:
                current[q] = 0

    place(tuple(range(nvars)), 0, [0] * nvars)
    return out


def expand(f, nvars):
    """Evaluate f as a literal polynomial in x_1..x_nvars.

    Returns a dict mapping exponent vectors (length nvars) to Fractions.
    Faithful when nvars >= the weight of f; smaller nvars still evaluates
    honestly but collapses information, hence the warning.
    """
    if nvars < 1:
        raise DomainError("expansion needs at least one variable")
    if nvars < f.max_weight():
        warnings.warn("expanding in %d variables < weight %d loses information"
                      % (nvars, f.max_weight()), stacklevel=2)
    out = {}
    for lam, c in f.terms.items():
        if f.basis == "m":
            poly = _m_poly(lam, nvars)
        else:
            poly = {(0,) * nvars: ONE}
            for k in lam:
                poly = _poly_mul(poly, _gen_poly(f.basis, k, nvars))
        for key, v in poly.items():
            add_term(out, key, c * v)
    return out


def format_polynomial(poly):
    """Readable form of an expand() result, e.g. 'x1^2*x2 + x1*x2^2'."""
    if not poly:
        return "0"
    bits = []
    for key in sorted(poly, key=lambda k: (-sum(k), tuple(-x for x in k))):
        c = poly[key]
        vars_part = "*".join(
            "x%d" % (i + 1) if e_ == 1 else "x%d^%d" % (i + 1, e_)
            for i, e_ in enumerate(key) if e_)
        body = vars_part or "1"
        if not bits:
            prefix = "" if c == 1 and vars_part else ("-" if c == -1 and vars_part else "")
            if prefix or (c in (1, -1) and vars_part):
                bits.append(prefix + body)
            else:
                bits.append("%s*%s" % (c, body) if vars_part else str(c))
        else:
            sign = " + " if c > 0 else " - "
            a = abs(c)
            if a == 1 and vars_part:
                bits.append(sign + body)
            else:
                bits.append(sign + ("%s*%s" % (a, body) if vars_part else str(a)))
    return "".join(bits)


def _monomial_mul(a, b):
    """Product of two m-basis elements through the polynomial pivot."""
    nvars = max(1, a.max_weight() + b.max_weight())
    prod = _poly_mul(expand(a, nvars), expand(b, nvars))
    out = {}
    for key, c in prod.items():
        if all(key[i] >= key[i + 1] for i in range(len(key) - 1)):
            # weakly decreasing exponent vector = the dominant representative
            # of its orbit; read the m-coordinate here and nowhere else
            add_term(out, tuple(x for x in key if x), c)
    return SymElement(out, "m")


# -- basis conversion ------------------------------------------------------

@lru_cache(maxsize=None)
def _transition(basis, w):
    """(partitions of w, matrix): row i gives basis_{lam_i} in m-coordinates."""
    parts = partitions_of(w)
    n = len(parts)
    if basis == "m":
        rows = tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        return parts, rows
    nvars = max(w, 1)
    rows = []
    for lam in parts:
        poly = expand(SymElement({lam: ONE}, basis), nvars)
        rows.append(tuple(poly.get(mu + (0,) * (nvars - len(mu)), ZERO) for mu in parts))
    return parts, tuple(rows)


@lru_cache(maxsize=None)
def _transition_inverse(basis, w):
    parts, rows = _transition(basis, w)
    inv = invert_matrix(rows)
    return tuple(tuple(r) for r in inv)


def convert(f, to, integral=False):
    """Re-express f in another basis; exact, and the round trip is identity.

    With integral=True, refuse results with non-integral coefficients (the
    p basis genuinely needs denominators, e.g. m in p-coordinates).
    """
    if to not in BASES:
        raise DomainError("unknown symmetric function basis %r" % (to,))
    if f.basis == to:
        result = f
    else:
        out = {}
        for w in f.weights():
            comp = f.component(w)
            parts, rows = _transition(f.basis, w)
            pos = {lam: i for i, lam in enumerate(parts)}
            vec = [ZERO] * len(parts)
            if f.basis == "m":
                for lam, c in comp.terms.items():
                    vec[pos[lam]] = c
            else:
                for lam, c in comp.terms.items():
                    row = rows[pos[lam]]
                    for j, entry in enumerate(row):
                        if entry:
                            vec[j] += c * entry
            if to == "m":
                coords = vec
            else:
                inv = _transition_inverse(to, w)
                rng = range(len(parts))
                coords = [sum((vec[i] * inv[i][j] for i in rng), ZERO) for j in rng]
            for lam, c in zip(parts, coords):
                if c:
                    add_term(out, lam, c)
        result = SymElement(out, to)
    if integral and any(c.denominator != 1 for c in result.terms.values()):
        raise DomainError("conversion to %s-basis is not integral here" % to)
    return result


# -- Hopf structure --------------------------------------------------------

def coproduct(f):
    """Coproduct with each generator series grouplike: De_n = sum e_i (x) e_j.

    Input in any basis; the output tensor is expressed in the e basis.
    """
    fe = convert(f, "e")
    space = (SymElement, SymElement)
    total = Tensor(space, {})
    for lam, c in fe.terms.items():
        acc = Tensor(space, {((), ()): c})
        for k in lam:
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
def _antipode_e_gen(n):
    """Antipode of e_n: alternating sum of e_I over all compositions I of n."""
    terms = {}
    for comp in compositions_of(n):
        add_term(terms, sort_to_partition(comp), Fraction(-1) ** len(comp))
    return tuple(terms.items())


def antipode(f):
    """Hopf antipode; an algebra involution here since S is commutative."""
    fe = convert(f, "e")
    out = {}
    for lam, c in fe.terms.items():
        prod = SymElement({(): ONE}, "e")
        for k in lam:
            prod = prod * SymElement(dict(_antipode_e_gen(k)), "e")
        for idx, cc in prod.terms.items():
            add_term(out, idx, c * cc)
    return convert(SymElement(out, "e"), f.basis)


def involution(f, which):
    """The sign twist (dual), its antipode composite (whitney), and omega.

    dual sends e_k to (-1)^k e_k and lands in the e basis; whitney sends e_k
    to (-1)^k h_k and omega sends e_k to h_k, both landing in the h basis.
    All three are algebra morphisms and square to the identity.
    """
    if which not in ("dual", "whitney", "omega"):
        raise DomainError("unknown involution %r" % (which,))
    fe = convert(f, "e")
    out_basis = "e" if which == "dual" else "h"
    out = {}
    for lam, c in fe.terms.items():
        if which == "omega":
            add_term(out, lam, c)
        else:
            add_term(out, lam, c * Fraction(-1) ** sum(lam))
    return SymElement(out, out_basis)


def hall_pair(f, g):
    """Hall inner product, normalized by <h_lam, m_mu> = delta."""
    fh = convert(f, "h")
    gm = convert(g, "m")
    return sum((fh.terms[lam] * gm.terms[lam]
                for lam in fh.terms.keys() & gm.terms.keys()), ZERO)


# -- generating series -----------------------------------------------------

def e_series(cap):
    """1 + e_1 T + e_2 T^2 + ... up to the cap."""
    coeffs = {0: SymElement.one()}
    for n in range(1, cap + 1):
        coeffs[n] = SymElement({(n,): ONE})
    return TruncatedSeries(SymElement, coeffs, cap)


def h_series(cap):
    """1 + h_1 T + h_2 T^2 + ..., with coefficients expressed in the e basis.

    Computed as the reciprocal of the alternating e series, which is the
    relation tying the two bases together.
    """
    return e_series(cap).alternate().invert()
