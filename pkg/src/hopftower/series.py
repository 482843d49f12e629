"""Truncated power series with exact coefficients in a configurable algebra.

Coefficients may be plain ``Fraction`` scalars, elements of any of the graded
algebras in this package, or tensors.  A series is stored sparsely as a dict
from exponent to coefficient; for bivariate series the exponent is a pair
``(i, j)``.  Every operation truncates at a fixed ``cap``: exponents with
total degree > cap are discarded, and operations never invent coefficients
beyond it.

Composition and reversion follow the classical recursions.  Reversion is only
defined over commutative coefficients; composition multiplies outer
coefficients on the left of inner-series products, which is the convention
that makes the noncommutative functional calculus here come out right.
"""

from fractions import Fraction

from .errors import AlgebraMismatchError, DomainError
from .scalars import ONE, ZERO


def _is_scalar_algebra(algebra):
    return algebra is Fraction


class TruncatedSeries:
    __slots__ = ("algebra", "coeffs", "cap", "nvars")

    def __init__(self, algebra, coeffs=None, cap=6, nvars=1):
        if cap < 0:
            raise DomainError("cap must be nonnegative")
        self.algebra = algebra
        self.cap = cap
        self.nvars = nvars
        data = {}
        if coeffs:
            for k, v in coeffs.items():
                key = self._norm_key(k)
                if self._degree(key) > cap:
                    continue
                v = self._norm_coeff(v)
                if self._nonzero(v):
                    data[key] = v
        self.coeffs = data

    # -- representation helpers -------------------------------------------

    def _norm_key(self, k):
        if self.nvars == 1:
            return int(k)
        return tuple(int(x) for x in k)

    def _degree(self, key):
        return key if self.nvars == 1 else sum(key)

    def _norm_coeff(self, v):
        if _is_scalar_algebra(self.algebra):
            return v if isinstance(v, Fraction) else Fraction(v)
        if isinstance(v, (int, Fraction)):
            return self._unit_coeff().scale(v) if v else self._zero_coeff()
        return v

    def _unit_coeff(self):
        return ONE if _is_scalar_algebra(self.algebra) else self.algebra.one()

    def _zero_coeff(self):
        return ZERO if _is_scalar_algebra(self.algebra) else self.algebra.zero()

    @staticmethod
    def _nonzero(v):
        return bool(v)

    def _coeff_commutative(self):
        if _is_scalar_algebra(self.algebra):
            return True
        return bool(self.algebra.COMMUTATIVE)

    def _same_shape(self, other):
        if (not isinstance(other, TruncatedSeries) or other.algebra != self.algebra
                or other.nvars != self.nvars):
            raise AlgebraMismatchError("series do not live in the same ring")

    def _spawn(self, coeffs, cap=None, nvars=None):
        return TruncatedSeries(self.algebra,
                               coeffs,
                               self.cap if cap is None else cap,
                               self.nvars if nvars is None else nvars)

    def coefficient(self, k):
        """Coefficient of T^k (or X^i Y^j for a pair key); zero when absent."""
        key = self._norm_key(k)
        v = self.coeffs.get(key)
        return self._zero_coeff() if v is None else v

    def valuation(self):
        """Smallest total degree with a nonzero coefficient; cap+1 when zero."""
        if not self.coeffs:
            return self.cap + 1
        return min(self._degree(k) for k in self.coeffs)

    def truncate(self, cap):
        if cap >= self.cap:
            return self._spawn(self.coeffs, cap=cap)
        return self._spawn({k: v for k, v in self.coeffs.items() if self._degree(k) <= cap},
                           cap=cap)

    def map_coefficients(self, fn, algebra=None):
        out = {}
        target = self.algebra if algebra is None else algebra
        for k, v in self.coeffs.items():
            w = fn(v)
            if w:
                out[k] = w
        return TruncatedSeries(target, out, self.cap, self.nvars)

    # -- ring operations --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.algebra == other.algebra and self.nvars == other.nvars
                and self.cap == other.cap and self.coeffs == other.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            zk = self._norm_key(0 if self.nvars == 1 else (0,) * self.nvars)
            other = self._spawn({zk: other})
        self._same_shape(other)
        cap = min(self.cap, other.cap)
        out = {k: v for k, v in self.coeffs.items() if self._degree(k) <= cap}
        for k, v in other.coeffs.items():
            if self._degree(k) > cap:
                continue
            cur = out.get(k)
            s = v if cur is None else cur + v
            if self._nonzero(s):
                out[k] = s
            elif k in out:
                del out[k]
        return self._spawn(out, cap=cap)

    __radd__ = __add__

    def __neg__(self):
        return self._spawn({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q):
        q = Fraction(q)
        if not q:
            return self._spawn({})
        if _is_scalar_algebra(self.algebra):
            return self._spawn({k: v * q for k, v in self.coeffs.items()})
        return self._spawn({k: v.scale(q) for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same_shape(other)
        cap = min(self.cap, other.cap)
        out = {}
        for k1, v1 in self.coeffs.items():
            d1 = self._degree(k1)
            if d1 > cap:
                continue
            for k2, v2 in other.coeffs.items():
                if d1 + self._degree(k2) > cap:
                    continue
                key = k1 + k2 if self.nvars == 1 else tuple(a + b for a, b in zip(k1, k2))
                p = v1 * v2
                cur = out.get(key)
                s = p if cur is None else cur + p
                if self._nonzero(s):
                    out[key] = s
                elif key in out:
                    del out[key]
        return self._spawn(out, cap=cap)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("series exponents must be nonnegative integers")
        out = self._spawn({self._norm_key(0 if self.nvars == 1 else (0,) * self.nvars): ONE})
        for _ in range(n):
            out = out * self
        return out

    # -- inversion, composition, reversion --------------------------------

    def invert(self):
        """Multiplicative inverse; needs an invertible (scalar-unit) constant term."""
        zero_key = 0 if self.nvars == 1 else (0,) * self.nvars
        c0 = self.coeffs.get(zero_key)
        if c0 is None:
            raise DomainError("cannot invert a series with zero constant term")
        if _is_scalar_algebra(self.algebra):
            c0_inv = ONE / c0
        else:
            scal = c0.terms.get(())
            if scal is None or len(c0.terms) != 1:
                raise DomainError("constant term must be a scalar multiple of the unit")
            c0_inv = ONE / scal
        # g = c0^-1 * (unit - (f - c0) * g), solved degree by degree
        rest = self._spawn({k: v for k, v in self.coeffs.items() if k != zero_key})
        out = self._spawn({zero_key: self._norm_coeff(c0_inv)})
        if not rest.coeffs:
            return out
        # g = c0^-1 * (1 - rest * g); each pass extends the correct order by one
        acc = out
        for _ in range(self.cap):
            acc = out - (rest * acc).scale(c0_inv)
        probe = self * acc
        if probe != probe._spawn({zero_key: ONE}):
            raise DomainError("inversion failed to converge within the cap")
        return acc

    def compose(self, inner):
        """Substitute ``inner`` (zero constant term) into this univariate series."""
        if self.nvars != 1:
            raise DomainError("composition needs a univariate outer series")
        if inner.algebra != self.algebra:
            raise AlgebraMismatchError("inner series over a different coefficient ring")
        zk = 0 if inner.nvars == 1 else (0,) * inner.nvars
        if inner.coeffs.get(zk):
            raise DomainError("inner series must have zero constant term")
        cap = min(self.cap, inner.cap)
        val = max(inner.valuation(), 1)
        one_key = zk
        result = {}
        power = TruncatedSeries(self.algebra, {one_key: ONE}, cap, inner.nvars)
        for n in range(0, cap + 1):
            if n > 0:
                power = power * inner
                if n * val > cap:
                    break
            cn = self.coeffs.get(n)
            if cn is None:
                continue
            for k, v in power.coeffs.items():
                term = cn * v  # outer coefficients act on the left
                cur = result.get(k)
                s = term if cur is None else cur + term
                if self._nonzero(s):
                    result[k] = s
                elif k in result:
                    del result[k]
        return TruncatedSeries(self.algebra, result, cap, inner.nvars)

    def revert(self):
        """Compositional inverse of a series T + higher order terms.

        Solves f(g(T)) = T degree by degree; only valid over commutative
        coefficients, which is all this package ever needs.
        """
        if self.nvars != 1:
            raise DomainError("reversion needs a univariate series")
        if not self._coeff_commutative():
            raise DomainError("reversion requires commutative coefficients")
        c1 = self.coeffs.get(1)
        if self.coeffs.get(0) or c1 != self._norm_coeff(1):
            raise DomainError("reversion needs the form T + higher order terms")
        cap = self.cap
        g = {1: self._norm_coeff(1)}
        for n in range(2, cap + 1):
            partial = TruncatedSeries(self.algebra, g, n, 1)
            comp = self.truncate(n).compose(partial)
            err = comp.coeffs.get(n)
            if err is not None and self._nonzero(err):
                g[n] = -err
        out = TruncatedSeries(self.algebra, g, cap, 1)
        return out

    def residue(self):
        """Coefficient of T^-1 of this series times dT, i.e. a formal residue hook.

        Stored exponents are nonnegative, so the residue of a plain series is
        zero; ``shift`` produces the negative-exponent views where this is
        useful.
        """
        return self.coeffs.get(-1, self._zero_coeff())

    def shift(self, k):
        """Multiply by T^k, allowing negative exponents (Laurent view)."""
        if self.nvars != 1:
            raise DomainError("shift is univariate only")
        out = {}
        for e, v in self.coeffs.items():
            ne = e + k
            if ne <= self.cap:
                out[ne] = v
        res = TruncatedSeries(self.algebra, {}, self.cap, 1)
        res.coeffs = out
        return res

    # -- transcendental helpers over the rationals ------------------------

    def exp(self):
        """exp of a series with zero constant term."""
        if self.coeffs.get(0 if self.nvars == 1 else (0,) * self.nvars):
            raise DomainError("exp needs zero constant term")
        zero_key = 0 if self.nvars == 1 else (0,) * self.nvars
        out = self._spawn({zero_key: ONE})
        term = self._spawn({zero_key: ONE})
        for n in range(1, self.cap + 1):
            term = term * self
            out = out + term.scale(Fraction(1, _factorial(n)))
            if not term.coeffs:
                break
        return out

    def log(self):
        """log of a series with constant term 1."""
        zero_key = 0 if self.nvars == 1 else (0,) * self.nvars
        if self.coeffs.get(zero_key) != self._norm_coeff(1):
            raise DomainError("log needs constant term 1")
        u = self._spawn({k: v for k, v in self.coeffs.items() if k != zero_key})
        out = self._spawn({})
        term = self._spawn({zero_key: ONE})
        sign = 1
        for n in range(1, self.cap + 1):
            term = term * u
            if not term.coeffs:
                break
            out = out + term.scale(Fraction(sign, n))
            sign = -sign
        return out

    def alternate(self):
        """Substitute T -> -T in a univariate series."""
        if self.nvars != 1:
            raise DomainError("alternate is univariate only")
        return self._spawn({k: (v if k % 2 == 0 else -v) for k, v in self.coeffs.items()})

    # -- bivariate plumbing -----------------------------------------------

    def embed_bivariate(self, slot):
        """View a univariate series as bivariate in variable ``slot`` (0 or 1)."""
        if self.nvars != 1:
            raise DomainError("embed_bivariate needs a univariate series")
        out = {}
        for e, v in self.coeffs.items():
            key = (e, 0) if slot == 0 else (0, e)
            out[key] = v
        return TruncatedSeries(self.algebra, out, self.cap, 2)

    def swap_variables(self):
        """Exchange the two variables of a bivariate series."""
        if self.nvars != 2:
            raise DomainError("swap_variables needs a bivariate series")
        return self._spawn({(j, i): v for (i, j), v in self.coeffs.items()})

    def set_variable_zero(self, slot):
        """Kill one variable of a bivariate series, returning a univariate one."""
        if self.nvars != 2:
            raise DomainError("set_variable_zero needs a bivariate series")
        out = {}
        for (i, j), v in self.coeffs.items():
            if slot == 0 and i == 0:
                out[j] = v
            elif slot == 1 and j == 0:
                out[i] = v
        return TruncatedSeries(self.algebra, out, self.cap, 1)

    def __str__(self):
        if not self.coeffs:
            return "0"
        def key_str(k):
            if self.nvars == 1:
                if k == 0:
                    return ""
                return "T" if k == 1 else "T^%d" % k
            bits = []
            for name, exp in zip(("X", "Y"), k):
                if exp == 1:
                    bits.append(name)
                elif exp != 0:
                    bits.append("%s^%d" % (name, exp))
            return "*".join(bits)
        if self.nvars == 1:
            order = sorted(self.coeffs)
        else:
            # display X before Y within each total degree
            order = sorted(self.coeffs, key=lambda kk: (sum(kk), tuple(-x for x in kk)))
        pieces = []
        for k in order:
            vs = str(self.coeffs[k])
            ks = key_str(k)
            if " " in vs:
                vs = "(%s)" % vs
            if not ks:
                piece = vs
            elif vs == "1":
                piece = ks
            elif vs == "-1":
                piece = "-" + ks
            else:
                piece = "%s*%s" % (vs, ks)
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return "TruncatedSeries(%s, cap=%d)" % (self, self.cap)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def generator_series(element_cls, cap):
    """The tautological series T + g_1 T^2 + g_2 T^3 + ... over ``element_cls``.

    The coefficient of T^{n+1} is the single weight-n generator of the
    algebra, so in weight terms [T^k] has weight k - 1.
    """
    coeffs = {1: element_cls.one()}
    for n in range(1, cap):
        coeffs[n + 1] = element_cls.from_index((n,))
    return TruncatedSeries(element_cls, coeffs, cap, 1)
