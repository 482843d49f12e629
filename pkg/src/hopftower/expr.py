"""Parsers for the element and series expression languages of the CLI.

Element grammar, whitespace insensitive::

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" UINT)?
    atom   := NUMBER | GEN "[" UINT ("," UINT)* "]" | "(" expr ")"

``NUMBER`` is an unsigned integer or a tight rational such as ``3/4``.
``GEN`` is a single letter naming a generator family: ``e h p m`` for
symmetric functions (the letter doubles as the basis tag), ``Z`` for the
noncommutative power series generators, ``M`` for quasisymmetric monomials,
``t`` for diffeomorphism coordinates and ``b`` for bordism generators.  One
expression must stay inside a single family; plain numbers mix with all of
them.  The optional leading sign is an extension so antipode output can be
pasted back in unchanged.

Series expressions extend the same grammar with three more atoms:

* the variable ``T`` and the central parameter ``beta``;
* named generating series applied by composition: ``e(g)`` ``h(g)`` ``t(g)``
  ``Z(g)`` ``b(g)``, e.g. ``e(-T)`` or ``Z(T)``;
* function calls ``invert(f)``, ``revert(f)``, ``exp(f)``, ``log(f)``,
  ``alternate(f)``, ``residue(f)``, ``shift(f, k)``, ``compose(f, g)``.

Generator atoms like ``e[1]`` act as constant coefficients, so
``invert(1 - e[1]*T)`` is a series over symmetric functions.  Rational
constants promote into any coefficient algebra, and b-polynomials promote
into beta-polynomials; no other mixing is allowed.

Errors carry a 1-based column; positions past the end of the input are
reported at the last character.
"""

from fractions import Fraction

from . import diffeo
from . import nsym as nsym_mod
from . import sym as sym_mod
from . import topology
from .diffeo import FdBElement
from .errors import AlgebraMismatchError, ExpressionError
from .nsym import NSymElement
from .qsym import QSymElement
from .series import TruncatedSeries
from .sym import SymElement
from .topology import BElement, BetaPolynomial

FAMILIES = {"e": "sym", "h": "sym", "p": "sym", "m": "sym",
            "Z": "nsym", "M": "qsym", "t": "fdb", "b": "bpoly"}

_SERIES_LETTERS = {
    "e": sym_mod.e_series,
    "h": sym_mod.h_series,
    "t": diffeo.t_series,
    "Z": nsym_mod.z_series,
    "b": topology.b_series,
}

_FUNCTIONS = {"invert": 1, "revert": 1, "exp": 1, "log": 1,
              "alternate": 1, "residue": 1, "shift": 2, "compose": 2}

_SYMBOLS = {"+": "plus", "-": "minus", "*": "star", "^": "caret",
            "[": "lbrack", "]": "rbrack", "(": "lparen", ")": "rparen",
            ",": "comma"}


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                den = int(text[j + 1:k])
                if den == 0:
                    raise ExpressionError("zero denominator", pos)
                toks.append(("num", Fraction(num, den), pos))
                i = k
            else:
                toks.append(("num", Fraction(num), pos))
                i = j
            continue
        if ch in _SYMBOLS:
            toks.append((_SYMBOLS[ch], ch, pos))
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if len(word) == 1:
                if word == "T":
                    toks.append(("var", word, pos))
                elif word in FAMILIES:
                    toks.append(("gen", word, pos))
                else:
                    raise ExpressionError("unknown letter %r" % word, pos)
            else:
                toks.append(("ident", word, pos))
            i = j
            continue
        raise ExpressionError("unexpected character %r" % ch, pos)
    toks.append(("eof", None, n + 1))
    return toks


class _Parser:
    def __init__(self, text, series_mode):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.series_mode = series_mode

    def _fail(self, message, pos):
        # errors at EOF point at the last character, not one past it
        raise ExpressionError(message, min(pos, max(1, len(self.text))))

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok[0] != kind:
            self._fail("expected %s" % what, tok[2])
        return self.take()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            self._fail("unexpected trailing input", tok[2])
        return node

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] in ("plus", "minus"):
            self.take()
            sign = -1 if tok[0] == "minus" else 1
        terms = [(sign, self.term())]
        while self.peek()[0] in ("plus", "minus"):
            tok = self.take()
            terms.append((-1 if tok[0] == "minus" else 1, self.term()))
        return ("add", terms)

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "star":
            self.take()
            factors.append(self.factor())
        return ("mul", factors)

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "caret":
            self.take()
            tok = self.peek()
            if tok[0] != "num" or tok[1].denominator != 1 or tok[1] < 0:
                self._fail("expected a nonnegative integer exponent", tok[2])
            self.take()
            return ("pow", base, int(tok[1]))
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return ("num", tok[1], tok[2])
        if tok[0] == "var":
            if not self.series_mode:
                self._fail("the series variable T is not allowed here", tok[2])
            self.take()
            return ("var", tok[2])
        if tok[0] == "ident":
            if not self.series_mode:
                self._fail("name %r is not allowed here" % tok[1], tok[2])
            return self.call()
        if tok[0] == "gen":
            return self.generator()
        if tok[0] == "lparen":
            self.take()
            node = self.expr()
            self.expect("rparen", "')'")
            return node
        if self.series_mode:
            self._fail("expected a number, T, a generator or '('", tok[2])
        self._fail("expected a number, a generator or '('", tok[2])

    def call(self):
        head = self.take()
        name = head[1]
        if name == "beta":
            return ("beta", head[2])
        arity = _FUNCTIONS.get(name)
        if arity is None:
            self._fail("unknown function %r" % name, head[2])
        self.expect("lparen", "'(' after %r" % name)
        args = [self.expr()]
        while self.peek()[0] == "comma":
            self.take()
            args.append(self.expr())
        self.expect("rparen", "')'")
        if len(args) != arity:
            self._fail("%s takes %d argument%s" % (name, arity,
                       "s" if arity > 1 else ""), head[2])
        return ("call", name, args, head[2])

    def generator(self):
        head = self.take()
        if self.series_mode and self.peek()[0] == "lparen":
            if head[1] not in _SERIES_LETTERS:
                self._fail("no named series for letter %r" % head[1], head[2])
            self.take()
            arg = self.expr()
            self.expect("rparen", "')'")
            return ("sercall", head[1], arg, head[2])
        self.expect("lbrack", "'[' after generator letter")
        parts = [self.part()]
        while True:
            tok = self.peek()
            if tok[0] == "comma":
                self.take()
                parts.append(self.part())
            elif tok[0] == "rbrack":
                self.take()
                return ("gen", head[1], tuple(parts), head[2])
            else:
                self._fail("expected ',' or ']'", tok[2])

    def part(self):
        tok = self.peek()
        if tok[0] != "num" or tok[1].denominator != 1:
            self._fail("expected an index part", tok[2])
        if tok[1] < 1:
            self._fail("index parts must be positive integers", tok[2])
        self.take()
        return int(tok[1])


def _collect_letters(node, acc):
    kind = node[0]
    if kind == "gen":
        acc.append((node[1], node[3]))
    elif kind == "add":
        for _, sub in node[1]:
            _collect_letters(sub, acc)
    elif kind == "mul":
        for sub in node[1]:
            _collect_letters(sub, acc)
    elif kind == "pow":
        _collect_letters(node[1], acc)


def _make(letter, parts):
    if letter in ("e", "h", "p", "m"):
        return SymElement({parts: 1}, basis=letter)
    if letter == "Z":
        return NSymElement({parts: 1})
    if letter == "M":
        return QSymElement({parts: 1})
    if letter == "t":
        return FdBElement({parts: 1})
    return BElement({parts: 1})


def _eval_element(node):
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "gen":
        return _make(node[1], node[2])
    if kind == "pow":
        return _eval_element(node[1]) ** node[2]
    if kind == "mul":
        out = _eval_element(node[1][0])
        for sub in node[1][1:]:
            out = out * _eval_element(sub)
        return out
    out = None
    for sign, sub in node[1]:
        v = _eval_element(sub)
        if sign < 0:
            v = -v
        out = v if out is None else out + v
    return out


def parse_element(text, algebra=None):
    """Parse and evaluate an element expression.

    Returns ``(value, family)`` with family one of ``sym``, ``nsym``,
    ``qsym``, ``fdb``, ``bpoly``, or ``scalar`` for a pure number.  Passing
    ``algebra`` pins the family up front; an expression may never mix
    generator letters from two families.
    """
    parser = _Parser(text, series_mode=False)
    node = parser.parse()
    seen = []
    _collect_letters(node, seen)
    family = algebra
    for letter, pos in seen:
        fam = FAMILIES[letter]
        if family is None:
            family = fam
        elif fam != family:
            raise ExpressionError(
                "generator %r belongs to %s but the expression is over %s"
                % (letter, fam, family), pos)
    return _eval_element(node), (family or "scalar")


# -- series evaluation ------------------------------------------------------

def _promote(s, algebra):
    """Lift a series into a larger coefficient algebra, or fail."""
    if s.algebra is algebra:
        return s
    if s.algebra is Fraction:
        return s.map_coefficients(lambda c: algebra.one().scale(c),
                                  algebra=algebra)
    if s.algebra is BElement and algebra is BetaPolynomial:
        return s.map_coefficients(lambda el: BetaPolynomial({0: el}),
                                  algebra=BetaPolynomial)
    raise AlgebraMismatchError(
        "series coefficients mix %s with %s" %
        (getattr(s.algebra, "__name__", s.algebra),
         getattr(algebra, "__name__", algebra)))


def _unify(a, b):
    if a.algebra is b.algebra:
        return a, b
    try:
        return a, _promote(b, a.algebra)
    except AlgebraMismatchError:
        return _promote(a, b.algebra), b


def compose_series(outer, inner):
    """Compose two evaluated series, promoting the inner coefficients."""
    return outer.compose(_promote(inner, outer.algebra))


def _eval_series(node, cap):
    kind = node[0]
    if kind == "num":
        return TruncatedSeries(Fraction, {0: node[1]}, cap)
    if kind == "var":
        return TruncatedSeries(Fraction, {1: 1}, cap)
    if kind == "beta":
        return TruncatedSeries(
            BetaPolynomial, {0: BetaPolynomial({1: BElement.one()})}, cap)
    if kind == "gen":
        el = _make(node[1], node[2])
        return TruncatedSeries(type(el), {0: el}, cap)
    if kind == "sercall":
        named = _SERIES_LETTERS[node[1]](cap)
        inner = _eval_series(node[2], cap)
        return named.compose(_promote(inner, named.algebra))
    if kind == "call":
        return _eval_call(node, cap)
    if kind == "pow":
        return _eval_series(node[1], cap) ** node[2]
    if kind == "mul":
        out = _eval_series(node[1][0], cap)
        for sub in node[1][1:]:
            out, rhs = _unify(out, _eval_series(sub, cap))
            out = out * rhs
        return out
    out = None
    for sign, sub in node[1]:
        v = _eval_series(sub, cap)
        if sign < 0:
            v = -v
        if out is None:
            out = v
        else:
            out, v = _unify(out, v)
            out = out + v
    return out


def _eval_call(node, cap):
    name, args, pos = node[1], node[2], node[3]
    first = _eval_series(args[0], cap)
    if name == "invert":
        return first.invert()
    if name == "revert":
        return first.revert()
    if name == "exp":
        return first.exp()
    if name == "log":
        return first.log()
    if name == "alternate":
        return first.alternate()
    if name == "residue":
        return TruncatedSeries(first.algebra, {0: first.residue()}, cap)
    if name == "shift":
        offset = _eval_series(args[1], cap)
        k = offset.coeffs.get(0, Fraction(0))
        if (offset.algebra is not Fraction or set(offset.coeffs) - {0}
                or k.denominator != 1):
            raise ExpressionError("shift offset must be an integer", pos)
        return first.shift(int(k))
    inner = _eval_series(args[1], cap)
    return compose_series(first, inner)


def parse_series(text, cap):
    """Parse and evaluate a series expression, truncated at degree ``cap``."""
    node = _Parser(text, series_mode=True).parse()
    return _eval_series(node, cap)
