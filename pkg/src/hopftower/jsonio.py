"""Canonical JSON documents for elements, tensors and truncated series.

Every document is a plain dict built in a fixed key order and rendered with
compact separators, so identical values always produce identical bytes.
Coefficients are decimal strings like ``"3"`` or ``"-5/2"`` to keep the
documents exact.  Term lists are sorted by (weight, index) ascending, the
same canonical order used for pretty printing.

Shapes:

* element: ``{"algebra":"sym","basis":"e","terms":[{"index":[1,1],"coeff":"1"}]}``
  (``basis`` only for symmetric functions, ``structure`` only for the
  noncommutative algebra where two coalgebras coexist)
* tensor: ``{"algebra":"tensor","factors":["nsym","nsym"],`` ... with terms
  keyed ``left``/``right`` for two slots and ``slots`` for more
* series: ``{"algebra":...,"cap":6,"vars":1,"series":[{"power":1,...}]}``
  where each entry carries the coefficient body of its algebra
* beta polynomials: coefficient bodies ``{"beta":[{"power":1,"terms":[...]}]}``

``from_document`` inverts all of the above exactly.
"""

import json
from fractions import Fraction

from .diffeo import FdBElement
from .errors import DomainError
from .indices import index_sort_key
from .linear import Tensor, TensorSpace
from .nsym import NSymElement
from .qsym import QSymElement
from .scalars import format_scalar, parse_scalar
from .series import TruncatedSeries
from .sym import SymElement
from .topology import BElement, BetaPolynomial

_TAG_TO_CLASS = {
    "sym": SymElement,
    "nsym": NSymElement,
    "qsym": QSymElement,
    "fdb": FdBElement,
    "bpoly": BElement,
}


def _class_tag(cls):
    for tag, c in _TAG_TO_CLASS.items():
        if c is cls:
            return tag
    if cls is Fraction:
        return "scalar"
    if cls is BetaPolynomial:
        return "bpoly"
    raise DomainError("no JSON tag for %r" % (cls,))


def _term_list(terms):
    out = []
    for idx in sorted(terms, key=index_sort_key):
        out.append({"index": list(idx), "coeff": format_scalar(terms[idx])})
    return out


def _beta_list(poly):
    out = []
    for power in sorted(poly.coeffs):
        out.append({"power": power, "terms": _term_list(poly.coeffs[power].terms)})
    return out


def element_document(x, structure=None):
    """Canonical document for a single element (or plain rational)."""
    if isinstance(x, Fraction):
        terms = [] if not x else [{"index": [], "coeff": format_scalar(x)}]
        return {"algebra": "scalar", "terms": terms}
    if isinstance(x, SymElement):
        return {"algebra": "sym", "basis": x.basis, "terms": _term_list(x.terms)}
    if isinstance(x, NSymElement):
        return {"algebra": "nsym", "structure": structure or "binomial",
                "terms": _term_list(x.terms)}
    if isinstance(x, QSymElement):
        return {"algebra": "qsym", "terms": _term_list(x.terms)}
    if isinstance(x, FdBElement):
        return {"algebra": "fdb", "terms": _term_list(x.terms)}
    if isinstance(x, BElement):
        return {"algebra": "bpoly", "terms": _term_list(x.terms)}
    if isinstance(x, BetaPolynomial):
        return {"algebra": "bpoly", "beta": _beta_list(x)}
    raise DomainError("cannot serialize %r" % type(x).__name__)


def tensor_document(t, structure=None):
    factors = [_class_tag(cls) for cls in t.factors]
    doc = {"algebra": "tensor", "factors": factors}
    if structure is not None and "nsym" in factors:
        doc["structure"] = structure
    terms = []
    for key in sorted(t.terms, key=lambda k: tuple(index_sort_key(i) for i in k)):
        coeff = format_scalar(t.terms[key])
        if len(key) == 2:
            terms.append({"left": list(key[0]), "right": list(key[1]),
                          "coeff": coeff})
        else:
            terms.append({"slots": [list(i) for i in key], "coeff": coeff})
    doc["terms"] = terms
    return doc


def _coeff_body(v):
    if isinstance(v, Fraction):
        return {"coeff": format_scalar(v)}
    if isinstance(v, BetaPolynomial):
        return {"beta": _beta_list(v)}
    if isinstance(v, Tensor):
        doc = tensor_document(v)
        return {"terms": doc["terms"]}
    return {"terms": _term_list(v.terms)}


def series_document(s, structure=None):
    algebra = s.algebra
    if isinstance(algebra, TensorSpace):
        doc = {"algebra": "tensor",
               "factors": [_class_tag(c) for c in algebra.factors]}
    else:
        tag = _class_tag(algebra)
        doc = {"algebra": tag}
        if tag == "sym":
            basis = "e"
            for k in sorted(s.coeffs, key=lambda kk: (s._degree(kk),)):
                basis = s.coeffs[k].basis
                break
            doc["basis"] = basis
        elif tag == "nsym":
            doc["structure"] = structure or "binomial"
    doc["cap"] = s.cap
    doc["vars"] = s.nvars
    entries = []
    if s.nvars == 1:
        for k in sorted(s.coeffs):
            entry = {"power": k}
            entry.update(_coeff_body(s.coeffs[k]))
            entries.append(entry)
    else:
        for k in sorted(s.coeffs, key=lambda kk: (sum(kk), kk)):
            entry = {"powers": list(k)}
            entry.update(_coeff_body(s.coeffs[k]))
            entries.append(entry)
    doc["series"] = entries
    return doc


def document_for(x, structure=None):
    """Serialize any supported value to its canonical document."""
    if isinstance(x, TruncatedSeries):
        return series_document(x, structure)
    if isinstance(x, Tensor):
        return tensor_document(x, structure)
    return element_document(x, structure)


def dumps(doc):
    """Byte-stable compact rendering."""
    return json.dumps(doc, separators=(",", ":"))


def _terms_from(entries):
    out = {}
    for entry in entries:
        out[tuple(entry["index"])] = parse_scalar(entry["coeff"])
    return out


def _beta_from(entries):
    coeffs = {}
    for entry in entries:
        coeffs[int(entry["power"])] = BElement(_terms_from(entry["terms"]))
    return BetaPolynomial(coeffs)


def _element_from(doc):
    tag = doc["algebra"]
    if tag == "scalar":
        total = Fraction(0)
        for entry in doc["terms"]:
            total += parse_scalar(entry["coeff"])
        return total
    if tag == "bpoly" and "beta" in doc:
        return _beta_from(doc["beta"])
    cls = _TAG_TO_CLASS.get(tag)
    if cls is None:
        raise DomainError("unknown algebra tag %r" % (tag,))
    terms = _terms_from(doc["terms"])
    if cls is SymElement:
        return SymElement(terms, basis=doc.get("basis", "e"))
    return cls(terms)


def _tensor_terms_from(entries, arity):
    terms = {}
    for entry in entries:
        if "slots" in entry:
            key = tuple(tuple(i) for i in entry["slots"])
        else:
            key = (tuple(entry["left"]), tuple(entry["right"]))
        if len(key) != arity:
            raise DomainError("tensor term arity mismatch")
        terms[key] = parse_scalar(entry["coeff"])
    return terms


def _tensor_from(doc):
    factors = tuple(_TAG_TO_CLASS[tag] for tag in doc["factors"])
    return Tensor(factors, _tensor_terms_from(doc["terms"], len(factors)))


def _series_from(doc):
    tag = doc["algebra"]
    if tag == "tensor":
        algebra = TensorSpace(*[_TAG_TO_CLASS[t] for t in doc["factors"]])
    elif tag == "scalar":
        algebra = Fraction
    elif tag == "bpoly" and any("beta" in e for e in doc["series"]):
        algebra = BetaPolynomial
    else:
        algebra = _TAG_TO_CLASS.get(tag)
        if algebra is None:
            raise DomainError("unknown algebra tag %r" % (tag,))
    nvars = int(doc.get("vars", 1))
    coeffs = {}
    for entry in doc["series"]:
        key = tuple(entry["powers"]) if nvars == 2 else int(entry["power"])
        if "coeff" in entry:
            coeffs[key] = parse_scalar(entry["coeff"])
        elif "beta" in entry:
            coeffs[key] = _beta_from(entry["beta"])
        elif isinstance(algebra, TensorSpace):
            coeffs[key] = Tensor(algebra.factors,
                                 _tensor_terms_from(entry["terms"],
                                                    len(algebra.factors)))
        elif algebra is SymElement:
            coeffs[key] = SymElement(_terms_from(entry["terms"]),
                                     basis=doc.get("basis", "e"))
        else:
            coeffs[key] = algebra(_terms_from(entry["terms"]))
    return TruncatedSeries(algebra, coeffs, int(doc["cap"]), nvars)


def from_document(doc):
    """Inverse of ``document_for``: rebuild the value a document describes."""
    if "series" in doc:
        return _series_from(doc)
    if doc.get("algebra") == "tensor":
        return _tensor_from(doc)
    return _element_from(doc)


def loads(text):
    return from_document(json.loads(text))
