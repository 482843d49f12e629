"""The expression languages and the canonical JSON documents."""

import json

from hopftower import (dumps, document_for, from_document, parse_element,
                       parse_series)
from hopftower.errors import ExpressionError

print("== element expressions ==")
for text in ("e[1]^2 - e[2]", "2*Z[1,2] + Z[2,1]", "M[1]*M[2]",
             "-5*t[1,1,1] + 5*t[2,1] - t[3]", "3/4*b[2]"):
    value, family = parse_element(text)
    print("  %-28s -> %-30s (%s)" % (text, value, family))

print()
print("== errors point at a column ==")
for text in ("M[1,2", "e[1] + Z[1]", "e[0]"):
    try:
        parse_element(text)
    except ExpressionError as exc:
        print("  %-12s %s" % (text, exc))

print()
print("== series expressions ==")
for text in ("invert(1 - e[1]*T)", "revert(t(T))", "exp(beta*T)",
             "residue(shift(Z(T),-3))"):
    print("  %-26s -> %s" % (text, parse_series(text, 3)))

print()
print("== canonical JSON round trips ==")
value, _ = parse_element("e[1]^2 - e[2]")
doc = dumps(document_for(value))
print("document:", doc)
back = from_document(json.loads(doc))
print("round trip equals the original:", back == value)
series = parse_series("Z(T)", 3)
sdoc = dumps(document_for(series))
print("series document:", sdoc)
print("round trip:", from_document(json.loads(sdoc)) == series)
