"""Expression parsing and the canonical JSON layer."""

import json
from fractions import Fraction

import pytest

from hopftower.diffeo import t
from hopftower.errors import (AlgebraMismatchError, DomainError,
                              ExpressionError)
from hopftower.expr import parse_element, parse_series
from hopftower.jsonio import document_for, dumps, from_document, loads
from hopftower.linear import Tensor
from hopftower.nsym import NSymElement, z
from hopftower.qsym import M
from hopftower.series import TruncatedSeries
from hopftower.sym import SymElement, coproduct, e, h, m, p
from hopftower.topology import BElement, BetaPolynomial, b, beta_series


# -- element expressions ----------------------------------------------------

def test_parse_simple_elements():
    assert parse_element("e[2,1]") == (e(2, 1), "sym")
    assert parse_element("Z[1,2]") == (z(1, 2), "nsym")
    assert parse_element("M[3]") == (M(3), "qsym")
    assert parse_element("t[2]") == (t(2), "fdb")
    assert parse_element("b[1,1]") == (b(1, 1), "bpoly")
    assert parse_element("7") == (Fraction(7), "scalar")
    assert parse_element("3/4") == (Fraction(3, 4), "scalar")


def test_parse_arithmetic_and_precedence():
    value, fam = parse_element("2*e[1]^2 - e[2]*3 + 1/2*e[1,1]")
    assert fam == "sym"
    assert value == e(1, 1).scale(Fraction(5, 2)) - e(2).scale(3)
    assert parse_element("(e[1] + e[2])^2")[0] == \
        (e(1) + e(2)) * (e(1) + e(2))


def test_leading_sign_round_trips_antipode_output():
    text = "-e[1,1,1] + 2*e[2,1] - e[3]"
    value, _ = parse_element(text)
    assert str(value) == text
    assert parse_element("-3")[0] == Fraction(-3)


def test_every_family_round_trips_through_str():
    probes = [e(2, 1) - h(1).scale(0), h(2) + h(1, 1).scale(-2),
              p(3).scale(Fraction(1, 3)), m(2, 1) + m(1, 1, 1),
              z(1, 2) - z(2, 1), M(1, 2).scale(5), t(2, 2),
              b(3, 1) - b(2).scale(Fraction(7, 2))]
    for x in probes:
        got, _ = parse_element(str(x))
        assert got == x


def test_family_mixing_is_rejected_with_position():
    with pytest.raises(ExpressionError) as exc:
        parse_element("e[1] + Z[1]")
    assert exc.value.column == 8
    with pytest.raises(ExpressionError):
        parse_element("e[1]*h[1]*M[1]")


def test_algebra_pin():
    value, fam = parse_element("2", algebra="qsym")
    assert (value, fam) == (Fraction(2), "qsym")
    with pytest.raises(ExpressionError):
        parse_element("e[1]", algebra="qsym")


def test_syntax_errors_carry_columns():
    with pytest.raises(ExpressionError) as exc:
        parse_element("M[1,2")
    assert exc.value.column == 5  # clamped to the last character
    with pytest.raises(ExpressionError) as exc:
        parse_element("e[0]")
    assert exc.value.column == 3
    with pytest.raises(ExpressionError):
        parse_element("1/0")
    with pytest.raises(ExpressionError):
        parse_element("e[1] e[2]")
    with pytest.raises(ExpressionError):
        parse_element("q[1]")
    with pytest.raises(ExpressionError):
        parse_element("T")  # series variable outside series mode
    with pytest.raises(ExpressionError):
        parse_element("e[1]^-2")


# -- series expressions -----------------------------------------------------

def test_series_basics():
    f = parse_series("1 + T^2", 4)
    assert f.coeffs == {0: 1, 2: 1}
    g = parse_series("(1+T)*(1-T)", 4)
    assert g.coeffs == {0: 1, 2: -1}


def test_named_generating_series():
    assert parse_series("Z(T)", 3).coefficient(2) == z(1)
    assert parse_series("e(T)", 3).coefficient(2) == e(2)
    # composition with a scalar inner series promotes it
    f = parse_series("t(2*T)", 3)
    assert f.coefficient(1) == type(t(1)).one().scale(2)


def test_series_functions():
    assert parse_series("invert(1-T)", 3).coeffs == {0: 1, 1: 1, 2: 1, 3: 1}
    assert parse_series("revert(t(T))", 3).coefficient(3) \
        == t(1, 1).scale(2) - t(2)
    assert parse_series("exp(log(1+e[1]*T))", 4) == parse_series("1+e[1]*T", 4)
    assert parse_series("residue(shift(Z(T),-3))", 3).coefficient(0) == z(1)
    assert parse_series("alternate(1+T)", 3).coeffs == {0: 1, 1: -1}
    assert parse_series("compose(T+T^2, T+T^2)", 4).coeffs \
        == {1: 1, 2: 2, 3: 2, 4: 1}


def test_beta_atom():
    f = parse_series("exp(beta*T)", 2)
    assert f.algebra is BetaPolynomial
    assert f.coefficient(1) == BetaPolynomial({1: BElement.one()})
    assert f.coefficient(2) == BetaPolynomial(
        {2: BElement({(): Fraction(1, 2)})})
    # distinct from the full deformation series, whose T^2 term also
    # carries -b[1]*beta
    assert f != beta_series(2)


def test_series_error_paths():
    with pytest.raises(ExpressionError):
        parse_series("shift(Z(T), T)", 3)
    with pytest.raises(ExpressionError):
        parse_series("shift(Z(T), 1/2)", 3)
    with pytest.raises(ExpressionError):
        parse_series("frob(T)", 3)
    with pytest.raises(ExpressionError):
        parse_series("compose(T)", 3)
    with pytest.raises(AlgebraMismatchError):
        parse_series("e[1]*T + Z[1]*T", 3)
    with pytest.raises(ExpressionError):
        parse_series("M(T)", 3)  # no named series for the M letter


# -- canonical JSON ---------------------------------------------------------

def test_element_document_bytes_are_pinned():
    doc = dumps(document_for(e(1) * e(1) - e(2)))
    assert doc == ('{"algebra":"sym","basis":"e","terms":'
                   '[{"index":[1,1],"coeff":"1"},{"index":[2],"coeff":"-1"}]}')


def test_tensor_document_bytes_are_pinned():
    doc = dumps(document_for(coproduct(e(2))))
    assert doc == ('{"algebra":"tensor","factors":["sym","sym"],"terms":'
                   '[{"left":[],"right":[2],"coeff":"1"},'
                   '{"left":[1],"right":[1],"coeff":"1"},'
                   '{"left":[2],"right":[],"coeff":"1"}]}')


def test_documents_round_trip_each_kind():
    values = [
        e(2, 1) - e(3).scale(Fraction(1, 2)),
        SymElement({(2,): Fraction(1)}, "m"),
        z(1, 2) + z(3),
        M(1, 1).scale(-4),
        t(2, 1),
        b(1) + b(2, 2),
        BetaPolynomial({0: b(1), 2: BElement.one()}),
        Fraction(-7, 3),
        coproduct(e(2)),
        Tensor.of(z(1), z(2)) - Tensor.of(z(2), z(1)),
    ]
    for x in values:
        assert from_document(json.loads(dumps(document_for(x)))) == x


def test_sym_documents_keep_the_basis():
    x = SymElement({(2, 1): Fraction(3)}, "m")
    back = loads(dumps(document_for(x)))
    assert back == x and back.basis == "m"


def test_series_documents_round_trip():
    probes = [
        parse_series("Z(T)", 4),
        parse_series("invert(e(-T))", 3),
        parse_series("exp(beta*T)", 3),
        TruncatedSeries(Fraction, {0: Fraction(1, 2), 3: Fraction(-2)}, 5),
    ]
    from hopftower.topology import fgl
    probes.append(fgl(3))
    for s in probes:
        back = loads(dumps(document_for(s)))
        assert back == s
        assert back.cap == s.cap and back.nvars == s.nvars


def test_scalar_zero_document():
    assert dumps(document_for(Fraction(0))) == '{"algebra":"scalar","terms":[]}'
    assert from_document({"algebra": "scalar", "terms": []}) == 0


def test_unknown_algebra_tag_is_rejected():
    with pytest.raises(DomainError):
        from_document({"algebra": "octonion", "terms": []})


def test_byte_stability_under_reserialization():
    x = coproduct(e(2, 1))
    one = dumps(document_for(x))
    two = dumps(document_for(from_document(json.loads(one))))
    assert one == two
