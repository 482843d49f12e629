"""Symmetric functions: conversions, products, structure maps, pairing.

The conversion tables in weight <= 4 are frozen from the classical
identities (Newton relations and their inverses), worked out by hand, so
they check the transition-matrix machinery against an independent source.
"""

from fractions import Fraction

import pytest

from hopftower.errors import DomainError
from hopftower.linear import Tensor
from hopftower.sym import (SymElement, antipode, convert, coproduct, e,
                           e_series, h, h_series, hall_pair, involution, m, p)

# hand-frozen expansions in the e basis
H_IN_E = {
    1: e(1),
    2: e(1, 1) - e(2),
    3: e(1, 1, 1) - e(2, 1).scale(2) + e(3),
    4: (e(1, 1, 1, 1) - e(2, 1, 1).scale(3) + e(2, 2)
        + e(3, 1).scale(2) - e(4)),
}
P_IN_E = {
    1: e(1),
    2: e(1, 1) - e(2).scale(2),
    3: e(1, 1, 1) - e(2, 1).scale(3) + e(3).scale(3),
    4: (e(1, 1, 1, 1) - e(2, 1, 1).scale(4) + e(2, 2).scale(2)
        + e(3, 1).scale(4) - e(4).scale(4)),
}


def test_h_to_e_matches_hand_table():
    for n, want in H_IN_E.items():
        assert convert(h(n), "e") == want


def test_p_to_e_matches_hand_table():
    for n, want in P_IN_E.items():
        assert convert(p(n), "e") == want


def test_m_to_e_pins():
    # m_(1,1) = e_2 and m_(2) = p_2; m_(2,1) = p_1 p_2 - p_3
    assert convert(m(1), "e") == e(1)
    assert convert(m(1, 1), "e") == e(2)
    assert convert(m(2), "e") == P_IN_E[2]
    assert convert(m(2, 1), "e") == e(2, 1) - e(3).scale(3)


def test_conversion_round_trips():
    bases = ("e", "h", "p", "m")
    probes = [e(3), h(2, 1), p(4), m(2, 2), e(1) + m(3), h(2) - p(1, 1)]
    for x in probes:
        for via in bases:
            back = convert(convert(x, via), x.basis)
            assert back == x


def test_integral_flag_rejects_denominators():
    # e_2 = (p_1^2 - p_2)/2 needs a denominator
    with pytest.raises(DomainError):
        convert(e(2), "p", integral=True)
    assert convert(e(2), "h", integral=True) == h(1, 1) - h(2)


def test_monomial_products_are_orbit_sums():
    assert m(1) * m(1) == m(1, 1).scale(2) + m(2)
    assert m(2, 1) * m(1) == m(2, 1, 1).scale(2) + m(2, 2).scale(2) + m(3, 1)
    assert m(2) * m(1, 1) == m(2, 1, 1) + m(3, 1)


def test_monomial_product_cross_check_through_e():
    # multiply in the m basis, then compare against multiplying the images
    pairs = [(m(1), m(1)), (m(2), m(1)), (m(1, 1), m(1)), (m(2), m(2)),
             (m(2, 1), m(1, 1))]
    for a, b in pairs:
        lhs = convert(a * b, "e")
        rhs = convert(a, "e") * convert(b, "e")
        assert lhs == rhs


def test_multiplicative_bases_concatenate():
    assert e(2) * e(1) == e(2, 1)
    assert e(1) * e(2) == e(2, 1)
    assert h(3, 1) * h(2) == h(3, 2, 1)
    assert p(1) * p(1) == p(1, 1)


def test_coproduct_of_elementary_generators():
    got = coproduct(e(2))
    want = Tensor((SymElement, SymElement),
                  {((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})
    assert got == want
    # the coproduct is an algebra map
    lhs = coproduct(e(1) * e(2))
    rhs = coproduct(e(1)) * coproduct(e(2))
    assert lhs == rhs


def test_counit_reads_the_constant_term():
    assert (e(2) + SymElement.one().scale(Fraction(5, 2))).counit() \
        == Fraction(5, 2)
    assert e(1).counit() == 0


def test_antipode_swaps_e_and_h_with_sign():
    for n in range(1, 7):
        assert antipode(e(n)) == convert(h(n), "e").scale((-1) ** n)


def test_antipode_pins():
    assert antipode(e(3)) == -e(1, 1, 1) + e(2, 1).scale(2) - e(3)


def test_generating_series_identity():
    # the alternating-inverse relation between the two generator series
    cap = 6
    assert e_series(cap).alternate().invert() == h_series(cap)


def test_involutions_are_involutive_algebra_maps():
    probes = [e(2), h(2, 1), m(2, 1), p(3)]
    for which in ("dual", "whitney", "omega"):
        for x in probes:
            twice = involution(involution(x, which), which)
            assert convert(twice, x.basis) == x
        a, b = e(2), e(1, 1)
        assert involution(a * b, which) == involution(a, which) * involution(b, which)


def test_involution_pins():
    assert involution(e(3), "dual") == -e(3)
    assert involution(e(2), "whitney") == h(2)
    assert involution(e(2), "omega") == h(2)


def test_hall_pairing_values():
    # h against m is the delta pairing
    assert hall_pair(h(2, 1), m(2, 1)) == 1
    assert hall_pair(h(2), m(1, 1)) == 0
    assert hall_pair(h(1, 1), m(2)) == 0
    # power sums are orthogonal with the classical normalization
    assert hall_pair(p(2), p(2)) == 2
    assert hall_pair(p(1, 1), p(1, 1)) == 2
    assert hall_pair(p(2, 1), p(2, 1)) == 2
    assert hall_pair(p(3), p(3)) == 3
    assert hall_pair(p(2), p(1, 1)) == 0
    assert hall_pair(e(2), m(1, 1)) == 1


def test_hall_pairing_is_multiplicative_against_coproduct():
    # coproduct tensors carry e-basis slots
    a, b, c = h(1), h(2), m(2, 1)
    lhs = hall_pair(a * b, c)
    rhs = sum(hall_pair(a, SymElement({i: 1}, "e"))
              * hall_pair(b, SymElement({j: 1}, "e")) * coeff
              for (i, j), coeff in coproduct(c).terms.items())
    assert lhs == rhs == 1


def test_indices_must_be_positive():
    with pytest.raises(DomainError):
        SymElement({(0, 1): 1}, "e")
    with pytest.raises(DomainError):
        e(-2)
