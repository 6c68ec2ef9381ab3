"""Flow enumeration, weights, brackets and tensor expansions."""

import itertools

import pytest

from sl3web.checks import classical_sign_strings, survey
from sl3web.flows import (
    COLORS,
    ClosedWeb,
    boundary_state,
    bracket,
    canonical_flow,
    closed_flows,
    closed_weight,
    divided_power_identity_holds,
    enumerate_flows,
    flow_to_colstrict,
    tensor_expansion,
    weight,
)
from sl3web.laurent import LaurentPoly, qint
from sl3web.ladderweb import LTWord, build_web, enumerate_basis, web_from_tableau

ARC = web_from_tableau(((1, 2, 2),))
Y = web_from_tableau(((1, 2, 3),))
HALF_THETA = web_from_tableau(((1, 1, 2), (2, 3, 3)))


def test_transition_exponent_matches_divided_power_action():
    for left_size in range(4):
        for left in itertools.combinations(COLORS, left_size):
            for right_size in range(4):
                for right in itertools.combinations(COLORS, right_size):
                    l, r = frozenset(left), frozenset(right)
                    movable = sorted(l - r)
                    for k in range(1, len(movable) + 1):
                        for moved in itertools.combinations(movable, k):
                            assert divided_power_identity_holds(l, r, frozenset(moved))


# -- enumeration ----------------------------------------------------------------


def test_circle_has_three_flows():
    assert len(closed_flows(ClosedWeb(ARC, ARC))) == 3


def test_theta_has_six_flows():
    assert len(closed_flows(ClosedWeb(Y, Y))) == 6


def test_empty_web_has_single_flow():
    web = build_web(LTWord(), 3, 1)
    assert len(enumerate_flows(web)) == 1


def test_flow_layers_conserve_colors():
    for flow in enumerate_flows(HALF_THETA):
        for layer, weights in zip(flow.subsets(), HALF_THETA.layers):
            assert [len(s) for s in layer] == list(weights)
            for c in COLORS:
                assert sum(1 for s in layer if c in s) == HALF_THETA.ell


# -- boundary states -------------------------------------------------------------


def test_half_theta_state_example():
    flow = next(
        f
        for f in enumerate_flows(HALF_THETA)
        if flow_to_colstrict(HALF_THETA, f) == ((1, 1, 2), (3, 2, 3))
    )
    assert boundary_state(HALF_THETA, flow) == (1, -1, 0)


def test_hexagon_zero_state_reads_as_the_shared_tableau():
    # all-zero boundary states on the hexagon read off the unique tableau
    hexweb = web_from_tableau(((1, 2, 4), (2, 3, 5), (4, 6, 6)))
    zero_flows = [
        f
        for f in enumerate_flows(hexweb)
        if boundary_state(hexweb, f) == (0, 0, 0, 0, 0, 0)
    ]
    assert zero_flows
    for f in zero_flows:
        assert flow_to_colstrict(hexweb, f) == ((2, 1, 2), (4, 3, 4), (6, 5, 6))


def test_hexagon_canonical_flow_reads_semistandard():
    hexweb = web_from_tableau(((1, 2, 4), (2, 3, 5), (4, 6, 6)))
    flow = canonical_flow(hexweb)
    assert flow_to_colstrict(hexweb, flow) == ((1, 2, 4), (2, 3, 5), (4, 6, 6))
    assert boundary_state(hexweb, flow) == (1, 1, 0, 0, -1, -1)


def test_closed_word_has_empty_state():
    web = build_web(LTWord.parse("F1 F1 F1"), 2, 1)
    assert web.boundary == "ox"
    for f in enumerate_flows(web):
        assert boundary_state(web, f) == ()


# -- weights ------------------------------------------------------------------------


def test_theta_weight_multiset():
    theta = ClosedWeb(Y, Y)
    ws = sorted(closed_weight(theta, cf) for cf in closed_flows(theta))
    assert ws == [-3, -1, -1, 1, 1, 3]


def test_circle_weight_multiset():
    circle = ClosedWeb(ARC, ARC)
    ws = sorted(closed_weight(circle, cf) for cf in closed_flows(circle))
    assert ws == [-2, 0, 2]


def test_empty_flow_weight_zero():
    web = build_web(LTWord(), 3, 1)
    (flow,) = enumerate_flows(web)
    assert weight(web, flow) == 0


# -- colstrict reading and canonical flows ----------------------------------------------


def test_hexagon_canonical_reading():
    hexweb = web_from_tableau(((1, 2, 4), (2, 3, 5), (4, 6, 6)))
    flow = next(
        f
        for f in enumerate_flows(hexweb)
        if flow_to_colstrict(hexweb, f) == ((2, 1, 2), (4, 3, 4), (6, 5, 6))
    )
    assert boundary_state(hexweb, flow) == (0, 0, 0, 0, 0, 0)


def test_arc_flows_give_all_one_row_readings():
    readings = {flow_to_colstrict(ARC, f) for f in enumerate_flows(ARC)}
    assert readings == {((1, 2, 2),), ((2, 1, 2),), ((2, 2, 1),)}


def test_canonical_flow_is_semistandard_reading():
    flow = canonical_flow(ARC)
    assert flow_to_colstrict(ARC, flow) == ((1, 2, 2),)
    assert weight(ARC, flow) == 0


def test_canonical_flow_exists_uniquely_small_webs():
    for signs in classical_sign_strings(5):
        for rows, web in enumerate_basis(signs):
            flow = canonical_flow(web, rows)
            assert flow_to_colstrict(web, flow) == rows


def test_theta_canonical_restricts_to_halves():
    theta = ClosedWeb(Y, Y)
    best = max(closed_flows(theta), key=lambda cf: closed_weight(theta, cf))
    canonical = canonical_flow(Y)
    assert best.bottom.moves == canonical.moves
    assert best.top.moves == canonical.moves


# -- brackets -----------------------------------------------------------------------


def test_circle_bracket_is_quantum_three():
    assert bracket(ClosedWeb(ARC, ARC)) == qint(3)


def test_theta_bracket():
    assert bracket(ClosedWeb(Y, Y)) == qint(2) * qint(3)
    assert str(bracket(ClosedWeb(Y, Y))) == "q^3 + 2*q + 2*q^-1 + q^-3"


def test_single_word_theta_bracket_agrees():
    web = build_web(LTWord.parse("F1 F1 F1"), 2, 1)
    assert bracket(web) == qint(2) * qint(3)


def test_nested_circles_bracket_is_square():
    nested = web_from_tableau(((1, 2, 3), (2, 4, 4)))
    assert bracket(ClosedWeb(nested, nested)) == qint(3) * qint(3)


def test_bracket_rejects_open_web():
    with pytest.raises(ValueError):
        bracket(ARC)


def test_bracket_symmetry_and_flow_count():
    for signs in classical_sign_strings(4):
        webs = [web for _, web in enumerate_basis(signs)]
        for u, v in itertools.product(webs, repeat=2):
            closed = ClosedWeb(u, v)
            br = bracket(closed)
            assert br == br.bar()
            assert br(1) == len(closed_flows(closed))


# -- tensor expansion ------------------------------------------------------------------


def test_arc_expansion_unitriangular():
    expansion = tensor_expansion(ARC)
    leading = boundary_state(ARC, canonical_flow(ARC))
    assert expansion[leading] == LaurentPoly({0: 1})
    for j, coeff in expansion.items():
        assert j <= leading
        # signs fold into powers of v = -1/q: coefficient of q^e carries (-1)^e
        for e, c in coeff.items():
            assert c * (-1) ** (e % 2) > 0


def test_hexagon_expansion_contains_weight_minus_four_flow():
    hexweb = web_from_tableau(((1, 2, 4), (2, 3, 5), (4, 6, 6)))
    weights = {
        weight(hexweb, f)
        for f in enumerate_flows(hexweb)
        if boundary_state(hexweb, f) == (0, 0, 0, 0, 0, 0)
    }
    assert -4 in weights
    coeff = tensor_expansion(hexweb)[(0, 0, 0, 0, 0, 0)]
    assert coeff.coefficient(4) >= 1


def test_closed_word_expansion_single_entry():
    web = build_web(LTWord.parse("F1 F1 F1"), 2, 1)
    expansion = tensor_expansion(web)
    assert list(expansion) == [()]
    assert expansion[()](1) == sum(
        (-1) ** weight(web, f) for f in enumerate_flows(web)
    )


def test_unitriangularity_exhaustive_small():
    for signs in classical_sign_strings(5):
        for entry in survey(signs):
            expansion = tensor_expansion(entry.web)
            leading = boundary_state(entry.web, canonical_flow(entry.web, entry.tableau))
            assert expansion[leading] == LaurentPoly({0: 1})
            assert all(j <= leading for j in expansion)
