import random
from fractions import Fraction

import pytest

from conftest import random_knot, random_tangle
from wrapsurg import (
    MERIDIAN,
    NoPretzelSurfaceError,
    NotAKnotError,
    NotLengthOneError,
    Pairing,
    make_slope,
    make_wrapped,
    montesinos_loops,
    montesinos_pairing,
    parse_knot,
    parse_tangle,
    pretzel_slope,
    transport_slope,
    twist,
    two_bridge_fraction,
    winding_number,
    wrapping_number,
)

K = parse_knot
T = parse_tangle


def test_make_wrapped_accepts_the_known_knots():
    assert str(K("K0[2]")) == "K0[2]"
    assert str(K("K1[-1/2,1/3]")) == "K1[-1/2,1/3]"


def test_make_wrapped_rejects_two_component_closures():
    # A left-to-left tangle closes to a link when the wrap arcs are parallel.
    assert montesinos_pairing(T("[-1/2]")) is Pairing.LEFT_TO_LEFT
    with pytest.raises(NotAKnotError):
        make_wrapped(0, T("[-1/2]"))
    make_wrapped(1, T("[-1/2]"))  # the crossed closure is a knot


def test_make_wrapped_rejects_internal_loops():
    for a in (0, 1):
        with pytest.raises(NotAKnotError):
            make_wrapped(a, T("[1/2,1/2]"))


def test_valid_closure_parameter_matches_pairing():
    rng = random.Random(53)
    seen = set()
    for _ in range(200):
        tangle = random_tangle(rng, max_entries=2, bound=12)
        if montesinos_loops(tangle):
            continue
        valid = set()
        for a in (0, 1):
            try:
                make_wrapped(a, tangle)
                valid.add(a)
            except NotAKnotError:
                pass
        kind = montesinos_pairing(tangle)
        expected = {
            Pairing.TOP_TO_TOP: {0, 1},
            Pairing.LEFT_TO_LEFT: {1},
            Pairing.CROSS: {0},
        }[kind]
        assert valid == expected
        seen.add(kind)
    assert seen == set(Pairing)


def test_winding_numbers():
    assert winding_number(K("K0[2]")) == 0
    assert winding_number(K("K1[-1/2,1/3]")) == 2
    assert winding_number(K("K0[1/3]")) == 2  # three vertical half-twists
    rng = random.Random(59)
    for _ in range(100):
        knot = random_knot(rng, max_entries=2, bound=12)
        wind = winding_number(knot)
        assert wind in (0, 2)
        expected = montesinos_pairing(knot.tangle) is Pairing.TOP_TO_TOP
        assert (wind == 0) == expected


def test_wrapping_numbers():
    assert wrapping_number(K("K0[2]")) == 2
    assert wrapping_number(K("K1[-1/2,1/3]")) == 2
    assert wrapping_number(K("K0[0]")) == 0  # contractible degenerate closure
    assert wrapping_number(K("K0[1/3]")) == 2  # degenerate but winding 2


def test_twist_appends_wrap_entry():
    image = twist(K("K1[-1/2,1/3]"), 1)
    assert [str(s) for s in image.entries] == ["-1/2", "1/3", "1/3"]
    assert not image.degenerate
    image = twist(K("K0[7/3]"), 2)
    assert [str(s) for s in image.entries] == ["7/3", "1/4"]


def test_twist_degenerate_closure():
    image = twist(K("K0[2]"), 0)
    assert image.degenerate
    # The collapsed closure is the two-bridge closure of fraction 1/2, whose
    # numerator 1 is the determinant of an unknot.
    assert image.closure_fraction == make_slope(1, 2)


def test_twist_entry_multiset_property():
    rng = random.Random(61)
    for _ in range(100):
        knot = random_knot(rng, max_entries=3, bound=10)
        n = rng.randint(-4, 4)
        c = knot.a + 2 * n
        image = twist(knot, n)
        if c == 0:
            assert image.degenerate
        else:
            assert image.entries == knot.tangle.slopes() + (make_slope(1, c),)


def test_transport_slope():
    knot = K("K1[-1/2,1/3]")
    assert transport_slope(knot, make_slope(7, 1), 3) == make_slope(19, 1)
    assert transport_slope(K("K0[2]"), make_slope(3, 1), 5) == make_slope(3, 1)
    assert transport_slope(knot, MERIDIAN, 4) == MERIDIAN


def test_transport_slope_additive():
    rng = random.Random(67)
    for _ in range(100):
        knot = random_knot(rng, max_entries=2, bound=10)
        r = make_slope(rng.randint(-20, 20), rng.choice([1, 1, 2]))
        n1, n2 = rng.randint(-5, 5), rng.randint(-5, 5)
        stepped = transport_slope(knot, transport_slope(knot, r, n1), n2)
        assert stepped == transport_slope(knot, r, n1 + n2)
        assert transport_slope(knot, r, 0) == r


def test_two_bridge_fraction_values():
    # 1/((a+2n) + q/p) = p/((a+2n)p + q); for the tangle 7/2 the a = 0
    # closure is a two-component link, so the knot carries a = 1.
    knot = K("K1[7/2]")
    assert two_bridge_fraction(knot, 0) == make_slope(7, 9)
    assert two_bridge_fraction(knot, 1) == make_slope(7, 23)
    assert two_bridge_fraction(K("K0[7/3]"), 0) == make_slope(7, 3)
    assert two_bridge_fraction(K("K0[7/3]"), 1) == make_slope(7, 17)
    # The stated instances of the formula itself, checked as arithmetic.
    assert 1 / (2 + Fraction(2, 7)) == Fraction(7, 16)
    assert 1 / (-2 + Fraction(2, 7)) == Fraction(-7, 12)


def test_two_bridge_fraction_needs_single_entry():
    with pytest.raises(NotLengthOneError):
        two_bridge_fraction(K("K1[-1/2,1/3]"), 0)


def test_pretzel_slope_anchors():
    assert pretzel_slope(K("K1[-1/2,1/3]")) == make_slope(8, 1)
    for m in (3, 4, 5, 6, 7):
        assert pretzel_slope(make_wrapped(0, T(f"[{m}]"))) == make_slope(0, 1)
    for m in (4, 6, 8):
        assert pretzel_slope(make_wrapped(1, T(f"[{m}]"))) == make_slope(2 * m, 1)


def test_pretzel_slope_consistent_with_transport():
    knot = K("K1[-1/2,1/3]")
    slope = pretzel_slope(knot)
    assert transport_slope(knot, slope, 3) == make_slope(20, 1)


def test_pretzel_slope_shape_errors():
    with pytest.raises(NoPretzelSurfaceError):
        pretzel_slope(K("K1[-1/2,2/5]"))
    with pytest.raises(NoPretzelSurfaceError):
        pretzel_slope(K("K1[7/2]"))


def test_parse_knot_round_trip():
    for text in ["K0[2]", "K1[-1/2,1/3]", "K0[5/3,-2/3]"]:
        assert str(parse_knot(text)) == text
