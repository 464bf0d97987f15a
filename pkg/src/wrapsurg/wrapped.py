"""Wrapped Montesinos knots in a solid torus.

A wrapped knot places a Montesinos tangle horizontally in a solid torus and
joins the top endpoints to the bottom ones by two arcs running around the
torus.  The arcs cross each other `a` times with a in {0, 1}; only closures
with a single component are knots.  Re-embedding the solid torus with n full
right-hand twists turns the knot into the Montesinos knot with the extra
entry 1/(a + 2n), and transports a slope r to r + n * wind(K)^2.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import tracing
from .slopes import ParseError, Slope, make_slope
from .tangles import (
    MontesinosTangle,
    NormalForm,
    Pairing,
    mirror_tangle,
    montesinos_pairing,
    normalize,
    parse_tangle,
    reverse_tangle,
)


class NotAKnotError(ValueError):
    """The requested closure has more than one component."""


class NotLengthOneError(ValueError):
    """The operation needs a tangle with a single rational entry."""


class NoPretzelSurfaceError(ValueError):
    """The knot has no evident pretzel spanning surface."""


@dataclass(frozen=True)
class WrappedKnot:
    a: int
    tangle: MontesinosTangle

    def __post_init__(self) -> None:
        if self.a not in (0, 1):
            raise ValueError("the wrap parameter a must be 0 or 1")

    def normal_form(self) -> NormalForm:
        return normalize(self.tangle)

    def __str__(self) -> str:
        return f"K{self.a}{self.tangle}"


def make_wrapped(a: int, tangle: MontesinosTangle) -> WrappedKnot:
    """Close the tangle with two wrap arcs; reject multi-component closures."""
    knot = WrappedKnot(a, tangle)
    diagram = _closure_diagram(knot)
    if tracing.closure_component_count(diagram) != 1:
        raise NotAKnotError(
            f"K{a}{tangle} closes to a link, not a knot"
        )
    return knot


def _closure_diagram(knot: WrappedKnot) -> tracing.Diagram:
    diagram = tracing.Diagram()
    boxes = [
        tracing.build_rational_tangle(diagram, e.slope) for e in knot.tangle.entries
    ]
    box = tracing.glue_horizontally(diagram, boxes)
    tracing.close_wrapped(diagram, box, knot.a)
    return diagram


def winding_number(knot: WrappedKnot) -> int:
    """Algebraic intersection with a meridian disk, from oriented tracing."""
    diagram = _closure_diagram(knot)
    walks = diagram.closed_walk()
    if len(walks) != 1:
        raise NotAKnotError("winding number is defined for knots only")
    wind = tracing.winding_from_walk(walks[0])
    expected = 0 if montesinos_pairing(knot.tangle) == Pairing.TOP_TO_TOP else 2
    assert wind == expected, "traced winding disagrees with the pairing"
    return wind


def wrapping_number(knot: WrappedKnot) -> int:
    """Minimal geometric intersection with a meridian disk.

    2 for every knot in the classified family except the degenerate ones
    whose winding number vanishes; those are isotopic into a ball.
    """
    if normalize(knot.tangle).degenerate and winding_number(knot) == 0:
        return 0
    return 2


@dataclass(frozen=True)
class TwistedImage:
    """Image of the knot after n full twists of the solid torus in S^3.

    For a + 2n != 0 the image is the Montesinos knot whose entries extend the
    tangle by 1/(a + 2n).  For a + 2n = 0 the wrap arcs close the tangle
    directly; `closure_fraction` then carries the two-bridge fraction of the
    collapsed closure when the tangle has a single entry.
    """

    entries: tuple[Slope, ...]
    n: int
    degenerate: bool
    closure_fraction: Slope | None = None

    def __str__(self) -> str:
        inner = ",".join(str(s) for s in self.entries)
        if self.degenerate:
            return f"closure[{inner}]"
        return f"M[{inner}]"


def twist(knot: WrappedKnot, n: int) -> TwistedImage:
    c = knot.a + 2 * n
    slopes = knot.tangle.slopes()
    if c == 0:
        fraction = None
        if len(slopes) == 1:
            fraction = slopes[0].reciprocal()
        return TwistedImage(slopes, n, degenerate=True, closure_fraction=fraction)
    return TwistedImage(slopes + (make_slope(1, c),), n, degenerate=False)


def transport_slope(knot: WrappedKnot, r: Slope, n: int) -> Slope:
    """Slope correspondence under n twists: r + n * wind^2; meridian is fixed."""
    if r.is_meridian():
        return r
    wind = winding_number(knot)
    return r + n * wind * wind


def two_bridge_fraction(knot: WrappedKnot, n: int) -> Slope:
    """Two-bridge fraction 1/((a + 2n) + q/p) of the n-twisted image.

    Stated for a = 0; the a = 1 value extends the same formula and should be
    read as a convention rather than an established identity.
    """
    if len(knot.tangle.entries) != 1:
        raise NotLengthOneError("two-bridge fractions need a single entry")
    t = knot.tangle.entries[0].slope
    c = knot.a + 2 * n
    return make_slope(t.p, c * t.p + t.q)


def pretzel_slope(knot: WrappedKnot) -> Slope:
    """Boundary slope of the evident pretzel spanning surface.

    Computed as the linking number of the knot with its push-off along the
    surface, by a signed crossing count over the literal twist-region
    diagram.  Defined for K^a(1/q1, 1/q2) with |q_i| >= 2 and for K^a(m)
    with m an integer.
    """
    slopes = knot.tangle.slopes()
    diagram = tracing.Diagram()
    if len(slopes) == 2 and all(abs(s.p) == 1 and s.q >= 2 for s in slopes):
        columns = [s.q if s.p > 0 else -s.q for s in slopes]
        boxes = [
            tracing.build_single_region_tangle(diagram, tracing.VERTICAL, q)
            for q in columns
        ]
    elif len(slopes) == 1 and slopes[0].is_integral():
        boxes = [
            tracing.build_single_region_tangle(
                diagram, tracing.HORIZONTAL, slopes[0].p
            )
        ]
    else:
        raise NoPretzelSurfaceError(
            f"{knot} is not of pretzel shape K^a(1/q1,1/q2) or K^a(m)"
        )
    box = tracing.glue_horizontally(diagram, boxes)
    tracing.close_wrapped(diagram, box, knot.a)
    walks = diagram.closed_walk()
    if len(walks) != 1:
        raise NotAKnotError("pretzel slope is defined for knots only")
    return make_slope(tracing.surface_framing_from_walk(walks[0]), 1)


def mirror_knot(knot: WrappedKnot) -> WrappedKnot:
    return make_wrapped(knot.a, mirror_tangle(knot.tangle))


def reverse_knot(knot: WrappedKnot) -> WrappedKnot:
    return make_wrapped(knot.a, reverse_tangle(knot.tangle))


def parse_knot(text: str, offset: int = 0) -> WrappedKnot:
    """Parse `K0[...]` / `K1[...]` in the tangle syntax."""
    s = text.strip()
    if not s.startswith(("K0[", "K1[")):
        raise ParseError("knot syntax is K0[...] or K1[...]", offset)
    a = int(s[1])
    tangle = parse_tangle(s[2:], offset + 2)
    return make_wrapped(a, tangle)
