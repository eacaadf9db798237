"""Closed-form recoupling coefficients vs. explicit diagram evaluation.

Every formula in ``skeinideal.recoupling`` has a diagrammatic definition: a
small trivalent network evaluated in the Temperley-Lieb category after
expanding each colored edge into Jones-Wenzl idempotents.  Here those
networks are built literally out of TL elements and evaluated, so the
quantum-integer closed forms and the diagram calculus check each other.

The trivalent vertex (a, b, c) is realized as the usual triple of projectors
around a crossingless spreading pattern: c strands enter from below,
(a+c-b)/2 of them pass to the a-block, (b+c-a)/2 to the b-block, and
(a+b-c)/2 nested arcs connect the two blocks.
"""

from __future__ import annotations

import pytest

from skeinideal.laurent import LaurentFraction, LaurentPoly, ONE, delta
from skeinideal.recoupling import (
    admissible,
    delta_n,
    lambda_coeff,
    sixj,
    theta,
    tet,
)
from skeinideal.tl import (
    Cap,
    Crossing,
    Matching,
    TLElement,
    compose,
    e_element,
    identity_element,
    jw,
    slice_element,
    tensor,
    trace_close,
    transpose,
)

D = delta()


def spread(a: int, b: int, c: int) -> TLElement:
    """The crossingless pattern under a trivalent vertex: c points below,
    a+b above, with the inner (a+b-c)/2 arcs nested between the blocks."""
    j, k, i = (a + c - b) // 2, (b + c - a) // 2, (a + b - c) // 2
    pairs = []
    for t in range(j):
        pairs.append((t, c + t))
    for s in range(k):
        pairs.append((j + s, c + a + i + s))
    for r in range(i):
        pairs.append((c + j + r, c + a + i - 1 - r))
    return TLElement(c, a + b, {Matching(c, a + b, pairs): ONE})


def vertex(a: int, b: int, c: int) -> TLElement:
    """Trivalent vertex as a map from c strands up into a+b strands."""
    assert admissible(a, b, c)
    return compose(compose(jw(c), spread(a, b, c)), tensor(jw(a), jw(b)))


def nested_caps(n: int) -> TLElement:
    """Hom(0, 2n) bending a bundle of n strands: point i pairs with 2n-1-i."""
    elt = identity_element(0)
    for i in range(n):
        elt = compose(elt, slice_element(Cap(i), 2 * i))
    return elt


def block_swap(a: int, b: int, sign: int) -> TLElement:
    """Braid an a-strand block past a b-strand block (all crossings alike)."""
    elt = identity_element(a + b)
    for j in range(a):
        start = a - 1 - j
        for pos in range(start, start + b):
            elt = compose(elt, slice_element(Crossing(pos, sign), a + b))
    return elt


def triples(limit: int):
    return [
        (a, b, c)
        for a in range(limit + 1)
        for b in range(limit + 1)
        for c in range(limit + 1)
        if admissible(a, b, c)
    ]


# ---------------------------------------------------------------------------
# bubbles and theta networks
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("a,b,c", triples(3))
def test_theta_network(a, b, c):
    v = vertex(a, b, c)
    assert trace_close(compose(v, transpose(v))) == theta(a, b, c)


@pytest.mark.parametrize("a,b,c", triples(2))
def test_bubble_collapses_to_projector(a, b, c):
    bubble = compose(vertex(a, b, c), transpose(vertex(a, b, c)))
    want = jw(c).scaled(theta(a, b, c) / LaurentFraction(delta_n(c)))
    assert bubble == want


def test_mismatched_bubble_vanishes():
    # Hom(0, 2) and Hom(2, 2) channels are orthogonal
    assert compose(vertex(1, 1, 0), transpose(vertex(1, 1, 2))) == TLElement(0, 2)
    assert compose(vertex(2, 1, 1), transpose(vertex(2, 1, 3))) == TLElement(1, 3)


def test_capped_projector_vanishes():
    for n in (2, 3, 4):
        for k in range(n - 1):
            cap = tensor(
                tensor(identity_element(k), slice_element(Cap(0), 0)),
                identity_element(n - 2 - k),
            )
            assert compose(cap, jw(n)) == TLElement(n - 2, n)


# ---------------------------------------------------------------------------
# twist coefficients
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("a,b,c", triples(3))
def test_lambda_coefficient(a, b, c):
    twisted = compose(vertex(a, b, c), block_swap(a, b, -1))
    assert twisted == vertex(b, a, c).scaled(lambda_coeff(a, b, c))


def test_lambda_mirror_untwists():
    for a, b, c in triples(2):
        twisted = compose(vertex(a, b, c), block_swap(a, b, 1))
        assert twisted == vertex(b, a, c).scaled(lambda_coeff(a, b, c).mirror())


# ---------------------------------------------------------------------------
# tetrahedra
# ---------------------------------------------------------------------------
#
# Two constructions of the closed tetrahedral network with vertices
# (a,d,e), (b,c,e), (a,b,f), (c,d,f):
#
# * channel pairing: glue the vertical channel through f (vertices (a,b,f)
#   and (d,c,f)) to the horizontal channel through e (vertices (a,d,e) and
#   (b,c,e)) along all four external legs -- cheap, width stays <= a+b;
# * a literal planar drawing that bends edge e at the bottom and edge d
#   around the side -- expensive but entirely independent routing.


def vertical_channel(a, b, c, d, j) -> TLElement:
    """a,b enter from below, fuse into j, split into d,c above."""
    return compose(transpose(vertex(a, b, j)), vertex(d, c, j))


def horizontal_channel(a, b, c, d, i) -> TLElement:
    """a bends to top-left d and b to top-right c through a horizontal i."""
    left = tensor(vertex(d, i, a), identity_element(b))
    right = tensor(identity_element(d), transpose(vertex(i, b, c)))
    return compose(left, right)


def tet_by_pairing(a, b, e, c, d, f) -> LaurentFraction:
    glued = compose(
        vertical_channel(a, b, c, d, f), transpose(horizontal_channel(a, b, c, d, e))
    )
    value = trace_close(glued)
    return value if isinstance(value, LaurentFraction) else LaurentFraction(value)


def tet_by_drawing(a, b, e, c, d, f) -> LaurentFraction:
    state = nested_caps(e)  # edge e bent at the bottom
    state = compose(state, tensor(vertex(d, a, e), vertex(b, c, e)))
    # now reading left to right: d, a, b, c
    state = compose(
        state,
        tensor(
            tensor(identity_element(d), transpose(vertex(a, b, f))),
            identity_element(c),
        ),
    )
    # now: d, f, c -- fuse f and c back into a d-block and bend it around
    state = compose(
        state, tensor(identity_element(d), transpose(vertex(f, c, d)))
    )
    closed = compose(state, transpose(nested_caps(d)))
    return closed.coeffs.get(Matching(0, 0, []), LaurentFraction(0))


def tet_tuples(limit: int):
    out = []
    for a in range(limit + 1):
        for b in range(limit + 1):
            for e in range(limit + 1):
                for c in range(limit + 1):
                    for d in range(limit + 1):
                        for f in range(limit + 1):
                            if (
                                admissible(a, d, e)
                                and admissible(b, c, e)
                                and admissible(a, b, f)
                                and admissible(c, d, f)
                            ):
                                out.append((a, b, e, c, d, f))
    return out


def test_tet_network_exhaustive():
    for args in tet_tuples(3):
        assert tet_by_pairing(*args) == tet(*args), args


@pytest.mark.parametrize(
    "a,b,e,c,d,f",
    [
        (1, 1, 0, 1, 1, 2),
        (1, 1, 2, 1, 1, 2),
        (2, 1, 1, 2, 1, 1),
        (2, 2, 0, 2, 2, 2),
        (2, 2, 2, 2, 2, 2),
        (3, 1, 2, 1, 3, 2),
        (1, 2, 3, 1, 2, 3),
        (3, 3, 2, 3, 1, 2),
    ],
)
def test_tet_independent_drawing(a, b, e, c, d, f):
    assert tet_by_drawing(a, b, e, c, d, f) == tet(a, b, e, c, d, f)


# ---------------------------------------------------------------------------
# recoupling (change of channel basis)
# ---------------------------------------------------------------------------


def recoupling_tuples(limit: int):
    out = []
    for a in range(limit + 1):
        for b in range(limit + 1):
            for c in range(limit + 1):
                for d in range(limit + 1):
                    for j in range(limit + 1):
                        if admissible(a, b, j) and admissible(c, d, j):
                            out.append((a, b, c, d, j))
    return out


def test_sixj_expands_vertical_into_horizontal_channels():
    for a, b, c, d, j in recoupling_tuples(3):
        expanded = TLElement(a + b, d + c)
        for i in range(a + d + 1):
            if not (admissible(a, d, i) and admissible(b, c, i)):
                continue
            expanded = expanded + horizontal_channel(a, b, c, d, i).scaled(
                sixj(a, b, i, c, d, j)
            )
        assert expanded == vertical_channel(a, b, c, d, j), (a, b, c, d, j)


# ---------------------------------------------------------------------------
# fusion and recoupling
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_fusion_resolves_parallel_projectors(a, b):
    total = TLElement(a + b, a + b)
    for i in range(abs(a - b), a + b + 1, 2):
        v = vertex(a, b, i)
        channel = compose(transpose(v), v)
        total = total + channel.scaled(
            LaurentFraction(delta_n(i)) / theta(a, b, i)
        )
    assert total == tensor(jw(a), jw(b))


def test_recoupling_change_of_basis_on_single_strands():
    # For four single-strand legs the horizontal channels can be written
    # down directly: through color 0 the sides just connect, and through
    # color 2 the network is the 90-degree rotation of the vertical one.
    h = {
        0: identity_element(2),
        2: e_element(2, 0) - identity_element(2).scaled(LaurentFraction(1, D)),
    }
    i_basis = {
        0: compose(transpose(vertex(1, 1, 0)), vertex(1, 1, 0)),
        2: compose(transpose(vertex(1, 1, 2)), vertex(1, 1, 2)),
    }
    for j in (0, 2):
        expanded = TLElement(2, 2)
        for i in (0, 2):
            expanded = expanded + i_basis[i].scaled(sixj(1, 1, i, 1, 1, j))
        assert expanded == h[j]
