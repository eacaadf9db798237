"""Closure constructions, orientation tracing, and Jones normalisation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinideal.diagrams import (
    BraidWord,
    braid_closure,
    component_count,
    format_braid,
    jones,
    linking_number,
    orient,
    parse_braid,
    partial_closure,
    ring_closure,
    wrap_closure,
    wrap_word,
)
from skeinideal.errors import EmptyLink, ParseError
from skeinideal.laurent import LaurentPoly, ONE, delta, parse_laurent
from skeinideal.tl import MorphismWord, eval_word, bracket_reduced

from test_tl import state_sum_bracket

D = delta()


# ---------------------------------------------------------------------------
# braid words and their text form
# ---------------------------------------------------------------------------


def test_braid_validation():
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord(2, (0,))
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(3, (1,)) * BraidWord(2, (1,))


def test_braid_text_roundtrip():
    for text in ["2: 1,1,1", "4: 1,-2,3,-1", "1:", "3:"]:
        b = parse_braid(text)
        assert format_braid(b) == text
        assert parse_braid(format_braid(b)) == b


def test_parse_braid_errors_carry_line():
    with pytest.raises(ParseError):
        parse_braid("no colon here")
    with pytest.raises(ParseError):
        parse_braid("x: 1,2")
    with pytest.raises(ParseError):
        parse_braid("3: 1,zap")
    err = pytest.raises(ParseError, parse_braid, "3: 5", line=7)
    assert err.value.line == 7
    assert "line 7" in str(err.value)


def test_permutation_and_writhe():
    assert BraidWord(3, (1, 2)).permutation() == (2, 0, 1)
    assert BraidWord(2, (1, 1)).permutation() == (0, 1)
    assert BraidWord(4).permutation() == (0, 1, 2, 3)
    assert BraidWord(3, (1, -2, 1, -2)).writhe() == 0
    assert BraidWord(2, (1, 1, 1)).writhe() == 3
    assert BraidWord(3, (1, 2)).mirror().writhe() == -2


# ---------------------------------------------------------------------------
# plain trace closures
# ---------------------------------------------------------------------------


def test_closure_of_trivial_braids():
    assert eval_word(braid_closure(BraidWord(1))) == D
    assert eval_word(braid_closure(BraidWord(2, (1, -1)))) == D * D
    assert eval_word(braid_closure(BraidWord(3))) == D**3


def test_trefoil_closure_matches_state_sum():
    w = braid_closure(BraidWord(2, (1, 1, 1)))
    assert eval_word(w) == state_sum_bracket(w)
    assert bracket_reduced(w) == parse_laurent("1*A^-7 + -1*A^-3 + -1*A^5")


def test_figure_eight_closure():
    w = braid_closure(BraidWord(3, (1, -2, 1, -2)))
    assert bracket_reduced(w) == parse_laurent(
        "1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8"
    )


# ---------------------------------------------------------------------------
# partial closures
# ---------------------------------------------------------------------------


def test_meridian_width_counts_closure_arcs():
    assert partial_closure(BraidWord(4, (1, 2, 3))).meridian_width == 3
    assert partial_closure(BraidWord(2)).meridian_width == 1


def test_component_count_follows_permutation_cycles():
    # identity and sigma_1^2 share the identity permutation: open strand
    # plus one closed circle each
    assert component_count(partial_closure(BraidWord(2))) == 2
    assert component_count(partial_closure(BraidWord(2, (1, 1)))) == 2
    # a full cycle keeps everything on one component
    assert component_count(partial_closure(BraidWord(3, (1, 2)))) == 1
    assert component_count(partial_closure(BraidWord(4, (1, 2, 3)))) == 1


@given(st.integers(2, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_component_count_matches_diagram_tracing(n, data):
    letters = data.draw(
        st.lists(st.integers(-(n - 1), n - 1).filter(bool), max_size=6)
    )
    b = BraidWord(n, tuple(letters))
    traced = orient(braid_closure(b))
    assert traced.components == component_count(partial_closure(b))


# ---------------------------------------------------------------------------
# wrap closures
# ---------------------------------------------------------------------------


def test_wrap_zero_is_plain_closure():
    g = partial_closure(BraidWord(3, (1, -2)))
    assert wrap_closure(g, 0, +1) == braid_closure(g.braid)
    assert wrap_closure(g, 0, -1) == braid_closure(g.braid)


def test_wrap_word_shape():
    assert wrap_word(4, +1).letters == (1, 2, 3, 3, 2, 1)
    assert wrap_word(4, -1).letters == (-1, -2, -3, -3, -2, -1)
    assert wrap_word(1, +1).letters == ()
    assert wrap_word(3, +1).permutation() == (0, 1, 2)


@pytest.mark.parametrize("n", [3, 4])
def test_wrap_linking_calibration(n):
    """The wrapping strand links every other component once, with the wrap's sign."""
    g = partial_closure(BraidWord(n))
    for sign in (+1, -1):
        traced = orient(wrap_closure(g, 1, sign))
        assert traced.components == n
        for j in range(1, n):
            assert linking_number(traced, 0, j) == sign


def test_double_wrap_links_twice():
    g = partial_closure(BraidWord(3))
    traced = orient(wrap_closure(g, 2, +1))
    assert linking_number(traced, 0, 1) == 2


# ---------------------------------------------------------------------------
# ring closures
# ---------------------------------------------------------------------------


def test_ring_zero_is_plain_closure():
    g = partial_closure(BraidWord(4, (1, 2, -3)))
    assert eval_word(ring_closure(g, 0, False)) == eval_word(braid_closure(g.braid))


def test_ring_around_one_circle_is_hopf():
    # identity 2-braid: the single closure arc threads the ring, the open
    # strand closes beside it: a Hopf link plus a split unknot
    hopf = D * parse_laurent("-1*A^4 + -1*A^-4")
    assert eval_word(ring_closure(partial_closure(BraidWord(2)), 1, False)) == hopf * D
    # with nothing to encircle the ring splits off
    assert eval_word(ring_closure(partial_closure(BraidWord(1)), 1, False)) == D * D


def test_rings_multiply_by_eigenvalue_on_single_circle():
    # k rings around one circle: <z, z^k> Hopf chains, spectator unknot aside
    g = partial_closure(BraidWord(2))
    phi1 = parse_laurent("-1*A^4 + -1*A^-4")
    for k in range(3):
        assert eval_word(ring_closure(g, k, False)) == D * D * phi1**k


def test_through_arc_wraps_the_bundle():
    # closing arc of the identity 2-braid laps its single circle: Hopf link
    hopf = D * parse_laurent("-1*A^4 + -1*A^-4")
    assert eval_word(ring_closure(partial_closure(BraidWord(2)), 0, True)) == hopf
    # with an empty bundle the lap retracts
    assert eval_word(ring_closure(partial_closure(BraidWord(1)), 0, True)) == D


def test_through_lap_handedness_frozen():
    """Two laps glued (transposition braid, wound closure) give A^-6 times the unknot.

    This is the almost-orthogonal yy anchor that pins the lap handedness;
    the full pairing grid lives with the genus-1 tests.
    """
    pres = partial_closure(BraidWord(2, (1,)))
    kappa = parse_laurent("-1*A^-3")
    got = kappa * eval_word(ring_closure(pres, 0, True))
    assert got == LaurentPoly.monomial(1, -6) * D


def test_decoration_insertion_height_is_isotopy():
    # sliding ring gadgets below the braid letters does not change the bracket
    b = BraidWord(3, (1, 2, -1))
    n = b.strands
    g = partial_closure(b)
    from skeinideal.diagrams import _braid_slices, _ring_slices
    from skeinideal.tl import Cap, Cup

    early = (
        [Cap(i) for i in range(n)]
        + _ring_slices(n, 2 * n - 2)
        + _braid_slices(b)
        + [Cup(i) for i in range(n - 1, -1, -1)]
    )
    assert eval_word(MorphismWord(tuple(early))) == eval_word(ring_closure(g, 1, False))


# ---------------------------------------------------------------------------
# orientation, writhe, Jones
# ---------------------------------------------------------------------------


@given(st.integers(2, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_closure_writhe_is_letter_sum(n, data):
    letters = data.draw(
        st.lists(st.integers(-(n - 1), n - 1).filter(bool), max_size=6)
    )
    b = BraidWord(n, tuple(letters))
    assert orient(braid_closure(b)).writhe == b.writhe()


def test_hopf_linking_number():
    traced = orient(braid_closure(BraidWord(2, (1, 1))))
    assert traced.components == 2
    assert linking_number(traced, 0, 1) == 1
    mirror = orient(braid_closure(BraidWord(2, (-1, -1))))
    assert linking_number(mirror, 0, 1) == -1


def test_jones_unknot_is_one():
    assert jones(orient(braid_closure(BraidWord(1)))) == ONE
    # Reidemeister I: a kinked unknot has the same Jones polynomial
    assert jones(orient(braid_closure(BraidWord(2, (1,))))) == ONE
    assert jones(orient(braid_closure(BraidWord(2, (-1,))))) == ONE


def test_jones_of_empty_diagram_raises():
    with pytest.raises(EmptyLink):
        jones(orient(MorphismWord(())))


@given(st.integers(2, 3), st.data())
@settings(max_examples=30, deadline=None)
def test_jones_survives_markov_stabilisation(n, data):
    letters = tuple(
        data.draw(st.lists(st.integers(-(n - 1), n - 1).filter(bool), max_size=5))
    )
    b = BraidWord(n, letters)
    value = jones(orient(braid_closure(b)))
    for sign in (n, -n):
        bigger = BraidWord(n + 1, letters + (sign,))
        assert jones(orient(braid_closure(bigger))) == value


@given(st.integers(2, 3), st.data())
@settings(max_examples=30, deadline=None)
def test_jones_survives_conjugation(n, data):
    letters = tuple(
        data.draw(st.lists(st.integers(-(n - 1), n - 1).filter(bool), max_size=5))
    )
    k = data.draw(st.integers(1, n - 1))
    b = BraidWord(n, letters)
    conj = BraidWord(n, (k,) + letters + (-k,))
    assert jones(orient(braid_closure(conj))) == jones(orient(braid_closure(b)))


def test_jones_of_trefoil_distinguishes_mirrors():
    right = jones(orient(braid_closure(BraidWord(2, (1, 1, 1)))))
    left = jones(orient(braid_closure(BraidWord(2, (-1, -1, -1)))))
    assert right == parse_laurent("-1*A^-16 + 1*A^-12 + 1*A^-4")
    assert left == parse_laurent("-1*A^16 + 1*A^12 + 1*A^4")
    assert right != left
