"""Braid words and the link diagrams built from them.

A braid on ``n`` strands closes up in several ways that all matter here:

* the plain trace closure (every strand joined top to bottom),
* the partial closure, which joins strands ``2..n`` and leaves strand 1
  open — a 2-string tangle in a solid torus,
* wrap closures, where the open strand laps the other strands ``k`` times
  before closing (front to back or back to front), and
* ring closures, where the closed-off strands are threaded through ``k``
  unknotted circles, with the closing arc passing beside or around them.

Every construction returns a closed :class:`~skeinideal.tl.MorphismWord`,
so a single evaluator computes all the brackets.  Orientation data
(writhe, linking numbers) is recovered afterwards by tracing the diagram,
which is what the Jones normalisation ``A^(-3w)`` needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ParseError
from .laurent import LaurentPoly
from .tl import Cap, Crossing, Cup, MorphismWord, Slice, bracket_reduced

__all__ = [
    "BraidWord",
    "Genus1Presentation",
    "OrientedLinkWord",
    "parse_braid",
    "format_braid",
    "braid_closure",
    "partial_closure",
    "component_count",
    "wrap_word",
    "wrap_closure",
    "ring_closure",
    "orient",
    "linking_number",
    "jones",
]


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_n.

    ``letters`` are nonzero integers: ``k > 0`` is the positive generator
    crossing strands ``k`` and ``k+1`` (1-based), ``k < 0`` its inverse.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise ValueError(f"letter {k} out of range for {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def mirror(self) -> "BraidWord":
        """The mirror braid: every crossing switched."""
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def permutation(self) -> tuple[int, ...]:
        """Map each bottom position (0-based) to the top position its strand reaches."""
        station = list(range(self.strands))
        for k in self.letters:
            p = abs(k) - 1
            station[p], station[p + 1] = station[p + 1], station[p]
        perm = [0] * self.strands
        for pos, strand in enumerate(station):
            perm[strand] = pos
        return tuple(perm)

    def writhe(self) -> int:
        """Signed letter count: the writhe of the trace closure."""
        return sum(1 if k > 0 else -1 for k in self.letters)


def parse_braid(text: str, line: int | None = None) -> BraidWord:
    """Read the ``n: k1,k2,...`` form; the letter list may be empty."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError(f"expected 'n: letters' in {text!r}", line)
    try:
        strands = int(head.strip())
    except ValueError:
        raise ParseError(f"bad strand count {head.strip()!r}", line) from None
    tail = tail.strip()
    letters: list[int] = []
    if tail:
        for piece in tail.split(","):
            try:
                letters.append(int(piece.strip()))
            except ValueError:
                raise ParseError(f"bad braid letter {piece.strip()!r}", line) from None
    try:
        return BraidWord(strands, tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def format_braid(b: BraidWord) -> str:
    return f"{b.strands}: {','.join(str(k) for k in b.letters)}" if b.letters else f"{b.strands}:"


# --------------------------------------------------------------------------
# Closure constructions


def _braid_slices(b: BraidWord) -> list[Slice]:
    return [Crossing(abs(k) - 1, 1 if k > 0 else -1) for k in b.letters]


def braid_closure(b: BraidWord) -> MorphismWord:
    """The trace closure: strand ``i`` rejoined to itself around the back.

    The returned word caps off ``n`` nested arcs, so the braid occupies
    positions ``0..n-1`` and the return arc of strand ``i`` sits at
    position ``2n-1-i`` (strand 1's return is outermost).
    """
    n = b.strands
    slices: list[Slice] = [Cap(i) for i in range(n)]
    slices += _braid_slices(b)
    slices += [Cup(i) for i in range(n - 1, -1, -1)]
    return MorphismWord(tuple(slices))


@dataclass(frozen=True)
class Genus1Presentation:
    """A 2-string tangle in the solid torus, presented as a partially closed braid.

    Strands ``2..n`` are joined top-to-bottom by arcs running around the
    torus; strand 1 stays open.  ``meridian_width`` counts the closure
    arcs, i.e. how many times the closed part punctures a meridional disk.
    """

    braid: BraidWord
    meridian_width: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "meridian_width", self.braid.strands - 1)


def partial_closure(b: BraidWord) -> Genus1Presentation:
    return Genus1Presentation(b)


def component_count(g: Genus1Presentation) -> int:
    """Number of connected pieces: the open strand plus any closed circles.

    Each closure arc joins the top and bottom of the *same* position, so
    the pieces are exactly the cycles of the braid permutation (the cycle
    through position 0 is the open component).
    """
    perm = g.braid.permutation()
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def wrap_word(n: int, sign: int) -> BraidWord:
    """The pure braid carrying strand 1 once around strands ``2..n``.

    Positive sign sends it over on the way out and under on the way back;
    the mirror word reverses both.  On one strand the lap is empty.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = list(range(1, n)) + list(range(n - 1, 0, -1))
    return BraidWord(n, tuple(sign * k for k in out))


def wrap_closure(g: Genus1Presentation, k: int, sign: int) -> MorphismWord:
    """Close the open strand after ``k`` laps around the closed bundle."""
    if k < 0:
        raise ValueError("wrap count must be nonnegative")
    b = g.braid
    lap = wrap_word(b.strands, sign)
    for _ in range(k):
        b = b * lap
    return braid_closure(b)


def _ring_slices(p: int, q: int) -> list[Slice]:
    """One unknotted circle encircling the strands currently at positions p..q.

    The circle is capped just left of the bundle, its two ends are swept
    across (over going out, under coming back), and cupped on the right.
    With ``q < p`` the bundle is empty and the circle is split.
    """
    out: list[Slice] = [Cap(p)]
    out += [Crossing(pos, +1) for pos in range(p + 1, q + 2)]
    out += [Crossing(pos, -1) for pos in range(p, q + 1)]
    out.append(Cup(q + 1))
    return out


_WIND_SIGN = +1
"""Handedness of the closing arc's lap in y-type ring closures.

Only the handedness of the lap *relative* to the ring chirality above is
visible in the pairings of the decorated curves among themselves (the
whole family of values is invariant under the rotation of the solid
torus that reverses both at once); that relative choice is pinned by the
almost-orthogonal pairing values (the yy pairing of the empty decoration
must come out A^-6 times the unknot).  The absolute handedness does
matter for pairings against a chiral tangle, and is fixed so that the
bundled ten-crossing census tangle reproduces its frozen pairing values;
see the genus-1 pairing tests.
"""


def ring_closure(g: Genus1Presentation, k: int, through: bool) -> MorphismWord:
    """Trace closure of ``g`` decorated with ``k`` circles around the bundle.

    The circles encircle the ``n-1`` closure arcs only.  With ``through``
    set, the closing arc of the open strand additionally makes one lap
    around the bundle before closing (the y-type pairing geometry); the
    circles and the lap are parallel and do not link each other.
    """
    if k < 0:
        raise ValueError("ring count must be nonnegative")
    n = g.braid.strands
    slices: list[Slice] = [Cap(i) for i in range(n)]
    slices += _braid_slices(g.braid)
    for _ in range(k):
        slices += _ring_slices(n, 2 * n - 2)
    if through:
        slices += [Crossing(pos, _WIND_SIGN) for pos in range(2 * n - 2, n - 1, -1)]
        slices += [Crossing(pos, _WIND_SIGN) for pos in range(n, 2 * n - 1)]
    slices += [Cup(i) for i in range(n - 1, -1, -1)]
    return MorphismWord(tuple(slices))


# --------------------------------------------------------------------------
# Orientation, writhe, Jones


@dataclass(frozen=True)
class OrientedLinkWord:
    """A closed diagram with a chosen orientation on every component.

    ``orientations[s]`` is +1 or -1 for each strand segment ``s`` in
    creation order (segments are born in pairs at each cap and persist
    through crossings).  ``writhe`` is the signed crossing count under
    these orientations; ``pair_signs`` holds the summed signs of the
    crossings between each pair of distinct components, so linking
    numbers are half these entries.
    """

    word: MorphismWord
    orientations: tuple[int, ...]
    writhe: int
    components: int
    pair_signs: Mapping[tuple[int, int], int] = field(compare=False)


def orient(w: MorphismWord) -> OrientedLinkWord:
    """Trace the components of a closed word and orient each one.

    Each component is traversed once, starting upward along its
    lowest-numbered segment; crossings keep a strand's direction while
    caps and cups reverse it.
    """
    if not w.closed:
        raise NotClosed("orientation tracing needs a closed diagram")

    cur: list[int] = []
    start_join: dict[int, int] = {}
    end_join: dict[int, int] = {}
    crossings: list[tuple[int, int, int]] = []
    nxt = 0
    for s in w.slices:
        if isinstance(s, Cap):
            a, b = nxt, nxt + 1
            nxt += 2
            cur[s.pos : s.pos] = [a, b]
            start_join[a] = b
            start_join[b] = a
        elif isinstance(s, Cup):
            a, b = cur[s.pos], cur[s.pos + 1]
            del cur[s.pos : s.pos + 2]
            end_join[a] = b
            end_join[b] = a
        else:
            crossings.append((s.sign, cur[s.pos], cur[s.pos + 1]))
            cur[s.pos], cur[s.pos + 1] = cur[s.pos + 1], cur[s.pos]

    direction = [0] * nxt
    comp = [-1] * nxt
    components = 0
    for seed in range(nxt):
        if direction[seed]:
            continue
        seg, at_start = seed, True
        while not direction[seg]:
            direction[seg] = 1 if at_start else -1
            comp[seg] = components
            # leave through the other end, then step across the join there
            if at_start:
                seg = end_join[seg]
            else:
                seg = start_join[seg]
            at_start = not at_start
        components += 1

    writhe = 0
    pair_signs: dict[tuple[int, int], int] = {}
    for sgn, left, right in crossings:
        oriented = sgn * direction[left] * direction[right]
        writhe += oriented
        ca, cb = comp[left], comp[right]
        if ca != cb:
            key = (min(ca, cb), max(ca, cb))
            pair_signs[key] = pair_signs.get(key, 0) + oriented
    return OrientedLinkWord(w, tuple(direction), writhe, components, pair_signs)


def linking_number(oriented: OrientedLinkWord, i: int, j: int) -> int:
    """Linking number of components ``i`` and ``j`` (half the summed signs)."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    total = oriented.pair_signs.get((min(i, j), max(i, j)), 0)
    if total % 2:
        raise AssertionError("odd inter-component crossing sum; tracing bug")
    return total // 2


def jones(oriented: OrientedLinkWord) -> LaurentPoly:
    """Jones polynomial in the bracket variable: (-A)^(-3w) times the reduced bracket.

    The sign in the base matters: a Reidemeister-I kink scales the bracket
    by -A^(+-3), so only the signed normalisation is a link invariant.
    Consumers wanting the classical variable substitute t = A^-4.
    """
    w = oriented.writhe
    return bracket_reduced(oriented.word) * LaurentPoly.monomial((-1) ** (w % 2), -3 * w)
