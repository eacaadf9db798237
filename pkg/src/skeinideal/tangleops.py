"""Ball tangles, their Catalan closures, and the two closure ideals.

A tangle in the 3-ball with 2n boundary points has a bracket ideal generated
by finitely many link brackets: cap the boundary with each of the Catalan(n)
crossingless tangles and reduce.  For four endpoints the two closures are the
classical numerator and denominator, and the ideal of the tangle's partial
closure (a genus-1 tangle in the solid torus) collapses to two generators,

    { <d(T)>',  (1 - A^-4) * <n(T)>' }.

When the partial closure is a single strand, that two-generator ideal equals
the full ball ideal; :func:`check_partial_closure_theorem` tests the equality
on concrete tangles.

Boundary bookkeeping, fixed once here and relied on everywhere below:
endpoints are numbered with the bottom boundary points first, left to right,
then the top points left to right.  Walking the boundary circle instead —
across the bottom, up the right side, back across the top — visits the bottom
points in increasing order and then the top points in decreasing order; the
points of a :class:`CatalanTangle` are glued on in that circular order, which
is what makes a non-crossing matching close the diagram without new crossings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .diagrams import BraidWord
from .errors import MultiComponent, WidthMismatch, WrongArity
from .ideal import ideal_equal
from .laurent import LaurentPoly, ONE
from .tl import Cap, Crossing, Cup, MorphismWord, Slice, bracket_reduced

__all__ = [
    "BallTangle",
    "CatalanTangle",
    "braid_tangle",
    "catalan_tangles",
    "catalan_closure",
    "numerator",
    "denominator",
    "ball_ideal",
    "partial_closure_ideal",
    "check_partial_closure_theorem",
]


def _trace_boundary(body: MorphismWord) -> tuple[tuple[int, ...], int]:
    """Follow every strand of an open word; return (endpoint pairing, loop count).

    Each arc end gets a token; ``other`` maps a token to the token at the far
    end of its arc and is patched as cups merge arcs.  Tokens ``0..start-1``
    are the bottom endpoints themselves, so after the sweep the tokens left
    on the ``at`` stack are the top endpoints in position order.
    """
    fresh = itertools.count(body.start)
    other: dict[int, int] = {}
    at: list[int] = []
    for i in range(body.start):
        t = next(fresh)
        other[i], other[t] = t, i
        at.append(t)
    loops = 0
    for s in body.slices:
        if isinstance(s, Cap):
            u, v = next(fresh), next(fresh)
            other[u], other[v] = v, u
            at[s.pos : s.pos] = [u, v]
        elif isinstance(s, Cup):
            u, v = at[s.pos], at[s.pos + 1]
            del at[s.pos : s.pos + 2]
            if other[u] == v:
                loops += 1
            else:
                a, b = other[u], other[v]
                other[a], other[b] = b, a
        else:
            at[s.pos], at[s.pos + 1] = at[s.pos + 1], at[s.pos]
    label = {i: i for i in range(body.start)}
    for j, t in enumerate(at):
        label[t] = body.start + j
    endpoint_token = list(range(body.start)) + at
    pairing = tuple(label[other[t]] for t in endpoint_token)
    return pairing, loops


@dataclass(frozen=True)
class BallTangle:
    """A tangle in the 3-ball: an open slice word plus its boundary data.

    ``body`` runs bottom to top with ``body.start`` strands entering and
    ``body.end`` leaving; the 2n boundary endpoints are numbered bottom row
    first, then top row, each left to right.  ``pairing`` records which
    endpoint each strand exits at (a fixed-point-free involution), and
    ``closed_loops`` counts split circles carried along inside the body —
    both are traced out of the slices at construction.
    """

    body: MorphismWord
    pairing: tuple[int, ...] = field(init=False)
    closed_loops: int = field(init=False)

    def __post_init__(self) -> None:
        if self.body.start + self.body.end == 0:
            raise ValueError("a closed word is a link, not a ball tangle")
        pairing, loops = _trace_boundary(self.body)
        object.__setattr__(self, "pairing", pairing)
        object.__setattr__(self, "closed_loops", loops)

    @property
    def endpoints(self) -> int:
        return self.body.start + self.body.end


def braid_tangle(b: BraidWord) -> BallTangle:
    """A braid on n strands viewed as a tangle with 2n endpoints."""
    slices = tuple(Crossing(abs(k) - 1, 1 if k > 0 else -1) for k in b.letters)
    return BallTangle(MorphismWord(slices, b.strands))


@dataclass(frozen=True)
class CatalanTangle:
    """A crossingless tangle with no closed components: a non-crossing
    perfect matching of the 2n boundary points 0..2n-1 in circular order.

    For n = 2 there are exactly two: ``((0, 1), (2, 3))`` and
    ``((0, 3), (1, 2))``.  Pairs are stored sorted, each low point first.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((min(p), max(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        points = sorted(q for p in pairs for q in p)
        if points != list(range(2 * len(pairs))):
            raise ValueError(f"not a perfect matching of 0..{2 * len(pairs) - 1}: {pairs}")
        for (a, b), (c, d) in itertools.combinations(pairs, 2):
            if a < c < b < d:
                raise ValueError(f"arcs ({a},{b}) and ({c},{d}) cross")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def mate(self, point: int) -> int:
        for a, b in self.pairs:
            if point == a:
                return b
            if point == b:
                return a
        raise ValueError(f"point {point} not matched")


def _enumerate_matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    # the first point pairs at an odd offset; the arc splits the rest in two
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for left in _enumerate_matchings(points[1:k]):
            for right in _enumerate_matchings(points[k + 1 :]):
                yield ((first, points[k]),) + left + right


@lru_cache(maxsize=None)
def _catalan_tangles(n: int) -> tuple[CatalanTangle, ...]:
    return tuple(CatalanTangle(m) for m in _enumerate_matchings(tuple(range(2 * n))))


def catalan_tangles(n: int) -> list[CatalanTangle]:
    """All non-crossing perfect matchings of 2n points: Catalan(n) of them.

    Ordered by the partner of point 0, then recursively inside each arc.
    """
    if n < 1:
        raise ValueError(f"need at least one strand pair, got n = {n}")
    return list(_catalan_tangles(n))


def _closing_cups(width: int, pairs: Iterable[tuple[int, int]]) -> list[Cup]:
    """Cups realizing a non-crossing matching of ``width`` live positions,
    innermost arcs first."""
    mate: dict[int, int] = {}
    for a, b in pairs:
        mate[a], mate[b] = b, a
    live = list(range(width))
    cups: list[Cup] = []
    while live:
        for idx in range(len(live) - 1):
            if mate[live[idx]] == live[idx + 1]:
                cups.append(Cup(idx))
                del live[idx : idx + 2]
                break
        else:  # pragma: no cover - CatalanTangle validation rules this out
            raise ValueError("matching arcs cross; cannot close planarly")
    return cups


def catalan_closure(t: BallTangle, c: CatalanTangle) -> MorphismWord:
    """The link obtained by capping the tangle's boundary with a Catalan tangle.

    The bottom endpoints are first bent up beside the body (nested caps, so
    bottom point i's loose end hangs at position 2n-1-i), which lines the 2n
    loose ends up in reverse circular order; the matching then closes them
    with cups.  Reversal preserves planarity, so no crossings are added.
    """
    if 2 * c.n != t.endpoints:
        raise WidthMismatch(
            f"matching of {2 * c.n} points cannot close {t.endpoints} endpoints"
        )
    k = t.body.start
    slices: list[Slice] = [Cap(i) for i in range(k)]
    slices += t.body.slices
    total = t.endpoints
    pairs = [(total - 1 - a, total - 1 - b) for a, b in c.pairs]
    slices += _closing_cups(total, pairs)
    return MorphismWord(tuple(slices))


def _require_four(t: BallTangle, op: str) -> None:
    if t.endpoints != 4:
        raise WrongArity(f"{op} needs a 4-endpoint tangle, got {t.endpoints} endpoints")


def numerator(t: BallTangle) -> MorphismWord:
    """Close a 4-endpoint tangle with arcs joining the bottom pair and the
    top pair (the matching ((0,1),(2,3)))."""
    _require_four(t, "numerator")
    return catalan_closure(t, CatalanTangle(((0, 1), (2, 3))))


def denominator(t: BallTangle) -> MorphismWord:
    """Close a 4-endpoint tangle with side arcs, left-to-left and
    right-to-right (the matching ((0,3),(1,2))); for a braid body this is
    the trace closure."""
    _require_four(t, "denominator")
    return catalan_closure(t, CatalanTangle(((0, 3), (1, 2))))


def ball_ideal(t: BallTangle) -> list[LaurentPoly]:
    """Generators of the tangle's bracket ideal: the reduced bracket of every
    Catalan closure.

    For 4 endpoints this is [<n(T)>', <d(T)>']; 2n endpoints contribute
    Catalan(n) generators.  Capped at 8 endpoints (14 closures), which covers
    every braid handled here while keeping the state space small.
    """
    n = t.endpoints // 2
    if n > 4:
        raise ValueError(f"Catalan closure enumeration is capped at 8 endpoints, got {2 * n}")
    return [bracket_reduced(catalan_closure(t, c)) for c in catalan_tangles(n)]


_NUMERATOR_WEIGHT = ONE - LaurentPoly.monomial(1, -4)


def partial_closure_ideal(t: BallTangle) -> list[LaurentPoly]:
    """The two generators of the partial closure's bracket ideal.

    Closing one strand of a 4-endpoint tangle around the hole of a solid
    torus yields a genus-1 tangle whose ideal is generated by the closed
    strand's two fillings: { <d(T)>', (1 - A^-4) * <n(T)>' }.
    """
    _require_four(t, "partial_closure_ideal")
    d_poly = bracket_reduced(denominator(t))
    n_poly = bracket_reduced(numerator(t))
    return [d_poly, _NUMERATOR_WEIGHT * n_poly]


def _partial_closure_components(t: BallTangle) -> int:
    """Component count of the genus-1 tangle made by joining boundary circle
    points 1 and 2 (bottom-right to top-right for a braid body)."""
    k = t.body.start
    circle = list(range(k)) + list(range(t.endpoints - 1, k - 1, -1))
    extra = 1 if t.pairing[circle[1]] == circle[2] else 0
    return 1 + extra + t.closed_loops


def check_partial_closure_theorem(t: BallTangle) -> bool:
    """Test whether the partial closure's two-generator ideal equals the full
    ball ideal of the tangle.

    The equality is only asserted for single-strand partial closures, so a
    tangle whose partial closure carries a closed component is rejected.

    Raises:
        WrongArity: not a 4-endpoint tangle.
        MultiComponent: the partial closure is not a single strand.
    """
    _require_four(t, "check_partial_closure_theorem")
    parts = _partial_closure_components(t)
    if parts != 1:
        raise MultiComponent(
            f"partial closure has {parts} components; the equality needs one strand"
        )
    return ideal_equal(partial_closure_ideal(t), ball_ideal(t))
