"""Temperley-Lieb category engine.

Diagrams are evaluated by a sparse transfer matrix over planar matchings: a
link presented bottom-to-top as elementary slices (cap, cup, crossing) is
folded into a linear combination of crossingless cup diagrams, one slice at a
time.  The state space at width w has Catalan(w/2) basis diagrams, so width
stays the cost driver rather than crossing count — the genus-1 generator
closures reach ~40 crossings but never exceed width 10 (42 matchings).

Bracket conventions (these fix every sign downstream):

* ``Crossing(i, +1)`` resolves as ``A * (identity) + A^-1 * (e_i)``;
* each closed loop contributes ``delta = -A^2 - A^-2``;
* the empty diagram evaluates to 1.

The same matching algebra doubles as a small category of open elements
(:class:`TLElement`), enough to build Jones-Wenzl idempotents and the colored
test oracles for the closed-form recoupling coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .errors import EmptyLink, NotClosed, ParseError, WidthMismatch
from .laurent import LaurentFraction, LaurentPoly, ONE, ZERO, delta, div_exact

__all__ = [
    "Crossing",
    "Cap",
    "Cup",
    "Slice",
    "MorphismWord",
    "Matching",
    "TLElement",
    "identity_element",
    "e_element",
    "slice_element",
    "compose",
    "tensor",
    "transpose",
    "trace_close",
    "jw",
    "eval_word",
    "bracket_reduced",
    "parse_word",
    "format_word",
]


class Crossing(NamedTuple):
    """Strands at ``pos`` and ``pos+1`` cross; ``sign`` +-1 picks the strand
    from ``pos`` going over (+1) or under (-1) on its way up-right."""

    pos: int
    sign: int


class Cap(NamedTuple):
    """A local minimum: two new adjacent strands appear at ``pos``, ``pos+1``."""

    pos: int


class Cup(NamedTuple):
    """A local maximum: the strands at ``pos`` and ``pos+1`` join."""

    pos: int


Slice = Union[Crossing, Cap, Cup]


@dataclass(frozen=True)
class MorphismWord:
    """A tangle as a bottom-to-top slice sequence over a varying strand count.

    ``start`` is the strand count below the first slice.  A *closed* word
    starts and ends at zero strands and is what :func:`eval_word` consumes.
    """

    slices: tuple[Slice, ...]
    start: int = 0

    def __post_init__(self) -> None:
        w = self.start
        if w < 0:
            raise ValueError("negative initial strand count")
        for k, s in enumerate(self.slices):
            if isinstance(s, Cap):
                if not 0 <= s.pos <= w:
                    raise ValueError(f"slice {k}: cap at {s.pos} outside width {w}")
                w += 2
            elif isinstance(s, Cup):
                if not 0 <= s.pos <= w - 2:
                    raise ValueError(f"slice {k}: cup at {s.pos} outside width {w}")
                w -= 2
            elif isinstance(s, Crossing):
                if s.sign not in (1, -1):
                    raise ValueError(f"slice {k}: crossing sign must be +-1")
                if not 0 <= s.pos <= w - 2:
                    raise ValueError(f"slice {k}: crossing at {s.pos} outside width {w}")
            else:
                raise TypeError(f"slice {k}: unknown slice {s!r}")
        object.__setattr__(self, "_end", w)

    _end: int = field(init=False, repr=False, compare=False, default=0)

    @property
    def end(self) -> int:
        return self._end

    @property
    def closed(self) -> bool:
        return self.start == 0 and self.end == 0

    def __add__(self, other: MorphismWord) -> MorphismWord:
        """Stack ``other`` on top of this word."""
        if isinstance(other, MorphismWord):
            if self.end != other.start:
                raise WidthMismatch(f"cannot stack width {other.start} on {self.end}")
            return MorphismWord(self.slices + other.slices, self.start)
        return NotImplemented

    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if isinstance(s, Crossing))

    def max_width(self) -> int:
        w = peak = self.start
        for s in self.slices:
            if isinstance(s, Cap):
                w += 2
                peak = max(peak, w)
            elif isinstance(s, Cup):
                w -= 2
        return peak


# ---------------------------------------------------------------------------
# Closed-word evaluation (the hot path)
# ---------------------------------------------------------------------------
#
# For a word read from zero strands, the state after any prefix is a linear
# combination of perfect crossingless matchings of the current strand
# positions; a matching is stored as its partner tuple (an involution of
# range(w) without fixed points).


def _cap(partner: tuple[int, ...], i: int) -> tuple[int, ...]:
    out = [p + 2 if p >= i else p for p in partner]
    out[i:i] = (i + 1, i)
    return tuple(out)


def _cup(partner: tuple[int, ...], i: int) -> tuple[tuple[int, ...], bool]:
    j, k = partner[i], partner[i + 1]
    if j == i + 1:
        closed = True
        out = list(partner)
    else:
        closed = False
        out = list(partner)
        out[j], out[k] = k, j
    del out[i : i + 2]
    return tuple(p - 2 if p > i + 1 else p for p in out), closed


def _e(partner: tuple[int, ...], i: int) -> tuple[tuple[int, ...], bool]:
    j, k = partner[i], partner[i + 1]
    if j == i + 1:
        return partner, True
    out = list(partner)
    out[i], out[i + 1] = i + 1, i
    out[j], out[k] = k, j
    return tuple(out), False


def eval_word(w: MorphismWord) -> LaurentPoly:
    """Kauffman bracket of a closed slice word.

    Raises:
        NotClosed: strand counts do not begin and end at zero.
    """
    if not w.closed:
        raise NotClosed(f"word runs from {w.start} to {w.end} strands")
    d = delta()
    a_pos = LaurentPoly.monomial(1, 1)
    a_neg = LaurentPoly.monomial(1, -1)
    state: dict[tuple[int, ...], LaurentPoly] = {(): ONE}
    for s in w.slices:
        new: dict[tuple[int, ...], LaurentPoly] = {}
        if isinstance(s, Cap):
            i = s.pos
            for m, c in state.items():
                new[_cap(m, i)] = c
        elif isinstance(s, Cup):
            i = s.pos
            for m, c in state.items():
                m2, closed = _cup(m, i)
                if closed:
                    c = c * d
                prev = new.get(m2)
                new[m2] = c if prev is None else prev + c
        else:
            i = s.pos
            ca, cb = (a_pos, a_neg) if s.sign > 0 else (a_neg, a_pos)
            for m, c in state.items():
                m2, closed = _e(m, i)
                if closed:
                    # e_i acts by delta on a capped pair, so both resolutions
                    # keep the same matching
                    coeff = c * (ca + cb * d)
                    prev = new.get(m)
                    new[m] = coeff if prev is None else prev + coeff
                else:
                    prev = new.get(m)
                    cm = c * ca
                    new[m] = cm if prev is None else prev + cm
                    prev = new.get(m2)
                    cm2 = c * cb
                    new[m2] = cm2 if prev is None else prev + cm2
        state = {m: c for m, c in new.items() if c}
    return state.get((), ZERO)


def bracket_reduced(w: MorphismWord) -> LaurentPoly:
    """``eval_word(w) / delta`` — defined for nonempty closed diagrams.

    Raises:
        EmptyLink: the word contains no strand events.
        NotClosed: as for :func:`eval_word`.
    """
    if not w.slices:
        raise EmptyLink("the empty diagram has no reduced bracket")
    return div_exact(eval_word(w), delta())


# ---------------------------------------------------------------------------
# Open elements
# ---------------------------------------------------------------------------


class Matching:
    """A planar perfect matching of ``bottom`` + ``top`` boundary points.

    Points are indexed 0..bottom-1 along the lower boundary (left to right),
    then bottom..bottom+top-1 along the upper boundary (left to right).
    Planarity means no two chords cross when the rectangle's boundary is
    traversed cyclically (bottom left-to-right, then top right-to-left).
    """

    __slots__ = ("bottom", "top", "partner")

    def __init__(self, bottom: int, top: int, pairs: Iterable[tuple[int, int]]):
        n = bottom + top
        partner = [-1] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad pair ({a}, {b})")
            if partner[a] != -1 or partner[b] != -1:
                raise ValueError(f"point repeated in pair ({a}, {b})")
            partner[a], partner[b] = b, a
        if -1 in partner:
            raise ValueError("not a perfect matching")
        self.bottom = bottom
        self.top = top
        self.partner = tuple(partner)
        if not self._planar():
            raise ValueError(f"matching {self.partner} is not planar")

    @classmethod
    def _raw(cls, bottom: int, top: int, partner: tuple[int, ...]) -> Matching:
        m = object.__new__(cls)
        m.bottom = bottom
        m.top = top
        m.partner = partner
        return m

    def _cyclic(self, p: int) -> int:
        if p < self.bottom:
            return p
        return self.bottom + (self.top - 1 - (p - self.bottom))

    def _planar(self) -> bool:
        chords = []
        for a, b in enumerate(self.partner):
            if a < b:
                x, y = self._cyclic(a), self._cyclic(b)
                chords.append((min(x, y), max(x, y)))
        for i, (p, q) in enumerate(chords):
            for r, s in chords[i + 1 :]:
                if (p < r < q) != (p < s < q):
                    return False
        return True

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.partner) if a < b]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return (
            self.bottom == other.bottom
            and self.top == other.top
            and self.partner == other.partner
        )

    def __hash__(self) -> int:
        return hash((self.bottom, self.top, self.partner))

    def __repr__(self) -> str:
        return f"Matching({self.bottom}, {self.top}, {self.pairs()})"


Coeff = Union[LaurentPoly, LaurentFraction, int]


class TLElement:
    """A formal linear combination of planar matchings of common shape.

    Coefficients may be :class:`LaurentPoly` or :class:`LaurentFraction`
    (Jones-Wenzl idempotents need the latter); the arithmetic protocol is the
    same either way, and zero coefficients are dropped eagerly.
    """

    __slots__ = ("bottom", "top", "coeffs")

    def __init__(self, bottom: int, top: int, coeffs: dict[Matching, Coeff] | None = None):
        if (bottom + top) % 2:
            raise ValueError("boundary point count must be even")
        self.bottom = bottom
        self.top = top
        cleaned: dict[Matching, Coeff] = {}
        for m, c in (coeffs or {}).items():
            if (m.bottom, m.top) != (bottom, top):
                raise WidthMismatch(f"matching shape {(m.bottom, m.top)} != {(bottom, top)}")
            if c:
                cleaned[m] = c
        self.coeffs = cleaned

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: TLElement) -> TLElement:
        if not isinstance(other, TLElement):
            return NotImplemented
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise WidthMismatch("cannot add elements of different shapes")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return TLElement(self.bottom, self.top, out)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + other.scaled(-1)

    def scaled(self, c: Coeff) -> TLElement:
        return TLElement(self.bottom, self.top, {m: c * v for m, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (
            self.bottom == other.bottom
            and self.top == other.top
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"TLElement({self.bottom}, {self.top}, 0)"
        parts = " + ".join(f"({c})*{m.pairs()}" for m, c in self.coeffs.items())
        return f"TLElement({self.bottom}, {self.top}, {parts})"


def identity_element(n: int) -> TLElement:
    m = Matching._raw(n, n, tuple(list(range(n, 2 * n)) + list(range(n))))
    return TLElement(n, n, {m: ONE})


def e_element(n: int, i: int) -> TLElement:
    """The cup-cap generator e_i in TL_n (0-based, 0 <= i <= n-2)."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"e_{i} does not exist at width {n}")
    partner = list(range(n, 2 * n)) + list(range(n))
    partner[i], partner[i + 1] = i + 1, i
    ti, tj = n + i, n + i + 1
    partner[ti], partner[tj] = tj, ti
    return TLElement(n, n, {Matching._raw(n, n, tuple(partner)): ONE})


def slice_element(s: Slice, width: int) -> TLElement:
    """The slice as an open element acting on ``width`` strands from below."""
    if isinstance(s, Cap):
        b, t = width, width + 2
        pairs = []
        for k in range(width):
            tk = k if k < s.pos else k + 2
            pairs.append((k, b + tk))
        pairs.append((b + s.pos, b + s.pos + 1))
        return TLElement(b, t, {Matching(b, t, pairs): ONE})
    if isinstance(s, Cup):
        b, t = width, width - 2
        pairs = [(s.pos, s.pos + 1)]
        for k in range(width):
            if k in (s.pos, s.pos + 1):
                continue
            tk = k if k < s.pos else k - 2
            pairs.append((k, b + tk))
        return TLElement(b, t, {Matching(b, t, pairs): ONE})
    if isinstance(s, Crossing):
        ident = identity_element(width)
        hook = e_element(width, s.pos)
        a = LaurentPoly.monomial(1, s.sign)
        ainv = LaurentPoly.monomial(1, -s.sign)
        return ident.scaled(a) + hook.scaled(ainv)
    raise TypeError(f"unknown slice {s!r}")


def compose(e1: TLElement, e2: TLElement) -> TLElement:
    """Stack e2 on top of e1 (e1's top boundary glued to e2's bottom).

    Every loop closed in the gluing contributes a factor of delta.

    Raises:
        WidthMismatch: e1.top != e2.bottom
    """
    if e1.top != e2.bottom:
        raise WidthMismatch(f"compose: {e1.top} strands meet {e2.bottom}")
    b, mid, t = e1.bottom, e1.top, e2.top
    d = delta()
    out: dict[Matching, Coeff] = {}
    for m1, c1 in e1.coeffs.items():
        for m2, c2 in e2.coeffs.items():
            # points of the result: 0..b-1 bottom, b..b+t-1 top
            # interface points: e1's b..b+mid-1 glued to e2's 0..mid-1
            partner = [-1] * (b + t)
            loops = 0
            seen_mid = [False] * mid

            def walk(start_in_e1: bool, p: int) -> tuple[bool, int]:
                """Follow the strand from an endpoint into the interface
                until it exits at a boundary point of the result."""
                in_e1, q = start_in_e1, p
                while True:
                    q = m1.partner[q] if in_e1 else m2.partner[q]
                    if in_e1:
                        if q < b:
                            return True, q
                        seen_mid[q - b] = True
                        in_e1, q = False, q - b
                    else:
                        if q >= mid:
                            return False, q - mid
                        seen_mid[q] = True
                        in_e1, q = True, q + b

            for p0 in range(b):
                if partner[p0] != -1:
                    continue
                in1, q = walk(True, p0)
                res = q if in1 else b + q
                partner[p0], partner[res] = res, p0
            for p0 in range(t):
                if partner[b + p0] != -1:
                    continue
                in1, q = walk(False, p0 + mid)
                res = q if in1 else b + q
                partner[b + p0], partner[res] = res, b + p0
            for k in range(mid):
                if seen_mid[k]:
                    continue
                # an internal loop: trace it and count it once
                loops += 1
                in_e1, q = True, k + b
                while True:
                    q = m1.partner[q] if in_e1 else m2.partner[q]
                    idx = (q - b) if in_e1 else q
                    seen_mid[idx] = True
                    in_e1, q = (False, q - b) if in_e1 else (True, q + b)
                    if idx == k and in_e1:
                        break
            coeff = c1 * c2
            for _ in range(loops):
                coeff = coeff * d
            m = Matching._raw(b, t, tuple(partner))
            prev = out.get(m)
            out[m] = coeff if prev is None else prev + coeff
    return TLElement(b, t, out)


def tensor(e1: TLElement, e2: TLElement) -> TLElement:
    """Place e2 to the right of e1."""
    b1, t1, b2, t2 = e1.bottom, e1.top, e2.bottom, e2.top
    b, t = b1 + b2, t1 + t2

    def remap1(p: int) -> int:
        return p if p < b1 else p + b2

    def remap2(p: int) -> int:
        return p + b1 if p < b2 else p + b1 + t1

    out: dict[Matching, Coeff] = {}
    for m1, c1 in e1.coeffs.items():
        for m2, c2 in e2.coeffs.items():
            pairs = [(remap1(a), remap1(x)) for a, x in m1.pairs()]
            pairs += [(remap2(a), remap2(x)) for a, x in m2.pairs()]
            partner = [-1] * (b + t)
            for x, y in pairs:
                partner[x], partner[y] = y, x
            m = Matching._raw(b, t, tuple(partner))
            prev = out.get(m)
            c = c1 * c2
            out[m] = c if prev is None else prev + c
    return TLElement(b, t, out)


def transpose(e: TLElement) -> TLElement:
    """Flip upside down (bottom and top boundaries swap, coefficients fixed)."""
    b, t = e.bottom, e.top

    def remap(p: int) -> int:
        return p + t if p < b else p - b

    out: dict[Matching, Coeff] = {}
    for m, c in e.coeffs.items():
        partner = [-1] * (b + t)
        for x, y in m.pairs():
            rx, ry = remap(x), remap(y)
            partner[rx], partner[ry] = ry, rx
        out[Matching._raw(t, b, tuple(partner))] = c
    return TLElement(t, b, out)


def trace_close(e: TLElement) -> Coeff:
    """Markov closure: join top point k to bottom point k around the right.

    Requires a square element (bottom == top).
    """
    if e.bottom != e.top:
        raise WidthMismatch("trace closure needs bottom == top")
    n = e.bottom
    d = delta()
    total: Coeff = ZERO
    for m, c in e.coeffs.items():
        # count cycles of the permutation pairing boundary points through
        # the matching and through the closure arcs (point p <-> p +- n)
        seen = [False] * (2 * n)
        loops = 0
        for p0 in range(2 * n):
            if seen[p0]:
                continue
            loops += 1
            q = p0
            while not seen[q]:
                seen[q] = True
                q = m.partner[q]
                seen[q] = True
                q = q + n if q < n else q - n
        term = c
        for _ in range(loops):
            term = term * d
        total = total + term
    return total


@lru_cache(maxsize=None)
def jw(n: int) -> TLElement:
    """The n-th Jones-Wenzl idempotent as an exact TLElement.

    Built by the Wenzl recursion
    ``f_n = f' - (Delta_{n-2}/Delta_{n-1}) * f' e_{n-1} f'`` with
    ``f' = f_{n-1} (x) id_1``; coefficients are exact Laurent fractions.
    """
    from .recoupling import delta_n

    if n == 0:
        return TLElement(0, 0, {Matching._raw(0, 0, ()): ONE})
    if n == 1:
        return identity_element(1)
    fprime = tensor(jw(n - 1), identity_element(1))
    hooked = compose(compose(fprime, e_element(n, n - 2)), fprime)
    coeff = LaurentFraction(delta_n(n - 2), delta_n(n - 1))
    return fprime - hooked.scaled(coeff)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_word(w: MorphismWord) -> str:
    """Serialize: header ``STRANDS k`` then one slice per line."""
    lines = [f"STRANDS {w.start}"]
    for s in w.slices:
        if isinstance(s, Crossing):
            lines.append(f"X{'+' if s.sign > 0 else '-'} {s.pos}")
        elif isinstance(s, Cap):
            lines.append(f"CAP {s.pos}")
        else:
            lines.append(f"CUP {s.pos}")
    return "\n".join(lines) + "\n"


def parse_word(text: str) -> MorphismWord:
    """Parse the :func:`format_word` grammar.

    Raises:
        ParseError: with the offending 1-based line number.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    slices: list[Slice] = []
    start = None
    lineno = 0
    for lineno, ln in enumerate(lines, start=1):
        if not ln or ln.startswith("#"):
            continue
        fields = ln.split()
        if start is None:
            if len(fields) != 2 or fields[0] != "STRANDS":
                raise ParseError("expected header 'STRANDS <n>'", lineno)
            try:
                start = int(fields[1])
            except ValueError:
                raise ParseError(f"bad strand count {fields[1]!r}", lineno) from None
            continue
        if len(fields) != 2:
            raise ParseError(f"expected '<OP> <pos>', got {ln!r}", lineno)
        op, arg = fields
        try:
            pos = int(arg)
        except ValueError:
            raise ParseError(f"bad position {arg!r}", lineno) from None
        if op == "X+":
            slices.append(Crossing(pos, 1))
        elif op == "X-":
            slices.append(Crossing(pos, -1))
        elif op == "CAP":
            slices.append(Cap(pos))
        elif op == "CUP":
            slices.append(Cup(pos))
        else:
            raise ParseError(f"unknown slice {op!r}", lineno)
    if start is None:
        raise ParseError("empty word file", lineno or 1)
    try:
        return MorphismWord(tuple(slices), start)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
