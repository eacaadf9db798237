"""Census files and the wrap-closure screening of partially closed braids.

A census entry is a braid word whose trace closure is a knot.  Screening an
entry means: partially close the braid (strand 1 stays open), close the open
strand eleven ways — directly, and lapping the closed bundle k = 1..5 times
front-to-back (P) or back-to-front (N) — and collect the Jones polynomial of
each resulting link.  The eleven polynomials are moved to the variable
q = A^-2, shifted nonnegative, and fed to the integer Groebner engine; the
entry is flagged nontrivial when the basis is not {1}.  A nontrivial flag
means no closure argument can ever embed the partially closed braid in the
unknot, since the unknot's polynomial generates everything.

Two fidelity notes, both deliberate.  The working variable is q = A^-2, the
square root of the classical t: multi-component wrap closures have
half-integer t-degrees, and q is the smallest power that keeps every closure
integral.  And the shift rule is asymmetric on purpose — a polynomial whose
lowest degree is already positive is left alone — reproducing the screening
pipeline this module reconstructs; it deviates from the symmetric
normalization in :func:`skeinideal.laurent.rescale_min_const`.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .diagrams import (
    BraidWord,
    braid_closure,
    jones,
    orient,
    partial_closure,
    wrap_closure,
)
from .errors import JonesMismatch, ParseError, TooFewStrands
from .ideal import StrongGB, intpoly_from_laurent, modp_kill_search, strong_gb
from .laurent import LaurentPoly, parse_laurent

__all__ = [
    "CensusEntry",
    "SearchReport",
    "WRAP_COUNT",
    "load_census",
    "jones_in_q",
    "census_rescale",
    "search",
    "search_census",
]

WRAP_COUNT = 5
"""Laps per direction; with the plain closure this makes eleven closures."""


@dataclass(frozen=True)
class CensusEntry:
    """A named braid word: one row of a census file."""

    name: str
    strands: int
    word: BraidWord

    def __post_init__(self) -> None:
        if self.word.strands != self.strands:
            raise ValueError(
                f"entry {self.name}: word is on {self.word.strands} strands, not {self.strands}"
            )


@dataclass(frozen=True)
class SearchReport:
    """Outcome of screening one entry.

    ``polynomials`` holds the eleven rescaled closure polynomials in q, in
    closure order (plain, P^1..P^5, N^1..N^5); ``basis`` is their strong
    Groebner basis over Z[q].  ``witness`` is a (prime, unit) pair killing
    every polynomial, when the verdict is Nontrivial and one exists.
    """

    name: str
    polynomials: tuple[LaurentPoly, ...]
    basis: StrongGB
    verdict: str
    witness: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if len(self.polynomials) != 2 * WRAP_COUNT + 1:
            raise ValueError(f"expected {2 * WRAP_COUNT + 1} closure polynomials")


_WORD_SHAPE = re.compile(r"\{(-?\d+(?:;-?\d+)*)?\}$")


def load_census(path: str | Path) -> list[CensusEntry]:
    """Read census rows ``name,strands,{k1;k2;...}[,expected_jones]``.

    Blank lines and ``#`` comments are skipped.  When the optional fourth
    column is present, the Jones polynomial of the entry's plain closure is
    computed and compared; a disagreement aborts the load, since it means
    the word and the name have drifted apart.

    Raises:
        ParseError: malformed row, with its line number.
        JonesMismatch: a validation column disagrees with the computed value.
    """
    entries: list[CensusEntry] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) not in (3, 4):
            raise ParseError(
                f"expected name,strands,word[,expected_jones], got {len(fields)} fields",
                lineno,
            )
        name, strands_text, word_text = fields[:3]
        if not name:
            raise ParseError("empty entry name", lineno)
        try:
            strands = int(strands_text)
        except ValueError:
            raise ParseError(f"bad strand count {strands_text!r}", lineno) from None
        m = _WORD_SHAPE.fullmatch(word_text)
        if not m:
            raise ParseError(f"braid word must look like {{1;-2;...}}, got {word_text!r}", lineno)
        letters = tuple(int(piece) for piece in m.group(1).split(";")) if m.group(1) else ()
        try:
            entry = CensusEntry(name, strands, BraidWord(strands, letters))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if len(fields) == 4 and fields[3]:
            try:
                expected = parse_laurent(fields[3])
            except ParseError as exc:
                raise ParseError(f"bad expected Jones: {exc}", lineno) from None
            got = jones(orient(braid_closure(entry.word)))
            if got != expected:
                raise JonesMismatch(
                    f"line {lineno}, entry {name}: computed Jones {got} != expected {expected}"
                )
        entries.append(entry)
    return entries


def jones_in_q(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a Jones polynomial from the bracket variable A to q = A^-2.

    Jones values of closed diagrams only have even A-exponents (state-sum
    exponents share the crossing count's parity, and the writhe factor
    cancels it), so the substitution is exact; an odd exponent means the
    input was not a Jones polynomial.
    """
    terms: dict[int, int] = {}
    for e, c in p.items():
        if e % 2:
            raise ValueError(f"exponent {e} is odd; not a Jones polynomial in A")
        terms[-e // 2] = c
    return LaurentPoly(terms)


def census_rescale(p: LaurentPoly) -> LaurentPoly:
    """Shift a polynomial's lowest term up to degree zero — but only when the
    lowest exponent is negative.  Already-nonnegative polynomials pass
    through unchanged, trailing q-powers and all."""
    if p and p.min_exp < 0:
        return p.shifted(-p.min_exp)
    return p


def _closure_words(entry: CensusEntry):
    g = partial_closure(entry.word)
    yield braid_closure(entry.word)
    for sign in (1, -1):
        for k in range(1, WRAP_COUNT + 1):
            yield wrap_closure(g, k, sign)


def search(entry: CensusEntry) -> SearchReport:
    """Screen one census entry through the eleven-closure pipeline.

    Raises:
        TooFewStrands: for braids on fewer than three strands, whose partial
            closures always embed in the unknot or the 2-component unlink.
    """
    if entry.strands < 3:
        raise TooFewStrands(
            f"entry {entry.name} has {entry.strands} strands; screening needs at least 3"
        )
    polys = tuple(
        census_rescale(jones_in_q(jones(orient(w)))) for w in _closure_words(entry)
    )
    basis = strong_gb([intpoly_from_laurent(p, 1) for p in polys])
    if any(b.is_one() for b in basis.basis):
        return SearchReport(entry.name, polys, basis, "Trivial")
    hits = modp_kill_search(list(polys), 101)
    return SearchReport(entry.name, polys, basis, "Nontrivial", hits[0] if hits else None)


def search_census(
    entries: list[CensusEntry], workers: int | None = None
) -> list[SearchReport]:
    """Screen every entry, in parallel when it pays, reports sorted by name.

    Worker count: the ``workers`` argument if given, else the SKEIN_THREADS
    environment variable, else one process per CPU.  Entries are independent,
    and the report list depends only on the entry set, not the schedule.
    """
    if workers is None:
        workers = int(os.environ.get("SKEIN_THREADS", "0")) or os.cpu_count() or 1
    work = sorted(entries, key=lambda e: e.name)
    if workers <= 1 or len(work) <= 1:
        return [search(e) for e in work]
    with ProcessPoolExecutor(max_workers=min(workers, len(work))) as pool:
        return list(pool.map(search, work))
