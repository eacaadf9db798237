"""Ideal arithmetic over the integers: strong Groebner bases and certificates.

The bracket ideals this library produces live in Z[A, A^-1], and the
interesting ones -- like <11, 4 - A^4> -- are visible only over the
integers: over a field of characteristic 0 they collapse to the unit ideal.
Deciding membership and triviality therefore needs Groebner bases over Z,
where a basis must account for coefficient arithmetic as well as monomial
divisibility.  This module implements *strong* (D-)Groebner bases in one or
two variables, following the treatment for principal ideal rings in Becker
and Weispfenning, "Groebner Bases" (1993), chapter 10: Buchberger's loop
closes under both S-polynomials and GCD-polynomials, and reduction divides
coefficients with symmetric Euclidean remainders.

Laurent-ring questions are reduced to polynomial ones by the localization
presentation Z[A, A^-1] = Z[A, u]/(uA - 1): a Laurent ideal is trivial, or
contains a given element, exactly when the corresponding statement holds for
its polynomial generators together with the relation uA - 1.  This is a
complete decision procedure, unlike probing membership of A^N for bounded N.
Nontriviality additionally gets an independently checkable certificate: a
prime p and unit a with every generator vanishing under A -> a (mod p).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AllZero
from .laurent import LaurentPoly, eval_mod, rescale_min_const

__all__ = [
    "IntPoly",
    "StrongGB",
    "TrivialityCertificate",
    "intpoly_from_laurent",
    "format_intpoly",
    "strong_gb",
    "normal_form",
    "laurent_trivial",
    "ideal_equal",
    "ideal_contains",
    "modp_kill_search",
]

Exponent = tuple[int, ...]

_VAR_NAMES = ("A", "u")


def _order_key(exp: Exponent) -> tuple[int, Exponent]:
    """Degree-lex key with A > u: compare total degree, then exponents."""
    return (sum(exp), exp)


class IntPoly:
    """A polynomial over Z in one variable (A) or two (A and u).

    Exponents are nonnegative; stored terms have nonzero coefficients.
    Instances are immutable by convention: all arithmetic returns new
    objects.
    """

    __slots__ = ("nvars", "terms")

    nvars: int
    terms: dict[Exponent, int]

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
    ):
        if nvars not in (1, 2):
            raise ValueError(f"IntPoly supports 1 or 2 variables, not {nvars}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variable(s)")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            if c:
                cleaned[exp] = cleaned.get(exp, 0) + c
                if not cleaned[exp]:
                    del cleaned[exp]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def const(cls, nvars: int, c: int) -> IntPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exp: Exponent, c: int = 1) -> IntPoly:
        return cls(nvars, {tuple(exp): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self) -> IntPoly:
        return IntPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("cannot mix variable counts")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return IntPoly(self.nvars, out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("cannot mix variable counts")
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return IntPoly(self.nvars, out)

    __rmul__ = __mul__

    def lead(self) -> tuple[Exponent, int]:
        """Leading (exponent, coefficient) under degree-lex; poly must be nonzero."""
        exp = max(self.terms, key=_order_key)
        return exp, self.terms[exp]

    def shifted(self, exp: Exponent, c: int = 1) -> IntPoly:
        """Multiply by the monomial c * X^exp."""
        return IntPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
        )

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def __str__(self) -> str:
        return format_intpoly(self)

    def __repr__(self) -> str:
        return f"IntPoly({self.nvars}, '{self}')"


def intpoly_from_laurent(p: LaurentPoly, nvars: int = 1) -> IntPoly:
    """Embed a Laurent polynomial with nonnegative exponents as an IntPoly.

    Two-variable embeddings place the polynomial in the A-slice (u-degree 0).

    Raises:
        ValueError: p has a negative exponent (rescale first).
    """
    if p and p.val < 0:
        raise ValueError("Laurent polynomial has negative exponents; rescale first")
    pad = (0,) * (nvars - 1)
    return IntPoly(nvars, {(e, *pad): c for e, c in p.items()})


def format_intpoly(p: IntPoly) -> str:
    """Render as ``c*A^i`` terms (plus ``*u^j`` in two variables), descending."""
    if not p.terms:
        return "0"
    parts = []
    for exp in sorted(p.terms, key=_order_key, reverse=True):
        factors = [f"{p.terms[exp]}"]
        factors += [f"{name}^{e}" for name, e in zip(_VAR_NAMES, exp)]
        parts.append("*".join(factors))
    return " + ".join(parts)


@dataclass(frozen=True)
class StrongGB:
    """A minimal strong Groebner basis over Z.

    Every S-polynomial and GCD-polynomial of basis pairs reduces to zero, so
    ideal membership is exactly "normal_form is zero".  Elements carry
    positive leading coefficients and are sorted by leading term.
    """

    basis: tuple[IntPoly, ...]
    nvars: int
    order: str = "deglex"


@dataclass(frozen=True)
class TrivialityCertificate:
    """Outcome of a Laurent-ideal triviality decision.

    ``witness`` is the saturated Groebner basis containing 1 when the
    verdict is Trivial, and a pair (p, a) -- a prime and a unit with every
    generator vanishing under A -> a mod p -- when Nontrivial and such a
    pair exists within the scanned range.
    """

    verdict: str
    witness: StrongGB | tuple[int, int] | None


def _sym_divmod(c: int, d: int) -> tuple[int, int]:
    """Quotient and symmetric remainder: c = q*d + r with -|d|/2 < r <= |d|/2."""
    ad = abs(d)
    r = c % ad
    if 2 * r > ad:
        r -= ad
    return (c - r) // d, r


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(d, s, t) with d = s*a + t*b and d = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _reduce(f: IntPoly, basis: list[IntPoly]) -> IntPoly:
    """Full strong reduction of every term of f by the basis."""
    nvars = f.nvars
    leads = [(g.lead(), g) for g in basis if g]
    pending = dict(f.terms)
    done: dict[Exponent, int] = {}
    while pending:
        exp = max(pending, key=_order_key)
        coeff = pending.pop(exp)
        progress = True
        while coeff and progress:
            progress = False
            for (ge, gc), g in leads:
                if any(a < b for a, b in zip(exp, ge)):
                    continue
                q, r = _sym_divmod(coeff, gc)
                if not q:
                    continue
                shift = tuple(a - b for a, b in zip(exp, ge))
                for e2, c2 in g.terms.items():
                    if e2 == ge:
                        continue
                    e = tuple(a + b for a, b in zip(e2, shift))
                    v = pending.get(e, 0) - q * c2
                    if v:
                        pending[e] = v
                    else:
                        pending.pop(e, None)
                coeff = r
                progress = True
        if coeff:
            done[exp] = coeff
    return IntPoly(nvars, done)


def _sign_normalized(p: IntPoly) -> IntPoly:
    return -p if p and p.lead()[1] < 0 else p


def _pair_candidates(f: IntPoly, g: IntPoly) -> list[IntPoly]:
    """The GCD-polynomial (when it shrinks a coefficient) and S-polynomial."""
    (ea, ca), (eb, cb) = f.lead(), g.lead()
    lcm_exp = tuple(max(a, b) for a, b in zip(ea, eb))
    sa = tuple(a - b for a, b in zip(lcm_exp, ea))
    sb = tuple(a - b for a, b in zip(lcm_exp, eb))
    out = []
    d, s, t = _ext_gcd(ca, cb)
    if d != abs(ca) and d != abs(cb):
        out.append(f.shifted(sa, s) + g.shifted(sb, t))
    lc = abs(ca * cb) // d
    out.append(f.shifted(sa, lc // ca) - g.shifted(sb, lc // cb))
    return out


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases, deterministic far beyond 2**64."""
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_POOL: list[int] = []


def _crt_prime(i: int) -> int:
    """The i-th prime below 2**30, largest first, grown lazily."""
    n = _PRIME_POOL[-1] - 2 if _PRIME_POOL else (1 << 30) - 1
    while i >= len(_PRIME_POOL):
        if _is_prime(n):
            _PRIME_POOL.append(n)
        n -= 2
    return _PRIME_POOL[i]


def _resultant_mod(f: list[int], g: list[int], p: int) -> int:
    """Res(f, g) over Z/p by the Euclidean recurrence, dense ascending lists."""
    res = 1
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return res * pow(g[0], m, p) % p
        inv = pow(g[n], -1, p)
        r = [c % p for c in f]
        for i in range(m, n - 1, -1):
            q = r[i] * inv % p
            if q:
                for j in range(n + 1):
                    r[i - n + j] = (r[i - n + j] - q * g[j]) % p
        while len(r) > 1 and not r[-1]:
            r.pop()
        if len(r) == 1 and not r[0]:
            return 0
        k = len(r) - 1
        res = res * pow(g[n], m - k, p) % p
        if (m * n) & 1:
            res = -res % p
        f, g = g, r


def _resultant(f: IntPoly, g: IntPoly) -> int:
    """The Sylvester resultant of univariate f and g over Z.

    Computed by Chinese remaindering of prime-field images against the
    Hadamard bound, which never sees coefficients beyond the answer's own
    size.  The resultant is an explicit Z[A]-combination of f and g, so it
    always lies in the ideal they generate.
    """
    fd = max(e for (e,) in f.terms) if f else -1
    gd = max(e for (e,) in g.terms) if g else -1
    if fd < 0 or gd < 0:
        return 0
    fc = [0] * (fd + 1)
    for (e,), c in f.terms.items():
        fc[e] = c
    gc = [0] * (gd + 1)
    for (e,), c in g.terms.items():
        gc[e] = c
    need = int(
        gd * math.log2(sum(c * c for c in fc)) / 2
        + fd * math.log2(sum(c * c for c in gc)) / 2
    ) + 3
    modulus, residue, i = 1, 0, 0
    while modulus.bit_length() <= need:
        p = _crt_prime(i)
        i += 1
        if fc[-1] % p == 0 or gc[-1] % p == 0:
            continue
        rp = _resultant_mod([c % p for c in fc], [c % p for c in gc], p)
        if modulus == 1:
            modulus, residue = p, rp
        else:
            lift = (rp - residue) % p * pow(modulus % p, -1, p) % p
            residue += modulus * lift
            modulus *= p
    residue %= modulus
    if 2 * residue > modulus:
        residue -= modulus
    return residue


def _integer_member(polys: list[IntPoly]) -> int | None:
    """A nonzero integer in the ideal of the (univariate) generators, if any.

    Tries resultants of the smallest-degree generator against the others,
    then against running A-shifted mixes of them; every candidate is an
    ideal member by construction.  Returns None when all attempts vanish,
    which happens when the generators share a rational root -- then the
    ideal meets Z only in 0 and no such shortcut exists.
    """
    ordered = sorted((p for p in polys if p), key=lambda p: p.lead()[0][0])
    if not ordered:
        return None
    base = ordered[0]
    if base.lead()[0][0] == 0:
        return abs(next(iter(base.terms.values())))
    acc: IntPoly | None = None
    for g in ordered[1:]:
        r = _resultant(base, g)
        if r:
            return abs(r)
        acc = g if acc is None else acc.shifted((1,)) + g
        if acc.lead()[0][0] == 0:
            return abs(next(iter(acc.terms.values())))
        r = _resultant(base, acc)
        if r:
            return abs(r)
    return None


def _complete_univar(seed: list[IntPoly]) -> list[IntPoly]:
    """Strong-basis completion for one variable via an integer echelon.

    The basis is held as at most one pivot per degree, with positive
    leading coefficients.  An incoming polynomial is fully reduced; if its
    head survives at an occupied degree, the Bezout combination of the two
    heads *improves* that pivot to their gcd and both remainders re-enter
    the queue.  Closure is Buchberger's: every pair of pivots contributes
    its S-polynomial (and GCD-polynomial while the leading coefficients do
    not divide one another), re-enqueued whenever a participating pivot
    changes.

    Plain elimination over Z doubles coefficient sizes at every degree it
    descends through, so before starting, a nonzero integer member of the
    ideal (a resultant of two generators) is planted as the degree-0 pivot:
    from then on every coefficient in sight is a symmetric remainder
    bounded by it, and the bound itself only shrinks as gcd steps improve
    the pivot.
    """
    pivots: dict[int, IntPoly] = {}
    work: list[IntPoly] = [p for p in seed if p]
    if len(work) > 1 and all(p.lead()[0][0] > 0 for p in work):
        n0 = _integer_member(work)
        if n0 is not None:
            work.append(IntPoly.const(1, n0))
    pending: set[tuple[int, int]] = set()

    def enqueue(deg: int) -> None:
        pending.update((max(deg, d), min(deg, d)) for d in pivots if d != deg)

    def settle() -> None:
        # Re-reduce each pivot against the pivots below it.  This is what
        # keeps coefficients small: without it, tails written before lower
        # pivots existed stay unreduced, and the next Bezout combination
        # multiplies them -- bit sizes then double per improvement.  A pivot
        # can only ever be rewritten by lower degrees, so one pass in
        # increasing order leaves everything simultaneously reduced; a pivot
        # whose head degree drops vacates its slot and re-enters through
        # the work queue.
        for d in sorted(pivots):
            lower = [q for d2, q in pivots.items() if d2 < d]
            if not lower:
                continue
            p = pivots[d]
            r = _reduce(p, lower)
            if r == p:
                continue
            if r and r.lead()[0][0] == d:
                r = _sign_normalized(r)
                if r.lead()[1] != p.lead()[1]:
                    enqueue(d)
                pivots[d] = r
            else:
                del pivots[d]
                if r:
                    work.append(r)

    while work or pending:
        if not work:
            hi, lo = pending.pop()
            e_hi, e_lo = pivots.get(hi), pivots.get(lo)
            if e_hi is None or e_lo is None:
                continue
            c_hi, c_lo = e_hi.lead()[1], e_lo.lead()[1]
            shift = (hi - lo,)
            lc = c_hi * c_lo // math.gcd(c_hi, c_lo)
            work.append(e_hi * (lc // c_hi) - e_lo.shifted(shift, lc // c_lo))
            d, s, t = _ext_gcd(c_hi, c_lo)
            if d != c_hi and d != c_lo:
                work.append(e_hi * s + e_lo.shifted(shift, t))
            continue
        f = _reduce(work.pop(), list(pivots.values()))
        if not f:
            continue
        f = _sign_normalized(f)
        (deg,), c = f.lead()
        e = pivots.get(deg)
        if e is None:
            pivots[deg] = f
        else:
            # full reduction left the head standing, so the pivot's lead
            # does not divide c; the Bezout combination realizes their gcd
            # and both ingredients go around again
            _, s, t = _ext_gcd(e.lead()[1], c)
            pivots[deg] = _sign_normalized(e * s + f * t)
            work += [e, f]
        enqueue(deg)
        settle()
    return list(pivots.values())


def _complete(seed: list[IntPoly]) -> list[IntPoly]:
    """Buchberger completion producing a fully interreduced strong basis.

    The basis is kept interreduced throughout: whenever a new element
    arrives, every older element that it (or the rest of the basis)
    rewrites is retired and its reduction re-queued.  Without this the
    integer coefficients explode -- an S-polynomial multiplies leading
    coefficients by lcm factors, and chains of those grow exponentially --
    whereas against an interreduced basis the symmetric remainders keep
    every coefficient comparable to the basis's own.  Pairs are processed
    smallest lcm first, with GCD-polynomials ahead of S-polynomials, so
    coefficient-shrinking elements (constants, content gcds) appear early.
    """
    basis: dict[int, IntPoly] = {}
    next_id = 0
    pair_heap: list[tuple[tuple[int, Exponent], int, int, int]] = []
    todo = [p for p in seed if p]
    tiebreak = 0
    while todo or pair_heap:
        if todo:
            cand = todo.pop()
        else:
            _, _, i, j = heapq.heappop(pair_heap)
            if i not in basis or j not in basis:
                continue
            todo += reversed(_pair_candidates(basis[i], basis[j]))
            continue
        r = _sign_normalized(_reduce(cand, list(basis.values())))
        if not r:
            continue
        rid = next_id
        next_id += 1
        # retire anything the enlarged basis rewrites, and re-queue it
        for bid, b in list(basis.items()):
            others = [p for k, p in basis.items() if k != bid] + [r]
            rb = _reduce(b, others)
            if rb != b:
                del basis[bid]
                if rb:
                    todo.append(rb)
        for bid, b in basis.items():
            lcm_exp = tuple(
                max(a, c) for a, c in zip(b.lead()[0], r.lead()[0])
            )
            tiebreak += 1
            heapq.heappush(pair_heap, (_order_key(lcm_exp), tiebreak, bid, rid))
        basis[rid] = r
    return list(basis.values())


def strong_gb(gens: list[IntPoly]) -> StrongGB:
    """A minimal strong Groebner basis of the ideal generated by ``gens``.

    Completion adds reduced S-polynomials (cancelling leading terms via the
    lcm of the leading coefficients) and GCD-polynomials (realizing the gcd
    of two leading coefficients by a Bezout combination) until every pair
    reduces to zero; the interreduction inside :func:`_complete` leaves the
    result minimal and tail-reduced.  Elements are sign-normalized and
    sorted by leading term.
    """
    if not gens:
        raise ValueError("strong_gb needs at least one generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("generators must share one ring")
    complete = _complete_univar if nvars == 1 else _complete
    basis = [_sign_normalized(b) for b in complete(list(gens)) if b]
    # interreduce until stable: drop members the rest of the basis rewrites
    # to zero and replace the rest by their reduced forms, leaving a minimal
    # basis whose representation does not depend on completion order
    changed = True
    while changed:
        changed = False
        for i, b in enumerate(basis):
            r = _sign_normalized(_reduce(b, basis[:i] + basis[i + 1 :]))
            if r != b:
                del basis[i]
                if r:
                    basis.append(r)
                changed = True
                break
    basis.sort(key=lambda b: (_order_key(b.lead()[0]), sorted(b.terms.items())))
    return StrongGB(tuple(basis), nvars)


def normal_form(f: IntPoly | int, gb: StrongGB) -> IntPoly:
    """The strong-reduction remainder of f; zero exactly when f is in the ideal."""
    if isinstance(f, int):
        f = IntPoly.const(gb.nvars, f)
    if f.nvars != gb.nvars:
        raise ValueError("polynomial and basis rings differ")
    return _reduce(f, list(gb.basis))


_SATURATION = IntPoly(2, {(1, 1): 1, (0, 0): -1})  # u*A - 1


def _embedded_generators(gens: Iterable[LaurentPoly]) -> list[IntPoly]:
    """Nonzero generators, rescaled and pre-reduced, embedded in Z[A, u].

    The expensive two-variable saturation run is seeded with a one-variable
    strong Groebner basis of the inputs rather than the raw generators:
    same ideal, but the univariate completion is cheap and collapses a pile
    of long bracket polynomials to a few short ones first.
    """
    one_var = [intpoly_from_laurent(rescale_min_const(g)[1], 1) for g in gens if g]
    if not one_var:
        return []
    reduced = strong_gb(one_var).basis
    return [IntPoly(2, {(e[0], 0): c for e, c in p.terms.items()}) for p in reduced]


def laurent_trivial(gens: list[LaurentPoly]) -> TrivialityCertificate:
    """Decide whether Laurent polynomials generate the unit ideal of Z[A, A^-1].

    The decision is exact: compute a strong Groebner basis of the rescaled
    generators together with the localization relation uA - 1; the Laurent
    ideal is trivial iff that basis is {1}.  A Nontrivial verdict carries,
    when one exists with p <= 101, a witness pair (p, a): a prime and a unit
    mod p killing every generator under A -> a, which certifies
    nontriviality independently of the Groebner computation.

    Raises:
        AllZero: every generator is the zero polynomial.
    """
    polys = _embedded_generators(gens)
    if not polys:
        raise AllZero("all ideal generators are zero")
    sat = strong_gb(polys + [_SATURATION])
    if any(b.is_one() for b in sat.basis):
        return TrivialityCertificate("Trivial", sat)
    witnesses = modp_kill_search([g for g in gens if g], 101)
    return TrivialityCertificate("Nontrivial", witnesses[0] if witnesses else None)


def ideal_equal(gens_a: list[LaurentPoly], gens_b: list[LaurentPoly]) -> bool:
    """True iff two Laurent-polynomial generating sets span the same ideal.

    Mutual membership through the saturated polynomial presentation: each
    generator of one side must have normal form zero against the strong
    Groebner basis of the other side plus uA - 1.
    """
    pa, pb = _embedded_generators(gens_a), _embedded_generators(gens_b)
    if not pa or not pb:
        return pa == pb  # only the zero ideal equals the zero ideal
    gb_a = strong_gb(pa + [_SATURATION])
    gb_b = strong_gb(pb + [_SATURATION])
    return all(not normal_form(q, gb_b) for q in pa) and all(
        not normal_form(q, gb_a) for q in pb
    )


def ideal_contains(members: list[LaurentPoly], gens: list[LaurentPoly]) -> bool:
    """True iff every polynomial in ``members`` lies in the ideal spanned by ``gens``.

    The one-sided half of :func:`ideal_equal`: normal forms of the members
    against the saturated strong Groebner basis of ``gens``.  Zero members
    are contained in anything; a nonzero member never lies in the zero ideal.
    """
    sub = _embedded_generators(members)
    if not sub:
        return True
    sup = _embedded_generators(gens)
    if not sup:
        return False
    gb = strong_gb(sup + [_SATURATION])
    return all(not normal_form(q, gb) for q in sub)


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for k in range(p * p, n + 1, p):
                sieve[k] = 0
    return out


def modp_kill_search(gens: list[LaurentPoly], pmax: int) -> list[tuple[int, int]]:
    """All pairs (prime p <= pmax, unit a mod p) killing every generator.

    A pair qualifies when eval_mod(g, a, p) == 0 for each generator g; any
    such pair proves the generators span a proper Laurent ideal, since a
    unit evaluation is a ring map Z[A, A^-1] -> Z_p.
    """
    if pmax < 2:
        raise ValueError("pmax must be at least 2")
    out = []
    for p in _primes_upto(pmax):
        for a in range(1, p):
            if all(eval_mod(g, a, p) == 0 for g in gens):
                out.append((p, a))
    return out
