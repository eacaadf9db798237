"""Exact arithmetic in Z[A, A^-1] and its fraction field.

``LaurentPoly`` is the coefficient ring for every bracket computed by this
library; ``LaurentFraction`` is the localization needed once quantum integers
get inverted (Jones-Wenzl coefficients, recoupling ratios, recovered graph
coefficients).  Both are immutable and hashable, with arbitrary-precision
integer coefficients throughout — Groebner intermediates and 40-crossing
brackets both overflow fixed-width types in practice.

Text form (ascending exponents, explicit ``A^0``)::

    >>> str(parse_laurent("1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8"))
    '1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8'
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotDivisible, NotInvertible, ParseError, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "LaurentFraction",
    "A",
    "ONE",
    "ZERO",
    "delta",
    "mul",
    "div_exact",
    "divides",
    "eval_mod",
    "rescale_min_const",
    "subst_power",
    "parse_laurent",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """A Laurent polynomial in A with integer coefficients.

    Stored densely as a valuation plus a coefficient tuple; the constructor
    canonicalizes, so structural equality is semantic equality.

    >>> p = LaurentPoly({2: -1, -2: -1})   # delta
    >>> p * p
    LaurentPoly('1*A^-4 + 2*A^0 + 1*A^4')
    >>> p - p
    LaurentPoly('0')
    >>> (p ** 3).min_exp, (p ** 3).max_exp
    (-6, 6)
    """

    __slots__ = ("val", "coeffs")

    val: int
    coeffs: tuple[int, ...]

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        elif not isinstance(terms, Mapping):
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        exps = sorted(e for e, c in terms.items() if c)
        if not exps:
            object.__setattr__(self, "val", 0)
            object.__setattr__(self, "coeffs", ())
            return
        lo, hi = exps[0], exps[-1]
        dense = [0] * (hi - lo + 1)
        for e in exps:
            dense[e - lo] = terms[e]
        object.__setattr__(self, "val", lo)
        object.__setattr__(self, "coeffs", tuple(dense))

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def monomial(coeff: int, exp: int) -> LaurentPoly:
        """c * A^e."""
        return LaurentPoly({exp: coeff})

    @classmethod
    def _raw(cls, val: int, coeffs: list[int]) -> LaurentPoly:
        """Build from a dense list, trimming zeros at both ends."""
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        obj = object.__new__(cls)
        object.__setattr__(obj, "val", val + lo if lo < hi else 0)
        object.__setattr__(obj, "coeffs", tuple(coeffs[lo:hi]))
        return obj

    # -- basic queries ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def min_exp(self) -> int:
        """Lowest exponent with nonzero coefficient (0 for the zero poly)."""
        return self.val

    @property
    def max_exp(self) -> int:
        return self.val + len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def terms(self) -> dict[int, int]:
        """Exponent -> coefficient map (no zero entries)."""
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def coeff(self, exp: int) -> int:
        i = exp - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def is_unit(self) -> bool:
        """True iff the poly is +-A^k, i.e. a unit of Z[A, A^-1]."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def content(self) -> int:
        """Gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.val, other.val)
        hi = max(self.max_exp, other.max_exp)
        dense = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            dense[self.val - lo + i] = c
        for i, c in enumerate(other.coeffs):
            dense[other.val - lo + i] += c
        return LaurentPoly._raw(lo, dense)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.val, [-c for c in self.coeffs])

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    if ca:
                        out[i + j] += ca * cb
        return LaurentPoly._raw(self.val + other.val, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_unit():
                return self.inverse_unit() ** (-n)
            raise NotDivisible(f"negative power of non-unit {self}")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by A^k (exponent shift)."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.val + k, list(self.coeffs))

    def inverse_unit(self) -> LaurentPoly:
        """Inverse of a unit +-A^k."""
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit of Z[A, A^-1]")
        return LaurentPoly.monomial(self.coeffs[0], -self.val)

    def mirror(self) -> LaurentPoly:
        """The image under A -> A^-1 (coefficients reversed)."""
        return subst_power(self, -1)

    # -- comparisons / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.val, self.coeffs))

    # -- evaluation ------------------------------------------------------------

    def eval_fraction(self, x: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational (test/oracle use)."""
        if x == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        total = Fraction(0)
        for e, c in self.items():
            total += c * x**e
        return total

    # -- presentation ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce(x: object) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    return NotImplemented  # type: ignore[return-value]


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
A = LaurentPoly.monomial(1, 1)


def delta() -> LaurentPoly:
    """The loop value -A^2 - A^-2."""
    return _DELTA


_DELTA = LaurentPoly({2: -1, -2: -1})


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Product in Z[A, A^-1]."""
    return p * q


def div_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p/q in Z[A, A^-1].

    Division runs top-down on ordinary polynomial parts; every step of an
    exact division has an integral leading quotient, so the first failure
    (non-integral step or nonzero low-degree remainder) proves q does not
    divide p.

    Raises:
        NotDivisible: q = 0, or the remainder is nonzero.
    """
    if not q:
        raise NotDivisible("division by zero polynomial")
    if not p:
        return ZERO
    rem = {d: c for d, c in enumerate(p.coeffs) if c}  # degree -> coeff, rel. p.val
    qc = q.coeffs
    qdeg = len(qc) - 1
    out: dict[int, int] = {}
    while rem:
        rdeg = max(rem)
        if rdeg < qdeg:
            raise NotDivisible(f"{q} does not divide {p}")
        lead, r = divmod(rem[rdeg], qc[-1])
        if r:
            raise NotDivisible(f"{q} does not divide {p}")
        out[rdeg - qdeg] = lead
        for i, c in enumerate(qc):
            if c:
                d = rdeg - qdeg + i
                nv = rem.get(d, 0) - lead * c
                if nv:
                    rem[d] = nv
                else:
                    rem.pop(d, None)
    return LaurentPoly({p.val - q.val + d: c for d, c in out.items()})


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    """True iff q divides p exactly in Z[A, A^-1]."""
    if not q:
        return not p
    try:
        div_exact(p, q)
        return True
    except NotDivisible:
        return False


def eval_mod(p: LaurentPoly, a: int, m: int) -> int:
    """Image of p under A -> a in Z_m.

    Raises:
        NotInvertible: gcd(a, m) != 1, so A^-1 has no image.
    """
    if m <= 0:
        raise NotInvertible(f"modulus {m} must be positive")
    a %= m
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit mod {m}")
    ainv = pow(a, -1, m)
    total = 0
    for e, c in p.items():
        base = a if e >= 0 else ainv
        total = (total + c * pow(base, abs(e), m)) % m
    return total


def rescale_min_const(p: LaurentPoly) -> tuple[int, LaurentPoly]:
    """Shift so the lowest term is the constant: returns (shift, A^shift * p).

    Raises:
        ZeroPolynomial: on p = 0.
    """
    if not p:
        raise ZeroPolynomial("cannot rescale the zero polynomial")
    return -p.val, p.shifted(-p.val)


def subst_power(p: LaurentPoly, k: int) -> LaurentPoly:
    """Substitute A -> A^k (each exponent e becomes k*e); k must be nonzero."""
    if k == 0:
        raise ZeroPolynomial("substitution power must be nonzero")
    return LaurentPoly({k * e: c for e, c in p.items()})


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the serialization produced by ``str``: `c*A^e + c*A^e + ...`.

    Raises:
        ParseError: on any malformed term.
    """
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[int, int] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        try:
            cpart, apart = chunk.split("*")
            if not apart.startswith("A^"):
                raise ValueError
            e = int(apart[2:])
            c = int(cpart)
        except ValueError:
            raise ParseError(f"malformed Laurent term {chunk!r}") from None
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# Fractions
# ---------------------------------------------------------------------------


def _int_content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense integer polynomials (low-to-high)."""
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        if lb != 1:
            a = [c * lb for c in a]
        for i in range(db):
            a[shift + i] -= la * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Gcd of the polynomial parts in Z[A]/units: primitive with lead > 0.

    Computed by a primitive pseudo-remainder sequence, so every intermediate
    stays over the integers.
    """
    a, b = list(p.coeffs), list(q.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        if r:
            cg = _int_content(r)
            if cg > 1:
                r = [c // cg for c in r]
        a, b = b, r
    cg = _int_content(a)
    if cg > 1:
        a = [c // cg for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return LaurentPoly(dict(enumerate(a)))


def _gcd_full(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """The genuine gcd in Z[A] up to units: primitive part times content."""
    g = _poly_gcd(p, q)
    cg = gcd(p.content(), q.content())
    if cg > 1:
        g = LaurentPoly._raw(g.val, [c * cg for c in g.coeffs])
    return g


def _cross_reduce(a: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Divide a common factor (polynomial and content) out of two polys."""
    g = _poly_gcd(a, d)
    if g != ONE:
        a = div_exact(a, g)
        d = div_exact(d, g)
    cg = gcd(a.content(), d.content())
    if cg > 1:
        a = LaurentPoly._raw(a.val, [c // cg for c in a.coeffs])
        d = LaurentPoly._raw(d.val, [c // cg for c in d.coeffs])
    return a, d


def _frac_normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Move the denominator's unit part into the numerator."""
    num = num.shifted(-den.val)
    den = den.shifted(-den.val)
    if den.coeffs[-1] < 0:
        num, den = -num, -den
    return num, den


class LaurentFraction:
    """A reduced fraction of Laurent polynomials.

    The representative is canonical: the denominator is an ordinary
    polynomial (valuation 0) with positive leading coefficient, the numerator
    and denominator share no polynomial factor, and their integer contents
    are coprime.  Equality is therefore structural.

    >>> d = delta()
    >>> f = LaurentFraction(ONE, d) + LaurentFraction(ONE, d)   # 2/delta
    >>> f * LaurentFraction(d) == LaurentFraction(2)
    True
    >>> LaurentFraction(d * d, d).as_poly() == d
    True
    """

    __slots__ = ("num", "den")

    num: LaurentPoly
    den: LaurentPoly

    def __init__(self, num: Scalar | LaurentPoly, den: Scalar | LaurentPoly = 1):
        num = _coerce(num)
        den = _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("LaurentFraction components must be LaurentPoly or int")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = ONE
        elif den != ONE:
            num, den = _cross_reduce(num, den)
            # denominator: valuation 0, positive lead; unit part moves to num
            num, den = _frac_normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _reduced(cls, num: LaurentPoly, den: LaurentPoly) -> LaurentFraction:
        """Build from parts already known to share no common factor."""
        if not num:
            den = ONE
        elif den != ONE:
            num, den = _frac_normalize(num, den)
        f = object.__new__(cls)
        object.__setattr__(f, "num", num)
        object.__setattr__(f, "den", den)
        return f

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        g = _gcd_full(self.den, other.den)
        if g == ONE:
            # coprime denominators: the sum is already reduced
            return LaurentFraction._reduced(
                self.num * other.den + other.num * self.den,
                self.den * other.den,
            )
        da, db = div_exact(self.den, g), div_exact(other.den, g)
        num = self.num * db + other.num * da
        den = da * other.den
        # only a factor of g can survive into num
        g2 = _gcd_full(num, g)
        if g2 != ONE:
            num, den = div_exact(num, g2), div_exact(den, g2)
        return LaurentFraction._reduced(num, den)

    __radd__ = __add__

    def __neg__(self) -> LaurentFraction:
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return _FRACTION_ZERO
        a, b = self.num, self.den
        c, d = other.num, other.den
        # cross-reduce so the product of reduced parts is already reduced
        if d != ONE:
            a, d = _cross_reduce(a, d)
        if b != ONE:
            c, b = _cross_reduce(c, b)
        return LaurentFraction._reduced(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero fraction")
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> LaurentFraction:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> LaurentFraction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return LaurentFraction._reduced(self.den, self.num)

    def __eq__(self, other: object) -> bool:
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_poly(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> LaurentPoly:
        """The fraction as a LaurentPoly, if the denominator reduced to a unit.

        Raises:
            NotDivisible: the reduced denominator is not 1.
        """
        if self.den == ONE:
            return self.num
        # canonical form leaves no hidden unit in den, so this always raises
        return div_exact(self.num, self.den)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"LaurentFraction({str(self.num)!r}, {str(self.den)!r})"


def _coerce_frac(x: object) -> LaurentFraction:
    if isinstance(x, LaurentFraction):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return LaurentFraction(x)
    return NotImplemented  # type: ignore[return-value]


_FRACTION_ZERO = LaurentFraction(0)
