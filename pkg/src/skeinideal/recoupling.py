"""Closed-form coefficients of colored trivalent-graph calculus.

Conventions follow the standard references (Kauffman & Lins, *Temperley-Lieb
Recoupling Theory and Invariants of 3-Manifolds*, 1994; Masbaum & Vogel,
*3-valent graphs and the Kauffman bracket*, 1994), with loop value
delta = -A^2 - A^-2 and quantum integer [k] = (A^{2k} - A^{-2k})/(A^2 - A^-2).
A strand "colored" n carries the n-th Jones-Wenzl idempotent; the closed
n-colored loop evaluates to Delta_n = (-1)^n [n+1].

Every formula here is cross-validated against the diagrammatic
Temperley-Lieb engine (:mod:`skeinideal.tl`) at small colors in the test
suite; the closed forms are what production code calls.

Values that are genuinely ratios (theta and tet at some colors — e.g.
theta(2,2,2) = -[3][4]/[2]^2 — and all 6j symbols) are returned as
:class:`~skeinideal.laurent.LaurentFraction`; callers that know their value
is polynomial convert with ``.as_poly()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Inadmissible
from .laurent import ONE, LaurentFraction, LaurentPoly, delta

__all__ = [
    "AdmissibleTriple",
    "admissible",
    "quantum_int",
    "quantum_factorial",
    "delta_n",
    "theta",
    "tet",
    "lambda_coeff",
    "sixj",
    "phi",
    "sigma",
    "fusion_coeffs",
]


def admissible(a: int, b: int, c: int) -> bool:
    """Triangle inequality |a-b| <= c <= a+b together with even total."""
    if a < 0 or b < 0 or c < 0:
        return False
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0


@dataclass(frozen=True)
class AdmissibleTriple:
    """A color triple allowed to meet at a trivalent vertex.

    Raises:
        Inadmissible: if the triple fails the triangle or parity condition.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not admissible(self.a, self.b, self.c):
            raise Inadmissible(f"({self.a}, {self.b}, {self.c})")

    @property
    def internal(self) -> tuple[int, int, int]:
        """Arc counts (i, j, k) routed opposite a, b, c inside the vertex."""
        return (
            (self.b + self.c - self.a) // 2,
            (self.a + self.c - self.b) // 2,
            (self.a + self.b - self.c) // 2,
        )


@lru_cache(maxsize=None)
def quantum_int(k: int) -> LaurentPoly:
    """[k] = A^{2k-2} + A^{2k-6} + ... + A^{-(2k-2)}; [0] = 0, [1] = 1."""
    if k < 0:
        return -quantum_int(-k)
    return LaurentPoly({2 * k - 2 - 4 * j: 1 for j in range(k)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n <= 0:
        return ONE
    return quantum_factorial(n - 1) * quantum_int(n)


@lru_cache(maxsize=None)
def delta_n(n: int) -> LaurentPoly:
    """Value of the closed n-colored loop: Delta_0 = 1, Delta_1 = delta,
    Delta_{n+1} = delta*Delta_n - Delta_{n-1}."""
    if n == 0:
        return ONE
    if n == 1:
        return delta()
    return delta() * delta_n(n - 1) - delta_n(n - 2)


@lru_cache(maxsize=None)
def theta(a: int, b: int, c: int) -> LaurentFraction:
    """The theta net with edges colored a, b, c.

    With internal arc counts i, j, k (see :class:`AdmissibleTriple`):

        theta = (-1)^{i+j+k} [i+j+k+1]! [i]! [j]! [k]! / ([i+j]! [j+k]! [i+k]!)

    Raises:
        Inadmissible: if (a, b, c) is not admissible.
    """
    i, j, k = AdmissibleTriple(a, b, c).internal
    sign = -1 if (i + j + k) % 2 else 1
    num = (
        quantum_factorial(i + j + k + 1)
        * quantum_factorial(i)
        * quantum_factorial(j)
        * quantum_factorial(k)
        * sign
    )
    den = quantum_factorial(i + j) * quantum_factorial(j + k) * quantum_factorial(i + k)
    return LaurentFraction(num, den)


@lru_cache(maxsize=None)
def tet(a: int, b: int, e: int, c: int, d: int, f: int) -> LaurentFraction:
    """The tetrahedral net Tet[a b e; c d f].

    The four vertices carry the triples (a,d,e), (b,c,e), (a,b,f), (c,d,f).
    Writing a_i for the vertex half-sums and b_j for the half-sums of the
    three "squares" (pairs of opposite edges), the value is

        (prod_{i,j} [b_j - a_i]! / prod_edges [edge]!)
        * sum_{max a_i <= s <= min b_j}
            (-1)^s [s+1]! / (prod_i [s - a_i]! prod_j [b_j - s]!)

    Raises:
        Inadmissible: if any vertex triple is inadmissible.
    """
    for triple in ((a, d, e), (b, c, e), (a, b, f), (c, d, f)):
        if not admissible(*triple):
            raise Inadmissible(f"tet vertex {triple}")
    avals = [(a + d + e) // 2, (b + c + e) // 2, (a + b + f) // 2, (c + d + f) // 2]
    bvals = [(b + d + e + f) // 2, (a + c + e + f) // 2, (a + b + c + d) // 2]
    interior = ONE
    for bj in bvals:
        for ai in avals:
            interior = interior * quantum_factorial(bj - ai)
    edge_fact = ONE
    for edge in (a, b, c, d, e, f):
        edge_fact = edge_fact * quantum_factorial(edge)
    total = LaurentFraction(0)
    for s in range(max(avals), min(bvals) + 1):
        term_num = quantum_factorial(s + 1) * (-1 if s % 2 else 1)
        term_den = ONE
        for ai in avals:
            term_den = term_den * quantum_factorial(s - ai)
        for bj in bvals:
            term_den = term_den * quantum_factorial(bj - s)
        total = total + LaurentFraction(term_num, term_den)
    return LaurentFraction(interior, edge_fact) * total


def lambda_coeff(a: int, b: int, c: int) -> LaurentPoly:
    """Twist eigenvalue: crossing two strands colored a, b emanating from a
    c-colored vertex costs lambda^{ab}_c = (-1)^{(a+b-c)/2} A^{(a(a+2)+b(b+2)-c(c+2))/2}.

    Raises:
        Inadmissible: if (a, b, c) is not admissible (also guarantees the
        half-integer exponent is integral).
    """
    if not admissible(a, b, c):
        raise Inadmissible(f"({a}, {b}, {c})")
    exp2 = a * (a + 2) + b * (b + 2) - c * (c + 2)
    assert exp2 % 2 == 0, "admissibility must force an integral exponent"
    sign = -1 if ((a + b - c) // 2) % 2 else 1
    return LaurentPoly.monomial(sign, exp2 // 2)


def sixj(a: int, b: int, i: int, c: int, d: int, j: int) -> LaurentFraction:
    """Recoupling matrix entry: Tet[a b i; c d j] * Delta_i / (theta(a,d,i) theta(b,c,i)).

    Raises:
        Inadmissible: if any of the four vertex triples is inadmissible.
    """
    for triple in ((a, d, i), (b, c, i), (a, b, j), (c, d, j)):
        if not admissible(*triple):
            raise Inadmissible(f"sixj vertex {triple}")
    return (
        tet(a, b, i, c, d, j)
        * LaurentFraction(delta_n(i))
        / (theta(a, d, i) * theta(b, c, i))
    )


def phi(i: int) -> LaurentPoly:
    """Eigenvalue of encircling an i-colored strand: phi_i = -A^{2i+2} - A^{-2i-2}."""
    if i < 0:
        raise ValueError(f"color {i} must be nonnegative")
    return LaurentPoly({2 * i + 2: -1, -2 * i - 2: -1})


def sigma(n: int) -> LaurentPoly:
    """Partial sum sigma_n = phi_0 + ... + phi_n (and sigma_{-1} = 0)."""
    total = LaurentPoly()
    for i in range(n + 1):
        total = total + phi(i)
    return total


def fusion_coeffs(a: int, b: int) -> list[tuple[int, LaurentFraction]]:
    """Decomposition of two parallel strands colored a, b into vertex channels:
    pairs (i, Delta_i / theta(a, b, i)) over all admissible i."""
    out = []
    for i in range(abs(a - b), a + b + 1, 2):
        out.append((i, LaurentFraction(delta_n(i)) / theta(a, b, i)))
    return out
