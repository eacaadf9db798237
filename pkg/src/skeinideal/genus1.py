"""Bracket ideals of tangles in a solid torus.

The Kauffman bracket skein module of the solid torus is the polynomial ring
Z[A, A^-1][z], where z is the core-parallel curve.  A 1-tangle G sitting in
the solid torus (a "genus-1 tangle") has a well-defined skein class only
after its ends are tied off, but pairing G against curves in the
*complementary* solid torus of a Heegaard splitting of S^3 produces honest
bracket polynomials, and the collection of all such pairings generates an
ideal of Z[A, A^-1] that obstructs embedding G into another knot.

Two families of complementary curves suffice.  Writing phi_i for the
eigenvalue of a small circle encircling an i-colored strand and

    Q_n = (z - phi_0)(z - phi_1) ... (z - phi_{n-1}),

the x-family places Q_n on a meridian-parallel circle and the y-family
additionally passes the tangle's closing arc once through the encircling
rings.  Both pairings are computed diagrammatically by
:func:`skeinideal.diagrams.ring_closure`; this module supplies the exact
closed forms of the pairings between the families themselves, extracts the
finite generating set of the bracket ideal, and recovers the coefficients of
the tangle in the trivalent-graph basis by a linear solve over the fraction
field.  Conventions follow Kauffman and Lins, "Temperley-Lieb Recoupling
Theory and Invariants of 3-Manifolds" (1994).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .diagrams import Genus1Presentation, ring_closure
from .errors import Inadmissible, SingularSystem, TruncationViolation
from .laurent import ONE, LaurentFraction, LaurentPoly, delta, div_exact
from .recoupling import admissible, delta_n, lambda_coeff, phi, sigma, theta
from .tl import eval_word

__all__ = [
    "QExpansion",
    "GeneratorSet",
    "GraphCoeffs",
    "q_expand",
    "qq_pair",
    "pair_basis",
    "removingq_factor",
    "basespairing_x",
    "basespairing_y",
    "generators",
    "recover_graph_coeffs",
]


@dataclass(frozen=True)
class QExpansion:
    """The polynomial Q_n written out in powers of z.

    ``coeffs[k]`` is the coefficient of z^k, a Laurent polynomial in A; the
    leading coefficient ``coeffs[n]`` is 1 and the others are the signed
    elementary symmetric polynomials in phi_0, ..., phi_{n-1}.
    """

    n: int
    coeffs: Mapping[int, LaurentPoly]


@dataclass(frozen=True)
class GeneratorSet:
    """The finite generating set of a genus-1 tangle's bracket ideal.

    ``gen_x[j]`` and ``gen_y[j]`` are the pairings of the tangle with the
    x- and y-family curves decorated by Q_j, already divided by delta, for
    0 <= j <= bound.  Pairings beyond ``bound`` vanish identically (this is
    checked at construction), so the stored values generate the whole ideal.
    """

    presentation: Genus1Presentation
    gen_x: tuple[LaurentPoly, ...]
    gen_y: tuple[LaurentPoly, ...]
    bound: int


@dataclass(frozen=True)
class GraphCoeffs:
    """Coefficients of a tangle in the trivalent-graph basis of the torus.

    ``c[i, eps]`` is the coefficient of the graph-basis element whose core
    circle carries color i and whose doubled edge carries color eps, with
    eps = i +- 1.  Coefficients live in the fraction field; for honest
    tangles the denominators divide products of quantum integers.
    """

    c: Mapping[tuple[int, int], LaurentFraction]
    bound: int


def q_expand(n: int) -> QExpansion:
    """Expand Q_n = (z - phi_0)...(z - phi_{n-1}) in powers of z.

    >>> q_expand(1).coeffs[0] == -phi(0)
    True
    """
    if n < 0:
        raise ValueError(f"Q_n needs n >= 0, got {n}")
    coeffs: dict[int, LaurentPoly] = {0: ONE}
    for i in range(n):
        root = phi(i)
        nxt: dict[int, LaurentPoly] = {}
        for k, c in coeffs.items():
            nxt[k + 1] = nxt.get(k + 1, LaurentPoly()) + c
            nxt[k] = nxt.get(k, LaurentPoly()) - c * root
        coeffs = {k: c for k, c in nxt.items() if c}
    return QExpansion(n, coeffs)


def qq_pair(n: int) -> LaurentPoly:
    """Hopf pairing of Q_n with itself: Delta_n * prod_{i<n} (phi_n - phi_i).

    Delta_n is the loop value of an n-colored unknot.  The product runs over
    the roots of Q_n, so qq_pair(0) is the empty product 1.
    """
    if n < 0:
        raise ValueError(f"Q_n needs n >= 0, got {n}")
    total = delta_n(n)
    pn = phi(n)
    for i in range(n):
        total = total * (pn - phi(i))
    return total


_KINDS = ("x", "y")


def pair_basis(kind1: str, m: int, kind2: str, n: int) -> LaurentPoly:
    """Relative Hopf pairing between x/y basis curves, in closed form.

    The x_n curve carries Q_n on a circle parallel to the solid torus's
    meridian disk boundary; y_n is the same with the dual handlebody's core
    passing once through the circle.  The pairing is symmetric and almost
    orthogonal: it vanishes unless the indices agree or (for mixed and y-y
    pairs) differ by exactly one.

    Args:
        kind1, kind2: "x" or "y".
        m, n: decoration degrees, >= 0.
    """
    for kind in (kind1, kind2):
        if kind not in _KINDS:
            raise ValueError(f"kind must be 'x' or 'y', got {kind!r}")
    if m < 0 or n < 0:
        raise ValueError("decoration degrees must be nonnegative")
    if kind1 == kind2 == "x":
        return delta() * qq_pair(m) if m == n else LaurentPoly()
    if kind1 == kind2 == "y":
        if m == n:
            inner = LaurentPoly.monomial(1, -2 * m) * sigma(m) - LaurentPoly.monomial(
                1, -2 * m + 2
            ) * sigma(m - 1)
            return LaurentPoly.monomial(1, -6) * inner * qq_pair(m)
        if abs(m - n) == 1:
            k = max(m, n)
            return LaurentPoly.monomial(1, -2 * k - 4) * qq_pair(k)
        return LaurentPoly()
    # mixed pairing, normalized to <x_a, y_b>
    a, b = (m, n) if kind1 == "x" else (n, m)
    if a == b + 1:
        return qq_pair(a)
    if a == b:
        return phi(a) * qq_pair(a)
    return LaurentPoly()


def removingq_factor(i: int, j: int) -> LaurentPoly:
    """Scalar left after an i-colored strand absorbs an encircling Q_j.

    A small circle around an i-colored (Jones-Wenzl) strand multiplies it by
    phi_i, so decorating the circle with Q_j multiplies the strand by
    Q_j(phi_i) = prod_{k<j} (phi_i - phi_k).  The empty product (j = 0) is 1,
    and the factor vanishes whenever j > i because phi_i - phi_i appears.
    """
    if i < 0 or j < 0:
        raise ValueError("colors must be nonnegative")
    total = ONE
    pi = phi(i)
    for k in range(j):
        total = total * (pi - phi(k))
    return total


def _theta_poly(i: int, eps: int) -> LaurentPoly:
    """theta(1, eps, i) as a polynomial, or raise Inadmissible."""
    if not admissible(1, eps, i):
        raise Inadmissible(f"(1, {eps}, {i}) is not an admissible triple")
    return theta(1, eps, i).as_poly()


def basespairing_x(i: int, eps: int, j: int) -> LaurentPoly:
    """Pairing of the graph-basis element g_{i,eps} with the x_j curve.

    Equals theta(1, eps, i) * prod_{k<j} (phi_i - phi_k): fusing the doubled
    core onto the graph vertex leaves a theta network, and each ring of the
    Q_j decoration contributes the eigenvalue phi_i.  Vanishes for j > i.

    Raises:
        Inadmissible: (1, i, eps) violates the fusion rules.
    """
    return _theta_poly(i, eps) * removingq_factor(i, j)


def basespairing_y(i: int, eps: int, j: int) -> LaurentFraction:
    """Pairing of the graph-basis element g_{i,eps} with the y_j curve.

    The through-passing core adds two half twists that undo at the vertex at
    the cost of the inverse twist coefficients:
    theta(1, eps, i) * (lambda^{1,i}_eps)^-1 * (lambda^{i,1}_eps)^-1
    * prod_{k<j} (phi_i - phi_k).

    Raises:
        Inadmissible: (1, i, eps) violates the fusion rules.
    """
    twist = lambda_coeff(1, i, eps) * lambda_coeff(i, 1, eps)
    value = basespairing_x(i, eps, j) * twist.inverse_unit()
    return LaurentFraction(value)


def generators(g: Genus1Presentation) -> GeneratorSet:
    """Generating set of the bracket ideal of a genus-1 tangle.

    For each j up to the meridian width m, pair the tangle with the x_j and
    y_j curves: close it with k encircling rings (``ring_closure``), weight
    by the z-expansion of Q_j, evaluate the bracket, and divide by delta.
    The pairings at j = m + 1 are computed too and must vanish; they are the
    cheapest whole-pipeline consistency check we have, so their failure is
    promoted to an error rather than ignored.

    Raises:
        TruncationViolation: a j = m + 1 pairing came out nonzero, which
            signals a width-bookkeeping or diagram-convention bug.
    """
    m = g.meridian_width
    d = delta()
    brackets = {
        (k, through): eval_word(ring_closure(g, k, through))
        for k in range(m + 2)
        for through in (False, True)
    }

    def pairing(j: int, through: bool) -> LaurentPoly:
        total = LaurentPoly()
        for k, c in q_expand(j).coeffs.items():
            total = total + c * brackets[k, through]
        return div_exact(total, d)

    xs = [pairing(j, False) for j in range(m + 2)]
    ys = [pairing(j, True) for j in range(m + 2)]
    if xs[m + 1] or ys[m + 1]:
        raise TruncationViolation(
            f"pairing at j = {m + 1} is nonzero for meridian width {m}"
        )
    return GeneratorSet(g, tuple(xs[: m + 1]), tuple(ys[: m + 1]), m)


def _solve(
    rows: list[list[LaurentFraction]], rhs: list[LaurentFraction]
) -> list[LaurentFraction]:
    """Solve an overdetermined exact linear system, or raise SingularSystem."""
    ncols = len(rows[0])
    mat = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivot_rows: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(mat)) if mat[k][col]), None)
        if pivot is None:
            raise SingularSystem(f"pairing matrix is rank deficient at column {col}")
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col]:
                factor = mat[k][col]
                mat[k] = [v - factor * w for v, w in zip(mat[k], mat[r])]
        pivot_rows.append(r)
        r += 1
    for k in range(r, len(mat)):
        if mat[k][ncols]:
            raise SingularSystem("pairing system is inconsistent with the generators")
    return [mat[k][ncols] for k in pivot_rows]


def recover_graph_coeffs(
    g: Genus1Presentation, gens: GeneratorSet | None = None
) -> GraphCoeffs:
    """Coefficients of the tangle in the trivalent-graph basis.

    Writes the tangle as sum c_{i,eps} g_{i,eps} by solving the linear
    system  sum c_{i,eps} * basespairing(i, eps, j) = delta * gen[j]  over
    the fraction field, with one equation per x and y pairing, j <= bound.
    The system has one more equation than unknowns; the extra equation is
    checked for consistency.

    Raises:
        SingularSystem: the pairing matrix is singular or the system is
            inconsistent (either contradicts basis independence).
    """
    if gens is None:
        gens = generators(g)
    m = gens.bound
    pairs = [(i, e) for i in range(m + 1) for e in (i - 1, i + 1) if e >= 0]
    d = delta()
    rows: list[list[LaurentFraction]] = []
    rhs: list[LaurentFraction] = []
    for j in range(m + 1):
        rows.append([LaurentFraction(basespairing_x(i, e, j)) for i, e in pairs])
        rhs.append(LaurentFraction(gens.gen_x[j] * d))
    for j in range(m + 1):
        rows.append([basespairing_y(i, e, j) for i, e in pairs])
        rhs.append(LaurentFraction(gens.gen_y[j] * d))
    solution = _solve(rows, rhs)
    return GraphCoeffs(dict(zip(pairs, solution)), m)
