"""Independent computation route: seed data and the one-step exchange recursion.

The sign matrix records oriented triangle adjacency of the triangulation's
edges, the coefficient pairs collect its boundary rows, and
``cluster_variable_recursive`` computes a chord's Laurent polynomial without
ever enumerating paths, by peeling off one crossing at a time through the
exchange identity.  Agreement of this recursion with the path-sum expansion is
the library's central cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .laurent import LaurentPolynomial, TropicalMonomial
from .polygon import Arc, Triangulation, first_crossing_step


@dataclass(frozen=True)
class ExchangeMatrix:
    """(2n+3) x n sign matrix of oriented triangle adjacencies."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def top_block(self) -> tuple[tuple[int, ...], ...]:
        return tuple(row[: self.n] for row in self.rows[: self.n])

    def render(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


def exchange_matrix(t: Triangulation) -> ExchangeMatrix:
    """Sign matrix of the triangulation.

    Entry (i, j) is +1 when edges i and j bound a common triangle and edge j
    immediately follows edge i on a clockwise walk around that triangle
    (vertices being numbered counterclockwise, a clockwise walk visits them in
    decreasing circular order), -1 for the reverse, 0 otherwise.  Columns only
    exist for diagonals.
    """
    n = t.n
    rows = [[0] * n for _ in range(t.n_labels)]
    def label(a: int, b: int) -> int:
        lab = t.label_of(Arc(a, b))
        assert lab is not None, "triangle sides always belong to the triangulation"
        return lab

    for u, v, w in t.triangles:
        # Clockwise traversal of ascending vertices u < v < w: w -> v -> u -> w.
        cw_edges = (label(w, v), label(v, u), label(u, w))
        for idx in range(3):
            i, j = cw_edges[idx], cw_edges[(idx + 1) % 3]
            if j <= n:
                rows[i - 1][j - 1] = 1
            if i <= n:
                rows[j - 1][i - 1] = -1
    return ExchangeMatrix(n, tuple(tuple(row) for row in rows))


def initial_coefficients(
    t: Triangulation,
) -> tuple[tuple[TropicalMonomial, TropicalMonomial], ...]:
    """Per-diagonal coefficient pairs read off the matrix's boundary rows.

    The j-th pair multiplies the boundary variables whose rows carry +1,
    respectively -1, in column j; an empty product is the unit monomial.
    """
    matrix = exchange_matrix(t)
    n = t.n
    pairs = []
    for j in range(1, n + 1):
        plus = [i for i in range(n + 1, t.n_labels + 1) if matrix.entry(i, j) == 1]
        minus = [i for i in range(n + 1, t.n_labels + 1) if matrix.entry(i, j) == -1]
        pairs.append(
            (TropicalMonomial.from_labels(n, plus), TropicalMonomial.from_labels(n, minus))
        )
    return tuple(pairs)


@dataclass(frozen=True)
class ExchangeRelation:
    """x[flipped] * x[replacement] = x[a]*x[c] + x[b]*x[d] for the flip at one label."""

    flipped: int
    replacement: Arc
    pairs: tuple[tuple[int, int], tuple[int, int]]

    def render(self) -> str:
        (a, c), (b, d) = self.pairs
        return f"x{self.flipped}*x[{self.replacement}] = x{a}*x{c} + x{b}*x{d}"


def exchange_relation(t: Triangulation, k: int) -> ExchangeRelation:
    """Side labels of the flip quadrilateral at k, grouped into opposite pairs.

    The relation is symmetric under swapping the two pairs, so any fixed
    grouping works; sides here pair up across the ascending circular order of
    the quadrilateral's corners.
    """
    quad = t.quadrilateral(k)
    return ExchangeRelation(k, quad.replacement, quad.opposite_pairs)


def crossing_count(t: Triangulation, arc: Arc) -> int:
    """Number of the triangulation's diagonals crossing the given arc."""
    return len(t.crossing_labels(arc))


def cluster_variable_recursive(
    t: Triangulation, arc: Arc, origin: int | None = None
) -> LaurentPolynomial:
    """Laurent polynomial of any arc, by induction on its crossing count.

    An arc of the triangulation is its own variable.  Otherwise the
    quadrilateral at the first crossing from ``origin`` yields

        x[arc] = (x[cw_side] * x[ccw_far] + x[ccw_side] * x[cw_far]) / x[pivot]

    where both far arcs cross strictly fewer diagonals, so the recursion
    terminates; division is by a single variable, hence exact.  Results are
    memoized per arc, confined to this call.  ``origin`` orients only the top
    step (recursive steps orient canonically); the result does not depend on
    it, which the test suite asserts.
    """
    nv = t.n_vertices
    arc.validate(nv)
    if origin is not None and not arc.is_incident(origin):
        raise InputError(f"{origin} is not an endpoint of {arc}")
    nvars = t.n_labels
    memo: dict[Arc, LaurentPolynomial] = {}

    def resolve(current: Arc, anchor: int) -> LaurentPolynomial:
        cached = memo.get(current)
        if cached is not None:
            return cached
        label = t.label_of(current)
        if label is not None:
            poly = LaurentPolynomial.variable(label, nvars)
        else:
            step = first_crossing_step(t, current, anchor)
            assert step is not None, f"{current} is not in the triangulation yet crosses nothing"
            numerator = LaurentPolynomial.variable(step.cw_side, nvars) * resolve(
                step.ccw_far, step.ccw_far.u
            ) + LaurentPolynomial.variable(step.ccw_side, nvars) * resolve(
                step.cw_far, step.cw_far.u
            )
            poly = numerator.divide_by_variable(step.pivot)
        memo[current] = poly
        return poly

    return resolve(arc, origin if origin is not None else arc.u)
