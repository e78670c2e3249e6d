"""Combinatorial model of a convex polygon and its labeled triangulations.

Vertices of an (n+3)-gon are numbered 1..n+3 counterclockwise.  An arc is a
chord between two distinct vertices; it is a boundary edge when its endpoints
are circularly adjacent and a diagonal otherwise.  A triangulation stores its
2n+3 arcs by label: labels 1..n are the diagonals, and the boundary edge
{k, k+1} carries label n+k (vertex n+4 read as vertex 1).

Everything is decided by exact circular-interleaving arithmetic on vertex
indices; no coordinates or floating point appear anywhere, so every predicate
is exact and every ordering total on its intended inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, ResourceLimitError

# Largest rank accepted by the exhaustive enumerators (11-gon, 4862 triangulations).
MAX_ENUMERATION_RANK = 8


def ccw_steps(u: int, v: int, n_vertices: int) -> int:
    """Number of counterclockwise steps from vertex u to vertex v."""
    return (v - u) % n_vertices


def _require_vertex(v: int, n_vertices: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n_vertices:
        raise InputError(f"vertex {v!r} out of range 1..{n_vertices}")


@dataclass(frozen=True, order=True)
class Arc:
    """Unordered pair of distinct polygon vertices, stored with u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise InputError(f"arc endpoints must be distinct, got {self.u} twice")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def validate(self, n_vertices: int) -> None:
        _require_vertex(self.u, n_vertices)
        _require_vertex(self.v, n_vertices)

    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def is_incident(self, vertex: int) -> bool:
        return vertex == self.u or vertex == self.v

    def other_end(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise InputError(f"vertex {vertex} is not an endpoint of {self}")

    def is_boundary(self, n_vertices: int) -> bool:
        return ccw_steps(self.u, self.v, n_vertices) in (1, n_vertices - 1)

    def is_diagonal(self, n_vertices: int) -> bool:
        return not self.is_boundary(n_vertices)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


def crosses(d1: Arc, d2: Arc, n_vertices: int) -> bool:
    """Whether two arcs cross in the interior of the polygon.

    True exactly when the endpoint pairs strictly interleave around the
    circle.  Arcs sharing an endpoint never cross, and a boundary edge never
    crosses anything (no vertex lies strictly between adjacent vertices).
    """
    d1.validate(n_vertices)
    d2.validate(n_vertices)
    if d1.u in (d2.u, d2.v) or d1.v in (d2.u, d2.v):
        return False
    span = ccw_steps(d1.u, d1.v, n_vertices)
    inside_u = 0 < ccw_steps(d1.u, d2.u, n_vertices) < span
    inside_v = 0 < ccw_steps(d1.u, d2.v, n_vertices) < span
    return inside_u != inside_v


def crossing_position(d: Arc, origin: int, target: int, n_vertices: int) -> tuple[int, int]:
    """Rank pair that orders chords crossing {origin, target} by distance from origin.

    Writing d = {p, q} with p on the open counterclockwise walk origin->target
    and q on the clockwise one, the key is (steps to p, steps to q), each
    measured from origin along its own walk.  For two non-crossing chords that
    both cross the oriented chord, componentwise comparison of these keys is
    total and matches comparing the chords' intersection points with the
    segment origin-target; since the components can never pull in opposite
    directions for such chords, plain tuple comparison of keys realizes it.
    """
    span = ccw_steps(origin, target, n_vertices)
    ccw_rank = cw_rank = None
    for x in d.endpoints():
        s = ccw_steps(origin, x, n_vertices)
        if 0 < s < span:
            ccw_rank = s
        elif s > span:
            cw_rank = n_vertices - s
    if ccw_rank is None or cw_rank is None:
        raise InputError(f"{d} does not cross {origin}-{target}")
    return (ccw_rank, cw_rank)


def crosses_before(d1: Arc, d2: Arc, chord: Arc, origin: int, n_vertices: int) -> bool:
    """True when d1 meets the chord strictly nearer to origin than d2 does.

    Both arcs must cross the chord and must not cross each other; the order is
    then a strict total order, so exactly one of crosses_before(d1, d2, ...)
    and crosses_before(d2, d1, ...) holds.
    """
    if not chord.is_incident(origin):
        raise InputError(f"{origin} is not an endpoint of {chord}")
    if d1 == d2:
        raise InputError("arcs to compare must be distinct")
    if crosses(d1, d2, n_vertices):
        raise InputError(f"{d1} and {d2} cross each other; their order is undefined")
    target = chord.other_end(origin)
    k1 = crossing_position(d1, origin, target, n_vertices)
    k2 = crossing_position(d2, origin, target, n_vertices)
    return k1 < k2


@dataclass(frozen=True)
class FlipQuadrilateral:
    """The quadrilateral formed by the two triangles adjacent to a diagonal.

    ``opposite_pairs`` holds the four side labels grouped into the two pairs of
    opposite sides; ``replacement`` is the other diagonal of the quadrilateral.
    """

    label: int
    corners: tuple[int, int, int, int]
    replacement: Arc
    opposite_pairs: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class CrossingStep:
    """Quadrilateral data at the first crossing of an oriented chord.

    For a chord from ``origin`` to ``target`` not belonging to the
    triangulation, ``pivot`` labels the crossing diagonal nearest ``origin``.
    The triangle of the triangulation on the origin side of the pivot has apex
    ``origin``; its other two sides are the triangulation edges
    {origin, ccw_corner} and {origin, cw_corner}, where the corners are the
    pivot's endpoints on the counterclockwise and clockwise walks from origin
    to target.  ``ccw_far`` and ``cw_far`` close up the quadrilateral
    (origin, ccw_corner, target, cw_corner); they need not belong to the
    triangulation.  The one-step exchange identity reads

        x[chord] * x[pivot] == x[cw_side] * x[ccw_far] + x[ccw_side] * x[cw_far]
    """

    origin: int
    target: int
    pivot: int
    ccw_corner: int
    cw_corner: int
    ccw_side: int
    cw_side: int
    ccw_far: Arc
    cw_far: Arc


@dataclass(frozen=True)
class Triangulation:
    """A labeled triangulation of the (n+3)-gon.

    ``edges[i]`` is the arc with label i+1.  Construction validates the
    labeling convention, pairwise non-crossing of the diagonals and
    distinctness of all arcs; with exactly n non-crossing diagonals the set is
    automatically maximal.
    """

    n: int
    edges: tuple[Arc, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise InputError(f"rank must be at least 1, got {n}")
        nv = n + 3
        if len(self.edges) != 2 * n + 3:
            raise InputError(f"expected {2 * n + 3} labeled arcs, got {len(self.edges)}")
        for arc in self.edges:
            arc.validate(nv)
        for arc in self.edges[:n]:
            if not arc.is_diagonal(nv):
                raise InputError(f"boundary edge {arc} supplied as a diagonal")
        for k in range(1, nv + 1):
            expected = Arc(k, k % nv + 1)
            if self.edges[n + k - 1] != expected:
                raise InputError(
                    f"label {n + k} must carry boundary edge {expected}, got {self.edges[n + k - 1]}"
                )
        if len(set(self.edges)) != len(self.edges):
            raise InputError("duplicate arcs in triangulation")
        diags = self.edges[:n]
        for i in range(n):
            for j in range(i + 1, n):
                if crosses(diags[i], diags[j], nv):
                    raise InputError(f"diagonals {diags[i]} and {diags[j]} cross")

    @property
    def n_vertices(self) -> int:
        return self.n + 3

    @property
    def n_labels(self) -> int:
        return 2 * self.n + 3

    def arc(self, label: int) -> Arc:
        if not 1 <= label <= self.n_labels:
            raise InputError(f"label {label} out of range 1..{self.n_labels}")
        return self.edges[label - 1]

    def diagonal_arcs(self) -> tuple[Arc, ...]:
        return self.edges[: self.n]

    def boundary_arcs(self) -> tuple[Arc, ...]:
        return self.edges[self.n :]

    def diagonal_key(self) -> tuple[Arc, ...]:
        """Sorted diagonal set; identifies the triangulation up to relabeling."""
        return tuple(sorted(self.diagonal_arcs()))

    @cached_property
    def _label_by_arc(self) -> dict[Arc, int]:
        return {arc: i + 1 for i, arc in enumerate(self.edges)}

    def label_of(self, arc: Arc) -> int | None:
        return self._label_by_arc.get(arc)

    def contains(self, arc: Arc) -> bool:
        return arc in self._label_by_arc

    @cached_property
    def _incidence(self) -> dict[int, tuple[int, ...]]:
        by_vertex: dict[int, list[int]] = {v: [] for v in range(1, self.n_vertices + 1)}
        for label, arc in enumerate(self.edges, start=1):
            by_vertex[arc.u].append(label)
            by_vertex[arc.v].append(label)
        return {v: tuple(sorted(labels)) for v, labels in by_vertex.items()}

    def incident_labels(self, vertex: int) -> tuple[int, ...]:
        _require_vertex(vertex, self.n_vertices)
        return self._incidence[vertex]

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """All triangles, as ascending vertex triples in ascending order."""
        present = self._label_by_arc
        out = []
        nv = self.n_vertices
        for u in range(1, nv - 1):
            for v in range(u + 1, nv):
                if Arc(u, v) not in present:
                    continue
                for w in range(v + 1, nv + 1):
                    if Arc(u, w) in present and Arc(v, w) in present:
                        out.append((u, v, w))
        return tuple(out)

    def quadrilateral(self, k: int) -> FlipQuadrilateral:
        """The quadrilateral whose diagonals are T_k and its flip replacement."""
        if not 1 <= k <= self.n:
            raise InputError(f"label {k} does not name a diagonal (1..{self.n})")
        d = self.edges[k - 1]
        apexes = [
            w
            for w in range(1, self.n_vertices + 1)
            if w not in (d.u, d.v)
            and self.contains(Arc(w, d.u))
            and self.contains(Arc(w, d.v))
        ]
        assert len(apexes) == 2, f"diagonal {d} should bound exactly two triangles"
        corners = tuple(sorted((d.u, d.v, *apexes)))
        p0, p1, p2, p3 = corners
        replacement = Arc(p1, p3) if d == Arc(p0, p2) else Arc(p0, p2)

        def side(a: int, b: int) -> int:
            lab = self.label_of(Arc(a, b))
            assert lab is not None, "quadrilateral sides always belong to the triangulation"
            return lab

        pairs = ((side(p0, p1), side(p2, p3)), (side(p1, p2), side(p3, p0)))
        return FlipQuadrilateral(k, corners, replacement, pairs)

    def flip(self, k: int) -> "Triangulation":
        """Replace the diagonal labeled k by the other diagonal of its quadrilateral."""
        quad = self.quadrilateral(k)
        new_edges = list(self.edges)
        new_edges[k - 1] = quad.replacement
        return Triangulation(self.n, tuple(new_edges))

    def crossing_labels(self, chord: Arc) -> list[int]:
        """Labels of the diagonals crossing the given arc, in label order."""
        chord.validate(self.n_vertices)
        return [
            lab
            for lab in range(1, self.n + 1)
            if crosses(self.edges[lab - 1], chord, self.n_vertices)
        ]

    def crossing_labels_from(self, chord: Arc, origin: int) -> list[int]:
        """Diagonals crossing the chord, ordered by crossing point from origin.

        Empty exactly when the chord belongs to the triangulation.
        """
        if not chord.is_diagonal(self.n_vertices):
            raise InputError(f"{chord} is a boundary edge; only diagonals can be crossed")
        if not chord.is_incident(origin):
            raise InputError(f"{origin} is not an endpoint of {chord}")
        target = chord.other_end(origin)
        labels = self.crossing_labels(chord)
        labels.sort(
            key=lambda lab: crossing_position(self.edges[lab - 1], origin, target, self.n_vertices)
        )
        return labels


def build_triangulation(
    n: int,
    diagonals: list[tuple[int, int]],
    label_order: list[int] | None = None,
) -> Triangulation:
    """Assemble a triangulation from its n diagonals.

    Diagonal labels follow the input order, or ``label_order`` when given
    (entry i is the label the i-th input pair receives).  Boundary labels
    always follow the {k, k+1} -> n+k convention.
    """
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    nv = n + 3
    if len(diagonals) != n:
        raise InputError(f"expected {n} diagonals, got {len(diagonals)}")
    arcs = []
    for u, v in diagonals:
        arc = Arc(u, v)
        arc.validate(nv)
        if arc.is_boundary(nv):
            raise InputError(f"{arc} is a boundary edge, not a diagonal")
        arcs.append(arc)
    if label_order is not None:
        if sorted(label_order) != list(range(1, n + 1)):
            raise InputError(f"label_order must be a permutation of 1..{n}")
        ordered = list(arcs)
        for arc, label in zip(arcs, label_order):
            ordered[label - 1] = arc
        arcs = ordered
    boundary = [Arc(k, k % nv + 1) for k in range(1, nv + 1)]
    return Triangulation(n, tuple(arcs) + tuple(boundary))


def snake_triangulation(n: int) -> Triangulation:
    """The zigzag triangulation: {2,4}, then fanning alternately from both ends.

    The diagonals are the consecutive pairs of the walk 2, 4, 1, 5, n+3, 6, ...
    whose even entries step down from 2 and odd entries step up from 4.
    """
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    nv = n + 3
    walk = [2, 4]
    lo, hi = 2, 4
    while len(walk) < n + 1:
        if len(walk) % 2 == 0:
            lo -= 1
            walk.append((lo - 1) % nv + 1)
        else:
            hi += 1
            walk.append(hi)
    return build_triangulation(n, [(walk[i], walk[i + 1]) for i in range(n)])


def first_crossing_step(t: Triangulation, chord: Arc, origin: int) -> CrossingStep | None:
    """Locate the quadrilateral at the chord's first crossing from origin.

    Returns None when nothing crosses, i.e. when the chord belongs to the
    triangulation.
    """
    ordered = t.crossing_labels_from(chord, origin)
    if not ordered:
        return None
    pivot = ordered[0]
    target = chord.other_end(origin)
    nv = t.n_vertices
    span = ccw_steps(origin, target, nv)
    pivot_arc = t.arc(pivot)
    ccw_corner = cw_corner = None
    for x in pivot_arc.endpoints():
        if 0 < ccw_steps(origin, x, nv) < span:
            ccw_corner = x
        else:
            cw_corner = x
    assert ccw_corner is not None and cw_corner is not None
    ccw_side = t.label_of(Arc(origin, ccw_corner))
    cw_side = t.label_of(Arc(origin, cw_corner))
    # The triangle on the origin side of the nearest crossing has apex origin,
    # so both sides exist in the triangulation.
    assert ccw_side is not None and cw_side is not None
    return CrossingStep(
        origin=origin,
        target=target,
        pivot=pivot,
        ccw_corner=ccw_corner,
        cw_corner=cw_corner,
        ccw_side=ccw_side,
        cw_side=cw_side,
        ccw_far=Arc(ccw_corner, target),
        cw_far=Arc(cw_corner, target),
    )


def all_polygon_diagonals(n: int) -> list[Arc]:
    """Every diagonal of the (n+3)-gon, sorted."""
    nv = n + 3
    return sorted(
        Arc(u, v)
        for u in range(1, nv + 1)
        for v in range(u + 1, nv + 1)
        if Arc(u, v).is_diagonal(nv)
    )


def _canonical(t: Triangulation) -> Triangulation:
    return build_triangulation(t.n, [arc.endpoints() for arc in t.diagonal_key()])


def flip_graph(n: int) -> tuple[list[Triangulation], list[tuple[int, int]]]:
    """All triangulations of the (n+3)-gon and the flips connecting them.

    Produced by breadth-first flips from the snake triangulation, deduplicated
    by diagonal arc-set; nodes come back sorted by that arc-set with labels
    canonicalized to sorted order, edges as index pairs into the node list.
    """
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    if n > MAX_ENUMERATION_RANK:
        raise ResourceLimitError(
            f"exhaustive enumeration is guarded at rank {MAX_ENUMERATION_RANK}, got {n}"
        )
    start = _canonical(snake_triangulation(n))
    keys = {start.diagonal_key(): start}
    edge_keys: set[tuple[tuple[Arc, ...], tuple[Arc, ...]]] = set()
    queue = [start]
    while queue:
        t = queue.pop(0)
        for k in range(1, n + 1):
            neighbor = _canonical(t.flip(k))
            nk = neighbor.diagonal_key()
            if nk not in keys:
                keys[nk] = neighbor
                queue.append(neighbor)
            a, b = sorted((t.diagonal_key(), nk))
            edge_keys.add((a, b))
    order = sorted(keys)
    index = {key: i for i, key in enumerate(order)}
    nodes = [keys[key] for key in order]
    edges = sorted((index[a], index[b]) for a, b in edge_keys)
    return nodes, edges


def all_triangulations(n: int) -> list[Triangulation]:
    """Every triangulation of the (n+3)-gon, canonically labeled and ordered."""
    nodes, _ = flip_graph(n)
    return nodes
