"""Paths on a triangulation that expand the cluster variable of a chord.

For non-adjacent vertices a and b of the polygon, the admissible paths from a
to b over the edges of a triangulation are those satisfying six rules:

  1. the vertex sequence starts at a and ends at b;
  2. each listed label names an edge joining its consecutive vertices;
  3. no edge label repeats;
  4. the number of edges is odd;
  5. every even-position edge crosses the chord a-b;
  6. the edges crossing the chord appear in strictly increasing order of
     crossing point, walking the chord from a.

Rule 6 constrains every crossing edge wherever it sits, not just the
even-position ones; odd-position edges may cross the chord and some valid
paths rely on that.  Vertices may repeat, including visits to b mid-path: the
rules restrict edges only, and emitting a path never terminates its branch of
the search.

``enumerate_t_paths`` prunes on the rules during a depth-first search;
``brute_force_t_paths`` generates every edge-distinct walk and filters with
the validator, serving as its independent oracle at small rank.  Both list
paths in lexicographic order of their label sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ResourceLimitError
from .laurent import Monomial
from .polygon import Arc, Triangulation, crosses, crossing_position

# brute_force_t_paths walks every edge-distinct path; keep it to small ranks.
MAX_BRUTE_FORCE_RANK = 4


@dataclass(frozen=True)
class TPath:
    """Vertex sequence plus the edge labels joining consecutive vertices."""

    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        verts = ",".join(str(v) for v in self.vertices)
        labs = ",".join(str(i) for i in self.labels)
        return f"({verts} | {labs})"


@dataclass(frozen=True)
class PathCheck:
    """Validation outcome: ok, or the lowest-numbered violated rule."""

    ok: bool
    violated: int | None = None
    detail: str = ""


def _require_endpoints(t: Triangulation, source: int, target: int) -> Arc:
    chord = Arc(source, target)
    chord.validate(t.n_vertices)
    if chord.is_boundary(t.n_vertices):
        raise InputError(f"vertices {source} and {target} are adjacent")
    return chord


def is_valid_t_path(t: Triangulation, source: int, target: int, candidate: TPath) -> PathCheck:
    """Check the six rules, reporting the first one violated.

    Malformed candidates (labels out of range, vertex/label length mismatch)
    are input errors rather than rule violations.
    """
    chord = _require_endpoints(t, source, target)
    nv = t.n_vertices
    for v in candidate.vertices:
        if not 1 <= v <= nv:
            raise InputError(f"vertex {v} out of range 1..{nv}")
    for lab in candidate.labels:
        if not 1 <= lab <= t.n_labels:
            raise InputError(f"label {lab} out of range 1..{t.n_labels}")
    if len(candidate.vertices) != len(candidate.labels) + 1:
        raise InputError(
            f"{len(candidate.labels)} labels need {len(candidate.labels) + 1} vertices, "
            f"got {len(candidate.vertices)}"
        )

    if candidate.vertices[0] != source or candidate.vertices[-1] != target:
        return PathCheck(False, 1, "path must run from the source vertex to the target")
    for k, lab in enumerate(candidate.labels, start=1):
        arc = t.arc(lab)
        if {arc.u, arc.v} != {candidate.vertices[k - 1], candidate.vertices[k]}:
            return PathCheck(
                False, 2, f"edge {lab} does not join {candidate.vertices[k - 1]} and {candidate.vertices[k]}"
            )
    if len(set(candidate.labels)) != len(candidate.labels):
        return PathCheck(False, 3, "repeated edge label")
    if candidate.length % 2 == 0:
        return PathCheck(False, 4, f"even length {candidate.length}")

    keys = {
        lab: crossing_position(t.arc(lab), source, target, nv)
        for lab in candidate.labels
        if crosses(t.arc(lab), chord, nv)
    }
    for k, lab in enumerate(candidate.labels, start=1):
        if k % 2 == 0 and lab not in keys:
            return PathCheck(False, 5, f"even-position edge {lab} does not cross the chord")
    last = None
    for lab in candidate.labels:
        key = keys.get(lab)
        if key is None:
            continue
        if last is not None and key <= last:
            return PathCheck(False, 6, f"edge {lab} crosses out of order")
        last = key
    return PathCheck(True)


def enumerate_t_paths(t: Triangulation, source: int, target: int) -> list[TPath]:
    """All admissible paths from source to target, pruned search.

    States track the current vertex, the set of used labels, the parity of the
    next position and the crossing key of the last chord-crossing edge; any new
    crossing edge must cross strictly later, and even positions must cross.
    Emission happens at every odd-length arrival at the target, and the branch
    keeps extending afterwards.
    """
    _require_endpoints(t, source, target)
    nv = t.n_vertices
    cross_key = {
        lab: crossing_position(t.arc(lab), source, target, nv)
        for lab in t.crossing_labels(Arc(source, target))
    }
    incidence = {v: t.incident_labels(v) for v in range(1, nv + 1)}
    arcs = t.edges
    out: list[TPath] = []
    vertices = [source]
    labels: list[int] = []

    def extend(vertex: int, used: int, last_key: tuple[int, int] | None) -> None:
        odd_position = len(labels) % 2 == 0
        for lab in incidence[vertex]:
            bit = 1 << lab
            if used & bit:
                continue
            key = cross_key.get(lab)
            if key is None:
                if not odd_position:
                    continue
            elif last_key is not None and key <= last_key:
                continue
            nxt = arcs[lab - 1].other_end(vertex)
            labels.append(lab)
            vertices.append(nxt)
            if nxt == target and len(labels) % 2 == 1:
                path = TPath(tuple(vertices), tuple(labels))
                assert is_valid_t_path(t, source, target, path).ok
                out.append(path)
            extend(nxt, used | bit, key if key is not None else last_key)
            labels.pop()
            vertices.pop()

    extend(source, 0, None)
    return out


def brute_force_t_paths(t: Triangulation, source: int, target: int) -> list[TPath]:
    """Oracle enumeration: every edge-distinct walk, filtered by the validator.

    No rule is used for pruning beyond edge distinctness, so agreement with
    ``enumerate_t_paths`` exercises the pruned search end to end.  Guarded to
    small ranks; the walk count grows quickly.
    """
    if t.n > MAX_BRUTE_FORCE_RANK:
        raise ResourceLimitError(
            f"brute-force enumeration is guarded at rank {MAX_BRUTE_FORCE_RANK}, got {t.n}"
        )
    _require_endpoints(t, source, target)
    incidence = {v: t.incident_labels(v) for v in range(1, t.n_vertices + 1)}
    arcs = t.edges
    out: list[TPath] = []
    vertices = [source]
    labels: list[int] = []

    def extend(vertex: int, used: int) -> None:
        for lab in incidence[vertex]:
            bit = 1 << lab
            if used & bit:
                continue
            nxt = arcs[lab - 1].other_end(vertex)
            labels.append(lab)
            vertices.append(nxt)
            if nxt == target and len(labels) % 2 == 1:
                path = TPath(tuple(vertices), tuple(labels))
                if is_valid_t_path(t, source, target, path).ok:
                    out.append(path)
            extend(nxt, used | bit)
            labels.pop()
            vertices.pop()

    extend(source, 0)
    return out


def path_weight(path: TPath, nvars: int) -> Monomial:
    """The path's monomial: odd-position labels up, even-position labels down."""
    exps = [0] * nvars
    for k, lab in enumerate(path.labels, start=1):
        if not 1 <= lab <= nvars:
            raise InputError(f"label {lab} out of range 1..{nvars}")
        exps[lab - 1] += 1 if k % 2 == 1 else -1
    return Monomial(1, tuple(exps))
