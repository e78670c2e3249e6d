"""Laurent expansion of a chord's cluster variable as a sum over paths.

``expand`` sums the weight monomials of all admissible paths between the
chord's endpoints.  The remaining functions turn the structural facts behind
that formula into executable checks: the expansion's denominators match the
crossing pattern, the paths partition by their first edge, and the two path
families are in weight-preserving bijection with the path sets of the
quadrilateral's far sides.  The checks return reports naming each offending
path so a search bug is diagnosable, not just detectable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .laurent import LaurentPolynomial, Monomial
from .polygon import Arc, CrossingStep, Triangulation, first_crossing_step
from .tpaths import TPath, enumerate_t_paths, path_weight


def expand(t: Triangulation, chord: Arc, origin: int | None = None) -> LaurentPolynomial:
    """Laurent polynomial of the chord in the triangulation's variables.

    ``origin`` picks which endpoint anchors the crossing order during
    enumeration; the result is independent of the choice (asserted by the
    test suite, not assumed here) and defaults to the smaller endpoint.
    A chord already in the triangulation is its own variable.
    """
    nv = t.n_vertices
    chord.validate(nv)
    if chord.is_boundary(nv):
        raise InputError(f"{chord} is a boundary edge; only diagonals have expansions")
    if origin is None:
        origin = chord.u
    elif not chord.is_incident(origin):
        raise InputError(f"{origin} is not an endpoint of {chord}")
    nvars = t.n_labels
    label = t.label_of(chord)
    if label is not None:
        return LaurentPolynomial.variable(label, nvars)
    paths = enumerate_t_paths(t, origin, chord.other_end(origin))
    return LaurentPolynomial.from_monomials(nvars, (path_weight(p, nvars) for p in paths))


def expand_trivial_coefficients(
    t: Triangulation, chord: Arc, origin: int | None = None
) -> LaurentPolynomial:
    """Expansion with every boundary variable set to 1, terms merged."""
    full = expand(t, chord, origin)
    return full.substitute_ones(range(t.n + 1, t.n_labels + 1))


def check_positivity(poly: LaurentPolynomial) -> bool:
    """True when every stored coefficient equals 1."""
    return all(coeff == 1 for coeff in poly.coefficients())


def denominator_vector(t: Triangulation, chord: Arc) -> tuple[int, ...]:
    """Per-variable denominator exponents of the chord's expansion.

    Entry i is the largest power of 1/x_i appearing in any term (0 when x_i
    never appears inverted).  The result must coincide with the indicator of
    which diagonals cross the chord, with every boundary entry zero; a
    mismatch means the enumeration itself is broken, so it is asserted here.
    """
    poly = expand(t, chord)
    vec = tuple(max(0, -poly.min_exponent(i)) for i in range(1, t.n_labels + 1))
    crossing = set(t.crossing_labels(chord))
    expected = tuple(1 if i in crossing else 0 for i in range(1, t.n_labels + 1))
    assert vec == expected, f"denominators {vec} disagree with crossings {expected}"
    return vec


def _paths_between(t: Triangulation, source: int, target: int) -> list[TPath]:
    """Path set between any two distinct vertices.

    Adjacent vertices get the single one-edge path along their boundary edge,
    which is what the one-step exchange identity needs for its far sides.
    """
    boundary = Arc(source, target)
    if boundary.is_boundary(t.n_vertices):
        label = t.label_of(boundary)
        assert label is not None
        return [TPath((source, target), (label,))]
    return enumerate_t_paths(t, source, target)


def _step_or_raise(t: Triangulation, source: int, target: int) -> CrossingStep:
    step = first_crossing_step(t, Arc(source, target), source)
    if step is None:
        raise InputError(
            f"{Arc(source, target)} belongs to the triangulation; nothing to decompose"
        )
    return step


@dataclass
class PartitionReport:
    """Outcome of the first-edge partition check."""

    ok: bool
    pivot: int
    first_edges: tuple[int, int]
    total: int
    by_first: dict[int, int]
    failures: list[str] = field(default_factory=list)


def check_partitions(t: Triangulation, source: int, target: int) -> PartitionReport:
    """Every path starts with one of the two triangle sides at the source, and
    each family splits by whether the pivot comes second or never appears."""
    step = _step_or_raise(t, source, target)
    paths = enumerate_t_paths(t, source, target)
    first_edges = (step.cw_side, step.ccw_side)
    by_first = {step.cw_side: 0, step.ccw_side: 0}
    failures = []
    for path in paths:
        first = path.labels[0]
        if first not in by_first:
            failures.append(f"{path} starts with edge {first}, not one of {first_edges}")
            continue
        by_first[first] += 1
        second_is_pivot = path.length > 1 and path.labels[1] == step.pivot
        pivot_free = step.pivot not in path.labels
        if second_is_pivot == pivot_free:
            failures.append(
                f"{path} neither has the pivot {step.pivot} second nor avoids it"
            )
    return PartitionReport(
        ok=not failures,
        pivot=step.pivot,
        first_edges=first_edges,
        total=len(paths),
        by_first=by_first,
        failures=failures,
    )


@dataclass
class BijectionReport:
    """Outcome of the start-edge bijection and weight-transfer check."""

    ok: bool
    pivot: int
    counts: dict[str, int]
    failures: list[str] = field(default_factory=list)


def _weight_ratio(nvars: int, up: int, down: int) -> Monomial:
    exps = [0] * nvars
    exps[up - 1] += 1
    exps[down - 1] -= 1
    return Monomial(1, tuple(exps))


def check_bijections_fg(t: Triangulation, source: int, target: int) -> BijectionReport:
    """Verify the two weight-preserving bijections behind the one-step recursion.

    Paths from a quadrilateral corner to the target map into the family of
    source paths starting with that corner's opposite side: replace a leading
    pivot edge by the side (when the path starts with the pivot), or prepend
    the side followed by the pivot (when the path avoids the pivot).  Images
    must land in the claimed subfamilies, be distinct, jointly exhaust the
    family, and scale each weight by side/pivot; the two sides together must
    also account for every source path and for the summed polynomials.
    """
    step = _step_or_raise(t, source, target)
    nvars = t.n_labels
    paths = enumerate_t_paths(t, source, target)
    path_set = set(paths)
    failures: list[str] = []
    counts: dict[str, int] = {"total": len(paths)}
    family_sum: dict[int, LaurentPolynomial] = {}
    corner_total = 0

    sides = (
        # (corner the far paths start from, first edge of the image family,
        #  vertex the rewritten paths step to first)
        (step.ccw_corner, step.cw_side, step.cw_corner),
        (step.cw_corner, step.ccw_side, step.ccw_corner),
    )
    for corner, side, via in sides:
        corner_paths = _paths_between(t, corner, target)
        corner_total += len(corner_paths)
        family = [p for p in paths if p.labels[0] == side]
        family_sum[side] = LaurentPolynomial.from_monomials(
            nvars, (path_weight(p, nvars) for p in family)
        )
        counts[f"family_{side}"] = len(family)
        counts[f"corner_{corner}"] = len(corner_paths)
        ratio = _weight_ratio(nvars, side, step.pivot)
        images = []
        for gamma in corner_paths:
            if gamma.labels[0] == step.pivot:
                image = TPath((source,) + gamma.vertices[1:], (side,) + gamma.labels[1:])
                expected_family = "pivot-free"
                in_family = step.pivot not in image.labels
            elif step.pivot not in gamma.labels:
                image = TPath(
                    (source, via) + gamma.vertices, (side, step.pivot) + gamma.labels
                )
                expected_family = "pivot-second"
                in_family = image.length > 1 and image.labels[1] == step.pivot
            else:
                failures.append(
                    f"{gamma} from corner {corner} contains the pivot {step.pivot} "
                    "after its first edge"
                )
                continue
            if image not in path_set:
                failures.append(f"image {image} of {gamma} is not an admissible path")
                continue
            if not in_family:
                failures.append(f"image {image} of {gamma} missed the {expected_family} family")
            if path_weight(image, nvars) != path_weight(gamma, nvars) * ratio:
                failures.append(f"weight of {image} is not weight({gamma})*x{side}/x{step.pivot}")
            images.append(image)
        if len(set(images)) != len(images):
            failures.append(f"images from corner {corner} collide")
        if set(images) != set(family):
            failures.append(
                f"images from corner {corner} do not exhaust the paths starting with {side}"
            )
        transported = LaurentPolynomial.from_monomials(
            nvars, (path_weight(g, nvars) * ratio for g in corner_paths)
        )
        if transported != family_sum[side]:
            failures.append(f"summed weights from corner {corner} mismatch family {side}")

    if corner_total != len(paths):
        failures.append(
            f"corner path counts {corner_total} do not add up to {len(paths)}"
        )
    return BijectionReport(ok=not failures, pivot=step.pivot, counts=counts, failures=failures)
