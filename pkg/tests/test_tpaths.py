"""Path validation, pruned enumeration vs brute force, weight monomials."""

import pytest

from ptolemy import (
    Arc,
    InputError,
    Monomial,
    ResourceLimitError,
    TPath,
    all_polygon_diagonals,
    all_triangulations,
    brute_force_t_paths,
    enumerate_t_paths,
    is_valid_t_path,
    path_weight,
)
from conftest import OCTAGON_PATHS, exponents


def small_instances(max_rank):
    for n in range(1, max_rank + 1):
        for t in all_triangulations(n):
            for chord in all_polygon_diagonals(n):
                for origin in chord.endpoints():
                    yield t, origin, chord.other_end(origin)


class TestValidator:
    def test_listed_path_is_valid(self, octagon):
        path = TPath((3, 2, 6, 7), (7, 3, 11))
        assert is_valid_t_path(octagon, 3, 7, path).ok

    def test_non_crossing_even_edge(self, octagon):
        # chain holds together but the even edge 2-8 misses the chord 3-7
        path = TPath((3, 2, 8, 7), (7, 4, 12))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 5

    def test_even_length(self, octagon):
        path = TPath((3, 2, 6, 8, 7), (7, 3, 5, 12))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 4

    def test_wrong_endpoints(self, octagon):
        path = TPath((2, 6, 7), (3, 11))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 1

    def test_broken_chain_reports_lowest_rule(self, octagon):
        # swapping label 3 for 4 breaks the vertex chain before anything else
        path = TPath((3, 2, 6, 7), (7, 4, 11))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 2

    def test_repeated_label(self, octagon):
        path = TPath((3, 2, 3, 2, 6, 7), (7, 7, 7, 3, 11))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 3

    def test_out_of_order_crossings(self, octagon):
        # chain holds, even edges cross, but the second crossing is nearer to 3
        path = TPath((3, 2, 6, 4, 2, 8, 6, 7), (7, 3, 2, 1, 4, 5, 11))
        check = is_valid_t_path(octagon, 3, 7, path)
        assert not check.ok and check.violated == 6

    def test_malformed_input(self, octagon):
        with pytest.raises(InputError):
            is_valid_t_path(octagon, 3, 7, TPath((3, 7), (99,)))
        with pytest.raises(InputError):
            is_valid_t_path(octagon, 3, 7, TPath((3, 2, 7), (7,)))
        with pytest.raises(InputError):
            is_valid_t_path(octagon, 3, 4, TPath((3, 4), (8,)))


class TestEnumerate:
    def test_octagon_lists_all_five(self, octagon):
        paths = enumerate_t_paths(octagon, 3, 7)
        assert [(p.vertices, p.labels) for p in paths] == OCTAGON_PATHS

    def test_contained_chord_gives_single_edge(self, octagon):
        paths = enumerate_t_paths(octagon, 4, 6)
        assert [(p.vertices, p.labels) for p in paths] == [((4, 6), (2,))]

    def test_square_has_two(self, square):
        paths = enumerate_t_paths(square, 2, 4)
        assert [(p.vertices, p.labels) for p in paths] == [
            ((2, 1, 3, 4), (2, 1, 4)),
            ((2, 3, 1, 4), (3, 1, 5)),
        ]

    def test_adjacent_or_equal_rejected(self, square):
        with pytest.raises(InputError):
            enumerate_t_paths(square, 1, 2)
        with pytest.raises(InputError):
            enumerate_t_paths(square, 1, 1)

    def test_every_emission_validates(self, octagon):
        for p in enumerate_t_paths(octagon, 7, 3):
            assert is_valid_t_path(octagon, 7, 3, p).ok

    def test_matches_brute_force(self):
        for t, source, target in small_instances(3):
            assert set(enumerate_t_paths(t, source, target)) == set(
                brute_force_t_paths(t, source, target)
            )

    def test_structural_bounds(self):
        for t, source, target in small_instances(3):
            crossing = set(t.crossing_labels_from(Arc(source, target), source))
            for p in enumerate_t_paths(t, source, target):
                assert p.length <= 2 * t.n + 3
                even = p.labels[1::2]
                assert len(even) <= len(crossing)
                assert set(even) <= crossing


class TestBruteForce:
    def test_guard(self, octagon):
        with pytest.raises(ResourceLimitError):
            brute_force_t_paths(octagon, 3, 7)

    def test_adjacent_rejected(self, square):
        with pytest.raises(InputError):
            brute_force_t_paths(square, 1, 2)


class TestWeights:
    def test_three_edge_path(self):
        nv = 13
        w = path_weight(TPath((3, 2, 6, 7), (7, 3, 11)), nv)
        assert w == Monomial(1, exponents(nv, {7: 1, 11: 1, 3: -1}))

    def test_single_edge_path(self):
        nv = 13
        assert path_weight(TPath((4, 6), (2,)), nv) == Monomial(1, exponents(nv, {2: 1}))

    def test_seven_edge_path(self):
        nv = 13
        w = path_weight(TPath((3, 2, 4, 6, 2, 8, 6, 7), (7, 1, 2, 3, 4, 5, 11)), nv)
        assert w == Monomial(
            1, exponents(nv, {7: 1, 2: 1, 4: 1, 11: 1, 1: -1, 3: -1, 5: -1})
        )

    def test_weights_distinct_and_reduced(self):
        for t, source, target in small_instances(3):
            nv = 2 * t.n + 3
            paths = enumerate_t_paths(t, source, target)
            weights = [path_weight(p, nv).exponents for p in paths]
            assert len(set(weights)) == len(weights)
            crossing = set(t.crossing_labels(Arc(source, target)))
            for exps in weights:
                assert all(e in (-1, 0, 1) for e in exps)
                negatives = {i + 1 for i, e in enumerate(exps) if e < 0}
                assert negatives <= crossing
