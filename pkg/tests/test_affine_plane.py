import itertools

import pytest

from pathramsey.affine_plane import (build_plane, classes_as_point_sets,
                                     find_incidence_isomorphism)

ORDERS = [2, 3, 4, 5, 7, 8, 9]

# the published order-3 class listing, point labels 1..9
PUBLISHED_Q3_CLASSES = [
    [(1, 2, 3), (4, 5, 6), (7, 8, 9)],
    [(1, 4, 7), (2, 5, 8), (3, 6, 9)],
    [(1, 5, 9), (2, 6, 7), (3, 4, 8)],
    [(3, 5, 7), (1, 6, 8), (2, 4, 9)],
]


@pytest.mark.parametrize("q", ORDERS)
def test_counts(q):
    plane = build_plane(q)
    assert plane.n_points == q * q
    assert plane.n_lines == q * q + q
    assert len(plane.classes) == q + 1
    assert all(len(line) == q for line in plane.lines)


@pytest.mark.parametrize("q", ORDERS)
def test_unique_line_through_every_pair(q):
    plane = build_plane(q)
    seen = {}
    for idx, line in enumerate(plane.lines):
        for a, b in itertools.combinations(line, 2):
            assert (a, b) not in seen
            seen[(a, b)] = idx
    assert len(seen) == q * q * (q * q - 1) // 2
    for (a, b), idx in seen.items():
        assert plane.line_through(a, b) == idx


@pytest.mark.parametrize("q", ORDERS)
def test_classes_partition_points(q):
    plane = build_plane(q)
    for cls in plane.classes:
        assert len(cls) == q
        covered = [p for i in cls for p in plane.lines[i]]
        assert sorted(covered) == list(range(1, q * q + 1))


@pytest.mark.parametrize("q", ORDERS)
def test_line_intersections(q):
    plane = build_plane(q)
    cls_of = {i: plane.class_of(i) for i in range(plane.n_lines)}
    for i, j in itertools.combinations(range(plane.n_lines), 2):
        common = set(plane.lines[i]) & set(plane.lines[j])
        if cls_of[i] == cls_of[j]:
            assert not common
        else:
            assert len(common) == 1


@pytest.mark.parametrize("q", ORDERS)
def test_incidence_double_count(q):
    plane = build_plane(q)
    total = sum(len(line) for line in plane.lines)
    assert total == q ** 3 + q ** 2
    per_point = [0] * (q * q + 1)
    for line in plane.lines:
        for p in line:
            per_point[p] += 1
    assert all(c == q + 1 for c in per_point[1:])


def test_q2_classes_are_perfect_matchings():
    plane = build_plane(2)
    for cls in plane.classes:
        lines = [set(plane.lines[i]) for i in cls]
        assert len(lines) == 2
        assert not lines[0] & lines[1]
        assert lines[0] | lines[1] == {1, 2, 3, 4}


def test_q2_all_pairs_distinct_lines():
    plane = build_plane(2)
    hit = {plane.line_through(a, b)
           for a, b in itertools.combinations(range(1, 5), 2)}
    assert len(hit) == 6


def test_line_through_errors():
    plane = build_plane(3)
    with pytest.raises(ValueError):
        plane.line_through(1, 1)
    with pytest.raises(ValueError):
        plane.line_through(0, 1)
    with pytest.raises(ValueError):
        plane.class_of(99)


def test_rejects_bad_orders():
    for q in (0, 1, 6, 10, 17):
        with pytest.raises(ValueError):
            build_plane(q)


def test_q3_matches_published_listing():
    plane = build_plane(3)
    mapping = find_incidence_isomorphism(plane, PUBLISHED_Q3_CLASSES)
    assert mapping is not None
    assert sorted(mapping) == list(range(1, 10))
    assert sorted(mapping.values()) == list(range(1, 10))


def test_class_of_consistency():
    plane = build_plane(3)
    l1 = plane.line_through(1, 2)
    l2 = plane.line_through(4, 5)
    l3 = plane.line_through(1, 4)
    assert plane.class_of(l1) == plane.class_of(l2)
    assert plane.class_of(l1) != plane.class_of(l3)
    counts = [0] * len(plane.classes)
    for i in range(plane.n_lines):
        counts[plane.class_of(i)] += 1
    assert counts == [3, 3, 3, 3]


def test_classes_as_point_sets_shape():
    plane = build_plane(4)
    sets = classes_as_point_sets(plane)
    assert len(sets) == 5
    assert all(len(cls) == 4 for cls in sets)
