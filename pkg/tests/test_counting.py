"""Census, marking enumeration, multiplicity formulas, and diagram totals."""

import itertools
from fractions import Fraction
from math import factorial

import pytest

from zeuthen import (
    BLACK,
    WHITE,
    FloorDiagram,
    InvalidDegree,
    Marking,
    black_multiplicity,
    black_profile,
    count_fd,
    enumerate_diagrams,
    enumerate_markings,
    marked_multiplicity,
    validate_diagram,
    validate_marking,
    white_multiplicity,
)


def line_diagram():
    return FloorDiagram([WHITE, BLACK], [1, -1], [(0, 1)])


def heavy_conic():
    return FloorDiagram([WHITE, BLACK], [2, -2], [(0, 1)])


def up_star():
    return FloorDiagram([WHITE, BLACK, BLACK], [2, -1, -1], [(0, 1), (0, 2)])


def down_star():
    return FloorDiagram([BLACK, WHITE, WHITE], [-2, 1, 1], [(1, 0), (2, 0)])


def two_floors():
    return FloorDiagram(
        [WHITE, BLACK, WHITE, BLACK, BLACK],
        [1, 0, 1, -1, -1],
        [(0, 1), (2, 1), (0, 3), (0, 4)],
    )


def chain_heavy():
    # both floors share the weight-2 shaft below the first floor
    return FloorDiagram([WHITE, BLACK, WHITE, BLACK], [1, 0, 1, -2], [(0, 1), (2, 1), (0, 3)])


def test_census_sizes():
    assert [len(enumerate_diagrams(d)) for d in (1, 2, 3, 4)] == [1, 5, 33, 339]


def test_census_structure():
    for d in (1, 2, 3):
        for diagram in enumerate_diagrams(d):
            assert validate_diagram(diagram.colors, diagram.div, diagram.edges) == []
            assert diagram.degree == d
            capacities = [diagram.label_capacity(v) for v in range(diagram.n_vertices)]
            assert all(c >= 1 for c in capacities)
            assert sum(capacities) == 3 * d - 1


def test_enumerate_diagrams_rejects():
    with pytest.raises(InvalidDegree):
        enumerate_diagrams(0)
    with pytest.raises(InvalidDegree):
        enumerate_diagrams(True)


def test_marking_classes_line():
    classes = enumerate_markings(line_diagram(), ())
    assert len(classes) == 1
    assert classes[0].assignment == (1, 0)


def test_marking_classes_stars():
    assert enumerate_markings(down_star(), (4, 5)) == []
    classes = enumerate_markings(up_star(), (4, 5))
    assert len(classes) == 1
    assert marked_multiplicity(up_star(), classes[0]) == 4


def test_marking_dedup_five_vertex():
    # the symmetric shaft labels give one isomorphism class, not two
    diagram = two_floors()
    classes = enumerate_markings(diagram, ())
    assignments = {m.assignment for m in classes}
    assert (3, 4, 0, 1, 2) in assignments
    assert (4, 3, 0, 1, 2) not in assignments
    assert sum(marked_multiplicity(diagram, m) for m in classes) == 1


def test_white_multiplicity_point_case():
    diagram = heavy_conic()
    marking = Marking((1, 0, 0, 0, 1), frozenset((1, 3, 4, 5)))
    assert validate_marking(diagram, marking.assignment, marking.lcomb) is None
    assert white_multiplicity(diagram, marking, 0) == 2  # 2^2 * H(2)

    for d in range(1, 6):
        big = FloorDiagram([WHITE, BLACK], [d, -d], [(0, 1)])
        marking = Marking(tuple([0] * (2 * d - 1) + [1] * d), frozenset())
        expected = Fraction(d) ** (d - 1) * factorial(2 * d - 2) / factorial(d)
        assert white_multiplicity(big, marking, 0) == expected


def test_white_multiplicity_line_case():
    # a floor of degree 1 meets a fixed line with multiplicity 0
    diagram = line_diagram()
    marking = Marking((1, 0), frozenset((2,)))
    assert validate_marking(diagram, marking.assignment, marking.lcomb) is None
    assert white_multiplicity(diagram, marking, 0) == 0

    diagram = heavy_conic()
    marking = Marking((1, 1, 0, 0, 0), frozenset((1, 2, 3, 4, 5)))
    assert validate_marking(diagram, marking.assignment, marking.lcomb) is None
    assert white_multiplicity(diagram, marking, 0) == 1  # (2-2+1) * 2 * H(2)


def test_black_profile_point_case():
    diagram = line_diagram()
    marking = Marking((1, 0), frozenset())
    profile = black_profile(diagram, marking, 1)
    assert profile.s == 1
    assert profile.eps == (-1,)
    assert profile.delta == (1, 0)
    assert profile.ntilde == (1, 0)
    assert profile.case == "point" and profile.point_label == 1
    assert black_multiplicity(diagram, marking, 1) == 1


def test_black_profile_middle_vertex():
    diagram = two_floors()
    marking = Marking((3, 4, 0, 1, 2), frozenset())
    profile = black_profile(diagram, marking, 1)
    assert profile.ordered_whites == (0, 2)
    assert profile.eps == (1, -1)
    assert profile.delta == (0, 1, 0)
    assert profile.ntilde == (0, 1, 0)
    assert profile.case == "point" and profile.point_label == 4
    assert black_multiplicity(diagram, marking, 1) == 1
    assert marked_multiplicity(diagram, marking) == 1


def test_black_top_case():
    diagram = heavy_conic()
    marking = Marking((1, 0, 0, 0, 1), frozenset((1, 3, 4, 5)))
    profile = black_profile(diagram, marking, 1)
    assert profile.case == "top"
    assert black_multiplicity(diagram, marking, 1) == 0  # (2*1 - 2) * H
    assert marked_multiplicity(diagram, marking) == 0


def test_black_generic_case():
    diagram = chain_heavy()
    marking = Marking((3, 3, 0, 1, 2), frozenset((1, 2)))
    assert validate_marking(diagram, marking.assignment, marking.lcomb) is None
    profile = black_profile(diagram, marking, 3)
    assert profile.case == "generic"
    assert profile.delta == (2, 0)
    assert profile.ntilde == (2, 0)
    assert black_multiplicity(diagram, marking, 3) == Fraction(1, 2)
    assert marked_multiplicity(diagram, marking) == 1

    diagram = heavy_conic()
    marking = Marking((1, 1, 0, 0, 0), frozenset((1, 2, 3, 4, 5)))
    assert black_multiplicity(diagram, marking, 1) == Fraction(1, 2)
    assert marked_multiplicity(diagram, marking) == 1


def test_conic_ladder_every_subset():
    expected = [1, 2, 4, 4, 2, 1]
    for c in range(6):
        for subset in itertools.combinations(range(1, 6), c):
            assert count_fd(2, subset) == expected[c], subset


def test_cubic_table():
    expected = [400, 600, 756, 712, 480, 240, 100, 36, 12]
    for k in range(9):
        assert count_fd(3, range(k + 1, 9)) == expected[k]
    # the published alternate label choices
    assert count_fd(3, range(2, 9)) == 600
    assert count_fd(3, (1, 2, 3, 4, 6)) == 712


def test_point_only_counts():
    assert [count_fd(d, ()) for d in (1, 2, 3, 4)] == [1, 1, 12, 620]


def test_line_tangency_mechanisms():
    # both placements of the single line give 0, through different routes:
    # lcomb={1} has an invalid assignment plus a zero-multiplicity class,
    # lcomb={2} has two valid classes whose multiplicities both vanish
    diagram = line_diagram()
    assert count_fd(1, (1,)) == 0
    assert count_fd(1, (2,)) == 0

    assert validate_marking(diagram, (0, 1), (1,)) == "LargeElementIsPoint(1)"
    assert validate_marking(diagram, (1, 0), (1,)) is None
    assert marked_multiplicity(diagram, Marking((1, 0), frozenset((1,)))) == 0

    assert validate_marking(diagram, (0, 1), (2,)) is None
    assert validate_marking(diagram, (1, 0), (2,)) is None
    assert marked_multiplicity(diagram, Marking((0, 1), frozenset((2,)))) == 0
    assert marked_multiplicity(diagram, Marking((1, 0), frozenset((2,)))) == 0


def test_count_fd_rejects():
    with pytest.raises(InvalidDegree):
        count_fd(0, ())
    with pytest.raises(ValueError):
        count_fd(2, (6,))
    with pytest.raises(ValueError):
        count_fd(2, (0,))


def reference_count(d, lcomb):
    total = Fraction(0)
    for diagram in enumerate_diagrams(d):
        for marking in enumerate_markings(diagram, lcomb):
            total += marked_multiplicity(diagram, marking)
    return total


def test_reference_matches_fast_path():
    for d in (1, 2):
        for c in range(3 * d):
            for subset in itertools.combinations(range(1, 3 * d), c):
                assert reference_count(d, subset) == count_fd(d, subset)
    for subset in ((), (2, 4, 6)):
        assert reference_count(3, subset) == count_fd(3, subset)


def test_multiplicities_nonnegative():
    for d in (1, 2):
        for c in range(3 * d):
            for subset in itertools.combinations(range(1, 3 * d), c):
                for diagram in enumerate_diagrams(d):
                    for marking in enumerate_markings(diagram, subset):
                        assert marked_multiplicity(diagram, marking) >= 0
