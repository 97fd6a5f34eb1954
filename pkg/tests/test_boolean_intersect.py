import pytest

from boolbruhat.boolean_intersect import (
    Orientation,
    interval_components,
    intersection_maximal_closed_form,
    maximal_selfish,
    obstructions,
    orientation,
    orientations_match,
    selfish_count,
    subword_element,
    support_components,
)
from boolbruhat.bruhat import intersect_ideals, maximal_elements
from boolbruhat.permcore import Permutation, parse_permutation, support
from boolbruhat.verify import _brute_maximal_selfish, orientation_oracle


def fs(*xs):
    return frozenset(xs)


def test_selfish_lists_small_universes():
    assert maximal_selfish(range(1, 2)).members == {fs(1)}
    assert maximal_selfish(range(1, 3)).members == {fs(1), fs(2)}
    assert maximal_selfish(range(1, 4)).members == {fs(1, 3), fs(2)}
    assert maximal_selfish(range(1, 5)).members == {fs(1, 3), fs(2, 4), fs(1, 4)}
    assert maximal_selfish(range(1, 6)).members == {
        fs(1, 3, 5),
        fs(2, 5),
        fs(2, 4),
        fs(1, 4),
    }


def test_selfish_counts_follow_two_step_recursion():
    assert [selfish_count(k) for k in range(1, 8)] == [1, 2, 2, 3, 4, 5, 7]
    for k in range(4, 16):
        assert selfish_count(k) == selfish_count(k - 2) + selfish_count(k - 3)


@pytest.mark.parametrize("k", range(1, 13))
def test_selfish_family_matches_brute_force(k):
    assert maximal_selfish(range(1, k + 1)).members == _brute_maximal_selfish(
        range(1, k + 1)
    )


def test_selfish_family_factors_over_gaps():
    family = maximal_selfish({1, 2, 5, 6, 7}).members
    assert family == {
        fs(1, 5, 7),
        fs(1, 6),
        fs(2, 5, 7),
        fs(2, 6),
    }


def test_interval_components():
    assert interval_components({1, 2, 4, 5, 6, 8}) == [(1, 2), (4, 5, 6), (8,)]
    assert interval_components([]) == []


def test_support_components_of_boolean():
    v = parse_permutation("3,1,2,6,4,7,8,9,5")
    assert sorted(sorted(c) for c in support_components(v)) == [
        [1, 2],
        [4, 5, 6, 7, 8],
    ]


def test_orientation_table_for_two_specific_permutations():
    v = parse_permutation("3,1,2,6,4,7,8,9,5")
    w = parse_permutation("3,2,5,1,8,4,7,6,9")
    expected = {
        1: (Orientation.DECREASING, Orientation.INTERLACED),
        4: (Orientation.DECREASING, Orientation.INCREASING),
        5: (Orientation.INCREASING, Orientation.DECREASING),
        6: (Orientation.INCREASING, Orientation.INTERLACED),
    }
    for k, (ov, ow) in expected.items():
        assert orientation(v, k) == ov
        assert orientation(w, k) == ow
    assert orientations_match(v, w, 1)
    assert not orientations_match(v, w, 4)
    assert not orientations_match(v, w, 5)
    assert orientations_match(v, w, 6)


def test_orientation_requires_support():
    with pytest.raises(ValueError):
        orientation(Permutation((2, 1, 3)), 2)


@pytest.mark.parametrize("n", [3, 4])
def test_orientation_agrees_with_word_oracle(n):
    from boolbruhat.permcore import all_permutations

    for w in all_permutations(n):
        supp = support(w)
        for k in sorted(supp):
            if k + 1 in supp:
                assert orientation(w, k) == orientation_oracle(w, k)


def test_obstruction_runs_for_two_known_pairs():
    v = Permutation.from_word((3, 2, 1), 4)
    w = Permutation.from_word((2, 1, 3, 2), 4)
    obs = obstructions(v, w)
    runs = {(r.start, r.span, r.direction) for r in obs.minimal_runs}
    assert runs == {(1, 2, "decreasing")}

    v = Permutation.from_word((3, 2, 1, 4, 5), 6)
    w = Permutation.from_word((4, 5, 2, 1, 3, 2, 4), 6)
    obs = obstructions(v, w)
    runs = {(r.start, r.span, r.direction) for r in obs.minimal_runs}
    assert runs == {(1, 2, "decreasing"), (3, 2, "increasing")}
    assert not obs.all_j_equal_1


def test_subword_element_picks_letters_in_word_order():
    v = parse_permutation("3,1,2,6,4,7,8,9,5")
    x = subword_element(v, {2, 1, 5, 7})
    assert support(x) == fs(1, 2, 5, 7)
    assert x.length == 4


def test_closed_form_on_worked_nine_point_example():
    v = parse_permutation("3,1,2,6,4,7,8,9,5")
    w = parse_permutation("3,2,5,1,8,4,7,6,9")
    maxima = intersection_maximal_closed_form(v, w)
    assert {m.images for m in maxima} == {
        (3, 1, 2, 4, 6, 5, 8, 7, 9),
        (3, 1, 2, 5, 4, 7, 8, 6, 9),
    }
    assert maxima == maximal_elements(intersect_ideals(v, w))


def test_closed_form_on_self_inverse_example():
    v = parse_permutation("3,1,2,6,4,7,8,9,5")
    maxima = intersection_maximal_closed_form(v, v.inverse())
    assert len(maxima) == 8
    assert {frozenset(support(m)) for m in maxima} == {
        fs(1, 4, 6, 8),
        fs(1, 4, 7),
        fs(1, 5, 7),
        fs(1, 5, 8),
        fs(2, 4, 6, 8),
        fs(2, 4, 7),
        fs(2, 5, 7),
        fs(2, 5, 8),
    }


def test_closed_form_with_nonadjacent_conflicting_pairs():
    # conflicting pairs {1,2} and {3,4} with {2,3} compatible: the support
    # {2,3} must appear even though it is not selfish as a plain subset
    v = Permutation.from_word((1, 2, 3, 4), 5)
    w = parse_permutation("3,1,5,2,4")
    maxima = intersection_maximal_closed_form(v, w)
    assert {frozenset(support(m)) for m in maxima} == {
        fs(1, 3),
        fs(1, 4),
        fs(2, 3),
        fs(2, 4),
    }
    assert maxima == maximal_elements(intersect_ideals(v, w))


def test_closed_form_of_self_intersection_is_the_element():
    for images in [(1, 2, 3), (2, 1, 3), (3, 1, 2)]:
        v = Permutation(images)
        assert intersection_maximal_closed_form(v, v) == [v]
