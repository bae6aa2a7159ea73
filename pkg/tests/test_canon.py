import itertools

import pytest

from src.canon import is_normalized, normalize, orbit, same_class
from src.constructions import ars, kirkman
from src.family import family
from src.graph_core import DomainError, Matching, reverse, rotate
from src.oracle import census

ARS_7 = Matching(7, ((0, 1), (2, 4), (3, 6)))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 33, 101])
def test_kirkman_is_normalized(n):
    assert normalize(kirkman(n)) == kirkman(n)


def test_normalize_rotated_kirkman():
    assert normalize(rotate(kirkman(7), 1)) == Matching(7, ((0, 6), (1, 5), (2, 4)))


def test_normalize_ars_7():
    assert normalize(ARS_7) == Matching(7, ((0, 6), (1, 3), (2, 5)))


def test_normalize_takes_reverse_branch():
    # After rotating the c_1 edge to {0, 8}, the c_2 edge {5, 7} has 5+7 > 8.
    m = Matching(9, ((0, 1), (2, 5), (3, 7), (6, 8)))
    assert normalize(m) == Matching(9, ((0, 8), (1, 3), (2, 6), (4, 7)))
    assert is_normalized(normalize(m))


@pytest.mark.parametrize("n", [0, 1])
def test_normalize_empty(n):
    assert normalize(Matching(n)) == Matching(n)


def test_normalize_two_vertices():
    assert normalize(Matching(2, ((0, 1),))) == Matching(2, ((0, 1),))


def test_normalize_rejects_non_rpm():
    with pytest.raises(DomainError):
        normalize(Matching(4, ((0, 3), (1, 2))))


def test_same_class():
    m = ars(9)
    assert same_class(m, rotate(m, 3))
    assert same_class(m, reverse(m))
    assert not same_class(kirkman(7), ARS_7)


def test_same_class_rejects_mismatched_sizes():
    with pytest.raises(DomainError):
        same_class(kirkman(7), kirkman(9))


@pytest.mark.parametrize("n", [7, 9, 25, 33])
def test_normalization_laws_on_family_members(n):
    for m in family(n).members:
        canonical = normalize(m)
        assert normalize(canonical) == canonical
        assert normalize(reverse(m)) == canonical
        assert canonical.edge_of_color()[1] == (0, n - 1)
        for alpha in range(n):
            assert normalize(rotate(m, alpha)) == canonical


def test_orbit_size_of_kirkman():
    # Kirkman matchings are fixed by reversal, so only the n rotations remain.
    assert len(orbit(kirkman(7))) == 7
    assert len(orbit(ARS_7)) == 14


@pytest.mark.parametrize("n", [5, 7, 8, 9])
def test_distinct_n_rpms_are_not_related_by_rotation_or_reversal(n):
    representatives = census(n).class_representatives
    for a, b in itertools.combinations(representatives, 2):
        assert b not in orbit(a)
