import math

import pytest
from hypothesis import given

from conftest import partitions
from exchange_univ.errors import IndexOutOfRange, Inconsistent
from exchange_univ.partitions import parse_partition as P, partitions_of
from exchange_univ.tableaux import (
    StandardTableau,
    dimension,
    enumerate_standard,
    tableau_from_content_vector,
    weyl_dimension,
)
from frozen import EXAMPLE_4_CONTENTS
from oracles import semistandard_brute, standard_tableaux_brute


@pytest.mark.parametrize("shape, count", [("[3,1]", 3), ("[3,2]", 5), ("[6]", 1), ("[1^5]", 1), ("[2,1]", 2)])
def test_standard_counts(shape, count):
    assert len(enumerate_standard(P(shape))) == count


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_permutation_filter(n):
    for shape in partitions_of(n):
        ours = {t.rows for t in enumerate_standard(shape)}
        assert ours == set(standard_tableaux_brute(shape))
        assert len(ours) == dimension(shape)


def test_canonical_order_of_two_one():
    rows = [t.rows for t in enumerate_standard(P("[2,1]"))]
    assert rows == [((1, 3), (2,)), ((1, 2), (3,))]


@pytest.mark.parametrize("shape, dim", [("[4,3]", 14), ("[6,4,2,1]", 17160), ("[4,1,1]", 10), ("[4,3,1,1]", 216)])
def test_hook_length_dimension(shape, dim):
    assert dimension(P(shape)) == dim


@given(partitions(9, min_size=1))
def test_sum_of_squared_dimensions(p):
    n = p.size
    assert sum(dimension(q) ** 2 for q in partitions_of(n)) == math.factorial(n)


@pytest.mark.parametrize("shape, d, count", [("[3,1]", 2, 3), ("[3,2]", 2, 2), ("[1]", 5, 5), ("[2,1]", 3, 8), ("[1,1,1]", 2, 0)])
def test_weyl_dimension(shape, d, count):
    assert weyl_dimension(P(shape), d) == count


@pytest.mark.parametrize("shape", ["[2,1]", "[2,2]", "[3,1]", "[2,1,1]", "[3,2]", "[1,1,1]"])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_weyl_dimension_matches_semistandard_count(shape, d):
    assert weyl_dimension(P(shape), d) == len(semistandard_brute(P(shape), d))


def test_content_and_axial_distance():
    t = StandardTableau.from_rows([[1, 3], [2]])
    assert t.content_vector == (0, -1, 1)
    assert t.axial_distance(1, 2) == -1
    assert t.axial_distance(2, 3) == 2
    with pytest.raises(IndexOutOfRange):
        t.content(4)


def test_content_vector_examples():
    assert tableau_from_content_vector((0, -1, 1)).rows == ((1, 3), (2,))
    assert tableau_from_content_vector(tuple(range(5))).rows == ((1, 2, 3, 4, 5),)


def test_sixteen_cell_content_vector():
    t = tableau_from_content_vector(EXAMPLE_4_CONTENTS)
    assert t.shape == P("[5,4,4,3]")
    assert t.rows == ((1, 3, 9, 10, 11), (2, 4, 12, 13), (5, 6, 14, 15), (7, 8, 16))
    ones = tuple(k for k in range(1, 17) if t.content(k) == 1)
    assert ones == (3, 12, 15)


@pytest.mark.parametrize("cv", [(0, 0), (1,), (0, 2), (0, 1, -1, 1)])
def test_content_vector_inconsistent(cv):
    with pytest.raises(Inconsistent):
        tableau_from_content_vector(cv)


@given(partitions(8, min_size=1))
def test_content_vector_round_trip(p):
    for t in enumerate_standard(p):
        assert tableau_from_content_vector(t.content_vector) == t


@given(partitions(8, min_size=1))
def test_transpose_is_standard_on_conjugate_shape(p):
    for t in enumerate_standard(p):
        assert t.transpose().shape == p.conjugate
        assert t.transpose().transpose() == t


def test_non_standard_rejected():
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[2, 1]])
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[1, 2], [4]])
