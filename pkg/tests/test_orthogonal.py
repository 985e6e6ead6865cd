import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exchange_univ.errors import IndexOutOfRange
from exchange_univ.orthogonal import (
    Permutation,
    adjacent_matrix,
    alternating_intertwiner,
    intertwiner_symmetric_expected,
    jucys_murphy_matrix,
    permutation_matrix,
    verify_structure,
)
from exchange_univ.partitions import parse_partition as P, partitions_of
from exchange_univ.tableaux import enumerate_standard


def test_two_one_generators():
    s1 = adjacent_matrix(P("[2,1]"), 1).entries
    s2 = adjacent_matrix(P("[2,1]"), 2).entries
    np.testing.assert_allclose(s1, np.diag([-1.0, 1.0]))
    r = np.sqrt(3) / 2
    np.testing.assert_allclose(s2, [[0.5, r], [r, -0.5]])


def test_intertwiner_two_one_exact():
    m = alternating_intertwiner(P("[2,1]")).entries
    assert m.tolist() == [[0, 1], [-1, 0]]


def test_identity_and_products():
    shape = P("[2,2]")
    np.testing.assert_allclose(permutation_matrix(shape, Permutation.identity(4)).entries, np.eye(2))
    g = Permutation.parse_cycles("(1 2)(3 4)", 4)
    m = permutation_matrix(shape, g).entries
    np.testing.assert_allclose(m, adjacent_matrix(shape, 1).entries @ adjacent_matrix(shape, 3).entries, atol=1e-12)
    np.testing.assert_allclose(m @ m, np.eye(2), atol=1e-12)


def test_transposition_one_three_on_two_one():
    shape = P("[2,1]")
    s1, s2 = adjacent_matrix(shape, 1).entries, adjacent_matrix(shape, 2).entries
    m = permutation_matrix(shape, Permutation.transposition(1, 3, 3)).entries
    np.testing.assert_allclose(m, s1 @ s2 @ s1, atol=1e-12)
    assert abs(np.trace(m)) < 1e-12


@pytest.mark.parametrize("shape", ["[2,1]", "[3,1]", "[2,2]", "[3,2]"])
def test_homomorphism_on_all_pairs(shape):
    lam = P(shape)
    n = lam.size
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    mats = {g: permutation_matrix(lam, g).entries for g in perms}
    for g, h in itertools.product(perms[:12], perms[:12]):
        np.testing.assert_allclose(mats[g * h], mats[g] @ mats[h], atol=1e-10)


@given(st.permutations(list(range(1, 7))))
def test_reduced_word_rebuilds_permutation(images):
    g = Permutation(tuple(images))
    assert Permutation.from_word(g.reduced_word(), 6) == g
    assert (-1) ** len(g.reduced_word()) == g.sign()
    assert g * g.inverse() == Permutation.identity(6)


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_give_orthogonality(n):
    """Row orthogonality of characters computed from traces of our matrices."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    shapes = partitions_of(n)
    chars = np.array([[np.trace(permutation_matrix(s, g).entries) for g in perms] for s in shapes])
    gram = chars @ chars.T / len(perms)
    np.testing.assert_allclose(gram, np.eye(len(shapes)), atol=1e-8)


@pytest.mark.parametrize("shape", ["[3,2]", "[2,2,1]", "[4,2,1]"])
def test_jucys_murphy_is_sum_of_transpositions(shape):
    lam = P(shape)
    for k in range(1, lam.size + 1):
        total = sum((permutation_matrix(lam, Permutation.transposition(i, k, lam.size)).entries
                     for i in range(1, k)), np.zeros((len(enumerate_standard(lam)),) * 2))
        np.testing.assert_allclose(jucys_murphy_matrix(lam, k).entries, total, atol=1e-10)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        adjacent_matrix(P("[2,1]"), 3)
    with pytest.raises(IndexOutOfRange):
        jucys_murphy_matrix(P("[2,1]"), 4)


@pytest.mark.parametrize("shape, symmetric", [("[3,2,1]", True), ("[2,2]", False), ("[2,1]", False), ("[1]", True),
                                              ("[3,1,1]", True), ("[4,3,2,1]", True), ("[3,3,3]", False)])
def test_symmetry_rule(shape, symmetric):
    lam = P(shape)
    assert intertwiner_symmetric_expected(lam) is symmetric
    m = alternating_intertwiner(lam).entries
    np.testing.assert_allclose(m, m.T if symmetric else -m.T, atol=0)


def test_verify_structure_named_shapes():
    names = {r.name: r.passed for r in verify_structure(P("[2,2]"))}
    assert all(names.values())
    assert {"pauli-span", "intertwiner-symmetry-rule", "osp-membership"} <= names.keys()
    assert all(r.passed for r in verify_structure(P("[3,2,1]")))
    trivial = verify_structure(P("[4]"))
    assert trivial and all(r.passed for r in trivial)


def test_verify_structure_non_self_conjugate_skips_symmetry_rule():
    names = {r.name for r in verify_structure(P("[3,1]"))}
    assert "intertwiner-symmetry-rule" not in names
    assert "intertwiner-conjugation" in names
