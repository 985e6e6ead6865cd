import math
from fractions import Fraction

import numpy as np
import pytest

from exchange_univ.errors import DegreeMismatch, SizeLimit
from exchange_univ.lr import lr_expand
from exchange_univ.partitions import PartitionFamily, parse_partition as P, partitions_of
from exchange_univ.schur_weyl import (
    basis_map_checks,
    best_encoding,
    coding_efficiency,
    collective_noise_check,
    efficiency_table,
    flip_all,
    isotypic_dimension,
    physical_basis_map,
)
from exchange_univ.tableaux import StandardTableau, dimension, weyl_dimension
from exchange_univ.verify import schur_weyl_identity
from frozen import BASIS_VECTORS, TABLE_1


def test_efficiency_examples():
    assert coding_efficiency(2, P("[2,1]")) == pytest.approx(1 / 3)
    assert coding_efficiency(3, P("[4,2,1]")) == pytest.approx(math.log(35, 3) / 7)
    assert round(coding_efficiency(3, P("[4,2,1]")), 2) == 0.46
    assert coding_efficiency(4, P("[6]")) == 0


@pytest.mark.parametrize("key", sorted(TABLE_1))
def test_table_cells(key):
    n, d = key
    label, dim, eff = TABLE_1[key]
    row = best_encoding(n, d)
    assert (str(row.best_partition), row.dim, round(row.efficiency, 2)) == (label, dim, eff)


def test_table_limit():
    with pytest.raises(SizeLimit):
        efficiency_table([21], [2])


@pytest.mark.parametrize("fam, nu, dim", [("[2,1];[2,1]", "[3,2,1]", 8), ("[2,1];[2,1]", "[4,2]", 4), ("[3,1]", "[3,1]", 3)])
def test_isotypic_dimension(fam, nu, dim):
    assert isotypic_dimension(PartitionFamily.parse(fam), P(nu)) == dim


def test_isotypic_mismatch():
    with pytest.raises(DegreeMismatch):
        isotypic_dimension(PartitionFamily.parse("[2,1];[2,1]"), P("[3,2]"))


@pytest.mark.parametrize("fam", ["[2,1];[2,1]", "[2,2];[3,1]", "[2,1];[1];[2]"])
def test_isotypic_dimensions_fill_induced_module(fam):
    f = PartitionFamily.parse(fam)
    n = f.total_size
    multinomial = math.factorial(n) // math.prod(math.factorial(m.size) for m in f)
    dims = math.prod(dimension(m) for m in f)
    total = sum(isotypic_dimension(f, nu) * dimension(nu) for nu in partitions_of(n))
    assert total == multinomial * dims * dims


def test_five_level_branching():
    """A single ququint splits into Weyl modules of the expected dimensions under tensor squaring."""
    sq = lr_expand(P("[1]"), P("[1]"))
    assert sum(weyl_dimension(nu, 5) * c for nu, c in sq.items()) == 25
    assert weyl_dimension(P("[2]"), 5) == 15 and weyl_dimension(P("[1,1]"), 5) == 10


@pytest.mark.parametrize("shape, rows, m, terms", BASIS_VECTORS)
def test_printed_vectors(shape, rows, m, terms):
    bmap = physical_basis_map(P(shape))
    v = bmap.vector(StandardTableau.from_rows(rows), Fraction(m))
    expected = np.zeros(2**bmap.n)
    for ket, c in terms.items():
        expected[int(ket, 2)] = c
    np.testing.assert_allclose(v, expected, atol=1e-9)


@pytest.mark.parametrize("shape", ["[1]", "[2]", "[2,1]", "[2,2]", "[3,1]", "[3,2]", "[4,2]", "[3,3]", "[4,3]", "[5,3]", "[5,5]", "[6,4]"])
def test_basis_map_checks(shape):
    bmap = physical_basis_map(P(shape))
    for report in basis_map_checks(bmap):
        assert report.passed, report
    assert collective_noise_check(bmap).passed


def test_zero_weight_vectors_fixed_up_to_sign():
    bmap = physical_basis_map(P("[2,2]"))
    for a in range(len(bmap.tableaux)):
        v = bmap.vector(a, 0)
        assert min(np.abs(flip_all(v) - v).max(), np.abs(flip_all(v) + v).max()) < 1e-12


def test_basis_map_limits():
    with pytest.raises(DegreeMismatch):
        physical_basis_map(P("[2,1,1]"))
    with pytest.raises(SizeLimit):
        physical_basis_map(P("[6,5]"))


def test_schur_weyl_dimension_identity():
    assert schur_weyl_identity(8, ds=(2, 3)).passed
    for n in range(1, 9):
        assert sum(dimension(l) * weyl_dimension(l, 2) for l in partitions_of(n, max_rows=2)) == 2**n
