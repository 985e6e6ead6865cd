import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from exchange_univ.errors import NotDecreasing, ParseError, RowBound
from exchange_univ.partitions import (
    Partition,
    DEEP_HOOK,
    PROPER,
    SHALLOW_HOOK,
    TRIVIAL_COLUMN,
    TRIVIAL_ROW,
    PartitionFamily,
    classify,
    conjugate,
    diagonal_length,
    is_hook,
    parse_partition as P,
    partitions_of,
    partwise_sum,
)
from oracles import all_partitions_brute, conjugate_by_diagram, hook_partitions


@pytest.mark.parametrize("text, parts", [
    ("[3,2,2]", (3, 2, 2)),
    ("[2,1^3]", (2, 1, 1, 1)),
    ("[]", ()),
    (" [ 4 , 1 ] ", (4, 1)),
    ("[3^2,1]", (3, 3, 1)),
])
def test_parse(text, parts):
    p = P(text)
    assert p.parts == parts
    assert p.size == sum(parts)


@pytest.mark.parametrize("text", ["[1,2]", "[2,1,3]"])
def test_parse_rejects_rising_parts(text):
    with pytest.raises(NotDecreasing):
        P(text)
    assert list(P(text, sort=True)) == sorted(map(int, text.strip("[]").split(",")), reverse=True)


@pytest.mark.parametrize("text", ["", "[a]", "[0,1]", "[-1]", "3,2", "[2,,1]"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        P(text)


def test_empty_partition():
    e = P("[]")
    assert e.size == 0 and e.rows == 0 and e.cols == 0
    assert e.conjugate == e
    assert str(e) == "[]"


@pytest.mark.parametrize("p, q", [("[4,3,1]", "[3,2,2,1]"), ("[2,1]", "[2,1]"), ("[5]", "[1^5]")])
def test_conjugate_examples(p, q):
    assert conjugate(P(p)) == P(q)


@given(partitions(12))
def test_conjugate_matches_transposed_diagram(p):
    assert conjugate(p) == conjugate_by_diagram(p)
    assert p.conjugate.conjugate == p
    assert p.conjugate.size == p.size


@given(partitions(12))
def test_string_round_trip(p):
    assert P(str(p)) == p


@pytest.mark.parametrize("p, kind, sc", [
    ("[4,1,1]", DEEP_HOOK, False),
    ("[3,2]", PROPER, False),
    ("[3,2,1]", PROPER, True),
    ("[3,1]", SHALLOW_HOOK, False),
    ("[2,1,1]", SHALLOW_HOOK, False),
    ("[5]", TRIVIAL_ROW, False),
    ("[1^4]", TRIVIAL_COLUMN, False),
])
def test_classify(p, kind, sc):
    c = classify(P(p))
    assert c.kind == kind
    assert c.self_conjugate is sc


def test_durfee_length():
    assert classify(P("[3,2,1]")).diagonal_length == 2
    assert diagonal_length(P("[5,4,4,3]")) == 3
    assert diagonal_length(P("[1]")) == 1


@pytest.mark.parametrize("n", range(3, 10))
def test_hooks_are_exactly_the_brute_force_hooks(n):
    found = {p for p in partitions_of(n) if is_hook(p)}
    assert found == set(hook_partitions(n))


@pytest.mark.parametrize("a, b, s", [("[2,1]", "[2,1]", "[4,2]"), ("[3,1]", "[1,1]", "[4,2]"), ("[3,2]", "[]", "[3,2]")])
def test_partwise_sum(a, b, s):
    assert partwise_sum(P(a), P(b)) == P(s)


@pytest.mark.parametrize("n", range(0, 11))
def test_partitions_of_is_complete_and_ordered(n):
    ps = partitions_of(n)
    assert set(ps) == all_partitions_brute(n) if n else ps == [Partition(())]
    assert ps == sorted(ps, reverse=True)


def test_partitions_of_bounds():
    assert all(p.rows <= 3 and p.cols <= 4 for p in partitions_of(9, max_rows=3, max_part=4))
    assert len(partitions_of(6, max_rows=2)) == 4


@given(partitions(10), partitions(10))
def test_containment_is_cellwise(a, b):
    assert a.contains(b) == set(b.cells()).issubset(set(a.cells()))


def test_family_parse_and_equality():
    f = PartitionFamily.parse("[2,1];[3,1]")
    g = PartitionFamily.parse("[3,1];[2,1]")
    assert f == g and hash(f) == hash(g)
    assert f.total_size == 7
    assert PartitionFamily.parse(str(f)) == f


def test_family_row_bound():
    with pytest.raises(RowBound):
        PartitionFamily.parse("[2,1,1];[2,1]", d=2)


def test_family_self_conjugacy_readings():
    f = PartitionFamily.parse("[3,1];[2,1,1]")
    assert f.multiset_self_conjugate() and not f.members_self_conjugate()
    g = PartitionFamily.parse("[2,1];[2,2]")
    assert g.multiset_self_conjugate() and g.members_self_conjugate()
