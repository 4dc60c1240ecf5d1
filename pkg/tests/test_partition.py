import pytest
from hypothesis import given, strategies as st

from chromatica.partition import Partition, conjugate, dominates, partitions_of

# number of partitions p(n), n = 0..12
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@st.composite
def partitions(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(partitions_of(n)))


def test_validation():
    assert Partition((3, 1, 1)) == (3, 1, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.from_unsorted([1, 3, 0, 2]) == (3, 2, 1)


def test_parse_and_render():
    assert Partition.parse("3,2,1^3") == (3, 2, 1, 1, 1)
    assert Partition.parse("(2,1^4)").compact() == "2,1^4"
    assert str(Partition((3, 1))) == "(3,1)"
    with pytest.raises(ValueError):
        Partition.parse("3,x")


@pytest.mark.parametrize("n", range(len(PARTITION_COUNTS)))
def test_partition_counts(n):
    parts = partitions_of(n)
    assert len(parts) == PARTITION_COUNTS[n]
    assert len(set(parts)) == len(parts)
    assert all(p.n == n for p in parts)


def test_descending_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(1, 9):
        parts = partitions_of(n)
        assert list(parts) == sorted(parts, reverse=True)
        assert parts[0] == (n,) and parts[-1] == (1,) * n


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))) == (2, 1, 1)
    assert conjugate(Partition((4, 2, 1))) == (3, 2, 1, 1)
    assert conjugate(Partition(())) == ()


@given(partitions())
def test_conjugate_is_involution(lam):
    mu = lam.conjugate()
    assert mu.conjugate() == lam
    assert mu.n == lam.n
    assert (mu[0] if mu else 0) == len(lam)


@given(partitions(), partitions())
def test_dominance_reverses_under_conjugation(lam, mu):
    if lam.n != mu.n:
        return
    assert dominates(lam, mu) == dominates(mu.conjugate(), lam.conjugate())


def test_multiplicities():
    assert Partition((3, 3, 1)).multiplicities() == {3: 2, 1: 1}
