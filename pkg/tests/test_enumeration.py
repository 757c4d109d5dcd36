from collections import Counter
from itertools import combinations, product

import pytest

from conftest import antichain, poset
from finitespaces.algebra import EMPTY, is_connected, is_irreducible, is_join_indecomposable, space_sum
from finitespaces.enumeration import (
    compositions,
    count_families,
    count_topologies,
    enumerate_kind,
    enumerate_spaces,
    iter_labeled_posets,
    iter_preorders,
    labeled_posets,
    set_partitions,
    stirling2,
    unlabeled_posets,
)
from finitespaces.errors import Unsupported
from finitespaces.spaces import canonicalize

T = [1, 1, 4, 29, 355, 6942, 209527]
F = [1, 1, 3, 9, 33, 139, 718, 4535]
PQR = [None, (1, 1, 1), (2, 2, 1), (6, 4, 1), (21, 14, 2), (94, 62, 17), (512, 373, 167), (3485, 2722, 1672)]


def brute_posets(k):
    """Count antisymmetric transitive relations by scanning every relation on [k]."""
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    count = 0
    for bits in product((0, 1), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if all((i, l) in rel for i, j in rel for jj, l in rel if j == jj and i != l):
            count += 1
    return count


def brute_topologies(n):
    """Families of subsets containing the empty and full set, closed under union and intersection."""
    full = (1 << n) - 1
    middle = list(range(1, full))
    count = 0
    for bits in product((0, 1), repeat=len(middle)):
        fam = {0, full} | {m for m, b in zip(middle, bits) if b}
        if all(a | b in fam and a & b in fam for a, b in combinations(fam, 2)):
            count += 1
    return count


@pytest.mark.parametrize("k", range(0, 5))
def test_labeled_posets_brute(k):
    assert labeled_posets(k) == brute_posets(k)


def test_labeled_poset_values():
    assert [labeled_posets(k) for k in range(7)] == [1, 1, 3, 19, 219, 4231, 130023]


def test_labeled_poset_stream_is_duplicate_free():
    seen = list(iter_labeled_posets(4))
    assert len(seen) == len(set(seen)) == 219


def test_labeled_poset_cap():
    with pytest.raises(Unsupported):
        labeled_posets(8)


@pytest.mark.parametrize("n", range(1, 5))
def test_topologies_brute(n):
    assert count_topologies(n) == brute_topologies(n)


def test_topology_table():
    assert [count_topologies(n) for n in range(1, 7)] == T[1:]


def test_topology_cap():
    with pytest.raises(Unsupported):
        count_topologies(7)


def test_preorder_stream_matches_count():
    for n in range(1, 5):
        items = list(iter_preorders(n))
        assert len(items) == len(set(items)) == T[n]


def test_stirling_and_partitions():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert sum(1 for _ in set_partitions(5)) == 52


def test_unlabeled_posets():
    assert [len(unlabeled_posets(k)) for k in range(7)] == [1, 1, 2, 5, 16, 63, 318]


def test_compositions_helper():
    assert sorted(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_space_counts(n):
    spaces = enumerate_spaces(n)
    assert len(spaces) == len(set(spaces)) == F[n]
    assert all(X.n == n for X in spaces)
    assert spaces == sorted(spaces)


@pytest.mark.parametrize("n", range(1, 5))
def test_spaces_equal_quotients_of_topologies(n):
    assert set(enumerate_spaces(n)) == {canonicalize(P) for P in iter_preorders(n)}


def test_nine_spaces_of_size_three():
    expected = {
        antichain(3),
        poset([2, 1], [(0, 1)]),
        poset([1, 2], [(0, 1)]),
        antichain(2, 1),
        antichain(1, 1, 1),
        poset([1, 1, 1], [(0, 1)]),
        poset([1, 1, 1], [(0, 1), (1, 2)]),
        poset([1, 1, 1], [(0, 1), (0, 2)]),
        poset([1, 1, 1], [(1, 0), (2, 0)]),
    }
    assert set(enumerate_spaces(3)) == expected


def test_space_cap():
    with pytest.raises(Unsupported):
        enumerate_spaces(8)


@pytest.mark.parametrize("n", range(1, 8))
def test_family_counts(n):
    assert count_families(n) == PQR[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_free_commutative_generation(n):
    """Spaces of size n are exactly the products of connected spaces, each once."""
    connected = {k: [X for X in enumerate_spaces(k) if is_connected(X)] for k in range(1, n + 1)}

    def multisets(total, smallest):
        if total == 0:
            yield []
            return
        for k in range(smallest, total + 1):
            for i, X in enumerate(connected[k]):
                for rest in multisets(total - k, k):
                    if rest and rest[0][0] == k and rest[0][1] < i:
                        continue
                    yield [(k, i)] + rest

    products = Counter()
    for ms in multisets(n, 1):
        acc = EMPTY
        for k, i in ms:
            acc = space_sum(acc, connected[k][i])
        products[acc] += 1
    assert set(products) == set(enumerate_spaces(n))
    assert set(products.values()) == {1}


def test_size_four_irreducibles():
    irreducible = list(enumerate_kind(4, "irreducible"))
    n_poset = poset([1, 1, 1, 1], [(0, 2), (1, 2), (1, 3)])
    assert set(irreducible) == {antichain(4), n_poset}


def test_small_irreducibles_are_single_classes():
    for n in range(1, 4):
        assert list(enumerate_kind(n, "irreducible")) == [antichain(n)]


def test_kind_filters_agree():
    for X in enumerate_spaces(5):
        assert is_irreducible(X) == (is_connected(X) and is_join_indecomposable(X))
    assert len(list(enumerate_kind(5, "join-indec"))) == 62
    assert len(list(enumerate_kind(4, "topologies"))) == 355
    with pytest.raises(ValueError):
        list(enumerate_kind(3, "bogus"))
