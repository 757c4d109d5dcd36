"""Enumeration and counting of topologies and finite spaces on small sets."""

from __future__ import annotations

from functools import lru_cache

from . import order as _o
from .algebra import is_connected, is_irreducible, is_join_indecomposable
from .canonical import canonical_form
from .errors import Unsupported
from .spaces import FiniteSpace, Preorder

LABELED_POSET_CAP = 7
TOPOLOGY_CAP = 6
SPACE_CAP = 7


def _extensions(strict: tuple[int, ...]):
    """Yield every strict order on ``m + 1`` points restricting to ``strict`` on the first ``m``.

    The new point ``m`` gets a strict down-set ``D`` (a down-set) and a strict
    up-set ``U`` (an up-set inside the common upper bounds of ``D``).
    """
    m = len(strict)
    full = (1 << m) - 1
    new_bit = 1 << m
    for d in _o.downsets(strict):
        bounds = full
        for i in _o.bits(d):
            bounds &= strict[i]
        for u in _o.upsets(strict, within=bounds):
            rows = list(strict)
            for i in _o.bits(d):
                rows[i] |= new_bit | u
            rows.append(u)
            yield tuple(rows)


def _count_extensions(strict: tuple[int, ...]) -> int:
    m = len(strict)
    full = (1 << m) - 1
    total = 0
    for d in _o.downsets(strict):
        bounds = full
        for i in _o.bits(d):
            bounds &= strict[i]
        total += sum(1 for _ in _o.upsets(strict, within=bounds))
    return total


def iter_labeled_posets(k: int, unsafe_large: bool = False):
    """Stream every strict partial order on ``range(k)`` as a tuple of up-masks."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > LABELED_POSET_CAP and not unsafe_large:
        raise Unsupported(f"labelled posets on {k} > {LABELED_POSET_CAP} points")

    def rec(strict):
        if len(strict) == k:
            yield strict
            return
        for ext in _extensions(strict):
            yield from rec(ext)

    yield from rec(())


@lru_cache(maxsize=None)
def labeled_posets(k: int, unsafe_large: bool = False) -> int:
    """Number of partial orders on ``range(k)``."""
    if k > LABELED_POSET_CAP and not unsafe_large:
        raise Unsupported(f"labelled posets on {k} > {LABELED_POSET_CAP} points")
    if k <= 1:
        return 1
    # the last layer is only counted, not materialized
    return sum(_count_extensions(p) for p in iter_labeled_posets(k - 1, unsafe_large=True))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def count_topologies(n: int, unsafe_large: bool = False) -> int:
    """Number of topologies on ``range(n)``: sum over ``k`` of S(n, k) * P(k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > TOPOLOGY_CAP and not unsafe_large:
        raise Unsupported(f"topology count for n={n} > {TOPOLOGY_CAP}")
    return sum(stirling2(n, k) * labeled_posets(k, unsafe_large) for k in range(n + 1))


def set_partitions(n: int):
    """Yield set partitions of ``range(n)`` as lists of masks, blocks ordered by least element."""

    def rec(i, blocks):
        if i == n:
            yield list(blocks)
            return
        for b in range(len(blocks)):
            blocks[b] |= 1 << i
            yield from rec(i + 1, blocks)
            blocks[b] &= ~(1 << i)
        blocks.append(1 << i)
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def iter_preorders(n: int, unsafe_large: bool = False):
    """Stream every preorder (equivalently topology) on ``range(n)``."""
    if n > TOPOLOGY_CAP and not unsafe_large:
        raise Unsupported(f"topologies on {n} > {TOPOLOGY_CAP} points")
    for blocks in set_partitions(n):
        k = len(blocks)
        for strict in iter_labeled_posets(k, unsafe_large=True):
            rows = [0] * n
            for b, bm in enumerate(blocks):
                above = bm
                for c in _o.bits(strict[b]):
                    above |= blocks[c]
                for i in _o.bits(bm):
                    rows[i] = above
            yield Preorder(n, tuple(rows))


@lru_cache(maxsize=None)
def unlabeled_posets(k: int) -> tuple[tuple[int, ...], ...]:
    """Canonical strict up-mask tuples of every poset on ``k`` points, up to isomorphism.

    Each poset on ``k`` points arises from one on ``k - 1`` by adding a
    maximal point above some down-set.
    """
    if k == 0:
        return ((),)
    seen = set()
    for strict in unlabeled_posets(k - 1):
        for d in _o.downsets(strict):
            rows = list(strict)
            for i in _o.bits(d):
                rows[i] |= 1 << (k - 1)
            rows.append(0)
            _, canon, _ = canonical_form((1,) * k, tuple(rows))
            seen.add(canon)
    return tuple(sorted(seen, key=lambda s: FiniteSpace((1,) * k, s).encoding()))


def compositions(n: int, k: int):
    """Compositions of ``n`` into exactly ``k`` positive parts."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _spaces(n: int) -> tuple[FiniteSpace, ...]:
    seen = set()
    for k in range(1, n + 1):
        for strict in unlabeled_posets(k):
            for weights in compositions(n, k):
                seen.add(FiniteSpace.from_weighted_poset(weights, strict))
    return tuple(sorted(seen))


def enumerate_spaces(n: int, unsafe_large: bool = False) -> list[FiniteSpace]:
    """All finite spaces with ``n`` points, sorted by canonical encoding."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [FiniteSpace.empty()]
    if n > SPACE_CAP and not unsafe_large:
        raise Unsupported(f"space enumeration for n={n} > {SPACE_CAP}; pass unsafe_large")
    return list(_spaces(n))


def count_families(n: int, unsafe_large: bool = False) -> tuple[int, int, int]:
    """(connected, join-indecomposable, irreducible) counts among spaces of size ``n``."""
    p = q = r = 0
    for X in enumerate_spaces(n, unsafe_large):
        c = is_connected(X)
        j = is_join_indecomposable(X)
        p += c
        q += j
        r += c and j
    return p, q, r


KINDS = {
    "spaces": lambda X: True,
    "connected": is_connected,
    "join-indec": is_join_indecomposable,
    "irreducible": is_irreducible,
}


def enumerate_kind(n: int, kind: str, unsafe_large: bool = False):
    """Stream preorders (``kind='topologies'``) or filtered finite spaces."""
    if kind == "topologies":
        yield from iter_preorders(n, unsafe_large)
        return
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    keep = KINDS[kind]
    for X in enumerate_spaces(n, unsafe_large):
        if keep(X):
            yield X
