"""Bitmask helpers for small relations.

A relation on ``range(k)`` is a tuple of ints; bit ``j`` of ``rows[i]`` says
that ``i`` is related to ``j``. Everything here is pure and works for any
``k`` Python ints can hold, but is meant for ``k`` up to a dozen or so.
"""

from __future__ import annotations


def bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def transitive_closure(rows) -> tuple[int, ...]:
    """Warshall closure of a relation given by row masks."""
    rows = list(rows)
    k = len(rows)
    for m in range(k):
        bit = 1 << m
        rm = rows[m]
        for i in range(k):
            if rows[i] & bit:
                rows[i] |= rm
    return tuple(rows)


def transpose(rows) -> tuple[int, ...]:
    k = len(rows)
    out = [0] * k
    for i, r in enumerate(rows):
        for j in bits(r):
            out[j] |= 1 << i
    return tuple(out)


def is_transitive(rows) -> bool:
    for r in rows:
        for j in bits(r):
            if rows[j] & ~r:
                return False
    return True


def is_strict_order(rows) -> bool:
    """Irreflexive and transitive (antisymmetry follows)."""
    for i, r in enumerate(rows):
        if r >> i & 1:
            return False
    return is_transitive(rows)


def covers(rows) -> list[tuple[int, int]]:
    """Hasse edges ``(i, j)`` of a strict order: ``i < j`` with nothing between."""
    out = []
    for i, r in enumerate(rows):
        for j in bits(r):
            # j covers i unless some m with i < m < j
            between = r & ~(1 << j)
            if not any(rows[m] >> j & 1 for m in bits(between)):
                out.append((i, j))
    return out


def restrict_rows(rows, keep: list[int]) -> tuple[int, ...]:
    """Induced relation on the listed indices, relabelled ``0..len(keep)-1``."""
    out = []
    for i in keep:
        r = rows[i]
        out.append(mask_of(a for a, j in enumerate(keep) if r >> j & 1))
    return tuple(out)


def upsets(strict_up, within: int | None = None):
    """Yield every up-set of the order induced on ``within`` (default: everything).

    Elements are decided from the top down, so each element is admissible
    only once its whole strict up-set inside ``within`` has been taken.
    """
    k = len(strict_up)
    full = (1 << k) - 1 if within is None else within
    order = sorted(bits(full), key=lambda i: popcount(strict_up[i] & full))
    # top elements (fewest strict ups) first: every element of strict_up[i]
    # has strictly fewer ups, so it appears earlier

    def rec(idx, chosen):
        if idx == len(order):
            yield chosen
            return
        i = order[idx]
        yield from rec(idx + 1, chosen)
        if strict_up[i] & full & ~chosen == 0:
            yield from rec(idx + 1, chosen | 1 << i)

    yield from rec(0, 0)


def downsets(strict_up, within: int | None = None):
    yield from upsets(transpose(strict_up), within)


def connected_components(strict_up) -> list[int]:
    """Components of the comparability graph, as masks, ordered by lowest member."""
    k = len(strict_up)
    down = transpose(strict_up)
    seen = 0
    comps = []
    for start in range(k):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= strict_up[i] | down[i]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def minimal_elements(strict_up, within: int) -> int:
    down = transpose(strict_up)
    return mask_of(i for i in bits(within) if down[i] & within == 0)


def maximal_elements(strict_up, within: int) -> int:
    return mask_of(i for i in bits(within) if strict_up[i] & within == 0)
