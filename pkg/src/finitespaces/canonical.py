"""Canonical labelling of vertex-weighted strict partial orders.

The canonical form is the lexicographically smallest serialization
``(weights, strict matrix read row-major)`` over all labellings that are
compatible with the equitable refinement of the partition by
``(weight, in-degree, out-degree)``. Refinement is isomorphism-invariant, so
two weighted posets are isomorphic iff their canonical forms agree.

The search is the usual individualize-and-refine tree. Branches that differ
only by swapping two twins (same weight, same strict up- and down-sets) are
pruned, since that swap is an automorphism fixing the current partition.
"""

from __future__ import annotations

from functools import lru_cache

from .order import bits, popcount, transpose


def _refine(cells: list[list[int]], up, down) -> list[list[int]]:
    """Split cells until every cell is equitable w.r.t. up/down neighbourhoods."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        split = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {
                v: tuple((popcount(up[v] & m), popcount(down[v] & m)) for m in masks)
                for v in c
            }
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new_cells.append(c)
                continue
            split = True
            for key in keys:
                new_cells.append([v for v in c if sig[v] == key])
        cells = new_cells
        if not split:
            return cells


def _serialize(order: list[int], up) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    k = len(order)
    rows = []
    for v in order:
        # column 0 is the most significant bit so int order == row-major lex order
        r = 0
        for j in bits(up[v]):
            r |= 1 << (k - 1 - pos[j])
        rows.append(r)
    return tuple(rows)


def canonical_order(weights, up) -> list[int]:
    """Return the vertices listed in canonical order."""
    k = len(weights)
    if k == 0:
        return []
    down = transpose(up)
    start: dict[tuple, list[int]] = {}
    for v in range(k):
        start.setdefault((weights[v], popcount(down[v]), popcount(up[v])), []).append(v)
    cells = _refine([start[key] for key in sorted(start)], up, down)

    best_key = None
    best_order = None

    def search(cells):
        nonlocal best_key, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _serialize(order, up)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(up[v] == up[t] and down[v] == down[t] for t in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(branch, up, down))

    search(cells)
    return best_order


@lru_cache(maxsize=1 << 16)
def canonical_form(weights: tuple[int, ...], up: tuple[int, ...]):
    """Canonical ``(weights, strict_rows, order)`` for a weighted strict order.

    ``up[i]`` is the mask of ``j`` with ``i < j``. The returned rows use the
    same convention in the new labels; ``order[new] = old``.
    """
    order = canonical_order(weights, up)
    pos = {v: i for i, v in enumerate(order)}
    new_weights = tuple(weights[v] for v in order)
    new_up = []
    for v in order:
        r = 0
        for j in bits(up[v]):
            r |= 1 << pos[j]
        new_up.append(r)
    return new_weights, tuple(new_up), tuple(order)
