"""Shared builders and the acceptance summary hook."""

from itertools import permutations

import pytest

from finitespaces import order as _o
from finitespaces.algebra import space_join
from finitespaces.spaces import FiniteSpace

ACCEPTANCE_RESULTS: dict = {}


def poset(weights, pairs):
    """Weighted poset from ``(lower, upper)`` class pairs (closed transitively)."""
    rows = [0] * len(weights)
    for lo, hi in pairs:
        rows[lo] |= 1 << hi
    return FiniteSpace.from_weighted_poset(weights, _o.transitive_closure(rows))


def chain(*weights):
    return poset(weights, [(i, i + 1) for i in range(len(weights) - 1)])


def antichain(*weights):
    return poset(weights, [])


def pt():
    return FiniteSpace.point()


def circle():
    return space_join(antichain(1, 1), antichain(1, 1))


def sphere2():
    return space_join(circle(), antichain(1, 1))


def isomorphic(X: FiniteSpace, Y: FiniteSpace) -> bool:
    """Brute-force weighted-poset isomorphism, independent of the canonical labeling."""
    if X.k != Y.k or sorted(X.weights) != sorted(Y.weights):
        return False
    for perm in permutations(range(X.k)):
        if all(X.weights[c] == Y.weights[perm[c]] for c in range(X.k)) and all(
            bool(X.strict[c] >> d & 1) == bool(Y.strict[perm[c]] >> perm[d] & 1)
            for c in range(X.k)
            for d in range(X.k)
        ):
            return True
    return False


@pytest.fixture
def builders():
    return {"chain": chain, "antichain": antichain, "circle": circle, "sphere2": sphere2, "poset": poset}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
