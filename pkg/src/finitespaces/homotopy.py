"""Beat-point reduction to cores, order complexes and Euler characteristics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import order as _o
from .errors import NotT0
from .spaces import FiniteSpace, Preorder, canonicalize


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets (sorted vertex tuples, pairwise non-nested)."""

    vertices: int
    facets: tuple[tuple[int, ...], ...]

    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def face_counts(self) -> list[int]:
        """``counts[d]`` is the number of ``d``-dimensional faces."""
        faces = set()
        for f in self.facets:
            m = _o.mask_of(f)
            sub = m
            while sub:
                faces.add(sub)
                sub = (sub - 1) & m
        counts = [0] * (self.dimension() + 1)
        for s in faces:
            counts[_o.popcount(s) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.face_counts()))

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, f)) for f in self.facets)


def _strict_of(X) -> tuple[int, ...]:
    if isinstance(X, Preorder):
        if not X.is_t0():
            raise NotT0("beat points are defined on T0 spaces; reduce via the quotient first")
        return tuple(r & ~(1 << i) for i, r in enumerate(X.up))
    if not X.is_t0():
        raise NotT0("beat points are defined on T0 spaces; reduce via t0_quotient() first")
    return X.strict


def _beats(strict, alive: int):
    """Up- and down-beat masks among the points in ``alive``."""
    down = _o.transpose(strict)
    up_beats = down_beats = 0
    for x in _o.bits(alive):
        above = strict[x] & alive
        if above:
            low = _o.minimal_elements(strict, above)
            if _o.popcount(low) == 1:
                up_beats |= 1 << x
        below = down[x] & alive
        if below:
            high = _o.maximal_elements(strict, below)
            if _o.popcount(high) == 1:
                down_beats |= 1 << x
    return up_beats, down_beats


def beat_points(X) -> tuple[frozenset[int], frozenset[int]]:
    """``(up_beats, down_beats)`` of a T0 space (points are class indices).

    ``x`` is an up-beat when the points strictly above it have a minimum, and
    a down-beat when the points strictly below it have a maximum.
    """
    strict = _strict_of(X)
    up, down = _beats(strict, (1 << len(strict)) - 1)
    return frozenset(_o.bits(up)), frozenset(_o.bits(down))


def _reduce(strict, rng=None) -> int:
    alive = (1 << len(strict)) - 1
    while True:
        up, down = _beats(strict, alive)
        beats = up | down
        if not beats:
            return alive
        if rng is None:
            x = (beats & -beats).bit_length() - 1
        else:
            x = rng.choice(list(_o.bits(beats)))
        alive &= ~(1 << x)


@lru_cache(maxsize=None)
def core(X: FiniteSpace) -> FiniteSpace:
    """Core of ``X``: T0 quotient, then beat points removed until none remain."""
    T = X.t0_quotient()
    return T.restrict(_reduce(T.strict))


def core_random_order(X: FiniteSpace, rng: random.Random) -> FiniteSpace:
    """Same reduction, removing a random beat point at each step."""
    T = X.t0_quotient()
    return T.restrict(_reduce(T.strict, rng))


def is_core(X: FiniteSpace) -> bool:
    if not X.is_t0():
        return False
    up, down = beat_points(X)
    return not up and not down


def homotopy_equivalent(X: FiniteSpace, Y: FiniteSpace) -> bool:
    return core(X) == core(Y)


def _chains(strict):
    """All nonempty chains of a strict order, as masks."""
    k = len(strict)

    def extend(chain, top):
        yield chain
        for y in _o.bits(strict[top]):
            yield from extend(chain | 1 << y, y)

    for x in range(k):
        yield from extend(1 << x, x)


def order_complex(X) -> SimplicialComplex:
    """Complex of nonempty chains of the quotient poset; facets are maximal chains."""
    if isinstance(X, Preorder):
        X = canonicalize(X)
    strict = X.strict
    down = X.down
    facets = []
    # a maximal chain starts at a minimal class and ends at a maximal one
    def walk(chain, top):
        nxt = strict[top]
        # only covering steps keep the chain maximal
        cover = [y for y in _o.bits(nxt) if not any(strict[m] >> y & 1 for m in _o.bits(nxt))]
        if not cover:
            facets.append(tuple(sorted(_o.bits(chain))))
            return
        for y in cover:
            walk(chain | 1 << y, y)

    for x in range(X.k):
        if down[x] == 0:
            walk(1 << x, x)
    return SimplicialComplex(X.k, tuple(sorted(facets)))


def euler_characteristic(X) -> int:
    """Alternating count of chains by length; zero for the empty space."""
    if isinstance(X, Preorder):
        X = canonicalize(X)
    total = 0
    for c in _chains(X.strict):
        total += 1 if _o.popcount(c) % 2 else -1
    return total


def reduced_euler_characteristic(X) -> int:
    return euler_characteristic(X) - 1


# ---------------------------------------------------------------------------
# verification suite


def check_homotopy(n_max: int, seed: int = 0, orders: int = 50) -> list:
    """Core idempotence and order independence, chi duality, the join law for
    reduced Euler characteristics and the order complex of the dual."""
    from .algebra import _pairs_upto, _spaces_upto, space_join
    from .report import AxiomReport
    from .spaces import dual

    rng = random.Random(seed)
    cores = AxiomReport("core", n_max)
    euler = AxiomReport("euler-duality", n_max)
    for X in _spaces_upto(n_max):
        if not X.k:
            continue
        cores.checked += 1
        c = core(X)
        if core(c) != c or not is_core(c):
            cores.fail("core is idempotent and beat-free", X)
        for _ in range(orders):
            if core_random_order(X, rng) != c:
                cores.fail("core independent of removal order", X)
                break
        euler.checked += 1
        if euler_characteristic(X) != euler_characteristic(dual(X)):
            euler.fail("chi(X) = chi(X*)", X)
        flipped = FiniteSpace(X.weights, _o.transpose(X.strict))
        if order_complex(flipped) != order_complex(X):
            euler.fail("K(X) = K(X*) on the same classes", X)

    join = AxiomReport("join-law", n_max)
    for X, Y in _pairs_upto(n_max):
        if not X.k or not Y.k:
            continue
        join.checked += 1
        lhs = reduced_euler_characteristic(space_join(X, Y))
        if lhs != -reduced_euler_characteristic(X) * reduced_euler_characteristic(Y):
            join.fail("chi~(X>Y) = -chi~(X)chi~(Y)", (X, Y))
    return [cores, euler, join]
