"""Finite topologies as preorders, and finite spaces as canonical weighted posets.

Points of a preorder on ``n`` elements are ``0..n-1``. Open sets are up-sets:
``i`` in ``O`` and ``i <= j`` imply ``j`` in ``O``, so the minimal open set
containing ``x`` is ``{y : x <= y}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import order as _o
from .canonical import canonical_form
from .errors import IndexOutOfRange, InvalidRelation, NotATopology


@dataclass(frozen=True)
class OpenSet:
    """A subset of ``range(n)``, stored as a bitmask."""

    mask: int
    n: int

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(_o.bits(self.mask))

    def __iter__(self):
        return _o.bits(self.mask)

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __len__(self):
        return _o.popcount(self.mask)

    def complement(self) -> OpenSet:
        return OpenSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def characteristic(self) -> tuple[int, ...]:
        return tuple(self.mask >> i & 1 for i in range(self.n))

    def __repr__(self):
        return f"OpenSet({sorted(self.elements)})"


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation on ``range(n)``.

    ``up[i]`` is the bitmask of all ``j`` with ``i <= j`` (always contains ``i``).
    """

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise InvalidRelation(f"expected {self.n} rows, got {len(self.up)}")
        for i, r in enumerate(self.up):
            if not r >> i & 1:
                raise InvalidRelation(f"not reflexive at {i}")
            if r >> self.n:
                raise InvalidRelation(f"row {i} mentions points outside range({self.n})")
        if not _o.is_transitive(self.up):
            raise InvalidRelation("not transitive")

    @classmethod
    def from_matrix(cls, rel) -> Preorder:
        rel = [list(map(bool, row)) for row in rel]
        n = len(rel)
        if any(len(row) != n for row in rel):
            raise InvalidRelation("relation matrix must be square")
        return cls(n, tuple(_o.mask_of(j for j, b in enumerate(row) if b) for row in rel))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> Preorder:
        """Reflexive-transitive closure of the given ``(i, j)`` pairs (``i <= j``)."""
        rows = [1 << i for i in range(n)]
        for i, j in pairs:
            rows[i] |= 1 << j
        return cls(n, _o.transitive_closure(rows))

    @classmethod
    def chain(cls, n: int) -> Preorder:
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> Preorder:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> Preorder:
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    @property
    def rel(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(r >> j & 1) for j in range(self.n)) for r in self.up)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def equivalent(self, i: int, j: int) -> bool:
        return self.leq(i, j) and self.leq(j, i)

    def is_t0(self) -> bool:
        return all(_o.popcount(r & d) == 1 for r, d in zip(self.up, self.down))

    @cached_property
    def down(self) -> tuple[int, ...]:
        return _o.transpose(self.up)

    @cached_property
    def classes(self) -> tuple[int, ...]:
        """Equivalence classes of ``i ~ j`` as masks, ordered by smallest member."""
        seen = 0
        out = []
        for i in range(self.n):
            if not seen >> i & 1:
                cls_mask = self.up[i] & self.down[i]
                out.append(cls_mask)
                seen |= cls_mask
        return tuple(out)

    def quotient(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(weights, strict_up)`` of the quotient poset, classes as in :attr:`classes`."""
        classes = self.classes
        index = {}
        for c, m in enumerate(classes):
            for i in _o.bits(m):
                index[i] = c
        weights = tuple(_o.popcount(m) for m in classes)
        strict = []
        for m in classes:
            rep = (m & -m).bit_length() - 1
            above = self.up[rep] & ~m
            strict.append(_o.mask_of({index[j] for j in _o.bits(above)}))
        return weights, tuple(strict)

    def relabel(self, perm) -> Preorder:
        """Image under the bijection ``i -> perm[i]``."""
        rows = [0] * self.n
        for i, r in enumerate(self.up):
            rows[perm[i]] = _o.mask_of(perm[j] for j in _o.bits(r))
        return Preorder(self.n, tuple(rows))

    def dual(self) -> Preorder:
        return Preorder(self.n, self.down)


@dataclass(frozen=True)
class FiniteSpace:
    """Homeomorphism class of a finite topology, as a canonical weighted poset.

    ``weights[c]`` is the size of class ``c``; ``strict[c]`` is the mask of the
    classes strictly above ``c``. Instances built through :func:`canonicalize`
    or :meth:`from_weighted_poset` are in canonical labelling, so equality of
    instances is homeomorphism.
    """

    weights: tuple[int, ...]
    strict: tuple[int, ...]

    @classmethod
    def from_weighted_poset(cls, weights, strict) -> FiniteSpace:
        weights = tuple(weights)
        strict = tuple(strict)
        if len(weights) != len(strict):
            raise InvalidRelation("weights and strict rows differ in length")
        if any(w < 1 for w in weights):
            raise InvalidRelation("class weights must be positive")
        if not _o.is_strict_order(strict):
            raise InvalidRelation("not a strict partial order")
        w, s, _ = canonical_form(weights, strict)
        return cls(w, s)

    @classmethod
    def point(cls) -> FiniteSpace:
        return cls((1,), (0,))

    @classmethod
    def empty(cls) -> FiniteSpace:
        return cls((), ())

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return sum(self.weights)

    def __len__(self):
        return self.n

    @cached_property
    def down(self) -> tuple[int, ...]:
        return _o.transpose(self.strict)

    def is_t0(self) -> bool:
        return all(w == 1 for w in self.weights)

    def less(self, c: int, d: int) -> bool:
        return bool(self.strict[c] >> d & 1)

    def covers(self) -> list[tuple[int, int]]:
        return _o.covers(self.strict)

    def strict_pairs(self) -> int:
        """Number of point pairs ``(i, j)`` with ``i < j`` strictly."""
        return sum(self.weights[c] * self.weights[d] for c in range(self.k) for d in _o.bits(self.strict[c]))

    def restrict(self, class_mask: int) -> FiniteSpace:
        """Subspace on a union of classes, canonicalized."""
        keep = list(_o.bits(class_mask))
        return FiniteSpace.from_weighted_poset(
            [self.weights[c] for c in keep], _o.restrict_rows(self.strict, keep)
        )

    def t0_quotient(self) -> FiniteSpace:
        return FiniteSpace.from_weighted_poset([1] * self.k, self.strict)

    def encoding(self) -> tuple:
        """Sort key: size first, then the canonical serialization."""
        k = self.k
        rows = tuple(sum((r >> j & 1) << (k - 1 - j) for j in range(k)) for r in self.strict)
        return (self.n, k, self.weights, rows)

    def __lt__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.encoding() < other.encoding()

    def __str__(self):
        from .textio import format_space

        return format_space(self)


# ---------------------------------------------------------------------------
# operations


def from_open_sets(n: int, family) -> Preorder:
    """Preorder whose up-sets are exactly ``family`` (subsets of ``range(n)``).

    Raises :class:`NotATopology` with a witness if ``family`` is not a topology.
    """
    masks = set()
    for member in family:
        if isinstance(member, OpenSet):
            m = member.mask
        elif isinstance(member, int):
            m = member
        else:
            m = _o.mask_of(member)
        if m >> n:
            raise NotATopology(f"member {sorted(_o.bits(m))} is not a subset of range({n})", (m,))
        masks.add(m)
    full = (1 << n) - 1
    if 0 not in masks:
        raise NotATopology("empty set missing", (0,))
    if full not in masks:
        raise NotATopology("whole set missing", (full,))
    ordered = sorted(masks)
    for a in ordered:
        for b in ordered:
            if a | b not in masks:
                raise NotATopology(
                    f"union of {sorted(_o.bits(a))} and {sorted(_o.bits(b))} is not open", (a, b)
                )
            if a & b not in masks:
                raise NotATopology(
                    f"intersection of {sorted(_o.bits(a))} and {sorted(_o.bits(b))} is not open",
                    (a, b),
                )
    rows = []
    for i in range(n):
        # i <= j iff every open containing i contains j; the smallest such open is U_i
        u = full
        for m in masks:
            if m >> i & 1:
                u &= m
        rows.append(u)
    return Preorder(n, tuple(rows))


def open_sets(P: Preorder) -> list[OpenSet]:
    """All up-sets of ``P``, sorted by characteristic vector."""
    classes = P.classes
    _, strict = P.quotient()
    out = []
    for cm in _o.upsets(strict):
        m = 0
        for c in _o.bits(cm):
            m |= classes[c]
        out.append(OpenSet(m, P.n))
    out.sort(key=OpenSet.characteristic)
    return out


def minimal_open(P: Preorder, x: int) -> OpenSet:
    if not 0 <= x < P.n:
        raise IndexOutOfRange(f"point {x} not in range({P.n})")
    return OpenSet(P.up[x], P.n)


def restrict(P: Preorder, Y) -> Preorder:
    """Induced preorder on ``Y``, relabelled in increasing order of the kept points."""
    if isinstance(Y, OpenSet):
        Y = Y.mask
    keep = sorted(_o.bits(Y)) if isinstance(Y, int) else sorted(set(Y))
    if keep and not (0 <= keep[0] and keep[-1] < P.n):
        raise IndexOutOfRange(f"subset {keep} not within range({P.n})")
    return Preorder(len(keep), _o.restrict_rows(P.up, keep))


def canonicalize(P: Preorder) -> FiniteSpace:
    weights, strict = P.quotient()
    return FiniteSpace.from_weighted_poset(weights, strict)


def dual(X: FiniteSpace) -> FiniteSpace:
    return FiniteSpace.from_weighted_poset(X.weights, X.down)


def expand(X: FiniteSpace) -> Preorder:
    """Standard representative on ``range(n)``: classes get consecutive labels in canonical order."""
    starts = []
    pos = 0
    for w in X.weights:
        starts.append(pos)
        pos += w
    block = [((1 << w) - 1) << s for w, s in zip(X.weights, starts)]
    rows = []
    for c, w in enumerate(X.weights):
        above = block[c]
        for d in _o.bits(X.strict[c]):
            above |= block[d]
        rows.extend([above] * w)
    return Preorder(X.n, tuple(rows))


def sum_preorder(P: Preorder, Q: Preorder) -> Preorder:
    """Disjoint union, ``Q`` shifted by ``P.n``."""
    return Preorder(P.n + Q.n, P.up + tuple(r << P.n for r in Q.up))


def join_preorder(P: Preorder, Q: Preorder) -> Preorder:
    """Every point of ``P`` below every point of ``Q`` (``Q`` shifted by ``P.n``)."""
    top = ((1 << Q.n) - 1) << P.n
    return Preorder(P.n + Q.n, tuple(r | top for r in P.up) + tuple(r << P.n for r in Q.up))
