"""Quasi-symmetric functions in the monomial basis and the morphism phi_q.

A composition is a tuple of positive ints. ``QSymElement`` maps compositions
to :class:`Scalar` coefficients, so ``q`` stays symbolic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import order as _o
from .algebra import as_vector
from .errors import EmptySpace, InvalidExtension
from .linear import LinearCombination, accumulate
from .scalar import ONE, Q, ZERO, Scalar
from .spaces import FiniteSpace

Composition = tuple


def is_composition(a) -> bool:
    return isinstance(a, tuple) and all(isinstance(x, int) and x >= 1 for x in a)


def compositions_of(n: int):
    """All compositions of ``n`` (the empty one for ``n == 0``)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


class QSymElement(LinearCombination):
    __slots__ = ()

    @staticmethod
    def sort_key(a):
        return (sum(a), len(a), a)

    @classmethod
    def M(cls, *parts, coef=ONE) -> QSymElement:
        comp = tuple(parts[0]) if len(parts) == 1 and isinstance(parts[0], (tuple, list)) else tuple(parts)
        if not is_composition(comp):
            raise ValueError(f"{comp} is not a composition")
        return cls({comp: coef})

    @classmethod
    def unit(cls) -> QSymElement:
        return cls.basis(())

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return qsym_product(self, other)

    def evaluate(self, q) -> dict:
        """Coefficients at a rational ``q`` (lossy: distinct polynomials may collide)."""
        out = {}
        for a, c in self.items():
            v = c.evaluate(q)
            if v:
                out[a] = v
        return out

    def __str__(self):
        from .textio import format_qsym

        return format_qsym(self)


class QSymTensor(LinearCombination):
    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return (QSymElement.sort_key(key[0]), QSymElement.sort_key(key[1]))


class Polynomial(LinearCombination):
    """Polynomial in ``x_1..x_m``, keyed by exponent tuples of length ``m``."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        acc: dict = {}
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                accumulate(acc, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return Polynomial._wrap(acc)


# ---------------------------------------------------------------------------
# linear extensions


@dataclass(frozen=True)
class LevelPartition:
    """Ordered partition of the classes; every prefix union is a down-set."""

    levels: tuple[frozenset[int], ...]

    @classmethod
    def from_masks(cls, masks) -> LevelPartition:
        return cls(tuple(frozenset(_o.bits(m)) for m in masks))

    def masks(self) -> list[int]:
        return [_o.mask_of(lv) for lv in self.levels]

    def value(self, c: int) -> int:
        """Level number (from 1) assigned to class ``c``."""
        for i, lv in enumerate(self.levels, 1):
            if c in lv:
                return i
        raise KeyError(c)

    def __len__(self):
        return len(self.levels)


def _validate(X: FiniteSpace, f: LevelPartition) -> list[int]:
    masks = f.masks()
    seen = 0
    for m in masks:
        if not m:
            raise InvalidExtension("empty level")
        if m & seen:
            raise InvalidExtension("levels overlap")
        seen |= m
        # prefix must be a down-set: nothing outside it sits below anything in it
        for c in _o.bits(seen):
            if X.down[c] & ~seen:
                raise InvalidExtension(f"prefix up to level containing {c} is not a down-set")
    if seen != (1 << X.k) - 1:
        raise InvalidExtension("levels do not cover all classes")
    return masks


def _peel(strict, remaining):
    if not remaining:
        yield ()
        return
    for d in _o.downsets(strict, within=remaining):
        if d:
            for rest in _peel(strict, remaining & ~d):
                yield (d,) + rest


def standard_linear_extensions(X: FiniteSpace):
    """Stream all standard linear extensions of ``X`` as level partitions."""
    if not X.k:
        raise EmptySpace("standard linear extensions need a nonempty space")
    for masks in _peel(X.strict, (1 << X.k) - 1):
        yield LevelPartition.from_masks(masks)


def _alpha_masks(X, masks) -> int:
    total = 0
    for m in masks:
        for c in _o.bits(m):
            for d in _o.bits(X.strict[c] & m):
                total += X.weights[c] * X.weights[d]
    return total


def alpha(X: FiniteSpace, f: LevelPartition) -> int:
    """Number of strictly comparable point pairs that share a level."""
    return _alpha_masks(X, _validate(X, f))


def packing(X: FiniteSpace, f: LevelPartition) -> Composition:
    """Point counts of the levels, in order."""
    masks = _validate(X, f)
    return tuple(sum(X.weights[c] for c in _o.bits(m)) for m in masks)


@lru_cache(maxsize=None)
def _phi_basis(X: FiniteSpace) -> QSymElement:
    if not X.k:
        return QSymElement.unit()
    acc: dict = {}
    for masks in _peel(X.strict, (1 << X.k) - 1):
        comp = tuple(sum(X.weights[c] for c in _o.bits(m)) for m in masks)
        accumulate(acc, comp, Q ** _alpha_masks(X, masks))
    return QSymElement._wrap(acc)


def phi_q(a) -> QSymElement:
    """Sum over standard linear extensions ``f`` of ``q^alpha(f) M_P(f)``, extended linearly."""
    acc: dict = {}
    for X, c in as_vector(a).items():
        for comp, cc in _phi_basis(X).items():
            accumulate(acc, comp, c * cc)
    return QSymElement._wrap(acc)


def extension_count(X: FiniteSpace) -> int:
    """Number of standard linear extensions (the summand count in phi_q)."""
    if not X.k:
        return 1
    return sum(1 for _ in _peel(X.strict, (1 << X.k) - 1))


# ---------------------------------------------------------------------------
# products and coproduct


@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> tuple:
    """Overlapping shuffle of two compositions, as ``((composition, multiplicity), ...)``."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict = {}
    for head, x, y in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for comp, m in quasi_shuffle(x, y):
            key = (head,) + comp
            acc[key] = acc.get(key, 0) + m
    return tuple(acc.items())


def qsym_product(a: QSymElement, b: QSymElement) -> QSymElement:
    acc: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            c = cx * cy
            for comp, m in quasi_shuffle(x, y):
                accumulate(acc, comp, c * m)
    return QSymElement._wrap(acc)


def qsym_coproduct(a: QSymElement) -> QSymTensor:
    """Deconcatenation of compositions."""
    acc: dict = {}
    for comp, c in a.items():
        for i in range(len(comp) + 1):
            accumulate(acc, (comp[:i], comp[i:]), c)
    return QSymTensor._wrap(acc)


def succ_q(a: QSymElement, b: QSymElement) -> QSymElement:
    """``M_a >_q M_b = M_(a.b) + q^(a_last * b_first) M_(a with last and first merged)``."""
    acc: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            c = cx * cy
            if not x or not y:
                accumulate(acc, x + y, c)
                continue
            accumulate(acc, x + y, c)
            merged = x[:-1] + (x[-1] + y[0],) + y[1:]
            accumulate(acc, merged, c * Q ** (x[-1] * y[0]))
    return QSymElement._wrap(acc)


def zeta_qsym(a: QSymElement) -> Scalar:
    """Character with ``M_() -> 1``, ``M_(n) -> 1`` and every longer composition to 0."""
    total = ZERO
    for comp, c in a.items():
        if len(comp) <= 1:
            total = total + c
    return total


def qsym_tensor_map(phi, t) -> QSymTensor:
    """Apply ``phi (x) phi`` to an element of the tensor square of spaces."""
    acc: dict = {}
    for (l, r), c in t.items():
        for a, ca in phi(l).items():
            for b, cb in phi(r).items():
                accumulate(acc, (a, b), c * ca * cb)
    return QSymTensor._wrap(acc)


def expand_polynomial(a: QSymElement, m: int) -> Polynomial:
    """Truncation to the variables ``x_1..x_m``."""
    if m < 1:
        raise ValueError("need at least one variable")
    acc: dict = {}
    for comp, c in a.items():
        for idx in combinations(range(m), len(comp)):
            exps = [0] * m
            for i, e in zip(idx, comp):
                exps[i] = e
            accumulate(acc, tuple(exps), c)
    return Polynomial._wrap(acc)


# ---------------------------------------------------------------------------
# verification suites


def check_oracle(degree_max: int = 5, m: int = 5):
    """Quasi-shuffle against multiplication of the truncations to ``m`` variables,
    for every pair of compositions each of degree <= ``degree_max``."""
    from .report import AxiomReport

    report = AxiomReport("quasi-shuffle-oracle", degree_max)
    comps = [a for d in range(degree_max + 1) for a in compositions_of(d)]
    for a in comps:
        for b in comps:
            report.checked += 1
            x, y = QSymElement.basis(a), QSymElement.basis(b)
            if expand_polynomial(x * y, m) != expand_polynomial(x, m) * expand_polynomial(y, m):
                report.fail("quasi-shuffle = polynomial product", (a, b))
    return report


def check_qsym(n_max: int, seed: int = 0, samples: int = 100) -> list:
    """Morphism laws for phi_q, exhaustive up to ``n_max`` plus ``samples``
    random pairs at size ``n_max + 1``; the character factorization; the
    polynomial oracle for the quasi-shuffle."""
    import random

    from .algebra import _pairs_upto, _spaces_upto, coproduct, space_join, space_sum, zeta_q
    from .enumeration import enumerate_spaces
    from .report import AxiomReport

    def pair_laws(report, X, Y):
        report.checked += 1
        if phi_q(space_sum(X, Y)) != phi_q(X) * phi_q(Y):
            report.fail("phi(X.Y) = phi(X)phi(Y)", (X, Y))
        if phi_q(space_join(X, Y)) != succ_q(phi_q(X), phi_q(Y)):
            report.fail("phi(X>Y) = phi(X) >_q phi(Y)", (X, Y))

    products = AxiomReport("phi-products", n_max)
    for X, Y in _pairs_upto(n_max):
        pair_laws(products, X, Y)
    rng = random.Random(seed)
    big = n_max + 1
    if samples and big <= 7:
        sizes = {}
        for _ in range(samples):
            a = rng.randint(1, big - 1)
            if a not in sizes:
                sizes[a] = enumerate_spaces(a)
            if big - a not in sizes:
                sizes[big - a] = enumerate_spaces(big - a)
            pair_laws(products, rng.choice(sizes[a]), rng.choice(sizes[big - a]))

    coalg = AxiomReport("phi-coproduct", n_max)
    zeta = AxiomReport("zeta-factorization", n_max)
    for X in _spaces_upto(n_max):
        coalg.checked += 1
        if qsym_tensor_map(phi_q, coproduct(X)) != qsym_coproduct(phi_q(X)):
            coalg.fail("(phi@phi)Delta = Delta phi", X)
        zeta.checked += 1
        if zeta_q(X) != zeta_qsym(phi_q(X)):
            zeta.fail("zeta_q = zeta_QSym o phi_q", X)
    if samples and big <= 7:
        for X in rng.sample(enumerate_spaces(big), min(samples, len(enumerate_spaces(big)))):
            coalg.checked += 1
            if qsym_tensor_map(phi_q, coproduct(X)) != qsym_coproduct(phi_q(X)):
                coalg.fail("(phi@phi)Delta = Delta phi", X)

    return [products, coalg, zeta, check_oracle(max(n_max, 5))]
