"""The algebra spanned by finite spaces.

Basis elements are :class:`FiniteSpace` values; the empty space is the unit.
Two products (disjoint union ``.`` and join ``>``), the open-set coproduct,
counit, antipode and the ``zeta_q`` character are provided, together with
exhaustive verification suites for the bialgebra axioms.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian

from . import order as _o
from .errors import EmptySpace
from .linear import LinearCombination, accumulate
from .report import AxiomReport
from .scalar import ONE, Q, ZERO, Scalar
from .spaces import FiniteSpace, canonicalize, dual, expand, join_preorder, sum_preorder

EMPTY = FiniteSpace.empty()
POINT = FiniteSpace.point()


class FVector(LinearCombination):
    """Element of the span of finite spaces."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return key.encoding()

    @classmethod
    def unit(cls) -> FVector:
        return cls.basis(EMPTY)

    def degrees(self) -> set[int]:
        return {X.n for X in self}

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return product_sum(self, other)

    def __str__(self):
        from .textio import format_fvector

        return format_fvector(self)


class FTensor(LinearCombination):
    """Element of the tensor square, keyed by pairs of spaces."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return (key[0].encoding(), key[1].encoding())

    def __str__(self):
        from .textio import format_ftensor

        return format_ftensor(self)


def as_vector(a) -> FVector:
    if isinstance(a, FVector):
        return a
    if isinstance(a, FiniteSpace):
        return FVector.basis(a)
    raise TypeError(f"cannot interpret {a!r} as an FVector")


def _bilinear(a, b, op, cls=FVector):
    acc: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            accumulate(acc, op(x, y), cx * cy)
    return cls._wrap(acc)


# ---------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def space_sum(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    """Disjoint union, computed on standard representatives."""
    if not X.k:
        return Y
    if not Y.k:
        return X
    return canonicalize(sum_preorder(expand(X), expand(Y)))


@lru_cache(maxsize=None)
def space_join(X: FiniteSpace, Y: FiniteSpace) -> FiniteSpace:
    """Join: every point of ``X`` strictly below every point of ``Y``."""
    if not X.k:
        return Y
    if not Y.k:
        return X
    return canonicalize(join_preorder(expand(X), expand(Y)))


def product_sum(a, b) -> FVector:
    return _bilinear(as_vector(a), as_vector(b), space_sum)


def product_join(a, b) -> FVector:
    return _bilinear(as_vector(a), as_vector(b), space_join)


def tensor_product(s: FTensor, t: FTensor, op=space_sum) -> FTensor:
    """Componentwise product on the tensor square: ``(a@b)(c@d) = ac @ bd``."""
    return _bilinear(s, t, lambda x, y: (op(x[0], y[0]), op(x[1], y[1])), FTensor)


def tensor_join(s: FTensor, t: FTensor) -> FTensor:
    return tensor_product(s, t, space_join)


def tensor(a, b) -> FTensor:
    """``a (x) b`` as an element of the tensor square."""
    return _bilinear(as_vector(a), as_vector(b), lambda x, y: (x, y), FTensor)


# ---------------------------------------------------------------------------
# coproduct, counit, antipode


@lru_cache(maxsize=None)
def _coproduct_terms(X: FiniteSpace) -> tuple:
    full = (1 << X.k) - 1
    acc: dict = {}
    for up in _o.upsets(X.strict):
        key = (X.restrict(full & ~up), X.restrict(up))
        acc[key] = acc.get(key, 0) + 1
    return tuple(acc.items())


def coproduct(a) -> FTensor:
    """Sum over open sets ``O`` of ``X|complement(O) (x) X|O``, extended linearly."""
    acc: dict = {}
    for X, c in as_vector(a).items():
        for key, mult in _coproduct_terms(X):
            accumulate(acc, key, c * mult)
    return FTensor._wrap(acc)


def counit(a) -> Scalar:
    return as_vector(a).coefficient(EMPTY)


@lru_cache(maxsize=None)
def _antipode_basis(X: FiniteSpace) -> FVector:
    if not X.k:
        return FVector.unit()
    acc = {X: -ONE}
    for (left, right), mult in _coproduct_terms(X):
        if not left.k or not right.k:
            continue
        for Z, c in _antipode_basis(left).items():
            accumulate(acc, space_sum(Z, right), -c * mult)
    return FVector._wrap(acc)


def antipode(a) -> FVector:
    """Graded-connected recursion ``S(x) = -x - sum S(x') x''`` over the reduced coproduct."""
    acc: dict = {}
    for X, c in as_vector(a).items():
        for Z, cz in _antipode_basis(X).items():
            accumulate(acc, Z, c * cz)
    return FVector._wrap(acc)


def zeta_q(a) -> Scalar:
    """Character sending a space to ``q`` to the number of strictly comparable point pairs."""
    total = ZERO
    for X, c in as_vector(a).items():
        total = total + c * Q ** X.strict_pairs()
    return total


# ---------------------------------------------------------------------------
# factorizations


def decompose_connected(X: FiniteSpace) -> list[FiniteSpace]:
    """Connected components, sorted; their disjoint union is ``X``."""
    if not X.k:
        raise EmptySpace("the empty space has no components")
    return sorted(X.restrict(m) for m in _o.connected_components(X.strict))


def is_connected(X: FiniteSpace) -> bool:
    return X.k > 0 and len(_o.connected_components(X.strict)) == 1


def join_factors(X: FiniteSpace) -> list[FiniteSpace]:
    """Unique factorization into join-indecomposables, bottom factor first."""
    if not X.k:
        raise EmptySpace("the empty space has no join factors")
    full = (1 << X.k) - 1
    cuts = []
    for d in _o.downsets(X.strict):
        if d == 0 or d == full:
            continue
        rest = full & ~d
        if all(X.strict[c] & rest == rest for c in _o.bits(d)):
            cuts.append(d)
    # valid cuts are nested, so sorting by size orders them by inclusion
    cuts.sort(key=_o.popcount)
    factors = []
    prev = 0
    for d in cuts + [full]:
        factors.append(X.restrict(d & ~prev))
        prev = d
    return factors


def is_join_indecomposable(X: FiniteSpace) -> bool:
    return X.k > 0 and len(join_factors(X)) == 1


def is_irreducible(X: FiniteSpace) -> bool:
    return is_connected(X) and is_join_indecomposable(X)


# ---------------------------------------------------------------------------
# verification suites


def _spaces_upto(n_max):
    from .enumeration import enumerate_spaces

    out = [EMPTY]
    for n in range(1, n_max + 1):
        out.extend(enumerate_spaces(n))
    return out


def _pairs_upto(n_max):
    from .enumeration import enumerate_spaces

    by_size = {0: [EMPTY]}
    for n in range(1, n_max + 1):
        by_size[n] = enumerate_spaces(n)
    for a in range(n_max + 1):
        for b in range(n_max + 1 - a):
            yield from cartesian(by_size[a], by_size[b])


def _iterated_left(X) -> dict:
    acc: dict = {}
    for (l, r), c in _coproduct_terms(X):
        for (ll, lr), c2 in _coproduct_terms(l):
            accumulate(acc, (ll, lr, r), Scalar(c * c2))
    return acc


def _iterated_right(X) -> dict:
    acc: dict = {}
    for (l, r), c in _coproduct_terms(X):
        for (rl, rr), c2 in _coproduct_terms(r):
            accumulate(acc, (l, rl, rr), Scalar(c * c2))
    return acc


def _check_coassoc(report):
    for X in _spaces_upto(report.n_max):
        report.checked += 1
        if _iterated_left(X) != _iterated_right(X):
            report.fail("coassociativity", X)


def _check_counit(report):
    for X in _spaces_upto(report.n_max):
        report.checked += 1
        left: dict = {}
        right: dict = {}
        for (l, r), c in _coproduct_terms(X):
            if not l.k:
                accumulate(left, r, Scalar(c))
            if not r.k:
                accumulate(right, l, Scalar(c))
        if left != {X: ONE} or right != {X: ONE}:
            report.fail("counit law", X)


def _check_hopf_compat(report):
    for X, Y in _pairs_upto(report.n_max):
        report.checked += 1
        lhs = coproduct(space_sum(X, Y))
        rhs = tensor_product(coproduct(X), coproduct(Y))
        if lhs != rhs:
            report.fail("Delta(X.Y) = Delta(X).Delta(Y)", (X, Y))


def _check_infinitesimal(report):
    for X, Y in _pairs_upto(report.n_max):
        report.checked += 1
        lhs = coproduct(space_join(X, Y))
        rhs = (
            tensor_join(coproduct(X), tensor(EMPTY, Y))
            + tensor_join(tensor(X, EMPTY), coproduct(Y))
            - tensor(X, Y)
        )
        if lhs != rhs:
            report.fail("Delta(X>Y) = Delta(X)>(1@Y) + (X@1)>Delta(Y) - X@Y", (X, Y))


def _convolve(X, left_map, right_map) -> FVector:
    acc: dict = {}
    for (l, r), c in _coproduct_terms(X):
        for a, ca in left_map(l).items():
            for b, cb in right_map(r).items():
                accumulate(acc, space_sum(a, b), ca * cb * c)
    return FVector._wrap(acc)


def _check_antipode(report):
    for X in _spaces_upto(report.n_max):
        report.checked += 1
        expected = FVector.unit() if not X.k else FVector.zero()
        if _convolve(X, _antipode_basis, FVector.basis) != expected:
            report.fail("m(S@id)Delta = unit.counit", X)
        if _convolve(X, FVector.basis, _antipode_basis) != expected:
            report.fail("m(id@S)Delta = unit.counit", X)


def _check_duality(report):
    for X in _spaces_upto(report.n_max):
        report.checked += 1
        if dual(dual(X)) != X:
            report.fail("dual is an involution", X)
        swapped = FTensor(((dual(r), dual(l)), c) for (l, r), c in _coproduct_terms(X))
        if coproduct(dual(X)) != swapped:
            report.fail("Delta(X*) = (*@*) tau Delta(X)", X)
    for X, Y in _pairs_upto(report.n_max):
        report.checked += 1
        if dual(space_sum(X, Y)) != space_sum(dual(X), dual(Y)):
            report.fail("(X.Y)* = X*.Y*", (X, Y))
        if dual(space_join(X, Y)) != space_join(dual(Y), dual(X)):
            report.fail("(X>Y)* = Y*>X*", (X, Y))


def _check_products(report):
    from .enumeration import enumerate_spaces

    by_size = {0: [EMPTY]}
    for n in range(1, report.n_max + 1):
        by_size[n] = enumerate_spaces(n)
    for a in range(report.n_max + 1):
        for b in range(report.n_max + 1 - a):
            for c in range(report.n_max + 1 - a - b):
                for X, Y, Z in cartesian(by_size[a], by_size[b], by_size[c]):
                    report.checked += 1
                    if space_sum(space_sum(X, Y), Z) != space_sum(X, space_sum(Y, Z)):
                        report.fail("associativity of .", (X, Y, Z))
                    if space_join(space_join(X, Y), Z) != space_join(X, space_join(Y, Z)):
                        report.fail("associativity of >", (X, Y, Z))
                    if c == 0 and space_sum(X, Y) != space_sum(Y, X):
                        report.fail("commutativity of .", (X, Y))


SUITES = {
    "coassoc": _check_coassoc,
    "counit": _check_counit,
    "hopf-compat": _check_hopf_compat,
    "antipode": _check_antipode,
    "infinitesimal": _check_infinitesimal,
    "duality": _check_duality,
    "products": _check_products,
}


def verify_axioms(n_max: int, suite: str) -> AxiomReport:
    """Exhaustively check one family of identities on spaces of total size <= n_max.

    Failures are reported, never raised.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    report = AxiomReport(suite, n_max)
    SUITES[suite](report)
    return report
