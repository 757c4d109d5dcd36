"""Finite formal linear combinations with :class:`Scalar` coefficients."""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar


def accumulate(acc: dict, key, coef) -> None:
    """Add ``coef`` to ``acc[key]`` in place, dropping the key if it cancels."""
    new = acc.get(key, ZERO) + coef
    if new:
        acc[key] = new
    else:
        acc.pop(key, None)


class LinearCombination:
    """Immutable map basis-key -> nonzero Scalar.

    Subclasses fix the key type and add the algebra structure; this class
    only provides the vector-space operations.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coef in items:
                accumulate(clean, key, Scalar.coerce(coef))
        self._terms = clean

    @classmethod
    def _wrap(cls, acc: dict):
        # acc is already clean; skip revalidation
        obj = cls.__new__(cls)
        obj._terms = acc
        return obj

    @classmethod
    def basis(cls, key, coef=ONE):
        return cls({key: coef})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> Scalar:
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(acc, k, c)
        return self._wrap(acc)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> LinearCombination:
        s = Scalar.coerce(s)
        if not s:
            return self.zero()
        return self._wrap({k: c * s for k, c in self._terms.items() if c * s})

    def __rmul__(self, s):
        if isinstance(s, (int, Scalar)):
            return self.scale(s)
        return NotImplemented

    def map_coefficients(self, fn):
        return type(self)((k, fn(c)) for k, c in self._terms.items())

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kc: self.sort_key(kc[0]))

    @staticmethod
    def sort_key(key):
        return key

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"
