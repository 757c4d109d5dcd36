"""Exact polynomials in a single formal parameter ``q`` with integer coefficients."""

from __future__ import annotations

from fractions import Fraction


class Scalar:
    """Immutable integer polynomial in ``q``.

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with no zero
    coefficients. Plain ``int`` values are accepted wherever a ``Scalar`` is.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        clean = {}
        for e, c in dict(terms).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                clean[int(e)] = int(c)
        self._terms = tuple(sorted(clean.items()))
        self._hash = None

    @classmethod
    def q(cls, exponent=1, coefficient=1) -> Scalar:
        return cls({exponent: coefficient})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coefficient(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    @property
    def degree(self) -> int:
        """Highest exponent present; -1 for the zero polynomial."""
        return self._terms[-1][0] if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def __int__(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coefficient(0)

    def evaluate(self, q) -> Fraction:
        """Exact value at a rational ``q``."""
        q = Fraction(q)
        return sum((c * q**e for e, c in self._terms), Fraction(0))

    # arithmetic

    @staticmethod
    def coerce(other) -> Scalar:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return _constant(other)
        return NotImplemented

    def __add__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return Scalar(acc)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        if other._terms == ((0, 1),):
            return self
        if self._terms == ((0, 1),):
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Scalar(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            # constants hash like the ints they equal
            self._hash = hash(int(self)) if self.is_constant() else hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                mono = str(abs(c))
            else:
                power = "q" if e == 1 else f"q^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"{sign} {mono}")
        return " ".join(parts)


def _constant(c: int) -> Scalar:
    if c == 1:
        return ONE
    if c == 0:
        return ZERO
    return Scalar({0: c})


ZERO = Scalar()
ONE = Scalar({0: 1})
Q = Scalar({1: 1})
