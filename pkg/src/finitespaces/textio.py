"""Line-oriented text forms and their parsers.

Every ``format_*`` has a matching ``parse_*`` with ``parse(format(x)) == x``.
Parsers raise :class:`ParseError` carrying the 1-based line and column of
the offending character; ``line`` is supplied by callers reading files.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import order as _o
from .errors import FiniteSpaceError, ParseError
from .scalar import Scalar
from .spaces import FiniteSpace, Preorder

_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Cursor:
    def __init__(self, text: str, line: int = 1, offset: int = 0):
        self.text = text
        self.pos = 0
        self.line = line
        self.offset = offset

    def error(self, message, pos=None) -> ParseError:
        col = (self.pos if pos is None else pos) + 1 + self.offset
        return ParseError(message, self.line, col)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            found = self.text[self.pos : self.pos + len(s)] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def name(self) -> str:
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error("expected a letter name")
        self.pos = m.end()
        return m.group()

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")


def _sub(cur: _Cursor, end: int) -> _Cursor:
    """Cursor over ``cur.text[cur.pos:end]`` that reports columns in the outer text."""
    inner = _Cursor(cur.text[cur.pos : end], cur.line, cur.offset + cur.pos)
    return inner


# ---------------------------------------------------------------------------
# scalars


def format_scalar(s: Scalar) -> str:
    return str(s)


def _parse_scalar(cur: _Cursor) -> Scalar:
    terms: dict = {}
    sign = 1
    if cur.accept("-"):
        sign = -1
    while True:
        start = cur.pos
        coef = 1
        exp = 0
        if cur.peek("q"):
            cur.pos += 1
            exp = 1
        else:
            coef = cur.integer()
            if cur.accept("*"):
                cur.expect("q")
                exp = 1
        if exp and cur.accept("^"):
            exp = cur.integer()
        if exp in terms:
            raise cur.error(f"repeated power q^{exp}", start)
        terms[exp] = sign * coef
        cur.skip_spaces()
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            break
        cur.skip_spaces()
    return Scalar(terms)


def parse_scalar(text: str, line: int = 1) -> Scalar:
    cur = _Cursor(text.strip(), line)
    out = _parse_scalar(cur)
    cur.finish()
    return out


# ---------------------------------------------------------------------------
# spaces and preorders


def format_space(X: FiniteSpace) -> str:
    w = ",".join(map(str, X.weights))
    cov = ";".join(f"({i + 1},{j + 1})" for i, j in _o.covers(X.strict))
    return f"FS k={X.k} w={w} cov={cov}"


def _parse_space(cur: _Cursor) -> FiniteSpace:
    cur.expect("FS k=")
    k = cur.integer()
    cur.expect(" w=")
    weights = []
    if k:
        weights.append(cur.integer())
        while cur.accept(","):
            weights.append(cur.integer())
    if len(weights) != k:
        raise cur.error(f"expected {k} weights, got {len(weights)}")
    if any(w < 1 for w in weights):
        raise cur.error("weights must be positive")
    cur.expect(" cov=")
    rows = [0] * k
    more = cur.peek("(")
    while more:
        pos = cur.pos
        cur.expect("(")
        i = cur.integer()
        cur.expect(",")
        j = cur.integer()
        cur.expect(")")
        if not (1 <= i <= k and 1 <= j <= k):
            raise cur.error(f"class index out of range in ({i},{j})", pos)
        if i == j:
            raise cur.error(f"self-loop ({i},{j})", pos)
        rows[i - 1] |= 1 << (j - 1)
        more = cur.accept(";")
    strict = _o.transitive_closure(rows)
    if not _o.is_strict_order(strict):
        raise cur.error("covering pairs contain a cycle")
    return FiniteSpace.from_weighted_poset(weights, strict)


def parse_space(text: str, line: int = 1) -> FiniteSpace:
    cur = _Cursor(text.strip(), line)
    out = _parse_space(cur)
    cur.finish()
    return out


def format_preorder(P: Preorder) -> str:
    bits = "".join("1" if P.leq(i, j) else "0" for i in range(P.n) for j in range(P.n))
    return f"PRE n={P.n} rel={bits}"


def parse_preorder(text: str, line: int = 1) -> Preorder:
    cur = _Cursor(text.strip(), line)
    cur.expect("PRE n=")
    n = cur.integer()
    cur.expect(" rel=")
    start = cur.pos
    bits = cur.text[start:]
    if len(bits) != n * n:
        raise cur.error(f"expected {n * n} relation bits, got {len(bits)}")
    for off, ch in enumerate(bits):
        if ch not in "01":
            raise cur.error(f"relation bits must be 0 or 1, found {ch!r}", start + off)
    matrix = [[bits[i * n + j] == "1" for j in range(n)] for i in range(n)]
    try:
        return Preorder.from_matrix(matrix)
    except FiniteSpaceError as exc:
        raise cur.error(str(exc), start) from exc


def parse_space_or_preorder(text: str, line: int = 1) -> FiniteSpace:
    """Accept either record type; preorders are canonicalized."""
    from .spaces import canonicalize

    stripped = text.strip()
    if stripped.startswith("PRE"):
        return canonicalize(parse_preorder(stripped, line))
    return parse_space(stripped, line)


# ---------------------------------------------------------------------------
# linear combinations of spaces


def _join_terms(parts) -> str:
    parts = list(parts)
    return " + ".join(parts) if parts else "0"


def format_fvector(v) -> str:
    return _join_terms(f"({c}) * {format_space(X)}" for X, c in v.sorted_items())


def format_ftensor(t) -> str:
    return _join_terms(f"({c}) * {format_space(l)} | {format_space(r)}" for (l, r), c in t.sorted_items())


def _terms(cur: _Cursor, parse_body):
    """Parse ``(<scalar>) <body> [+ (<scalar>) <body> ...]`` or ``0``."""
    out = []
    if cur.text == "0":
        cur.pos = 1
        return out
    while True:
        cur.expect("(")
        close = cur.text.find(")", cur.pos)
        if close < 0:
            raise cur.error("unclosed coefficient")
        inner = _sub(cur, close)
        coef = _parse_scalar(inner)
        if not inner.at_end():
            raise inner.error("malformed coefficient")
        cur.pos = close + 1
        out.append((coef, parse_body(cur)))
        if cur.at_end():
            return out
        cur.expect(" + ")


def _space_until(cur: _Cursor, stop: str) -> FiniteSpace:
    end = cur.text.find(stop, cur.pos)
    end = len(cur.text) if end < 0 else end
    inner = _sub(cur, end)
    X = _parse_space(inner)
    inner.finish()
    cur.pos = end
    return X


def parse_fvector(text: str, line: int = 1):
    from .algebra import FVector

    cur = _Cursor(text.strip(), line)

    def body(c):
        c.expect(" * ")
        return _space_until(c, " + (")

    terms = _terms(cur, body)
    cur.finish()
    return FVector([(X, s) for s, X in terms])


def parse_ftensor(text: str, line: int = 1):
    from .algebra import FTensor

    cur = _Cursor(text.strip(), line)

    def body(c):
        c.expect(" * ")
        left = _space_until(c, " | ")
        c.expect(" | ")
        right = _space_until(c, " + (")
        return (left, right)

    terms = _terms(cur, body)
    cur.finish()
    return FTensor([(key, s) for s, key in terms])


# ---------------------------------------------------------------------------
# quasi-symmetric functions


def format_composition(a) -> str:
    return "M[" + ",".join(map(str, a)) + "]"


def format_qsym(x) -> str:
    return _join_terms(f"({c})*{format_composition(a)}" for a, c in x.sorted_items())


def format_qsym_at(x, q) -> str:
    """Coefficients evaluated at a rational ``q``; terms that vanish are dropped."""
    parts = []
    for a, c in x.sorted_items():
        v = c.evaluate(q)
        if v:
            parts.append(f"({v})*{format_composition(a)}")
    return _join_terms(parts)


def _composition(cur: _Cursor) -> tuple:
    cur.expect("M[")
    parts = []
    if not cur.peek("]"):
        while True:
            pos = cur.pos
            v = cur.integer()
            if v < 1:
                raise cur.error("composition parts must be positive", pos)
            parts.append(v)
            if not cur.accept(","):
                break
    cur.expect("]")
    return tuple(parts)


def parse_qsym(text: str, line: int = 1):
    from .qsym import QSymElement

    cur = _Cursor(text.strip(), line)

    def body(c):
        c.expect("*")
        return _composition(c)

    terms = _terms(cur, body)
    cur.finish()
    return QSymElement([(a, s) for s, a in terms])


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


# ---------------------------------------------------------------------------
# words


def format_word(w) -> str:
    return " ".join(f"{x.name}:{x.degree}" for x in w) if w else "1"


def _word(cur: _Cursor, default_degree: int = 1) -> tuple:
    from .tensor import Letter

    if cur.accept("1"):
        return ()
    letters = []
    while True:
        name = cur.name()
        degree = default_degree
        if cur.accept(":"):
            pos = cur.pos
            degree = cur.integer()
            if degree < 1:
                raise cur.error("letter degrees must be positive", pos)
        letters.append(Letter(name, degree))
        if not cur.peek(" ") or cur.peek(" + "):
            return tuple(letters)
        cur.skip_spaces()


def parse_word(text: str, line: int = 1, default_degree: int = 1) -> tuple:
    """``a:1 b:1 c:2``; a bare letter gets ``default_degree``; ``1`` is the empty word."""
    cur = _Cursor(text.strip(), line)
    out = _word(cur, default_degree)
    cur.finish()
    return out


def format_tensor(x) -> str:
    return _join_terms(f"({c})*[{format_word(w)}]" for w, c in x.sorted_items())


def parse_tensor(text: str, line: int = 1):
    from .tensor import TensorElement

    cur = _Cursor(text.strip(), line)

    def body(c):
        c.expect("*[")
        w = _word(c)
        c.expect("]")
        return w

    terms = _terms(cur, body)
    cur.finish()
    return TensorElement([(w, s) for s, w in terms])


# ---------------------------------------------------------------------------
# simplicial complexes


def format_complex(K) -> str:
    return K.to_text()


def parse_complex(text: str):
    """One facet per line; the vertex count is inferred as ``max + 1``."""
    from .homotopy import SimplicialComplex

    facets = []
    for ln, raw in enumerate(text.splitlines(), 1):
        cur = _Cursor(raw.rstrip(), ln)
        if cur.at_end():
            continue
        face = [cur.integer()]
        while cur.accept(" "):
            face.append(cur.integer())
        cur.finish()
        if sorted(set(face)) != face:
            raise ParseError("facet vertices must be strictly increasing", ln, 1)
        facets.append(tuple(face))
    vertices = 1 + max((v for f in facets for v in f), default=-1)
    return SimplicialComplex(vertices, tuple(sorted(facets)))
