import pytest
from hypothesis import given
from hypothesis import strategies as st

from finitespaces import textio
from finitespaces.algebra import EMPTY, FTensor, FVector, antipode, coproduct
from finitespaces.enumeration import enumerate_spaces, iter_preorders
from finitespaces.errors import ParseError
from finitespaces.homotopy import order_complex
from finitespaces.qsym import QSymElement, compositions_of
from finitespaces.scalar import Scalar
from finitespaces.spaces import Preorder, canonicalize
from finitespaces.tensor import ALPHABET, Letter, TensorElement

SPACES = [EMPTY] + [X for n in range(1, 5) for X in enumerate_spaces(n)]
PREORDERS = [P for n in range(0, 4) for P in iter_preorders(n)]
COMPS = [a for n in range(0, 5) for a in compositions_of(n)]

scalars = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=4).map(Scalar)
spaces = st.sampled_from(SPACES)
letters = st.builds(Letter, st.sampled_from("abxyz"), st.integers(1, 4))
words = st.lists(letters, max_size=4).map(tuple)


@given(scalars)
def test_scalar_roundtrip(s):
    assert textio.parse_scalar(textio.format_scalar(s)) == s


@pytest.mark.parametrize("text,value", [("0", Scalar()), ("q", Scalar.q()), ("-2 + 3*q^4", Scalar({0: -2, 4: 3})), ("1 - q", Scalar({0: 1, 1: -1}))])
def test_scalar_parse(text, value):
    assert textio.parse_scalar(text) == value


@given(spaces)
def test_space_roundtrip(X):
    assert textio.parse_space(textio.format_space(X)) == X


@given(st.sampled_from(PREORDERS))
def test_preorder_roundtrip(P):
    assert textio.parse_preorder(textio.format_preorder(P)) == P
    assert textio.parse_space_or_preorder(textio.format_preorder(P)) == canonicalize(P)


def test_space_format_example():
    assert textio.format_space(canonicalize(Preorder.chain(2))) == "FS k=2 w=1,1 cov=(1,2)"
    assert textio.format_space(EMPTY) == "FS k=0 w= cov="


def test_parse_space_canonicalizes():
    a = textio.parse_space("FS k=2 w=1,1 cov=(2,1)")
    assert textio.format_space(a) == "FS k=2 w=1,1 cov=(1,2)"
    b = textio.parse_space("FS k=3 w=1,1,1 cov=(1,2);(2,3)")
    assert b == textio.parse_space("FS k=3 w=1,1,1 cov=(3,1);(1,2)")


@given(st.lists(st.tuples(spaces, scalars), max_size=4))
def test_fvector_roundtrip(terms):
    v = FVector(terms)
    assert textio.parse_fvector(textio.format_fvector(v)) == v


def test_fvector_and_ftensor_of_real_outputs():
    for X in SPACES[:12]:
        S = antipode(X)
        assert textio.parse_fvector(textio.format_fvector(S)) == S
        D = coproduct(X)
        assert textio.parse_ftensor(textio.format_ftensor(D)) == D
    assert textio.format_fvector(FVector()) == "0"
    assert textio.parse_ftensor("0") == FTensor()


@given(st.lists(st.tuples(st.sampled_from(COMPS), scalars), max_size=4))
def test_qsym_roundtrip(terms):
    x = QSymElement(terms)
    assert textio.parse_qsym(textio.format_qsym(x)) == x


def test_qsym_at():
    x = QSymElement([((1, 1), Scalar({0: 1})), ((2,), Scalar({1: 2}))])
    assert textio.format_qsym_at(x, textio.parse_rational("1/2")) == "(1)*M[2] + (1)*M[1,1]"
    assert textio.format_qsym_at(x, 0) == "(1)*M[1,1]"


@given(words)
def test_word_roundtrip(w):
    assert textio.parse_word(textio.format_word(w)) == w


def test_word_defaults():
    assert textio.parse_word("a b:2") == (Letter("a", 1), Letter("b", 2))
    assert textio.parse_word("1") == ()


@given(st.lists(st.tuples(words, scalars), max_size=4))
def test_tensor_roundtrip(terms):
    x = TensorElement(terms)
    assert textio.parse_tensor(textio.format_tensor(x)) == x


def test_complex_roundtrip():
    for X in SPACES[1:]:
        K = order_complex(X)
        assert textio.parse_complex(textio.format_complex(K)) == K


@pytest.mark.parametrize(
    "text,col,fragment",
    [
        ("FS k=2 w=1,1 cov=(1,3)", 18, "out of range"),
        ("FS k=2 w=1 cov=", 11, "expected 2 weights"),
        ("FS k=2 w=1,1 cov=(1,2);(2,1)", None, "cycle"),
        ("FS k=1 w=1 cov=(1,1)", 16, "self-loop"),
        ("FS k=1 w=0 cov=", None, "positive"),
        ("FS k=1 w=1 cov= extra", 16, "trailing"),
        ("XS k=1", 1, "expected"),
    ],
)
def test_space_errors(text, col, fragment):
    with pytest.raises(ParseError) as info:
        textio.parse_space(text, line=3)
    assert info.value.line == 3
    if col is not None:
        assert info.value.column == col
    assert fragment in str(info.value)


def test_preorder_errors():
    with pytest.raises(ParseError, match="relation bits"):
        textio.parse_preorder("PRE n=2 rel=1201")
    with pytest.raises(ParseError, match="expected 4"):
        textio.parse_preorder("PRE n=2 rel=110")
    with pytest.raises(ParseError):
        textio.parse_preorder("PRE n=2 rel=0101")
    with pytest.raises(ParseError):
        textio.parse_preorder("PRE n=3 rel=110011111")


def test_nested_error_columns():
    text = "(1) * FS k=1 w=1 cov= + (2) * FS k=1 w=x cov="
    with pytest.raises(ParseError) as info:
        textio.parse_fvector(text)
    assert info.value.column == text.index("w=x") + 3
    with pytest.raises(ParseError) as info:
        textio.parse_qsym("(1)*M[1,0]")
    assert info.value.column == 9


def test_other_errors():
    with pytest.raises(ParseError):
        textio.parse_rational("1/0")
    with pytest.raises(ParseError):
        textio.parse_scalar("q^2 + q^2")
    with pytest.raises(ParseError):
        textio.parse_word("a:0")
    with pytest.raises(ParseError):
        textio.parse_complex("0 1\n2 1\n")
