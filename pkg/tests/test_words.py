import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinlink import CyclicWord, FreeWord, Letter, RecursiveSubstitutionError

W = FreeWord.parse


def test_reduce_single_cancellation():
    assert W("a a^-1").reduce() == W("")
    assert W("a b b^-1 a").reduce() == W("a a")


def test_reduce_cascading():
    assert W("a b c c^-1 b^-1 a").reduce() == W("a a")


def test_reduce_ten_letter_concatenation():
    # u * v^-1 with u = a1 a2 a1 a2 a1 and v = a1 a1 a2 a1 a2: no letter
    # cancels at the seam, so the reduced form is the concatenation itself.
    w = W("a1 a2 a1 a2 a1") * W("a1 a1 a2 a1 a2").inverse()
    reduced = w.reduce()
    assert len(reduced) == 10
    assert reduced == W("a1 a2 a1 a2 a1 a2^-1 a1^-1 a2^-1 a1^-1 a1^-1")


def test_reduce_never_lengthens():
    w = W("a b^-1 b a^-1 a")
    assert len(w.reduce()) <= len(w)


def test_substitute_hub_into_chain_relator():
    # x x a1 x^-1 x^-1 a1^-1 under x -> a1 a2, then cyclic reduction,
    # is the standard four-letter relator read backwards.
    w = W("x x a1 x^-1 x^-1 a1^-1")
    out = w.substitute("x", W("a1 a2"))
    assert out == W("a1 a2 a1 a2 a1 a2^-1 a1^-1 a2^-1 a1^-1 a1^-1")
    assert out.cyclic_core() == W("a2 a1 a2 a1 a2^-1 a1^-1 a2^-1 a1^-1")
    standard = W("a1 a2 a1 a2") * W("a2 a1 a2 a1").inverse()
    assert CyclicWord(out) == CyclicWord(standard.inverse())


def test_substitute_single_letter():
    assert W("g").substitute("g", W("h")) == W("h")


def test_substitute_absent_generator_is_identity():
    w = W("a b a^-1")
    assert w.substitute("g", W("h")) == w


def test_substitute_rejects_recursion():
    with pytest.raises(RecursiveSubstitutionError):
        W("g").substitute("g", W("a g"))


def test_word_serialization_round_trip():
    w = W("x^-1 a b")
    assert str(w) == "x^-1 a b"
    assert FreeWord.parse(str(w)) == w


def test_cyclic_subwords_length_two():
    c = CyclicWord(W("x^-1 a b"))
    assert c.subwords(2) == {W("x^-1 a"), W("a b"), W("b x^-1")}


def test_cyclic_subwords_length_one():
    c = CyclicWord(W("x^-1 a b"))
    assert c.subwords(1) == {W("x^-1"), W("a"), W("b")}


def test_cyclic_subwords_full_length_count():
    c = CyclicWord(W("x^-1 a b"))
    assert len(c.subwords(3)) == 3


def test_cyclic_word_rotation_invariance():
    c1 = CyclicWord(W("x^-1 a b"))
    c2 = CyclicWord(W("a b x^-1"))
    c3 = CyclicWord(W("b x^-1 a"))
    assert c1 == c2 == c3
    assert len({c1, c2, c3}) == 1


def test_cyclic_word_cyclically_reduces():
    assert CyclicWord(W("a b a^-1")) == CyclicWord(W("b"))


def test_cyclic_word_not_equal_to_inverse():
    c = CyclicWord(W("x^-1 a b"))
    assert c != c.inverse()


letters = st.sampled_from(
    [Letter(g, e) for g in ("a", "b", "c") for e in (1, -1)]
)
words = st.lists(letters, max_size=12).map(FreeWord)


@settings(max_examples=200, deadline=None)
@given(words)
def test_reduce_is_idempotent(w):
    assert w.reduce().reduce() == w.reduce()


@settings(max_examples=200, deadline=None)
@given(words)
def test_word_times_inverse_reduces_to_identity(w):
    assert (w * w.inverse()).reduce() == FreeWord()


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_substitute_commutes_with_concatenation(u, v):
    rep = W("b c^-1")
    lhs = (u * v).substitute("a", rep)
    rhs = (u.substitute("a", rep) * v.substitute("a", rep)).reduce()
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(words, st.integers(min_value=0, max_value=11))
def test_cyclic_word_equal_under_any_rotation(w, k):
    core = w.cyclic_core()
    if not core:
        return
    k %= len(core)
    rotated = FreeWord(core.letters[k:] + core.letters[:k])
    assert CyclicWord(rotated) == CyclicWord(core)


def test_letter_validation():
    with pytest.raises(ValueError):
        FreeWord([("a", 2)])
    with pytest.raises(ValueError):
        FreeWord([("", 1)])
