import random

import pytest

from coverends import FreeAbelian, FreeGroup, Word, WordSyntaxError
from coverends.words import concat_letters, reduce_letters


def test_free_reduce_cancellation():
    f = FreeGroup(2)
    assert f.word("a A") == Word(())
    assert f.format(f.word("a A")) == "1"


def test_free_reduce_inner_cascade():
    f = FreeGroup(2)
    assert f.format(f.word("a b B a")) == "a a"


def test_free_reduce_identity():
    f = FreeGroup(2)
    assert f.word("") == Word(())
    assert f.word("1") == Word(())


def test_free_reduce_idempotent():
    f = FreeGroup(3)
    rng = random.Random(7)
    for _ in range(200):
        raw = [rng.randrange(6) for _ in range(rng.randrange(12))]
        once = reduce_letters(raw)
        assert reduce_letters(once) == once


def test_parse_ignores_whitespace():
    f = FreeGroup(2)
    assert f.word("abA") == f.word("a b A")


def test_parse_rejects_unknown_letter():
    f = FreeGroup(2)
    with pytest.raises(WordSyntaxError):
        f.word("a c")


def test_word_is_immutable_and_hashable():
    w = FreeGroup(2).word("a b")
    with pytest.raises(AttributeError):
        w.letters = ()
    assert hash(w) == hash(FreeGroup(2).word("a b"))


def test_mul_inverse_roundtrip():
    f = FreeGroup(3)
    rng = random.Random(11)
    alphabet = "abcABC"
    for _ in range(300):
        u = f.word(" ".join(rng.choice(alphabet) for _ in range(rng.randrange(8))))
        v = f.word(" ".join(rng.choice(alphabet) for _ in range(rng.randrange(8))))
        assert (u * v) * v.inverse() == u
        assert (u * u.inverse()).is_identity


def test_concat_cancels_across_seam():
    a = FreeGroup(2).word("a b").letters
    b = FreeGroup(2).word("B A a").letters
    assert concat_letters(a, b) == FreeGroup(2).word("a").letters


def test_abelian_alphabet_names():
    assert FreeAbelian(3).names == ("x", "y", "z")
    assert FreeAbelian(4).names == ("x", "y", "z", "a")
    assert FreeGroup(3).names == ("a", "b", "c")
