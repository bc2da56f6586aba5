"""Freely reduced words over a signed generator alphabet.

A signed letter is encoded as a small int: generator ``g`` is ``2*g``, its
inverse is ``2*g + 1``, so inversion is ``x ^ 1`` and the generator index is
``x >> 1``.  This ordering (a < a^-1 < b < b^-1 < ...) is also the letter
order used for shortlex representatives.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import WordSyntaxError


def letter(gen: int, sign: int) -> int:
    """Encode a signed letter; sign must be +1 or -1."""
    if sign == 1:
        return 2 * gen
    if sign == -1:
        return 2 * gen + 1
    raise ValueError(f"sign must be +1 or -1, got {sign}")


def inverse_letter(x: int) -> int:
    return x ^ 1


def gen_of(x: int) -> int:
    return x >> 1


def sign_of(x: int) -> int:
    return -1 if x & 1 else 1


def reduce_letters(seq: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce: cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in seq:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_letters(t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x ^ 1 for x in reversed(t))


def concat_letters(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Concatenate two already-reduced letter tuples, cancelling at the seam."""
    i = len(a)
    j = 0
    n = len(b)
    while i > 0 and j < n and a[i - 1] == b[j] ^ 1:
        i -= 1
        j += 1
    return a[:i] + b[j:]


class Word:
    """An immutable, freely reduced word.

    Words are alphabet-agnostic (letters are ints); parsing and printing
    against generator names happens at the group-model level.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = (), *, _reduced: bool = False):
        ls = tuple(letters) if _reduced else reduce_letters(letters)
        object.__setattr__(self, "letters", ls)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __hash__(self) -> int:
        return hash(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __mul__(self, other: "Word") -> "Word":
        return Word(concat_letters(self.letters, other.letters), _reduced=True)

    def inverse(self) -> "Word":
        return Word(invert_letters(self.letters), _reduced=True)

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"

    @property
    def is_identity(self) -> bool:
        return not self.letters


IDENTITY = Word()


def parse_letters(text: str, name_to_gen: dict[str, int]) -> tuple[int, ...]:
    """Parse word syntax: lowercase letter = generator, uppercase = inverse.

    Whitespace is ignored, so "a b A" and "abA" are the same word.  The bare
    token "1" denotes the identity.
    """
    stripped = "".join(text.split())
    if stripped == "1":
        return ()
    out = []
    for ch in stripped:
        low = ch.lower()
        if low not in name_to_gen:
            raise WordSyntaxError(f"unknown generator letter {ch!r} in {text!r}")
        g = name_to_gen[low]
        out.append(letter(g, 1 if ch.islower() else -1))
    return tuple(out)


def format_letters(letters: tuple[int, ...], names: tuple[str, ...]) -> str:
    """Inverse of parse_letters; the identity prints as "1"."""
    if not letters:
        return "1"
    parts = []
    for x in letters:
        name = names[gen_of(x)]
        parts.append(name if sign_of(x) == 1 else name.upper())
    return " ".join(parts)
