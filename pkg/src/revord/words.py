"""Signed words over an indexed alphabet.

A letter is an int index ``0 <= k < n``; its formal inverse is the bitwise
complement ``~k`` (a negative int).  This makes sign tests (``x >= 0``) and
inversion (``~x``) single operations and keeps words hashable: a word is an
immutable tuple of signed letters, the empty tuple being the empty word.

Positive words (no inverted letters) are the monoid elements; general signed
words denote group elements or reversing states.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Word = tuple[int, ...]


class WordSyntaxError(ValueError):
    """Raised when a word literal cannot be parsed."""


def letter_index(x: int) -> int:
    """Alphabet index of a signed letter."""
    return x if x >= 0 else ~x


def invert(word: Sequence[int]) -> Word:
    """Formal inverse: reverse the word and invert every letter.

    ``invert(invert(w)) == w`` and ``invert(u + v) == invert(v) + invert(u)``.
    """
    return tuple(~x for x in reversed(word))


def mirror(word: Sequence[int]) -> Word:
    """The word read backwards, signs unchanged (anti-automorphism)."""
    return tuple(reversed(word))


def is_positive(word: Sequence[int]) -> bool:
    """True when no letter is inverted (vacuously true for the empty word)."""
    return all(x >= 0 for x in word)


def is_negative(word: Sequence[int]) -> bool:
    """True when every letter is inverted (vacuously true for the empty word)."""
    return all(x < 0 for x in word)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse a word literal.

    Tokens are whitespace-separated letter names with an optional non-zero
    integer power: ``a b^-2 a^3``.  The token ``eps`` denotes the empty word
    and contributes no letters.
    """
    index = {name: i for i, name in enumerate(names)}
    out: list[int] = []
    for token in text.split():
        if token == "eps":
            continue
        name, caret, exp_text = token.partition("^")
        if caret:
            try:
                exp = int(exp_text)
            except ValueError:
                raise WordSyntaxError(
                    f"bad exponent {exp_text!r} in token {token!r}"
                ) from None
            if exp == 0:
                raise WordSyntaxError(f"zero exponent in token {token!r}")
        else:
            exp = 1
        if name not in index:
            raise WordSyntaxError(f"unknown letter {name!r} in token {token!r}")
        letter = index[name]
        if exp > 0:
            out.extend(itertools.repeat(letter, exp))
        else:
            out.extend(itertools.repeat(~letter, -exp))
    return tuple(out)


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    """Canonical text form: runs of one signed letter folded into powers.

    The empty word renders as ``eps``; ``(~0, ~0, 1)`` renders as ``a^-2 b``.
    """
    if not word:
        return "eps"
    parts: list[str] = []
    for signed, run in itertools.groupby(word):
        count = sum(1 for _ in run)
        name = names[letter_index(signed)]
        exp = count if signed >= 0 else -count
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


def positive_words_shortlex(
    n_letters: int, max_len: int, min_len: int = 0
) -> Iterator[Word]:
    """All positive words of length min_len..max_len in shortlex order."""
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(n_letters), repeat=length)
