"""Words over the alphabet {x, y} and their index encoding.

A word is a plain ``str`` made of the letters ``x`` and ``y``; the empty
string is the unit word 1. The letter ``z_k`` is ``x^(k-1) y``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from tqmzv.exceptions import DomainError, InvalidIndexError, NotInSubspaceError

X = "x"
Y = "y"
LETTERS = frozenset((X, Y))

_Z_NOTATION = re.compile(r"^z\[(\d+(?:\s*,\s*\d+)*)\]$")


def z(k: int) -> str:
    """the letter z_k = x^(k-1) y"""
    if k < 1:
        raise InvalidIndexError(f"z_{k} is not a letter", (k,))
    return X * (k - 1) + Y


def parse_word(text: str) -> str:
    """Parse ``xyy``, ``1`` (unit word) or ``z[2,1]``."""
    source = text.strip()
    if source in ("", "1"):
        return ""
    match = _Z_NOTATION.match(source)
    if match:
        return word_from_index(Index.parse(match.group(1)))
    word = source.lower()
    if not set(word) <= LETTERS:
        raise DomainError(f"not a word over {{x, y}}: {text!r}", text)
    return word


def is_h1(word: str) -> bool:
    return not word or word[-1] == Y


def is_h0(word: str) -> bool:
    return not word or (word[0] == X and word[-1] == Y)


def is_hy(word: str) -> bool:
    """nonempty and ending in y, i.e. a word of H y"""
    return bool(word) and word[-1] == Y


def is_y_power(word: str) -> bool:
    return bool(word) and X not in word


def is_check_h1(word: str) -> bool:
    """H^1 words that are neither empty nor a power of y"""
    return is_hy(word) and X in word


def is_z_letter(word: str) -> bool:
    return is_hy(word) and word.count(Y) == 1


SUBSPACES = {
    "H1": is_h1,
    "H0": is_h0,
    "Hy": is_hy,
    "H1check": is_check_h1,
    "z": is_z_letter,
}


def require(word: str, subspace: str) -> str:
    if not SUBSPACES[subspace](word):
        raise NotInSubspaceError(
            f"word {render_word(word, letters=True)!r} is not in {subspace}",
            word,
            subspace,
        )
    return word


def weight(word: str) -> int:
    return len(word)


def depth(word: str) -> int:
    require(word, "H1")
    return word.count(Y)


def split_first(word: str) -> tuple[int, str]:
    """Split a nonempty H^1 word as z_k w'; returns ``(k, w')``."""
    position = word.index(Y)
    return position + 1, word[position + 1 :]


def z_parts(word: str) -> tuple[int, ...]:
    require(word, "H1")
    parts = []
    while word:
        k, word = split_first(word)
        parts.append(k)
    return tuple(parts)


def word_from_index(index: "Index") -> str:
    return "".join(z(k) for k in index.parts)


def index_from_word(word: str) -> "Index":
    if not word:
        raise InvalidIndexError("the empty word has no index", ())
    if not is_h1(word):
        raise NotInSubspaceError(
            f"word {word!r} does not end in y", word, "H1"
        )
    return Index(z_parts(word))


def render_word(word: str, letters: bool = False) -> str:
    """``1`` for the unit word, ``z[2,1]`` for H^1 words unless ``letters``."""
    if not word:
        return "1"
    if letters or not is_h1(word):
        return word
    return f"z[{','.join(map(str, z_parts(word)))}]"


def word_sort_key(word: str) -> tuple[int, str]:
    """length-lexicographic order"""
    return len(word), word


@dataclass(frozen=True)
class Index:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidIndexError("an index needs at least one part", parts)
        if any(not isinstance(k, int) or k < 1 for k in parts):
            raise InvalidIndexError(f"index parts must be positive: {parts}", parts)

    @classmethod
    def of(cls, *parts: int) -> "Index":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Index":
        source = text.strip().strip("()")
        try:
            parts = tuple(int(piece) for piece in source.split(","))
        except ValueError as error:
            raise InvalidIndexError(f"malformed index {text!r}", text) from error
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def is_admissible(self) -> bool:
        return self.parts[0] >= 2

    def is_all_ones(self) -> bool:
        return all(k == 1 for k in self.parts)

    def require_admissible(self) -> "Index":
        if not self.is_admissible():
            raise InvalidIndexError(
                f"index ({self}) is not admissible, the first part must be >= 2",
                self.parts,
            )
        return self

    def word(self) -> str:
        return word_from_index(self)

    def rotations(self) -> list[tuple[int, ...]]:
        """the l cyclic shifts starting at each position, duplicates kept"""
        return [self.parts[i:] + self.parts[:i] for i in range(self.depth)]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))
