from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence, Union

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class AlphabetMismatchError(ValueError):
    """Raised when a word uses letters outside its alphabet or words over different
    alphabets are combined."""


@dataclass(frozen=True)
class Alphabet:
    """Finite ordered set of generator names."""
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("Alphabet must not be empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Generator names must be distinct: {self.names}")
        for name in self.names:
            if not _NAME.match(name):
                raise ValueError(f"Invalid generator name: {name!r}")

    @classmethod
    def of(cls, *names: str) -> Alphabet:
        return cls(tuple(names))

    @classmethod
    def standard(cls, size: int) -> Alphabet:
        """The alphabet x1, ..., x<size>."""
        if size < 1:
            raise ValueError("Alphabet size must be positive")
        return cls(tuple(f"x{i}" for i in range(1, size + 1)))

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def letter_set(self) -> frozenset[str]:
        return frozenset(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.letter_set

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Generator {name!r} not in alphabet {self}") from None

    def generator(self, name: str) -> Word:
        self.index(name)
        return Word((name,), self)

    def generators(self) -> list[Word]:
        return [Word((name,), self) for name in self.names]

    @property
    def identity(self) -> Word:
        return Word((), self)

    def word(self, letters: Union[str, Sequence[str]]) -> Word:
        if isinstance(letters, str):
            return parse_word(letters, self)
        for name in letters:
            if name not in self.names:
                raise ValueError(f"Generator {name!r} not in alphabet {self}")
        return Word(tuple(letters), self)

    def words(self, max_length: int) -> Iterator[Word]:
        """All words up to max_length, by length and then alphabet order."""
        for length in range(max_length + 1):
            for letters in product(self.names, repeat=length):
                yield Word(letters, self)

    def count_words(self, max_length: int) -> int:
        k = len(self.names)
        return sum(k ** length for length in range(max_length + 1))

    def __str__(self) -> str:
        return ",".join(self.names)


@dataclass(frozen=True)
class Word:
    """A finite sequence of generators; the empty sequence is the identity."""
    letters: tuple[str, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if not self.alphabet.letter_set.issuperset(self.letters):
            unknown = sorted(set(self.letters) - self.alphabet.letter_set)
            raise AlphabetMismatchError(
                f"Generators {','.join(unknown)} not in alphabet {self.alphabet}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, item: slice) -> Word:
        if not isinstance(item, slice):
            raise TypeError("Words are sliced, not indexed; use .letters for single letters")
        return Word(self.letters[item], self.alphabet)

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def __pow__(self, exponent: int) -> Word:
        if exponent < 0:
            raise ValueError("Word exponent must be non-negative")
        return Word(self.letters * exponent, self.alphabet)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.letters), tuple(self.alphabet.index(name) for name in self.letters)

    def startswith(self, prefix: Word) -> bool:
        return self.letters[:len(prefix.letters)] == prefix.letters

    def endswith(self, suffix: Word) -> bool:
        if not suffix.letters:
            return True
        return self.letters[-len(suffix.letters):] == suffix.letters

    def find(self, factor: Word, start: int = 0) -> int:
        """Index of the first occurrence of factor at or after start, or -1."""
        size = len(factor.letters)
        for i in range(start, len(self.letters) - size + 1):
            if self.letters[i:i + size] == factor.letters:
                return i
        return -1

    def contains(self, factor: Word) -> bool:
        return self.find(factor) >= 0

    def letter_set(self) -> frozenset[str]:
        return frozenset(self.letters)

    def pretty(self) -> str:
        """Power notation, e.g. x2^2.x1^3."""
        if not self.letters:
            return "1"
        runs: list[str] = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            count = j - i
            runs.append(self.letters[i] if count == 1 else f"{self.letters[i]}^{count}")
            i = j
        return ".".join(runs)

    def __str__(self) -> str:
        return ".".join(self.letters) if self.letters else "1"

    def __repr__(self) -> str:
        return f"Word({self})"


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse the dotted serialization ("x1.x2.x1", "1" for the identity)."""
    text = text.strip()
    if text in ("1", ""):
        return Word((), alphabet)
    letters = tuple(part.strip() for part in text.split("."))
    for name in letters:
        if name not in alphabet:
            raise ValueError(f"Generator {name!r} not in alphabet {alphabet}")
    return Word(letters, alphabet)


def concat(u: Word, v: Word) -> Word:
    if u.alphabet is not v.alphabet and u.alphabet != v.alphabet:
        raise AlphabetMismatchError(
            f"Cannot concatenate words over {u.alphabet} and {v.alphabet}")
    return Word(u.letters + v.letters, u.alphabet)


def concat_all(alphabet: Alphabet, *parts: Word) -> Word:
    result = alphabet.identity
    for part in parts:
        result = concat(result, part)
    return result


def factor_occurs(w: Word, f: Word) -> bool:
    return w.contains(f)


def is_prefix(w: Word, p: Word) -> bool:
    return w.startswith(p)


def is_suffix(w: Word, s: Word) -> bool:
    return w.endswith(s)


def primitive_root(w: Word) -> Word:
    """Shortest r with w = r^k."""
    n = len(w)
    for size in range(1, n + 1):
        if n % size == 0 and w.letters[:size] * (n // size) == w.letters:
            return w[:size]
    return w


def distinct_factors(w: Word) -> list[Word]:
    seen: set[tuple[str, ...]] = set()
    result: list[Word] = []
    n = len(w)
    for i in range(n + 1):
        for j in range(i, n + 1):
            letters = w.letters[i:j]
            if letters not in seen:
                seen.add(letters)
                result.append(Word(letters, w.alphabet))
    return result
