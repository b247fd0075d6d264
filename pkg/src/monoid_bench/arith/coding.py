"""Cantor pairing and the length-prefixed sequence coding of tuples and monomials."""
from __future__ import annotations

from math import isqrt
from typing import Callable, Sequence

from monoid_bench.models.words import Alphabet, Word

NatTuple = tuple[int, ...]


class MalformedCodeError(ValueError):
    """A natural that is not the code of any tuple."""


def pair(a: int, b: int) -> int:
    """Cantor pairing (a+b)(a+b+1)/2 + b."""
    if a < 0 or b < 0:
        raise ValueError("Pairing is defined on naturals")
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(p: int) -> tuple[int, int]:
    if p < 0:
        raise ValueError("Pairing is defined on naturals")
    w = (isqrt(8 * p + 1) - 1) // 2
    b = p - w * (w + 1) // 2
    return w - b, b


def encode_tuple(t: Sequence[int]) -> int:
    """pair(len(t), fold) with fold(()) = 0 and fold((e,) + r) = pair(e, fold(r))."""
    fold = 0
    for entry in reversed(t):
        fold = pair(entry, fold)
    return pair(len(t), fold)


def decode_tuple(code: int) -> NatTuple:
    length, fold = unpair(code)
    entries: list[int] = []
    for _ in range(length):
        entry, fold = unpair(fold)
        entries.append(entry)
    if fold != 0:
        raise MalformedCodeError(f"Code {code} does not match its length field {length}")
    return tuple(entries)


def is_code(code: int) -> bool:
    try:
        decode_tuple(code)
    except (MalformedCodeError, ValueError):
        return False
    return True


def monomial_to_tuple(w: Word) -> NatTuple:
    """x_{i1}...x_{im} -> (i1, ..., im), indices 1-based in alphabet order."""
    return tuple(w.alphabet.index(name) + 1 for name in w.letters)


def tuple_to_monomial(t: Sequence[int], alphabet: Alphabet) -> Word:
    for entry in t:
        if not 1 <= entry <= len(alphabet):
            raise ValueError(f"Entry {entry} out of range 1..{len(alphabet)}")
    return Word(tuple(alphabet.names[entry - 1] for entry in t), alphabet)


def word_code(w: Word) -> int:
    return encode_tuple(monomial_to_tuple(w))


def decode_word(code: int, alphabet: Alphabet) -> Word:
    return tuple_to_monomial(decode_tuple(code), alphabet)


def _decoded(*codes: int) -> list[NatTuple] | None:
    try:
        return [decode_tuple(c) for c in codes]
    except (MalformedCodeError, ValueError):
        return None


def _is_word_code(c: int, n: int) -> bool:
    decoded = _decoded(c)
    return decoded is not None and all(1 <= e <= n for e in decoded[0])


def _cat_code(a: int, b: int, c: int) -> bool:
    decoded = _decoded(a, b)
    return decoded is not None and encode_tuple(decoded[0] + decoded[1]) == c


def _pos_code(s: int, i: int, a: int) -> bool:
    decoded = _decoded(s)
    return decoded is not None and 1 <= i <= len(decoded[0]) and decoded[0][i - 1] == a


def _len_code(s: int, n: int) -> bool:
    decoded = _decoded(s)
    return decoded is not None and len(decoded[0]) == n


# Semantics of the coding relations on naturals
CODE_PREDICATES: dict[str, Callable[..., bool]] = {
    "IsCode": is_code,
    "IsWordCode": _is_word_code,
    "CatCode": _cat_code,
    "PosCode": _pos_code,
    "LenCode": _len_code,
}
