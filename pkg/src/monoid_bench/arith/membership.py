"""Submonoid membership in free monoids: a dynamic program with a leftmost factorization
witness, a product-enumeration oracle, and the bounded code sets of submonoids."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from monoid_bench.arith.coding import word_code
from monoid_bench.models.words import Alphabet, AlphabetMismatchError, Word

logger = logging.getLogger(__name__)


@dataclass
class Membership:
    member: bool
    indices: list[int] = field(default_factory=list)
    factors: list[Word] = field(default_factory=list)

    def witness(self) -> str:
        if not self.member:
            return ""
        if not self.factors:
            return "1"
        return "".join(f"({w})" for w in self.factors)


def _generators(g: Word, gens: Sequence[Word]) -> list[tuple[int, Word]]:
    kept: list[tuple[int, Word]] = []
    for index, h in enumerate(gens):
        if h.alphabet != g.alphabet:
            raise AlphabetMismatchError(f"Generator {h} is not over {g.alphabet}")
        if h.is_identity:
            logger.warning("Dropping the identity from the generators")
            continue
        kept.append((index, h))
    return kept


def submonoid_member(g: Word, gens: Sequence[Word]) -> Membership:
    """
    Decide g in <gens> in the free monoid.

    Parameters:
    -----------
    g : Word
        Element to test
    gens : Sequence[Word]
        Generators of the submonoid; identities are dropped

    Returns:
    --------
    Membership
        The answer and, when positive, the factorization that takes at every position the
        first generator (in the given order) from which the rest can still be factored
    """
    kept = _generators(g, gens)
    letters = g.letters
    n = len(letters)
    # reach[i]: the suffix starting at i is a product of generators
    reach = [False] * (n + 1)
    reach[n] = True
    for i in range(n - 1, -1, -1):
        reach[i] = any(letters[i:i + len(h)] == h.letters and reach[i + len(h)]
                       for _, h in kept)
    if not reach[0]:
        return Membership(False)
    result = Membership(True)
    i = 0
    while i < n:
        index, h = next((index, h) for index, h in kept
                        if letters[i:i + len(h)] == h.letters and reach[i + len(h)])
        result.indices.append(index)
        result.factors.append(h)
        i += len(h)
    return result


def submonoid_elements(gens: Sequence[Word], alphabet: Alphabet, bound: int) -> set[Word]:
    """All products of generators of length at most bound."""
    if bound < 0:
        raise ValueError("Bound must be non-negative")
    kept = [h for h in gens if not h.is_identity]
    found = {alphabet.identity}
    frontier = [alphabet.identity]
    while frontier:
        nxt: list[Word] = []
        for w in frontier:
            for h in kept:
                product = w + h
                if len(product) <= bound and product not in found:
                    found.add(product)
                    nxt.append(product)
        frontier = nxt
    return found


def brute_force_member(g: Word, gens: Sequence[Word]) -> bool:
    return g in submonoid_elements(gens, g.alphabet, len(g))


def membership_code_set(gens: Sequence[Word], alphabet: Alphabet, bound: int) -> set[int]:
    """Codes of the members of <gens> of length at most bound."""
    return {word_code(w) for w in submonoid_elements(gens, alphabet, bound)}


def random_word(rng: np.random.Generator, alphabet: Alphabet, length: int) -> Word:
    picks = rng.integers(0, len(alphabet), size=length)
    return Word(tuple(alphabet.names[int(i)] for i in picks), alphabet)


def random_membership_instance(rng: np.random.Generator, alphabet: Optional[Alphabet] = None,
                               max_length: int = 6, max_generators: int = 3,
                               max_generator_length: int = 3) -> tuple[Word, list[Word]]:
    """A random (g, gens); half of the time g is built as a product of the generators, cut
    to max_length."""
    alphabet = alphabet or Alphabet.of("a", "b")
    count = int(rng.integers(1, max_generators + 1))
    gens = [random_word(rng, alphabet, int(rng.integers(1, max_generator_length + 1)))
            for _ in range(count)]
    if rng.random() < 0.5:
        g = alphabet.identity
        while True:
            h = gens[int(rng.integers(0, count))]
            if len(g) + len(h) > max_length:
                break
            g = g + h
            if rng.random() < 0.3:
                break
    else:
        g = random_word(rng, alphabet, int(rng.integers(0, max_length + 1)))
    return g, gens
