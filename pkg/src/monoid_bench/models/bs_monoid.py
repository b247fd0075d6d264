from __future__ import annotations

from collections import deque
from typing import Optional

from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.words import Alphabet, Word


class BaumslagSolitarMonoid(MonoidModel):
    """The monoid <a, b | a b^k = b^m a>, normalized by one length-reducing rule.

    With m >= k the rule is b^m a -> a b^k, otherwise a b^k -> b^m a. The left side
    cannot overlap itself, so the system is confluent.
    """

    kind = "bs"

    def __init__(self, k: int, m: int, a: str = "a", b: str = "b"):
        if k <= 0 or m <= 0:
            raise ValueError("Baumslag-Solitar parameters k and m must be positive")
        super().__init__(Alphabet((a, b)))
        self.k = k
        self.m = m
        self.a = a
        self.b = b
        if m >= k:
            self.lhs = (b,) * m + (a,)
            self.rhs = (a,) + (b,) * k
        else:
            self.lhs = (a,) + (b,) * k
            self.rhs = (b,) * m + (a,)
        self._cache: dict[tuple[str, ...], tuple[str, ...]] = {}

    def spec(self) -> str:
        return f"bs:{self.k},{self.m}"

    @property
    def relation(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """The defining relation a b^k = b^m a as a pair of letter tuples."""
        return (self.a,) + (self.b,) * self.k, (self.b,) * self.m + (self.a,)

    def find_redex(self, letters: tuple[str, ...]) -> Optional[int]:
        size = len(self.lhs)
        for i in range(len(letters) - size + 1):
            if letters[i:i + size] == self.lhs:
                return i
        return None

    def normal_form(self, w: Word) -> Word:
        cached = self._cache.get(w.letters)
        if cached is not None:
            return Word(cached, self.alphabet)
        letters = w.letters
        size = len(self.lhs)
        while True:
            i = self.find_redex(letters)
            if i is None:
                break
            letters = letters[:i] + self.rhs + letters[i + size:]
        self._cache[w.letters] = letters
        return Word(letters, self.alphabet)

    def is_normal(self, w: Word) -> bool:
        return self.find_redex(w.letters) is None

    def self_overlaps(self) -> list[int]:
        """Proper overlaps of the rule's left side with itself (critical pair sources)."""
        size = len(self.lhs)
        return [j for j in range(1, size) if self.lhs[j:] == self.lhs[:size - j]]


def relation_search_equal(model: BaumslagSolitarMonoid, u: Word, v: Word, max_length: int) -> bool:
    """Breadth-first search applying the defining relation in both directions, restricted
    to words of length <= max_length."""
    left, right = model.relation
    start, goal = u.letters, v.letters
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == goal:
            return True
        for src, dst in ((left, right), (right, left)):
            size = len(src)
            for i in range(len(current) - size + 1):
                if current[i:i + size] == src:
                    nxt = current[:i] + dst + current[i + size:]
                    if len(nxt) <= max_length and nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
    return False
