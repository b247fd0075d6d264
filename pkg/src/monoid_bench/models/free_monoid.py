from __future__ import annotations

from typing import Optional, Sequence

from monoid_bench.models.base_model import Item
from monoid_bench.models.monoid_model import MonoidModel, pin_in_words
from monoid_bench.models.words import Alphabet, Word, primitive_root


class FreeMonoid(MonoidModel):
    """Free monoid M_X: words under concatenation, graphical equality."""

    kind = "free"

    def __init__(self, alphabet: Alphabet):
        super().__init__(alphabet)

    def normal_form(self, w: Word) -> Word:
        return w

    def spec(self) -> str:
        return f"free:{self.alphabet}"

    def is_irreducible(self, w: Word) -> bool:
        return len(w) == 1

    def is_normal(self, w: Word) -> bool:
        return True

    def pin_candidates(self, items: Sequence[Item], ground: Word) -> Optional[list[Word]]:
        return pin_in_words(items, ground)

    def commuting_candidates(self, c: Word, bound: int) -> Optional[list[Word]]:
        """Words commuting with a nonempty c are exactly the powers of its primitive root."""
        if c.is_identity:
            return None
        root = primitive_root(c)
        return [root ** k for k in range(bound // len(root) + 1)]


def is_in_S(w: Word, p1: str = "x1", p2: str = "x2") -> bool:
    """Nonempty {p1, p2}-word without a p2^3 factor: the factors of the multiplication
    gadget words."""
    if w.is_identity:
        return False
    if any(name not in (p1, p2) for name in w.letters):
        return False
    return (p2, p2, p2) not in {w.letters[i:i + 3] for i in range(len(w.letters) - 2)}
