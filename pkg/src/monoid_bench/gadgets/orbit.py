"""Orbits of word tuples under permutations of the basis, and the formulas defining them."""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from monoid_bench.gadgets.base import FormulaContext
from monoid_bench.gadgets.common import basis
from monoid_bench.logic.formula import Formula, Term, Var, cat, conj, eq, exists, neq
from monoid_bench.models.words import Alphabet, Word


def orbit_letters(words: Sequence[Word]) -> list[str]:
    """Letters in order of first appearance."""
    seen: dict[str, None] = {}
    for w in words:
        for name in w.letters:
            seen.setdefault(name, None)
    return list(seen)


def orbit_formula(ctx: FormulaContext, words: Sequence[Word], xs: Sequence[Term]) -> Formula:
    """x_k = w_k with the letters replaced by pairwise distinct basis elements."""
    if len(words) != len(xs):
        raise ValueError(f"Expected {len(words)} variables, got {len(xs)}")
    letters = orbit_letters(words)
    ys = {name: ctx.var("y") for name in letters}
    equations = [eq(x, cat(*(ys[name] for name in w.letters))) for x, w in zip(xs, words)]
    distinct = [neq(ys[a], ys[b]) for i, a in enumerate(letters) for b in letters[i + 1:]]
    body = conj(*equations, *(basis(ctx, ys[name]) for name in letters), *distinct)
    return exists([ys[name].name for name in letters], body)


def orbit(words: Sequence[Word], alphabet: Alphabet) -> set[tuple[Word, ...]]:
    """All images of the tuple under injective renamings of its letters into the alphabet."""
    letters = orbit_letters(words)
    images: set[tuple[Word, ...]] = set()
    for target in permutations(alphabet.names, len(letters)):
        mapping = dict(zip(letters, target))
        images.add(tuple(Word(tuple(mapping[name] for name in w.letters), alphabet)
                         for w in words))
    return images


def orbit_variables(count: int) -> tuple[str, ...]:
    return ("x",) if count == 1 else tuple(f"x_{i}" for i in range(1, count + 1))


def orbit_terms(count: int) -> list[Term]:
    return [Var(name) for name in orbit_variables(count)]
