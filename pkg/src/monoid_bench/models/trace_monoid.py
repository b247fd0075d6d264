from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

import networkx as nx

from monoid_bench.models.base_model import TARGET, Item, ModelKindError
from monoid_bench.models.monoid_model import MonoidModel
from monoid_bench.models.words import Alphabet, Word


class TraceMonoid(MonoidModel):
    """Free partially commutative monoid A_Γ; adjacent generators commute."""

    kind = "trace"

    def __init__(self, alphabet: Alphabet, edges: Iterable[tuple[str, str]] = ()):
        super().__init__(alphabet)
        self.graph = nx.Graph()
        self.graph.add_nodes_from(alphabet.names)
        for a, b in edges:
            if a == b:
                raise ValueError(f"Commutation graph must be irreflexive: {a}-{b}")
            for name in (a, b):
                if name not in alphabet:
                    raise ValueError(f"Edge endpoint {name!r} not in alphabet {alphabet}")
            self.graph.add_edge(a, b)
        self._cache: dict[tuple[str, ...], tuple[str, ...]] = {}

    def commute(self, a: str, b: str) -> bool:
        return bool(self.graph.has_edge(a, b))

    def edges(self) -> list[tuple[str, str]]:
        order = self.alphabet.index
        pairs = [tuple(sorted(e, key=order)) for e in self.graph.edges]
        return sorted(pairs, key=lambda e: (order(e[0]), order(e[1])))  # type: ignore[return-value]

    def spec(self) -> str:
        edges = ",".join(f"{a}-{b}" for a, b in self.edges())
        return f"trace:{self.alphabet};edges={edges}"

    def normal_form(self, w: Word) -> Word:
        """Lexicographically least word of the commutation class: repeatedly take the least
        letter all of whose left neighbours commute past it."""
        cached = self._cache.get(w.letters)
        if cached is not None:
            return Word(cached, self.alphabet)
        rest = list(w.letters)
        result: list[str] = []
        while rest:
            best: Optional[int] = None
            seen: list[str] = []
            for i, name in enumerate(rest):
                if all(self.commute(name, other) for other in seen):
                    if name not in seen and (
                            best is None or self.alphabet.index(name) < self.alphabet.index(rest[best])):
                        best = i
                seen.append(name)
            assert best is not None
            result.append(rest.pop(best))
        letters = tuple(result)
        self._cache[w.letters] = letters
        return Word(letters, self.alphabet)

    def is_irreducible(self, w: Word) -> bool:
        return len(w) == 1

    def center_is_trivial(self) -> bool:
        """No generator is adjacent to all the others."""
        n = self.graph.number_of_nodes()
        return all(self.graph.degree(v) < n - 1 for v in self.graph.nodes)

    def central_generators(self) -> list[str]:
        n = self.graph.number_of_nodes()
        return [v for v in self.alphabet.names if self.graph.degree(v) == n - 1]

    def non_commuting_pairs(self) -> list[tuple[str, str]]:
        names = self.alphabet.names
        return [(a, b) for i, a in enumerate(names) for b in names[i + 1:]
                if not self.commute(a, b)]

    def left_quotient(self, t: Word, p: Word) -> Optional[Word]:
        """The r with t = p.r, or None when p is not a prefix of t."""
        rest = list(t.letters)
        for name in p.letters:
            for i, other in enumerate(rest):
                if other == name:
                    del rest[i]
                    break
                if not self.commute(name, other):
                    return None
            else:
                return None
        return self.normal_form(Word(tuple(rest), self.alphabet))

    def right_quotient(self, t: Word, s: Word) -> Optional[Word]:
        """The r with t = r.s, or None."""
        rest = self.left_quotient(_reverse(t), _reverse(s))
        return None if rest is None else self.normal_form(_reverse(rest))

    def prefixes(self, t: Word) -> list[tuple[Word, Word]]:
        """All factorizations t = p.r as (p, r), both in normal form, shortest p first."""
        start = (self.alphabet.identity, self.normal_form(t))
        found = {start[0].letters: start}
        frontier = [start]
        while frontier:
            following = []
            for p, r in frontier:
                for name in dict.fromkeys(r.letters):
                    rest = self.left_quotient(r, Word((name,), self.alphabet))
                    if rest is None:
                        continue
                    q = self.normal_form(p + Word((name,), self.alphabet))
                    if q.letters not in found:
                        found[q.letters] = (q, rest)
                        following.append((q, rest))
            frontier = following
        return sorted(found.values(), key=lambda pair: pair[0].sort_key())

    def suffixes(self, t: Word) -> list[tuple[Word, Word]]:
        """All factorizations t = r.s as (s, r)."""
        return [(self.normal_form(_reverse(p)), self.normal_form(_reverse(r)))
                for p, r in self.prefixes(_reverse(t))]

    def pin_candidates(self, items: Sequence[Item], ground: Word) -> Optional[list[Word]]:
        """Trace analogue of pin_in_words, factoring through left and right quotients."""
        index = next(i for i, item in enumerate(items) if item is TARGET)
        before = [None if item is TARGET else item for item in items[:index]]
        after = [None if item is TARGET else item for item in items[index + 1:]]
        follow = self._run(after)
        precede = self._run(list(reversed(before)), reverse=True)
        if all(item is not None for item in before):
            rest = self.left_quotient(ground, self._run(before))
            if rest is None:
                return []
            if all(item is not None for item in after):
                exact = self.right_quotient(rest, self._run(after))
                return [] if exact is None else [exact]
            return [p for p, r in self.prefixes(rest) if self.left_quotient(r, follow) is not None]
        if all(item is not None for item in after):
            rest = self.right_quotient(ground, self._run(after))
            if rest is None:
                return []
            return [s for s, r in self.suffixes(rest) if self.right_quotient(r, precede) is not None]
        result: dict[tuple[str, ...], Word] = {}
        for p, r in self.prefixes(ground):
            if self.right_quotient(p, precede) is None:
                continue
            for q, r2 in self.prefixes(r):
                if q.letters not in result and self.left_quotient(r2, follow) is not None:
                    result[q.letters] = q
        return list(result.values())

    def commuting_candidates(self, c: Word, bound: int) -> Optional[list[Word]]:
        """For c a power of one generator g: the normal forms over g and its neighbours."""
        c = self.normal_form(c)
        if c.is_identity or len(set(c.letters)) != 1:
            return None
        g = c.letters[0]
        letters = [g] + sorted(self.graph.neighbors(g), key=self.alphabet.index)
        sub = Alphabet(tuple(letters))
        seen: dict[tuple[str, ...], Word] = {}
        for w in sub.words(bound):
            nf = self.normal_form(Word(w.letters, self.alphabet))
            seen.setdefault(nf.letters, nf)
        return sorted(seen.values(), key=lambda w: w.sort_key())

    def _run(self, items: Sequence[Item], reverse: bool = False) -> Word:
        """Product of the known items adjacent to the target."""
        run: list[Word] = []
        for item in items:
            if not isinstance(item, Word):
                break
            run.append(item)
        if reverse:
            run.reverse()
        letters: tuple[str, ...] = ()
        for w in run:
            letters += w.letters
        return Word(letters, self.alphabet)


def center_is_trivial(model: MonoidModel) -> bool:
    if not isinstance(model, TraceMonoid):
        raise ModelKindError(f"center_is_trivial needs a trace model, got {model.spec()}")
    return model.center_is_trivial()


def commutation_closure(model: TraceMonoid, w: Word) -> set[tuple[str, ...]]:
    """All words reachable from w by swapping adjacent commuting letters."""
    start = w.letters
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(len(current) - 1):
            a, b = current[i], current[i + 1]
            if a != b and model.commute(a, b):
                swapped = current[:i] + (b, a) + current[i + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return seen


def _reverse(w: Word) -> Word:
    return Word(tuple(reversed(w.letters)), w.alphabet)
