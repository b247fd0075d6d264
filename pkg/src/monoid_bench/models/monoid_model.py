from __future__ import annotations

from abc import abstractmethod
from typing import Iterator, Sequence

from monoid_bench.logic.formula import Concat, Term, Var, WordConst
from monoid_bench.logic.signature import Signature, SortError
from monoid_bench.models.base_model import TARGET, Assignment, Item, Structure
from monoid_bench.models.words import Alphabet, AlphabetMismatchError, Word, parse_word


class MonoidModel(Structure):
    """A finitely presented monoid with decidable equality through normal forms."""

    kind: str = "monoid"

    def __init__(self, alphabet: Alphabet):
        super().__init__(Signature.monoid(alphabet))
        self.alphabet = alphabet

    @abstractmethod
    def normal_form(self, w: Word) -> Word:
        """
        Canonical representative of the element w denotes.

        Parameters:
        -----------
        w : Word
            Word over the model's alphabet

        Returns:
        --------
        Word
            Normal form; equal elements map to identical letter sequences
        """
        pass

    @abstractmethod
    def spec(self) -> str:
        """Monoid spec string this model is built from."""
        pass

    def equal(self, u: Word, v: Word) -> bool:
        self._check(u)
        self._check(v)
        return self.normal_form(u) == self.normal_form(v)

    def concat(self, u: Word, v: Word) -> Word:
        return self.normal_form(u + v)

    def is_irreducible(self, w: Word) -> bool:
        """Bounded factor search over normal forms up to |w|."""
        w = self.normal_form(w)
        if w.is_identity:
            return False
        candidates = [u for u in self.domain(len(w)) if not u.is_identity]
        for u in candidates:
            for v in candidates:
                if self.normal_form(u + v) == w:
                    return False
        return True

    def irreducibles(self, bound: int) -> list[Word]:
        return [w for w in self.domain(bound) if not w.is_identity and self.is_irreducible(w)]

    def is_normal(self, w: Word) -> bool:
        return self.normal_form(w) == w

    def domain(self, bound: int) -> Iterator[Word]:
        self._validate_bound(bound)
        for w in self.alphabet.words(bound):
            if self.is_normal(w):
                yield w

    def domain_size(self, bound: int) -> int:
        return self.alphabet.count_words(bound)

    def evaluate_term(self, term: Term, assignment: Assignment) -> Word:
        return self.normal_form(self._raw_value(term, assignment))

    def _raw_value(self, term: Term, assignment: Assignment) -> Word:
        if isinstance(term, Var):
            return assignment[term.name]
        if isinstance(term, WordConst):
            return Word(term.letters, self.alphabet)
        if isinstance(term, Concat):
            letters: tuple[str, ...] = ()
            for part in term.parts:
                letters += self._raw_value(part, assignment).letters
            return Word(letters, self.alphabet)
        raise SortError(f"Not a monoid term: {term!r}")

    def size(self, element: Word) -> int:
        return len(element)

    def format_element(self, element: Word, pretty: bool = False) -> str:
        return element.pretty() if pretty else str(element)

    def parse_element(self, text: str) -> Word:
        return self.normal_form(parse_word(text, self.alphabet))

    def _check(self, w: Word) -> None:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"Word over {w.alphabet} used in a model over {self.alphabet}")

    def __str__(self) -> str:
        return self.spec()


def pin_in_words(items: Sequence[Item], ground: Word) -> list[Word]:
    """Words x such that the product of `items`, with x at the first TARGET, can be the
    graphical word `ground`. Unknown items (None) and later TARGET occurrences match any
    word."""
    index = next(i for i, item in enumerate(items) if item is TARGET)
    before = [None if item is TARGET else item for item in items[:index]]
    after = [None if item is TARGET else item for item in items[index + 1:]]
    letters = ground.letters
    n = len(letters)
    follow = _known_run(after)
    precede = _known_run(list(reversed(before)), reverse=True)

    def slice_word(i: int, j: int) -> Word:
        return Word(letters[i:j], ground.alphabet)

    if all(item is not None for item in before):
        prefix = _join(before)
        if letters[:len(prefix)] != prefix:
            return []
        start = len(prefix)
        if all(item is not None for item in after):
            end = n - len(follow)
            if end < start or letters[end:] != follow:
                return []
            return [slice_word(start, end)]
        return [slice_word(start, k) for k in range(start, n - len(follow) + 1)
                if letters[k:k + len(follow)] == follow]
    if all(item is not None for item in after):
        suffix = _join(after)
        end = n - len(suffix)
        if end < 0 or letters[end:] != suffix:
            return []
        return [slice_word(k, end) for k in range(len(precede), end + 1)
                if letters[k - len(precede):k] == precede]
    seen: set[tuple[str, ...]] = set()
    result: list[Word] = []
    for i in range(len(precede), n + 1):
        if letters[i - len(precede):i] != precede:
            continue
        for j in range(i, n - len(follow) + 1):
            if letters[j:j + len(follow)] != follow:
                continue
            factor = letters[i:j]
            if factor not in seen:
                seen.add(factor)
                result.append(Word(factor, ground.alphabet))
    return result


def _join(items: Sequence[Item]) -> tuple[str, ...]:
    letters: tuple[str, ...] = ()
    for item in items:
        assert isinstance(item, Word)
        letters += item.letters
    return letters


def _known_run(items: Sequence[Item], reverse: bool = False) -> tuple[str, ...]:
    """Letters of the known items adjacent to the target, up to the first unknown."""
    run: list[Word] = []
    for item in items:
        if not isinstance(item, Word):
            break
        run.append(item)
    if reverse:
        run.reverse()
    return _join(run)

